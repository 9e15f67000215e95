// SPDX-License-Identifier: Apache-2.0
//
// Benchmark: OpenMP level-parallel tree enumeration against the serial
// recursive reference, with a node-for-node equality check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seqweak/protocol.hpp"

namespace {

template <typename F>
double time_call(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool trees_equal(const seqweak::Tree& a, const seqweak::Tree& b) {
    if (a.levels.size() != b.levels.size()) return false;
    for (std::size_t k = 0; k < a.levels.size(); ++k) {
        if (a.levels[k].size() != b.levels[k].size()) return false;
        for (std::size_t i = 0; i < a.levels[k].size(); ++i) {
            const auto& x = a.levels[k][i];
            const auto& y = b.levels[k][i];
            if (!(x.history.key() == y.history.key() &&
                  x.probability == y.probability &&
                  x.schmidt_theta == y.schmidt_theta &&
                  x.negativity == y.negativity && x.s_max == y.s_max))
                return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int depth = 8;
    double fraction = 0.5;
    int repeats = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--depth" && i + 1 < argc) depth = std::atoi(argv[++i]);
        else if (a == "--fraction" && i + 1 < argc) fraction = std::atof(argv[++i]);
        else if (a == "--repeats" && i + 1 < argc) repeats = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr,
                         "usage: bench_tree [--depth N] [--fraction F] "
                         "[--repeats R]\n");
            return 2;
        }
    }

    const auto schedule = seqweak::MuSchedule::adaptive(fraction);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("depth %d, adaptive fraction %.3g, %d thread(s)\n", depth,
                fraction, threads);

    seqweak::Tree parallel_tree, serial_tree;
    double best_serial = 1e300, best_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        best_serial = std::min(best_serial, time_call([&] {
            serial_tree = seqweak::enumerate_tree_serial(schedule, depth);
        }));
        best_parallel = std::min(best_parallel, time_call([&] {
            parallel_tree = seqweak::enumerate_tree(schedule, depth);
        }));
    }

    std::size_t nodes = 0;
    for (const auto& level : parallel_tree.levels) nodes += level.size();

    std::printf("nodes            %zu\n", nodes);
    std::printf("serial reference %.4f s\n", best_serial);
    std::printf("openmp kernel    %.4f s\n", best_parallel);
    std::printf("speedup          %.2fx\n", best_serial / best_parallel);
    const bool equal = trees_equal(parallel_tree, serial_tree);
    std::printf("outputs identical: %s\n", equal ? "yes" : "NO");
    return equal ? 0 : 1;
}
