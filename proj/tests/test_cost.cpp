// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "seqweak/cost.hpp"

using namespace seqweak;
using std::numbers::pi;

namespace {

const std::vector<double> kPublishedSchedule{pi / 9, pi / 12, pi / 40, pi / 500};

} // namespace

TEST_CASE("comm_cost formula") {
    CHECK(comm_cost(2.0) == doctest::Approx(0.0));
    CHECK(comm_cost(1.3) == doctest::Approx(0.0)); // clipped below the bound
    CHECK(comm_cost(2.0 * std::sqrt(2.0)) ==
          doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
    CHECK(comm_cost(2.1667) == doctest::Approx(0.08335).epsilon(1e-12));
}

TEST_CASE("per-level communication costs of the published run") {
    const Tree tree =
        enumerate_tree(MuSchedule::explicit_list(kPublishedSchedule), 4);
    CHECK(std::abs(level_comm_cost(tree.levels[1]) - 0.08335) < 5e-4);
    CHECK(std::abs(level_comm_cost(tree.levels[2]) - 0.0295) < 5e-4);

    // Synthetic level with s = 2 everywhere costs nothing.
    std::vector<BranchNode> flat = tree.levels[1];
    for (BranchNode& n : flat) n.s_noisy = 2.0;
    CHECK(level_comm_cost(flat) == doctest::Approx(0.0));

    // Incomplete level rejected.
    std::vector<BranchNode> partial(tree.levels[1].begin(),
                                    tree.levels[1].begin() + 3);
    CHECK_THROWS_AS(level_comm_cost(partial), SimError);
    try {
        level_comm_cost(partial);
    } catch (const SimError& e) {
        CHECK(e.code() == SimErrc::incomplete_level);
    }
}

TEST_CASE("communication bound ledger") {
    const CommLedger empty = total_comm_bound_check(
        MuSchedule::explicit_list(kPublishedSchedule), 0);
    CHECK(empty.rows.empty());
    CHECK_FALSE(empty.bound_violated);

    const CommLedger ledger = total_comm_bound_check(
        MuSchedule::explicit_list(kPublishedSchedule), 4);
    REQUIRE(ledger.rows.size() == 4);
    CHECK(ledger.sums_increasing);
    CHECK_FALSE(ledger.bound_violated);
    double prev = 0.0;
    for (const auto& row : ledger.rows) {
        CHECK(row.c_k > 0.0);
        CHECK(row.partial_sum > prev);
        CHECK(row.partial_sum < kCommBound);
        prev = row.partial_sum;
    }

    const CommLedger adaptive =
        total_comm_bound_check(MuSchedule::adaptive(0.9), 6);
    CHECK(adaptive.sums_increasing);
    CHECK_FALSE(adaptive.bound_violated);
    CHECK(adaptive.rows.back().partial_sum < kCommBound);
}

TEST_CASE("telescoping check") {
    const Tree tree =
        enumerate_tree(MuSchedule::explicit_list(kPublishedSchedule), 2);

    // Root family, step 1: lhs = 2 sqrt(2).
    {
        std::span<const BranchNode> family(tree.levels[1].data(), 4);
        const TelescopingResult r =
            telescoping_check(tree.levels[0][0], pi / 9, family);
        CHECK(r.holds);
        CHECK(r.s_max_parent == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
        CHECK(std::abs(r.s_noisy - 2.1667) < 5e-4);
        // All four children share one negativity, so avg smax is theirs.
        CHECK(r.avg_child_s_max ==
              doctest::Approx(horodecki_smax(tree.levels[1][0].state))
                  .epsilon(1e-10));
        CHECK(r.lhs_excess >= r.rhs_excess);
    }

    // Every family in the tree.
    for (const TelescopingResult& r : telescoping_check_all(tree))
        CHECK(r.holds);

    // Noninteractive family: children equal the parent, rhs meets lhs.
    {
        const BranchNode root = BranchNode::root();
        std::vector<BranchNode> children;
        for (MeasChoice c : {MeasChoice::X, MeasChoice::XBar})
            for (int o : {0, 1}) {
                BranchNode child = root;
                child.history = root.history.child(c, o);
                child.probability = 0.25;
                child.mu = pi / 4;
                children.push_back(child);
            }
        const TelescopingResult r = telescoping_check(root, pi / 4, children);
        CHECK(r.holds);
        CHECK(r.s_noisy == doctest::Approx(0.0));
        CHECK(r.rhs_excess ==
              doctest::Approx(r.lhs_excess).epsilon(1e-9)); // equality case
    }

    // Product-state parent: both sides sit at the local bound.
    {
        BranchNode parent;
        parent.state = TwoQubitState({1.0, 0.0, 0.0, 0.0});
        parent.probability = 1.0;
        parent.schmidt_theta = 0.0;
        parent.s_max = 2.0;
        std::vector<BranchNode> children;
        for (MeasChoice c : {MeasChoice::X, MeasChoice::XBar})
            for (int o : {0, 1}) {
                BranchNode child = parent;
                child.history = parent.history.child(c, o);
                child.probability = 0.25;
                children.push_back(child);
            }
        const TelescopingResult r = telescoping_check(parent, 0.1, children);
        CHECK(r.holds);
        CHECK(r.lhs_excess == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(r.rhs_excess == doctest::Approx(0.0).epsilon(1e-9));
    }

    // Incomplete family rejected.
    std::span<const BranchNode> three(tree.levels[1].data(), 3);
    CHECK_THROWS_AS(telescoping_check(tree.levels[0][0], pi / 9, three),
                    SimError);
}

TEST_CASE("erasure ledger") {
    const Tree tree =
        enumerate_tree(MuSchedule::explicit_list(kPublishedSchedule), 2);

    // Enough slots: nothing erased at any level.
    const ErasureLedger roomy = finite_memory_simulate(tree, 16, 300.0);
    REQUIRE(roomy.rows.size() == 3);
    for (const auto& row : roomy.rows) {
        CHECK(row.bits_erased == doctest::Approx(0.0));
        CHECK(row.heat_joules == doctest::Approx(0.0));
    }

    // One slot at level 1: erase the full 2 bits of four equiprobable states.
    const ErasureLedger tight = finite_memory_simulate(tree, 1, 300.0);
    CHECK(tight.rows[1].raw_states == 4);
    CHECK(tight.rows[1].distinct_states == 4);
    CHECK(std::abs(tight.rows[1].entropy_bits - 2.0) < 1e-12);
    CHECK(std::abs(tight.rows[1].bits_erased - 2.0) < 1e-12);
    CHECK(tight.rows[1].distortion > 0.0);
    CHECK(tight.rows[0].bits_erased == doctest::Approx(0.0)); // level 0 fits

    // Landauer arithmetic: heat per bit at 300 K.
    const double per_bit = kBoltzmann * 300.0 * std::numbers::ln2;
    CHECK(std::abs(per_bit - 2.871e-21) < 1e-24);
    CHECK(tight.rows[1].heat_joules ==
          doctest::Approx(tight.rows[1].bits_erased * per_bit));

    // Heat scales linearly with temperature.
    const ErasureLedger hot = finite_memory_simulate(tree, 1, 600.0);
    CHECK(hot.rows[1].heat_joules ==
          doctest::Approx(2.0 * tight.rows[1].heat_joules).epsilon(1e-12));

    // bits_erased non-increasing in m.
    double prev = 1e300;
    for (std::size_t m : {1, 2, 3, 4, 8, 16}) {
        const ErasureLedger led = finite_memory_simulate(tree, m, 300.0);
        CHECK(led.rows[2].bits_erased <= prev + 1e-15);
        prev = led.rows[2].bits_erased;
        if (m >= led.rows[2].distinct_states)
            CHECK(led.rows[2].bits_erased == doctest::Approx(0.0));
    }

    CHECK_THROWS_AS(finite_memory_simulate(tree, 0, 300.0), SimError);
    CHECK_THROWS_AS(finite_memory_simulate(tree, 4, 0.0), SimError);
}

TEST_CASE("branch entropy") {
    const Tree tree =
        enumerate_tree(MuSchedule::explicit_list(kPublishedSchedule), 4);

    const LevelEntropy level0 = branch_entropy(tree.levels[0]);
    CHECK(level0.node_bits == doctest::Approx(0.0));
    CHECK(level0.distinct_state_bits == doctest::Approx(0.0));

    const LevelEntropy level1 = branch_entropy(tree.levels[1]);
    CHECK(std::abs(level1.node_bits - 2.0) < 1e-12);
    CHECK(std::abs(level1.distinct_state_bits - 2.0) < 1e-12);

    // Entropy grows level over level for the published schedule.
    double prev = -1.0;
    for (int k = 0; k <= 4; ++k) {
        const LevelEntropy e = branch_entropy(tree.levels[k]);
        CHECK(e.distinct_state_bits > prev);
        prev = e.distinct_state_bits;
    }
}
