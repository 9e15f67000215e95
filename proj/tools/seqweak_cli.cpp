// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands: table, tree, run, cost, memory.
// Exit codes: 0 ok, 2 configuration/schedule error, 3 runtime protocol
// error, 4 result violates a flagged invariant (e.g. communication bound).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "seqweak/angles.hpp"
#include "seqweak/report.hpp"

namespace {

struct CliOptions {
    std::string mu_list;
    double adaptive_fraction = 0.0;
    int depth = -1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t slots = 1;
    double temperature = 300.0;
    std::string format = "text";
    std::string out_path;
};

int emit(const seqweak::CommandResult& result, const std::string& out_path) {
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
    if (!result.output.empty()) {
        if (out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot open output file '" << out_path
                          << "'\n";
                return seqweak::kExitConfig;
            }
            f << result.output;
        }
    }
    return result.exit_code;
}

std::optional<seqweak::RunConfig> build_config(seqweak::Command command,
                                               const CliOptions& opt,
                                               std::string& error) {
    using namespace seqweak;
    RunConfig config;
    config.command = command;
    config.format =
        opt.format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

    try {
        if (!opt.mu_list.empty() && opt.adaptive_fraction > 0.0) {
            error = "choose either --mu or --adaptive-fraction, not both";
            return std::nullopt;
        }
        if (!opt.mu_list.empty()) {
            config.schedule =
                MuSchedule::explicit_list(parse_angle_list(opt.mu_list));
            config.depth = opt.depth >= 0
                               ? opt.depth
                               : static_cast<int>(config.schedule.mus.size());
        } else if (opt.adaptive_fraction > 0.0) {
            config.schedule = MuSchedule::adaptive(opt.adaptive_fraction);
            if (opt.depth < 0) {
                error = "--depth is required with --adaptive-fraction";
                return std::nullopt;
            }
            config.depth = opt.depth;
        } else {
            error = "a schedule is required: --mu LIST or --adaptive-fraction F";
            return std::nullopt;
        }
    } catch (const SimError& e) {
        error = e.what();
        return std::nullopt;
    }

    config.seed = opt.seed;
    config.memory_slots = opt.slots;
    config.temperature = opt.temperature;
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential weak-measurement protocol simulator"};
    app.require_subcommand(1);

    CliOptions opt;

    auto add_common = [&](CLI::App* sub, bool needs_seed) {
        sub->add_option("--mu", opt.mu_list,
                        "comma-separated noise schedule; angles accept "
                        "pi-fractions (pi/9) or decimals");
        sub->add_option("--adaptive-fraction", opt.adaptive_fraction,
                        "per-branch mu = fraction * F(theta), fraction in (0,1)");
        sub->add_option("--depth", opt.depth,
                        "number of time steps (defaults to the --mu length)");
        sub->add_option("--format", opt.format, "text or csv")
            ->check(CLI::IsMember({"text", "csv"}));
        sub->add_option("--out", opt.out_path,
                        "output file (defaults to stdout)");
        if (needs_seed)
            sub->add_option("--seed", opt.seed, "trajectory seed")
                ->required();
    };

    CLI::App* table = app.add_subcommand(
        "table", "per-step counts, negativities and CHSH values");
    add_common(table, false);

    CLI::App* tree =
        app.add_subcommand("tree", "export every branch of the state tree");
    add_common(tree, false);

    CLI::App* run =
        app.add_subcommand("run", "sample one seeded protocol trajectory");
    add_common(run, true);

    CLI::App* cost = app.add_subcommand(
        "cost", "per-step communication cost against the sqrt(2)-1 bound");
    add_common(cost, false);

    CLI::App* memory = app.add_subcommand(
        "memory", "finite-memory erasure ledger (Landauer accounting)");
    add_common(memory, false);
    memory->add_option("--slots", opt.slots, "classical memory slots m")
        ->required();
    memory->add_option("--temperature", opt.temperature,
                       "temperature in kelvin (default 300)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : seqweak::kExitConfig;
    }

    seqweak::Command command;
    if (table->parsed()) command = seqweak::Command::Table;
    else if (tree->parsed()) command = seqweak::Command::Tree;
    else if (run->parsed()) command = seqweak::Command::Run;
    else if (cost->parsed()) command = seqweak::Command::Cost;
    else command = seqweak::Command::Memory;

    std::string error;
    const auto config = build_config(command, opt, error);
    if (!config) {
        std::cerr << "error: " << error << "\n";
        return seqweak::kExitConfig;
    }

    return emit(seqweak::run_command(*config), opt.out_path);
}
