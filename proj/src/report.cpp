// SPDX-License-Identifier: Apache-2.0

#include "seqweak/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace seqweak {

namespace {

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// Reports carry 6 significant digits; csv exports carry full precision.
std::string f6(double v) { return fmt(v, "%.6g"); }
std::string f17(double v) { return fmt(v, "%.17g"); }

std::string format_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size())
                out.append(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string format_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out += ',';
        }
        out += '\n';
    }
    return out;
}

struct LevelSummary {
    double neg_min, neg_max, s_min, s_max;
};

LevelSummary summarize_level(const std::vector<BranchNode>& level) {
    LevelSummary s{std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()};
    for (const BranchNode& n : level) {
        s.neg_min = std::min(s.neg_min, n.negativity);
        s.neg_max = std::max(s.neg_max, n.negativity);
        s.s_min = std::min(s.s_min, n.s_noisy);
        s.s_max = std::max(s.s_max, n.s_noisy);
    }
    return s;
}

} // namespace

std::string format_schedule_report(const ScheduleReport& report) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"level", "mu_min", "mu_max", "min_F", "margin", "valid"});
    for (const LevelMargin& lm : report.levels)
        rows.push_back({std::to_string(lm.level), f6(lm.mu_min), f6(lm.mu_max),
                        f6(lm.min_bound), f6(lm.margin),
                        lm.valid ? "yes" : "NO"});
    std::string out = "schedule validation: ";
    out += report.valid ? "valid\n" : "INVALID\n";
    out += format_aligned(rows);
    return out;
}

std::string cmd_table(const RunConfig& config) {
    if (config.schedule.mode != MuSchedule::Mode::Explicit)
        throw SimError(SimErrc::invalid_config,
                       "table requires an explicit mu schedule");
    const ScheduleReport sr =
        validate_schedule(config.schedule, config.depth, config.depth_cap);
    if (!sr.valid)
        throw SimError(SimErrc::schedule_violation,
                       format_schedule_report(sr));

    const Tree tree =
        enumerate_tree(config.schedule, config.depth, config.depth_cap);
    const bool csv = config.format == OutputFormat::Csv;
    auto num = [&](double v) { return csv ? f17(v) : f6(v); };
    const std::string none = csv ? "" : "-";

    std::vector<std::vector<std::string>> rows;
    rows.push_back(csv ? std::vector<std::string>{"level", "mu", "states",
                                                  "distinct", "neg_min",
                                                  "neg_max", "s_min", "s_max"}
                       : std::vector<std::string>{"t", "mu", "states",
                                                  "distinct", "neg_min",
                                                  "neg_max", "s_min", "s_max"});
    for (int k = 0; k <= tree.depth(); ++k) {
        const auto& level = tree.levels[k];
        const DistinctStates ds = distinct_bob_states(level);
        const LevelSummary s = summarize_level(level);
        std::vector<std::string> row;
        row.push_back(csv ? std::to_string(k) : "t" + std::to_string(k));
        row.push_back(k == 0 ? none : num(level[0].mu));
        row.push_back(std::to_string(ds.raw_count));
        row.push_back(std::to_string(ds.distinct_count));
        row.push_back(num(s.neg_min));
        row.push_back(num(s.neg_max));
        row.push_back(k == 0 ? none : num(s.s_min));
        row.push_back(k == 0 ? none : num(s.s_max));
        rows.push_back(std::move(row));
    }
    return csv ? format_csv(rows) : format_aligned(rows);
}

std::string cmd_tree(const RunConfig& config) {
    const Tree tree =
        enumerate_tree(config.schedule, config.depth, config.depth_cap);
    const bool csv = config.format == OutputFormat::Csv;
    auto num = [&](double v) { return csv ? f17(v) : f6(v); };
    const std::string none = csv ? "" : "-";

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"history", "probability", "theta", "negativity", "s_noisy",
                    "s_max", "bob_x", "bob_y", "bob_z"});
    for (const auto& level : tree.levels) {
        for (const BranchNode& n : level) {
            const BlochVector bob =
                bloch_of_density(reduced_state(n.state, Side::B));
            std::vector<std::string> row;
            row.push_back(n.history.key().empty() ? (csv ? "" : "-")
                                                  : n.history.key());
            row.push_back(num(n.probability));
            row.push_back(num(n.schmidt_theta));
            row.push_back(num(n.negativity));
            row.push_back(n.history.depth() == 0 ? none : num(n.s_noisy));
            row.push_back(num(n.s_max));
            row.push_back(num(bob.x));
            row.push_back(num(bob.y));
            row.push_back(num(bob.z));
            rows.push_back(std::move(row));
        }
    }
    return csv ? format_csv(rows) : format_aligned(rows);
}

std::string cmd_run(const RunConfig& config) {
    const auto steps = sample_trajectory(config.seed, config.schedule,
                                         config.depth, config.depth_cap);
    const bool csv = config.format == OutputFormat::Csv;
    auto num = [&](double v) { return csv ? f17(v) : f6(v); };

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"step", "choice", "outcome", "mu", "theta", "negativity",
                    "s_noisy"});
    for (const TrajectoryStep& s : steps) {
        rows.push_back({std::to_string(s.step),
                        s.choice == MeasChoice::X ? "x" : "xbar",
                        std::to_string(s.outcome), num(s.mu), num(s.theta),
                        num(s.negativity), num(s.s_noisy)});
    }
    return csv ? format_csv(rows) : format_aligned(rows);
}

namespace {

// Shared ledger row schema: {k, c_k, partial_sum, distinct_states,
// entropy_bits, bits_erased, heat_joules, distortion}. `cost` leaves the
// memory-model columns empty; `memory` fills everything.
std::string format_ledger(const Tree& tree, const CommLedger& comm,
                          const ErasureLedger* erasure, OutputFormat format,
                          const std::string& preamble) {
    const bool csv = format == OutputFormat::Csv;
    auto num = [&](double v) { return csv ? f17(v) : f6(v); };
    const std::string none = csv ? "" : "-";

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"level", "c_k", "partial_sum", "distinct_states",
                    "entropy_bits", "bits_erased", "heat_joules",
                    "distortion"});

    const int first_level = erasure ? 0 : 1;
    for (int k = first_level; k <= tree.depth(); ++k) {
        std::vector<std::string> row;
        row.push_back(std::to_string(k));
        if (k >= 1) {
            const auto& cr = comm.rows[k - 1];
            row.push_back(num(cr.c_k));
            row.push_back(num(cr.partial_sum));
        } else {
            row.push_back(none);
            row.push_back(none);
        }
        if (erasure) {
            const auto& er = erasure->rows[k];
            row.push_back(std::to_string(er.distinct_states));
            row.push_back(num(er.entropy_bits));
            row.push_back(num(er.bits_erased));
            row.push_back(num(er.heat_joules));
            row.push_back(num(er.distortion));
        } else {
            const DistinctStates ds = distinct_bob_states(tree.levels[k]);
            const LevelEntropy e = branch_entropy(tree.levels[k]);
            row.push_back(std::to_string(ds.distinct_count));
            row.push_back(num(e.distinct_state_bits));
            row.push_back(none);
            row.push_back(none);
            row.push_back(none);
        }
        rows.push_back(std::move(row));
    }

    std::string out;
    if (!csv && !preamble.empty()) out += preamble;
    out += csv ? format_csv(rows) : format_aligned(rows);
    return out;
}

} // namespace

std::string cmd_cost(const RunConfig& config, bool* bound_violated) {
    const Tree tree =
        enumerate_tree(config.schedule, config.depth, config.depth_cap);
    const CommLedger comm = comm_ledger(tree);
    if (bound_violated) *bound_violated = comm.bound_violated;

    std::string preamble = "# communication bound sqrt(2)-1 = " +
                           f6(comm.bound) + " bits; status: " +
                           (comm.bound_violated ? "VIOLATED" : "ok") + "\n";
    return format_ledger(tree, comm, nullptr, config.format, preamble);
}

std::string cmd_memory(const RunConfig& config) {
    const Tree tree =
        enumerate_tree(config.schedule, config.depth, config.depth_cap);
    const CommLedger comm = comm_ledger(tree);
    const ErasureLedger erasure =
        finite_memory_simulate(tree, config.memory_slots, config.temperature);

    std::string preamble = "# memory slots m = " +
                           std::to_string(config.memory_slots) +
                           ", temperature = " + f6(config.temperature) +
                           " K\n";
    return format_ledger(tree, comm, &erasure, config.format, preamble);
}

CommandResult run_command(const RunConfig& config) {
    CommandResult result;
    try {
        switch (config.command) {
            case Command::Table:
                result.output = cmd_table(config);
                break;
            case Command::Tree:
                result.output = cmd_tree(config);
                break;
            case Command::Run:
                result.output = cmd_run(config);
                break;
            case Command::Cost: {
                bool violated = false;
                result.output = cmd_cost(config, &violated);
                if (violated) {
                    result.exit_code = kExitInvariant;
                    result.diagnostics = "communication bound violated\n";
                }
                break;
            }
            case Command::Memory:
                result.output = cmd_memory(config);
                break;
        }
    } catch (const SimError& e) {
        switch (e.code()) {
            case SimErrc::invalid_config:
            case SimErrc::schedule_violation:
                result.exit_code = kExitConfig;
                break;
            default:
                result.exit_code = kExitRuntime;
                break;
        }
        result.diagnostics = std::string("error [") + to_string(e.code()) +
                             "]: " + e.what();
        if (!e.history().empty())
            result.diagnostics += " (history " + e.history() + ")";
        result.diagnostics += "\n";
    }
    return result;
}

} // namespace seqweak
