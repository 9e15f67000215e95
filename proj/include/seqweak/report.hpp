// SPDX-License-Identifier: Apache-2.0
//
// Command layer shared by the CLI and the test suites. Every command is a
// pure function of its RunConfig: identical config (and seed) produces
// byte-identical output regardless of thread count. Reports print 6
// significant digits; csv exports carry full precision.
#pragma once

#include <cstdint>
#include <string>

#include "seqweak/cost.hpp"
#include "seqweak/protocol.hpp"

namespace seqweak {

enum class Command { Table, Tree, Run, Cost, Memory };
enum class OutputFormat { Text, Csv };

struct RunConfig {
    Command command = Command::Table;
    int depth = 0;
    MuSchedule schedule;
    std::uint64_t seed = 0;          // Run only
    std::size_t memory_slots = 1;    // Memory only
    double temperature = 300.0;      // Memory only
    OutputFormat format = OutputFormat::Text;
    int depth_cap = kDefaultDepthCap;
};

// Exit statuses shared with the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;    // validation / schedule failure
inline constexpr int kExitRuntime = 3;   // protocol error while running
inline constexpr int kExitInvariant = 4; // result violates a flagged invariant

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;      // report or export, newline-terminated
    std::string diagnostics; // human-readable error/margin report, may be empty
};

// Validates config (depth cap, schedule shape) and dispatches. Never throws;
// errors are folded into exit_code/diagnostics.
CommandResult run_command(const RunConfig& config);

// Individual commands; these throw SimError on invalid input.
std::string cmd_table(const RunConfig& config);
std::string cmd_tree(const RunConfig& config);
std::string cmd_run(const RunConfig& config);
std::string cmd_cost(const RunConfig& config, bool* bound_violated = nullptr);
std::string cmd_memory(const RunConfig& config);

// Margin report text used when a schedule fails validation.
std::string format_schedule_report(const ScheduleReport& report);

} // namespace seqweak
