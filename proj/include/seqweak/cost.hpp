// SPDX-License-Identifier: Apache-2.0
//
// Classical-simulation cost accounting: per-step communication cost
// C = S/2 - 1 and its partial sums against the sqrt(2)-1 budget, the
// telescoping Horodecki check, and the finite-memory erasure ledger
// (distinct-state counting, m-slot quantizer, Landauer heat).
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seqweak/protocol.hpp"

namespace seqweak {

inline constexpr double kBoltzmann = 1.380649e-23; // J/K, exact SI value
inline constexpr double kCommBound = 0.41421356237309515; // sqrt(2) - 1 bits

// max(0, s/2 - 1) bits. Values s <= 2 are locally simulable and clip to 0.
double comm_cost(double s);

// Probability-weighted average of comm_cost(s_noisy) over a complete level.
// Throws incomplete_level if the level is not a full sibling set.
double level_comm_cost(const std::vector<BranchNode>& level);

struct CommLedger {
    struct Row {
        int level = 0;
        double c_k = 0.0;
        double partial_sum = 0.0;
    };

    std::vector<Row> rows;
    double bound = kCommBound;
    bool bound_violated = false;   // some partial sum >= bound
    bool sums_increasing = true;   // partial sums strictly increasing
};

CommLedger comm_ledger(const Tree& tree);
CommLedger total_comm_bound_check(const MuSchedule& schedule, int depth,
                                  int depth_cap = kDefaultDepthCap);

// Telescoping check for one parent family (both choices, both outcomes at
// noise mu, weights renormalized within the family):
//
//   cost form:  smax(parent) - 2  >=  excess(S_noisy) + sum_c p_c excess(smax_c)
//   value form: smax(parent) + 2  >=  S_noisy + avg smax_c   (reported only)
//
// with excess(s) = max(0, s - 2) = 2 comm_cost(s). `holds` uses the cost
// form with the telescoping_slack tolerance.
struct TelescopingResult {
    double s_max_parent = 0.0;
    double s_noisy = 0.0;
    double avg_child_s_max = 0.0;
    double lhs_excess = 0.0;
    double rhs_excess = 0.0;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    bool holds = false;
};

TelescopingResult telescoping_check(const BranchNode& parent, double mu,
                                    std::span<const BranchNode> children);

// Runs the check over every parent family of a tree; returns the results in
// canonical parent order (level by level).
std::vector<TelescopingResult> telescoping_check_all(const Tree& tree);

// Erasure ledger for an m-slot classical memory at temperature T. Entropy is
// the Shannon entropy of the branch distribution over distinct Bob states;
// bits_erased = max(0, entropy - log2 m); heat = bits_erased * kB T ln 2.
// Distortion comes from the greedy quantizer that merges the closest pair
// under probability-weighted trace distance until at most m representatives
// remain (model-dependent; see README).
struct ErasureLedger {
    struct Row {
        int level = 0;
        std::size_t raw_states = 0;
        std::size_t distinct_states = 0;
        double entropy_bits = 0.0;
        std::size_t memory_slots = 0;
        double bits_erased = 0.0;
        double heat_joules = 0.0;
        double distortion = 0.0;
    };

    std::vector<Row> rows; // levels 0..K
    double temperature = 300.0;
};

ErasureLedger finite_memory_simulate(const Tree& tree, std::size_t memory_slots,
                                     double temperature);

struct LevelEntropy {
    double node_bits = 0.0;           // entropy of the branch distribution
    double distinct_state_bits = 0.0; // entropy over deduplicated Bob states
};

LevelEntropy branch_entropy(const std::vector<BranchNode>& level);

} // namespace seqweak
