// SPDX-License-Identifier: Apache-2.0
//
// The sequential protocol: at each step Alice picks a measurement (noisy
// sigma_z or noisy sigma_x), applies it to her qubit, Schmidt-canonicalizes
// the postmeasurement state and undoes her local rotation. Full 4^k
// breadth-first tree enumeration (OpenMP kernel plus a serial recursive
// reference kept for testing), seeded Monte Carlo trajectories, schedule
// validation and distinct-state counting.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "seqweak/bell.hpp"
#include "seqweak/linalg.hpp"
#include "seqweak/measurement.hpp"

namespace seqweak {

// Alice's two options: X is the noisy sigma_z measurement (axis (0,0,1)),
// XBar the noisy sigma_x measurement (axis (1,0,0)).
enum class MeasChoice : std::uint8_t { X = 0, XBar = 1 };

BlochVector measurement_axis(MeasChoice choice);

// Ordered list of (choice, outcome) pairs. Canonical encoding packs each
// step as two characters, 'A' (X) or 'B' (XBar) plus the outcome digit, so
// "xbar:1 then x:0" encodes as "B1A0". Lexicographic order on the encoding
// is the canonical per-level order of the branch tree.
class History {
  public:
    History() = default;

    std::size_t depth() const { return key_.size() / 2; }
    const std::string& key() const { return key_; }

    History child(MeasChoice choice, int outcome) const;
    bool operator==(const History& o) const { return key_ == o.key_; }
    bool operator<(const History& o) const { return key_ < o.key_; }

  private:
    std::string key_;
};

// One branch of the tree after step (tb): the canonicalized state plus the
// scalar record Table-style reports need. s_noisy is the CHSH value achieved
// at this step's measurement (parent Schmidt angle, this step's mu, optimal
// Bob angle); it is NaN at the root, where no measurement happened yet.
// negativity carries sin(theta)cos(theta) of the Schmidt form, which resolves
// the weakest branches of deep runs; the partial-transpose negativity()
// agrees within 1e-10 wherever it is resolvable.
struct BranchNode {
    History history;
    TwoQubitState state;
    double probability = 1.0;
    double schmidt_theta = 0.0;
    double negativity = 0.0;
    double s_noisy = 0.0;
    double s_max = 0.0;
    double mu = 0.0; // noise used at this node's step; NaN at the root

    static BranchNode root();
};

// Per-step noise policy. EXPLICIT uses one global mu per level and is what
// reproduces the published four-step run; ADAPTIVE sets mu = fraction * F of
// the branch's own Schmidt angle and is valid to any depth.
struct MuSchedule {
    enum class Mode { Explicit, Adaptive };

    Mode mode = Mode::Explicit;
    std::vector<double> mus; // EXPLICIT: mu per level, 1-based level k -> mus[k-1]
    double fraction = 0.0;   // ADAPTIVE: in (0,1)

    static MuSchedule explicit_list(std::vector<double> mus);
    static MuSchedule adaptive(double fraction);

    // mu for step k given the parent's Schmidt angle. Throws invalid_config
    // when an explicit list is shorter than k.
    double mu_for(int level, double parent_theta) const;
};

inline constexpr int kDefaultDepthCap = 10; // 4^10 ~ 1.05M leaf nodes

// Both children of `parent` under `choice` at noise `mu`, outcome 0 first.
// Throws schedule_violation unless mu lies in (0, F(parent theta)) with the
// schedule_margin exclusion band.
std::array<BranchNode, 2> protocol_step(const BranchNode& parent,
                                        MeasChoice choice, double mu);

// levels[0] = {root}; levels[k] holds the 4^k nodes of step k in canonical
// history order. Output is independent of thread count: every node is a pure
// function of its parent and slots are preassigned.
struct Tree {
    std::vector<std::vector<BranchNode>> levels;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
};

// OpenMP-parallel breadth-first enumeration.
Tree enumerate_tree(const MuSchedule& schedule, int depth,
                    int depth_cap = kDefaultDepthCap);

// Serial recursive reference implementation; emits the same nodes in the
// same order (kept for testing and benchmarking against the parallel kernel).
Tree enumerate_tree_serial(const MuSchedule& schedule, int depth,
                           int depth_cap = kDefaultDepthCap);

struct TrajectoryStep {
    int step = 0; // 1-based
    MeasChoice choice = MeasChoice::X;
    int outcome = 0;
    double mu = 0.0;
    double theta = 0.0;
    double negativity = 0.0;
    double s_noisy = 0.0;
};

// One sampled run of the protocol; identical seed => identical record.
std::vector<TrajectoryStep> sample_trajectory(std::uint64_t seed,
                                              const MuSchedule& schedule,
                                              int depth,
                                              int depth_cap = kDefaultDepthCap);

// Margin report for 0 < mu_k < F(theta^{l_{k-1}}). For adaptive schedules
// mu varies per branch; the report carries the worst (smallest) margin.
struct LevelMargin {
    int level = 0;          // k
    double mu_min = 0.0;    // smallest mu used at this level
    double mu_max = 0.0;    // largest mu used at this level
    double min_bound = 0.0; // min over level k-1 branches of F(theta)
    double margin = 0.0;    // min over branches of F(theta) - mu
    bool valid = false;
};

struct ScheduleReport {
    std::vector<LevelMargin> levels;
    bool valid = false;
};

ScheduleReport validate_schedule(const MuSchedule& schedule, int depth,
                                 int depth_cap = kDefaultDepthCap);

// Bob reduced states of one level clustered by trace distance <= tol.
struct DistinctStates {
    struct Representative {
        Mat2 state;          // first member's reduced state
        BlochVector bloch;
        double probability = 0.0; // aggregated over members
        History first_history;
        std::size_t members = 0;
    };

    std::size_t raw_count = 0;
    std::size_t distinct_count = 0;
    std::vector<Representative> representatives; // canonical order
    std::vector<std::size_t> cluster_index;      // node i -> representative
};

DistinctStates distinct_bob_states(const std::vector<BranchNode>& level,
                                   double tol = kTol.cluster_trace_distance);

} // namespace seqweak
