// SPDX-License-Identifier: Apache-2.0

#include "seqweak/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "seqweak/rng.hpp"

namespace seqweak {

BlochVector measurement_axis(MeasChoice choice) {
    return choice == MeasChoice::X ? BlochVector{0.0, 0.0, 1.0}
                                   : BlochVector{1.0, 0.0, 0.0};
}

History History::child(MeasChoice choice, int outcome) const {
    History h;
    h.key_ = key_;
    h.key_.push_back(choice == MeasChoice::X ? 'A' : 'B');
    h.key_.push_back(outcome == 0 ? '0' : '1');
    return h;
}

BranchNode BranchNode::root() {
    BranchNode n;
    n.state = TwoQubitState::max_entangled();
    n.probability = 1.0;
    n.schmidt_theta = std::atan(1.0); // pi/4
    n.negativity = std::sin(n.schmidt_theta) * std::cos(n.schmidt_theta);
    n.s_noisy = std::numeric_limits<double>::quiet_NaN();
    n.s_max = horodecki_smax(n.state);
    n.mu = std::numeric_limits<double>::quiet_NaN();
    return n;
}

MuSchedule MuSchedule::explicit_list(std::vector<double> mus) {
    MuSchedule s;
    s.mode = Mode::Explicit;
    s.mus = std::move(mus);
    return s;
}

MuSchedule MuSchedule::adaptive(double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw SimError(SimErrc::invalid_config,
                       "adaptive fraction must lie in (0, 1)");
    MuSchedule s;
    s.mode = Mode::Adaptive;
    s.fraction = fraction;
    return s;
}

double MuSchedule::mu_for(int level, double parent_theta) const {
    if (mode == Mode::Explicit) {
        if (level < 1 || static_cast<std::size_t>(level) > mus.size())
            throw SimError(SimErrc::invalid_config,
                           "explicit schedule has no mu for level " +
                               std::to_string(level));
        return mus[level - 1];
    }
    return fraction * noise_bound(parent_theta);
}

namespace {

// Each input draw has weight 1/2: Alice's choice is a uniform bit.
constexpr double kInputWeight = 0.5;

const MeasChoice kChoices[2] = {MeasChoice::X, MeasChoice::XBar};

// Strict 0 < mu < F with a relative exclusion band at the top so that a mu
// sitting on the bound up to rounding (pi/8 against F(pi/4)) is rejected
// deterministically. The band must be relative: deep adaptive schedules use
// legitimate mu many orders of magnitude below 1.
bool mu_in_bound(double mu, double bound) {
    return mu > 0.0 && mu < bound * (1.0 - kTol.schedule_margin);
}

// Child node under (choice, outcome) at noise mu. Pure function of the
// parent; every enumeration order computes identical bits.
//
// The branch threshold is 0 here, not the public 1e-12 default: valid
// schedules drive the weakest branch's outcome probabilities below any fixed
// floor after a few steps (the Schmidt angle contracts at least
// quadratically per step), and those branches are still physical. Only a
// probability that underflows to exactly 0 is impossible.
BranchNode make_child(const BranchNode& parent, MeasChoice choice, int outcome,
                      double mu) {
    const WeakMeasurement m{measurement_axis(choice), mu};
    const auto [p0, p1] = outcome_probabilities(parent.state, m);
    const double p_outcome = outcome == 0 ? p0 : p1;

    const TwoQubitState post =
        post_measurement_state(parent.state, m, outcome, 0.0);
    const SchmidtForm sf = schmidt_decompose(post);
    const TwoQubitState canon =
        apply_local_unitary(post, adjoint(sf.u_a), Side::A);

    BranchNode child;
    child.history = parent.history.child(choice, outcome);
    child.state = canon;
    child.probability = parent.probability * kInputWeight * p_outcome;
    child.schmidt_theta = sf.theta;
    child.negativity = std::sin(sf.theta) * std::cos(sf.theta);
    // Below the resolvable range of the amplitude-matrix determinant the
    // Schmidt product follows an exact multiplicative recurrence instead:
    // every Kraus operator of this family has |det K| = cos(mu) sin(mu), so
    // sin(2 theta') = sin(2 mu) sin(2 theta) / (2 p). Long runs contract the
    // weakest branch at least quadratically per step, and without this the
    // recorded angle degenerates to rounding noise (eventually exactly 0).
    if (sf.theta < 1e-6) {
        const double sin2 = std::min(
            1.0, std::sin(2.0 * mu) * std::sin(2.0 * parent.schmidt_theta) /
                     (2.0 * p_outcome));
        child.schmidt_theta = 0.5 * std::asin(sin2);
        child.negativity = 0.5 * sin2;
    }
    child.s_noisy = chsh_in_plane(
        {parent.schmidt_theta, mu, optimal_bob_angle(parent.schmidt_theta)});
    child.s_max = horodecki_smax(canon);
    child.mu = mu;
    return child;
}

void check_depth(int depth, int depth_cap) {
    if (depth < 0)
        throw SimError(SimErrc::invalid_config, "depth must be >= 0");
    if (depth > depth_cap)
        throw SimError(SimErrc::invalid_config,
                       "depth " + std::to_string(depth) +
                           " exceeds the configured cap " +
                           std::to_string(depth_cap));
}

void check_explicit_length(const MuSchedule& schedule, int depth) {
    if (schedule.mode == MuSchedule::Mode::Explicit &&
        schedule.mus.size() < static_cast<std::size_t>(depth))
        throw SimError(SimErrc::invalid_config,
                       "explicit schedule shorter than requested depth");
}

} // namespace

std::array<BranchNode, 2> protocol_step(const BranchNode& parent,
                                        MeasChoice choice, double mu) {
    const double bound = noise_bound(parent.schmidt_theta);
    if (!mu_in_bound(mu, bound))
        throw SimError(SimErrc::schedule_violation,
                       "mu = " + std::to_string(mu) +
                           " outside (0, F = " + std::to_string(bound) + ")",
                       parent.history.key());
    return {make_child(parent, choice, 0, mu), make_child(parent, choice, 1, mu)};
}

Tree enumerate_tree(const MuSchedule& schedule, int depth, int depth_cap) {
    check_depth(depth, depth_cap);
    check_explicit_length(schedule, depth);

    Tree tree;
    tree.levels.resize(depth + 1);
    tree.levels[0] = {BranchNode::root()};

    for (int k = 1; k <= depth; ++k) {
        const auto& parents = tree.levels[k - 1];
        auto& next = tree.levels[k];
        next.resize(parents.size() * 4);
        std::vector<std::uint8_t> failed(parents.size(), 0);

        // Disjoint subtrees expand concurrently; slot 4i+j of the next level
        // belongs to parent i, so the canonical order never depends on the
        // thread count. Exceptions stay inside the loop body.
        const std::int64_t n = static_cast<std::int64_t>(parents.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                const BranchNode& parent = parents[i];
                const double mu = schedule.mu_for(k, parent.schmidt_theta);
                const double bound = noise_bound(parent.schmidt_theta);
                if (!mu_in_bound(mu, bound)) {
                    failed[i] = 1;
                    continue;
                }
                for (int c = 0; c < 2; ++c)
                    for (int o = 0; o < 2; ++o)
                        next[4 * i + 2 * c + o] =
                            make_child(parent, kChoices[c], o, mu);
            } catch (const SimError&) {
                failed[i] = 2;
            }
        }

        for (std::int64_t i = 0; i < n; ++i) {
            if (failed[i] == 1)
                throw SimError(SimErrc::schedule_violation,
                               "mu outside (0, F) at level " +
                                   std::to_string(k),
                               parents[i].history.key());
            if (failed[i] == 2)
                throw SimError(SimErrc::degenerate_branch,
                               "step failed at level " + std::to_string(k),
                               parents[i].history.key());
        }
    }
    return tree;
}

namespace {

void expand_depth_first(const BranchNode& node, int k, int depth,
                        const MuSchedule& schedule, Tree& tree) {
    if (k > depth) return;
    const double mu = schedule.mu_for(k, node.schmidt_theta);
    const auto x_children = protocol_step(node, MeasChoice::X, mu);
    const auto xbar_children = protocol_step(node, MeasChoice::XBar, mu);
    for (const BranchNode& child :
         {x_children[0], x_children[1], xbar_children[0], xbar_children[1]}) {
        tree.levels[k].push_back(child);
        expand_depth_first(child, k + 1, depth, schedule, tree);
    }
}

} // namespace

Tree enumerate_tree_serial(const MuSchedule& schedule, int depth,
                           int depth_cap) {
    check_depth(depth, depth_cap);
    check_explicit_length(schedule, depth);

    Tree tree;
    tree.levels.resize(depth + 1);
    tree.levels[0] = {BranchNode::root()};
    std::size_t count = 1;
    for (int k = 1; k <= depth; ++k) {
        count *= 4;
        tree.levels[k].reserve(count);
    }
    expand_depth_first(tree.levels[0][0], 1, depth, schedule, tree);
    return tree;
}

std::vector<TrajectoryStep> sample_trajectory(std::uint64_t seed,
                                              const MuSchedule& schedule,
                                              int depth, int depth_cap) {
    check_depth(depth, depth_cap);
    check_explicit_length(schedule, depth);

    TrajectoryRng rng(seed);
    BranchNode node = BranchNode::root();
    std::vector<TrajectoryStep> steps;
    steps.reserve(depth);

    for (int k = 1; k <= depth; ++k) {
        const MeasChoice choice = kChoices[rng.choice_bit()];
        const double mu = schedule.mu_for(k, node.schmidt_theta);
        const double bound = noise_bound(node.schmidt_theta);
        if (!mu_in_bound(mu, bound))
            throw SimError(SimErrc::schedule_violation,
                           "mu outside (0, F) at step " + std::to_string(k),
                           node.history.key());
        const WeakMeasurement m{measurement_axis(choice), mu};
        const auto [p0, p1] = outcome_probabilities(node.state, m);
        const int outcome = rng.uniform() < p0 ? 0 : 1;
        node = make_child(node, choice, outcome, mu);
        steps.push_back({k, choice, outcome, mu, node.schmidt_theta,
                         node.negativity, node.s_noisy});
    }
    return steps;
}

ScheduleReport validate_schedule(const MuSchedule& schedule, int depth,
                                 int depth_cap) {
    check_depth(depth, depth_cap);
    check_explicit_length(schedule, depth);

    ScheduleReport report;
    report.valid = true;

    // Dry enumeration: expand with the schedule's mu values even where they
    // break the bound, so every level gets a margin row. Stops early only if
    // a branch degenerates outright.
    std::vector<BranchNode> parents = {BranchNode::root()};
    for (int k = 1; k <= depth; ++k) {
        LevelMargin lm;
        lm.level = k;
        lm.mu_min = std::numeric_limits<double>::infinity();
        lm.mu_max = 0.0;
        lm.min_bound = std::numeric_limits<double>::infinity();
        lm.margin = std::numeric_limits<double>::infinity();

        std::vector<BranchNode> next;
        next.reserve(parents.size() * 4);
        bool degenerate = false;
        for (const BranchNode& parent : parents) {
            try {
                const double mu = schedule.mu_for(k, parent.schmidt_theta);
                const double bound = noise_bound(parent.schmidt_theta);
                lm.mu_min = std::min(lm.mu_min, mu);
                lm.mu_max = std::max(lm.mu_max, mu);
                lm.min_bound = std::min(lm.min_bound, bound);
                lm.margin = std::min(lm.margin, bound - mu);
                for (int c = 0; c < 2 && !degenerate; ++c)
                    for (int o = 0; o < 2 && !degenerate; ++o)
                        next.push_back(make_child(parent, kChoices[c], o, mu));
            } catch (const SimError&) {
                degenerate = true;
            }
        }

        lm.valid = !degenerate && lm.mu_min > 0.0 &&
                   lm.margin > kTol.schedule_margin * lm.min_bound;
        report.valid = report.valid && lm.valid;
        report.levels.push_back(lm);
        if (degenerate) {
            report.valid = false;
            break;
        }
        parents = std::move(next);
    }
    return report;
}

DistinctStates distinct_bob_states(const std::vector<BranchNode>& level,
                                   double tol) {
    if (tol <= 0.0)
        throw SimError(SimErrc::invalid_config, "cluster tolerance must be > 0");

    const std::size_t n = level.size();
    DistinctStates out;
    out.raw_count = n;
    if (n == 0) return out;

    std::vector<Mat2> rho(n);
    std::vector<BlochVector> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        rho[i] = reduced_state(level[i].state, Side::B);
        r[i] = bloch_of_density(rho[i]);
    }

    // Trace distance between qubit states is half the Euclidean distance of
    // their Bloch vectors; cluster via union-find over a sorted x-window.
    const double d = 2.0 * tol;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return r[a].x < r[b].x; });

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (std::size_t oi = 0; oi < n; ++oi) {
        for (std::size_t oj = oi + 1; oj < n; ++oj) {
            const std::size_t i = order[oi], j = order[oj];
            if (r[j].x - r[i].x > d) break;
            const double dx = r[i].x - r[j].x;
            const double dy = r[i].y - r[j].y;
            const double dz = r[i].z - r[j].z;
            if (std::sqrt(dx * dx + dy * dy + dz * dz) <= d) unite(i, j);
        }
    }

    // Cluster roots are the smallest member index, which is also the
    // canonical-history minimum since levels are canonically ordered.
    std::vector<std::size_t> root_of(n);
    for (std::size_t i = 0; i < n; ++i) root_of[i] = find(i);

    std::vector<std::size_t> rep_index(n, SIZE_MAX);
    out.cluster_index.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = root_of[i];
        if (rep_index[root] == SIZE_MAX) {
            rep_index[root] = out.representatives.size();
            DistinctStates::Representative rep;
            rep.state = rho[root];
            rep.bloch = r[root];
            rep.first_history = level[root].history;
            out.representatives.push_back(rep);
        }
        auto& rep = out.representatives[rep_index[root]];
        rep.probability += level[i].probability;
        rep.members += 1;
        out.cluster_index[i] = rep_index[root];
    }
    out.distinct_count = out.representatives.size();
    return out;
}

} // namespace seqweak
