// SPDX-License-Identifier: Apache-2.0

#include "seqweak/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace seqweak {

double comm_cost(double s) { return std::max(0.0, 0.5 * s - 1.0); }

namespace {

// max(0, s - 2): the excess over the local bound, = 2 * comm_cost(s).
double excess(double s) { return 2.0 * comm_cost(s); }

void check_complete_level(const std::vector<BranchNode>& level) {
    if (level.empty())
        throw SimError(SimErrc::incomplete_level, "empty level");
    const std::size_t k = level[0].history.depth();
    std::size_t want = 1;
    for (std::size_t i = 0; i < k; ++i) want *= 4;
    if (level.size() != want)
        throw SimError(SimErrc::incomplete_level,
                       "level " + std::to_string(k) + " has " +
                           std::to_string(level.size()) + " nodes, expected " +
                           std::to_string(want));
    double p = 0.0;
    for (const BranchNode& n : level) {
        if (n.history.depth() != k)
            throw SimError(SimErrc::incomplete_level,
                           "mixed history depths within one level");
        p += n.probability;
    }
    if (std::abs(p - 1.0) > kTol.level_probability)
        throw SimError(SimErrc::incomplete_level,
                       "level probabilities sum to " + std::to_string(p));
}

double shannon_bits(const std::vector<double>& probabilities) {
    double h = 0.0;
    for (double p : probabilities)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

} // namespace

double level_comm_cost(const std::vector<BranchNode>& level) {
    check_complete_level(level);
    double c = 0.0;
    for (const BranchNode& n : level) c += n.probability * comm_cost(n.s_noisy);
    return c;
}

CommLedger comm_ledger(const Tree& tree) {
    CommLedger ledger;
    double sum = 0.0;
    double prev = 0.0;
    for (int k = 1; k <= tree.depth(); ++k) {
        const double c_k = level_comm_cost(tree.levels[k]);
        sum += c_k;
        ledger.rows.push_back({k, c_k, sum});
        if (sum >= ledger.bound) ledger.bound_violated = true;
        if (k > 1 && sum <= prev) ledger.sums_increasing = false;
        prev = sum;
    }
    return ledger;
}

CommLedger total_comm_bound_check(const MuSchedule& schedule, int depth,
                                  int depth_cap) {
    return comm_ledger(enumerate_tree(schedule, depth, depth_cap));
}

TelescopingResult telescoping_check(const BranchNode& parent, double mu,
                                    std::span<const BranchNode> children) {
    if (children.size() != 4)
        throw SimError(SimErrc::incomplete_level,
                       "telescoping family needs exactly 4 children");
    double family_p = 0.0;
    for (const BranchNode& c : children) {
        if (!(c.history.depth() == parent.history.depth() + 1))
            throw SimError(SimErrc::incomplete_level,
                           "child depth does not extend the parent");
        family_p += c.probability;
    }
    if (!(family_p > 0.0))
        throw SimError(SimErrc::incomplete_level,
                       "family has zero total probability");

    TelescopingResult r;
    r.s_max_parent = horodecki_smax(parent.state);
    r.s_noisy = chsh_optimal(parent.schmidt_theta, mu);
    for (const BranchNode& c : children) {
        const double w = c.probability / family_p;
        r.avg_child_s_max += w * horodecki_smax(c.state);
    }
    r.lhs_excess = r.s_max_parent - 2.0;
    r.rhs_excess = excess(r.s_noisy);
    for (const BranchNode& c : children) {
        const double w = c.probability / family_p;
        r.rhs_excess += w * excess(horodecki_smax(c.state));
    }
    r.lhs_value = r.s_max_parent + 2.0;
    r.rhs_value = r.s_noisy + r.avg_child_s_max;
    r.holds = r.lhs_excess >= r.rhs_excess - kTol.telescoping_slack;
    return r;
}

std::vector<TelescopingResult> telescoping_check_all(const Tree& tree) {
    std::vector<TelescopingResult> results;
    for (int k = 0; k + 1 <= tree.depth(); ++k) {
        const auto& parents = tree.levels[k];
        const auto& children = tree.levels[k + 1];
        for (std::size_t i = 0; i < parents.size(); ++i) {
            std::span<const BranchNode> family(children.data() + 4 * i, 4);
            results.push_back(
                telescoping_check(parents[i], family[0].mu, family));
        }
    }
    return results;
}

// --------------------------------------------------------------------------
// Finite-memory model: greedy quantizer over Bloch-space clusters.

namespace {

struct Cluster {
    BlochVector centroid;
    double probability = 0.0;
    std::string first_history;
    std::vector<std::size_t> members; // node indices
    bool alive = true;
};

double bloch_dist(const BlochVector& a, const BlochVector& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Merge cost: the increase in probability-weighted distortion when the pair
// collapses to its weighted centroid.
double merge_cost(const Cluster& a, const Cluster& b) {
    const double w = a.probability * b.probability /
                     (a.probability + b.probability);
    return w * 0.5 * bloch_dist(a.centroid, b.centroid);
}

bool pair_less(const Cluster& ai, const Cluster& aj, double wij,
               const Cluster& bi, const Cluster& bj, double wkl) {
    if (wij != wkl) return wij < wkl;
    if (ai.first_history != bi.first_history)
        return ai.first_history < bi.first_history;
    return aj.first_history < bj.first_history;
}

} // namespace

ErasureLedger finite_memory_simulate(const Tree& tree,
                                     std::size_t memory_slots,
                                     double temperature) {
    if (memory_slots < 1)
        throw SimError(SimErrc::invalid_config, "memory slots must be >= 1");
    if (!(temperature > 0.0))
        throw SimError(SimErrc::invalid_config, "temperature must be > 0");

    ErasureLedger ledger;
    ledger.temperature = temperature;
    const double heat_per_bit = kBoltzmann * temperature * std::numbers::ln2;

    for (int k = 0; k <= tree.depth(); ++k) {
        const auto& level = tree.levels[k];
        const DistinctStates ds = distinct_bob_states(level);

        ErasureLedger::Row row;
        row.level = k;
        row.raw_states = ds.raw_count;
        row.distinct_states = ds.distinct_count;
        row.memory_slots = memory_slots;

        std::vector<double> probs;
        probs.reserve(ds.representatives.size());
        for (const auto& rep : ds.representatives)
            probs.push_back(rep.probability);
        row.entropy_bits = shannon_bits(probs);
        row.bits_erased = std::max(
            0.0, row.entropy_bits - std::log2(static_cast<double>(memory_slots)));
        row.heat_joules = row.bits_erased * heat_per_bit;

        // Quantize to at most m representatives and tally the distortion of
        // every true state against its representative.
        std::vector<Cluster> clusters;
        std::vector<std::size_t> cluster_of = ds.cluster_index;
        {
            std::vector<BlochVector> node_bloch(level.size());
            for (std::size_t i = 0; i < level.size(); ++i)
                node_bloch[i] =
                    bloch_of_density(reduced_state(level[i].state, Side::B));

            clusters.resize(ds.representatives.size());
            for (std::size_t rj = 0; rj < ds.representatives.size(); ++rj) {
                clusters[rj].centroid = {0.0, 0.0, 0.0};
                clusters[rj].probability = 0.0;
                clusters[rj].first_history =
                    ds.representatives[rj].first_history.key();
            }
            for (std::size_t i = 0; i < level.size(); ++i) {
                Cluster& c = clusters[cluster_of[i]];
                const double p = level[i].probability;
                c.centroid.x += p * node_bloch[i].x;
                c.centroid.y += p * node_bloch[i].y;
                c.centroid.z += p * node_bloch[i].z;
                c.probability += p;
                c.members.push_back(i);
            }
            for (Cluster& c : clusters)
                if (c.probability > 0.0) {
                    c.centroid.x /= c.probability;
                    c.centroid.y /= c.probability;
                    c.centroid.z /= c.probability;
                }

            std::size_t alive = clusters.size();
            while (alive > memory_slots) {
                std::size_t bi = SIZE_MAX, bj = SIZE_MAX;
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < clusters.size(); ++i) {
                    if (!clusters[i].alive) continue;
                    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                        if (!clusters[j].alive) continue;
                        const double w = merge_cost(clusters[i], clusters[j]);
                        if (bi == SIZE_MAX ||
                            pair_less(clusters[i], clusters[j], w,
                                      clusters[bi], clusters[bj], best)) {
                            bi = i;
                            bj = j;
                            best = w;
                        }
                    }
                }
                Cluster& a = clusters[bi];
                Cluster& b = clusters[bj];
                const double pt = a.probability + b.probability;
                a.centroid.x =
                    (a.probability * a.centroid.x + b.probability * b.centroid.x) / pt;
                a.centroid.y =
                    (a.probability * a.centroid.y + b.probability * b.centroid.y) / pt;
                a.centroid.z =
                    (a.probability * a.centroid.z + b.probability * b.centroid.z) / pt;
                a.probability = pt;
                a.first_history = std::min(a.first_history, b.first_history);
                for (std::size_t idx : b.members) {
                    cluster_of[idx] = bi;
                    a.members.push_back(idx);
                }
                b.alive = false;
                b.members.clear();
                --alive;
            }

            double distortion = 0.0;
            for (std::size_t i = 0; i < level.size(); ++i) {
                const Cluster& c = clusters[cluster_of[i]];
                distortion += level[i].probability * 0.5 *
                              bloch_dist(node_bloch[i], c.centroid);
            }
            row.distortion = distortion;
        }

        ledger.rows.push_back(row);
    }
    return ledger;
}

LevelEntropy branch_entropy(const std::vector<BranchNode>& level) {
    check_complete_level(level);
    LevelEntropy e;
    std::vector<double> node_p;
    node_p.reserve(level.size());
    for (const BranchNode& n : level) node_p.push_back(n.probability);
    e.node_bits = shannon_bits(node_p);

    const DistinctStates ds = distinct_bob_states(level);
    std::vector<double> rep_p;
    rep_p.reserve(ds.representatives.size());
    for (const auto& rep : ds.representatives) rep_p.push_back(rep.probability);
    e.distinct_state_bits = shannon_bits(rep_p);
    return e;
}

} // namespace seqweak
