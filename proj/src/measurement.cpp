// SPDX-License-Identifier: Apache-2.0

#include "seqweak/measurement.hpp"

#include <cmath>
#include <numbers>

namespace seqweak {

KrausPair kraus_pair(const WeakMeasurement& m) {
    if (!(m.mu >= 0.0 && m.mu <= std::numbers::pi / 2.0))
        throw SimError(SimErrc::invalid_config,
                       "noise parameter mu must lie in [0, pi/2]");
    const Mat2 p_plus = bloch_to_projector(m.axis);
    const Mat2 p_minus = bloch_to_projector(-m.axis);
    const double c = std::cos(m.mu);
    const double s = std::sin(m.mu);
    KrausPair k;
    k.k0 = cplx(c) * p_plus + cplx(s) * p_minus;
    k.k1 = cplx(s) * p_plus + cplx(c) * p_minus; // K at pi/2 - mu
    return k;
}

std::pair<double, double> outcome_probabilities(const TwoQubitState& psi,
                                                const WeakMeasurement& m) {
    const KrausPair k = kraus_pair(m);
    const auto phi0 = apply_one_side(k.k0, Side::A, psi.amp());
    const auto phi1 = apply_one_side(k.k1, Side::A, psi.amp());
    double p0 = 0.0, p1 = 0.0;
    for (int i = 0; i < 4; ++i) {
        p0 += std::norm(phi0[i]);
        p1 += std::norm(phi1[i]);
    }
    return {p0, p1};
}

TwoQubitState post_measurement_state(const TwoQubitState& psi,
                                     const WeakMeasurement& m, int outcome,
                                     double threshold) {
    if (outcome != 0 && outcome != 1)
        throw SimError(SimErrc::invalid_config, "outcome must be 0 or 1");
    const KrausPair k = kraus_pair(m);
    const auto phi =
        apply_one_side(outcome == 0 ? k.k0 : k.k1, Side::A, psi.amp());
    double p = 0.0;
    for (int i = 0; i < 4; ++i) p += std::norm(phi[i]);
    if (!(p > threshold))
        throw SimError(SimErrc::degenerate_branch,
                       "outcome probability below threshold: p = " +
                           std::to_string(p));
    return TwoQubitState::normalized(phi);
}

} // namespace seqweak
