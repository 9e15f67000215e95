// SPDX-License-Identifier: Apache-2.0
//
// Weak two-outcome measurements: K(mu) = cos(mu)|n><n| + sin(mu)|-n><-n|.
// mu in {0, pi/2} is projective, mu = pi/4 is noninteractive, anything else
// is a weak measurement. Measurements act on Alice's (first) qubit.
#pragma once

#include <array>
#include <utility>

#include "seqweak/linalg.hpp"

namespace seqweak {

struct WeakMeasurement {
    BlochVector axis;  // unit vector
    double mu = 0.0;   // noise parameter, radians in [0, pi/2]
};

// Outcome-0 / outcome-1 Kraus operators. Both are hermitian psd and satisfy
// k0^2 + k1^2 = I exactly in exact arithmetic. The outcome-1 operator is the
// same-axis pair at pi/2 - mu, the minimal-disturbance square root of I - E.
struct KrausPair {
    Mat2 k0;
    Mat2 k1;
};

KrausPair kraus_pair(const WeakMeasurement& m);

// (p0, p1) with p0 = <psi|(E (x) I)|psi>, E = k0 k0^dag. Sums to 1.
std::pair<double, double> outcome_probabilities(const TwoQubitState& psi,
                                                const WeakMeasurement& m);

// Normalized (K_outcome (x) I)|psi>. Throws degenerate_branch when the
// outcome probability is below the threshold.
TwoQubitState post_measurement_state(const TwoQubitState& psi,
                                     const WeakMeasurement& m, int outcome,
                                     double threshold = kTol.degenerate_branch);

} // namespace seqweak
