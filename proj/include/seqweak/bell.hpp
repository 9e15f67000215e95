// SPDX-License-Identifier: Apache-2.0
//
// Bell/entanglement scalar metrics for |Psi_eta> = cos(eta)|00> + sin(eta)|11>
// probed by Alice's noisy sigma_z/sigma_x pair and Bob's projective x-z plane
// measurements, plus state-level quantities (Horodecki maximum, negativity).
#pragma once

#include "seqweak/linalg.hpp"

namespace seqweak {

struct ChshSetting {
    double eta = 0.0;     // Schmidt angle of the shared state, [0, pi/2]
    double mu = 0.0;      // Alice's noise parameter, [0, pi/2]
    double theta_b = 0.0; // Bob's measurement-plane angle, finite
};

// CHSH value 2 cos(2 mu) [sin(theta_b) + sin(2 eta) cos(theta_b)].
// Equal to the correlator combination <A0B0>+<A0B1>+<A1B0>-<A1B1> with Alice
// Bloch vectors [0,0,cos 2mu], [cos 2mu,0,0] and Bob's projective vectors
// [+-cos(theta_b),0,sin(theta_b)].
double chsh_in_plane(const ChshSetting& s);

// arctan(1/sin(2 eta)); maximizes chsh_in_plane over theta_b, independent of
// mu. Throws product_state for eta outside (0, pi/2).
double optimal_bob_angle(double eta);

// sqrt(6 - 2 cos(4 eta)) cos(2 mu): chsh_in_plane at the optimal Bob angle.
double chsh_optimal(double eta, double mu);

// F(eta) = (1/2) arccos[2 / sqrt(6 - 2 cos(4 eta))]. For mu in [0, pi/4],
// chsh_optimal(eta, mu) > 2 iff mu < F(eta). Throws product_state at the
// domain edges.
double noise_bound(double eta);

// Horodecki criterion: 2 sqrt(sum of the two largest eigenvalues of T^t T)
// with T_ij = <psi|sigma_i (x) sigma_j|psi>. For |Psi_eta> this equals
// 2 sqrt(1 + sin^2(2 eta)).
double horodecki_smax(const TwoQubitState& psi);

// Absolute sum of the negative eigenvalues of the partial transpose of
// |psi><psi|; sin(theta)cos(theta) of the Schmidt form. In [0, 1/2].
double negativity(const TwoQubitState& psi);

} // namespace seqweak
