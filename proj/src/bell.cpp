// SPDX-License-Identifier: Apache-2.0

#include "seqweak/bell.hpp"

#include <cmath>
#include <numbers>

namespace seqweak {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_angle(double v, double lo, double hi, const char* name) {
    if (!(v >= lo && v <= hi))
        throw SimError(SimErrc::invalid_config,
                       std::string(name) + " out of range");
}

void check_entangled_domain(double eta) {
    if (!(eta > 0.0 && eta < kHalfPi))
        throw SimError(SimErrc::product_state,
                       "eta in {0, pi/2}: product state, no CHSH violation");
}

} // namespace

double chsh_in_plane(const ChshSetting& s) {
    check_angle(s.eta, 0.0, kHalfPi, "eta");
    check_angle(s.mu, 0.0, kHalfPi, "mu");
    if (!std::isfinite(s.theta_b))
        throw SimError(SimErrc::invalid_config, "theta_b must be finite");
    return 2.0 * std::cos(2.0 * s.mu) *
           (std::sin(s.theta_b) + std::sin(2.0 * s.eta) * std::cos(s.theta_b));
}

double optimal_bob_angle(double eta) {
    check_entangled_domain(eta);
    return std::atan(1.0 / std::sin(2.0 * eta));
}

double chsh_optimal(double eta, double mu) {
    return std::sqrt(6.0 - 2.0 * std::cos(4.0 * eta)) * std::cos(2.0 * mu);
}

double noise_bound(double eta) {
    check_entangled_domain(eta);
    // (1/2) arccos[2/sqrt(6 - 2 cos 4 eta)] rewritten through
    // 6 - 2 cos(4 eta) = 4 + 4 sin^2(2 eta) and arccos(1/sqrt(1+s^2)) =
    // arctan(s). Identical on (0, pi/2) and stable for small eta, where the
    // cosine form cancels to zero.
    return 0.5 * std::atan(std::sin(2.0 * eta));
}

double horodecki_smax(const TwoQubitState& psi) {
    const Mat2* sigma[3] = {&kPauliX, &kPauliY, &kPauliZ};
    double t[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t[i][j] =
                expectation(tensor_product(*sigma[i], *sigma[j]), psi).real();

    std::array<std::array<cplx, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += t[k][i] * t[k][j];
            m[i][j] = acc;
        }
    const auto ev = hermitian_eigenvalues<3>(m);
    return 2.0 * std::sqrt(std::max(0.0, ev[0] + ev[1]));
}

double negativity(const TwoQubitState& psi) {
    // Partial transpose over Bob of |psi><psi|:
    // pt[(a,b),(c,d)] = psi[(a,d)] conj(psi[(c,b)]).
    const auto& v = psi.amp();
    std::array<std::array<cplx, 4>, 4> pt{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    pt[2 * a + b][2 * c + d] =
                        v[2 * a + d] * std::conj(v[2 * c + b]);

    const auto ev = hermitian_eigenvalues<4>(pt);
    double neg = 0.0;
    for (double e : ev) neg += std::max(0.0, -e);
    return std::min(neg, 0.5);
}

} // namespace seqweak
