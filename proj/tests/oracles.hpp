// SPDX-License-Identifier: Apache-2.0
//
// Independent test oracles. These never call the code paths they check:
// singular values and eigenvalues come from Eigen, CHSH maximization from a
// grid search, partial traces and correlators from direct index arithmetic.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <random>

#include "seqweak/bell.hpp"
#include "seqweak/linalg.hpp"
#include "seqweak/measurement.hpp"

namespace oracles {

using seqweak::cplx;
using seqweak::Mat2;
using seqweak::TwoQubitState;

inline Eigen::Matrix2cd to_eigen(const Mat2& m) {
    Eigen::Matrix2cd e;
    e << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    return e;
}

// Schmidt angle from Eigen's SVD of the reshaped amplitude matrix.
inline double schmidt_theta_svd(const TwoQubitState& psi) {
    Eigen::Matrix2cd m;
    m << psi.amp(0), psi.amp(1), psi.amp(2), psi.amp(3);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    const auto s = svd.singularValues();
    return std::asin(std::min(1.0, std::min(s(0), s(1))));
}

// Negativity from Eigen's eigensolver on the partial transpose.
inline double negativity_pt(const TwoQubitState& psi) {
    Eigen::Matrix4cd pt;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    pt(2 * a + b, 2 * c + d) =
                        psi.amp(2 * a + d) * std::conj(psi.amp(2 * c + b));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt,
                                                       Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (int i = 0; i < 4; ++i) neg += std::max(0.0, -es.eigenvalues()(i));
    return neg;
}

// Horodecki maximum from Eigen eigenvalues of T^t T.
inline double horodecki_svd(const TwoQubitState& psi) {
    using seqweak::expectation;
    using seqweak::tensor_product;
    const Mat2* sigma[3] = {&seqweak::kPauliX, &seqweak::kPauliY,
                            &seqweak::kPauliZ};
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t(i, j) =
                expectation(tensor_product(*sigma[i], *sigma[j]), psi).real();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(t.transpose() * t,
                                                      Eigen::EigenvaluesOnly);
    const auto ev = es.eigenvalues(); // ascending
    return 2.0 * std::sqrt(std::max(0.0, ev(2) + ev(1)));
}

// Partial trace by direct amplitude sums.
inline Mat2 reduced_direct(const TwoQubitState& psi, seqweak::Side side) {
    Mat2 rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < 2; ++k) {
                if (side == seqweak::Side::A)
                    acc += psi.amp(2 * i + k) * std::conj(psi.amp(2 * j + k));
                else
                    acc += psi.amp(2 * k + i) * std::conj(psi.amp(2 * k + j));
            }
            rho(i, j) = acc;
        }
    return rho;
}

// Grid maximization of the in-plane CHSH value over theta_b in [0, pi/2],
// refined to 1e-6 resolution. The objective is a single-lobe sinusoid
// A sin + B cos with A, B >= 0 for mu in [0, pi/4], so a coarse pass plus a
// local refinement reaches the global maximum at grid resolution.
inline double chsh_grid_max(double eta, double mu) {
    const double hi = std::asin(1.0); // pi/2
    const int coarse = 20000;
    double best = -1e300;
    double best_theta = 0.0;
    for (int i = 0; i <= coarse; ++i) {
        const double theta = hi * i / coarse;
        const double v = seqweak::chsh_in_plane({eta, mu, theta});
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }
    const double step = hi / coarse;
    const double lo2 = std::max(0.0, best_theta - 2.0 * step);
    const double hi2 = std::min(hi, best_theta + 2.0 * step);
    for (double theta = lo2; theta <= hi2; theta += 1e-6) {
        const double v = seqweak::chsh_in_plane({eta, mu, theta});
        best = std::max(best, v);
    }
    return best;
}

// CHSH from explicit correlators: Alice observables are 2E - I built from
// the Kraus pair, Bob observables are projective b.sigma.
inline double chsh_correlators(double eta, double mu, double theta_b) {
    using namespace seqweak;
    const TwoQubitState psi(
        {cplx(std::cos(eta)), 0.0, 0.0, cplx(std::sin(eta))});

    auto alice_obs = [&](const BlochVector& axis) {
        const KrausPair k = kraus_pair({axis, mu});
        const Mat2 e = k.k0 * adjoint(k.k0);
        return cplx(2.0) * e - Mat2::identity();
    };
    auto bob_obs = [&](double sign) {
        Mat2 b;
        const double cx = sign * std::cos(theta_b);
        const double sz = std::sin(theta_b);
        b(0, 0) = sz;
        b(0, 1) = cx;
        b(1, 0) = cx;
        b(1, 1) = -sz;
        return b;
    };

    const Mat2 a0 = alice_obs({0.0, 0.0, 1.0});
    const Mat2 a1 = alice_obs({1.0, 0.0, 0.0});
    const Mat2 b0 = bob_obs(1.0);
    const Mat2 b1 = bob_obs(-1.0);

    auto corr = [&](const Mat2& a, const Mat2& b) {
        return expectation(tensor_product(a, b), psi).real();
    };
    return corr(a0, b0) + corr(a0, b1) + corr(a1, b0) - corr(a1, b1);
}

// Haar-ish random two-qubit pure state (normalized complex Gaussians).
inline TwoQubitState random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<cplx, 4> amp;
    for (auto& a : amp) a = cplx(gauss(rng), gauss(rng));
    return TwoQubitState::normalized(amp);
}

// Random unitary from Gram-Schmidt on Gaussian columns.
inline Mat2 random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cplx a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    Mat2 u;
    u(0, 0) = a;
    u(1, 0) = b;
    u(0, 1) = -std::conj(b);
    u(1, 1) = std::conj(a);
    return u;
}

} // namespace oracles
