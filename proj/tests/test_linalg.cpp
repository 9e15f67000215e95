// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "seqweak/linalg.hpp"

using namespace seqweak;
using std::numbers::pi;

namespace {

TwoQubitState schmidt_state(double theta) {
    return TwoQubitState({cplx(std::cos(theta)), 0.0, 0.0, cplx(std::sin(theta))});
}

std::array<cplx, 4> reconstruct(const SchmidtForm& sf) {
    std::array<cplx, 4> diag{cplx(std::cos(sf.theta)), 0.0, 0.0,
                             cplx(std::sin(sf.theta))};
    auto tmp = apply_one_side(sf.u_a, Side::A, diag);
    return apply_one_side(sf.u_b, Side::B, tmp);
}

double reconstruction_fidelity(const TwoQubitState& psi, const SchmidtForm& sf) {
    const auto rec = reconstruct(sf);
    cplx ov = 0.0;
    for (int i = 0; i < 4; ++i) ov += std::conj(psi.amp(i)) * rec[i];
    return std::norm(ov);
}

} // namespace

TEST_CASE("tensor product follows the |00>..|11> ordering") {
    const Mat4 ii = tensor_product(Mat2::identity(), Mat2::identity());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(ii(r, c) == (r == c ? cplx(1.0) : cplx(0.0)));

    const Mat4 zi = tensor_product(kPauliZ, Mat2::identity());
    const double want[4] = {1.0, 1.0, -1.0, -1.0};
    for (int r = 0; r < 4; ++r) {
        CHECK(zi(r, r).real() == doctest::Approx(want[r]));
        for (int c = 0; c < 4; ++c)
            if (r != c) CHECK(std::abs(zi(r, c)) == 0.0);
    }

    // |0><0| (x) |1><1| projects onto |01>.
    Mat2 p0 = bloch_to_projector({0.0, 0.0, 1.0});
    Mat2 p1 = bloch_to_projector({0.0, 0.0, -1.0});
    const Mat4 proj = tensor_product(p0, p1);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(proj(r, c) == (r == 1 && c == 1 ? cplx(1.0) : cplx(0.0)));
}

TEST_CASE("bloch_to_projector basics") {
    const Mat2 pz = bloch_to_projector({0.0, 0.0, 1.0});
    CHECK(pz(0, 0) == cplx(1.0));
    CHECK(pz(1, 1) == cplx(0.0));

    const Mat2 px = bloch_to_projector({1.0, 0.0, 0.0});
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(px(r, c).real() == doctest::Approx(0.5));

    const Mat2 pm = bloch_to_projector({0.0, 0.0, -1.0});
    CHECK(pm(1, 1) == cplx(1.0));
    CHECK(pm(0, 0) == cplx(0.0));

    CHECK_THROWS_AS(bloch_to_projector({0.0, 0.0, 2.0}), SimError);
    try {
        bloch_to_projector({0.3, 0.0, 0.0});
    } catch (const SimError& e) {
        CHECK(e.code() == SimErrc::invalid_axis);
    }
}

TEST_CASE("reduced states") {
    const auto psi0 = TwoQubitState::max_entangled();
    const Mat2 rb = reduced_state(psi0, Side::B);
    CHECK(rb(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rb(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(rb(0, 1)) < 1e-12);

    const TwoQubitState basis00({1.0, 0.0, 0.0, 0.0});
    const Mat2 rb00 = reduced_state(basis00, Side::B);
    CHECK(rb00(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rb00(1, 1)) < 1e-15);

    const auto psi = schmidt_state(pi / 9);
    const Mat2 r = reduced_state(psi, Side::B);
    const Mat2 want = oracles::reduced_direct(psi, Side::B);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(r.e[i] - want.e[i]) < 1e-14);
    CHECK(r(0, 0).real() ==
          doctest::Approx(std::cos(pi / 9) * std::cos(pi / 9)).epsilon(1e-12));
    CHECK(r(1, 1).real() ==
          doctest::Approx(std::sin(pi / 9) * std::sin(pi / 9)).epsilon(1e-12));
}

TEST_CASE("schmidt_decompose canonical examples") {
    const SchmidtForm max = schmidt_decompose(TwoQubitState::max_entangled());
    CHECK(max.theta == doctest::Approx(pi / 4).epsilon(1e-12));

    const TwoQubitState prod({0.0, 1.0, 0.0, 0.0}); // |01>
    const SchmidtForm p = schmidt_decompose(prod);
    CHECK(p.theta == doctest::Approx(0.0));
    CHECK(reconstruction_fidelity(prod, p) > 1.0 - 1e-10);

    const auto psi = schmidt_state(pi / 9);
    const SchmidtForm sf = schmidt_decompose(psi);
    CHECK(sf.theta == doctest::Approx(pi / 9).epsilon(1e-12));
    // Identity up to phase: off-diagonals vanish.
    CHECK(std::abs(sf.u_a(0, 1)) < 1e-12);
    CHECK(std::abs(sf.u_b(0, 1)) < 1e-12);
    CHECK(sf.theta == doctest::Approx(oracles::schmidt_theta_svd(psi)).epsilon(1e-9));
}

TEST_CASE("schmidt round-trip against the SVD oracle") {
    std::mt19937_64 rng(0x5eed0001);
    for (int trial = 0; trial < 300; ++trial) {
        const TwoQubitState psi = oracles::random_state(rng);
        const SchmidtForm sf = schmidt_decompose(psi);
        CHECK(sf.theta >= 0.0);
        CHECK(sf.theta <= pi / 4 + 1e-12);
        CHECK(is_unitary(sf.u_a, 1e-10));
        CHECK(is_unitary(sf.u_b, 1e-10));
        CHECK(reconstruction_fidelity(psi, sf) >= 1.0 - 1e-9);
        CHECK(std::abs(sf.theta - oracles::schmidt_theta_svd(psi)) < 1e-9);
    }
}

TEST_CASE("local unitaries preserve norm and entanglement") {
    const auto psi0 = TwoQubitState::max_entangled();
    const TwoQubitState same = apply_local_unitary(psi0, Mat2::identity(), Side::A);
    CHECK(fidelity(psi0, same) == doctest::Approx(1.0).epsilon(1e-12));

    const TwoQubitState basis00({1.0, 0.0, 0.0, 0.0});
    const TwoQubitState flipped = apply_local_unitary(basis00, kPauliX, Side::A);
    CHECK(std::abs(flipped.amp(2) - cplx(1.0)) < 1e-12); // |10>

    Mat2 hadamard;
    const double r = 1.0 / std::sqrt(2.0);
    hadamard(0, 0) = r; hadamard(0, 1) = r;
    hadamard(1, 0) = r; hadamard(1, 1) = -r;
    const TwoQubitState h = apply_local_unitary(psi0, hadamard, Side::A);
    // (|00> + |10> + |01> - |11>)/2, from the direct matrix product.
    CHECK(h.amp(0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.amp(1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.amp(2).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.amp(3).real() == doctest::Approx(-0.5).epsilon(1e-12));

    Mat2 not_unitary;
    not_unitary(0, 0) = 2.0;
    CHECK_THROWS_AS(apply_local_unitary(psi0, not_unitary, Side::B), SimError);

    std::mt19937_64 rng(0x5eed0002);
    for (int trial = 0; trial < 100; ++trial) {
        const TwoQubitState psi = oracles::random_state(rng);
        const Mat2 u = oracles::random_unitary(rng);
        const Side side = (trial % 2 == 0) ? Side::A : Side::B;
        const TwoQubitState moved = apply_local_unitary(psi, u, side);
        CHECK(std::abs(moved.norm_sq() - 1.0) < 1e-12);
        CHECK(std::abs(schmidt_decompose(moved).theta -
                       schmidt_decompose(psi).theta) < 1e-9);
    }
}

TEST_CASE("reduced-state spectrum matches the Schmidt angle") {
    std::mt19937_64 rng(0x5eed0003);
    for (int trial = 0; trial < 100; ++trial) {
        const TwoQubitState psi = oracles::random_state(rng);
        const SchmidtForm sf = schmidt_decompose(psi);
        const Mat2 rho = reduced_state(psi, Side::B);
        std::array<std::array<cplx, 2>, 2> m{
            {{rho(0, 0), rho(0, 1)}, {rho(1, 0), rho(1, 1)}}};
        const auto ev = hermitian_eigenvalues<2>(m);
        const double c = std::cos(sf.theta), s = std::sin(sf.theta);
        CHECK(std::abs(ev[0] - c * c) < 1e-10);
        CHECK(std::abs(ev[1] - s * s) < 1e-10);
    }
}

TEST_CASE("trace distance closed form") {
    const Mat2 z0 = bloch_to_projector({0.0, 0.0, 1.0});
    const Mat2 z1 = bloch_to_projector({0.0, 0.0, -1.0});
    CHECK(trace_distance(z0, z1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace_distance(z0, z0) == doctest::Approx(0.0));

    const Mat2 x0 = bloch_to_projector({1.0, 0.0, 0.0});
    // Orthogonal Bloch directions: distance = |r1 - r2|/2 = sqrt(2)/2.
    CHECK(trace_distance(z0, x0) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("state normalization contract") {
    CHECK_THROWS_AS(TwoQubitState({1.0, 1.0, 0.0, 0.0}), SimError);
    const TwoQubitState ok = TwoQubitState::normalized({1.0, 1.0, 0.0, 0.0});
    CHECK(std::abs(ok.norm_sq() - 1.0) < 1e-15);
    CHECK_THROWS_AS(TwoQubitState::normalized({0.0, 0.0, 0.0, 0.0}), SimError);
}
