// SPDX-License-Identifier: Apache-2.0

#include "seqweak/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace seqweak {

const char* to_string(SimErrc code) {
    switch (code) {
        case SimErrc::invalid_axis: return "invalid_axis";
        case SimErrc::invalid_unitary: return "invalid_unitary";
        case SimErrc::invalid_state: return "invalid_state";
        case SimErrc::degenerate_branch: return "degenerate_branch";
        case SimErrc::schedule_violation: return "schedule_violation";
        case SimErrc::product_state: return "product_state";
        case SimErrc::incomplete_level: return "incomplete_level";
        case SimErrc::invalid_config: return "invalid_config";
    }
    return "unknown";
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat2 operator*(cplx s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
    return r;
}

Mat2 adjoint(const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

cplx trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

bool is_unitary(const Mat2& a, double tol) {
    Mat2 g = a * adjoint(a);
    double dev = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx want = (i == j) ? cplx(1.0) : cplx(0.0);
            dev += std::norm(g(i, j) - want);
        }
    return std::sqrt(dev) <= tol;
}

// --------------------------------------------------------------------------

TwoQubitState::TwoQubitState(const std::array<cplx, 4>& amplitudes, double tol)
    : amp_(amplitudes) {
    double n2 = norm_sq();
    if (std::abs(n2 - 1.0) > tol)
        throw SimError(SimErrc::invalid_state,
                       "state norm out of tolerance: |amp|^2 = " +
                           std::to_string(n2));
}

TwoQubitState TwoQubitState::normalized(const std::array<cplx, 4>& amplitudes) {
    double n2 = 0.0;
    for (const cplx& a : amplitudes) n2 += std::norm(a);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw SimError(SimErrc::invalid_state, "cannot normalize zero vector");
    TwoQubitState s;
    double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < 4; ++i) s.amp_[i] = amplitudes[i] * inv;
    return s;
}

TwoQubitState TwoQubitState::max_entangled() {
    const double r = 1.0 / std::sqrt(2.0);
    return TwoQubitState({cplx(r), cplx(0.0), cplx(0.0), cplx(r)});
}

double TwoQubitState::norm_sq() const {
    double n2 = 0.0;
    for (const cplx& a : amp_) n2 += std::norm(a);
    return n2;
}

double fidelity(const TwoQubitState& a, const TwoQubitState& b) {
    cplx ov = 0.0;
    for (int i = 0; i < 4; ++i) ov += std::conj(a.amp(i)) * b.amp(i);
    return std::norm(ov);
}

// --------------------------------------------------------------------------

Mat4 tensor_product(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

Mat2 bloch_to_projector(const BlochVector& n, double tol) {
    if (std::abs(n.norm() - 1.0) > tol)
        throw SimError(SimErrc::invalid_axis,
                       "measurement axis must be unit length, |n| = " +
                           std::to_string(n.norm()));
    Mat2 p;
    p(0, 0) = 0.5 * (1.0 + n.z);
    p(0, 1) = 0.5 * cplx(n.x, -n.y);
    p(1, 0) = 0.5 * cplx(n.x, n.y);
    p(1, 1) = 0.5 * (1.0 - n.z);
    return p;
}

Mat2 reduced_state(const TwoQubitState& psi, Side side) {
    const auto& a = psi.amp();
    Mat2 rho;
    if (side == Side::A) {
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                rho(i, k) = a[2 * i + 0] * std::conj(a[2 * k + 0]) +
                            a[2 * i + 1] * std::conj(a[2 * k + 1]);
    } else {
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                rho(j, l) = a[0 + j] * std::conj(a[0 + l]) +
                            a[2 + j] * std::conj(a[2 + l]);
    }
    return rho;
}

std::array<cplx, 4> apply_one_side(const Mat2& op, Side side,
                                   const std::array<cplx, 4>& amp) {
    std::array<cplx, 4> out{};
    if (side == Side::A) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out[2 * i + j] =
                    op(i, 0) * amp[0 + j] + op(i, 1) * amp[2 + j];
    } else {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out[2 * i + j] =
                    op(j, 0) * amp[2 * i + 0] + op(j, 1) * amp[2 * i + 1];
    }
    return out;
}

cplx expectation(const Mat4& op, const TwoQubitState& psi) {
    const auto& a = psi.amp();
    cplx acc = 0.0;
    for (int r = 0; r < 4; ++r) {
        cplx row = 0.0;
        for (int c = 0; c < 4; ++c) row += op(r, c) * a[c];
        acc += std::conj(a[r]) * row;
    }
    return acc;
}

TwoQubitState apply_local_unitary(const TwoQubitState& psi, const Mat2& u,
                                  Side side, double tol) {
    if (!is_unitary(u, tol))
        throw SimError(SimErrc::invalid_unitary,
                       "operator fails the unitarity check");
    return TwoQubitState::normalized(apply_one_side(u, side, psi.amp()));
}

// --------------------------------------------------------------------------
// Jacobi eigenvalues for complex Hermitian matrices.

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(
    std::array<std::array<cplx, N>, N> a) {
    double scale = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            scale = std::max(scale, std::abs(a[i][j]));
    const double stop = (scale > 0.0 ? scale : 1.0) * 1e-15;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q)
                off = std::max(off, std::abs(a[p][q]));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx apq = a[p][q];
                const double b = std::abs(apq);
                if (b <= stop * 1e-2) continue;
                const cplx phase = apq / b;
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * b);
                const double t =
                    (tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : -1.0 / (-tau + std::sqrt(1.0 + tau * tau)));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < N; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a[k][p];
                    const cplx akq = a[k][q];
                    a[k][p] = c * akp - s * std::conj(phase) * akq;
                    a[k][q] = s * akp + c * std::conj(phase) * akq;
                    a[p][k] = std::conj(a[k][p]);
                    a[q][k] = std::conj(a[k][q]);
                }
                a[p][p] = app - t * b;
                a[q][q] = aqq + t * b;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }

    std::array<double, N> ev;
    for (std::size_t i = 0; i < N; ++i) ev[i] = a[i][i].real();
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

template std::array<double, 2> hermitian_eigenvalues<2>(
    std::array<std::array<cplx, 2>, 2>);
template std::array<double, 3> hermitian_eigenvalues<3>(
    std::array<std::array<cplx, 3>, 3>);
template std::array<double, 4> hermitian_eigenvalues<4>(
    std::array<std::array<cplx, 4>, 4>);

double trace_distance(const Mat2& rho, const Mat2& sigma) {
    // Eigenvalues of the Hermitian difference in closed form.
    Mat2 d = rho - sigma;
    const double m = 0.5 * (d(0, 0).real() + d(1, 1).real());
    const double det =
        (d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0)).real();
    const double r = std::sqrt(std::max(0.0, m * m - det));
    return 0.5 * (std::abs(m + r) + std::abs(m - r));
}

BlochVector bloch_of_density(const Mat2& rho) {
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
            (rho(0, 0) - rho(1, 1)).real()};
}

// --------------------------------------------------------------------------
// Deterministic Schmidt decomposition via the 2x2 amplitude matrix
// M[i][j] = amp[2i+j]: M = u_a diag(cos theta, sin theta) u_b^t with
// u_b = conj(W) for the SVD M = U S W^dag.

namespace {

struct Vec2 {
    cplx v0, v1;
};

double vnorm(const Vec2& v) {
    return std::sqrt(std::norm(v.v0) + std::norm(v.v1));
}

Vec2 normalize(const Vec2& v) {
    double n = vnorm(v);
    return {v.v0 / n, v.v1 / n};
}

cplx vdot(const Vec2& a, const Vec2& b) { // <a|b>
    return std::conj(a.v0) * b.v0 + std::conj(a.v1) * b.v1;
}

// Multiply by a phase making the first non-negligible component real >= 0.
Vec2 fix_phase(const Vec2& v) {
    const cplx lead = (std::abs(v.v0) > 1e-12 * vnorm(v)) ? v.v0 : v.v1;
    const double mag = std::abs(lead);
    if (mag < 1e-300) return v;
    const cplx ph = std::conj(lead) / mag;
    return {ph * v.v0, ph * v.v1};
}

Vec2 matvec(const Mat2& m, const Vec2& v) {
    return {m(0, 0) * v.v0 + m(0, 1) * v.v1,
            m(1, 0) * v.v0 + m(1, 1) * v.v1};
}

// Orthonormal complement (-conj(b), conj(a)) of a unit vector (a, b).
Vec2 perp(const Vec2& v) { return {-std::conj(v.v1), std::conj(v.v0)}; }

} // namespace

SchmidtForm schmidt_decompose(const TwoQubitState& psi) {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = psi.amp(2 * i + j);

    const Mat2 g = adjoint(m) * m; // = W S^2 W^dag
    const double a = g(0, 0).real();
    const double d = g(1, 1).real();
    const cplx b = g(0, 1);

    double lam0;
    Vec2 w0;
    if (std::abs(b) <= 1e-15 * std::max(1.0, a + d)) {
        if (a >= d) {
            lam0 = a;
            w0 = {1.0, 0.0};
        } else {
            lam0 = d;
            w0 = {0.0, 1.0};
        }
    } else {
        const double half_tr = 0.5 * (a + d);
        const double disc =
            std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
        lam0 = half_tr + disc;
        w0 = normalize({b, cplx(lam0 - a)});
    }
    // The second right singular vector is the orthonormal complement; the
    // small singular value comes from sigma0 sigma1 = |det M|, which stays
    // accurate long after the subtractive eigenvalue lam1 = tr/2 - disc has
    // cancelled to roundoff.
    Vec2 w1 = perp(w0);
    w0 = fix_phase(w0);
    w1 = fix_phase(w1);

    const double det_mag =
        std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    const double s0 = std::sqrt(std::max(0.0, lam0));
    const double s1 = std::min(s0, s0 > 0.0 ? det_mag / s0 : 0.0);

    // Left vectors: u_k = M w_k / s_k. s0 >= 1/sqrt(2) for a normalized
    // state, so u0 is always well conditioned. u1 degrades as s1 -> 0; below
    // the cutoff it is replaced by the complement of u0 with the phase
    // aligned to the residual image (which then carries negligible weight).
    Vec2 u0 = normalize(matvec(m, w0));
    Vec2 u1;
    const Vec2 img1 = matvec(m, w1);
    if (s1 > 1e-7) {
        u1 = {img1.v0 / s1, img1.v1 / s1};
        const cplx ov = vdot(u0, u1);
        u1 = normalize({u1.v0 - ov * u0.v0, u1.v1 - ov * u0.v1});
    } else {
        u1 = perp(u0);
        const cplx ov = vdot(u1, img1);
        if (std::abs(ov) > 1e-300) {
            const cplx ph = ov / std::abs(ov);
            u1 = {ph * u1.v0, ph * u1.v1};
        }
    }

    SchmidtForm out;
    out.theta = std::min(std::atan2(s1, s0), std::atan(1.0)); // clamp to pi/4
    out.u_a(0, 0) = u0.v0; out.u_a(1, 0) = u0.v1;
    out.u_a(0, 1) = u1.v0; out.u_a(1, 1) = u1.v1;
    out.u_b(0, 0) = std::conj(w0.v0); out.u_b(1, 0) = std::conj(w0.v1);
    out.u_b(0, 1) = std::conj(w1.v0); out.u_b(1, 1) = std::conj(w1.v1);
    return out;
}

} // namespace seqweak
