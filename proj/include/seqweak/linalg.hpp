// SPDX-License-Identifier: Apache-2.0
//
// Exact small-dimension complex linear algebra for two-qubit simulation:
// 2x2/4x4 operators, tensor products, Bloch conversions, reduced states and
// a deterministic Schmidt decomposition. Everything is a pure function of
// immutable values; no shared state.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "seqweak/errors.hpp"

namespace seqweak {

using cplx = std::complex<double>;

// Central tolerance record. Defaults are the contract values used throughout;
// operations that take a tolerance parameter default to these.
struct Tolerances {
    double state_norm = 1e-12;        // squared-norm drift allowed on states
    double unit_axis = 1e-12;         // |n|-1 for measurement axes
    double unitary = 1e-10;           // Frobenius deviation of U U^dag from I
    double schmidt_fidelity = 1e-10;  // 1 - reconstruction fidelity
    double degenerate_branch = 1e-12; // outcome-probability floor
    double metric_consistency = 1e-10;// negativity/Schmidt/Horodecki cross-checks
    double level_probability = 1e-9;  // per-level probability closure
    double cluster_trace_distance = 1e-9; // distinct-state clustering
    double schedule_margin = 1e-12;   // relative exclusion band below F
    double telescoping_slack = 1e-9;  // allowed slack in the telescoping check
};

inline constexpr Tolerances kTol{};

// --------------------------------------------------------------------------
// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }

    static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
    static Mat2 zero() { return Mat2{}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& a);

Mat2 adjoint(const Mat2& a);
cplx trace(const Mat2& a);
bool is_unitary(const Mat2& a, double tol = kTol.unitary);

inline const Mat2 kPauliX{{0.0, 1.0, 1.0, 0.0}};
inline const Mat2 kPauliY{{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}};
inline const Mat2 kPauliZ{{1.0, 0.0, 0.0, -1.0}};

// 4x4 complex matrix, row-major; basis order |00>,|01>,|10>,|11>.
struct Mat4 {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }
};

// --------------------------------------------------------------------------
// Real vector on (or in) the Bloch ball.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    BlochVector operator-() const { return {-x, -y, -z}; }
};

// Which tensor factor an operation targets. Alice holds the first factor.
enum class Side { A, B };

// --------------------------------------------------------------------------
// Normalized two-qubit pure state; amplitudes ordered |00>,|01>,|10>,|11>.
class TwoQubitState {
  public:
    // |00>.
    TwoQubitState() : amp_{cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)} {}

    // Checks the squared norm is 1 within tol and throws invalid_state if not.
    explicit TwoQubitState(const std::array<cplx, 4>& amplitudes,
                           double tol = kTol.state_norm);

    // Rescales to unit norm; throws invalid_state for a (near-)zero vector.
    static TwoQubitState normalized(const std::array<cplx, 4>& amplitudes);

    // (|00> + |11>)/sqrt(2), the protocol's t0 state.
    static TwoQubitState max_entangled();

    const std::array<cplx, 4>& amp() const { return amp_; }
    cplx amp(int i) const { return amp_[i]; }

    double norm_sq() const;

  private:
    std::array<cplx, 4> amp_{};
};

// Fidelity |<a|b>|^2; 1 means equal up to global phase.
double fidelity(const TwoQubitState& a, const TwoQubitState& b);

// --------------------------------------------------------------------------
// Canonical Schmidt form: (u_a (x) u_b)(cos(theta)|00> + sin(theta)|11>)
// reconstructs the source state. theta in [0, pi/4], coefficients ordered
// cos(theta) >= sin(theta) >= 0, residual phase absorbed into u_a. The
// degenerate spectrum (theta = pi/4) resolves to the computational basis via
// lexicographic sign fixing, so output is reproducible across runs.
struct SchmidtForm {
    double theta = 0.0;
    Mat2 u_a;
    Mat2 u_b;
};

// Kronecker product consistent with the |00>..|11> amplitude ordering.
Mat4 tensor_product(const Mat2& a, const Mat2& b);

// |n><n| = (I + n.sigma)/2 for a unit Bloch vector; throws invalid_axis.
Mat2 bloch_to_projector(const BlochVector& n, double tol = kTol.unit_axis);

// Partial trace over the other side; hermitian, psd, trace 1.
Mat2 reduced_state(const TwoQubitState& psi, Side side);

SchmidtForm schmidt_decompose(const TwoQubitState& psi);

// Applies u to one factor; throws invalid_unitary if u fails the check.
TwoQubitState apply_local_unitary(const TwoQubitState& psi, const Mat2& u,
                                  Side side, double tol = kTol.unitary);

// (op_a (x) I) amp or (I (x) op_b) amp on raw amplitudes (no normalization).
std::array<cplx, 4> apply_one_side(const Mat2& op, Side side,
                                   const std::array<cplx, 4>& amp);

// <psi| op |psi> for a 4x4 operator.
cplx expectation(const Mat4& op, const TwoQubitState& psi);

// Eigenvalues of an NxN complex Hermitian matrix (cyclic Jacobi, fixed pivot
// order), sorted descending. Deterministic for identical input bits.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(
    std::array<std::array<cplx, N>, N> a);

extern template std::array<double, 2> hermitian_eigenvalues<2>(
    std::array<std::array<cplx, 2>, 2>);
extern template std::array<double, 3> hermitian_eigenvalues<3>(
    std::array<std::array<cplx, 3>, 3>);
extern template std::array<double, 4> hermitian_eigenvalues<4>(
    std::array<std::array<cplx, 4>, 4>);

// Trace distance between single-qubit density matrices (closed form).
double trace_distance(const Mat2& rho, const Mat2& sigma);

// Bloch vector of a single-qubit density matrix: r_i = Tr(rho sigma_i).
BlochVector bloch_of_density(const Mat2& rho);

} // namespace seqweak
