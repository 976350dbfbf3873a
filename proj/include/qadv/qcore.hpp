// Copyright 2026 The qadv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file qcore.hpp
 * @brief Fixed-size complex matrices, one- and two-qubit states, entropies.
 *
 * Two-qubit operators use the basis {|h0>, |h1>, |v0>, |v1>}: the first
 * tensor factor is the polarization qubit s, the second the path qubit p.
 * Row/column index of |s p> is 2*s + p.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>

#include "qadv/error.hpp"

namespace qadv {

using cplx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kDegenerateProbability = 1e-12;

inline constexpr double kJacobiOffTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

template <std::size_t N>
class Matrix {
public:
    static constexpr std::size_t dim = N;

    Matrix() = default;

    /// Row-major initializer; missing trailing entries are zero.
    Matrix(std::initializer_list<cplx> entries) {
        std::copy_n(entries.begin(), std::min(entries.size(), N * N), a_.begin());
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::array<double, N>& d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

    std::span<const cplx, N * N> entries() const { return a_; }

    Matrix adjoint() const {
        Matrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    Matrix conjugate() const {
        Matrix m;
        for (std::size_t i = 0; i < N * N; ++i) m.a_[i] = std::conj(a_[i]);
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(cplx s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix m;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx ark = a(r, k);
                if (ark == cplx{}) continue;
                for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
            }
        return m;
    }

private:
    std::array<cplx, N * N> a_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
    double d = 0.0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
    return d;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol = kHermitianTol) {
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = r; c < N; ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    return true;
}

namespace pauli {
inline Mat2 identity() { return Mat2::identity(); }
inline Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
inline Mat2 y() { return Mat2{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}; }
inline Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }
} // namespace pauli

// ---------------------------------------------------------------------------
// Eigenvalues
// ---------------------------------------------------------------------------

namespace detail {

inline std::array<double, 2> eigenvalues_2x2(const Mat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = 0.5 * (a - d);
    const double disc = std::sqrt(half_gap * half_gap + std::norm(m(0, 1)));
    const double mid = 0.5 * (a + d);
    return {mid + disc, mid - disc};
}

/// Cyclic complex Jacobi: each rotation V = diag(1, e^{-i arg g}) * R(c, s)
/// zeroes the (p, q) element of a Hermitian matrix.
template <std::size_t N>
std::array<double, N> jacobi_eigenvalues(Matrix<N> a) {
    auto off_norm = [&a] {
        double s = 0.0;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c)
                if (r != c) s += std::norm(a(r, c));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_norm() >= kJacobiOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx g = a(p, q);
                const double mag = std::abs(g);
                if (mag == 0.0) continue;
                const cplx phase = std::conj(g / mag);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const cplx vpp = c, vpq = s, vqp = -s * phase, vqq = c * phase;
                for (std::size_t k = 0; k < N; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::array<double, N> ev{};
    for (std::size_t i = 0; i < N; ++i) ev[i] = a(i, i).real();
    return ev;
}

} // namespace detail

/// Eigenvalues of a Hermitian matrix, sorted descending.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m) {
    if (!is_hermitian(m)) throw Error(Errc::NonHermitian, "matrix is not Hermitian within 1e-12");
    std::array<double, N> ev;
    if constexpr (N == 2) {
        ev = detail::eigenvalues_2x2(m);
    } else {
        ev = detail::jacobi_eigenvalues(m);
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// ---------------------------------------------------------------------------
// Entropies
// ---------------------------------------------------------------------------

/// -sum x log2 x over a spectrum; eigenvalues in [-1e-10, 0) count as zero.
inline double entropy_from_eigenvalues(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double x : eigenvalues) {
        if (x < -kPsdTol) throw Error(Errc::InvalidState, "negative eigenvalue " + std::to_string(x));
        if (x > 0.0) s -= x * std::log2(x);
    }
    return s;
}

inline double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(Errc::OutOfRange, "binary entropy argument outside [0,1]");
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

template <std::size_t N>
class State;

namespace detail {
template <std::size_t N>
State<N> make_state_unchecked(const Matrix<N>& m);
}

/// Hermitian, unit-trace, positive semidefinite N x N operator.
template <std::size_t N>
class State {
public:
    /// Validates Hermiticity (1e-12), trace (1e-12) and PSD (-1e-10).
    static State from_matrix(const Matrix<N>& m) {
        if (!is_hermitian(m)) throw Error(Errc::InvalidState, "state is not Hermitian");
        if (std::abs(m.trace() - 1.0) > kTraceTol) throw Error(Errc::InvalidState, "state trace is not 1");
        const auto ev = hermitian_eigenvalues(m);
        if (ev.back() < -kPsdTol) throw Error(Errc::InvalidState, "state is not positive semidefinite");
        return State(m);
    }

    static State maximally_mixed() { return State(Matrix<N>::identity() * cplx(1.0 / N)); }

    const Matrix<N>& matrix() const noexcept { return m_; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    std::array<double, N> eigenvalues() const { return hermitian_eigenvalues(m_); }

private:
    explicit State(const Matrix<N>& m) : m_(m) {}
    friend State detail::make_state_unchecked<N>(const Matrix<N>& m);

    Matrix<N> m_;
};

using DensityMatrix = State<4>;
using QubitState = State<2>;

namespace detail {
/// For results of validity-preserving operations; symmetrizes away rounding.
template <std::size_t N>
State<N> make_state_unchecked(const Matrix<N>& m) {
    return State<N>((m + m.adjoint()) * cplx(0.5));
}
} // namespace detail

template <std::size_t N>
double von_neumann_entropy(const State<N>& rho) {
    const auto ev = rho.eigenvalues();
    return entropy_from_eigenvalues(ev);
}

/// Validating overload for raw matrices; throws InvalidState.
template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& m) {
    return von_neumann_entropy(State<N>::from_matrix(m));
}

inline DensityMatrix bell_psi_plus() {
    Mat4 m;
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return detail::make_state_unchecked(m);
}

// ---------------------------------------------------------------------------
// Qubits, unitaries and measurements
// ---------------------------------------------------------------------------

enum class Qubit { s, p };

enum class Outcome { plus, minus };

inline constexpr std::array<Outcome, 2> kOutcomes{Outcome::plus, Outcome::minus};

class LocalUnitary {
public:
    static LocalUnitary from_matrix(const Mat2& u) {
        if (max_abs_diff(u * u.adjoint(), Mat2::identity()) > kUnitaryTol)
            throw Error(Errc::NonUnitary, "U U^dagger differs from identity");
        return LocalUnitary(u);
    }

    static LocalUnitary identity() { return LocalUnitary(pauli::identity()); }
    static LocalUnitary sigma_x() { return LocalUnitary(pauli::x()); }
    static LocalUnitary sigma_y() { return LocalUnitary(pauli::y()); }
    static LocalUnitary sigma_z() { return LocalUnitary(pauli::z()); }
    static LocalUnitary hadamard() {
        const double r = 1.0 / std::numbers::sqrt2;
        return LocalUnitary(Mat2{r, r, r, -r});
    }

    /// exp(i phi sigma_Z / 2) = diag(e^{i phi/2}, e^{-i phi/2}).
    static LocalUnitary z_phase(double phi) {
        return LocalUnitary(Mat2{std::polar(1.0, phi / 2), 0.0, 0.0, std::polar(1.0, -phi / 2)});
    }

    const Mat2& matrix() const noexcept { return u_; }

    friend LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b) {
        return LocalUnitary(a.u_ * b.u_);
    }

private:
    explicit LocalUnitary(const Mat2& u) : u_(u) {}
    Mat2 u_;
};

/// Unit Bloch vector n; projectors are (1 +- n.sigma)/2.
class MeasurementDirection {
public:
    /// theta in [0, pi], phi in [0, 2 pi).
    static MeasurementDirection from_angles(double theta, double phi) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw Error(Errc::OutOfRange, "theta outside [0, pi]");
        if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
            throw Error(Errc::OutOfRange, "phi outside [0, 2 pi)");
        return MeasurementDirection(theta, phi);
    }

    /// Normalizes any nonzero vector.
    static MeasurementDirection from_bloch(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (!(n > 0.0) || !std::isfinite(n)) throw Error(Errc::OutOfRange, "zero Bloch vector");
        const double theta = std::acos(std::clamp(z / n, -1.0, 1.0));
        double phi = std::atan2(y, x);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
        return MeasurementDirection(theta, phi);
    }

    /// Any real angles; the direction is the point they name on the sphere.
    static MeasurementDirection from_any_angles(double theta, double phi) {
        return from_bloch(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta));
    }

    static MeasurementDirection x_axis() { return MeasurementDirection(std::numbers::pi / 2, 0.0); }
    static MeasurementDirection y_axis() {
        return MeasurementDirection(std::numbers::pi / 2, std::numbers::pi / 2);
    }
    static MeasurementDirection z_axis() { return MeasurementDirection(0.0, 0.0); }

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    const std::array<double, 3>& bloch() const noexcept { return n_; }

    Mat2 projector(Outcome o) const {
        const double sign = o == Outcome::plus ? 0.5 : -0.5;
        return Mat2{0.5 + sign * n_[2], sign * cplx{n_[0], -n_[1]}, sign * cplx{n_[0], n_[1]},
                    0.5 - sign * n_[2]};
    }

private:
    MeasurementDirection(double theta, double phi)
        : theta_(theta), phi_(phi),
          n_{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)} {
        // Exact zeros on the axes keep axis measurements bit-clean.
        for (auto& c : n_)
            if (std::abs(c) < 1e-16) c = 0.0;
    }

    double theta_;
    double phi_;
    std::array<double, 3> n_;
};

// ---------------------------------------------------------------------------
// Two-qubit operations
// ---------------------------------------------------------------------------

inline QubitState partial_trace(const DensityMatrix& rho, Qubit keep) {
    Mat2 r;
    const Mat4& m = rho.matrix();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                r(i, j) += keep == Qubit::s ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
    return detail::make_state_unchecked(r);
}

/// (U_s (x) U_p) rho (U_s (x) U_p)^dagger.
inline DensityMatrix apply_local(const DensityMatrix& rho, const LocalUnitary& us,
                                 const LocalUnitary& up) {
    const Mat4 u = kron(us.matrix(), up.matrix());
    return detail::make_state_unchecked(u * rho.matrix() * u.adjoint());
}

namespace detail {

/// Tr_measured[(Pi (x) 1) rho] (or (1 (x) Pi) for measured == p), unnormalized.
inline Mat2 conditional_block(const Mat4& m, const Mat2& proj, Qubit measured) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            cplx acc = 0.0;
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    // sum_{a,b} Pi_{a b} rho_{(b i),(a j)}  (measured s)
                    acc += measured == Qubit::s ? proj(a, b) * m(2 * b + i, 2 * a + j)
                                                : proj(a, b) * m(2 * i + b, 2 * j + a);
                }
            r(i, j) = acc;
        }
    return r;
}

/// p * S(block / p) for an unnormalized 2x2 block with trace p; zero when
/// p < 1e-12.
inline double weighted_block_entropy(const Mat2& block) {
    const double p = block.trace().real();
    if (p < kDegenerateProbability) return 0.0;
    auto ev = eigenvalues_2x2(block);
    double s = 0.0;
    for (double x : ev) {
        const double q = x / p;
        if (q > 0.0) s -= q * std::log2(q);
    }
    return p * s;
}

} // namespace detail

struct ConditionalState {
    double probability;
    QubitState state;
};

/// Post-measurement state of the unmeasured qubit for one outcome.
inline ConditionalState conditional_state(const DensityMatrix& rho, const MeasurementDirection& m,
                                          Outcome outcome, Qubit measured = Qubit::s) {
    const Mat2 block = detail::conditional_block(rho.matrix(), m.projector(outcome), measured);
    const double p = block.trace().real();
    if (p < kDegenerateProbability)
        throw Error(Errc::DegenerateOutcome, "outcome probability below 1e-12");
    return {p, detail::make_state_unchecked(block * cplx(1.0 / p))};
}

} // namespace qadv
