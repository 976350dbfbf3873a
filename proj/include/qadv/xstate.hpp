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
 * @file xstate.hpp
 * @brief Symmetric two-qubit X-states and the interferometer source state.
 *
 * A symmetric X-state has diagonal (a, b, b, a) with b = 1/2 - a, an outer
 * coherence w between |h0> and |v1> and an inner coherence z between |h1>
 * and |v0>. Local sigma_Z phase rotations make w and z real and positive
 * without changing any correlation measure, so the canonical form carries
 * magnitudes only.
 */
#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "qadv/qcore.hpp"

namespace qadv {

inline constexpr double kXShapeTol = 1e-12;
inline constexpr double kParamTol = 1e-12;

/// Canonical symmetric X-state parameters: 0 <= w <= a, 0 <= z <= b = 1/2 - a.
class XStateParams {
public:
    static XStateParams make(double a, double w, double z) {
        if (!(a >= -kParamTol && a <= 0.5 + kParamTol))
            throw Error(Errc::InvalidParams, "a outside [0, 1/2]");
        a = std::clamp(a, 0.0, 0.5);
        const double b = 0.5 - a;
        if (!(w >= -kParamTol && w <= a + kParamTol))
            throw Error(Errc::InvalidParams, "w outside [0, a]");
        if (!(z >= -kParamTol && z <= b + kParamTol))
            throw Error(Errc::InvalidParams, "z outside [0, b]");
        return XStateParams(a, std::clamp(w, 0.0, a), std::clamp(z, 0.0, b));
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return 0.5 - a_; }
    double w() const noexcept { return w_; }
    double z() const noexcept { return z_; }

    /// {a + w, a - w, b + z, b - z}
    std::array<double, 4> eigenvalues() const { return {a_ + w_, a_ - w_, b() + z_, b() - z_}; }

private:
    XStateParams(double a, double w, double z) : a_(a), w_(w), z_(z) {}
    double a_;
    double w_;
    double z_;
};

/// Beam-splitter reflectivity R and the two delay-line coherence factors.
class ApparatusParams {
public:
    static ApparatusParams make(double R, double kappa_h, double kappa_v) {
        auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
        if (!unit(R)) throw Error(Errc::InvalidParams, "R outside [0, 1]");
        if (!unit(kappa_h)) throw Error(Errc::InvalidParams, "kappa_h outside [0, 1]");
        if (!unit(kappa_v)) throw Error(Errc::InvalidParams, "kappa_v outside [0, 1]");
        return ApparatusParams(R, kappa_h, kappa_v);
    }

    double R() const noexcept { return R_; }
    double T() const noexcept { return 1.0 - R_; }
    double kappa_h() const noexcept { return kh_; }
    double kappa_v() const noexcept { return kv_; }

private:
    ApparatusParams(double R, double kh, double kv) : R_(R), kh_(kh), kv_(kv) {}
    double R_;
    double kh_;
    double kv_;
};

inline DensityMatrix assemble(const XStateParams& p) {
    Mat4 m;
    m(0, 0) = m(3, 3) = p.a();
    m(1, 1) = m(2, 2) = p.b();
    m(0, 3) = m(3, 0) = p.w();
    m(1, 2) = m(2, 1) = p.z();
    return detail::make_state_unchecked(m);
}

/// Source state: (1/2)[[R,0,0,-iR kh],[0,T,-iT kv,0],[0,iT kv,T,0],[iR kh,0,0,R]].
inline DensityMatrix apparatus_state(const ApparatusParams& p) {
    const double R = p.R(), T = p.T();
    const cplx i{0.0, 1.0};
    Mat4 m;
    m(0, 0) = m(3, 3) = R / 2;
    m(1, 1) = m(2, 2) = T / 2;
    m(0, 3) = -i * R * p.kappa_h() / 2.0;
    m(3, 0) = i * R * p.kappa_h() / 2.0;
    m(1, 2) = -i * T * p.kappa_v() / 2.0;
    m(2, 1) = i * T * p.kappa_v() / 2.0;
    return detail::make_state_unchecked(m);
}

/// Canonical parameters of the source state, (R/2, R kh/2, T kv/2).
inline XStateParams canonical_params(const ApparatusParams& p) {
    return XStateParams::make(p.R() / 2, p.R() * p.kappa_h() / 2, p.T() * p.kappa_v() / 2);
}

namespace detail {
inline void require_symmetric_x(const Mat4& m) {
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const bool on_x = r == c || r + c == 3;
            if (!on_x && std::abs(m(r, c)) > kXShapeTol)
                throw Error(Errc::NotXState, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                 ") is off the X pattern");
        }
    if (std::abs(m(0, 0) - m(3, 3)) > kXShapeTol || std::abs(m(1, 1) - m(2, 2)) > kXShapeTol)
        throw Error(Errc::NotSymmetric, "diagonal is not of the form (a, b, b, a)");
}
} // namespace detail

/// Local phase rotation exp(i phi_s sZ/2) (x) exp(i phi_p sZ/2) that maps
/// both coherences of a symmetric X-state onto the positive real axis.
inline std::pair<LocalUnitary, LocalUnitary> canonical_rotation(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();
    detail::require_symmetric_x(m);
    // The rotation multiplies rho(3,0) by e^{-i(phi_s+phi_p)} and rho(2,1)
    // by e^{-i(phi_s-phi_p)}.
    // A vanishing coherence borrows the other's phase so the rotation stays
    // on polarization alone.
    const bool has_w = std::abs(m(3, 0)) > 0.0, has_z = std::abs(m(2, 1)) > 0.0;
    double arg_w = has_w ? std::arg(m(3, 0)) : 0.0;
    double arg_z = has_z ? std::arg(m(2, 1)) : 0.0;
    if (!has_w) arg_w = arg_z;
    if (!has_z) arg_z = arg_w;
    return {LocalUnitary::z_phase((arg_w + arg_z) / 2), LocalUnitary::z_phase((arg_w - arg_z) / 2)};
}

inline XStateParams canonicalize(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();
    detail::require_symmetric_x(m);
    return XStateParams::make(m(0, 0).real(), std::abs(m(3, 0)), std::abs(m(2, 1)));
}

inline double kappa_from_delay(double tau, double tau_c) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw Error(Errc::InvalidTime, "delay must be >= 0");
    if (!(tau_c > 0.0) || !std::isfinite(tau_c))
        throw Error(Errc::InvalidTime, "coherence time must be > 0");
    return std::exp(-tau / tau_c);
}

/// 2 max[0, w - b, z - a].
inline double concurrence(const XStateParams& p) {
    return 2.0 * std::max({0.0, p.w() - p.b(), p.z() - p.a()});
}

/// max[0, kh R - T, kv T - R].
inline double concurrence(const ApparatusParams& p) {
    return std::max({0.0, p.kappa_h() * p.R() - p.T(), p.kappa_v() * p.T() - p.R()});
}

inline double entanglement_of_formation(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw Error(Errc::OutOfRange, "concurrence outside [0, 1]");
    return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

/// Source state with kh = 1, kv = 0 after the canonical rotation: real,
/// diagonal (R, T, T, R)/2 with corner coherences R/2.
inline DensityMatrix prepared_state(double R) {
    if (!(R >= 0.0 && R <= 1.0)) throw Error(Errc::InvalidParams, "R outside [0, 1]");
    const double T = 1.0 - R;
    Mat4 m;
    m(0, 0) = m(3, 3) = m(0, 3) = m(3, 0) = R / 2;
    m(1, 1) = m(2, 2) = T / 2;
    return detail::make_state_unchecked(m);
}

} // namespace qadv
