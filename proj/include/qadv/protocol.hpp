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
 * @file protocol.hpp
 * @brief Pauli encoding of a two-bit variable and the resulting information
 *        quantities.
 *
 * Alice applies U_k = sigma_X^{b1} sigma_Z^{b2} to qubit s with probability
 * p_k, k = 1..4 for (b1, b2) = (0,0), (0,1), (1,0), (1,1). Bob holds the
 * ensemble average. The Holevo quantity bounds what joint decoding can
 * extract; the locally accessible information is the best a one-qubit
 * projective measurement followed by processing of the other qubit achieves.
 * Their difference is the quantum advantage.
 */
#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qadv/correlations.hpp"
#include "qadv/optimize.hpp"
#include "qadv/qcore.hpp"
#include "qadv/xstate.hpp"

namespace qadv {

inline constexpr double kDistributionTol = 1e-12;

struct BitPair {
    int b1 = 0;
    int b2 = 0;

    static BitPair make(int b1, int b2) {
        if ((b1 != 0 && b1 != 1) || (b2 != 0 && b2 != 1))
            throw Error(Errc::OutOfRange, "bits must be 0 or 1");
        return {b1, b2};
    }

    /// k in 1..4.
    static BitPair from_index(int k) {
        if (k < 1 || k > 4) throw Error(Errc::OutOfRange, "encoding index outside 1..4");
        return {(k - 1) >> 1, (k - 1) & 1};
    }

    int index() const noexcept { return 1 + 2 * b1 + b2; }

    friend bool operator==(const BitPair&, const BitPair&) = default;
};

class EncodingDistribution {
public:
    static EncodingDistribution make(double p1, double p2, double p3, double p4) {
        const std::array<double, 4> p{p1, p2, p3, p4};
        for (double x : p)
            if (!(x >= 0.0) || !std::isfinite(x))
                throw Error(Errc::InvalidDistribution, "negative probability");
        const double sum = p1 + p2 + p3 + p4;
        if (std::abs(sum - 1.0) > kDistributionTol)
            throw Error(Errc::InvalidDistribution, "probabilities do not sum to 1");
        return EncodingDistribution(p);
    }

    static EncodingDistribution uniform() { return EncodingDistribution({0.25, 0.25, 0.25, 0.25}); }

    /// p1 = p2 = q, p3 = p4 = 1/2 - q, q in [0, 1/2].
    static EncodingDistribution quasi_optimal(double q) {
        if (!(q >= 0.0 && q <= 0.5)) throw Error(Errc::InvalidDistribution, "p1 outside [0, 1/2]");
        return EncodingDistribution({q, q, 0.5 - q, 0.5 - q});
    }

    /// All weight on encoding k (1..4).
    static EncodingDistribution single(int k) {
        std::array<double, 4> p{};
        p.at(static_cast<std::size_t>(BitPair::from_index(k).index() - 1)) = 1.0;
        return EncodingDistribution(p);
    }

    /// p_k for k in 1..4.
    double p(int k) const { return p_.at(static_cast<std::size_t>(k - 1)); }
    const std::array<double, 4>& probabilities() const noexcept { return p_; }

private:
    explicit EncodingDistribution(const std::array<double, 4>& p) : p_(p) {}
    std::array<double, 4> p_;
};

inline LocalUnitary pauli_unitary(const BitPair& b) {
    LocalUnitary u = LocalUnitary::identity();
    if (b.b1) u = u * LocalUnitary::sigma_x();
    if (b.b2) u = u * LocalUnitary::sigma_z();
    return u;
}

inline DensityMatrix encode_one(const DensityMatrix& rho, const BitPair& b) {
    return apply_local(rho, pauli_unitary(b), LocalUnitary::identity());
}

/// The four encoded states rho_k, k = 1..4 (index 0..3).
inline std::array<DensityMatrix, 4> encoded_states(const DensityMatrix& rho) {
    return {encode_one(rho, BitPair::from_index(1)), encode_one(rho, BitPair::from_index(2)),
            encode_one(rho, BitPair::from_index(3)), encode_one(rho, BitPair::from_index(4))};
}

inline DensityMatrix encode_ensemble(const DensityMatrix& rho, const EncodingDistribution& d) {
    const auto states = encoded_states(rho);
    Mat4 avg;
    for (int k = 1; k <= 4; ++k)
        if (d.p(k) > 0.0) avg += states[k - 1].matrix() * cplx(d.p(k));
    return detail::make_state_unchecked(avg);
}

/// S(rho~) - S(rho); every rho_k shares the spectrum of rho.
inline double holevo(const DensityMatrix& rho, const EncodingDistribution& d) {
    return von_neumann_entropy(encode_ensemble(rho, d)) - von_neumann_entropy(rho);
}

/// S(rho~) - sum_k p_k S(rho_k), the general ensemble form.
inline double holevo_ensemble(const DensityMatrix& rho, const EncodingDistribution& d) {
    const auto states = encoded_states(rho);
    double avg_member = 0.0;
    for (int k = 1; k <= 4; ++k)
        if (d.p(k) > 0.0) avg_member += d.p(k) * von_neumann_entropy(states[k - 1]);
    return von_neumann_entropy(encode_ensemble(rho, d)) - avg_member;
}

struct AccessibleSearch {
    SphereGrid grid{91, 180, 1e-6};
    bool sphere_search = true;
    Qubit measured = Qubit::s;
};

struct AccessibleInfo {
    double I_c;
    MeasurementDirection direction;
    double axis_best;
    MeasurementDirection axis_direction;
    double search_best; ///< NaN when the sphere search is disabled
};

/// Information about k obtained by measuring one qubit along a direction and
/// then processing the other qubit's conditional state.
inline double local_information(const DensityMatrix& rho_avg, const std::array<DensityMatrix, 4>& members,
                                 const EncodingDistribution& d, const MeasurementDirection& m,
                                 Qubit measured = Qubit::s) {
    double v = avg_conditional_entropy(rho_avg, m, measured);
    for (int k = 1; k <= 4; ++k)
        if (d.p(k) > 0.0) v -= d.p(k) * avg_conditional_entropy(members[k - 1], m, measured);
    return v;
}

/// Supremum over projective directions of local_information(): the three
/// Pauli axes are evaluated exactly, then a sphere grid with refinement; the
/// search only replaces the axis optimum when it is better by more than 1e-12.
inline AccessibleInfo accessible_info(const DensityMatrix& rho, const EncodingDistribution& d,
                                      const AccessibleSearch& search = {}) {
    const auto members = encoded_states(rho);
    const DensityMatrix avg = encode_ensemble(rho, d);
    auto info = [&](const MeasurementDirection& m) {
        return local_information(avg, members, d, m, search.measured);
    };

    MeasurementDirection axis_dir = MeasurementDirection::z_axis();
    double axis_best = info(axis_dir);
    for (const auto& m : {MeasurementDirection::x_axis(), MeasurementDirection::y_axis()}) {
        const double v = info(m);
        if (v > axis_best + 1e-12) {
            axis_best = v;
            axis_dir = m;
        }
    }

    AccessibleInfo r{axis_best, axis_dir, axis_best, axis_dir, std::nan("")};
    if (search.sphere_search) {
        const auto opt = minimize_on_sphere(
            [&](const MeasurementDirection& m) { return -info(m); }, search.grid);
        r.search_best = -opt.value;
        if (r.search_best > axis_best + 1e-12) {
            r.I_c = r.search_best;
            r.direction = opt.direction;
        }
    }
    return r;
}

enum class MeasurementAxis { X, Y, Z, other };

constexpr std::string_view to_string(MeasurementAxis a) noexcept {
    switch (a) {
    case MeasurementAxis::X: return "X";
    case MeasurementAxis::Y: return "Y";
    case MeasurementAxis::Z: return "Z";
    case MeasurementAxis::other: return "other";
    }
    return "?";
}

inline MeasurementAxis classify_axis(const MeasurementDirection& m, double tol = 1e-6) {
    const auto& n = m.bloch();
    if (std::abs(std::abs(n[2]) - 1.0) <= tol) return MeasurementAxis::Z;
    if (std::abs(std::abs(n[0]) - 1.0) <= tol) return MeasurementAxis::X;
    if (std::abs(std::abs(n[1]) - 1.0) <= tol) return MeasurementAxis::Y;
    return MeasurementAxis::other;
}

struct AdvantageReport {
    double I_q;
    double I_c;
    double delta_I;
    double D_before;
    double D_after;
    double delta_D;
    double J_after;
    double lower_slack; ///< delta_I - (delta_D - J_after)
    double upper_slack; ///< delta_D - delta_I
    MeasurementDirection optimal_local_measurement;
};

/// rho must be a symmetric X-state; discord before and after encoding use the
/// closed forms.
inline AdvantageReport advantage(const DensityMatrix& rho, const EncodingDistribution& d,
                                 const AccessibleSearch& search = {}) {
    const XStateParams before = canonicalize(rho);
    const DensityMatrix avg = encode_ensemble(rho, d);
    const XStateParams after = canonicalize(avg);

    const double S_rho = von_neumann_entropy(rho);
    const double I_q = von_neumann_entropy(avg) - S_rho;
    const auto acc = accessible_info(rho, d, search);

    AdvantageReport r{
        I_q, acc.I_c, I_q - acc.I_c, discord_closed(before).D, discord_closed(after).D, 0.0,
        classical_information_closed(after), 0.0, 0.0, acc.direction};
    r.delta_D = r.D_before - r.D_after;
    r.lower_slack = r.delta_I - (r.delta_D - r.J_after);
    r.upper_slack = r.delta_D - r.delta_I;
    return r;
}

/// Closed-form canonical parameters of the averaged prepared state.
inline XStateParams averaged_prepared_params(const EncodingDistribution& d, double R) {
    const double T = 1.0 - R;
    const double p12 = d.p(1) + d.p(2), p34 = d.p(3) + d.p(4);
    return XStateParams::make((p34 * T + p12 * R) / 2, std::abs(d.p(1) - d.p(2)) * R / 2,
                              std::abs(d.p(3) - d.p(4)) * R / 2);
}

struct PostEncoding {
    double C;
    double D;
    double u;
    double v;
};

/// Correlations of the averaged prepared state (kh = 1, kv = 0) under
/// positive-coherence distributions (p1 >= p2, p3 >= p4):
///   C = max[0, (2p1-1)R - (p1+p2)T, (2p3-1)R - (p3+p4)T]
///   u = (2(p1+p3) - 1) R,   v = |(2(p3+p4) - 1)(1 - 2R)|.
inline PostEncoding post_encoding_correlations(const EncodingDistribution& d, double R) {
    if (!(R >= 0.0 && R <= 1.0)) throw Error(Errc::InvalidParams, "R outside [0, 1]");
    const double p1 = d.p(1), p2 = d.p(2), p3 = d.p(3), p4 = d.p(4);
    if (p1 < p2 || p3 < p4)
        throw Error(Errc::ConventionViolated, "requires p1 >= p2 and p3 >= p4");
    const double T = 1.0 - R;
    PostEncoding r{};
    r.C = std::max({0.0, (2 * p1 - 1) * R - (p1 + p2) * T, (2 * p3 - 1) * R - (p3 + p4) * T});
    r.u = (2 * (p1 + p3) - 1) * R;
    r.v = std::abs((2 * (p3 + p4) - 1) * (1 - 2 * R));
    const auto ev = averaged_prepared_params(d, R).eigenvalues();
    r.D = discord_from_uv(r.u, r.v, entropy_from_eigenvalues(ev)).D;
    return r;
}

struct OptimalEncodingCheck {
    double I_after;                    ///< I(rho~) of the averaged prepared state
    bool consumes_all_information;     ///< I(rho~) <= 1e-12
    bool uniform_or_balanced_splitter; ///< p_k = 1/4 for all k, or R = T
    bool conditions_disagree;
};

/// Compares the direct optimal-encoding test I(rho~) = 0 against the
/// "uniform or R = T" shortcut. They differ at R = T with p1 != p2 or p3 != p4.
inline OptimalEncodingCheck check_optimal_encoding(const EncodingDistribution& d, double R) {
    OptimalEncodingCheck c{};
    c.I_after = mutual_information(encode_ensemble(prepared_state(R), d));
    c.consumes_all_information = c.I_after <= 1e-12;
    bool uniform = true;
    for (double p : d.probabilities()) uniform = uniform && std::abs(p - 0.25) <= kDistributionTol;
    c.uniform_or_balanced_splitter = uniform || std::abs(R - (1.0 - R)) <= 1e-12;
    c.conditions_disagree = c.consumes_all_information != c.uniform_or_balanced_splitter;
    return c;
}

} // namespace qadv
