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
 * @file correlations.hpp
 * @brief Mutual information, classical correlation and quantum discord.
 *
 * Closed forms hold for canonical symmetric X-states. With u = 2(w + z) and
 * v = |4a - 1| the optimal local measurement is sigma_Z when u < v and
 * sigma_X when u > v; at u = v every direction gives the same conditional
 * entropy. discord_brute() searches the whole Bloch sphere and is the
 * independent check on those closed forms.
 */
#pragma once

#include <cmath>
#include <string_view>

#include "qadv/optimize.hpp"
#include "qadv/qcore.hpp"
#include "qadv/xstate.hpp"

namespace qadv {

inline constexpr double kBranchTieTol = 1e-12;

enum class Branch { Z, X, degenerate };

constexpr std::string_view to_string(Branch b) noexcept {
    switch (b) {
    case Branch::Z: return "Z";
    case Branch::X: return "X";
    case Branch::degenerate: return "degenerate";
    }
    return "?";
}

struct DiscordDiagnostics {
    double u;
    double v;
    Branch branch;
};

inline Branch classify_branch(double u, double v) {
    if (std::abs(u - v) <= kBranchTieTol) return Branch::degenerate;
    return u < v ? Branch::Z : Branch::X;
}

inline double mutual_information(const DensityMatrix& rho) {
    return von_neumann_entropy(partial_trace(rho, Qubit::s)) +
           von_neumann_entropy(partial_trace(rho, Qubit::p)) - von_neumann_entropy(rho);
}

/// sum over outcomes of p(+-) S(rho_{other | +-}) after measuring `measured`
/// along m. Outcomes with probability below 1e-12 contribute zero.
inline double avg_conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& m,
                                      Qubit measured = Qubit::s) {
    double s = 0.0;
    for (Outcome o : kOutcomes)
        s += detail::weighted_block_entropy(
            detail::conditional_block(rho.matrix(), m.projector(o), measured));
    return s;
}

/// Average conditional entropy of the optimal measurement with correlation
/// strength x along it: h((1 + x)/2).
inline double axis_conditional_entropy(double x) { return binary_entropy((1.0 + x) / 2.0); }

inline DiscordDiagnostics discord_diagnostics(const XStateParams& p) {
    const double u = 2.0 * (p.w() + p.z());
    const double v = std::abs(4.0 * p.a() - 1.0);
    return {u, v, classify_branch(u, v)};
}

/// min(S_sigmaZ, S_sigmaX) selected by the u/v criterion; the degenerate
/// branch uses the sigma_Z expression.
inline double min_conditional_entropy(const DiscordDiagnostics& d) {
    return axis_conditional_entropy(d.branch == Branch::X ? std::min(d.u, 1.0) : std::min(d.v, 1.0));
}

struct DiscordResult {
    double D;
    DiscordDiagnostics diagnostics;
};

/// Discord of a symmetric X-state given explicit u, v (the branch criterion
/// inputs) and the state's spectrum entropy.
inline DiscordResult discord_from_uv(double u, double v, double spectrum_entropy) {
    const DiscordDiagnostics d{u, v, classify_branch(u, v)};
    return {1.0 - spectrum_entropy + min_conditional_entropy(d), d};
}

inline DiscordResult discord_closed(const XStateParams& p) {
    const auto d = discord_diagnostics(p);
    const auto ev = p.eigenvalues();
    return discord_from_uv(d.u, d.v, entropy_from_eigenvalues(ev));
}

inline double classical_information_closed(const XStateParams& p) {
    return 1.0 - min_conditional_entropy(discord_diagnostics(p));
}

struct BruteDiscord {
    double D;
    MeasurementDirection argmin;
    double min_conditional_entropy;
};

/// Discord minimized numerically over projective measurements of `measured`;
/// valid for any two-qubit state.
inline BruteDiscord discord_brute(const DensityMatrix& rho, const SphereGrid& grid = {},
                                  Qubit measured = Qubit::s) {
    const auto opt = minimize_on_sphere(
        [&](const MeasurementDirection& m) { return avg_conditional_entropy(rho, m, measured); },
        grid);
    const Qubit other = measured == Qubit::s ? Qubit::p : Qubit::s;
    const double D =
        von_neumann_entropy(partial_trace(rho, other)) - von_neumann_entropy(rho) + opt.value;
    return {D, opt.direction, opt.value};
}

/// Optimal-measurement region of the source state: u = kh R + kv T,
/// v = |2R - 1|. Degenerate along R = 1/(2 - kh) and R = 1/(2 + kh) at kv = 0.
inline Branch optimal_measurement_region(const ApparatusParams& p) {
    const double u = p.kappa_h() * p.R() + p.kappa_v() * p.T();
    const double v = std::abs(2.0 * p.R() - 1.0);
    return classify_branch(u, v);
}

inline Branch optimal_measurement_region(const XStateParams& p) {
    return discord_diagnostics(p).branch;
}

struct CorrelationReport {
    double S_s;
    double S_p;
    double S_sp;
    double I;
    double J;
    double D;
    double C;
    double E;
    DiscordDiagnostics diagnostics;
};

inline constexpr double kReportConsistencyTol = 1e-9;

/// Full report for a symmetric X-state (complex coherences allowed).
/// Throws NotXState / NotSymmetric for anything else.
inline CorrelationReport correlation_report(const DensityMatrix& rho) {
    const XStateParams p = canonicalize(rho);
    CorrelationReport r{};
    r.S_s = von_neumann_entropy(partial_trace(rho, Qubit::s));
    r.S_p = von_neumann_entropy(partial_trace(rho, Qubit::p));
    r.S_sp = von_neumann_entropy(rho);
    r.I = r.S_s + r.S_p - r.S_sp;
    const auto disc = discord_closed(p);
    r.D = disc.D;
    r.diagnostics = disc.diagnostics;
    r.J = classical_information_closed(p);
    r.C = concurrence(p);
    r.E = entanglement_of_formation(std::min(r.C, 1.0));
    if (std::abs(r.I - r.J - r.D) > kReportConsistencyTol)
        throw Error(Errc::InvalidState, "I != J + D beyond 1e-9");
    return r;
}

} // namespace qadv
