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
 * @file verify.hpp
 * @brief Self-check suite behind `qadv verify` and the acceptance binary.
 *
 * Every check is deterministic: random inputs come from fixed seeds and the
 * report text depends only on computed values.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qadv/correlations.hpp"
#include "qadv/oracles.hpp"
#include "qadv/protocol.hpp"
#include "qadv/sweep.hpp"
#include "qadv/transactions.hpp"
#include "qadv/xstate.hpp"

namespace qadv {

struct CheckResult {
    std::string id; ///< acceptance criterion number, or x<n> for extra checks
    std::string name;
    bool passed;
    double measured;  ///< worst deviation observed
    double tolerance;
    std::string detail;
};

namespace detail {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : g_(seed) {}
    double uniform(double lo = 0.0, double hi = 1.0) { return lo + (hi - lo) * unit_uniform(g_); }

    /// Flat Dirichlet draw via normalized exponentials.
    EncodingDistribution distribution() {
        std::array<double, 4> e{};
        double s = 0.0;
        for (auto& x : e) {
            x = -std::log(1.0 - uniform());
            s += x;
        }
        return EncodingDistribution::make(e[0] / s, e[1] / s, e[2] / s, 1.0 - (e[0] + e[1] + e[2]) / s);
    }

    XStateParams canonical_x_state() {
        const double a = uniform(0.0, 0.5);
        const double w = uniform(0.0, a);
        const double z = uniform(0.0, 0.5 - a);
        return XStateParams::make(a, w, z);
    }

private:
    std::mt19937_64 g_;
};

/// X-state with coherence phases: diag(a, b, b, a), rho30 = w e^{i alpha},
/// rho21 = z e^{i beta}.
inline DensityMatrix phased_x_state(const XStateParams& p, double alpha, double beta) {
    Mat4 m;
    m(0, 0) = m(3, 3) = p.a();
    m(1, 1) = m(2, 2) = p.b();
    m(3, 0) = std::polar(p.w(), alpha);
    m(0, 3) = std::conj(m(3, 0));
    m(2, 1) = std::polar(p.z(), beta);
    m(1, 2) = std::conj(m(2, 1));
    return DensityMatrix::from_matrix(m);
}

inline std::string fmt(double x) { return format_number(x); }

inline CheckResult make_check(std::string id, std::string name, double measured, double tol, std::string detail) {
    return {std::move(id), std::move(name), measured <= tol, measured, tol, std::move(detail)};
}

} // namespace detail

inline CheckResult check_bell_extremum() {
    const auto r = correlation_report(apparatus_state(ApparatusParams::make(1.0, 1.0, 0.0)));
    const double dev = std::max({std::abs(r.C - 1.0), std::abs(r.E - 1.0), std::abs(r.D - 1.0), std::abs(r.I - 2.0)});
    return detail::make_check("1", "bell_extremum", dev, 1e-9,
                              "C=" + detail::fmt(r.C) + " E=" + detail::fmt(r.E) + " D=" + detail::fmt(r.D) +
                                  " I=" + detail::fmt(r.I));
}

inline CheckResult check_discord_without_entanglement() {
    const auto r = correlation_report(apparatus_state(ApparatusParams::make(1.0 / 3.0, 1.0, 0.0)));
    const auto spec = default_prep_spec();
    const auto rows = sweep_prep(spec);
    const auto ext = locate_prep_extrema(rows, spec);
    const auto& u = *ext.max_D_unentangled;
    const double loc = std::max(std::abs(u.x1 - 1.0 / 3.0), std::abs(u.x2 - 1.0));
    const double dev_value = std::abs(r.D - 1.0 / 3.0);
    // C must be exactly zero; any nonzero value fails outright.
    const bool ok = r.C == 0.0 && dev_value <= 1e-9 && loc <= 1e-3;
    CheckResult c{"2", "discord_without_entanglement", ok, std::max(dev_value, loc), 1e-3,
                  "C=" + detail::fmt(r.C) + " |D-1/3|=" + detail::fmt(dev_value) + " (tol 1e-09)" +
                      " argmax(R,kh)=(" + detail::fmt(u.x1) + "," + detail::fmt(u.x2) + ")" +
                      " grid=(" + detail::fmt(u.grid_x1) + "," + detail::fmt(u.grid_x2) + ")" +
                      " maxD=" + detail::fmt(u.value)};
    return c;
}

inline CheckResult check_optimal_encoding_identity() {
    const auto d = EncodingDistribution::uniform();
    double worst = 0.0, worst_mix = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double R = i / 49.0;
        const auto rho = prepared_state(R);
        const auto rep = correlation_report(rho);
        const auto a = advantage(rho, d);
        worst = std::max({worst, std::abs(a.delta_I - rep.D), std::abs(a.I_q - rep.I), std::abs(a.I_c - rep.J)});
        worst_mix = std::max(worst_mix, max_abs_diff(encode_ensemble(rho, d).matrix(), Mat4::identity() * 0.25));
    }
    CheckResult c{"3", "optimal_encoding_identity", worst <= 1e-9 && worst_mix <= 1e-12, worst, 1e-9,
                  "max|rho~ - 1/4|=" + detail::fmt(worst_mix) + " (tol 1e-12) over 50 R values"};
    return c;
}

inline CheckResult check_one_pauli_encoding() {
    const double expected = 3.0 * (2.0 - std::log2(3.0)) / 4.0;
    const SweepAxis axis{"R", 0.0, 1.0, 201};
    const auto rows = cut(0.5, axis);
    const auto ext = locate_cut_extrema(rows, 0.5, axis);
    const auto& u = *ext.max_dI_unentangled;
    const double dev = std::abs(u.dI - expected);
    const double loc = std::abs(u.R - 0.5);
    const double consumed = std::abs(u.dI - u.dD);
    const bool ok = dev <= 1e-6 && loc <= 1e-3 && consumed <= 1e-6;
    return {"4", "one_pauli_encoding", ok, std::max(dev, consumed), 1e-6,
            "max dI over C=0 = " + detail::fmt(u.dI) + " at R=" + detail::fmt(u.R) + " |dI-dD|=" +
                detail::fmt(consumed) + "; unrestricted max " + detail::fmt(ext.max_dI.dI) + " at R=" +
                detail::fmt(ext.max_dI.R)};
}

inline CheckResult check_gu_bound() {
    detail::Sampler rng(0x5eed0005);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
        const double R = rng.uniform();
        const auto d = rng.distribution();
        const auto a = advantage(prepared_state(R), d);
        worst = std::max({worst, -a.lower_slack, -a.upper_slack});
    }
    const double violation = std::max(0.0, worst);
    return detail::make_check("5", "gu_bound", violation, 1e-9,
                              "1000 pairs, min slack=" + detail::fmt(-worst));
}

inline CheckResult check_oracle_equivalence() {
    detail::Sampler rng(0x5eed0006);
    double worst_D = 0.0, worst_C = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto p = rng.canonical_x_state();
        const double alpha = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double beta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const auto rho = detail::phased_x_state(p, alpha, beta);
        worst_D = std::max(worst_D, std::abs(discord_closed(canonicalize(rho)).D - discord_brute(rho).D));
        worst_C = std::max(worst_C, std::abs(concurrence(canonicalize(rho)) - oracle::spin_flip_concurrence(rho.matrix())));
    }
    return {"6", "oracle_equivalence", worst_D <= 2e-4 && worst_C <= 1e-9, worst_D, 2e-4,
            "discord closed vs brute; concurrence vs spin-flip max dev=" + detail::fmt(worst_C) + " (tol 1e-09)"};
}

inline CheckResult check_quasi_optimal_consumption() {
    detail::Sampler rng(0x5eed0007);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double R = rng.uniform();
        const double p1 = rng.uniform(0.0, 0.5);
        const auto avg = encode_ensemble(prepared_state(R), EncodingDistribution::quasi_optimal(p1));
        worst = std::max(worst, std::abs(correlation_report(avg).D));
    }
    return detail::make_check("7", "quasi_optimal_consumption", worst, 1e-9, "max |D(rho~)| over 100 draws");
}

inline CheckResult check_superdense_limit() {
    TransactionConfig joint{1.0, EncodingDistribution::uniform(), 10000, 7, JointStrategy{}, 1};
    const auto j = run_transactions(joint);
    const double hol = holevo(prepared_state(1.0), EncodingDistribution::uniform());
    TransactionConfig local{1.0, EncodingDistribution::uniform(), 100000, 7, LocalStrategy{}, 1};
    const auto l = run_transactions(local);
    const double sigma = std::sqrt(0.25 / 100000.0);
    const double z = std::abs(l.per_bit_accuracy[1] - 0.5) / sigma;
    const bool ok = j.success_rate == 1.0 && std::abs(hol - 2.0) <= 1e-12 && z <= 3.0;
    return {"8", "superdense_limit", ok, z, 3.0,
            "joint success=" + detail::fmt(j.success_rate) + " |holevo-2|=" + detail::fmt(std::abs(hol - 2.0)) +
                " local b2 accuracy=" + detail::fmt(l.per_bit_accuracy[1]) + " (measured in sigma)"};
}

inline CheckResult check_vanishing_cases() {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        worst = std::max(worst, std::abs(correlation_report(apparatus_state(ApparatusParams::make(0.0, t, 0.0))).D));
        worst = std::max(worst, std::abs(correlation_report(apparatus_state(ApparatusParams::make(t, 0.0, 0.0))).D));
    }
    return detail::make_check("9", "vanishing_cases", worst, 1e-12,
                              "R=0 over kappa_h, and kappa_h=kappa_v=0 over R, 101 points each");
}

/// Extremum reproduction on the advantage grid and the p1 = 1/4 cut.
inline CheckResult check_advantage_extrema() {
    const auto spec = default_advantage_spec(51, 21);
    const auto rows = sweep_advantage(spec);
    const auto ext = locate_advantage_extrema(rows, spec);
    const auto& g = ext.max_dI;
    const auto& u = *ext.max_dI_unentangled;
    double dev = std::max({std::abs(g.value - 1.0), std::abs(u.value - 1.0 / 3.0), std::abs(u.x1 - 1.0 / 3.0)});

    const SweepAxis axis{"R", 0.0, 1.0, 101};
    const auto quarter = cut(0.25, axis);
    double col = 0.0;
    for (const auto& r : quarter) col = std::max(col, std::abs(r.dI - r.D));
    dev = std::max(dev, col);
    return detail::make_check(
        "x1", "advantage_extrema", dev, 1e-3,
        "max dI=" + detail::fmt(g.value) + " at (R,p1)=(" + detail::fmt(g.x1) + "," + detail::fmt(g.x2) +
            "); over C=0 " + detail::fmt(u.value) + " at (" + detail::fmt(u.x1) + "," + detail::fmt(u.x2) +
            "); p1=1/4 cut max|dI-D|=" + detail::fmt(col));
}

inline std::vector<std::function<CheckResult()>> verification_checks() {
    return {check_bell_extremum,         check_discord_without_entanglement, check_optimal_encoding_identity,
            check_one_pauli_encoding,    check_gu_bound,                     check_oracle_equivalence,
            check_quasi_optimal_consumption, check_superdense_limit,         check_vanishing_cases,
            check_advantage_extrema};
}

inline std::vector<CheckResult> run_verification() {
    std::vector<CheckResult> out;
    for (const auto& c : verification_checks()) out.push_back(c());
    return out;
}

inline void print_check(std::ostream& os, const CheckResult& c) {
    os << (c.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  measured=" << detail::fmt(c.measured)
       << " tol=" << detail::fmt(c.tolerance) << "  " << c.detail << '\n';
}

} // namespace qadv
