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
 * @file sweep.hpp
 * @brief Parameter grids, CSV output and extremum localization.
 *
 * Grids are row-major over (axis1, axis2). Numbers are written with 9
 * significant digits. Extrema are the best grid point followed by
 * coordinate-wise golden-section refinement within one grid step, restricted
 * to the same feasible region the grid filter used.
 */
#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qadv/correlations.hpp"
#include "qadv/optimize.hpp"
#include "qadv/protocol.hpp"
#include "qadv/xstate.hpp"

namespace qadv {

struct SweepAxis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int count = 201;

    double value(int i) const {
        if (count == 1) return lo;
        if (i == count - 1) return hi;
        return lo + (hi - lo) * i / (count - 1);
    }
    double step() const { return count > 1 ? (hi - lo) / (count - 1) : 0.0; }

    /// Range must lie in [domain_lo, domain_hi] and count >= 2.
    void validate(double domain_lo, double domain_hi) const {
        if (count < 2) throw Error(Errc::InvalidParams, name + ": need at least 2 points");
        if (!(lo >= domain_lo && hi <= domain_hi && lo < hi))
            throw Error(Errc::InvalidParams, name + ": range outside its legal domain");
    }
};

struct SweepSpec {
    SweepAxis axis1;
    SweepAxis axis2;
    double fixed = 0.0; ///< kappa_v for prep sweeps; unused otherwise
};

inline std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

// ---------------------------------------------------------------------------
// Source-state sweep over (R, kappa_h)
// ---------------------------------------------------------------------------

struct PrepRow {
    double R;
    double kappa_h;
    double C;
    double E;
    double D;
    double I;
    double J;
    Branch branch;
};

inline SweepSpec default_prep_spec(int n_R = 201, int n_kh = 201, double kappa_v = 0.0) {
    return {{"R", 0.0, 1.0, n_R}, {"kappa_h", 0.0, 1.0, n_kh}, kappa_v};
}

inline PrepRow prep_row(double R, double kh, double kv) {
    const auto params = ApparatusParams::make(R, kh, kv);
    const auto rep = correlation_report(apparatus_state(params));
    return {R, kh, rep.C, rep.E, rep.D, rep.I, rep.J, rep.diagnostics.branch};
}

inline std::vector<PrepRow> sweep_prep(const SweepSpec& spec) {
    spec.axis1.validate(0.0, 1.0);
    spec.axis2.validate(0.0, 1.0);
    if (!(spec.fixed >= 0.0 && spec.fixed <= 1.0)) throw Error(Errc::InvalidParams, "kappa_v outside [0, 1]");
    std::vector<PrepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.axis1.count) * spec.axis2.count);
    for (int i = 0; i < spec.axis1.count; ++i)
        for (int j = 0; j < spec.axis2.count; ++j)
            rows.push_back(prep_row(spec.axis1.value(i), spec.axis2.value(j), spec.fixed));
    return rows;
}

inline void write_prep_csv(std::ostream& os, const std::vector<PrepRow>& rows) {
    os << "R,kappa_h,C,E,D,I,J,branch\n";
    for (const auto& r : rows)
        os << format_number(r.R) << ',' << format_number(r.kappa_h) << ',' << format_number(r.C) << ','
           << format_number(r.E) << ',' << format_number(r.D) << ',' << format_number(r.I) << ','
           << format_number(r.J) << ',' << to_string(r.branch) << '\n';
}

/// C = 0 boundary of the source family at fixed kappa_v:
/// R_upper = 1/(1 + kh), R_lower = kv/(1 + kv).
inline void write_prep_c0_boundary_csv(std::ostream& os, const SweepAxis& kh_axis, double kv) {
    os << "kappa_h,R_upper,R_lower\n";
    for (int j = 0; j < kh_axis.count; ++j) {
        const double kh = kh_axis.value(j);
        os << format_number(kh) << ',' << format_number(1.0 / (1.0 + kh)) << ','
           << format_number(kv / (1.0 + kv)) << '\n';
    }
}

/// Degenerate-measurement lines u = v of the source family. At kv = 0 these
/// are the Werner line R = 1/(2 - kh) and the Werner-like line 1/(2 + kh).
inline void write_prep_werner_csv(std::ostream& os, const SweepAxis& kh_axis, double kv) {
    os << "kappa_h,R_werner,R_werner_like\n";
    for (int j = 0; j < kh_axis.count; ++j) {
        const double kh = kh_axis.value(j);
        const double upper = (1.0 + kv) / (2.0 + kv - kh);
        const double lower = (1.0 - kv) / (2.0 + kh - kv);
        os << format_number(kh) << ',' << (upper >= 0.5 && upper <= 1.0 ? format_number(upper) : "")
           << ',' << (lower >= 0.0 && lower <= 0.5 ? format_number(lower) : "") << '\n';
    }
}

// ---------------------------------------------------------------------------
// Extremum localization
// ---------------------------------------------------------------------------

struct Interval {
    double lo;
    double hi;
};

struct Extremum {
    double value;
    double x1;
    double x2;
    double grid_value;
    double grid_x1;
    double grid_x2;
};

/// Coordinate-wise golden-section ascent of f(x1, x2) starting at a grid
/// point. dom1(x2) / dom2(x1) give the feasible range of one coordinate with
/// the other held fixed; each search is confined to one step around the
/// current point.
inline Extremum refine_max_2d(const std::function<double(double, double)>& f, double x1, double x2,
                              double h1, double h2, const std::function<Interval(double)>& dom1,
                              const std::function<Interval(double)>& dom2, double tol = 1e-9) {
    Extremum e{f(x1, x2), x1, x2, 0.0, x1, x2};
    e.grid_value = e.value;
    for (int round = 0; round < 50; ++round) {
        double moved = 0.0;
        if (h1 > 0.0) {
            const Interval d = dom1(e.x2);
            const double lo = std::max(d.lo, e.x1 - h1), hi = std::min(d.hi, e.x1 + h1);
            if (hi > lo) {
                const auto o = golden_section_minimize([&](double x) { return -f(x, e.x2); }, lo, hi, tol);
                if (-o.value > e.value) {
                    moved = std::max(moved, std::abs(o.x - e.x1));
                    e.value = -o.value;
                    e.x1 = o.x;
                }
            }
        }
        if (h2 > 0.0) {
            const Interval d = dom2(e.x1);
            const double lo = std::max(d.lo, e.x2 - h2), hi = std::min(d.hi, e.x2 + h2);
            if (hi > lo) {
                const auto o = golden_section_minimize([&](double x) { return -f(e.x1, x); }, lo, hi, tol);
                if (-o.value > e.value) {
                    moved = std::max(moved, std::abs(o.x - e.x2));
                    e.value = -o.value;
                    e.x2 = o.x;
                }
            }
        }
        if (moved <= tol) break;
    }
    return e;
}

template <class Row, class Value, class Keep>
std::optional<std::size_t> argmax_rows(const std::vector<Row>& rows, Value value, Keep keep) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!keep(rows[i])) continue;
        if (!best || value(rows[i]) > value(rows[*best])) best = i;
    }
    return best;
}

struct PrepExtrema {
    Extremum max_D;
    std::optional<Extremum> max_D_unentangled; ///< over C = 0
};

inline PrepExtrema locate_prep_extrema(const std::vector<PrepRow>& rows, const SweepSpec& spec) {
    const double kv = spec.fixed;
    auto D_at = [kv](double R, double kh) {
        return discord_closed(canonical_params(ApparatusParams::make(R, kh, kv))).D;
    };
    auto full = [](double) { return Interval{0.0, 1.0}; };
    const double h1 = spec.axis1.step(), h2 = spec.axis2.step();

    PrepExtrema out{};
    const auto g = *argmax_rows(rows, [](const PrepRow& r) { return r.D; }, [](const PrepRow&) { return true; });
    out.max_D = refine_max_2d(D_at, rows[g].R, rows[g].kappa_h, h1, h2, full, full);

    const auto u = argmax_rows(rows, [](const PrepRow& r) { return r.D; },
                               [](const PrepRow& r) { return r.C == 0.0; });
    if (u) {
        // C = 0  <=>  kv/(1+kv) <= R <= 1/(1+kh)  and  kh <= T/R.
        auto R_dom = [kv](double kh) { return Interval{kv / (1.0 + kv), 1.0 / (1.0 + kh)}; };
        auto kh_dom = [](double R) { return Interval{0.0, R > 0.0 ? std::min(1.0, (1.0 - R) / R) : 1.0}; };
        out.max_D_unentangled = refine_max_2d(D_at, rows[*u].R, rows[*u].kappa_h, h1, h2, R_dom, kh_dom);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Advantage sweep over (R, p1) for p1 = p2, p3 = p4 = 1/2 - p1
// ---------------------------------------------------------------------------

struct AdvantageRow {
    double R;
    double p1;
    double Iq;
    double Ic;
    double dI;
    double dD;
    double J_after;
    MeasurementAxis branch; ///< axis of the I_c-optimal measurement
    double lower_slack;
    double upper_slack;
    double C_before;
};

inline SweepSpec default_advantage_spec(int n_R = 101, int n_p1 = 51) {
    return {{"R", 0.0, 1.0, n_R}, {"p1", 0.0, 0.5, n_p1}, 0.0};
}

/// Coarser search than the accessible_info default: sweeps evaluate it at
/// every grid point, and the axis candidates are always evaluated exactly.
inline AccessibleSearch sweep_search() { return {{31, 60, 1e-6}, true, Qubit::s}; }

inline AdvantageRow advantage_row(double R, double p1, const AccessibleSearch& search) {
    const auto rho = prepared_state(R);
    const auto d = EncodingDistribution::quasi_optimal(p1);
    const auto a = advantage(rho, d, search);
    return {R, p1, a.I_q, a.I_c, a.delta_I, a.delta_D, a.J_after,
            classify_axis(a.optimal_local_measurement), a.lower_slack, a.upper_slack,
            concurrence(ApparatusParams::make(R, 1.0, 0.0))};
}

inline std::vector<AdvantageRow> sweep_advantage(const SweepSpec& spec, const AccessibleSearch& search = sweep_search()) {
    spec.axis1.validate(0.0, 1.0);
    spec.axis2.validate(0.0, 0.5);
    std::vector<AdvantageRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.axis1.count) * spec.axis2.count);
    for (int i = 0; i < spec.axis1.count; ++i)
        for (int j = 0; j < spec.axis2.count; ++j)
            rows.push_back(advantage_row(spec.axis1.value(i), spec.axis2.value(j), search));
    return rows;
}

inline void write_advantage_csv(std::ostream& os, const std::vector<AdvantageRow>& rows) {
    os << "R,p1,Iq,Ic,dI,dD,J_after,branch,lower_slack,upper_slack\n";
    for (const auto& r : rows)
        os << format_number(r.R) << ',' << format_number(r.p1) << ',' << format_number(r.Iq) << ','
           << format_number(r.Ic) << ',' << format_number(r.dI) << ',' << format_number(r.dD) << ','
           << format_number(r.J_after) << ',' << to_string(r.branch) << ',' << format_number(r.lower_slack)
           << ',' << format_number(r.upper_slack) << '\n';
}

/// Points where the I_c-optimal axis changes between neighbouring R rows at
/// fixed p1, placed at the midpoint.
inline void write_advantage_boundary_csv(std::ostream& os, const std::vector<AdvantageRow>& rows,
                                         const SweepSpec& spec) {
    os << "p1,R,from,to\n";
    const int n1 = spec.axis1.count, n2 = spec.axis2.count;
    for (int j = 0; j < n2; ++j)
        for (int i = 1; i < n1; ++i) {
            const auto& a = rows[static_cast<std::size_t>((i - 1) * n2 + j)];
            const auto& b = rows[static_cast<std::size_t>(i * n2 + j)];
            if (a.branch != b.branch)
                os << format_number(a.p1) << ',' << format_number(0.5 * (a.R + b.R)) << ','
                   << to_string(a.branch) << ',' << to_string(b.branch) << '\n';
        }
}

struct AdvantageExtrema {
    Extremum max_dI;
    std::optional<Extremum> max_dI_unentangled; ///< over pre-encoding C = 0
};

inline AdvantageExtrema locate_advantage_extrema(const std::vector<AdvantageRow>& rows, const SweepSpec& spec,
                                                 const AccessibleSearch& search = sweep_search()) {
    auto dI_at = [&search](double R, double p1) { return advantage_row(R, p1, search).dI; };
    auto R_full = [](double) { return Interval{0.0, 1.0}; };
    auto R_unent = [](double) { return Interval{0.0, 0.5}; }; // prepared state: C = 0 iff R <= T
    auto p_dom = [](double) { return Interval{0.0, 0.5}; };
    const double h1 = spec.axis1.step(), h2 = spec.axis2.step();

    AdvantageExtrema out{};
    const auto g = *argmax_rows(rows, [](const AdvantageRow& r) { return r.dI; },
                                [](const AdvantageRow&) { return true; });
    out.max_dI = refine_max_2d(dI_at, rows[g].R, rows[g].p1, h1, h2, R_full, p_dom, 1e-7);
    const auto u = argmax_rows(rows, [](const AdvantageRow& r) { return r.dI; },
                               [](const AdvantageRow& r) { return r.C_before == 0.0; });
    if (u) out.max_dI_unentangled = refine_max_2d(dI_at, rows[*u].R, rows[*u].p1, h1, h2, R_unent, p_dom, 1e-7);
    return out;
}

// ---------------------------------------------------------------------------
// Cut along R at fixed p1
// ---------------------------------------------------------------------------

struct CutRow {
    double R;
    double C;
    double D;
    double dI;
    double dD;
};

inline std::vector<CutRow> cut(double p1, const SweepAxis& R_axis, const AccessibleSearch& search = sweep_search()) {
    if (!(p1 >= 0.0 && p1 <= 0.5)) throw Error(Errc::InvalidParams, "p1 outside [0, 1/2]");
    R_axis.validate(0.0, 1.0);
    std::vector<CutRow> rows;
    rows.reserve(static_cast<std::size_t>(R_axis.count));
    for (int i = 0; i < R_axis.count; ++i) {
        const double R = R_axis.value(i);
        const auto a = advantage(prepared_state(R), EncodingDistribution::quasi_optimal(p1), search);
        rows.push_back({R, concurrence(ApparatusParams::make(R, 1.0, 0.0)), a.D_before, a.delta_I, a.delta_D});
    }
    return rows;
}

inline void write_cut_csv(std::ostream& os, const std::vector<CutRow>& rows) {
    os << "R,C,D,dI\n";
    for (const auto& r : rows)
        os << format_number(r.R) << ',' << format_number(r.C) << ',' << format_number(r.D) << ','
           << format_number(r.dI) << '\n';
}

struct CutExtremum {
    double R;
    double dI;
    double dD;
    double grid_R;
};

struct CutExtrema {
    CutExtremum max_dI;
    std::optional<CutExtremum> max_dI_unentangled; ///< over C = 0, i.e. R <= 1/2
};

inline CutExtrema locate_cut_extrema(const std::vector<CutRow>& rows, double p1, const SweepAxis& R_axis,
                                     const AccessibleSearch& search = sweep_search()) {
    const auto d = EncodingDistribution::quasi_optimal(p1);
    auto at = [&](double R) { return advantage(prepared_state(R), d, search); };
    auto refine = [&](std::size_t i, Interval dom) {
        const double h = R_axis.step();
        const double lo = std::max(dom.lo, rows[i].R - h), hi = std::min(dom.hi, rows[i].R + h);
        CutExtremum e{rows[i].R, rows[i].dI, rows[i].dD, rows[i].R};
        if (hi > lo) {
            const auto o = golden_section_minimize([&](double R) { return -at(R).delta_I; }, lo, hi, 1e-9);
            if (-o.value > e.dI) {
                e.R = o.x;
                e.dI = -o.value;
                e.dD = at(o.x).delta_D;
            }
        }
        return e;
    };
    CutExtrema out{};
    const auto g = *argmax_rows(rows, [](const CutRow& r) { return r.dI; }, [](const CutRow&) { return true; });
    out.max_dI = refine(g, {0.0, 1.0});
    const auto u = argmax_rows(rows, [](const CutRow& r) { return r.dI; }, [](const CutRow& r) { return r.C == 0.0; });
    if (u) out.max_dI_unentangled = refine(*u, {0.0, 0.5});
    return out;
}

} // namespace qadv
