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

// qadv: reports, sweeps, cuts, Monte Carlo runs and self-verification.
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qadv/qadv.hpp"
#include "qadv/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_grid(const std::string& s) {
    static const std::regex re(R"((\d+)[xX](\d+))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw Usage("grid must look like NxM, got '" + s + "'");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

qadv::MeasurementDirection parse_direction(const std::string& s) {
    if (s == "x") return qadv::MeasurementDirection::x_axis();
    if (s == "y") return qadv::MeasurementDirection::y_axis();
    if (s == "z") return qadv::MeasurementDirection::z_axis();
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw Usage("direction must be x, y, z or theta,phi");
    try {
        return qadv::MeasurementDirection::from_angles(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
        throw Usage("direction must be x, y, z or theta,phi");
    }
}

// Number formatting shared with the CSV writers so JSON and CSV agree.
json num(double x) { return json::parse(qadv::format_number(x)); }

json extremum_json(const qadv::Extremum& e, const char* n1, const char* n2) {
    return {{"value", num(e.value)},   {n1, num(e.x1)}, {n2, num(e.x2)}, {"grid_value", num(e.grid_value)},
            {std::string("grid_") + n1, num(e.grid_x1)}, {std::string("grid_") + n2, num(e.grid_x2)}};
}

/// Writes to --out if given, else stdout.
template <class Writer>
void emit(const std::string& out, Writer&& write) {
    if (out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(out);
    if (!f) throw Usage("cannot open '" + out + "' for writing");
    write(f);
}

std::string sibling(const std::string& out, const std::string& suffix) {
    const std::filesystem::path p(out);
    return (p.parent_path() / (p.stem().string() + suffix + ".csv")).string();
}

struct Options {
    // state
    std::optional<double> R, kh, kv, a, w, z;
    // distribution
    std::optional<double> p1, p2, p3, p4;
    bool uniform = false;
    // sweeps
    std::string grid;
    std::string search;
    std::string out;
    std::string format = "text";
    double R_min = 0.0, R_max = 1.0;
    int points = 201;
    // monte carlo
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    std::string strategy = "joint";
    std::string ms = "z", mp = "z";
    unsigned threads = 1;
};

qadv::AccessibleSearch parse_search(const std::string& s, qadv::AccessibleSearch fallback) {
    if (s.empty()) return fallback;
    const auto [nt, np] = parse_grid(s);
    if (nt < 3 || np < 4) throw Usage("search grid must be at least 3x4");
    return {{nt, np, 1e-6}, true, qadv::Qubit::s};
}

qadv::EncodingDistribution distribution(const Options& o) {
    if (o.uniform) return qadv::EncodingDistribution::uniform();
    if (o.p1 && !o.p2 && !o.p3 && !o.p4) return qadv::EncodingDistribution::quasi_optimal(*o.p1);
    if (o.p1 && o.p2 && o.p3 && o.p4) return qadv::EncodingDistribution::make(*o.p1, *o.p2, *o.p3, *o.p4);
    if (o.p1 || o.p2 || o.p3 || o.p4)
        throw Usage("give --p1 alone (quasi-optimal family) or all of --p1..--p4");
    return qadv::EncodingDistribution::uniform();
}

int cmd_report(const Options& o) {
    const bool apparatus = o.R || o.kh || o.kv;
    const bool xstate = o.a || o.w || o.z;
    if (apparatus == xstate) throw Usage("give either --R/--kh/--kv or --a/--w/--z");
    qadv::DensityMatrix rho = qadv::DensityMatrix::maximally_mixed();
    qadv::Branch region{};
    json params;
    if (apparatus) {
        const auto p = qadv::ApparatusParams::make(o.R.value_or(1.0), o.kh.value_or(1.0), o.kv.value_or(0.0));
        rho = qadv::apparatus_state(p);
        region = qadv::optimal_measurement_region(p);
        params = {{"R", num(p.R())}, {"kappa_h", num(p.kappa_h())}, {"kappa_v", num(p.kappa_v())}};
    } else {
        const auto p = qadv::XStateParams::make(o.a.value_or(0.25), o.w.value_or(0.0), o.z.value_or(0.0));
        rho = qadv::assemble(p);
        region = qadv::optimal_measurement_region(p);
        params = {{"a", num(p.a())}, {"w", num(p.w())}, {"z", num(p.z())}};
    }
    const auto r = qadv::correlation_report(rho);
    json j = {{"params", params},
              {"S_s", num(r.S_s)},
              {"S_p", num(r.S_p)},
              {"S_sp", num(r.S_sp)},
              {"I", num(r.I)},
              {"J", num(r.J)},
              {"D", num(r.D)},
              {"C", num(r.C)},
              {"E", num(r.E)},
              {"u", num(r.diagnostics.u)},
              {"v", num(r.diagnostics.v)},
              {"branch", qadv::to_string(region)}};
    if (o.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& [k, v] : j.items())
            if (k != "params") std::cout << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    return 0;
}

int cmd_sweep_prep(const Options& o) {
    auto spec = qadv::default_prep_spec();
    if (!o.grid.empty()) {
        const auto [n1, n2] = parse_grid(o.grid);
        spec.axis1.count = n1;
        spec.axis2.count = n2;
    }
    spec.fixed = o.kv.value_or(0.0);
    const auto rows = qadv::sweep_prep(spec);
    emit(o.out, [&](std::ostream& os) { qadv::write_prep_csv(os, rows); });
    if (o.out.empty()) return 0;

    const auto c0 = sibling(o.out, "_c0_boundary");
    const auto werner = sibling(o.out, "_werner");
    emit(c0, [&](std::ostream& os) { qadv::write_prep_c0_boundary_csv(os, spec.axis2, spec.fixed); });
    emit(werner, [&](std::ostream& os) { qadv::write_prep_werner_csv(os, spec.axis2, spec.fixed); });
    const auto ext = qadv::locate_prep_extrema(rows, spec);
    json j = {{"rows", rows.size()},
              {"csv", o.out},
              {"c0_boundary_csv", c0},
              {"werner_csv", werner},
              {"max_D", extremum_json(ext.max_D, "R", "kappa_h")}};
    if (ext.max_D_unentangled) j["max_D_unentangled"] = extremum_json(*ext.max_D_unentangled, "R", "kappa_h");
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_sweep_advantage(const Options& o) {
    auto spec = qadv::default_advantage_spec();
    if (!o.grid.empty()) {
        const auto [n1, n2] = parse_grid(o.grid);
        spec.axis1.count = n1;
        spec.axis2.count = n2;
    }
    const auto search = parse_search(o.search, qadv::sweep_search());
    const auto rows = qadv::sweep_advantage(spec, search);
    emit(o.out, [&](std::ostream& os) { qadv::write_advantage_csv(os, rows); });
    if (o.out.empty()) return 0;

    const auto boundary = sibling(o.out, "_branch_boundary");
    emit(boundary, [&](std::ostream& os) { qadv::write_advantage_boundary_csv(os, rows, spec); });
    const auto ext = qadv::locate_advantage_extrema(rows, spec, search);
    json j = {{"rows", rows.size()},
              {"csv", o.out},
              {"branch_boundary_csv", boundary},
              {"max_dI", extremum_json(ext.max_dI, "R", "p1")}};
    if (ext.max_dI_unentangled) j["max_dI_unentangled"] = extremum_json(*ext.max_dI_unentangled, "R", "p1");
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_cut(const Options& o) {
    if (!o.p1) throw Usage("cut needs --p1");
    const qadv::SweepAxis axis{"R", o.R_min, o.R_max, o.points};
    const auto search = parse_search(o.search, qadv::sweep_search());
    const auto rows = qadv::cut(*o.p1, axis, search);
    if (o.format != "json") {
        emit(o.out, [&](std::ostream& os) { qadv::write_cut_csv(os, rows); });
        return 0;
    }
    const auto ext = qadv::locate_cut_extrema(rows, *o.p1, axis, search);
    auto cut_json = [](const qadv::CutExtremum& e) {
        return json{{"R", num(e.R)}, {"dI", num(e.dI)}, {"dD", num(e.dD)}, {"grid_R", num(e.grid_R)}};
    };
    json j = {{"p1", num(*o.p1)}, {"rows", json::array()}, {"max_dI", cut_json(ext.max_dI)}};
    for (const auto& r : rows)
        j["rows"].push_back({{"R", num(r.R)}, {"C", num(r.C)}, {"D", num(r.D)}, {"dI", num(r.dI)}});
    if (ext.max_dI_unentangled) j["max_dI_unentangled"] = cut_json(*ext.max_dI_unentangled);
    emit(o.out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    return 0;
}

int cmd_mc(const Options& o) {
    qadv::TransactionConfig c;
    c.R = o.R.value_or(1.0);
    c.d = distribution(o);
    c.shots = o.shots;
    c.seed = o.seed;
    c.threads = o.threads;
    if (o.strategy == "joint") {
        c.strategy = qadv::JointStrategy{};
    } else if (o.strategy == "local") {
        c.strategy = qadv::LocalStrategy{parse_direction(o.ms), parse_direction(o.mp)};
    } else {
        throw Usage("strategy must be joint or local");
    }
    const auto s = qadv::run_transactions(c);
    const auto rho = qadv::prepared_state(c.R);
    const auto table = qadv::decoder_table(c.d, c.R, c.strategy);

    json counts = json::array();
    for (const auto& row : s.counts) counts.push_back(row);
    json j = {{"R", num(c.R)},
              {"distribution", {num(c.d.p(1)), num(c.d.p(2)), num(c.d.p(3)), num(c.d.p(4))}},
              {"strategy", o.strategy},
              {"shots", s.shots},
              {"seed", c.seed},
              {"success_rate", num(s.success_rate)},
              {"per_bit_accuracy", {{"b1", num(s.per_bit_accuracy[0])}, {"b2", num(s.per_bit_accuracy[1])}}},
              {"empirical_mutual_info", num(s.empirical_mutual_info)},
              {"counts", counts},
              {"outcome_counts", s.outcome_counts},
              {"decoder_table", table},
              {"theory", {{"I_q", num(qadv::holevo(rho, c.d))}, {"I_c", num(qadv::accessible_info(rho, c.d).I_c)}}}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_verify() {
    bool all = true;
    for (const auto& check : qadv::verification_checks()) {
        const auto r = check();
        qadv::print_check(std::cout, r);
        std::cout.flush();
        if (!r.passed) {
            all = false;
            std::cerr << "failing check: " << r.name << '\n';
        }
    }
    std::cout << (all ? "all checks passed" : "verification FAILED") << '\n';
    return all ? 0 : 1;
}

void add_state_flags(CLI::App* sub, Options& o) {
    sub->add_option("--R", o.R, "beam-splitter reflectivity in [0,1]");
    sub->add_option("--kh", o.kh, "h-arm coherence kappa_h in [0,1]");
    sub->add_option("--kv", o.kv, "v-arm coherence kappa_v in [0,1]");
}

void add_distribution_flags(CLI::App* sub, Options& o) {
    sub->add_option("--p1", o.p1, "p1 (alone: p1 = p2, p3 = p4 = 1/2 - p1)");
    sub->add_option("--p2", o.p2);
    sub->add_option("--p3", o.p3);
    sub->add_option("--p4", o.p4);
    sub->add_flag("--uniform", o.uniform, "p_k = 1/4");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qadv: quantum discord and superdense-coding advantage in polarization/path X-states"};
    app.require_subcommand(1);
    Options o;

    auto* report = app.add_subcommand("report", "correlations of a single state");
    add_state_flags(report, o);
    report->add_option("--a", o.a, "X-state diagonal a");
    report->add_option("--w", o.w, "outer coherence |w|");
    report->add_option("--z", o.z, "inner coherence |z|");
    report->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* prep = app.add_subcommand("sweep-prep", "CSV grid over (R, kappa_h) at fixed kappa_v");
    prep->add_option("--kv", o.kv, "fixed kappa_v (default 0)");
    prep->add_option("--grid", o.grid, "NxM points (default 201x201)");
    prep->add_option("--out", o.out, "CSV path; boundary artifacts go next to it");
    prep->add_option("--format", o.format, "csv")->check(CLI::IsMember({"text", "csv"}));

    auto* adv = app.add_subcommand("sweep-advantage", "CSV grid over (R, p1) for the quasi-optimal family");
    adv->add_option("--grid", o.grid, "NxM points (default 101x51)");
    adv->add_option("--search", o.search, "accessible-information sphere grid (default 31x60)");
    adv->add_option("--out", o.out, "CSV path; branch boundary goes next to it");
    adv->add_option("--format", o.format, "csv")->check(CLI::IsMember({"text", "csv"}));

    auto* cut = app.add_subcommand("cut", "advantage along R at fixed p1");
    cut->add_option("--p1", o.p1, "p1 in [0, 1/2]");
    cut->add_option("--R-min", o.R_min);
    cut->add_option("--R-max", o.R_max);
    cut->add_option("--points", o.points, "number of R points (default 201)");
    cut->add_option("--search", o.search, "accessible-information sphere grid (default 31x60)");
    cut->add_option("--out", o.out);
    cut->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"text", "csv", "json"}));

    auto* mc = app.add_subcommand("mc", "Monte Carlo encode/decode transactions");
    mc->add_option("--R", o.R, "beam-splitter reflectivity (source is kappa_h = 1, kappa_v = 0)");
    add_distribution_flags(mc, o);
    mc->add_option("--shots", o.shots);
    mc->add_option("--seed", o.seed);
    mc->add_option("--strategy", o.strategy, "joint|local");
    mc->add_option("--ms", o.ms, "local direction on s: x|y|z|theta,phi");
    mc->add_option("--mp", o.mp, "local direction on p: x|y|z|theta,phi");
    mc->add_option("--threads", o.threads);
    mc->add_option("--format", o.format, "json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run the self-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (report->parsed()) return cmd_report(o);
        if (prep->parsed()) return cmd_sweep_prep(o);
        if (adv->parsed()) return cmd_sweep_advantage(o);
        if (cut->parsed()) return cmd_cut(o);
        if (mc->parsed()) return cmd_mc(o);
        if (verify->parsed()) return cmd_verify();
    } catch (const qadv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
