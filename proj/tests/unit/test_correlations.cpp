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

#include <gtest/gtest.h>

#include <cmath>

#include "qadv/correlations.hpp"
#include "qadv/xstate.hpp"
#include "support/generators.hpp"

namespace qadv {
namespace {

using testing::Gen;

// Frozen with mpmath.
constexpr double kH13 = 0.918295834054489515;
constexpr double kI13 = 0.415037499278843819; // 2 - log2(3)
constexpr double kJ13 = 0.081704165945510485; // 1 - h(1/3)

TEST(MutualInformation, Examples) {
    EXPECT_NEAR(mutual_information(DensityMatrix::maximally_mixed()), 0.0, 1e-15);
    EXPECT_NEAR(mutual_information(bell_psi_plus()), 2.0, 1e-14);
    EXPECT_NEAR(mutual_information(prepared_state(1.0 / 3)), kI13, 1e-14);
}

TEST(AvgConditionalEntropy, AxisExamples) {
    const auto rho = prepared_state(1.0 / 3);
    EXPECT_NEAR(avg_conditional_entropy(rho, MeasurementDirection::z_axis()), kH13, 1e-14);
    EXPECT_NEAR(avg_conditional_entropy(rho, MeasurementDirection::x_axis()), kH13, 1e-14);
    Gen g(31);
    for (int n = 0; n < 50; ++n)
        EXPECT_NEAR(avg_conditional_entropy(DensityMatrix::maximally_mixed(), g.direction()), 1.0, 1e-14);
}

TEST(AvgConditionalEntropy, AxesMatchClosedForms) {
    Gen g(32);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto d = discord_diagnostics(p);
        const auto rho = assemble(p);
        EXPECT_NEAR(avg_conditional_entropy(rho, MeasurementDirection::z_axis()), axis_conditional_entropy(d.v), 1e-12);
        EXPECT_NEAR(avg_conditional_entropy(rho, MeasurementDirection::x_axis()), axis_conditional_entropy(d.u), 1e-12);
    }
}

TEST(DiscordClosed, Examples) {
    EXPECT_NEAR(discord_closed(XStateParams::make(0.5, 0.5, 0.0)).D, 1.0, 1e-15);
    const auto r = discord_closed(XStateParams::make(1.0 / 6, 1.0 / 6, 0.0));
    EXPECT_NEAR(r.D, 1.0 / 3, 1e-15);
    EXPECT_EQ(r.diagnostics.branch, Branch::degenerate);
    for (double a : {0.0, 0.1, 0.25, 0.4, 0.5}) EXPECT_NEAR(discord_closed(XStateParams::make(a, 0.0, 0.0)).D, 0.0, 1e-15);
}

TEST(DiscordClosed, BranchSelection) {
    EXPECT_EQ(classify_branch(0.3, 0.5), Branch::Z);
    EXPECT_EQ(classify_branch(0.5, 0.3), Branch::X);
    EXPECT_EQ(classify_branch(0.5, 0.5 + 5e-13), Branch::degenerate);
    // X branch: (a, w, z) = (0.25, 0.2, 0.1) gives u = 0.6 > v = 0.
    const auto r = discord_closed(XStateParams::make(0.25, 0.2, 0.1));
    EXPECT_EQ(r.diagnostics.branch, Branch::X);
    EXPECT_NEAR(r.diagnostics.u, 0.6, 1e-15);
    EXPECT_NEAR(r.diagnostics.v, 0.0, 1e-15);
}

TEST(ClassicalInformation, Examples) {
    EXPECT_NEAR(classical_information_closed(XStateParams::make(0.5, 0.5, 0.0)), 1.0, 1e-15);
    EXPECT_NEAR(classical_information_closed(XStateParams::make(1.0 / 6, 1.0 / 6, 0.0)), kJ13, 1e-15);
    EXPECT_NEAR(classical_information_closed(XStateParams::make(0.25, 0.0, 0.0)), 0.0, 1e-15);
}

TEST(ClassicalInformation, EqualsMutualMinusDiscord) {
    Gen g(33);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        EXPECT_NEAR(classical_information_closed(p), mutual_information(assemble(p)) - discord_closed(p).D, 1e-12);
    }
}

TEST(DiscordBrute, Examples) {
    EXPECT_NEAR(discord_brute(bell_psi_plus()).D, 1.0, 1e-6);
    EXPECT_NEAR(discord_brute(DensityMatrix::maximally_mixed()).D, 0.0, 1e-9);
}

TEST(DiscordBrute, MatchesClosedFormOnRandomStates) {
    Gen g(34);
    for (int n = 0; n < 200; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto rho = testing::phased(p, g.angle(), g.angle());
        EXPECT_NEAR(discord_brute(rho).D, discord_closed(p).D, 2e-4);
    }
}

TEST(DiscordBrute, ArgminAttainsTwoCandidateMinimum) {
    // Nothing on the sphere beats the better of the two axes.
    Gen g(35);
    for (int n = 0; n < 100; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto b = discord_brute(assemble(p));
        EXPECT_NEAR(b.min_conditional_entropy, min_conditional_entropy(discord_diagnostics(p)), 1e-6);
        EXPECT_NEAR(avg_conditional_entropy(assemble(p), b.argmin), b.min_conditional_entropy, 1e-12);
    }
}

TEST(DiscordBrute, MeasuringPathGivesSameDiscordForSymmetricStates) {
    Gen g(36);
    for (int n = 0; n < 20; ++n) {
        SCOPED_TRACE(n);
        const auto rho = assemble(g.x_state());
        EXPECT_NEAR(discord_brute(rho, {61, 120, 1e-7}, Qubit::s).D, discord_brute(rho, {61, 120, 1e-7}, Qubit::p).D,
                    1e-6);
    }
}

TEST(Discord, Bounds) {
    Gen g(37);
    for (int n = 0; n < 1000; ++n) {
        const auto r = correlation_report(assemble(g.x_state()));
        EXPECT_GE(r.D, -1e-9);
        EXPECT_LE(r.D, std::min(r.S_s, r.S_p) + 1e-9);
        EXPECT_LE(std::min(r.S_s, r.S_p), 1.0 + 1e-9);
    }
}

TEST(Discord, VanishesExactlyWhereClaimed) {
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        EXPECT_LE(std::abs(correlation_report(apparatus_state(ApparatusParams::make(0.0, t, 0.0))).D), 1e-12);
        EXPECT_LE(std::abs(correlation_report(apparatus_state(ApparatusParams::make(t, 0.0, 0.0))).D), 1e-12);
    }
}

TEST(Discord, NonDecreasingInKappaH) {
    constexpr int n = 101;
    for (int i = 0; i < n; ++i) {
        double prev = -1.0;
        for (int j = 0; j < n; ++j) {
            const double D = discord_closed(canonical_params(ApparatusParams::make(i / 100.0, j / 100.0, 0.0))).D;
            EXPECT_GE(D, prev - 1e-12) << "R=" << i / 100.0 << " kh=" << j / 100.0;
            prev = D;
        }
    }
}

TEST(Discord, GridMaximumWithoutEntanglementIsOneThird) {
    double best = -1.0, bR = 0.0, bk = 0.0;
    for (int i = 0; i <= 200; ++i)
        for (int j = 0; j <= 200; ++j) {
            const auto a = ApparatusParams::make(i / 200.0, j / 200.0, 0.0);
            if (concurrence(a) != 0.0) continue;
            const double D = discord_closed(canonical_params(a)).D;
            if (D > best) best = D, bR = a.R(), bk = a.kappa_h();
        }
    EXPECT_NEAR(best, 1.0 / 3, 1e-3);
    EXPECT_NEAR(bR, 1.0 / 3, 2.5e-3); // half a grid step
    EXPECT_EQ(bk, 1.0);
}

TEST(Discord, MaximizedOnKappaCorners) {
    for (double R : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        SCOPED_TRACE(R);
        double best = -1.0;
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 20; ++j)
                best = std::max(best, discord_closed(canonical_params(ApparatusParams::make(R, i / 20.0, j / 20.0))).D);
        const double corner = std::max(discord_closed(canonical_params(ApparatusParams::make(R, 0.0, 1.0))).D,
                                       discord_closed(canonical_params(ApparatusParams::make(R, 1.0, 0.0))).D);
        EXPECT_NEAR(best, corner, 1e-12);
    }
}

TEST(OptimalMeasurementRegion, Examples) {
    EXPECT_EQ(optimal_measurement_region(ApparatusParams::make(1.0 / 3, 1.0, 0.0)), Branch::degenerate);
    EXPECT_EQ(optimal_measurement_region(ApparatusParams::make(1.0, 1.0, 0.0)), Branch::degenerate);
    EXPECT_EQ(optimal_measurement_region(ApparatusParams::make(0.9, 0.2, 0.0)), Branch::Z);
    EXPECT_EQ(optimal_measurement_region(ApparatusParams::make(0.5, 0.5, 0.0)), Branch::X);
}

TEST(OptimalMeasurementRegion, AgreesWithCanonicalDiagnostics) {
    Gen g(38);
    for (int n = 0; n < 1000; ++n) {
        const auto a = g.apparatus();
        const auto d = discord_diagnostics(canonical_params(a));
        EXPECT_NEAR(d.u, a.kappa_h() * a.R() + a.kappa_v() * a.T(), 1e-15);
        EXPECT_NEAR(d.v, std::abs(2 * a.R() - 1), 1e-15);
    }
    // Werner and Werner-like lines at kv = 0.
    for (int j = 0; j <= 100; ++j) {
        const double k = j / 100.0;
        const double up = 1.0 / (2.0 - k), lo = 1.0 / (2.0 + k);
        EXPECT_LE(std::abs(k * up - std::abs(2 * up - 1)), 1e-12);
        EXPECT_LE(std::abs(k * lo - std::abs(2 * lo - 1)), 1e-12);
    }
}

TEST(CorrelationReport, Examples) {
    const auto bell = correlation_report(bell_psi_plus());
    EXPECT_NEAR(bell.S_sp, 0.0, 1e-14);
    EXPECT_NEAR(bell.I, 2.0, 1e-14);
    EXPECT_NEAR(bell.J, 1.0, 1e-15);
    EXPECT_NEAR(bell.D, 1.0, 1e-15);
    EXPECT_EQ(bell.C, 1.0);
    EXPECT_EQ(bell.E, 1.0);

    const auto mixed = correlation_report(DensityMatrix::maximally_mixed());
    EXPECT_NEAR(mixed.S_sp, 2.0, 1e-15);
    for (double x : {mixed.I, mixed.J, mixed.D, mixed.C, mixed.E}) EXPECT_NEAR(x, 0.0, 1e-15);

    const auto third = correlation_report(prepared_state(1.0 / 3));
    EXPECT_NEAR(third.I, kI13, 1e-14);
    EXPECT_NEAR(third.D, 1.0 / 3, 1e-15);
    EXPECT_NEAR(third.J, kJ13, 1e-15);
    EXPECT_EQ(third.C, 0.0);
}

TEST(CorrelationReport, RejectsGeneralStates) {
    Gen g(39);
    EXPECT_THROW((void)correlation_report(g.state<4>()), Error);
}

} // namespace
} // namespace qadv
