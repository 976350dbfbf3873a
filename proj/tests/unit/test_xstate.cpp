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
#include <numbers>

#include "qadv/correlations.hpp"
#include "qadv/oracles.hpp"
#include "qadv/xstate.hpp"
#include "support/generators.hpp"

namespace qadv {
namespace {

using testing::Gen;
using testing::kPropertyCases;

constexpr double kEof05 = 0.354578902665269884;  // h((1 + sqrt(0.75))/2)
constexpr double kInvE = 0.367879441171442322;   // e^-1
constexpr double kInvE10 = 4.53999297624848515e-5; // e^-10

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidConfig; // sentinel: no throw
}

TEST(XStateParams, ValidatesRanges) {
    EXPECT_EQ(code_of([] { (void)XStateParams::make(0.6, 0.0, 0.0); }), Errc::InvalidParams);
    EXPECT_EQ(code_of([] { (void)XStateParams::make(0.2, 0.3, 0.0); }), Errc::InvalidParams);
    EXPECT_EQ(code_of([] { (void)XStateParams::make(0.4, 0.0, 0.2); }), Errc::InvalidParams);
    EXPECT_EQ(code_of([] { (void)XStateParams::make(0.2, -0.1, 0.0); }), Errc::InvalidParams);
    EXPECT_EQ(code_of([] { (void)ApparatusParams::make(1.1, 0.0, 0.0); }), Errc::InvalidParams);
    EXPECT_EQ(code_of([] { (void)ApparatusParams::make(0.5, -0.1, 0.0); }), Errc::InvalidParams);
    EXPECT_EQ(code_of([] { (void)ApparatusParams::make(0.5, 0.0, 2.0); }), Errc::InvalidParams);
    // Rounding slack on the boundary is absorbed.
    const auto p = XStateParams::make(0.5 + 1e-14, 0.5 + 1e-14, 0.0);
    EXPECT_EQ(p.a(), 0.5);
    EXPECT_EQ(p.w(), 0.5);
}

TEST(Assemble, Examples) {
    EXPECT_LE(max_abs_diff(assemble(XStateParams::make(0.5, 0.5, 0.0)).matrix(), bell_psi_plus().matrix()), 0.0);
    EXPECT_LE(max_abs_diff(assemble(XStateParams::make(0.25, 0.0, 0.0)).matrix(), Mat4::identity() * 0.25), 0.0);
    EXPECT_LE(max_abs_diff(assemble(XStateParams::make(1.0 / 6, 1.0 / 6, 0.0)).matrix(),
                           prepared_state(1.0 / 3).matrix()),
              1e-16);
}

TEST(ApparatusState, SignsAsPrinted) {
    const auto rho = apparatus_state(ApparatusParams::make(0.6, 0.5, 0.25));
    EXPECT_NEAR(rho(0, 0).real(), 0.3, 1e-16);
    EXPECT_NEAR(rho(1, 1).real(), 0.2, 1e-16);
    EXPECT_EQ(rho(0, 3), cplx(0.0, -0.15));
    EXPECT_EQ(rho(3, 0), cplx(0.0, 0.15));
    EXPECT_EQ(rho(1, 2), cplx(0.0, -0.05));
    EXPECT_EQ(rho(2, 1), cplx(0.0, 0.05));
}

TEST(ApparatusState, Examples) {
    const auto bell = apparatus_state(ApparatusParams::make(1.0, 1.0, 0.0));
    EXPECT_DOUBLE_EQ(concurrence(canonicalize(bell)), 1.0);
    const auto t = apparatus_state(ApparatusParams::make(0.0, 0.7, 0.0));
    EXPECT_LE(max_abs_diff(t.matrix(), Mat4::diagonal({0.0, 0.5, 0.5, 0.0})), 0.0);
    EXPECT_NEAR(correlation_report(t).D, 0.0, 1e-15);
    EXPECT_LE(max_abs_diff(apparatus_state(ApparatusParams::make(0.5, 0.0, 0.0)).matrix(), Mat4::identity() * 0.25),
              0.0);
}

TEST(Canonicalize, ApparatusClosedForm) {
    Gen g(21);
    for (int n = 0; n < kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto a = g.apparatus();
        const auto p = canonicalize(apparatus_state(a));
        EXPECT_NEAR(p.a(), a.R() / 2, 1e-12);
        EXPECT_NEAR(p.w(), a.R() * a.kappa_h() / 2, 1e-12);
        EXPECT_NEAR(p.z(), a.T() * a.kappa_v() / 2, 1e-12);
    }
}

TEST(Canonicalize, RoundTrip) {
    Gen g(22);
    for (int n = 0; n < kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto q = canonicalize(assemble(p));
        EXPECT_NEAR(q.a(), p.a(), 1e-15);
        EXPECT_NEAR(q.w(), p.w(), 1e-15);
        EXPECT_NEAR(q.z(), p.z(), 1e-15);
    }
    const auto bell = canonicalize(bell_psi_plus());
    EXPECT_EQ(bell.a(), 0.5);
    EXPECT_EQ(bell.w(), 0.5);
    EXPECT_EQ(bell.z(), 0.0);
}

TEST(Canonicalize, RotationRealizesCanonicalForm) {
    Gen g(23);
    for (int n = 0; n < kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto rho = testing::phased(p, g.angle(), g.angle());
        const auto [us, up] = canonical_rotation(rho);
        const auto rotated = apply_local(rho, us, up);
        EXPECT_LE(max_abs_diff(rotated.matrix(), assemble(p).matrix()), 1e-15);
    }
}

TEST(Canonicalize, ApparatusRotationIsQuarterTurnOnPolarization) {
    // For kv = 0 the rotation is exp(i pi/4 sZ) on s and identity on p.
    const auto [us, up] = canonical_rotation(apparatus_state(ApparatusParams::make(0.7, 0.4, 0.0)));
    EXPECT_LE(max_abs_diff(us.matrix(), LocalUnitary::z_phase(std::numbers::pi / 2).matrix()), 1e-15);
    EXPECT_LE(max_abs_diff(up.matrix(), Mat2::identity()), 1e-15);
}

TEST(Canonicalize, PreservesCorrelations) {
    Gen g(24);
    for (int n = 0; n < 50; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto rho = testing::phased(p, g.angle(), g.angle());
        const auto canon = assemble(canonicalize(rho));
        EXPECT_NEAR(mutual_information(rho), mutual_information(canon), 1e-10);
        EXPECT_NEAR(discord_brute(rho, {37, 72, 1e-7}).D, discord_brute(canon, {37, 72, 1e-7}).D, 1e-10);
        EXPECT_NEAR(oracle::spin_flip_concurrence(rho.matrix()), oracle::spin_flip_concurrence(canon.matrix()), 1e-10);
    }
}

TEST(Canonicalize, RejectsNonXAndAsymmetric) {
    Mat4 m = Mat4::identity() * 0.25;
    m(0, 1) = m(1, 0) = 0.01;
    EXPECT_EQ(code_of([&] { (void)canonicalize(DensityMatrix::from_matrix(m)); }), Errc::NotXState);
    const auto asym = DensityMatrix::from_matrix(Mat4::diagonal({0.4, 0.1, 0.2, 0.3}));
    EXPECT_EQ(code_of([&] { (void)canonicalize(asym); }), Errc::NotSymmetric);
}

TEST(KappaFromDelay, Values) {
    EXPECT_EQ(kappa_from_delay(0.0, 3.0), 1.0);
    EXPECT_NEAR(kappa_from_delay(2.0, 2.0), kInvE, 1e-16);
    EXPECT_NEAR(kappa_from_delay(20.0, 2.0), kInvE10, 1e-19);
    EXPECT_EQ(code_of([] { (void)kappa_from_delay(-1.0, 1.0); }), Errc::InvalidTime);
    EXPECT_EQ(code_of([] { (void)kappa_from_delay(1.0, 0.0); }), Errc::InvalidTime);
}

TEST(Concurrence, Examples) {
    EXPECT_EQ(concurrence(XStateParams::make(0.5, 0.5, 0.0)), 1.0);
    EXPECT_EQ(concurrence(XStateParams::make(1.0 / 6, 1.0 / 6, 0.0)), 0.0);
    EXPECT_EQ(concurrence(ApparatusParams::make(1.0 / 3, 1.0, 0.0)), 0.0);
    EXPECT_NEAR(concurrence(XStateParams::make(0.1, 0.05, 0.35)), 0.5, 1e-15);
}

TEST(Concurrence, ClampsWhenCoherencesAreSmall) {
    Gen g(25);
    for (int n = 0; n < kPropertyCases; ++n) {
        const double a = g.uniform(0.0, 0.5), b = 0.5 - a;
        const auto p = XStateParams::make(a, g.uniform(0.0, std::min(a, b)), g.uniform(0.0, std::min(a, b)));
        EXPECT_EQ(concurrence(p), 0.0);
    }
}

TEST(Concurrence, ApparatusFormMatchesXStateForm) {
    Gen g(26);
    for (int n = 0; n < kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto a = g.apparatus();
        EXPECT_NEAR(concurrence(a), concurrence(canonical_params(a)), 1e-15);
    }
}

TEST(Concurrence, MatchesSpinFlipOracle) {
    Gen g(27);
    for (int n = 0; n < kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        const auto rho = testing::phased(p, g.angle(), g.angle());
        EXPECT_NEAR(concurrence(canonicalize(rho)), oracle::spin_flip_concurrence(rho.matrix()), 1e-9);
    }
}

TEST(Concurrence, GridMonotonicity) {
    // Non-decreasing in kappa_h at fixed R and in R at fixed kappa_h (kv = 0).
    constexpr int n = 101;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
            const double R = i / (n - 1.0), k = j / (n - 1.0), k2 = (j + 1) / (n - 1.0);
            EXPECT_LE(concurrence(ApparatusParams::make(R, k, 0.0)), concurrence(ApparatusParams::make(R, k2, 0.0)));
            EXPECT_LE(concurrence(ApparatusParams::make(k, R, 0.0)), concurrence(ApparatusParams::make(k2, R, 0.0)));
        }
}

TEST(EntanglementOfFormation, Values) {
    EXPECT_EQ(entanglement_of_formation(0.0), 0.0);
    EXPECT_EQ(entanglement_of_formation(1.0), 1.0);
    EXPECT_NEAR(entanglement_of_formation(0.5), kEof05, 1e-15);
    EXPECT_EQ(code_of([] { (void)entanglement_of_formation(1.5); }), Errc::OutOfRange);
    double prev = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double e = entanglement_of_formation(i / 1000.0);
        EXPECT_GT(e, prev);
        prev = e;
    }
}

TEST(PreparedState, Examples) {
    EXPECT_LE(max_abs_diff(prepared_state(1.0).matrix(), bell_psi_plus().matrix()), 0.0);
    EXPECT_LE(max_abs_diff(prepared_state(0.0).matrix(), Mat4::diagonal({0.0, 0.5, 0.5, 0.0})), 0.0);
    const auto ev = prepared_state(1.0 / 3).eigenvalues();
    EXPECT_NEAR(ev[0], 1.0 / 3, 1e-15);
    EXPECT_NEAR(ev[1], 1.0 / 3, 1e-15);
    EXPECT_NEAR(ev[2], 1.0 / 3, 1e-15);
    EXPECT_NEAR(ev[3], 0.0, 1e-15);
    EXPECT_EQ(code_of([] { (void)prepared_state(-0.1); }), Errc::InvalidParams);
}

TEST(PreparedState, IsRotatedApparatusState) {
    for (int i = 0; i <= 100; ++i) {
        const double R = i / 100.0;
        const auto src = apparatus_state(ApparatusParams::make(R, 1.0, 0.0));
        const auto [us, up] = canonical_rotation(src);
        EXPECT_LE(max_abs_diff(apply_local(src, us, up).matrix(), prepared_state(R).matrix()), 1e-15);
    }
}

TEST(XStateParams, EigenvaluesMatchJacobi) {
    Gen g(28);
    for (int n = 0; n < kPropertyCases; ++n) {
        SCOPED_TRACE(n);
        const auto p = g.x_state();
        auto closed = p.eigenvalues();
        std::sort(closed.begin(), closed.end(), std::greater<>());
        const auto ev = assemble(p).eigenvalues();
        for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(closed[i], ev[i], 1e-14);
    }
}

} // namespace
} // namespace qadv
