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

// Grid-plus-golden-section searches over the Bloch sphere and over boxes.
#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "qadv/qcore.hpp"

namespace qadv {

struct ScalarOptimum {
    double x;
    double value;
};

/// Golden-section minimum of f on [lo, hi], bracket shrunk below tol.
template <class F>
ScalarOptimum golden_section_minimize(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    // Endpoints are included so a monotone f converges onto the boundary.
    ScalarOptimum best{c, fc};
    if (fd < best.value) best = {d, fd};
    for (double x : {lo, hi, 0.5 * (a + b)}) {
        const double fx = f(x);
        if (fx < best.value) best = {x, fx};
    }
    return best;
}

struct SphereGrid {
    int n_theta = 181;
    int n_phi = 360;
    double angle_tol = 1e-6;
};

struct SphereOptimum {
    MeasurementDirection direction;
    double value;
};

/// Minimum of f(MeasurementDirection) over the unit sphere: uniform
/// (theta, phi) grid, then alternating golden-section refinement in theta and
/// phi inside one grid cell of the best point.
template <class F>
SphereOptimum minimize_on_sphere(F&& f, const SphereGrid& grid) {
    const double dtheta = std::numbers::pi / (grid.n_theta - 1);
    const double dphi = 2.0 * std::numbers::pi / grid.n_phi;

    double best_theta = 0.0, best_phi = 0.0;
    double best = f(MeasurementDirection::z_axis());
    for (int i = 1; i < grid.n_theta - 1; ++i) {
        const double theta = i * dtheta;
        for (int j = 0; j < grid.n_phi; ++j) {
            const double phi = j * dphi;
            const double v = f(MeasurementDirection::from_angles(theta, phi));
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }
    {
        const double v = f(MeasurementDirection::from_angles(std::numbers::pi, 0.0));
        if (v < best) {
            best = v;
            best_theta = std::numbers::pi;
            best_phi = 0.0;
        }
    }

    auto at = [&f](double theta, double phi) {
        return f(MeasurementDirection::from_any_angles(theta, phi));
    };
    for (int round = 0; round < 20; ++round) {
        const auto t = golden_section_minimize(
            [&](double th) { return at(th, best_phi); }, best_theta - dtheta, best_theta + dtheta,
            grid.angle_tol);
        double moved = 0.0;
        if (t.value < best) {
            moved = std::abs(t.x - best_theta);
            best = t.value;
            best_theta = t.x;
        }
        const auto p = golden_section_minimize(
            [&](double ph) { return at(best_theta, ph); }, best_phi - dphi, best_phi + dphi,
            grid.angle_tol);
        if (p.value < best) {
            moved = std::max(moved, std::abs(p.x - best_phi));
            best = p.value;
            best_phi = p.x;
        }
        if (moved < grid.angle_tol) break;
    }
    return {MeasurementDirection::from_any_angles(best_theta, best_phi), best};
}

} // namespace qadv
