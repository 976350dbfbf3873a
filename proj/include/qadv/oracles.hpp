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

// Reference computations that share no code path with the closed forms or
// the Jacobi solver. Used by the test suites and by `qadv verify`.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include <Eigen/Dense>

#include "qadv/qcore.hpp"

namespace qadv::oracle {

template <std::size_t N>
Eigen::Matrix<std::complex<double>, N, N> to_eigen(const Matrix<N>& m) {
    Eigen::Matrix<std::complex<double>, N, N> e;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) e(r, c) = m(r, c);
    return e;
}

/// LAPACK-style Hermitian eigenvalues, sorted descending.
template <std::size_t N>
std::array<double, N> eigenvalues(const Matrix<N>& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, N, N>> es(
        to_eigen(m), Eigen::EigenvaluesOnly);
    std::array<double, N> ev{};
    for (std::size_t i = 0; i < N; ++i) ev[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// Wootters concurrence from the spectrum of rho (sY x sY) rho* (sY x sY).
inline double spin_flip_concurrence(const Mat4& rho) {
    using M4 = Eigen::Matrix4cd;
    const M4 r = to_eigen(rho);
    M4 yy = M4::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const M4 flipped = yy * r.conjugate() * yy;
    Eigen::ComplexEigenSolver<M4> es(r * flipped, false);
    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) l[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

} // namespace qadv::oracle
