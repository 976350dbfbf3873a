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
 * @file transactions.hpp
 * @brief Finite-shot simulation of encode/decode transactions.
 *
 * Each shot draws k from the encoding distribution, prepares rho_k from the
 * prepared source state, and lets Bob measure. Under the joint strategy Bob
 * runs the PBS/HWP circuit (CNOT with polarization as control, then a
 * Hadamard on polarization) and reads one of the four detectors; under the
 * local strategy he measures each qubit separately along fixed directions.
 * Outcomes map to an estimate k* through a decoder table fixed before the
 * run: the outcome's most probable k given d and R. Joint-strategy ties are
 * broken by the per-bit posteriors, then by the circuit's own click table.
 *
 * Shots are split in fixed-size batches, each with its own generator seeded
 * from (seed, batch index), so results are identical for any thread count.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <thread>
#include <variant>
#include <vector>

#include "qadv/protocol.hpp"
#include "qadv/qcore.hpp"
#include "qadv/xstate.hpp"

namespace qadv {

struct JointStrategy {};

struct LocalStrategy {
    MeasurementDirection m_s = MeasurementDirection::z_axis();
    MeasurementDirection m_p = MeasurementDirection::z_axis();
};

using Strategy = std::variant<JointStrategy, LocalStrategy>;

struct TransactionConfig {
    double R = 1.0;
    EncodingDistribution d = EncodingDistribution::uniform();
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    Strategy strategy = JointStrategy{};
    unsigned threads = 1;
};

inline constexpr std::uint64_t kShotBatch = 8192;

using Counts4x4 = std::array<std::array<std::uint64_t, 4>, 4>;

struct EstimationStats {
    double success_rate = 0.0;
    std::array<double, 2> per_bit_accuracy{}; ///< (b1, b2)
    double empirical_mutual_info = 0.0;
    Counts4x4 counts{};                        ///< counts[k-1][k*-1]
    std::array<std::uint64_t, 4> outcome_counts{};
    std::uint64_t shots = 0;
};

/// CNOT (s controls p) followed by a Hadamard on s.
inline Mat4 decoder_unitary() {
    Mat4 cnot;
    cnot(0, 0) = cnot(1, 1) = 1.0;
    cnot(2, 3) = cnot(3, 2) = 1.0;
    return kron(LocalUnitary::hadamard().matrix(), Mat2::identity()) * cnot;
}

inline DensityMatrix decode_circuit(const DensityMatrix& rho) {
    const Mat4 u = decoder_unitary();
    return detail::make_state_unchecked(u * rho.matrix() * u.adjoint());
}

/// Click probabilities of detectors D_h0, D_h1, D_v0, D_v1.
inline std::array<double, 4> detector_probabilities(const DensityMatrix& rho_out) {
    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) p[i] = std::max(0.0, rho_out(i, i).real());
    return p;
}

/// Bits read off each detector when the source is the Bell state: the click
/// index is 2 s + p with s = b2 and p = b1.
inline constexpr std::array<int, 4> kCircuitDecoderTable{1, 3, 2, 4};

/// P(outcome | k) under a strategy, rows k = 1..4. Local outcomes are
/// indexed 2 * [s outcome is -] + [p outcome is -].
inline std::array<std::array<double, 4>, 4> outcome_likelihoods(double R, const Strategy& strategy) {
    const auto members = encoded_states(prepared_state(R));
    std::array<std::array<double, 4>, 4> L{};
    for (std::size_t k = 0; k < 4; ++k) {
        if (std::holds_alternative<JointStrategy>(strategy)) {
            L[k] = detector_probabilities(decode_circuit(members[k]));
        } else {
            const auto& loc = std::get<LocalStrategy>(strategy);
            for (std::size_t os = 0; os < 2; ++os)
                for (std::size_t op = 0; op < 2; ++op) {
                    const Mat4 proj = kron(loc.m_s.projector(kOutcomes[os]), loc.m_p.projector(kOutcomes[op]));
                    L[k][2 * os + op] = std::max(0.0, (proj * members[k].matrix()).trace().real());
                }
        }
    }
    return L;
}

struct TieBreak {
    bool bit_posteriors = false;      ///< prefer the larger P(b1 | o), then P(b2 | o)
    std::array<int, 4> preferred{};   ///< then this k per outcome (0 = none)
};

/// Most probable k (1..4) for each outcome: argmax_k p_k P(o | k). Ties
/// within 1e-12 are broken by `tie` and finally toward the lowest k.
inline std::array<int, 4> map_decoder_table(const EncodingDistribution& d,
                                            const std::array<std::array<double, 4>, 4>& L,
                                            const TieBreak& tie = {}) {
    constexpr double eps = 1e-12;
    std::array<int, 4> table{};
    for (std::size_t o = 0; o < 4; ++o) {
        auto joint = [&](int k) { return d.p(k) * L[k - 1][o]; };
        double best = -1.0;
        for (int k = 1; k <= 4; ++k) best = std::max(best, joint(k));
        std::array<bool, 4> cand{};
        for (int k = 1; k <= 4; ++k) cand[k - 1] = joint(k) >= best - eps;

        if (tie.bit_posteriors) {
            std::array<std::array<double, 2>, 2> bit{}; // bit[i][value]: unnormalized P(b_i = value, o)
            for (int k = 1; k <= 4; ++k) {
                const auto b = BitPair::from_index(k);
                bit[0][b.b1] += joint(k);
                bit[1][b.b2] += joint(k);
            }
            for (std::size_t i = 0; i < 2; ++i) {
                double top = -1.0;
                for (int k = 1; k <= 4; ++k)
                    if (cand[k - 1]) {
                        const auto b = BitPair::from_index(k);
                        top = std::max(top, bit[i][i == 0 ? b.b1 : b.b2]);
                    }
                for (int k = 1; k <= 4; ++k) {
                    const auto b = BitPair::from_index(k);
                    if (cand[k - 1] && bit[i][i == 0 ? b.b1 : b.b2] < top - eps) cand[k - 1] = false;
                }
            }
        }
        const int pref = tie.preferred[o];
        if (pref >= 1 && cand[pref - 1]) {
            table[o] = pref;
            continue;
        }
        for (int k = 1; k <= 4; ++k)
            if (cand[k - 1]) {
                table[o] = k;
                break;
            }
    }
    return table;
}

/// Joint: bit posteriors, then the circuit's own table. Local: lowest k.
inline TieBreak default_tie_break(const Strategy& strategy) {
    if (std::holds_alternative<JointStrategy>(strategy)) return {true, kCircuitDecoderTable};
    return {};
}

inline std::array<int, 4> decoder_table(const EncodingDistribution& d, double R, const Strategy& strategy) {
    return map_decoder_table(d, outcome_likelihoods(R, strategy), default_tie_break(strategy));
}

struct ExpectedAccuracy {
    double success_rate;
    std::array<double, 2> per_bit_accuracy;
};

/// Exact (infinite-shot) accuracies of decoder_table().
inline ExpectedAccuracy expected_accuracy(const EncodingDistribution& d, double R, const Strategy& strategy) {
    const auto L = outcome_likelihoods(R, strategy);
    const auto table = map_decoder_table(d, L, default_tie_break(strategy));
    ExpectedAccuracy e{};
    for (int k = 1; k <= 4; ++k)
        for (std::size_t o = 0; o < 4; ++o) {
            const double w = d.p(k) * L[k - 1][o];
            const auto a = BitPair::from_index(k), g = BitPair::from_index(table[o]);
            if (k == table[o]) e.success_rate += w;
            if (a.b1 == g.b1) e.per_bit_accuracy[0] += w;
            if (a.b2 == g.b2) e.per_bit_accuracy[1] += w;
        }
    return e;
}

namespace detail {

/// SplitMix64 finalizer; derives independent per-batch seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform in [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline std::size_t sample_index(const std::array<double, 4>& cumulative, double u) {
    for (std::size_t i = 0; i < 3; ++i)
        if (u < cumulative[i]) return i;
    return 3;
}

inline std::array<double, 4> cumulative(const std::array<double, 4>& p) {
    std::array<double, 4> c{};
    double total = p[0] + p[1] + p[2] + p[3];
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        acc += p[i];
        c[i] = acc / total;
    }
    // Rounding must not leave room for a zero-probability tail entry.
    std::size_t last = 3;
    while (last > 0 && p[last] <= 0.0) --last;
    for (std::size_t i = last; i < 4; ++i) c[i] = 1.0;
    return c;
}

struct BatchTally {
    Counts4x4 counts{};
    std::array<std::uint64_t, 4> outcomes{};
};

} // namespace detail

/// Plug-in mutual information (bits) of a joint count table.
inline double empirical_mutual_information(const Counts4x4& counts) {
    double n = 0.0;
    std::array<double, 4> row{}, col{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double c = static_cast<double>(counts[i][j]);
            row[i] += c;
            col[j] += c;
            n += c;
        }
    if (n == 0.0) return 0.0;
    double mi = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double c = static_cast<double>(counts[i][j]);
            if (c > 0.0) mi += c / n * std::log2(c * n / (row[i] * col[j]));
        }
    return std::max(0.0, mi);
}

inline EstimationStats run_transactions(const TransactionConfig& c) {
    if (c.shots < 1) throw Error(Errc::InvalidConfig, "shots must be >= 1");
    if (!(c.R >= 0.0 && c.R <= 1.0)) throw Error(Errc::InvalidConfig, "R outside [0, 1]");

    const auto L = outcome_likelihoods(c.R, c.strategy);
    const auto table = map_decoder_table(c.d, L, default_tie_break(c.strategy));
    const auto k_cdf = detail::cumulative(c.d.probabilities());
    std::array<std::array<double, 4>, 4> o_cdf{};
    for (std::size_t k = 0; k < 4; ++k) {
        // Outcome rows of encodings with p_k = 0 are never sampled.
        const double total = L[k][0] + L[k][1] + L[k][2] + L[k][3];
        o_cdf[k] = total > 0.0 ? detail::cumulative(L[k]) : std::array<double, 4>{1.0, 1.0, 1.0, 1.0};
    }

    const std::uint64_t n_batches = (c.shots + kShotBatch - 1) / kShotBatch;
    std::vector<detail::BatchTally> tallies(n_batches);

    auto run_batch = [&](std::uint64_t b) {
        std::mt19937_64 gen(detail::splitmix64(c.seed ^ detail::splitmix64(b + 1)));
        const std::uint64_t begin = b * kShotBatch;
        const std::uint64_t end = std::min(c.shots, begin + kShotBatch);
        auto& t = tallies[b];
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::size_t k = detail::sample_index(k_cdf, detail::unit_uniform(gen));
            const std::size_t o = detail::sample_index(o_cdf[k], detail::unit_uniform(gen));
            ++t.outcomes[o];
            ++t.counts[k][static_cast<std::size_t>(table[o] - 1)];
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(c.threads, static_cast<unsigned>(n_batches)));
    if (threads == 1) {
        for (std::uint64_t b = 0; b < n_batches; ++b) run_batch(b);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::uint64_t b = t; b < n_batches; b += threads) run_batch(b);
            });
    }

    EstimationStats s;
    s.shots = c.shots;
    for (const auto& t : tallies)
        for (std::size_t i = 0; i < 4; ++i) {
            s.outcome_counts[i] += t.outcomes[i];
            for (std::size_t j = 0; j < 4; ++j) s.counts[i][j] += t.counts[i][j];
        }

    std::uint64_t hit = 0, hit_b1 = 0, hit_b2 = 0;
    for (int k = 1; k <= 4; ++k)
        for (int ks = 1; ks <= 4; ++ks) {
            const auto n = s.counts[k - 1][ks - 1];
            const BitPair a = BitPair::from_index(k), e = BitPair::from_index(ks);
            if (k == ks) hit += n;
            if (a.b1 == e.b1) hit_b1 += n;
            if (a.b2 == e.b2) hit_b2 += n;
        }
    const double n = static_cast<double>(c.shots);
    s.success_rate = static_cast<double>(hit) / n;
    s.per_bit_accuracy = {static_cast<double>(hit_b1) / n, static_cast<double>(hit_b2) / n};
    s.empirical_mutual_info = empirical_mutual_information(s.counts);
    return s;
}

} // namespace qadv
