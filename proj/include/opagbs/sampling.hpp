/*
 * Copyright 2026 The opagbs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "opagbs/gaussian_core.hpp"

namespace opagbs {

inline constexpr std::size_t kMaxPatternPhotons = 20;
inline constexpr std::size_t kMaxEnumerationModes = 6;
inline constexpr std::size_t kMaxEnumerationTotal = 8;
inline constexpr std::size_t kMaxFockCutoff = 25;

/// Photon counts per output mode. The overflow pattern stands for all events
/// outside an enumerated distribution.
struct PhotonPattern {
    std::vector<unsigned> counts;
    bool overflow = false;

    static PhotonPattern overflow_marker(std::size_t modes);

    std::size_t total() const;
    /// Semicolon-joined counts, or "overflow".
    std::string label() const;

    bool operator==(const PhotonPattern&) const = default;
};

/**
 * Matrices entering the pattern probability
 * p(n) = haf(W~(n)) / (sqrt(det(I + G)) prod n_k!).
 *
 * G is the normally ordered moment matrix in the (a, a^dag) basis,
 * (T sigma T^dag - I) / 2, and W = [[0, I], [I, 0]] G (G + I)^-1.
 */
struct WMatrices {
    Eigen::MatrixXcd g;
    Eigen::MatrixXcd w;
    double normalization = 1.0;
    std::size_t modes = 0;
};

WMatrices build_w(const CovarianceState& state);

/// W~: index k and k + m each repeated n_k times.
Eigen::MatrixXcd expand_w(const WMatrices& w, const PhotonPattern& pattern);

double pattern_probability(const WMatrices& w, const PhotonPattern& pattern);

struct Distribution {
    std::vector<PhotonPattern> patterns;
    std::vector<double> probabilities;
    /// 1 - sum of probabilities.
    double residual = 0.0;
    std::size_t modes = 0;
};

/// Every pattern with total <= max_total, ordered by total and then
/// lexicographically by counts.
Distribution enumerate_distribution(const WMatrices& w, std::size_t max_total);

/**
 * Categorical draws from a distribution, residual mass mapped to the
 * overflow pattern. Uses std::mt19937_64 seeded with `seed`; each draw takes
 * one 64-bit output x and uses u = (x >> 11) * 2^-53.
 */
std::vector<PhotonPattern> sample_patterns(const Distribution& dist, std::size_t count,
                                           std::uint64_t seed);

/// CSV with header "pattern,probability".
void write_distribution_csv(std::ostream& out, const Distribution& dist);

struct FockDistribution {
    /// p(i, j) for photon numbers i, j <= cutoff.
    Eigen::MatrixXd p;
    /// Upper bound on the probability of either mode exceeding the cutoff.
    double tail_bound = 0.0;
};

/// Two-mode squeezed vacuum built in a truncated Fock basis, then binomial
/// loss with transmissivity eta on each mode.
FockDistribution fock_oracle_two_mode(double r, double eta, std::size_t cutoff);

}  // namespace opagbs
