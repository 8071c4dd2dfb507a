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
#include <string>
#include <vector>

#include "opagbs/gaussian_core.hpp"

namespace opagbs {

/// One optical parametric amplifier (two-mode squeezer).
struct OpaSpec {
    double r = 0.0;      ///< squeezing magnitude, >= 0
    double theta = 0.0;  ///< squeezing angle, normalized to [0, 2 pi)

    OpaSpec() = default;
    OpaSpec(double r, double theta);

    friend bool operator==(const OpaSpec&, const OpaSpec&) = default;
};

/**
 * Staggered OPA network on n (even) modes with d layers.
 *
 * Layers are numbered from 1. Odd layers hold n/2 OPAs on mode pairs
 * (1,2), (3,4), ..., even layers hold n/2 - 1 OPAs on (2,3), (4,5), ... and
 * leave modes 1 and n untouched. Every layer is followed by one beam splitter
 * per mode with amplitude transmittance t (covariance transmissivity t^2).
 */
class NetworkSpec {
  public:
    NetworkSpec(std::size_t n, std::size_t depth, std::vector<std::vector<OpaSpec>> opas,
                std::vector<std::vector<double>> transmittance);

    /// Same (r, theta, t) at every position.
    static NetworkSpec uniform(std::size_t n, std::size_t depth, double r, double theta = 0.0,
                               double t = 1.0);

    std::size_t modes() const { return n_; }
    std::size_t depth() const { return depth_; }

    const OpaSpec& opa(std::size_t layer, std::size_t index) const;
    double transmittance(std::size_t layer, std::size_t mode) const;
    const std::vector<OpaSpec>& layer_opas(std::size_t layer) const;
    const std::vector<double>& layer_transmittance(std::size_t layer) const;

    void set_opa(std::size_t layer, std::size_t index, OpaSpec opa);
    void set_transmittance(std::size_t layer, std::size_t mode, double t);

    /// True when every transmittance equals 1.
    bool lossless() const;

    /// Copy with one extra identity layer (r = 0, t = 1) appended.
    NetworkSpec with_identity_layer() const;

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;

  private:
    void check_layer(std::size_t layer) const;

    std::size_t n_;
    std::size_t depth_;
    std::vector<std::vector<OpaSpec>> opas_;
    std::vector<std::vector<double>> transmittance_;
};

/// Number of OPAs in a layer of an n-mode network.
std::size_t opas_in_layer(std::size_t n, std::size_t layer);

/// Zero-based first mode of the index-th OPA of a layer.
std::size_t opa_first_mode(std::size_t layer, std::size_t index);

/// Split of the modes into two non-empty complementary sets (zero-based indices).
class Bipartition {
  public:
    Bipartition(std::size_t n, std::vector<std::size_t> a_modes);

    /// First k modes versus the remaining n - k; the paper-style "(k, n-k)".
    static Bipartition contiguous(std::size_t n, std::size_t k);
    /// Modes 1, 3, 5, ... versus 2, 4, 6, ... (one-based).
    static Bipartition interleaved(std::size_t n);

    std::size_t modes() const { return n_; }
    const std::vector<std::size_t>& a_modes() const { return a_; }
    const std::vector<std::size_t>& b_modes() const { return b_; }

    /// The same cut with A and B exchanged.
    Bipartition swapped() const;

    /// "(k,n-k)" for contiguous cuts, "odd-even" for the interleaved cut,
    /// otherwise "{i,j,...}" listing the one-based A modes.
    std::string label() const;

  private:
    std::size_t n_;
    std::vector<std::size_t> a_;
    std::vector<std::size_t> b_;
};

/// 4x4 XXPP symplectic matrix of a single OPA on (x1, x2, p1, p2).
SymplecticMatrix opa_symplectic(const OpaSpec& spec);

/// Symplectic matrix of layer 1 <= layer <= d.
SymplecticMatrix layer_symplectic(const NetworkSpec& spec, std::size_t layer);

/// R = S^(d) ... S^(2) S^(1).
SymplecticMatrix network_symplectic(const NetworkSpec& spec);

/// sigma -> R sigma R^T; the network must be lossless.
CovarianceState propagate_lossless(const NetworkSpec& spec, const CovarianceState& input);

}  // namespace opagbs
