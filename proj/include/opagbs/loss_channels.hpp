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
#include <vector>

#include "opagbs/gaussian_core.hpp"
#include "opagbs/opa_network.hpp"

namespace opagbs {

/**
 * Gaussian channel sigma -> X sigma X^T + Y acting on XXPP covariances.
 *
 * Y is in vacuum units (vacuum sigma = I), so a pure loss of transmissivity
 * eta has Y = (1 - eta) I.
 */
class GaussianChannel {
  public:
    GaussianChannel(RealMatrix x, RealMatrix y);

    static GaussianChannel identity(std::size_t n);
    /// (S, 0).
    static GaussianChannel from_symplectic(const SymplecticMatrix& s);

    std::size_t modes() const { return n_; }
    const RealMatrix& x() const { return x_; }
    const RealMatrix& y() const { return y_; }

  private:
    std::size_t n_;
    RealMatrix x_;
    RealMatrix y_;
};

/// Smallest eigenvalue of the Hermitian matrix Y + i Omega - i X Omega X^T.
Real cp_min_eigenvalue(const GaussianChannel& c);

/// Complete positivity with eigenvalue floor -tol.
bool is_completely_positive(const GaussianChannel& c, double tol = 1e-10);

/// Independent pure loss per mode; eta[i] is the covariance transmissivity of mode i.
GaussianChannel loss_channel(std::size_t n, const std::vector<double>& eta);
GaussianChannel loss_channel(std::size_t n, double eta);
/// Working-precision transmissivity, e.g. an exact product of two others.
GaussianChannel loss_channel(std::size_t n, const Real& eta);

/// Applies first, then second: (X2 X1, Y2 + X2 Y1 X2^T).
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);

CovarianceState apply_channel(const GaussianChannel& c, const CovarianceState& state);

/// Loss channel of the beam-splitter layer following the given OPA layer.
GaussianChannel layer_loss_channel(const NetworkSpec& spec, std::size_t layer);

/// Whole network as one channel: OPA layer, then its loss layer, for layers 1..d.
GaussianChannel lossy_network_channel(const NetworkSpec& spec);

/// apply_channel(lossy_network_channel(spec), input).
CovarianceState propagate_lossy(const NetworkSpec& spec, const CovarianceState& input);

// ---------------------------------------------------------------------------
// Operator-moment engine.
//
// Works in the complex basis A = (a, a^dag) and carries the environment
// (f, f^dag) of every beam splitter explicitly. Two consecutive layers k, k+1
// with their beam splitters map
//     A -> V A + U F_k + Q F_{k+1}
// and the output second moments follow from the vacuum expectation values of
// the input and environment operators. Used to cross-check the channel engine.

/// Per-block maps of two consecutive OPA layers with their beam splitters.
struct ComplexLayerMaps {
    ComplexMatrix v;  ///< action on the system operators
    ComplexMatrix u;  ///< action on the environment of the first beam-splitter layer
    ComplexMatrix q;  ///< action on the environment of the second beam-splitter layer
};

/// Complex-basis matrix of one OPA layer, built from the cosh / e^{i theta} sinh blocks.
ComplexMatrix complex_layer_matrix(const NetworkSpec& spec, std::size_t layer);

/// Maps for layers (2 block - 1, 2 block), block counted from 1; depth must be even.
ComplexLayerMaps two_layer_block(const NetworkSpec& spec, std::size_t block);

/// ||V K V^T + U K U^T + Q K Q^T - K||_F with K the commutator matrix [[0, I], [-I, 0]].
Real commutator_residual(const ComplexLayerMaps& maps);

/// Output covariance for vacuum input and vacuum environment. Odd depths get a
/// virtual identity layer appended.
CovarianceState operator_moment_covariance(const NetworkSpec& spec);

// ---------------------------------------------------------------------------
// Ordering comparisons of loss with passive and active elements.

struct ChannelOrderingComparison {
    GaussianChannel element_then_loss;
    GaussianChannel loss_then_element;
    Real max_abs_x_difference;
    Real max_abs_y_difference;

    bool equal(double tol = 1e-12) const {
        return max_abs_x_difference <= Real(tol) && max_abs_y_difference <= Real(tol);
    }
};

struct CommutationReport {
    ChannelOrderingComparison beam_splitter;  ///< two modes, uniform loss
    ChannelOrderingComparison squeezer;       ///< single mode, S(r) = diag(e^r, e^-r)
    /// Y_before - Y_after of the squeezer ordering; (1 - eta)(diag(e^2r, e^-2r) - I).
    RealMatrix squeezer_y_delta;
};

/// Two-mode mixing beam splitter [[cos, sin], [-sin, cos]] on x and p alike.
SymplecticMatrix beam_splitter(double theta);
/// Single-mode squeezer diag(e^r, e^-r).
SymplecticMatrix single_mode_squeezer(double r);

ChannelOrderingComparison compare_orderings(const SymplecticMatrix& element, double eta);

CommutationReport commutation_report(double r, double theta_bs, double eta);

}  // namespace opagbs
