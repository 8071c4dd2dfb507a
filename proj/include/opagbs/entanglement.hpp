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

#include <vector>

#include "opagbs/gaussian_core.hpp"
#include "opagbs/opa_network.hpp"

namespace opagbs {

enum class LogBase { Two, E };

/// Partial transpose as the +-1 diagonal flipping the momenta of subsystem B (XXPP).
class PartialTransposeMap {
  public:
    explicit PartialTransposeMap(const Bipartition& partition);

    std::size_t modes() const { return n_; }
    /// Diagonal entries, length 2n.
    const std::vector<int>& signs() const { return signs_; }
    RealMatrix matrix() const;

  private:
    std::size_t n_;
    std::vector<int> signs_;
};

struct NegativityResult {
    double value = 0.0;          ///< logarithmic negativity in the requested base
    std::vector<Real> nu_tilde;  ///< symplectic eigenvalues of the partial transpose, ascending
    Bipartition partition;
};

CovarianceState partial_transpose(const CovarianceState& state, const Bipartition& partition);

/// E_N = sum_k max(0, -log nu~_k). Throws InvalidState for unphysical input.
NegativityResult log_negativity(const CovarianceState& state, const Bipartition& partition,
                                LogBase base = LogBase::Two);

/// One result per partition, in order. Physicality is checked once.
std::vector<NegativityResult> partition_sweep(const CovarianceState& state,
                                              const std::vector<Bipartition>& partitions,
                                              LogBase base = LogBase::Two);

}  // namespace opagbs
