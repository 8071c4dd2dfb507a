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

#include "opagbs/entanglement.hpp"

#include "opagbs/errors.hpp"

namespace opagbs {

PartialTransposeMap::PartialTransposeMap(const Bipartition& partition)
    : n_(partition.modes()), signs_(2 * partition.modes(), 1) {
    for (std::size_t b : partition.b_modes()) signs_[n_ + b] = -1;
}

RealMatrix PartialTransposeMap::matrix() const {
    const auto dim = static_cast<Eigen::Index>(signs_.size());
    RealMatrix d = RealMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) d(i, i) = signs_[static_cast<std::size_t>(i)];
    return d;
}

CovarianceState partial_transpose(const CovarianceState& state, const Bipartition& partition) {
    if (partition.modes() != state.modes())
        throw InvalidArgument("partial_transpose: partition does not cover the state's modes");
    const CovarianceState xxpp = state.with_ordering(QuadratureOrdering::XXPP);
    const PartialTransposeMap map(partition);
    const auto& signs = map.signs();
    RealMatrix v = xxpp.sigma();
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j)
            if (signs[static_cast<std::size_t>(i)] != signs[static_cast<std::size_t>(j)])
                v(i, j) = -v(i, j);
    return CovarianceState(std::move(v));
}

namespace {

void require_physical(const CovarianceState& state) {
    const auto nus = symplectic_eigenvalues(state);
    if (nus.front() < Real(1) - Real(1e-6))
        throw InvalidState("log_negativity: state violates the uncertainty principle");
}

NegativityResult negativity_unchecked(const CovarianceState& state, const Bipartition& partition,
                                      LogBase base) {
    NegativityResult out{0.0, symplectic_eigenvalues(partial_transpose(state, partition)),
                         partition};
    Real total = 0;
    for (const Real& nu : out.nu_tilde) {
        if (nu >= 1 || abs(nu - 1) <= Real(1e-12)) continue;
        total -= log(nu);
    }
    if (base == LogBase::Two) total /= log(Real(2));
    out.value = static_cast<double>(total);
    return out;
}

}  // namespace

NegativityResult log_negativity(const CovarianceState& state, const Bipartition& partition,
                                LogBase base) {
    if (partition.modes() != state.modes())
        throw InvalidArgument("log_negativity: partition does not cover the state's modes");
    require_physical(state);
    return negativity_unchecked(state, partition, base);
}

std::vector<NegativityResult> partition_sweep(const CovarianceState& state,
                                              const std::vector<Bipartition>& partitions,
                                              LogBase base) {
    for (const auto& p : partitions)
        if (p.modes() != state.modes())
            throw InvalidArgument("partition_sweep: partition " + p.label() +
                                  " does not cover the state's modes");
    require_physical(state);
    std::vector<NegativityResult> out;
    out.reserve(partitions.size());
    for (const auto& p : partitions) out.push_back(negativity_unchecked(state, p, base));
    return out;
}

}  // namespace opagbs
