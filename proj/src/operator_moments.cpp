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

#include <cmath>
#include <vector>

#include "opagbs/errors.hpp"
#include "opagbs/loss_channels.hpp"

namespace opagbs {

namespace {

ComplexMatrix beam_transmission(const NetworkSpec& spec, std::size_t layer) {
    const auto n = static_cast<Eigen::Index>(spec.modes());
    ComplexMatrix m = ComplexMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex t(Real(spec.transmittance(layer, static_cast<std::size_t>(i))), 0);
        m(i, i) = m(n + i, n + i) = t;
    }
    return m;
}

ComplexMatrix beam_reflection(const NetworkSpec& spec, std::size_t layer) {
    const auto n = static_cast<Eigen::Index>(spec.modes());
    ComplexMatrix m = ComplexMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Real t(spec.transmittance(layer, static_cast<std::size_t>(i)));
        const Complex r(sqrt(1 - t * t), 0);
        m(i, i) = m(n + i, n + i) = r;
    }
    return m;
}

// K = [[0, I], [-I, 0]]
ComplexMatrix commutator_matrix(Eigen::Index n) {
    ComplexMatrix k = ComplexMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        k(i, n + i) = Complex(1, 0);
        k(n + i, i) = Complex(-1, 0);
    }
    return k;
}

// Accumulates <(M E)_l (M E)_k> for a block of vacuum operators E = (e, e^dag):
// only <e_x e_x^dag> = 1 survives, so the contribution is sum_x M(l, x) M(k, x + n).
void accumulate_vacuum_moments(ComplexMatrix& moments, const ComplexMatrix& m) {
    const auto n = m.cols() / 2;
    moments += m.leftCols(n) * m.rightCols(n).transpose();
}

}  // namespace

ComplexMatrix complex_layer_matrix(const NetworkSpec& spec, std::size_t layer) {
    const auto& opas = spec.layer_opas(layer);
    const auto n = static_cast<Eigen::Index>(spec.modes());
    ComplexMatrix s = ComplexMatrix::Identity(2 * n, 2 * n);
    for (std::size_t j = 0; j < opas.size(); ++j) {
        const auto a = static_cast<Eigen::Index>(opa_first_mode(layer, j));
        const auto b = a + 1;
        const Real ch = cosh(Real(opas[j].r));
        const Real sh = sinh(Real(opas[j].r));
        const Complex phase(cos(Real(opas[j].theta)), sin(Real(opas[j].theta)));
        const Complex coupling = -phase * sh;
        s(a, a) = s(b, b) = s(n + a, n + a) = s(n + b, n + b) = Complex(ch, 0);
        s(a, n + b) = s(b, n + a) = coupling;
        s(n + a, b) = s(n + b, a) = std::conj(coupling);
    }
    return s;
}

ComplexLayerMaps two_layer_block(const NetworkSpec& spec, std::size_t block) {
    if (spec.depth() % 2 != 0)
        throw InvalidArgument("two_layer_block: depth must be even");
    if (block < 1 || 2 * block > spec.depth())
        throw InvalidArgument("two_layer_block: block index out of range");
    const std::size_t k = 2 * block - 1;
    const ComplexMatrix first = complex_layer_matrix(spec, k);
    const ComplexMatrix second = complex_layer_matrix(spec, k + 1);
    const ComplexMatrix t_k = beam_transmission(spec, k);
    const ComplexMatrix t_next = beam_transmission(spec, k + 1);
    const ComplexMatrix through = t_next * second;
    return {through * t_k * first, through * beam_reflection(spec, k),
            beam_reflection(spec, k + 1)};
}

Real commutator_residual(const ComplexLayerMaps& maps) {
    const ComplexMatrix k = commutator_matrix(maps.v.rows() / 2);
    const ComplexMatrix lhs = maps.v * k * maps.v.transpose() + maps.u * k * maps.u.transpose() +
                              maps.q * k * maps.q.transpose();
    return (lhs - k).norm();
}

CovarianceState operator_moment_covariance(const NetworkSpec& input_spec) {
    const NetworkSpec spec =
        input_spec.depth() % 2 == 0 ? input_spec : input_spec.with_identity_layer();
    const std::size_t blocks = spec.depth() / 2;
    const auto n = static_cast<Eigen::Index>(spec.modes());

    std::vector<ComplexLayerMaps> maps;
    maps.reserve(blocks);
    for (std::size_t b = 1; b <= blocks; ++b) maps.push_back(two_layer_block(spec, b));

    // after[i] = V_m ... V_{i+2}, the propagation of whatever enters at block i + 1.
    std::vector<ComplexMatrix> after(blocks);
    after[blocks - 1] = ComplexMatrix::Identity(2 * n, 2 * n);
    for (std::size_t i = blocks - 1; i > 0; --i) after[i - 1] = after[i] * maps[i].v;

    ComplexMatrix moments = ComplexMatrix::Zero(2 * n, 2 * n);
    accumulate_vacuum_moments(moments, after[0] * maps[0].v);
    for (std::size_t i = 0; i < blocks; ++i) {
        accumulate_vacuum_moments(moments, after[i] * maps[i].u);
        accumulate_vacuum_moments(moments, after[i] * maps[i].q);
    }

    // symmetrized moments -> quadratures q = T^dag A; vacuum units are twice the physical ones
    const ComplexMatrix symmetric = (moments + moments.transpose()) / Complex(2, 0);
    const ComplexTransform t(spec.modes());
    const ComplexMatrix quad =
        t.matrix().adjoint() * symmetric * t.matrix().conjugate() * Complex(2, 0);

    RealMatrix sigma(2 * n, 2 * n);
    Real scale = 1;
    Real imag = 0;
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
        for (Eigen::Index j = 0; j < 2 * n; ++j) {
            sigma(i, j) = quad(i, j).real();
            scale = std::max<Real>(scale, abs(quad(i, j).real()));
            imag = std::max<Real>(imag, abs(quad(i, j).imag()));
        }
    }
    if (imag > Real(1e-40) * scale)
        throw NumericalFailure("operator_moment_covariance: complex residue in covariance");
    return CovarianceState(std::move(sigma));
}

}  // namespace opagbs
