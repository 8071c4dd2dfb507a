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

#include "opagbs/loss_channels.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "opagbs/errors.hpp"

namespace opagbs {

GaussianChannel::GaussianChannel(RealMatrix x, RealMatrix y) {
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
        throw InvalidArgument("GaussianChannel: X and Y must be square and of equal size");
    if (x.rows() == 0 || x.rows() % 2 != 0)
        throw InvalidArgument("GaussianChannel: dimension must be even and positive");
    if (max_abs(y - y.transpose()) > Real(1e-12) * std::max<Real>(1, max_abs(y)))
        throw InvalidArgument("GaussianChannel: Y is not symmetric");
    n_ = static_cast<std::size_t>(x.rows() / 2);
    x_ = std::move(x);
    y_ = (y + y.transpose()) / Real(2);
}

GaussianChannel GaussianChannel::identity(std::size_t n) {
    if (n == 0) throw InvalidArgument("GaussianChannel::identity: n must be >= 1");
    const auto dim = static_cast<Eigen::Index>(2 * n);
    return GaussianChannel(RealMatrix::Identity(dim, dim), RealMatrix::Zero(dim, dim));
}

GaussianChannel GaussianChannel::from_symplectic(const SymplecticMatrix& s) {
    const SymplecticMatrix xxpp = s.with_ordering(QuadratureOrdering::XXPP);
    const auto dim = xxpp.matrix().rows();
    return GaussianChannel(xxpp.matrix(), RealMatrix::Zero(dim, dim));
}

Real cp_min_eigenvalue(const GaussianChannel& c) {
    const RealMatrix omega = symplectic_form(c.modes());
    const RealMatrix b = omega - c.x() * omega * c.x().transpose();
    // Real symmetric embedding of the Hermitian Y + iB; same spectrum, doubled.
    const auto dim = c.y().rows();
    RealMatrix h(2 * dim, 2 * dim);
    h << c.y(), -b, b, c.y();
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("cp_min_eigenvalue: eigensolver did not converge");
    return solver.eigenvalues().minCoeff();
}

bool is_completely_positive(const GaussianChannel& c, double tol) {
    return cp_min_eigenvalue(c) >= -Real(tol);
}

namespace {

GaussianChannel loss_from_real(std::size_t n, const std::vector<Real>& eta) {
    if (n == 0 || eta.size() != n) throw InvalidArgument("loss_channel: need one eta per mode");
    const auto dim = static_cast<Eigen::Index>(2 * n);
    RealMatrix x = RealMatrix::Zero(dim, dim);
    RealMatrix y = RealMatrix::Zero(dim, dim);
    const auto nn = static_cast<Eigen::Index>(n);
    for (Eigen::Index k = 0; k < nn; ++k) {
        const Real& e = eta[static_cast<std::size_t>(k)];
        if (!(e >= 0 && e <= 1)) throw InvalidArgument("loss_channel: eta must lie in [0, 1]");
        x(k, k) = x(nn + k, nn + k) = sqrt(e);
        y(k, k) = y(nn + k, nn + k) = 1 - e;
    }
    return GaussianChannel(std::move(x), std::move(y));
}

}  // namespace

GaussianChannel loss_channel(std::size_t n, const std::vector<double>& eta) {
    std::vector<Real> e;
    e.reserve(eta.size());
    for (double v : eta) {
        if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("loss_channel: eta must lie in [0, 1]");
        e.emplace_back(v);
    }
    return loss_from_real(n, e);
}

GaussianChannel loss_channel(std::size_t n, double eta) {
    return loss_channel(n, std::vector<double>(n, eta));
}

GaussianChannel loss_channel(std::size_t n, const Real& eta) {
    return loss_from_real(n, std::vector<Real>(n, eta));
}

GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first) {
    if (second.modes() != first.modes()) throw InvalidArgument("compose: mode count mismatch");
    return GaussianChannel(second.x() * first.x(),
                           second.y() + second.x() * first.y() * second.x().transpose());
}

CovarianceState apply_channel(const GaussianChannel& c, const CovarianceState& state) {
    if (c.modes() != state.modes()) throw InvalidArgument("apply_channel: mode count mismatch");
    const CovarianceState xxpp = state.with_ordering(QuadratureOrdering::XXPP);
    return CovarianceState(c.x() * xxpp.sigma() * c.x().transpose() + c.y());
}

GaussianChannel layer_loss_channel(const NetworkSpec& spec, std::size_t layer) {
    std::vector<Real> eta;
    for (double t : spec.layer_transmittance(layer)) eta.push_back(Real(t) * Real(t));
    return loss_from_real(spec.modes(), eta);
}

GaussianChannel lossy_network_channel(const NetworkSpec& spec) {
    GaussianChannel total = GaussianChannel::identity(spec.modes());
    for (std::size_t l = 1; l <= spec.depth(); ++l) {
        total = compose(GaussianChannel::from_symplectic(layer_symplectic(spec, l)), total);
        total = compose(layer_loss_channel(spec, l), total);
    }
    return total;
}

CovarianceState propagate_lossy(const NetworkSpec& spec, const CovarianceState& input) {
    return apply_channel(lossy_network_channel(spec), input);
}

// ---------------------------------------------------------------------------
// ordering comparisons

SymplecticMatrix beam_splitter(double theta) {
    const Real c = cos(Real(theta));
    const Real s = sin(Real(theta));
    RealMatrix m = RealMatrix::Zero(4, 4);
    for (int q = 0; q < 2; ++q) {
        const int o = 2 * q;
        m(o, o) = c;
        m(o, o + 1) = s;
        m(o + 1, o) = -s;
        m(o + 1, o + 1) = c;
    }
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix single_mode_squeezer(double r) {
    RealMatrix m = RealMatrix::Zero(2, 2);
    m(0, 0) = exp(Real(r));
    m(1, 1) = exp(-Real(r));
    return SymplecticMatrix(std::move(m));
}

ChannelOrderingComparison compare_orderings(const SymplecticMatrix& element, double eta) {
    const GaussianChannel unitary = GaussianChannel::from_symplectic(element);
    const GaussianChannel loss = loss_channel(element.modes(), eta);
    GaussianChannel after = compose(loss, unitary);
    GaussianChannel before = compose(unitary, loss);
    const Real dx = max_abs(after.x() - before.x());
    const Real dy = max_abs(after.y() - before.y());
    return {std::move(after), std::move(before), dx, dy};
}

CommutationReport commutation_report(double r, double theta_bs, double eta) {
    auto bs = compare_orderings(beam_splitter(theta_bs), eta);
    auto sq = compare_orderings(single_mode_squeezer(r), eta);
    RealMatrix delta = sq.loss_then_element.y() - sq.element_then_loss.y();
    return {std::move(bs), std::move(sq), std::move(delta)};
}

}  // namespace opagbs
