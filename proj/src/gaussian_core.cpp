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

#include "opagbs/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "opagbs/errors.hpp"

namespace opagbs {

namespace {

std::size_t modes_of(const RealMatrix& m, std::string_view what) {
    if (m.rows() != m.cols())
        throw InvalidArgument(std::string(what) + ": matrix must be square");
    if (m.rows() == 0 || m.rows() % 2 != 0)
        throw InvalidArgument(std::string(what) + ": dimension must be even and positive");
    return static_cast<std::size_t>(m.rows() / 2);
}

}  // namespace

std::string_view to_string(QuadratureOrdering ordering) {
    return ordering == QuadratureOrdering::XXPP ? "xxpp" : "xpxp";
}

std::vector<std::size_t> ordering_permutation(std::size_t n, QuadratureOrdering from,
                                              QuadratureOrdering to) {
    std::vector<std::size_t> perm(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) perm[i] = i;
    if (from == to) return perm;
    // position of (mode k, quadrature q) in each ordering
    auto xxpp = [n](std::size_t k, std::size_t q) { return q * n + k; };
    auto xpxp = [](std::size_t k, std::size_t q) { return 2 * k + q; };
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t q = 0; q < 2; ++q) {
            if (to == QuadratureOrdering::XPXP)
                perm[xpxp(k, q)] = xxpp(k, q);
            else
                perm[xxpp(k, q)] = xpxp(k, q);
        }
    }
    return perm;
}

RealMatrix reorder(const RealMatrix& m, QuadratureOrdering from, QuadratureOrdering to) {
    const std::size_t n = modes_of(m, "reorder");
    if (from == to) return m;
    const auto perm = ordering_permutation(n, from, to);
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) out(i, j) = m(perm[i], perm[j]);
    return out;
}

RealMatrix symplectic_form(std::size_t n, QuadratureOrdering ordering) {
    if (n == 0) throw InvalidArgument("symplectic_form: n must be >= 1");
    const auto dim = static_cast<Eigen::Index>(2 * n);
    RealMatrix omega = RealMatrix::Zero(dim, dim);
    const auto nn = static_cast<Eigen::Index>(n);
    for (Eigen::Index k = 0; k < nn; ++k) {
        if (ordering == QuadratureOrdering::XXPP) {
            omega(k, nn + k) = 1;
            omega(nn + k, k) = -1;
        } else {
            omega(2 * k, 2 * k + 1) = 1;
            omega(2 * k + 1, 2 * k) = -1;
        }
    }
    return omega;
}

Real symplectic_residual(const RealMatrix& m, QuadratureOrdering ordering) {
    const std::size_t n = modes_of(m, "symplectic_residual");
    const RealMatrix omega = symplectic_form(n, ordering);
    return (m * omega * m.transpose() - omega).norm();
}

// ---------------------------------------------------------------------------
// CovarianceState

CovarianceState::CovarianceState(RealMatrix sigma, QuadratureOrdering ordering)
    : modes_(modes_of(sigma, "CovarianceState")), ordering_(ordering) {
    const Real asym = max_abs(sigma - sigma.transpose());
    if (asym > Real(1e-9) * std::max<Real>(1, max_abs(sigma)))
        throw InvalidArgument("CovarianceState: sigma is not symmetric");
    sigma_ = (sigma + sigma.transpose()) / Real(2);
}

CovarianceState CovarianceState::from_double(const Eigen::MatrixXd& sigma,
                                             QuadratureOrdering ordering) {
    return CovarianceState(to_real(sigma), ordering);
}

CovarianceState CovarianceState::with_ordering(QuadratureOrdering ordering) const {
    return CovarianceState(reorder(sigma_, ordering_, ordering), ordering);
}

// ---------------------------------------------------------------------------
// SymplecticMatrix

SymplecticMatrix::SymplecticMatrix(RealMatrix m, QuadratureOrdering ordering, double tol)
    : modes_(modes_of(m, "SymplecticMatrix")), m_(std::move(m)), ordering_(ordering) {
    const Real scale = std::max<Real>(1, m_.squaredNorm());
    if (symplectic_residual(m_, ordering_) > Real(tol) * scale)
        throw InvalidArgument("SymplecticMatrix: matrix is not symplectic");
}

SymplecticMatrix::SymplecticMatrix(RealMatrix m, QuadratureOrdering ordering, Unchecked)
    : modes_(static_cast<std::size_t>(m.rows() / 2)), m_(std::move(m)), ordering_(ordering) {}

SymplecticMatrix SymplecticMatrix::identity(std::size_t n, QuadratureOrdering ordering) {
    if (n == 0) throw InvalidArgument("SymplecticMatrix::identity: n must be >= 1");
    const auto dim = static_cast<Eigen::Index>(2 * n);
    return SymplecticMatrix(RealMatrix::Identity(dim, dim), ordering, Unchecked{});
}

SymplecticMatrix SymplecticMatrix::with_ordering(QuadratureOrdering ordering) const {
    return SymplecticMatrix(reorder(m_, ordering_, ordering), ordering, Unchecked{});
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.modes_ != b.modes_ || a.ordering_ != b.ordering_)
        throw InvalidArgument("SymplecticMatrix product: mode count or ordering mismatch");
    return SymplecticMatrix(a.m_ * b.m_, a.ordering_, SymplecticMatrix::Unchecked{});
}

// ---------------------------------------------------------------------------
// complex basis

ComplexTransform::ComplexTransform(std::size_t n) : modes_(n) {
    if (n == 0) throw InvalidArgument("ComplexTransform: n must be >= 1");
    const auto nn = static_cast<Eigen::Index>(n);
    const Real h = 1 / sqrt(Real(2));
    t_ = ComplexMatrix::Zero(2 * nn, 2 * nn);
    for (Eigen::Index k = 0; k < nn; ++k) {
        t_(k, k) = Complex(h, 0);
        t_(k, nn + k) = Complex(0, h);
        t_(nn + k, k) = Complex(h, 0);
        t_(nn + k, nn + k) = Complex(0, -h);
    }
}

ComplexMatrix quad_to_complex(const RealMatrix& m) {
    const ComplexTransform t(modes_of(m, "quad_to_complex"));
    return t.matrix() * to_complex(m) * t.matrix().adjoint();
}

ComplexMatrix complex_to_quad(const ComplexMatrix& c) {
    if (c.rows() != c.cols() || c.rows() == 0 || c.rows() % 2 != 0)
        throw InvalidArgument("complex_to_quad: dimension must be even and positive");
    const ComplexTransform t(static_cast<std::size_t>(c.rows() / 2));
    return t.matrix().adjoint() * c * t.matrix();
}

ComplexMatrix two_mode_bogoliubov(double r, double theta) {
    const Real ch = cosh(Real(r));
    const Real sh = sinh(Real(r));
    const Complex phase(cos(Real(theta)), sin(Real(theta)));
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) g(i, i) = Complex(ch, 0);
    g(0, 3) = -phase * sh;
    g(1, 2) = -phase * sh;
    g(2, 1) = -std::conj(phase) * sh;
    g(3, 0) = -std::conj(phase) * sh;
    return g;
}

// ---------------------------------------------------------------------------
// states

CovarianceState vacuum_state(std::size_t n) {
    if (n == 0) throw InvalidArgument("vacuum_state: n must be >= 1");
    const auto dim = static_cast<Eigen::Index>(2 * n);
    return CovarianceState(RealMatrix::Identity(dim, dim));
}

CovarianceState apply_symplectic(const CovarianceState& state, const SymplecticMatrix& s) {
    if (state.modes() != s.modes())
        throw InvalidArgument("apply_symplectic: mode count mismatch");
    if (state.ordering() != s.ordering())
        throw InvalidArgument("apply_symplectic: ordering mismatch");
    return CovarianceState(s.matrix() * state.sigma() * s.matrix().transpose(), state.ordering());
}

void require_resolvable(const RealMatrix& sigma, std::string_view what) {
    const Real scale = std::max<Real>(1, max_abs(sigma));
    const double needed = 2.0 * static_cast<double>(log10(scale)) + 20.0;
    if (needed > kWorkingDigits)
        throw NumericalFailure(std::string(what) + ": covariance entries of magnitude 1e" +
                               std::to_string(static_cast<int>(static_cast<double>(log10(scale)))) +
                               " exceed the working precision");
}

std::vector<Real> symplectic_eigenvalues(const RealMatrix& sigma, QuadratureOrdering ordering) {
    const std::size_t n = modes_of(sigma, "symplectic_eigenvalues");
    const Real scale = std::max<Real>(1, max_abs(sigma));
    if (max_abs(sigma - sigma.transpose()) > Real(1e-9) * scale)
        throw InvalidArgument("symplectic_eigenvalues: sigma is not symmetric");
    require_resolvable(sigma, "symplectic_eigenvalues");

    // Omega sigma has spectrum {+-i nu_k}; i Omega sigma therefore {+-nu_k}.
    const RealMatrix h = symplectic_form(n, ordering) * sigma;
    Eigen::EigenSolver<RealMatrix> solver(h, false);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("symplectic_eigenvalues: eigensolver did not converge");

    std::vector<Real> magnitudes;
    magnitudes.reserve(2 * n);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const Complex lambda = solver.eigenvalues()(i);
        const Real nu = abs(lambda.imag());
        if (abs(lambda.real()) > Real(1e-9) * std::max<Real>(1, nu))
            throw InvalidState("symplectic_eigenvalues: spectrum of i*Omega*sigma is not real");
        magnitudes.push_back(nu);
    }
    std::sort(magnitudes.begin(), magnitudes.end());
    std::vector<Real> nus;
    nus.reserve(n);
    for (std::size_t k = 0; k < n; ++k) nus.push_back(magnitudes[2 * k]);
    return nus;
}

std::vector<Real> symplectic_eigenvalues(const CovarianceState& state) {
    return symplectic_eigenvalues(state.sigma(), state.ordering());
}

bool is_physical(const CovarianceState& state, double tol) {
    try {
        const auto nus = symplectic_eigenvalues(state);
        return nus.front() >= Real(1) - Real(tol);
    } catch (const InvalidState&) {
        return false;
    }
}

bool is_pure(const CovarianceState& state, double tol) {
    for (const Real& nu : symplectic_eigenvalues(state))
        if (abs(nu - 1) > Real(tol)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// two-mode Euler decomposition

SymplecticMatrix two_mode_squeezer_xpxp(double r) {
    const Real ch = cosh(Real(r));
    const Real sh = sinh(Real(r));
    RealMatrix s = RealMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) s(i, i) = ch;
    s(0, 2) = sh;
    s(1, 3) = -sh;
    s(2, 0) = sh;
    s(3, 1) = -sh;
    return SymplecticMatrix(std::move(s), QuadratureOrdering::XPXP);
}

TwoModeEulerFactors bloch_messiah_two_mode(double r) {
    const Real h = 1 / sqrt(Real(2));
    RealMatrix b = RealMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        b(i, i) = h;
        b(i, i + 2) = h;
        b(i + 2, i) = -h;
        b(i + 2, i + 2) = h;
    }
    RealMatrix d = RealMatrix::Zero(4, 4);
    const Real up = exp(Real(r));
    const Real down = exp(-Real(r));
    d(0, 0) = up;
    d(1, 1) = down;
    d(2, 2) = down;
    d(3, 3) = up;
    return {SymplecticMatrix(std::move(b), QuadratureOrdering::XPXP),
            SymplecticMatrix(std::move(d), QuadratureOrdering::XPXP)};
}

SymplecticMatrix TwoModeEulerFactors::reconstruct() const {
    const RealMatrix bt = passive.matrix().transpose();
    return SymplecticMatrix(bt * squeezing.matrix() * passive.matrix(), QuadratureOrdering::XPXP);
}

}  // namespace opagbs
