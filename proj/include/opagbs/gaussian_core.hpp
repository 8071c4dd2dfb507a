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
#include <string_view>
#include <vector>

#include "opagbs/numeric.hpp"

namespace opagbs {

/**
 * Quadrature ordering of a phase-space vector.
 *
 * XXPP is (x_1..x_n, p_1..p_n) and is used internally everywhere.
 * XPXP is (x_1, p_1, ..., x_n, p_n) and only appears at I/O boundaries.
 */
enum class QuadratureOrdering { XXPP, XPXP };

std::string_view to_string(QuadratureOrdering ordering);

/// Permutation p with v_to[i] = v_from[p[i]].
std::vector<std::size_t> ordering_permutation(std::size_t n, QuadratureOrdering from,
                                              QuadratureOrdering to);

/// Conjugates a 2n x 2n matrix by the ordering permutation.
RealMatrix reorder(const RealMatrix& m, QuadratureOrdering from, QuadratureOrdering to);

/// Symplectic form; [[0, I], [-I, 0]] in XXPP, a direct sum of [[0, 1], [-1, 0]] in XPXP.
RealMatrix symplectic_form(std::size_t n, QuadratureOrdering ordering = QuadratureOrdering::XXPP);

/// ||m Omega m^T - Omega||_F.
Real symplectic_residual(const RealMatrix& m, QuadratureOrdering ordering = QuadratureOrdering::XXPP);

/**
 * Covariance matrix of a zero-mean n-mode Gaussian state.
 *
 * Units are such that the vacuum has sigma = I, so physical states have all
 * symplectic eigenvalues >= 1. The matrix is symmetrized on construction.
 */
class CovarianceState {
  public:
    explicit CovarianceState(RealMatrix sigma,
                             QuadratureOrdering ordering = QuadratureOrdering::XXPP);

    static CovarianceState from_double(const Eigen::MatrixXd& sigma,
                                       QuadratureOrdering ordering = QuadratureOrdering::XXPP);

    std::size_t modes() const { return modes_; }
    const RealMatrix& sigma() const { return sigma_; }
    QuadratureOrdering ordering() const { return ordering_; }
    Eigen::MatrixXd sigma_double() const { return to_double(sigma_); }

    CovarianceState with_ordering(QuadratureOrdering ordering) const;

  private:
    std::size_t modes_;
    RealMatrix sigma_;
    QuadratureOrdering ordering_;
};

/// A 2n x 2n real matrix S with S Omega S^T = Omega.
class SymplecticMatrix {
  public:
    /// Throws InvalidArgument unless the residual is below tol * max(1, ||m||_F^2).
    explicit SymplecticMatrix(RealMatrix m,
                              QuadratureOrdering ordering = QuadratureOrdering::XXPP,
                              double tol = 1e-10);

    static SymplecticMatrix identity(std::size_t n,
                                     QuadratureOrdering ordering = QuadratureOrdering::XXPP);

    std::size_t modes() const { return modes_; }
    const RealMatrix& matrix() const { return m_; }
    QuadratureOrdering ordering() const { return ordering_; }
    Real residual() const { return symplectic_residual(m_, ordering_); }

    SymplecticMatrix with_ordering(QuadratureOrdering ordering) const;

    /// Composition; (a * b) applies b first.
    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);

  private:
    struct Unchecked {};
    SymplecticMatrix(RealMatrix m, QuadratureOrdering ordering, Unchecked);

    std::size_t modes_;
    RealMatrix m_;
    QuadratureOrdering ordering_;
};

/**
 * Unitary change of basis from XXPP quadratures to (a_1..a_n, a_1^dag..a_n^dag),
 * T = 1/sqrt(2) [[I, iI], [I, -iI]], so that a = (x + ip)/sqrt(2).
 */
class ComplexTransform {
  public:
    explicit ComplexTransform(std::size_t n);

    std::size_t modes() const { return modes_; }
    const ComplexMatrix& matrix() const { return t_; }

  private:
    std::size_t modes_;
    ComplexMatrix t_;
};

/// T m T^dagger for a real 2n x 2n quadrature-basis matrix.
ComplexMatrix quad_to_complex(const RealMatrix& m);
/// T^dagger c T; the inverse of quad_to_complex.
ComplexMatrix complex_to_quad(const ComplexMatrix& c);

/**
 * Two-mode squeezing Bogoliubov matrix in the (a_1, a_2, a_1^dag, a_2^dag) basis:
 * a_1 -> cosh(r) a_1 - e^{i theta} sinh(r) a_2^dag and symmetrically for a_2.
 */
ComplexMatrix two_mode_bogoliubov(double r, double theta);

CovarianceState vacuum_state(std::size_t n);

CovarianceState apply_symplectic(const CovarianceState& state, const SymplecticMatrix& s);

/// Positive symplectic eigenvalues of a state, ascending.
std::vector<Real> symplectic_eigenvalues(const CovarianceState& state);

/// Same for a raw matrix; throws InvalidArgument if it is not symmetric.
std::vector<Real> symplectic_eigenvalues(const RealMatrix& sigma,
                                         QuadratureOrdering ordering = QuadratureOrdering::XXPP);

bool is_physical(const CovarianceState& state, double tol = 1e-9);
bool is_pure(const CovarianceState& state, double tol = 1e-9);

/// Throws NumericalFailure when the working precision cannot resolve the
/// symplectic spectrum of matrices with entries of this magnitude.
void require_resolvable(const RealMatrix& sigma, std::string_view what);

/// Euler factors of the two-mode squeezer in XPXP ordering on (x1, p1, x2, p2).
struct TwoModeEulerFactors {
    SymplecticMatrix passive;    ///< B50 = 1/sqrt(2) [[I2, I2], [-I2, I2]]
    SymplecticMatrix squeezing;  ///< diag(e^r, e^-r, e^-r, e^r)

    /// passive^T * squeezing * passive.
    SymplecticMatrix reconstruct() const;
};

TwoModeEulerFactors bloch_messiah_two_mode(double r);

/// [[cosh r I2, sinh r Z], [sinh r Z, cosh r I2]] in XPXP, Z = diag(1, -1).
SymplecticMatrix two_mode_squeezer_xpxp(double r);

}  // namespace opagbs
