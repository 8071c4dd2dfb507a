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

/**
 * @brief Scalar and matrix types shared by every module.
 *
 * Covariance matrices of deep or strongly squeezed networks have entries
 * growing like exp(2 * sum of squeezing), while the partial-transpose
 * symplectic eigenvalues shrink like the inverse. Resolving both needs far
 * more than 16 significant digits, so states, symplectic matrices and
 * channels are stored in a fixed 160-digit binary float. The Hafnian and
 * sampling code works on double precision copies.
 */

#include <complex>
#include <cstddef>
#include <limits>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace opagbs {
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>,
                                           boost::multiprecision::et_off>;
}  // namespace opagbs

// Full specialization: the generic one shipped with Boost lacks infinity()
// and quiet_NaN(), which Eigen's hypot and eigensolvers require.
namespace Eigen {
template <>
struct NumTraits<opagbs::Real> : GenericNumTraits<opagbs::Real> {
    using Real = opagbs::Real;
    using NonInteger = opagbs::Real;
    using Nested = opagbs::Real;
    using Literal = double;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
    static Real dummy_precision() { return 1000 * epsilon(); }
    static Real highest() { return (std::numeric_limits<Real>::max)(); }
    static Real lowest() { return -(std::numeric_limits<Real>::max)(); }
    static Real infinity() { return std::numeric_limits<Real>::infinity(); }
    static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
    static int digits10() { return std::numeric_limits<Real>::digits10; }
};
}  // namespace Eigen

namespace opagbs {

using Complex = std::complex<Real>;

using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// Decimal digits carried by Real.
inline constexpr int kWorkingDigits = std::numeric_limits<Real>::digits10;

inline RealMatrix to_real(const Eigen::MatrixXd& m) { return m.cast<Real>(); }

inline Eigen::MatrixXd to_double(const RealMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = static_cast<double>(m(i, j));
    return out;
}

inline Eigen::MatrixXcd to_double(const ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = {static_cast<double>(m(i, j).real()), static_cast<double>(m(i, j).imag())};
    return out;
}

inline ComplexMatrix to_complex(const RealMatrix& m) { return m.cast<Complex>(); }

/// Largest absolute entry; zero for an empty matrix.
inline Real max_abs(const RealMatrix& m) {
    Real out = 0;
    for (Eigen::Index i = 0; i < m.size(); ++i) out = std::max<Real>(out, abs(m.data()[i]));
    return out;
}

inline Real frobenius(const RealMatrix& m) { return m.norm(); }

}  // namespace opagbs
