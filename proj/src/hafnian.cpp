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

#include "opagbs/hafnian.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "opagbs/errors.hpp"

namespace opagbs {

namespace {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Neumaier summation; complex values are compensated per component.
class CompensatedSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

template <typename Scalar>
class Accumulator;

template <>
class Accumulator<double> {
  public:
    void add(double v) { s_.add(v); }
    double value() const { return s_.value(); }

  private:
    CompensatedSum s_;
};

template <>
class Accumulator<std::complex<double>> {
  public:
    void add(std::complex<double> v) {
        re_.add(v.real());
        im_.add(v.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

  private:
    CompensatedSum re_;
    CompensatedSum im_;
};

template <typename Scalar>
void check_input(const Mat<Scalar>& a, std::size_t cap, const char* who) {
    if (a.rows() != a.cols()) throw InvalidArgument(std::string(who) + ": matrix must be square");
    if (a.rows() % 2 != 0)
        throw InvalidArgument(std::string(who) + ": odd dimension has no perfect matching");
    if (static_cast<std::size_t>(a.rows()) > cap)
        throw ResourceLimit(std::string(who) + ": dimension " + std::to_string(a.rows()) +
                            " exceeds cap " + std::to_string(cap));
    if (a.size() == 0) return;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw InvalidArgument(std::string(who) + ": matrix must be symmetric");
}

template <typename Scalar>
Scalar matchings(const Mat<Scalar>& a, std::vector<int>& free) {
    if (free.empty()) return Scalar(1);
    const int first = free.back();
    free.pop_back();
    Scalar total(0);
    for (std::size_t i = 0; i < free.size(); ++i) {
        const int partner = free[i];
        free[i] = free.back();
        free.pop_back();
        total += a(first, partner) * matchings(a, free);
        free.push_back(free[i]);
        free[i] = partner;
    }
    free.push_back(first);
    return total;
}

template <typename Scalar>
Scalar bruteforce(const Mat<Scalar>& a) {
    check_input(a, kBruteForceHafnianMaxDim, "hafnian_bruteforce");
    std::vector<int> free(static_cast<std::size_t>(a.rows()));
    for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<int>(i);
    return matchings(a, free);
}

// Coefficients c_0..c_k of det(I - lambda B) = lambda^k p(1/lambda), p the
// characteristic polynomial, via La Budde on the Hessenberg form of B.
template <typename Scalar>
std::vector<Scalar> det_polynomial(const Mat<Scalar>& b) {
    const auto k = b.rows();
    Mat<Scalar> h = b;
    if (k > 2) h = Eigen::HessenbergDecomposition<Mat<Scalar>>(b).matrixH();

    // polys[i] holds the monic characteristic polynomial of the leading i x i block,
    // coefficient of x^j at index j.
    std::vector<std::vector<Scalar>> polys(static_cast<std::size_t>(k) + 1);
    polys[0] = {Scalar(1)};
    for (Eigen::Index m = 1; m <= k; ++m) {
        const auto& prev = polys[static_cast<std::size_t>(m - 1)];
        std::vector<Scalar> next(static_cast<std::size_t>(m) + 1, Scalar(0));
        const Scalar diag = h(m - 1, m - 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
            next[j + 1] += prev[j];
            next[j] -= diag * prev[j];
        }
        Scalar sub(1);
        for (Eigen::Index i = 1; i < m; ++i) {
            sub *= h(m - i, m - i - 1);
            const Scalar coeff = h(m - i - 1, m - 1) * sub;
            const auto& lower = polys[static_cast<std::size_t>(m - i - 1)];
            for (std::size_t j = 0; j < lower.size(); ++j) next[j] -= coeff * lower[j];
        }
        polys[static_cast<std::size_t>(m)] = std::move(next);
    }
    const auto& p = polys.back();
    return std::vector<Scalar>(p.rbegin(), p.rend());
}

// Coefficient of lambda^order in c(lambda)^(-1/2), given c_0 = 1.
template <typename Scalar>
Scalar inverse_sqrt_coefficient(const std::vector<Scalar>& c, std::size_t order) {
    std::vector<Scalar> q(order + 1, Scalar(0));
    q[0] = Scalar(1);
    for (std::size_t i = 1; i <= order; ++i) {
        Scalar acc(0);
        const std::size_t top = std::min(i, c.size() - 1);
        for (std::size_t j = 1; j <= top; ++j)
            acc += c[j] * q[i - j] * (static_cast<long double>(i) - 0.5L * static_cast<long double>(j));
        q[i] = -acc / static_cast<long double>(i);
    }
    return q[order];
}

// Per-subset work runs in extended precision; the outer sum is compensated.
template <typename Scalar>
struct Wide;
template <>
struct Wide<double> {
    using type = long double;
};
template <>
struct Wide<std::complex<double>> {
    using type = std::complex<long double>;
};

template <typename Scalar>
Scalar fast(const Mat<Scalar>& input) {
    check_input(input, kFastHafnianMaxDim, "hafnian_fast");
    using W = typename Wide<Scalar>::type;
    const Mat<W> a = input.template cast<W>();
    const auto pairs = static_cast<std::size_t>(a.rows() / 2);
    if (pairs == 0) return Scalar(1);

    Accumulator<Scalar> total;
    const std::uint64_t subsets = std::uint64_t{1} << pairs;
    std::vector<Eigen::Index> rows;
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        rows.clear();
        for (std::size_t j = 0; j < pairs; ++j) {
            if (mask & (std::uint64_t{1} << j)) {
                rows.push_back(static_cast<Eigen::Index>(2 * j));
                rows.push_back(static_cast<Eigen::Index>(2 * j + 1));
            }
        }
        const auto k = static_cast<Eigen::Index>(rows.size());
        Mat<W> b(k, k);
        for (Eigen::Index r = 0; r < k; ++r)
            for (Eigen::Index c = 0; c < k; ++c) b(r, c) = a(rows[r], rows[c ^ 1]);
        const auto f = static_cast<Scalar>(inverse_sqrt_coefficient(det_polynomial(b), pairs));
        const bool negative = (pairs - rows.size() / 2) % 2 == 1;
        total.add(negative ? -f : f);
    }
    return total.value();
}

}  // namespace

double hafnian_bruteforce(const Eigen::MatrixXd& a) { return bruteforce<double>(a); }
std::complex<double> hafnian_bruteforce(const Eigen::MatrixXcd& a) {
    return bruteforce<std::complex<double>>(a);
}

double hafnian_fast(const Eigen::MatrixXd& a) { return fast<double>(a); }
std::complex<double> hafnian_fast(const Eigen::MatrixXcd& a) {
    return fast<std::complex<double>>(a);
}

}  // namespace opagbs
