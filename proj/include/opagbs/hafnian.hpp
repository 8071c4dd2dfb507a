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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace opagbs {

inline constexpr std::size_t kBruteForceHafnianMaxDim = 12;
inline constexpr std::size_t kFastHafnianMaxDim = 40;

/**
 * Hafnian by explicit enumeration of the (2k-1)!! perfect matchings.
 *
 * Ground truth for small matrices. Odd dimensions are rejected with
 * InvalidArgument, dimensions above 12 with ResourceLimit. The empty matrix
 * has Hafnian 1.
 */
double hafnian_bruteforce(const Eigen::MatrixXd& a);
std::complex<double> hafnian_bruteforce(const Eigen::MatrixXcd& a);

/**
 * Hafnian in O(k^3 2^k) time for a 2k x 2k symmetric matrix.
 *
 * Sums, over subsets S of the k index pairs (2j, 2j+1), the coefficient of
 * lambda^k in det(I - lambda A_S X_S)^(-1/2) with sign (-1)^(k - |S|), where X
 * swaps the members of every pair. The determinant polynomial comes from a
 * Hessenberg reduction followed by the La Budde recurrence, so no eigenvalues
 * are needed. The outer sum is compensated. Dimension cap 40.
 */
double hafnian_fast(const Eigen::MatrixXd& a);
std::complex<double> hafnian_fast(const Eigen::MatrixXcd& a);

}  // namespace opagbs
