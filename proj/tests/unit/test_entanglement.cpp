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
#include <numbers>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "helpers.hpp"
#include "opagbs/entanglement.hpp"
#include "opagbs/errors.hpp"
#include "opagbs/loss_channels.hpp"

using namespace opagbs;
using opagbs::testing::to_d;

namespace {

// Direct double-precision evaluation: flip the B momenta by hand, take the
// eigenvalues of i Omega sigma~ and keep the positive half.
double negativity_oracle(const Eigen::MatrixXd& sigma, const std::vector<std::size_t>& b_modes) {
    const auto dim = sigma.rows();
    const auto n = dim / 2;
    Eigen::VectorXd flip = Eigen::VectorXd::Ones(dim);
    for (std::size_t b : b_modes) flip(n + static_cast<Eigen::Index>(b)) = -1;
    const Eigen::MatrixXd pt = flip.asDiagonal() * sigma * flip.asDiagonal();
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim, dim);
    omega.topRightCorner(n, n).setIdentity();
    omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXcd h = std::complex<double>(0, 1) * (omega * pt).cast<std::complex<double>>();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h);
    double total = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double nu = solver.eigenvalues()(i).real();
        if (nu > 0 && nu < 1) total -= std::log2(nu);
    }
    return total;
}

}  // namespace

TEST_CASE("two-mode squeezed vacuum negativity") {
    for (double r : {0.4, 0.8, 1.6}) {
        const auto s = propagate_lossless(NetworkSpec::uniform(2, 1, r), vacuum_state(2));
        const auto res = log_negativity(s, Bipartition::contiguous(2, 1));
        CHECK(res.value == doctest::Approx(2 * r / std::numbers::ln2).epsilon(1e-12));
        CHECK(to_d(res.nu_tilde.front()) == doctest::Approx(std::exp(-2 * r)).epsilon(1e-12));
        CHECK(log_negativity(s, Bipartition::contiguous(2, 1), LogBase::E).value ==
              doctest::Approx(2 * r).epsilon(1e-12));
    }
}

TEST_CASE("lossy two-mode squeezer negativity") {
    // Symmetric Gaussian state with a = eta cosh 2r + 1 - eta, c = eta sinh 2r
    // has smallest partially transposed symplectic eigenvalue a - c.
    const double r = 0.8, t = 0.9, eta = t * t;
    const double a = eta * std::cosh(2 * r) + 1 - eta, c = eta * std::sinh(2 * r);
    const auto s = propagate_lossy(NetworkSpec::uniform(2, 1, r, 0.0, t), vacuum_state(2));
    CHECK(log_negativity(s, Bipartition::contiguous(2, 1)).value ==
          doctest::Approx(-std::log2(a - c)).epsilon(1e-12));
    // Frozen regression value of the same quantity.
    CHECK(log_negativity(s, Bipartition::contiguous(2, 1)).value ==
          doctest::Approx(1.500070232261363).epsilon(1e-12));
}

TEST_CASE("agrees with direct eigendecomposition on random states") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        const NetworkSpec spec = opagbs::testing::random_spec(rng, 2, 3, 0.8, 0.6);
        const auto s = propagate_lossy(spec, vacuum_state(spec.modes()));
        const auto cut = Bipartition::contiguous(spec.modes(), spec.modes() / 2);
        CHECK(log_negativity(s, cut).value ==
              doctest::Approx(negativity_oracle(s.sigma_double(), cut.b_modes())).epsilon(1e-9));
    }
}

TEST_CASE("separable states have zero negativity") {
    CHECK(log_negativity(vacuum_state(4), Bipartition::contiguous(4, 2)).value == 0.0);
    // One layer on four modes pairs (1,2) and (3,4): nothing crosses the (2,2) cut.
    const auto s = propagate_lossless(NetworkSpec::uniform(4, 1, 1.0), vacuum_state(4));
    CHECK(log_negativity(s, Bipartition::contiguous(4, 2)).value == doctest::Approx(0.0));
    CHECK(log_negativity(s, Bipartition::interleaved(4)).value > 1.0);
}

TEST_CASE("negativity is symmetric in A and B and local-unitary invariant") {
    NetworkSpec spec = NetworkSpec::uniform(4, 3, 0.5, 0.3, 0.9);
    const auto s = propagate_lossy(spec, vacuum_state(4));
    const auto cut = Bipartition(4, {0, 1});
    const double e = log_negativity(s, cut).value;
    CHECK(log_negativity(s, cut.swapped()).value == doctest::Approx(e).epsilon(1e-12));

    // An OPA acting inside A only.
    NetworkSpec local = NetworkSpec::uniform(4, 1, 0.0);
    local.set_opa(1, 0, OpaSpec(0.9, 1.0));
    const auto moved = apply_symplectic(s, network_symplectic(local));
    CHECK(log_negativity(moved, cut).value == doctest::Approx(e).epsilon(1e-12));
}

TEST_CASE("partial transpose flips the B momenta") {
    const auto cut = Bipartition(3, {1});
    const auto& signs = PartialTransposeMap(cut).signs();
    CHECK(signs == std::vector<int>{1, 1, 1, -1, 1, -1});
    const RealMatrix m = PartialTransposeMap(cut).matrix();
    CHECK(to_d(m(3, 3)) == -1.0);
}

TEST_CASE("unphysical input is rejected") {
    RealMatrix bad = RealMatrix::Identity(4, 4) * Real(0.5);
    CHECK_THROWS_AS(log_negativity(CovarianceState(bad), Bipartition::contiguous(2, 1)), InvalidState);
    CHECK_THROWS_AS(log_negativity(vacuum_state(2), Bipartition::contiguous(4, 2)), InvalidArgument);
}

TEST_CASE("partition sweep keeps the request order") {
    const auto s = propagate_lossless(NetworkSpec::uniform(4, 2, 0.7), vacuum_state(4));
    const std::vector<Bipartition> cuts{Bipartition::contiguous(4, 1), Bipartition::contiguous(4, 2),
                                        Bipartition::interleaved(4)};
    const auto results = partition_sweep(s, cuts);
    REQUIRE(results.size() == 3);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        CHECK(results[i].partition.label() == cuts[i].label());
        CHECK(results[i].value == doctest::Approx(log_negativity(s, cuts[i]).value).epsilon(1e-14));
    }
}
