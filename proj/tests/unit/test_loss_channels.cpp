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

#include "doctest.h"
#include "helpers.hpp"
#include "opagbs/errors.hpp"
#include "opagbs/loss_channels.hpp"

using namespace opagbs;
using opagbs::testing::to_d;

TEST_CASE("pure loss channel") {
    const GaussianChannel c = loss_channel(2, 0.81);
    CHECK(to_d(max_abs(c.x() - RealMatrix::Identity(4, 4) * Real(0.9))) < 1e-15);
    CHECK(to_d(max_abs(c.y() - RealMatrix::Identity(4, 4) * Real(0.19))) < 1e-15);
    CHECK(is_completely_positive(c));
    CHECK_THROWS_AS(loss_channel(2, 1.2), InvalidArgument);
    CHECK_THROWS_AS(loss_channel(2, std::vector<double>{0.5}), InvalidArgument);
}

TEST_CASE("complete positivity test") {
    CHECK(is_completely_positive(GaussianChannel::identity(2)));
    // Phase-insensitive amplifier of gain 2 sits exactly on the boundary.
    const RealMatrix id = RealMatrix::Identity(2, 2);
    const GaussianChannel amp(id * sqrt(Real(2)), id);
    CHECK(is_completely_positive(amp));
    CHECK(to_d(cp_min_eigenvalue(amp)) == doctest::Approx(0.0).epsilon(1e-12));
    const GaussianChannel too_quiet(id * sqrt(Real(2)), id * Real(0.5));
    CHECK_FALSE(is_completely_positive(too_quiet));
    CHECK(to_d(cp_min_eigenvalue(too_quiet)) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(GaussianChannel(id, RealMatrix::Identity(4, 4)), InvalidArgument);
}

TEST_CASE("losses combine multiplicatively") {
    const GaussianChannel two = compose(loss_channel(1, 0.9), loss_channel(1, 0.8));
    const GaussianChannel one = loss_channel(1, Real(0.9) * Real(0.8));
    CHECK(to_d(max_abs(two.x() - one.x())) < 1e-150);
    CHECK(to_d(max_abs(two.y() - one.y())) < 1e-150);
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(3);
    auto random_channel = [&] {
        const NetworkSpec spec = opagbs::testing::random_spec(rng, 1, 1, 1.0, 0.5);
        return lossy_network_channel(spec);
    };
    const auto a = random_channel(), b = random_channel(), c = random_channel();
    if (a.modes() == b.modes() && b.modes() == c.modes()) {
        const auto left = compose(compose(a, b), c);
        const auto right = compose(a, compose(b, c));
        CHECK(to_d(max_abs(left.x() - right.x())) < 1e-100);
        CHECK(to_d(max_abs(left.y() - right.y())) < 1e-100);
    }
    CHECK_THROWS_AS(compose(loss_channel(1, 0.5), loss_channel(2, 0.5)), InvalidArgument);
}

TEST_CASE("loss leaves the vacuum invariant") {
    const CovarianceState out = apply_channel(loss_channel(3, 0.3), vacuum_state(3));
    CHECK(to_d(max_abs(out.sigma() - RealMatrix::Identity(6, 6))) < 1e-40);
}

TEST_CASE("lossy two-mode squeezer matches the mixed-state formula") {
    // sigma = eta * sigma_tmsv + (1 - eta) I with eta = t^2.
    const double r = 0.8, t = 0.9, eta = t * t;
    const CovarianceState out = propagate_lossy(NetworkSpec::uniform(2, 1, r, 0, t), vacuum_state(2));
    const double a = eta * std::cosh(2 * r) + 1 - eta, c = eta * std::sinh(2 * r);
    Eigen::MatrixXd expect(4, 4);
    expect << a, -c, 0, 0, -c, a, 0, 0, 0, 0, a, c, 0, 0, c, a;
    CHECK((out.sigma_double() - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("lossy pipeline reduces to symplectic propagation at t = 1") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        NetworkSpec spec = opagbs::testing::random_spec(rng, 3, 4, 1.2, 1.0);
        const auto a = propagate_lossy(spec, vacuum_state(spec.modes()));
        const auto b = propagate_lossless(spec, vacuum_state(spec.modes()));
        CHECK(to_d((a.sigma() - b.sigma()).norm()) < 1e-40);
    }
}

TEST_CASE("operator-moment engine agrees with the channel engine") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        const NetworkSpec spec = opagbs::testing::random_spec(rng, 2, 4, 1.0, 0.5);
        const auto a = propagate_lossy(spec, vacuum_state(spec.modes()));
        const auto b = operator_moment_covariance(spec);
        CHECK(to_d((a.sigma() - b.sigma()).norm()) < 1e-40);
    }
}

TEST_CASE("two-layer block maps preserve commutators") {
    NetworkSpec spec = NetworkSpec::uniform(4, 4, 0.6, 0.2, 0.8);
    spec.set_transmittance(2, 1, 0.3);
    for (std::size_t block = 1; block <= 2; ++block)
        CHECK(to_d(commutator_residual(two_layer_block(spec, block))) < 1e-100);
    CHECK_THROWS_AS(two_layer_block(NetworkSpec::uniform(4, 3, 0.5), 2), InvalidArgument);
}

TEST_CASE("loss commutes with a beam splitter but not with a squeezer") {
    const CommutationReport rep = commutation_report(1.0, std::numbers::pi / 3, 0.5);
    CHECK(rep.beam_splitter.equal(1e-12));
    CHECK_FALSE(rep.squeezer.equal(1e-12));
    const double e2 = std::exp(2.0);
    CHECK(to_d(rep.squeezer_y_delta(0, 0)) == doctest::Approx(0.5 * (e2 - 1)).epsilon(1e-15));
    CHECK(to_d(rep.squeezer_y_delta(1, 1)) == doctest::Approx(0.5 * (1 / e2 - 1)).epsilon(1e-15));
    CHECK(to_d(abs(rep.squeezer_y_delta(0, 1))) == 0.0);
    for (const auto* cmp : {&rep.beam_splitter, &rep.squeezer}) {
        CHECK(is_completely_positive(cmp->element_then_loss));
        CHECK(is_completely_positive(cmp->loss_then_element));
    }
}
