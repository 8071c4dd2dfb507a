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

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opagbs/entanglement.hpp"
#include "opagbs/errors.hpp"
#include "opagbs/hafnian.hpp"
#include "opagbs/loss_channels.hpp"
#include "opagbs/sampling.hpp"

namespace py = pybind11;
using namespace opagbs;

namespace {

LogBase parse_base(const std::string& base) {
    if (base == "2") return LogBase::Two;
    if (base == "e") return LogBase::E;
    throw InvalidArgument("base must be '2' or 'e'");
}

Bipartition parse_partition(std::size_t n, const py::object& partition) {
    if (py::isinstance<py::str>(partition)) {
        const auto s = partition.cast<std::string>();
        if (s == "half") return Bipartition::contiguous(n, n / 2);
        if (s == "odd-even") return Bipartition::interleaved(n);
        throw InvalidArgument("partition string must be 'half' or 'odd-even'");
    }
    if (py::isinstance<py::int_>(partition)) return Bipartition::contiguous(n, partition.cast<std::size_t>());
    return Bipartition(n, partition.cast<std::vector<std::size_t>>());
}

CovarianceState network_state(std::size_t n, std::size_t d, double r, double theta, double t,
                              const std::string& engine) {
    const NetworkSpec spec = NetworkSpec::uniform(n, d, r, theta, t);
    if (engine == "channel") return propagate_lossy(spec, vacuum_state(n));
    if (engine == "moment") return operator_moment_covariance(spec);
    throw InvalidArgument("engine must be 'channel' or 'moment'");
}

py::object pattern_to_py(const PhotonPattern& p) {
    if (p.overflow) return py::none();
    return py::tuple(py::cast(p.counts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "OPA-network Gaussian boson sampling simulator";

    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);

    m.def(
        "covariance",
        [](std::size_t n, std::size_t d, double r, double theta, double t, const std::string& engine) {
            return network_state(n, d, r, theta, t, engine).sigma_double();
        },
        py::arg("n"), py::arg("d"), py::arg("r"), py::arg("theta") = 0.0, py::arg("t") = 1.0,
        py::arg("engine") = "channel",
        "XXPP output covariance of a uniform network fed with vacuum (vacuum = identity).");

    m.def(
        "log_negativity",
        [](std::size_t n, std::size_t d, double r, const py::object& partition, double theta, double t,
           const std::string& base, const std::string& engine) {
            const auto state = network_state(n, d, r, theta, t, engine);
            return log_negativity(state, parse_partition(n, partition), parse_base(base)).value;
        },
        py::arg("n"), py::arg("d"), py::arg("r"), py::arg("partition") = "half", py::arg("theta") = 0.0,
        py::arg("t") = 1.0, py::arg("base") = "2", py::arg("engine") = "channel",
        "E_N of a uniform network. partition: 'half', 'odd-even', k for the first k modes, "
        "or a list of zero-based A modes. Evaluated at full internal precision.");

    m.def(
        "log_negativity_of",
        [](const Eigen::MatrixXd& sigma, const py::object& partition, const std::string& base) {
            const auto state = CovarianceState::from_double(sigma);
            return log_negativity(state, parse_partition(state.modes(), partition), parse_base(base)).value;
        },
        py::arg("sigma"), py::arg("partition") = "half", py::arg("base") = "2",
        "E_N of a given XXPP covariance matrix.");

    m.def(
        "hafnian",
        [](const Eigen::MatrixXcd& a, const std::string& algorithm) -> py::object {
            const bool real = a.imag().cwiseAbs().maxCoeff() == 0.0 || a.size() == 0;
            if (algorithm != "fast" && algorithm != "brute")
                throw InvalidArgument("algorithm must be 'fast' or 'brute'");
            if (real) {
                const Eigen::MatrixXd re = a.real();
                return py::float_(algorithm == "fast" ? hafnian_fast(re) : hafnian_bruteforce(re));
            }
            return py::cast(algorithm == "fast" ? hafnian_fast(a) : hafnian_bruteforce(a));
        },
        py::arg("matrix"), py::arg("algorithm") = "fast");

    m.def(
        "pattern_probability",
        [](const Eigen::MatrixXd& sigma, const std::vector<unsigned>& pattern) {
            return pattern_probability(build_w(CovarianceState::from_double(sigma)), PhotonPattern{pattern});
        },
        py::arg("sigma"), py::arg("pattern"));

    m.def(
        "enumerate_distribution",
        [](const Eigen::MatrixXd& sigma, std::size_t max_total) {
            const auto dist = enumerate_distribution(build_w(CovarianceState::from_double(sigma)), max_total);
            py::list patterns;
            for (const auto& p : dist.patterns) patterns.append(pattern_to_py(p));
            return py::make_tuple(patterns, dist.probabilities, dist.residual);
        },
        py::arg("sigma"), py::arg("max_total") = 8, "Returns (patterns, probabilities, residual).");

    m.def(
        "sample",
        [](const Eigen::MatrixXd& sigma, std::size_t count, std::uint64_t seed, std::size_t max_total) {
            const auto dist = enumerate_distribution(build_w(CovarianceState::from_double(sigma)), max_total);
            py::list out;
            for (const auto& p : sample_patterns(dist, count, seed)) out.append(pattern_to_py(p));
            return out;
        },
        py::arg("sigma"), py::arg("count"), py::arg("seed") = 0, py::arg("max_total") = 8,
        "Photon patterns as tuples; None marks events beyond max_total.");

    m.def(
        "fock_oracle_two_mode",
        [](double r, double eta, std::size_t cutoff) { return fock_oracle_two_mode(r, eta, cutoff).p; },
        py::arg("r"), py::arg("eta"), py::arg("cutoff") = 20);

    m.def(
        "loss_channel",
        [](std::size_t n, double eta) {
            const auto c = loss_channel(n, eta);
            return py::make_tuple(to_double(c.x()), to_double(c.y()));
        },
        py::arg("n"), py::arg("eta"), "(X, Y) of uniform pure loss with transmissivity eta.");

    m.def(
        "cp_min_eigenvalue",
        [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
            return static_cast<double>(cp_min_eigenvalue(GaussianChannel(to_real(x), to_real(y))));
        },
        py::arg("x"), py::arg("y"));
}
