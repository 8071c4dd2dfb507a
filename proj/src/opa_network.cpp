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

#include "opagbs/opa_network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "opagbs/errors.hpp"

namespace opagbs {

OpaSpec::OpaSpec(double r_, double theta_) : r(r_), theta(theta_) {
    if (!std::isfinite(r) || r < 0) throw InvalidArgument("OpaSpec: r must be finite and >= 0");
    if (!std::isfinite(theta)) throw InvalidArgument("OpaSpec: theta must be finite");
    constexpr double two_pi = 2 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0) theta += two_pi;
    if (theta >= two_pi) theta = 0;
}

namespace {

template <typename T>
T& checked(std::vector<T>& row, std::size_t i, const char* what) {
    if (i >= row.size())
        throw InvalidArgument(std::string(what) + " index " + std::to_string(i) + " out of range");
    return row[i];
}

template <typename T>
const T& checked(const std::vector<T>& row, std::size_t i, const char* what) {
    return checked(const_cast<std::vector<T>&>(row), i, what);
}

}  // namespace

std::size_t opas_in_layer(std::size_t n, std::size_t layer) {
    if (layer == 0) throw InvalidArgument("layers are numbered from 1");
    return layer % 2 == 1 ? n / 2 : n / 2 - 1;
}

std::size_t opa_first_mode(std::size_t layer, std::size_t index) {
    return layer % 2 == 1 ? 2 * index : 2 * index + 1;
}

// ---------------------------------------------------------------------------
// NetworkSpec

NetworkSpec::NetworkSpec(std::size_t n, std::size_t depth, std::vector<std::vector<OpaSpec>> opas,
                         std::vector<std::vector<double>> transmittance)
    : n_(n), depth_(depth), opas_(std::move(opas)), transmittance_(std::move(transmittance)) {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("NetworkSpec: mode count must be even and >= 2");
    if (depth < 1) throw InvalidArgument("NetworkSpec: depth must be >= 1");
    if (opas_.size() != depth || transmittance_.size() != depth)
        throw InvalidArgument("NetworkSpec: one OPA row and one transmittance row per layer");
    for (std::size_t l = 1; l <= depth; ++l) {
        if (opas_[l - 1].size() != opas_in_layer(n, l))
            throw InvalidArgument("NetworkSpec: layer " + std::to_string(l) + " must hold " +
                                  std::to_string(opas_in_layer(n, l)) + " OPAs");
        for (auto& opa : opas_[l - 1]) opa = OpaSpec(opa.r, opa.theta);
        if (transmittance_[l - 1].size() != n)
            throw InvalidArgument("NetworkSpec: layer " + std::to_string(l) +
                                  " needs one transmittance per mode");
        for (double t : transmittance_[l - 1])
            if (!(t >= 0.0 && t <= 1.0))
                throw InvalidArgument("NetworkSpec: transmittance must lie in [0, 1]");
    }
}

NetworkSpec NetworkSpec::uniform(std::size_t n, std::size_t depth, double r, double theta,
                                 double t) {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("NetworkSpec: mode count must be even and >= 2");
    const OpaSpec opa(r, theta);
    std::vector<std::vector<OpaSpec>> opas;
    std::vector<std::vector<double>> trans;
    for (std::size_t l = 1; l <= depth; ++l) {
        opas.emplace_back(opas_in_layer(n, l), opa);
        trans.emplace_back(n, t);
    }
    return NetworkSpec(n, depth, std::move(opas), std::move(trans));
}

void NetworkSpec::check_layer(std::size_t layer) const {
    if (layer < 1 || layer > depth_)
        throw InvalidArgument("layer " + std::to_string(layer) + " outside 1.." +
                              std::to_string(depth_));
}

const OpaSpec& NetworkSpec::opa(std::size_t layer, std::size_t index) const {
    check_layer(layer);
    return checked(opas_[layer - 1], index, "OPA");
}

double NetworkSpec::transmittance(std::size_t layer, std::size_t mode) const {
    check_layer(layer);
    return checked(transmittance_[layer - 1], mode, "mode");
}

const std::vector<OpaSpec>& NetworkSpec::layer_opas(std::size_t layer) const {
    check_layer(layer);
    return opas_[layer - 1];
}

const std::vector<double>& NetworkSpec::layer_transmittance(std::size_t layer) const {
    check_layer(layer);
    return transmittance_[layer - 1];
}

void NetworkSpec::set_opa(std::size_t layer, std::size_t index, OpaSpec opa) {
    check_layer(layer);
    checked(opas_[layer - 1], index, "OPA") = OpaSpec(opa.r, opa.theta);
}

void NetworkSpec::set_transmittance(std::size_t layer, std::size_t mode, double t) {
    check_layer(layer);
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("transmittance must lie in [0, 1]");
    checked(transmittance_[layer - 1], mode, "mode") = t;
}

bool NetworkSpec::lossless() const {
    for (const auto& row : transmittance_)
        for (double t : row)
            if (t != 1.0) return false;
    return true;
}

NetworkSpec NetworkSpec::with_identity_layer() const {
    auto opas = opas_;
    auto trans = transmittance_;
    opas.emplace_back(opas_in_layer(n_, depth_ + 1), OpaSpec{});
    trans.emplace_back(n_, 1.0);
    return NetworkSpec(n_, depth_ + 1, std::move(opas), std::move(trans));
}

// ---------------------------------------------------------------------------
// Bipartition

Bipartition::Bipartition(std::size_t n, std::vector<std::size_t> a_modes)
    : n_(n), a_(std::move(a_modes)) {
    std::sort(a_.begin(), a_.end());
    if (std::adjacent_find(a_.begin(), a_.end()) != a_.end())
        throw InvalidArgument("Bipartition: repeated mode");
    if (!a_.empty() && a_.back() >= n) throw InvalidArgument("Bipartition: mode index out of range");
    for (std::size_t k = 0; k < n; ++k)
        if (!std::binary_search(a_.begin(), a_.end(), k)) b_.push_back(k);
    if (a_.empty() || b_.empty()) throw InvalidArgument("Bipartition: both sides must be non-empty");
}

Bipartition Bipartition::contiguous(std::size_t n, std::size_t k) {
    std::vector<std::size_t> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = i;
    return Bipartition(n, std::move(a));
}

Bipartition Bipartition::interleaved(std::size_t n) {
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < n; i += 2) a.push_back(i);
    return Bipartition(n, std::move(a));
}

Bipartition Bipartition::swapped() const { return Bipartition(n_, b_); }

std::string Bipartition::label() const {
    const bool prefix = a_.back() + 1 == a_.size();
    if (prefix) return "(" + std::to_string(a_.size()) + "," + std::to_string(b_.size()) + ")";
    bool odd_even = a_.size() == (n_ + 1) / 2;
    for (std::size_t i = 0; odd_even && i < a_.size(); ++i) odd_even = a_[i] == 2 * i;
    if (odd_even) return "odd-even";
    std::string out = "{";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(a_[i] + 1);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// symplectic layers

namespace {

// A = [[ch, -c sh], [-c sh, ch]], B = [[0, -s sh], [-s sh, 0]], C = [[ch, c sh], [c sh, ch]]
void place_opa(RealMatrix& m, std::size_t n, std::size_t first, const OpaSpec& opa) {
    const Real ch = cosh(Real(opa.r));
    const Real sh = sinh(Real(opa.r));
    const Real c = cos(Real(opa.theta));
    const Real s = sin(Real(opa.theta));
    const auto i = static_cast<Eigen::Index>(first);
    const auto j = i + 1;
    const auto p = static_cast<Eigen::Index>(n);
    m(i, i) = ch;
    m(j, j) = ch;
    m(i, j) = -c * sh;
    m(j, i) = -c * sh;
    m(p + i, p + i) = ch;
    m(p + j, p + j) = ch;
    m(p + i, p + j) = c * sh;
    m(p + j, p + i) = c * sh;
    m(i, p + j) = -s * sh;
    m(j, p + i) = -s * sh;
    m(p + i, j) = -s * sh;
    m(p + j, i) = -s * sh;
}

}  // namespace

SymplecticMatrix opa_symplectic(const OpaSpec& spec) {
    RealMatrix m = RealMatrix::Identity(4, 4);
    place_opa(m, 2, 0, spec);
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix layer_symplectic(const NetworkSpec& spec, std::size_t layer) {
    const auto& opas = spec.layer_opas(layer);
    const std::size_t n = spec.modes();
    RealMatrix m = RealMatrix::Identity(static_cast<Eigen::Index>(2 * n),
                                        static_cast<Eigen::Index>(2 * n));
    for (std::size_t j = 0; j < opas.size(); ++j) place_opa(m, n, opa_first_mode(layer, j), opas[j]);
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix network_symplectic(const NetworkSpec& spec) {
    SymplecticMatrix r = layer_symplectic(spec, 1);
    for (std::size_t l = 2; l <= spec.depth(); ++l) r = layer_symplectic(spec, l) * r;
    return r;
}

CovarianceState propagate_lossless(const NetworkSpec& spec, const CovarianceState& input) {
    if (input.modes() != spec.modes())
        throw InvalidArgument("propagate_lossless: mode count mismatch");
    if (!spec.lossless())
        throw InvalidArgument("propagate_lossless: network has transmittance < 1");
    return apply_symplectic(input, network_symplectic(spec));
}

}  // namespace opagbs
