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

#include "opagbs/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/LU>

#include "opagbs/errors.hpp"
#include "opagbs/hafnian.hpp"
#include "opagbs/matrix_io.hpp"

namespace opagbs {

PhotonPattern PhotonPattern::overflow_marker(std::size_t modes) {
    PhotonPattern p;
    p.counts.assign(modes, 0);
    p.overflow = true;
    return p;
}

std::size_t PhotonPattern::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::string PhotonPattern::label() const {
    if (overflow) return "overflow";
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(counts[i]);
    }
    return out;
}

WMatrices build_w(const CovarianceState& state) {
    const auto xxpp = state.with_ordering(QuadratureOrdering::XXPP);
    const std::size_t n = xxpp.modes();
    const auto dim = static_cast<Eigen::Index>(2 * n);
    require_resolvable(xxpp.sigma(), "build_w");

    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix g = (quad_to_complex(xxpp.sigma()) - id) / Complex(2);
    const ComplexMatrix gi = g + id;

    Eigen::PartialPivLU<ComplexMatrix> lu(gi);
    Real smallest_pivot = -1;
    Real largest_pivot = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Real piv = abs(lu.matrixLU()(i, i));
        if (smallest_pivot < 0 || piv < smallest_pivot) smallest_pivot = piv;
        largest_pivot = std::max(largest_pivot, piv);
    }
    if (smallest_pivot <= largest_pivot * Real(1e-12))
        throw NumericalFailure("build_w: G + I is singular");

    ComplexMatrix swap = ComplexMatrix::Zero(dim, dim);
    const auto m = static_cast<Eigen::Index>(n);
    swap.topRightCorner(m, m).setIdentity();
    swap.bottomLeftCorner(m, m).setIdentity();
    ComplexMatrix w = swap * g * lu.inverse();
    w = (w + w.transpose()).eval() / Complex(2);

    const Complex det = lu.determinant();
    WMatrices out;
    out.g = to_double(g);
    out.w = to_double(w);
    out.normalization = static_cast<double>(sqrt(abs(det)));
    out.modes = n;
    return out;
}

Eigen::MatrixXcd expand_w(const WMatrices& w, const PhotonPattern& pattern) {
    if (pattern.overflow) throw InvalidArgument("expand_w: overflow pattern has no matrix");
    if (pattern.counts.size() != w.modes)
        throw InvalidArgument("expand_w: pattern length " + std::to_string(pattern.counts.size()) +
                              " does not match " + std::to_string(w.modes) + " modes");
    std::vector<Eigen::Index> index;
    for (int half = 0; half < 2; ++half)
        for (std::size_t k = 0; k < w.modes; ++k)
            for (unsigned c = 0; c < pattern.counts[k]; ++c)
                index.push_back(static_cast<Eigen::Index>(k + half * w.modes));
    const auto size = static_cast<Eigen::Index>(index.size());
    Eigen::MatrixXcd out(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) out(i, j) = w.w(index[i], index[j]);
    return out;
}

double pattern_probability(const WMatrices& w, const PhotonPattern& pattern) {
    if (pattern.overflow) throw InvalidArgument("pattern_probability: overflow pattern");
    if (pattern.counts.size() != w.modes)
        throw InvalidArgument("pattern_probability: pattern length does not match mode count");
    const std::size_t total = pattern.total();
    if (total > kMaxPatternPhotons)
        throw ResourceLimit("pattern_probability: " + std::to_string(total) +
                            " photons exceeds cap " + std::to_string(kMaxPatternPhotons));

    const std::complex<double> haf = hafnian_fast(expand_w(w, pattern));
    double factorials = 1.0;
    for (unsigned c : pattern.counts)
        for (unsigned k = 2; k <= c; ++k) factorials *= k;
    const double scale = w.normalization * factorials;
    if (std::abs(haf.imag()) / scale > 1e-9)
        std::cerr << "warning: pattern " << pattern.label() << " has imaginary residue "
                  << haf.imag() / scale << "\n";
    const double p = haf.real() / scale;
    if (p < -1e-9)
        throw NumericalFailure("pattern_probability: negative probability " + std::to_string(p) +
                               " for pattern " + pattern.label());
    return std::max(p, 0.0);
}

namespace {

// Calls visit(counts) for every composition of total into counts.size() parts,
// in lexicographic order.
template <typename Visit>
void compositions(std::vector<unsigned>& counts, std::size_t pos, unsigned remaining, Visit&& visit) {
    if (pos + 1 == counts.size()) {
        counts[pos] = remaining;
        visit(counts);
        return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
        counts[pos] = c;
        compositions(counts, pos + 1, remaining - c, visit);
    }
}

}  // namespace

Distribution enumerate_distribution(const WMatrices& w, std::size_t max_total) {
    if (w.modes == 0) throw InvalidArgument("enumerate_distribution: no modes");
    if (w.modes > kMaxEnumerationModes)
        throw ResourceLimit("enumerate_distribution: " + std::to_string(w.modes) +
                            " modes exceeds cap " + std::to_string(kMaxEnumerationModes));
    if (max_total > kMaxEnumerationTotal)
        throw ResourceLimit("enumerate_distribution: max_total " + std::to_string(max_total) +
                            " exceeds cap " + std::to_string(kMaxEnumerationTotal));
    Distribution dist;
    dist.modes = w.modes;
    std::vector<unsigned> counts(w.modes, 0);
    for (unsigned total = 0; total <= max_total; ++total) {
        compositions(counts, 0, total, [&](const std::vector<unsigned>& c) {
            PhotonPattern p{c};
            dist.probabilities.push_back(pattern_probability(w, p));
            dist.patterns.push_back(std::move(p));
        });
    }
    double mass = 0.0;
    for (double p : dist.probabilities) mass += p;
    dist.residual = 1.0 - mass;
    return dist;
}

std::vector<PhotonPattern> sample_patterns(const Distribution& dist, std::size_t count,
                                           std::uint64_t seed) {
    if (dist.patterns.empty() || dist.patterns.size() != dist.probabilities.size())
        throw InvalidArgument("sample_patterns: empty distribution");
    std::vector<double> cumulative;
    cumulative.reserve(dist.probabilities.size() + 1);
    double acc = 0.0;
    for (double p : dist.probabilities) {
        acc += std::max(p, 0.0);
        cumulative.push_back(acc);
    }
    acc += std::max(dist.residual, 0.0);
    cumulative.push_back(acc);
    if (!(acc > 0.0)) throw InvalidArgument("sample_patterns: distribution has no mass");

    std::mt19937_64 gen(seed);
    const PhotonPattern overflow = PhotonPattern::overflow_marker(dist.modes);
    std::vector<PhotonPattern> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto k = static_cast<std::size_t>(it - cumulative.begin());
        out.push_back(k < dist.patterns.size() ? dist.patterns[k] : overflow);
    }
    return out;
}

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
    out << "pattern,probability\n";
    for (std::size_t i = 0; i < dist.patterns.size(); ++i)
        out << dist.patterns[i].label() << ',' << format_double(dist.probabilities[i]) << '\n';
}

FockDistribution fock_oracle_two_mode(double r, double eta, std::size_t cutoff) {
    if (cutoff > kMaxFockCutoff)
        throw ResourceLimit("fock_oracle_two_mode: cutoff exceeds " + std::to_string(kMaxFockCutoff));
    if (r < 0.0 || eta < 0.0 || eta > 1.0)
        throw InvalidArgument("fock_oracle_two_mode: need r >= 0 and eta in [0, 1]");
    const auto size = static_cast<Eigen::Index>(cutoff + 1);
    const double lambda = std::tanh(r) * std::tanh(r);
    const double c2 = std::cosh(r) * std::cosh(r);

    // binom(k, n) = P(k survive | n photons).
    Eigen::MatrixXd binom = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index n = 0; n < size; ++n) {
        double choose = 1.0;
        for (Eigen::Index k = 0; k <= n; ++k) {
            binom(k, n) = choose * std::pow(eta, double(k)) * std::pow(1.0 - eta, double(n - k));
            choose = choose * double(n - k) / double(k + 1);
        }
    }
    Eigen::VectorXd source(size);
    for (Eigen::Index n = 0; n < size; ++n) source(n) = std::pow(lambda, double(n)) / c2;

    FockDistribution out;
    out.p = binom * source.asDiagonal() * binom.transpose();
    out.tail_bound = std::pow(lambda, double(size));
    return out;
}

}  // namespace opagbs
