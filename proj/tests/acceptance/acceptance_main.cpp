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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "opagbs/entanglement.hpp"
#include "opagbs/experiments/commands.hpp"
#include "opagbs/experiments/sweep.hpp"
#include "opagbs/hafnian.hpp"
#include "opagbs/loss_channels.hpp"
#include "opagbs/matrix_io.hpp"
#include "opagbs/sampling.hpp"

using namespace opagbs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

NetworkSpec random_spec(std::mt19937_64& rng, double min_t) {
    const std::size_t n = 2 * (1 + rng() % 3);
    const std::size_t d = 1 + rng() % 6;
    NetworkSpec spec = NetworkSpec::uniform(n, d, 0.0);
    for (std::size_t l = 1; l <= d; ++l) {
        for (std::size_t j = 0; j < spec.layer_opas(l).size(); ++j)
            spec.set_opa(l, j, OpaSpec(uniform(rng, 0.0, 1.5), uniform(rng, 0.0, 2 * std::numbers::pi)));
        for (std::size_t i = 0; i < n; ++i) spec.set_transmittance(l, i, uniform(rng, min_t, 1.0));
    }
    return spec;
}

double negativity(std::size_t n, std::size_t d, double r, double t, const Bipartition& cut,
                  LogBase base = LogBase::Two) {
    const auto state = propagate_lossy(NetworkSpec::uniform(n, d, r, 0.0, t), vacuum_state(n));
    return log_negativity(state, cut, base).value;
}

Outcome tmsv_anchor() {
    Outcome o;
    for (double r : {0.4, 0.8, 1.6}) {
        const auto state = propagate_lossy(NetworkSpec::uniform(2, 1, r), vacuum_state(2));
        const double e = log_negativity(state, Bipartition::contiguous(2, 1)).value;
        const double expect = 2 * r * std::numbers::log2e;
        // Independent oracle: PT symplectic eigenvalue from a direct 4x4 eigendecomposition.
        Eigen::MatrixXd pt = state.sigma_double();
        pt.row(3) *= -1;
        pt.col(3) *= -1;
        Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(4, 4);
        omega.topRightCorner(2, 2).setIdentity();
        omega.bottomLeftCorner(2, 2) = -Eigen::MatrixXd::Identity(2, 2);
        const Eigen::VectorXcd ev = (omega * pt).eigenvalues();
        double nu_min = 1e300;
        for (Eigen::Index i = 0; i < 4; ++i) nu_min = std::min(nu_min, std::abs(ev(i)));
        o.require(std::abs(e - expect) < 1e-9, "r=" + fmt(r) + " E_N=" + fmt(e));
        o.require(std::abs(-std::log2(nu_min) - expect) < 1e-9, "oracle r=" + fmt(r));
        o.require(std::abs(nu_min - std::exp(-2 * r)) < 1e-9, "nu~ r=" + fmt(r));
        o.note("r=" + fmt(r) + " error " + fmt(std::abs(e - expect)));
    }
    return o;
}

Outcome dual_engine() {
    Outcome o;
    std::mt19937_64 rng(20240501);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const NetworkSpec spec = random_spec(rng, 0.5);
        const auto a = propagate_lossy(spec, vacuum_state(spec.modes()));
        const auto b = operator_moment_covariance(spec);
        worst = std::max(worst, static_cast<double>((a.sigma() - b.sigma()).norm()));
    }
    o.require(worst < 1e-9, "Frobenius " + fmt(worst));
    o.note("max Frobenius difference " + fmt(worst));
    return o;
}

Outcome lossless_reduction() {
    Outcome o;
    std::mt19937_64 rng(77);
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const NetworkSpec spec = random_spec(rng, 1.0);
        const auto a = propagate_lossy(spec, vacuum_state(spec.modes()));
        const auto b = propagate_lossless(spec, vacuum_state(spec.modes()));
        worst = std::max(worst, static_cast<double>((a.sigma() - b.sigma()).norm()));
    }
    o.require(worst < 1e-10, "Frobenius " + fmt(worst));
    o.note("max Frobenius difference " + fmt(worst));
    return o;
}

Outcome fig2a_shape() {
    Outcome o;
    const std::vector<std::size_t> ks{4, 5, 6, 7};
    std::vector<std::vector<double>> e(ks.size());
    std::vector<double> ds;
    for (std::size_t d = 8; d <= 24; d += 2) {
        ds.push_back(static_cast<double>(d));
        const auto state = propagate_lossy(NetworkSpec::uniform(8, d, 0.8), vacuum_state(8));
        for (std::size_t i = 0; i < ks.size(); ++i)
            e[i].push_back(log_negativity(state, Bipartition::contiguous(8, ks[i])).value);
        for (std::size_t i = 0; i + 1 < ks.size(); ++i)
            o.require(e[i].back() >= e[i + 1].back(), "ordering at d=" + std::to_string(d));
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto fit = experiments::fit_line(ds, e[i]);
        const std::string label = "(" + std::to_string(ks[i]) + "," + std::to_string(8 - ks[i]) + ")";
        o.require(fit.r2 >= 0.999, label + " R2=" + fmt(fit.r2));
        o.note(label + " R2=" + fmt(fit.r2));
    }
    return o;
}

Outcome fig2b_shape() {
    Outcome o;
    const std::vector<double> rs{1.0, 1.5, 2.0, 2.5, 3.0};
    for (std::size_t k : {4, 5, 6, 7}) {
        std::vector<double> e;
        for (double r : rs) e.push_back(negativity(8, 16, r, 1.0, Bipartition::contiguous(8, k)));
        const double s1 = (e[3] - e[2]) / 0.5, s2 = (e[4] - e[3]) / 0.5;
        const double variation = std::abs(s2 - s1) / std::abs(s1);
        const std::string label = "(" + std::to_string(k) + "," + std::to_string(8 - k) + ")";
        o.require(variation < 0.05, label + " slope variation " + fmt(variation));
        o.note(label + " slope variation " + fmt(variation));
    }
    return o;
}

Outcome fig3d_saturation() {
    Outcome o;
    std::vector<double> e(41, 0.0);
    const auto cut = Bipartition::contiguous(8, 4);
    for (std::size_t d = 4; d <= 40; ++d) e[d] = negativity(8, d, 0.8, 0.8, cut);
    const double diff = std::abs(e[40] - e[32]);
    o.require(diff < 0.01 * e[32], "|E(40)-E(32)|=" + fmt(diff));
    o.note("E(32)=" + fmt(e[32]) + " E(40)=" + fmt(e[40]));
    return o;
}

// E_N on the d=8, r=0.8 grid; index [t][n].
std::vector<std::vector<double>> fig3e_grid(const std::vector<double>& ts, const std::string& which) {
    std::vector<std::vector<double>> out;
    for (double t : ts) {
        std::vector<double> row;
        for (std::size_t n = 2; n <= 10; n += 2) {
            const auto cut = which == "odd-even" ? Bipartition::interleaved(n) : Bipartition::contiguous(n, n / 2);
            row.push_back(negativity(n, 8, 0.8, t, cut));
        }
        out.push_back(row);
    }
    return out;
}

Outcome fig3e_scaling() {
    Outcome o;
    const std::vector<double> ts{0.6, 0.7, 0.8, 0.9};
    const auto grid = fig3e_grid(ts, "odd-even");
    const std::vector<double> ns{2, 4, 6, 8, 10};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto fit = experiments::fit_line(ns, grid[i]);
        o.require(fit.slope > 0 && fit.r2 >= 0.99, "t=" + fmt(ts[i]) + " slope=" + fmt(fit.slope) + " R2=" + fmt(fit.r2));
        o.note("t=" + fmt(ts[i]) + " R2=" + fmt(fit.r2));
    }
    o.note("odd-even partition");
    return o;
}

Outcome loss_monotonicity() {
    Outcome o;
    const std::vector<double> ts{1.0, 0.9, 0.8, 0.7, 0.6};
    for (const char* which : {"odd-even", "half"}) {
        const auto grid = fig3e_grid(ts, which);
        for (std::size_t i = 0; i + 1 < ts.size(); ++i)
            for (std::size_t j = 0; j < grid[i].size(); ++j)
                o.require(grid[i + 1][j] <= grid[i][j] + 1e-12,
                          std::string(which) + " n=" + std::to_string(2 * j + 2) + " t=" + fmt(ts[i + 1]));
    }
    o.note("partitions odd-even and half");
    return o;
}

Outcome hafnian_correctness() {
    Outcome o;
    std::mt19937_64 rng(9);
    double worst = 0;
    for (Eigen::Index dim = 2; dim <= 12; dim += 2) {
        for (int trial = 0; trial < 50; ++trial) {
            Eigen::MatrixXd m(dim, dim);
            for (Eigen::Index i = 0; i < dim; ++i)
                for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = uniform(rng, -1, 1);
            const double ref = hafnian_bruteforce(m);
            worst = std::max(worst, std::abs(hafnian_fast(m) - ref) / std::max(std::abs(ref), 1e-300));
        }
    }
    o.require(worst < 1e-9, "relative error " + fmt(worst));
    const double ones = hafnian_fast(Eigen::MatrixXd(Eigen::MatrixXd::Ones(8, 8)));
    o.require(ones == 105.0, "all-ones 8x8 gave " + format_double(ones));
    Eigen::MatrixXd big(32, 32);
    for (Eigen::Index i = 0; i < 32; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) big(i, j) = big(j, i) = uniform(rng, -1, 1);
    const auto start = std::chrono::steady_clock::now();
    const double h = hafnian_fast(big);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(std::isfinite(h) && seconds < 10.0, "32x32 took " + fmt(seconds) + " s");
    o.note("max relative error " + fmt(worst) + ", 32x32 in " + fmt(seconds) + " s");
    return o;
}

Outcome eq3_vs_fock() {
    Outcome o;
    for (double t : {1.0, 0.9}) {
        const WMatrices w = build_w(propagate_lossy(NetworkSpec::uniform(2, 1, 0.8, 0.0, t), vacuum_state(2)));
        const FockDistribution fock = fock_oracle_two_mode(0.8, t * t, 20);
        const Distribution dist = enumerate_distribution(w, 8);
        double worst = 0, odd_max = 0, mass = 0;
        for (std::size_t i = 0; i < dist.patterns.size(); ++i) {
            const auto& c = dist.patterns[i].counts;
            const double p = dist.probabilities[i];
            worst = std::max(worst, std::abs(p - fock.p(c[0], c[1])));
            if ((c[0] + c[1]) % 2 == 1) odd_max = std::max(odd_max, std::abs(p));
            mass += p;
        }
        const std::string tag = "t=" + fmt(t);
        o.require(worst < 1e-8, tag + " max deviation " + fmt(worst));
        o.require(mass >= 0 && mass <= 1 + 1e-8, tag + " mass " + fmt(mass));
        if (t == 1.0)
            o.require(odd_max < 1e-12, tag + " odd-total probability " + fmt(odd_max));
        o.note(tag + " max deviation " + fmt(worst) + " mass " + fmt(mass) + " max odd-total p " + fmt(odd_max));
    }
    o.note("odd-total clause applied to the pure state");
    return o;
}

Outcome appendix_c_ledger() {
    Outcome o;
    std::vector<GaussianChannel> built;
    double worst_loss = 0;
    for (double e1 : {0.1, 0.5, 0.8}) {
        for (double e2 : {0.3, 0.9, 1.0}) {
            const auto two = compose(loss_channel(1, e2), loss_channel(1, e1));
            const auto one = loss_channel(1, Real(e1) * Real(e2));
            worst_loss = std::max({worst_loss, static_cast<double>(max_abs(two.x() - one.x())),
                                   static_cast<double>(max_abs(two.y() - one.y()))});
            built.push_back(two);
            built.push_back(one);
        }
    }
    o.require(worst_loss < 1e-100, "loss composition off by " + fmt(worst_loss));

    double worst_bs = 0, worst_delta = 0;
    for (double eta : {0.2, 0.5, 0.9}) {
        for (double r : {0.3, 1.0, 2.0}) {
            const auto rep = commutation_report(r, std::numbers::pi / 3, eta);
            worst_bs = std::max({worst_bs, static_cast<double>(rep.beam_splitter.max_abs_x_difference),
                                 static_cast<double>(rep.beam_splitter.max_abs_y_difference)});
            RealMatrix expect = RealMatrix::Zero(2, 2);
            expect(0, 0) = (1 - Real(eta)) * (exp(2 * Real(r)) - 1);
            expect(1, 1) = (1 - Real(eta)) * (exp(-2 * Real(r)) - 1);
            worst_delta = std::max(worst_delta, static_cast<double>(max_abs(rep.squeezer_y_delta - expect)));
            for (const auto* cmp : {&rep.beam_splitter, &rep.squeezer}) {
                built.push_back(cmp->element_then_loss);
                built.push_back(cmp->loss_then_element);
            }
        }
    }
    o.require(worst_bs <= 1e-12, "beam splitter orderings differ by " + fmt(worst_bs));
    o.require(worst_delta < 1e-100, "squeezer Y-delta off by " + fmt(worst_delta));

    double worst_bm = 0;
    for (int i = 0; i <= 30; ++i) {
        const double r = 0.1 * i;
        const auto f = bloch_messiah_two_mode(r);
        worst_bm = std::max(worst_bm, static_cast<double>(max_abs(f.reconstruct().matrix() -
                                                                  two_mode_squeezer_xpxp(r).matrix())));
    }
    o.require(worst_bm < 1e-12, "Bloch-Messiah error " + fmt(worst_bm));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) built.push_back(lossy_network_channel(random_spec(rng, 0.5)));
    double floor = 1e300;
    for (const auto& c : built) floor = std::min(floor, static_cast<double>(cp_min_eigenvalue(c)));
    o.require(floor >= -1e-10, "CP eigenvalue floor " + fmt(floor));
    o.note(std::to_string(built.size()) + " channels, CP floor " + fmt(floor) + ", Bloch-Messiah error " +
           fmt(worst_bm));
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "opagbs_acceptance";
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "sweep.ini");
        cfg << "[network]\nr = 0.8\n[sweep]\nn = 2, 4, 6\nd = 1:8:1\nt = 0.8, 1\n"
               "partitions = half; odd-even\nengine = both\n";
        std::ofstream sample(dir / "sample.ini");
        sample << "[network]\nn = 2\nd = 1\nr = 0.8\n";
    }
    std::ostringstream sink, err;
    experiments::GlobalOptions g;
    g.config_path = (dir / "sweep.ini").string();
    for (std::size_t jobs : {1, 8}) {
        g.jobs = jobs;
        g.output_path = (dir / ("sweep_" + std::to_string(jobs) + ".csv")).string();
        o.require(experiments::cmd_sweep(g, sink, err) == 0, "sweep --jobs " + std::to_string(jobs) + ": " + err.str());
    }
    const std::string a = slurp(dir / "sweep_1.csv"), b = slurp(dir / "sweep_8.csv");
    o.require(!a.empty() && a == b, "sweep CSV differs between --jobs 1 and --jobs 8");

    g.config_path = (dir / "sample.ini").string();
    g.seed = 42;
    experiments::SampleOptions s;
    s.count = 1000;
    for (int run = 0; run < 2; ++run) {
        g.output_path = (dir / ("sample_" + std::to_string(run) + ".csv")).string();
        o.require(experiments::cmd_sample(g, s, sink, err) == 0, "sample run " + std::to_string(run));
    }
    const std::string c = slurp(dir / "sample_0.csv"), d = slurp(dir / "sample_1.csv");
    o.require(!c.empty() && c == d, "sample CSV differs between runs");
    o.note("sweep " + std::to_string(a.size()) + " bytes, sample " + std::to_string(c.size()) + " bytes");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "TMSV anchor", 1, tmsv_anchor},
        {2, "dual-engine equivalence", 10, dual_engine},
        {3, "lossless reduction", 5, lossless_reduction},
        {4, "E_N vs depth shape (n=8, r=0.8)", 30, fig2a_shape},
        {5, "E_N vs squeezing asymptotic slope", 15, fig2b_shape},
        {6, "lossy depth saturation", 30, fig3d_saturation},
        {7, "lossy linear scaling in n", 60, fig3e_scaling},
        {8, "loss monotonicity", 60, loss_monotonicity},
        {9, "Hafnian correctness and speed", 60, hafnian_correctness},
        {10, "Hafnian probabilities vs Fock oracle", 10, eq3_vs_fock},
        {11, "Gaussian channel ledger", 5, appendix_c_ledger},
        {12, "determinism", 30, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.budget_s) o.require(false, "runtime over " + fmt(c.budget_s) + " s");
        failures += o.pass ? 0 : 1;
        std::printf("criterion %2d %s  %-40s %7.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, seconds,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
