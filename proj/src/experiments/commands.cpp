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

#include "opagbs/experiments/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "opagbs/errors.hpp"
#include "opagbs/experiments/config.hpp"
#include "opagbs/experiments/sweep.hpp"
#include "opagbs/hafnian.hpp"
#include "opagbs/loss_channels.hpp"
#include "opagbs/matrix_io.hpp"
#include "opagbs/sampling.hpp"

namespace opagbs::experiments {

namespace {

ExperimentConfig require_config(const GlobalOptions& g, const char* command) {
    if (!g.config_path) throw InvalidArgument(std::string(command) + " requires --config");
    return load_config_file(*g.config_path);
}

// Writes through write(stream) into path, or into fallback when path is empty.
void emit(const std::optional<std::string>& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
    if (!path) {
        write(fallback);
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + *path + "' for writing");
    write(file);
    file.flush();
    if (!file) throw IoError("failed writing '" + *path + "'");
}

void print_matrix(std::ostream& out, const std::string& name, const RealMatrix& m) {
    out << name << ":\n";
    const Eigen::MatrixXd d = to_double(m);
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        out << "  ";
        for (Eigen::Index j = 0; j < d.cols(); ++j) out << (j ? " " : "") << format_double(d(i, j));
        out << "\n";
    }
}

void print_channel(std::ostream& out, const std::string& name, const GaussianChannel& c) {
    print_matrix(out, name + " X", c.x());
    print_matrix(out, name + " Y", c.y());
    out << name << " cp_min_eigenvalue: " << format_double(static_cast<double>(cp_min_eigenvalue(c)))
        << "\n";
}

void print_comparison(std::ostream& out, const ChannelOrderingComparison& cmp,
                      const std::string& first, const std::string& second) {
    print_channel(out, first, cmp.element_then_loss);
    print_channel(out, second, cmp.loss_then_element);
    out << "max_abs_x_difference: " << format_double(static_cast<double>(cmp.max_abs_x_difference)) << "\n";
    out << "max_abs_y_difference: " << format_double(static_cast<double>(cmp.max_abs_y_difference)) << "\n";
    out << "verdict: " << (cmp.equal() ? "equal" : "inequal") << "\n";
}

}  // namespace

int run_guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int cmd_simulate(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const ExperimentConfig cfg = require_config(g, "simulate");
        const NetworkSpec& spec = cfg.network;
        std::vector<Bipartition> partitions;
        for (const auto& p : cfg.sweep.partitions) partitions.push_back(p.resolve(spec.modes()));

        const CovarianceState channel = propagate_lossy(spec, vacuum_state(spec.modes()));
        const auto path = g.output_path ? g.output_path : cfg.covariance_path;
        if (path) emit(path, out, [&](std::ostream& s) { write_matrix_csv(s, channel.sigma_double()); });

        out << "engine,partition,E_N\n";
        const auto report = [&](const char* engine, const CovarianceState& state) {
            const auto results = partition_sweep(state, partitions, g.log_base);
            for (std::size_t i = 0; i < results.size(); ++i)
                out << engine << ',' << cfg.sweep.partitions[i].text << ','
                    << format_double(results[i].value) << '\n';
        };
        report("channel", channel);
        if (g.both_engines) {
            const CovarianceState moment = operator_moment_covariance(spec);
            report("moment", moment);
            const Real diff = (channel.sigma() - moment.sigma()).norm();
            out << "engine_discrepancy_frobenius," << format_double(static_cast<double>(diff)) << '\n';
        }
    });
}

int cmd_sweep(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        ExperimentConfig cfg = require_config(g, "sweep");
        if (g.both_engines) cfg.sweep.engine = Engine::Both;
        const auto path = g.output_path ? g.output_path : cfg.output_path;
        if (path) {
            // Fail on an unwritable path before doing the work.
            std::ofstream probe(*path, std::ios::binary | std::ios::app);
            if (!probe) throw IoError("cannot open '" + *path + "' for writing");
        }
        const SweepResult result = run_sweep(cfg, g.jobs, g.log_base);
        emit(path, out, [&](std::ostream& s) { write_sweep_csv(s, result, g.timing); });
    });
}

int cmd_hafnian(const GlobalOptions&, const HafnianOptions& h, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        if (h.algorithm != "fast" && h.algorithm != "brute")
            throw InvalidArgument("--algorithm must be brute or fast");
        std::ifstream in(h.matrix_path);
        if (!in) throw IoError("cannot open matrix file '" + h.matrix_path + "'");
        const Eigen::MatrixXd m = read_matrix_csv(in);
        const double value = h.algorithm == "brute" ? hafnian_bruteforce(m) : hafnian_fast(m);
        out << format_double(value) << '\n';
    });
}

int cmd_sample(const GlobalOptions& g, const SampleOptions& s, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const ExperimentConfig cfg = require_config(g, "sample");
        const NetworkSpec& spec = cfg.network;
        const WMatrices w = build_w(propagate_lossy(spec, vacuum_state(spec.modes())));
        const Distribution dist = enumerate_distribution(w, s.max_total);
        const auto samples = sample_patterns(dist, s.count, g.seed);

        const auto path = g.output_path ? g.output_path : cfg.output_path;
        emit(path, out, [&](std::ostream& o) {
            o << "sample,pattern\n";
            for (std::size_t i = 0; i < samples.size(); ++i) o << i << ',' << samples[i].label() << '\n';
        });
        if (s.distribution_path)
            emit(s.distribution_path, out, [&](std::ostream& o) { write_distribution_csv(o, dist); });
        std::size_t overflow = 0;
        for (const auto& p : samples) overflow += p.overflow ? 1 : 0;
        err << "patterns enumerated: " << dist.patterns.size() << "\n";
        err << "residual mass: " << format_double(dist.residual) << "\n";
        err << "overflow samples: " << overflow << "\n";
    });
}

int cmd_channels(const GlobalOptions&, const ChannelsOptions& c, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        if (c.demo == "loss-loss") {
            const double eta1 = c.eta.value_or(0.8);
            const double eta2 = c.eta2.value_or(0.9);
            const GaussianChannel sequential = compose(loss_channel(1, eta2), loss_channel(1, eta1));
            const GaussianChannel combined = loss_channel(1, Real(eta1) * Real(eta2));
            print_channel(out, "loss(eta2) after loss(eta1)", sequential);
            print_channel(out, "loss(eta1 * eta2)", combined);
            const Real dx = max_abs(sequential.x() - combined.x());
            const Real dy = max_abs(sequential.y() - combined.y());
            out << "max_abs_x_difference: " << format_double(static_cast<double>(dx)) << "\n";
            out << "max_abs_y_difference: " << format_double(static_cast<double>(dy)) << "\n";
            out << "combined_eta: " << format_double(eta1 * eta2) << "\n";
            out << "verdict: " << (dx <= Real(1e-12) && dy <= Real(1e-12) ? "equal" : "inequal") << "\n";
        } else if (c.demo == "bs-loss") {
            const double theta = c.theta.value_or(std::numbers::pi / 3);
            const double eta = c.eta.value_or(0.5);
            print_comparison(out, compare_orderings(beam_splitter(theta), eta), "beam splitter then loss",
                             "loss then beam splitter");
        } else if (c.demo == "sq-loss") {
            const double r = c.r.value_or(1.0);
            const double eta = c.eta.value_or(0.5);
            const CommutationReport rep = commutation_report(r, std::numbers::pi / 3, eta);
            print_comparison(out, rep.squeezer, "squeezer then loss", "loss then squeezer");
            print_matrix(out, "y_delta (loss-first minus squeezer-first)", rep.squeezer_y_delta);
        } else if (c.demo == "bloch-messiah") {
            const double r = c.r.value_or(1.0);
            const TwoModeEulerFactors f = bloch_messiah_two_mode(r);
            const SymplecticMatrix target = two_mode_squeezer_xpxp(r);
            const SymplecticMatrix rebuilt = f.reconstruct();
            print_matrix(out, "B50 (XPXP)", f.passive.matrix());
            print_matrix(out, "D (XPXP)", f.squeezing.matrix());
            print_matrix(out, "B50^T D B50", rebuilt.matrix());
            print_matrix(out, "S(r) (XPXP)", target.matrix());
            const Real error = max_abs(rebuilt.matrix() - target.matrix());
            out << "reconstruction_max_abs_error: " << format_double(static_cast<double>(error)) << "\n";
            out << "verdict: " << (error < Real(1e-12) ? "equal" : "inequal") << "\n";
        } else {
            throw InvalidArgument("unknown demo '" + c.demo +
                                  "'; expected loss-loss, bs-loss, sq-loss or bloch-messiah");
        }
    });
}

}  // namespace opagbs::experiments
