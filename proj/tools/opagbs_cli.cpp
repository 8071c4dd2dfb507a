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

// opagbs: simulate, sweep, hafnian, sample and channels subcommands.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "opagbs/experiments/commands.hpp"

namespace ex = opagbs::experiments;

int main(int argc, char** argv) {
    CLI::App app{"OPA-network Gaussian boson sampling simulator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(
        "Config keys (INI):\n"
        "  [network] n, d, r, theta, t            uniform network (t = amplitude transmittance)\n"
        "            opa.L.J = r[, theta]          override OPA J of layer L (one-based)\n"
        "            bs.L.I = t                    override transmittance of mode I after layer L\n"
        "  [sweep]   n, d, r, t                    axis as 'a, b, c' or 'start:stop:step'\n"
        "            partitions = (4,4); {1,3}; half; odd-even\n"
        "            engine = channel | moment | both\n"
        "            fit = d, r                    axes that get linear-fit rows\n"
        "  [output]  path                          sweep and sample CSV\n"
        "            covariance                    simulate covariance CSV\n"
        "Exit codes: 0 ok, 1 numerical failure, 2 config error, 3 I/O error, 4 resource guard.");

    ex::GlobalOptions g;
    std::string log_base = "2";
    app.add_option("--config", g.config_path, "INI config file");
    app.add_option("--output", g.output_path, "Output file (default: config or stdout)");
    app.add_option("--jobs", g.jobs, "Worker threads for sweeps (0 = all cores)");
    app.add_option("--seed", g.seed, "Sampling seed (std::mt19937_64)");
    app.add_option("--log-base", log_base, "Logarithm base for E_N")->check(CLI::IsMember({"2", "e"}));
    app.add_flag("--both-engines", g.both_engines, "Also run the operator-moment engine");
    app.add_flag("--timing", g.timing, "Fill the wall_time_s column of sweep output");

    auto* simulate = app.add_subcommand("simulate", "Covariance and E_N at one network");
    auto* sweep = app.add_subcommand("sweep", "E_N over a parameter grid, CSV with fit rows");

    ex::HafnianOptions h;
    auto* hafnian = app.add_subcommand("hafnian", "Hafnian of a symmetric matrix in CSV");
    hafnian->add_option("matrix", h.matrix_path, "Matrix CSV file")->required();
    hafnian->add_option("--algorithm", h.algorithm, "brute or fast")->check(CLI::IsMember({"brute", "fast"}));

    ex::SampleOptions s;
    auto* sample = app.add_subcommand("sample", "Draw photon patterns from the enumerated distribution");
    sample->add_option("--max-total", s.max_total, "Largest enumerated photon total");
    sample->add_option("--count", s.count, "Number of samples");
    sample->add_option("--distribution", s.distribution_path, "Also write the distribution CSV here");

    ex::ChannelsOptions c;
    auto* channels = app.add_subcommand("channels", "Gaussian channel ordering demos");
    channels->add_option("--demo", c.demo, "loss-loss, bs-loss, sq-loss or bloch-messiah")->required();
    channels->add_option("--r", c.r, "Squeezing");
    channels->add_option("--eta", c.eta, "Transmissivity (first loss for loss-loss)");
    channels->add_option("--eta2", c.eta2, "Second transmissivity for loss-loss");
    channels->add_option("--theta", c.theta, "Beam-splitter angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ex::kExitConfig;
    }
    g.log_base = log_base == "e" ? opagbs::LogBase::E : opagbs::LogBase::Two;

    if (simulate->parsed()) return ex::cmd_simulate(g, std::cout, std::cerr);
    if (sweep->parsed()) return ex::cmd_sweep(g, std::cout, std::cerr);
    if (hafnian->parsed()) return ex::cmd_hafnian(g, h, std::cout, std::cerr);
    if (sample->parsed()) return ex::cmd_sample(g, s, std::cout, std::cerr);
    if (channels->parsed()) return ex::cmd_channels(g, c, std::cout, std::cerr);
    return ex::kExitConfig;
}
