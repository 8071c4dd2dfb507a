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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "opagbs/entanglement.hpp"

namespace opagbs::experiments {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfig = 2,
    kExitIo = 3,
    kExitResource = 4,
};

struct GlobalOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> output_path;
    std::size_t jobs = 0;
    std::uint64_t seed = 0;
    LogBase log_base = LogBase::Two;
    bool both_engines = false;
    bool timing = false;
};

struct HafnianOptions {
    std::string matrix_path;
    std::string algorithm = "fast";
};

struct SampleOptions {
    std::size_t max_total = 8;
    std::size_t count = 1000;
    std::optional<std::string> distribution_path;
};

struct ChannelsOptions {
    std::string demo;
    std::optional<double> r;
    std::optional<double> eta;
    std::optional<double> eta2;
    std::optional<double> theta;
};

/// Runs body, printing any library error to err and mapping it to an exit code.
int run_guarded(std::ostream& err, const std::function<void()>& body);

/// Covariance CSV to --output (or [output] covariance) and an E_N report on out.
int cmd_simulate(const GlobalOptions& g, std::ostream& out, std::ostream& err);
/// Sweep CSV to --output, [output] path, or out.
int cmd_sweep(const GlobalOptions& g, std::ostream& out, std::ostream& err);
int cmd_hafnian(const GlobalOptions& g, const HafnianOptions& h, std::ostream& out, std::ostream& err);
/// Sample CSV to --output, [output] path, or out; residual report on err.
int cmd_sample(const GlobalOptions& g, const SampleOptions& s, std::ostream& out, std::ostream& err);
int cmd_channels(const GlobalOptions& g, const ChannelsOptions& c, std::ostream& out, std::ostream& err);

}  // namespace opagbs::experiments
