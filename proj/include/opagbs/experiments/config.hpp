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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opagbs/opa_network.hpp"

namespace opagbs::experiments {

/// Parsed INI text: section -> ordered (key, value) pairs. Keys outside any
/// section land in section "".
struct IniDocument {
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;

    const std::string* find(const std::string& section, const std::string& key) const;
};

/// '#' and ';' start comments at line start; "key = value" lines; [section]
/// headers. Throws InvalidArgument naming the line on malformed input.
IniDocument parse_ini(std::istream& in);

enum class Engine { Channel, Moment, Both };

std::string to_string(Engine engine);

/// A partition request, resolved against a concrete mode count later.
/// Forms: "(k,m)" contiguous with k + m = n, "{1,3,5}" one-based A modes,
/// "half" for (n/2, n/2), "odd-even" for the interleaved cut.
struct PartitionSpec {
    std::string text;

    Bipartition resolve(std::size_t n) const;
};

std::vector<PartitionSpec> parse_partition_list(const std::string& value);

/// Values of one sweep axis: "a, b, c" or "start:stop:step" (inclusive).
std::vector<double> parse_axis(const std::string& key, const std::string& value);

struct SweepConfig {
    /// Axis values keyed by "n", "d", "r", "t"; absent axes use the network value.
    std::map<std::string, std::vector<double>> axes;
    std::vector<PartitionSpec> partitions;
    Engine engine = Engine::Channel;
    /// Axes that receive linear-fit rows; defaults to every axis with two or more values.
    std::vector<std::string> fit_axes;
};

struct ExperimentConfig {
    NetworkSpec network = NetworkSpec::uniform(2, 1, 0.0);
    /// Uniform parameters, used to rebuild the network at sweep grid points.
    double r = 0.0;
    double theta = 0.0;
    double t = 1.0;
    bool has_overrides = false;
    SweepConfig sweep;
    std::optional<std::string> output_path;
    std::optional<std::string> covariance_path;
};

/**
 * Recognized keys.
 *
 * [network] n, d, r, theta, t set a uniform network. opa.L.J = r[, theta]
 * overrides OPA J of layer L, bs.L.I = t the transmittance of mode I after
 * layer L (all one-based).
 * [sweep] n, d, r, t axes; partitions = (4,4); (5,3); engine = channel |
 * moment | both; fit = d, r.
 * [output] path (sweep and sample CSV), covariance (simulate).
 *
 * Unknown sections or keys throw InvalidArgument naming the key.
 */
ExperimentConfig load_config(const IniDocument& doc);
ExperimentConfig load_config_file(const std::string& path);

/// INI text that loads back to the same network.
std::string write_network_ini(const NetworkSpec& spec);

}  // namespace opagbs::experiments
