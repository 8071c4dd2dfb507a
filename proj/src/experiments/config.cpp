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

#include "opagbs/experiments/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "opagbs/errors.hpp"
#include "opagbs/matrix_io.hpp"

namespace opagbs::experiments {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        return parse_double(value);
    } catch (const InvalidArgument&) {
        throw InvalidArgument("config key '" + key + "': '" + value + "' is not a number");
    }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (v < 0 || v != std::floor(v) || v > 1e9)
        throw InvalidArgument("config key '" + key + "': '" + value + "' is not a non-negative integer");
    return static_cast<std::size_t>(v);
}

// "opa.3.2" -> {3, 2}.
std::pair<std::size_t, std::size_t> indexed_key(const std::string& key) {
    const auto parts = split(key, '.');
    if (parts.size() != 3)
        throw InvalidArgument("config key '" + key + "': expected <kind>.<layer>.<index>");
    const std::size_t layer = parse_count(key, parts[1]);
    const std::size_t index = parse_count(key, parts[2]);
    if (layer == 0 || index == 0)
        throw InvalidArgument("config key '" + key + "': layer and index are one-based");
    return {layer, index};
}

Engine parse_engine(const std::string& value) {
    if (value == "channel") return Engine::Channel;
    if (value == "moment") return Engine::Moment;
    if (value == "both") return Engine::Both;
    throw InvalidArgument("config key 'engine': expected channel, moment or both, got '" + value + "'");
}

}  // namespace

const std::string* IniDocument::find(const std::string& section, const std::string& key) const {
    const auto it = sections.find(section);
    if (it == sections.end()) return nullptr;
    const std::string* found = nullptr;
    for (const auto& [k, v] : it->second)
        if (k == key) found = &v;
    return found;
}

IniDocument parse_ini(std::istream& in) {
    IniDocument doc;
    std::string section;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw InvalidArgument("config line " + std::to_string(number) + ": unterminated section header");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            doc.sections[section];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("config line " + std::to_string(number) + ": expected key = value");
        std::string key = trim(std::string_view(s).substr(0, eq));
        if (key.empty()) throw InvalidArgument("config line " + std::to_string(number) + ": empty key");
        doc.sections[section].emplace_back(std::move(key), trim(std::string_view(s).substr(eq + 1)));
    }
    return doc;
}

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::Channel: return "channel";
        case Engine::Moment: return "moment";
        case Engine::Both: return "both";
    }
    return "channel";
}

Bipartition PartitionSpec::resolve(std::size_t n) const {
    if (text == "half") {
        if (n < 2) throw InvalidArgument("partition 'half' needs at least two modes");
        return Bipartition::contiguous(n, n / 2);
    }
    if (text == "odd-even") return Bipartition::interleaved(n);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        const auto parts = split(text.substr(1, text.size() - 2), ',');
        if (parts.size() != 2) throw InvalidArgument("partition '" + text + "': expected (k,m)");
        const std::size_t k = parse_count("partitions", parts[0]);
        const std::size_t m = parse_count("partitions", parts[1]);
        if (k + m != n)
            throw InvalidArgument("partition '" + text + "' does not cover " + std::to_string(n) + " modes");
        return Bipartition::contiguous(n, k);
    }
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
        std::vector<std::size_t> a;
        for (const auto& item : split(text.substr(1, text.size() - 2), ',')) {
            const std::size_t mode = parse_count("partitions", item);
            if (mode == 0 || mode > n)
                throw InvalidArgument("partition '" + text + "': mode " + item + " out of range");
            a.push_back(mode - 1);
        }
        return Bipartition(n, std::move(a));
    }
    throw InvalidArgument("partition '" + text + "': expected (k,m), {i,j,...}, half or odd-even");
}

std::vector<PartitionSpec> parse_partition_list(const std::string& value) {
    std::vector<PartitionSpec> out;
    for (auto& item : split(value, ';')) {
        if (item.empty()) continue;
        out.push_back({item});
    }
    if (out.empty()) throw InvalidArgument("config key 'partitions': empty list");
    return out;
}

std::vector<double> parse_axis(const std::string& key, const std::string& value) {
    std::vector<double> out;
    if (value.find(':') != std::string::npos) {
        const auto parts = split(value, ':');
        if (parts.size() != 3) throw InvalidArgument("config key '" + key + "': expected start:stop:step");
        const double start = parse_number(key, parts[0]);
        const double stop = parse_number(key, parts[1]);
        const double step = parse_number(key, parts[2]);
        if (!(step > 0) || stop < start)
            throw InvalidArgument("config key '" + key + "': need step > 0 and stop >= start");
        const double count = std::floor((stop - start) / step + 1e-9) + 1;
        if (count > 1e5) throw ResourceLimit("config key '" + key + "': axis longer than 1e5 points");
        for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i)
            out.push_back(start + static_cast<double>(i) * step);
    } else {
        for (const auto& item : split(value, ',')) {
            if (item.empty()) throw InvalidArgument("config key '" + key + "': empty list entry");
            out.push_back(parse_number(key, item));
        }
    }
    if (out.empty()) throw InvalidArgument("config key '" + key + "': no values");
    return out;
}

ExperimentConfig load_config(const IniDocument& doc) {
    static const std::set<std::string> known_sections{"network", "sweep", "output"};
    for (const auto& [name, entries] : doc.sections)
        if (!known_sections.count(name))
            throw InvalidArgument(name.empty() ? std::string("config keys must be inside a section")
                                               : "unknown config section [" + name + "]");

    ExperimentConfig cfg;
    std::size_t n = 2;
    std::size_t d = 1;
    std::vector<std::pair<std::string, std::string>> overrides;
    if (const auto it = doc.sections.find("network"); it != doc.sections.end()) {
        for (const auto& [key, value] : it->second) {
            if (key == "n") n = parse_count(key, value);
            else if (key == "d") d = parse_count(key, value);
            else if (key == "r") cfg.r = parse_number(key, value);
            else if (key == "theta") cfg.theta = parse_number(key, value);
            else if (key == "t") cfg.t = parse_number(key, value);
            else if (key.rfind("opa.", 0) == 0 || key.rfind("bs.", 0) == 0) overrides.emplace_back(key, value);
            else throw InvalidArgument("unknown config key '" + key + "' in [network]");
        }
    }
    try {
        cfg.network = NetworkSpec::uniform(n, d, cfg.r, cfg.theta, cfg.t);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(std::string("config [network] n/d/r/theta/t: ") + e.what());
    }
    for (const auto& [key, value] : overrides) {
        const auto [layer, index] = indexed_key(key);
        try {
            if (key.rfind("opa.", 0) == 0) {
                const auto parts = split(value, ',');
                if (parts.empty() || parts.size() > 2)
                    throw InvalidArgument("expected r or r, theta");
                const double r = parse_number(key, parts[0]);
                const double theta = parts.size() == 2 ? parse_number(key, parts[1]) : cfg.theta;
                cfg.network.set_opa(layer, index - 1, OpaSpec(r, theta));
            } else {
                cfg.network.set_transmittance(layer, index - 1, parse_number(key, value));
            }
        } catch (const InvalidArgument& e) {
            throw InvalidArgument("config key '" + key + "': " + e.what());
        }
    }
    cfg.has_overrides = !overrides.empty();

    if (const auto it = doc.sections.find("sweep"); it != doc.sections.end()) {
        bool fit_given = false;
        for (const auto& [key, value] : it->second) {
            if (key == "n" || key == "d" || key == "r" || key == "t") {
                cfg.sweep.axes[key] = parse_axis(key, value);
            } else if (key == "partitions") {
                cfg.sweep.partitions = parse_partition_list(value);
            } else if (key == "engine") {
                cfg.sweep.engine = parse_engine(value);
            } else if (key == "fit") {
                fit_given = true;
                cfg.sweep.fit_axes.clear();
                for (const auto& axis : split(value, ',')) {
                    if (axis.empty()) continue;
                    if (axis != "n" && axis != "d" && axis != "r" && axis != "t")
                        throw InvalidArgument("config key 'fit': unknown axis '" + axis + "'");
                    cfg.sweep.fit_axes.push_back(axis);
                }
            } else {
                throw InvalidArgument("unknown config key '" + key + "' in [sweep]");
            }
        }
        if (!fit_given)
            for (const char* axis : {"n", "d", "r", "t"})
                if (const auto a = cfg.sweep.axes.find(axis); a != cfg.sweep.axes.end() && a->second.size() > 1)
                    cfg.sweep.fit_axes.emplace_back(axis);
        if (cfg.has_overrides && (cfg.sweep.axes.count("n") || cfg.sweep.axes.count("d")))
            throw InvalidArgument("config: per-position overrides cannot be combined with n or d sweep axes");
    }
    if (cfg.sweep.partitions.empty()) cfg.sweep.partitions.push_back({"half"});
    for (const auto& p : cfg.sweep.partitions) {
        try {
            p.resolve(cfg.network.modes());
        } catch (const InvalidArgument& e) {
            if (!cfg.sweep.axes.count("n")) throw InvalidArgument(std::string("config key 'partitions': ") + e.what());
        }
    }

    if (const auto it = doc.sections.find("output"); it != doc.sections.end()) {
        for (const auto& [key, value] : it->second) {
            if (key == "path") cfg.output_path = value;
            else if (key == "covariance") cfg.covariance_path = value;
            else throw InvalidArgument("unknown config key '" + key + "' in [output]");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    return load_config(parse_ini(in));
}

std::string write_network_ini(const NetworkSpec& spec) {
    std::ostringstream out;
    out << "[network]\n";
    out << "n = " << spec.modes() << "\n";
    out << "d = " << spec.depth() << "\n";
    for (std::size_t layer = 1; layer <= spec.depth(); ++layer) {
        const auto& opas = spec.layer_opas(layer);
        for (std::size_t j = 0; j < opas.size(); ++j)
            out << "opa." << layer << '.' << j + 1 << " = " << format_double(opas[j].r) << ", "
                << format_double(opas[j].theta) << "\n";
    }
    for (std::size_t layer = 1; layer <= spec.depth(); ++layer) {
        const auto& ts = spec.layer_transmittance(layer);
        for (std::size_t i = 0; i < ts.size(); ++i)
            out << "bs." << layer << '.' << i + 1 << " = " << format_double(ts[i]) << "\n";
    }
    return out.str();
}

}  // namespace opagbs::experiments
