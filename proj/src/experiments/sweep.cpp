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

#include "opagbs/experiments/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

#include "opagbs/errors.hpp"
#include "opagbs/loss_channels.hpp"
#include "opagbs/matrix_io.hpp"

namespace opagbs::experiments {

namespace {

std::size_t integer_axis_value(const char* key, double v) {
    if (v < 0 || v != std::floor(v))
        throw InvalidArgument(std::string("sweep axis '") + key + "': " + format_double(v) +
                              " is not a non-negative integer");
    return static_cast<std::size_t>(v);
}

const std::vector<double>& axis_or(const ExperimentConfig& cfg, const char* key,
                                   const std::vector<double>& fallback) {
    const auto it = cfg.sweep.axes.find(key);
    return it == cfg.sweep.axes.end() ? fallback : it->second;
}

double axis_value(const GridPoint& p, const std::string& axis) {
    if (axis == "n") return static_cast<double>(p.n);
    if (axis == "d") return static_cast<double>(p.d);
    if (axis == "r") return p.r;
    return p.t;
}

}  // namespace

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidArgument("fit_line: need at least two points");
    const double count = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) throw InvalidArgument("fit_line: x values are all equal");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += e * e;
    }
    fit.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    fit.points = x.size();
    return fit;
}

std::vector<GridPoint> expand_grid(const ExperimentConfig& cfg) {
    const auto& net = cfg.network;
    const std::vector<double> n0{static_cast<double>(net.modes())};
    const std::vector<double> d0{static_cast<double>(net.depth())};
    const std::vector<double> r0{cfg.r};
    const std::vector<double> t0{cfg.t};
    const auto& ns = axis_or(cfg, "n", n0);
    const auto& ds = axis_or(cfg, "d", d0);
    const auto& rs = axis_or(cfg, "r", r0);
    const auto& ts = axis_or(cfg, "t", t0);
    const double total = static_cast<double>(ns.size()) * static_cast<double>(ds.size()) *
                         static_cast<double>(rs.size()) * static_cast<double>(ts.size());
    if (total > static_cast<double>(kMaxGridPoints))
        throw ResourceLimit("sweep grid has " + format_double(total) + " points, cap is " +
                            std::to_string(kMaxGridPoints));
    std::vector<GridPoint> grid;
    grid.reserve(static_cast<std::size_t>(total));
    for (double n : ns)
        for (double d : ds)
            for (double r : rs)
                for (double t : ts)
                    grid.push_back({integer_axis_value("n", n), integer_axis_value("d", d), r, t});
    return grid;
}

NetworkSpec network_at(const ExperimentConfig& cfg, const GridPoint& point) {
    const auto& axes = cfg.sweep.axes;
    const bool uniform_rebuild = axes.count("n") || axes.count("d") || !cfg.has_overrides;
    if (uniform_rebuild) return NetworkSpec::uniform(point.n, point.d, point.r, cfg.theta, point.t);

    NetworkSpec spec = cfg.network;
    if (axes.count("r"))
        for (std::size_t l = 1; l <= spec.depth(); ++l)
            for (std::size_t j = 0; j < spec.layer_opas(l).size(); ++j)
                spec.set_opa(l, j, OpaSpec(point.r, spec.opa(l, j).theta));
    if (axes.count("t"))
        for (std::size_t l = 1; l <= spec.depth(); ++l)
            for (std::size_t i = 0; i < spec.modes(); ++i) spec.set_transmittance(l, i, point.t);
    return spec;
}

std::vector<SweepRow> evaluate_point(const ExperimentConfig& cfg, const GridPoint& point,
                                     LogBase base) {
    const NetworkSpec spec = network_at(cfg, point);
    std::vector<Bipartition> partitions;
    for (const auto& p : cfg.sweep.partitions) partitions.push_back(p.resolve(point.n));

    std::vector<Engine> engines;
    if (cfg.sweep.engine != Engine::Moment) engines.push_back(Engine::Channel);
    if (cfg.sweep.engine != Engine::Channel) engines.push_back(Engine::Moment);

    std::vector<SweepRow> rows;
    for (Engine engine : engines) {
        const auto start = std::chrono::steady_clock::now();
        const CovarianceState state = engine == Engine::Channel
                                          ? propagate_lossy(spec, vacuum_state(point.n))
                                          : operator_moment_covariance(spec);
        const auto results = partition_sweep(state, partitions, base);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (std::size_t i = 0; i < results.size(); ++i)
            rows.push_back({point, cfg.theta, cfg.sweep.partitions[i].text, results[i].value, engine, seconds});
    }
    return rows;
}

SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t jobs, LogBase base) {
    const auto grid = expand_grid(cfg);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(grid.size(), 1));

    std::vector<std::vector<SweepRow>> per_point(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                per_point[i] = evaluate_point(cfg, grid[i], base);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SweepResult result;
    for (auto& rows : per_point)
        for (auto& row : rows) result.rows.push_back(std::move(row));

    for (const auto& axis : cfg.sweep.fit_axes) {
        // Group by every coordinate except the fitted one, keeping first-seen order.
        using Key = std::tuple<double, double, double, double, std::string, int>;
        std::map<Key, std::size_t> index;
        std::vector<std::pair<FitRow, std::pair<std::vector<double>, std::vector<double>>>> groups;
        for (const auto& row : result.rows) {
            if (axis == "d" && row.point.d < row.point.n) continue;
            GridPoint masked = row.point;
            if (axis == "n") masked.n = 0;
            if (axis == "d") masked.d = 0;
            if (axis == "r") masked.r = 0;
            if (axis == "t") masked.t = 0;
            const Key key{double(masked.n), double(masked.d), masked.r, masked.t, row.partition,
                          static_cast<int>(row.engine)};
            auto [it, inserted] = index.emplace(key, groups.size());
            if (inserted) groups.push_back({FitRow{axis, masked, row.theta, row.partition, row.engine, {}}, {}});
            auto& data = groups[it->second].second;
            data.first.push_back(axis_value(row.point, axis));
            data.second.push_back(row.e_n);
        }
        for (auto& [fit_row, data] : groups) {
            if (data.first.size() < 2) continue;
            fit_row.fit = fit_line(data.first, data.second);
            result.fits.push_back(std::move(fit_row));
        }
    }
    return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result, bool timing) {
    out << "n,d,r,theta,t,partition,E_N,engine,wall_time_s,slope,intercept,r2\n";
    for (const auto& row : result.rows) {
        out << row.point.n << ',' << row.point.d << ',' << format_double(row.point.r) << ','
            << format_double(row.theta) << ',' << format_double(row.point.t) << ',' << row.partition
            << ',' << format_double(row.e_n) << ',' << to_string(row.engine) << ',';
        if (timing) out << format_double(row.wall_time_s);
        out << ",,,\n";
    }
    for (const auto& f : result.fits) {
        const auto cell = [&](const char* axis, const std::string& text) {
            return f.axis == axis ? std::string() : text;
        };
        out << cell("n", std::to_string(f.point.n)) << ',' << cell("d", std::to_string(f.point.d))
            << ',' << cell("r", format_double(f.point.r)) << ',' << format_double(f.theta) << ','
            << cell("t", format_double(f.point.t)) << ",fit=" << f.axis << ':' << f.partition << ",,"
            << to_string(f.engine) << ",," << format_double(f.fit.slope) << ','
            << format_double(f.fit.intercept) << ',' << format_double(f.fit.r2) << '\n';
    }
}

}  // namespace opagbs::experiments
