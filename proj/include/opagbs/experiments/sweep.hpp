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
#include <optional>
#include <string>
#include <vector>

#include "opagbs/entanglement.hpp"
#include "opagbs/experiments/config.hpp"

namespace opagbs::experiments {

inline constexpr std::size_t kMaxGridPoints = 100000;

struct GridPoint {
    std::size_t n = 2;
    std::size_t d = 1;
    double r = 0.0;
    double t = 1.0;
};

struct SweepRow {
    GridPoint point;
    double theta = 0.0;
    std::string partition;
    double e_n = 0.0;
    Engine engine = Engine::Channel;
    double wall_time_s = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t points = 0;
};

/// Ordinary least squares y = slope * x + intercept. Needs two distinct x values.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct FitRow {
    std::string axis;
    GridPoint point;  ///< the fitted axis field is meaningless
    double theta = 0.0;
    std::string partition;
    Engine engine = Engine::Channel;
    LinearFit fit;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<FitRow> fits;
};

/// Grid in lexicographic (n, d, r, t) order; absent axes take the network value.
std::vector<GridPoint> expand_grid(const ExperimentConfig& cfg);

/// Network of one grid point: the configured network itself when no axis is
/// swept over n or d, otherwise a uniform network.
NetworkSpec network_at(const ExperimentConfig& cfg, const GridPoint& point);

/// E_N rows of one grid point, channel engine first, then partitions in order.
std::vector<SweepRow> evaluate_point(const ExperimentConfig& cfg, const GridPoint& point,
                                     LogBase base);

/**
 * Evaluates the grid on `jobs` worker threads (0 = hardware concurrency).
 * Rows come back in grid order whatever the thread count. Fit rows are
 * added for every axis in cfg.sweep.fit_axes; the depth fit only uses points
 * with d >= n.
 */
SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t jobs, LogBase base);

/// Header n,d,r,theta,t,partition,E_N,engine,wall_time_s,slope,intercept,r2.
/// Wall time is written only when `timing` is set.
void write_sweep_csv(std::ostream& out, const SweepResult& result, bool timing);

}  // namespace opagbs::experiments
