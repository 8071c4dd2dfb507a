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

#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace opagbs {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Parses a full decimal token; throws InvalidArgument on trailing garbage.
double parse_double(std::string_view token);

/// One row per line, comma-separated, shortest round-trip decimals, '\n' newlines.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);

/// Inverse of write_matrix_csv. Blank lines are skipped; rows must have equal length.
Eigen::MatrixXd read_matrix_csv(std::istream& in);

}  // namespace opagbs
