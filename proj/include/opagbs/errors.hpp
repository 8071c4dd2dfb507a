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

#include <stdexcept>
#include <string>

namespace opagbs {

// Error kinds surfaced by the library. The CLI maps them to exit codes.

class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The input state violates the uncertainty principle.
class InvalidState : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class NumericalFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A combinatorial or size guard was exceeded.
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace opagbs
