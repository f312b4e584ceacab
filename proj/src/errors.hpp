// Copyright 2026 The frftfit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRFTFIT_ERRORS_HPP
#define FRFTFIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frftfit {

/// Invalid argument: bad parameter value, wrong sequence length, bad grid.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Evaluation point outside the table lattice.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& msg) : std::out_of_range(msg) {}
};

/// A user-supplied function produced NaN/Inf, or an iteration failed to
/// converge.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data (CSV parse errors, duplicate dates,
/// degenerate samples).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace frftfit

#endif  // FRFTFIT_ERRORS_HPP
