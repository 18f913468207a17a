// Copyright 2026 The lricwalk Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lric {

/// Raised when a parameter violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An LRIC (N, m) pair that does not describe a valid graph.
class InvalidSpec : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Dense oracle asked to work above its size guard.
class SizeGuardError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The time integrator produced a non-finite state.
class IntegratorFailure : public std::runtime_error {
 public:
  IntegratorFailure(const std::string& what, double time_reached)
      : std::runtime_error(what), time_reached_(time_reached) {}

  double time_reached() const noexcept { return time_reached_; }

 private:
  double time_reached_;
};

}  // namespace lric
