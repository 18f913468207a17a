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

#include <iosfwd>
#include <string>
#include <vector>

namespace lric::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kBadParameters = 2,
  kIntegratorFailure = 3,
  kSweepFailed = 4,
};

/// Entry point shared by the `lric` binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// "8,12,16" or inclusive ranges "8:16:4" (start:stop:step), mixable:
/// "0,2:4". Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace lric::cli
