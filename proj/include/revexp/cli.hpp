// Copyright 2026 The revexp Authors
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace revexp {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInvalidInput = 2 };

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --out file); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "all", or a comma list of values and inclusive ranges such as
/// "0,5,10-20". Every value must be below `limit`; "all" yields an empty list.
std::vector<std::uint64_t> parse_input_list(std::string_view text, std::uint64_t limit);

}  // namespace revexp
