/*
 * Copyright 2026 The rbessel Authors
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

#ifndef RBESSEL_TOOLS_CLI_HPP
#define RBESSEL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rbessel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (program name excluded). Reports go to `out` (or
/// --out), summaries and diagnostics to `err`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a,b,c" or "start:stop:step" (inclusive). Throws std::invalid_argument.
std::vector<double> parse_real_list(const std::string& text);
std::vector<long> parse_int_list(const std::string& text);

}  // namespace rbessel::cli

#endif  // RBESSEL_TOOLS_CLI_HPP
