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

#ifndef RBESSEL_TOOLS_SUITES_HPP
#define RBESSEL_TOOLS_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "rbessel/circle.hpp"

namespace rbessel::cli {

enum class Rule {
  at_most,   // value <= tolerance
  exact,     // value == 0 in exact arithmetic
  nonzero,   // value finite and > 0
  report     // not gated
};

struct Case {
  std::string suite;
  std::string label;
  double value = 0.0;
  Rule rule = Rule::at_most;
  double tolerance = 0.0;
  bool pass = false;
};

/// Grid and tolerance overrides from the command line. Unset fields keep the
/// suite defaults.
struct SuiteOptions {
  std::optional<std::vector<long>> n;
  std::optional<std::vector<double>> lambda;
  std::optional<std::vector<double>> z;
  std::optional<std::vector<double>> theta;
  std::optional<int> window;
  std::optional<int> taylor_order;
  std::optional<int> window_cut;
  std::optional<int> modes;
  std::optional<double> abel_r;
  /// Regularization for the eq6prime and circle pointwise rows (default abel(abel_r)).
  std::optional<SummationMethod> summation;
  std::optional<double> tolerance;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);          // includes "all"

/// Runs one suite (or "all", in suite_names() order). Cases come back in a
/// fixed order; a case whose evaluation throws fails with value NaN.
std::vector<Case> run_suite(const std::string& name, const SuiteOptions& opt);

std::string to_string(Rule r);

}  // namespace rbessel::cli

#endif  // RBESSEL_TOOLS_SUITES_HPP
