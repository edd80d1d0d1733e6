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

#ifndef RBESSEL_DEFORM_HPP
#define RBESSEL_DEFORM_HPP

#include <string_view>
#include <vector>

#include "rbessel/ladder.hpp"

namespace rbessel {

// The deformation operator exp(-lambda A), A = sum_{m != 0} partial_m / m.
//
// On phi-basis vectors A is the convolution with (-1)^m / m, so exp(-lambda A)
// is the convolution whose symbol on the unit circle t = e^{i theta} is
// t^{-lambda} (principal branch). Two realizations are provided:
//
//   fourier_weights  sum_k w_k phi_{n-k}, w_k the Laurent coefficient of t^k
//                    in t^{-lambda}; closed form (-1)^k sin(pi lambda) / (pi (lambda + k)).
//   taylor_operator  sum_{p <= P} (-lambda)^p A_W^p e_n / p!, with A cut at
//                    |m| <= W, evaluated through phi_direct.
//
// At non-integer lambda both converge to the Fourier coefficients of
// t^{-lambda} Phi(z, t) on |t| = 1, which is not phi_{n+lambda}: with nu = n + lambda
// the two differ by the branch-cut integral
//   (sin(pi nu) / pi) int_1^inf u^{-nu-1} e^{-u/2 + z^2/(2u)} du.

enum class Strategy { fourier_weights, taylor_operator };

std::string_view to_string(Strategy s) noexcept;
/// Accepts "fourier", "fourier-weights", "taylor", "taylor-operator".
Strategy parse_strategy(std::string_view name);

struct DeformationPlan {
  double lambda = 0.0;
  /// Indices |k| <= window are retained; also the cut of A on the Taylor path.
  int window = 40;
  Strategy strategy = Strategy::fourier_weights;
  int taylor_order = 20;
  /// |lambda - round(lambda)| <= integer_snap uses the exact integer weights.
  double integer_snap = 1e-9;
  /// Threshold for the window-too-small diagnostic.
  double tail_tolerance = 1e-12;

  /// Throws std::invalid_argument when the plan violates its invariants.
  void validate() const;
};

inline constexpr double kTaylorMaxLambda = 0.9;
inline constexpr int kTaylorMaxOrder = 25;

/// w_k for k = -window..window, stored at index k + window.
std::vector<double> weights(double lambda, int window, double integer_snap = 1e-9);

struct DeformResult {
  double value = 0.0;
  /// Largest retained boundary contribution (fourier) or last Taylor term (taylor).
  double tail = 0.0;
  bool converged = true;
};

/// exp(-lambda A) phi_n evaluated at z with the plan's strategy.
DeformResult deform_phi(long n, double z, const DeformationPlan& plan);

/// exp(-lambda A) e_n in index space by the truncated Taylor series.
PhiBasisVector taylor_deformation(long n, double lambda, int window_cut, int order);

/// |deform_phi - phi_direct(n + lambda)| / max(|phi_direct(n + lambda)|, 1e-300).
double unify_residual(long n, double z, const DeformationPlan& plan);

/// |fourier_weights - taylor_operator| at the same (n, lambda, z, window).
double strategy_gap(long n, double lambda, double z, int window, int taylor_order);

}  // namespace rbessel

#endif  // RBESSEL_DEFORM_HPP
