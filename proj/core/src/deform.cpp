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

#include "rbessel/deform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rbessel {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::fourier_weights:
      return "fourier-weights";
    case Strategy::taylor_operator:
      return "taylor-operator";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "fourier" || name == "fourier-weights") return Strategy::fourier_weights;
  if (name == "taylor" || name == "taylor-operator") return Strategy::taylor_operator;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

void DeformationPlan::validate() const {
  if (!std::isfinite(lambda)) throw std::invalid_argument("DeformationPlan: lambda must be finite");
  if (window < 1) throw std::invalid_argument("DeformationPlan: window must be >= 1");
  if (taylor_order < 1) throw std::invalid_argument("DeformationPlan: taylor_order must be >= 1");
  if (!(integer_snap > 0.0)) throw std::invalid_argument("DeformationPlan: integer_snap must be > 0");
  if (!(tail_tolerance > 0.0)) throw std::invalid_argument("DeformationPlan: tail_tolerance must be > 0");
  if (std::abs(lambda) > 0.5 * window) throw std::invalid_argument("DeformationPlan: |lambda| must be <= window/2");
  if (strategy == Strategy::taylor_operator) {
    if (std::abs(lambda) > kTaylorMaxLambda) throw std::invalid_argument("DeformationPlan: Taylor path needs |lambda| <= 0.9");
    if (taylor_order > kTaylorMaxOrder) throw std::invalid_argument("DeformationPlan: Taylor path needs taylor_order <= 25");
  }
}

std::vector<double> weights(double lambda, int window, double integer_snap) {
  if (window < 0) throw std::invalid_argument("weights: negative window");
  if (!std::isfinite(lambda)) throw std::invalid_argument("weights: lambda must be finite");
  std::vector<double> w(static_cast<std::size_t>(2 * window + 1), 0.0);
  const double nearest = std::nearbyint(lambda);
  if (std::abs(lambda - nearest) <= integer_snap) {
    // t^{-r} has the single Laurent coefficient 1 at k = -r.
    const long k = -static_cast<long>(nearest);
    if (std::abs(k) <= window) w[static_cast<std::size_t>(k + window)] = 1.0;
    return w;
  }
  const double s = sin_pi(lambda) / std::numbers::pi;
  for (int k = -window; k <= window; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    w[static_cast<std::size_t>(k + window)] = sign * s / (lambda + k);
  }
  return w;
}

namespace {

DeformResult deform_fourier(long n, double z, const DeformationPlan& plan) {
  const auto w = weights(plan.lambda, plan.window, plan.integer_snap);
  DeformResult out;
  double max_term = 0.0;
  double edge = 0.0;
  for (int k = -plan.window; k <= plan.window; ++k) {
    const double wk = w[static_cast<std::size_t>(k + plan.window)];
    if (wk == 0.0) continue;
    const double term = wk * phi_direct(RealOrder(static_cast<double>(n - k)), z).value;
    out.value += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(k) == plan.window) edge = std::max(edge, std::abs(term));
  }
  out.tail = edge;
  out.converged = std::isfinite(out.value) && edge <= plan.tail_tolerance * std::max(max_term, 1e-300);
  return out;
}

// Returns the partial Taylor sum; `last` receives its final term.
PhiBasisVector taylor_sum(long n, double lambda, int window_cut, int order, PhiBasisVector* last) {
  PhiBasisVector term = PhiBasisVector::unit(n);
  PhiBasisVector acc = term;
  for (int p = 1; p <= order; ++p) {
    term = (-lambda / p) * apply_A(term, window_cut);
    acc = acc + term;
  }
  if (last) *last = std::move(term);
  return acc;
}

DeformResult deform_taylor(long n, double z, const DeformationPlan& plan) {
  PhiBasisVector last = PhiBasisVector::unit(n);
  const PhiBasisVector acc = taylor_sum(n, plan.lambda, plan.window, plan.taylor_order, &last);
  DeformResult out;
  out.value = acc.evaluate(z);
  out.tail = std::abs(last.evaluate(z));
  out.converged = std::isfinite(out.value) && out.tail <= plan.tail_tolerance * std::max(std::abs(out.value), 1e-300);
  return out;
}

}  // namespace

PhiBasisVector taylor_deformation(long n, double lambda, int window_cut, int order) {
  return taylor_sum(n, lambda, window_cut, order, nullptr);
}

DeformResult deform_phi(long n, double z, const DeformationPlan& plan) {
  plan.validate();
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::invalid_argument("deform_phi: requires finite z >= 0");
  return plan.strategy == Strategy::fourier_weights ? deform_fourier(n, z, plan) : deform_taylor(n, z, plan);
}

double unify_residual(long n, double z, const DeformationPlan& plan) {
  const double lhs = deform_phi(n, z, plan).value;
  const double rhs = phi_direct(RealOrder(static_cast<double>(n) + plan.lambda), z).value;
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

double strategy_gap(long n, double lambda, double z, int window, int taylor_order) {
  DeformationPlan plan;
  plan.lambda = lambda;
  plan.window = window;
  plan.taylor_order = taylor_order;
  plan.strategy = Strategy::fourier_weights;
  const double fourier = deform_phi(n, z, plan).value;
  plan.strategy = Strategy::taylor_operator;
  const double taylor = deform_phi(n, z, plan).value;
  return std::abs(fourier - taylor);
}

}  // namespace rbessel
