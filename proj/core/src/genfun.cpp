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

#include "rbessel/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rbessel {

void GenFunWindow::validate() const {
  if (n_min > 0 || n_max < 0) throw std::invalid_argument("GenFunWindow: requires n_min <= 0 <= n_max");
  if (terms < 1) throw std::invalid_argument("GenFunWindow: terms must be >= 1");
}

namespace {

ParitySeries term_series(long n, const GenFunWindow& w) {
  return phi_series(RealOrder(static_cast<double>(n)), w.terms + static_cast<int>(std::max(0L, -n)));
}

void require_t(complex t) {
  if (t == complex{} || !std::isfinite(t.real()) || !std::isfinite(t.imag()))
    throw std::invalid_argument("generating function: t must be finite and nonzero");
}

void require_theta(double theta) {
  if (!(std::abs(theta) < std::numbers::pi - 0.05))
    throw std::invalid_argument("generating function: requires |theta| < pi - 0.05");
}

// sum_n f(n) t^n over the window.
template <class F>
complex window_sum(const GenFunWindow& w, complex t, F&& f) {
  complex sum{};
  for (long n = w.n_min; n <= w.n_max; ++n) sum += f(n) * std::pow(t, static_cast<int>(n));
  return sum;
}

// d/dz phi_n at z, as z * (d/(z dz)) phi_n.
double phi_prime(const ParitySeries& s, double z) { return z * horner(apply_d(s), z); }

}  // namespace

GenFunValue Phi(double z, complex t, const GenFunWindow& w) {
  w.validate();
  require_t(t);
  GenFunValue out;
  out.value = window_sum(w, t, [&](long n) { return horner(term_series(n, w), z); });
  const double lo = std::abs(horner(term_series(w.n_min, w), z) * std::pow(t, static_cast<int>(w.n_min)));
  const double hi = std::abs(horner(term_series(w.n_max, w), z) * std::pow(t, static_cast<int>(w.n_max)));
  out.boundary = std::max(lo, hi);
  out.window_ok = out.boundary < kWindowDecay;
  return out;
}

complex Phi_closed_form(double z, complex t) {
  require_t(t);
  return std::exp(0.5 * t - z * z / (2.0 * t));
}

double eq1_check(int m, double z, complex t, const GenFunWindow& w, PrimitiveRule rule) {
  if (m == 0) throw std::invalid_argument("eq1_check: m must be nonzero");
  w.validate();
  require_t(t);
  const complex lhs = window_sum(w, t, [&](long n) {
    const RealOrder nu(static_cast<double>(n));
    return horner(ladder_series(term_series(n, w), nu, m, rule), z);
  });
  const complex rhs = std::pow(-t, -m) * Phi(z, t, w).value;
  return std::abs(lhs - rhs);
}

double d_eigen_check(double z, complex t, const GenFunWindow& w) {
  w.validate();
  require_t(t);
  const complex dphi = window_sum(w, t, [&](long n) { return phi_prime(term_series(n, w), z); });
  return std::abs(dphi + (z / t) * Phi(z, t, w).value);
}

double eq12_check(double z, double theta, const GenFunWindow& w, const DeformationPlan& plan) {
  w.validate();
  require_theta(theta);
  const complex t = std::polar(1.0, theta);
  const complex lhs = window_sum(w, t, [&](long n) { return deform_phi(n, z, plan).value; });
  const complex rhs = std::polar(1.0, -plan.lambda * theta) * Phi(z, t, w).value;
  return std::abs(lhs - rhs);
}

// --- OddLaurentSeries ----------------------------------------------------------

OddLaurentSeries OddLaurentSeries::times_z(const ParitySeries& even) {
  if (even.parity() != Parity::even) throw std::invalid_argument("OddLaurentSeries::times_z: even series required");
  OddLaurentSeries out;
  const auto c = even.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0.0) out.c_[static_cast<long>(k)] = c[k];
  return out;
}

OddLaurentSeries OddLaurentSeries::d() const {
  // z^(2j+1) -> (2j+1) z^(2j-1)
  OddLaurentSeries out;
  for (const auto& [j, c] : c_) out.c_[j - 1] += static_cast<double>(2 * j + 1) * c;
  return out;
}

OddLaurentSeries OddLaurentSeries::primitive() const {
  // z^(2j+1) -> z^(2j+3) / (2j+3)
  OddLaurentSeries out;
  for (const auto& [j, c] : c_) out.c_[j + 1] += c / static_cast<double>(2 * j + 3);
  return out;
}

OddLaurentSeries OddLaurentSeries::ladder(int m) const {
  OddLaurentSeries s = *this;
  for (int i = 0; i < std::abs(m); ++i) s = m > 0 ? s.d() : s.primitive();
  return s;
}

OddLaurentSeries& OddLaurentSeries::operator+=(const OddLaurentSeries& other) {
  for (const auto& [j, c] : other.c_) c_[j] += c;
  return *this;
}

OddLaurentSeries& OddLaurentSeries::operator*=(double s) {
  for (auto& [j, c] : c_) c *= s;
  return *this;
}

double OddLaurentSeries::evaluate(double z) const {
  double sum = 0.0;
  for (const auto& [j, c] : c_) sum += c * std::pow(z, static_cast<double>(2 * j + 1));
  return sum;
}

double OddLaurentSeries::max_coefficient() const {
  double m = 0.0;
  for (const auto& [j, c] : c_) m = std::max(m, std::abs(c));
  return m;
}

bool OddLaurentSeries::finite() const {
  for (const auto& [j, c] : c_)
    if (!std::isfinite(c)) return false;
  return true;
}

// --- Eq13 probe ----------------------------------------------------------------

Eq13Probe eq13_probe(double z, double lambda, double theta, const GenFunWindow& w, int taylor_order,
                     int window_cut) {
  w.validate();
  require_theta(theta);
  if (std::abs(lambda) > kTaylorMaxLambda) throw std::invalid_argument("eq13_probe: requires |lambda| <= 0.9");
  if (taylor_order < 1) throw std::invalid_argument("eq13_probe: taylor_order must be >= 1");
  if (window_cut < 1) throw std::invalid_argument("eq13_probe: window_cut must be >= 1");
  if (!(z > 0.0)) throw std::invalid_argument("eq13_probe: requires z > 0");

  const complex t = std::polar(1.0, theta);
  const complex t_lambda = std::polar(1.0, -lambda * theta);
  Eq13Probe out;

  const complex dphi = window_sum(w, t, [&](long n) { return phi_prime(term_series(n, w), z); });
  out.lhs = t_lambda * dphi;
  out.f_est = out.lhs / (t_lambda * Phi(z, t, w).value);

  auto apply_V = [window_cut](const OddLaurentSeries& s) {
    OddLaurentSeries v;
    for (int m = -window_cut; m <= window_cut; ++m) {
      if (m == 0) continue;
      OddLaurentSeries part = s.ladder(m);
      part *= 1.0 / m;
      v += part;
    }
    return v;
  };

  double worst_ratio = 0.0;
  bool converged = true;
  const complex deformed = window_sum(w, t, [&](long n) {
    OddLaurentSeries term = OddLaurentSeries::times_z(term_series(n, w));
    OddLaurentSeries acc = term;
    double prev = std::abs(term.evaluate(z));
    double last = prev;
    for (int p = 1; p <= taylor_order; ++p) {
      term = apply_V(term);
      term *= -lambda / p;
      acc += term;
      prev = last;
      last = std::abs(term.evaluate(z));
    }
    const double value = acc.evaluate(z);
    const double ratio = prev > 0.0 ? last / prev : (last > 0.0 ? INFINITY : 0.0);
    worst_ratio = std::max(worst_ratio, ratio);
    const bool settled = last == 0.0 || (ratio < 1.0 && last <= 1e-10 * std::max(std::abs(value), 1e-300));
    if (!acc.finite() || !std::isfinite(value) || !settled) converged = false;
    return value;
  });
  out.rhs = deformed / (-t);
  out.term_ratio = worst_ratio;
  out.taylor_converged = converged;
  return out;
}

}  // namespace rbessel
