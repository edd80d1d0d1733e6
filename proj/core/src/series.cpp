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

#include "rbessel/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rbessel {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// Relative size below which an automatic truncation stops adding terms.
constexpr double kAutoStopRatio = 1e-16;

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("sin_pi: non-finite argument");
  // r in [-1, 1]
  double r = x - 2.0 * std::nearbyint(0.5 * x);
  if (r == std::nearbyint(r)) return 0.0;
  double sign = 1.0;
  if (r < 0.0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw std::domain_error("gamma: pole at non-positive integer " + std::to_string(x));
  return std::tgamma(x);
}

double recip_gamma(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("recip_gamma: non-finite argument");
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return 1.0 / std::tgamma(x);
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  return sin_pi(x) * std::tgamma(1.0 - x) / std::numbers::pi;
}

RealOrder::RealOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu)) throw std::invalid_argument("RealOrder: order must be finite");
}

ParitySeries phi_series(RealOrder order, int K) {
  if (K < 0) throw std::invalid_argument("phi_series: negative truncation order");
  const double nu = order.value();
  const double scale = std::exp2(-nu);
  std::vector<double> c(static_cast<std::size_t>(K) + 1);
  double inv_fact = 1.0;  // 1/k!
  for (int k = 0; k <= K; ++k) {
    if (k > 0) inv_fact /= k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(k)] = sign * recip_gamma(nu + k + 1) * std::ldexp(scale, -2 * k) * inv_fact;
  }
  return ParitySeries(Parity::even, std::move(c));
}

ExactSeries phi_series_exact(long n, int K) {
  if (K < 0) throw std::invalid_argument("phi_series_exact: negative truncation order");
  using boost::multiprecision::cpp_int;
  std::vector<Rational> c(static_cast<std::size_t>(K) + 1, Rational(0));
  for (long k = 0; k <= K; ++k) {
    if (n + k < 0) continue;  // 1/Gamma(n+k+1) = 0
    cpp_int k_fact = 1;
    for (long i = 2; i <= k; ++i) k_fact *= i;
    cpp_int nk_fact = 1;
    for (long i = 2; i <= n + k; ++i) nk_fact *= i;
    const long p = 2 * k + n;
    Rational den(k_fact * nk_fact);
    if (p >= 0)
      den *= Rational(cpp_int(1) << static_cast<unsigned>(p));
    else
      den /= Rational(cpp_int(1) << static_cast<unsigned>(-p));
    Rational v = Rational(1) / den;
    c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : Rational(-v);
  }
  return ExactSeries(Parity::even, std::move(c));
}

ExactSeries to_exact(const ParitySeries& s) {
  std::vector<Rational> c;
  c.reserve(s.coeffs().size());
  for (double x : s.coeffs()) c.emplace_back(x);  // binary doubles are exact rationals
  return ExactSeries(s.parity(), std::move(c));
}

ParitySeries to_double(const ExactSeries& s) {
  std::vector<double> c;
  c.reserve(s.coeffs().size());
  for (const auto& x : s.coeffs()) c.push_back(static_cast<double>(x));
  return ParitySeries(s.parity(), std::move(c));
}

double horner(const ParitySeries& s, double z) {
  const double z2 = z * z;
  const auto c = s.coeffs();
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z2 + c[k];
  return s.parity() == Parity::odd ? acc * z : acc;
}

SeriesValue eval(const ParitySeries& s, double z, double tolerance) {
  SeriesValue out;
  out.value = horner(s, z);
  const double z2 = z * z;
  const auto c = s.coeffs();
  double power = s.parity() == Parity::odd ? z : 1.0;
  double partial = 0.0;
  double scale = 0.0;
  double term = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    term = c[k] * power;
    partial += term;
    scale = std::max(scale, std::abs(partial));
    power *= z2;
  }
  out.tail = std::abs(term);
  out.converged = std::isfinite(out.value) && out.tail <= tolerance * scale;
  if (out.tail == 0.0 && std::isfinite(out.value)) out.converged = true;
  return out;
}

namespace {

struct AutoSum {
  double lead = 0.0;        // c_{k0} z^{2 k0}
  double normalized = 0.0;  // sum of terms divided by lead
  double last_ratio = 0.0;  // |last term| / |lead|
  double max_partial = 0.0; // max |partial sum| / |lead|
  int k0 = 0;
  int order = 0;  // K_auto
  bool stopped = false;
};

AutoSum auto_sum(RealOrder order, double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::invalid_argument("phi_direct: requires finite z >= 0");
  const double nu = order.value();
  AutoSum r;
  r.k0 = (order.is_integer() && nu < 0.0) ? static_cast<int>(-order.integer_part()) : 0;

  // lead = (-1)^k0 z^(2 k0) / (2^(2 k0 + nu) k0! Gamma(nu + k0 + 1))
  const double rg = recip_gamma(nu + r.k0 + 1);
  if (z == 0.0) {
    r.lead = r.k0 == 0 ? rg * std::exp2(-nu) : 0.0;
  } else {
    double log_mag = -nu * std::numbers::ln2;
    const double lz2 = std::log(z * z / 4.0);
    for (int i = 1; i <= r.k0; ++i) log_mag += lz2 - std::log(static_cast<double>(i));
    r.lead = ((r.k0 % 2 == 0) ? 1.0 : -1.0) * rg * std::exp(log_mag);
  }

  const double quarter_z2 = 0.25 * z * z;
  double u = 1.0;
  double sum = 1.0;
  double max_partial = 1.0;
  int j = 0;
  for (; j < kMaxAutoTerms; ++j) {
    const double k = r.k0 + j;
    const double denom = (k + 1.0) * (nu + k + 1.0);
    u *= -quarter_z2 / denom;
    sum += u;
    max_partial = std::max(max_partial, std::abs(sum));
    const bool decreasing = nu + k + 1.0 > 0.0 && denom > quarter_z2;
    if (decreasing && std::abs(u) < kAutoStopRatio * max_partial) {
      r.stopped = true;
      ++j;
      break;
    }
  }
  r.normalized = sum;
  r.last_ratio = std::abs(u);
  r.max_partial = max_partial;
  r.order = r.k0 + j;
  return r;
}

}  // namespace

int auto_order(RealOrder nu, double z) { return auto_sum(nu, z).order; }

SeriesValue phi_direct(RealOrder nu, double z, double tolerance) {
  const AutoSum r = auto_sum(nu, z);
  SeriesValue out;
  out.value = r.lead * r.normalized;
  out.tail = std::abs(r.lead) * r.last_ratio;
  out.converged = std::isfinite(out.value) && (r.stopped || r.last_ratio <= tolerance * r.max_partial);
  return out;
}

}  // namespace rbessel
