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

#include "rbessel/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rbessel {

namespace {

constexpr double kClosureMatchTolerance = 1e-10;

// Scalar-dependent pieces of the basis-closure primitive.
template <class Scalar>
struct ClosureTraits;

template <>
struct ClosureTraits<double> {
  static ParitySeries phi(RealOrder nu, int order) { return phi_series(nu, order); }
  static double constant(RealOrder nu) { return closure_constant(nu); }
  static std::optional<RealOrder> infer_order(const double& c_lead, const double& c_next) {
    if (c_next == 0.0) return std::nullopt;
    const double nu = -c_lead / (4.0 * c_next) - 1.0;
    if (!std::isfinite(nu)) return std::nullopt;
    return RealOrder(nu);
  }
  static bool matches(std::span<const double> s, const ParitySeries& ref) {
    double scale = 0.0;
    for (double x : s) scale = std::max(scale, std::abs(x));
    for (std::size_t k = 0; k < s.size(); ++k)
      if (std::abs(s[k] - ref[k]) > kClosureMatchTolerance * std::max(scale, 1e-300)) return false;
    return true;
  }
};

template <>
struct ClosureTraits<Rational> {
  static long integer_order(RealOrder nu) {
    if (!nu.is_integer()) throw std::domain_error("apply_primitive: exact mode needs an integer order");
    return nu.integer_part();
  }
  static ExactSeries phi(RealOrder nu, int order) { return phi_series_exact(integer_order(nu), order); }
  static Rational constant(RealOrder nu) {
    // -1 / (2^(nu-1) (nu-1)!) for nu >= 1, and zero otherwise.
    const long n = integer_order(nu);
    if (n < 1) return Rational(0);
    boost::multiprecision::cpp_int f = 1;
    for (long i = 2; i <= n - 1; ++i) f *= i;
    f <<= static_cast<unsigned>(n - 1);
    return Rational(-1) / Rational(f);
  }
  static std::optional<RealOrder> infer_order(const Rational& c_lead, const Rational& c_next) {
    if (c_next == 0) return std::nullopt;
    const Rational nu = -c_lead / (4 * c_next) - 1;
    if (boost::multiprecision::denominator(nu) != 1) return std::nullopt;
    return RealOrder(static_cast<double>(nu));
  }
  static bool matches(std::span<const Rational> s, const ExactSeries& ref) {
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] != ref[k]) return false;
    return true;
  }
};

template <class Scalar>
std::size_t first_nonzero(std::span<const Scalar> c) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != Scalar(0)) return k;
  return c.size();
}

// Scale alpha with s = alpha * phi_nu, taken at the first nonvanishing
// coefficient of phi_nu.
template <class Scalar>
Scalar closure_scale(const BasicParitySeries<Scalar>& s, const BasicParitySeries<Scalar>& phi) {
  const auto j = first_nonzero(phi.coeffs());
  if (j >= phi.coeffs().size()) return Scalar(0);
  return s[j] / phi[j];
}

}  // namespace

double closure_constant(RealOrder nu) {
  return -recip_gamma(nu.value()) * std::exp2(1.0 - nu.value());
}

template <class Scalar>
BasicParitySeries<Scalar> apply_d(const BasicParitySeries<Scalar>& s) {
  const auto c = s.coeffs();
  const int K = s.order();
  if (s.parity() == Parity::odd && c[0] != Scalar(0))
    throw std::domain_error("apply_d: odd series with nonzero z^1 coefficient leaves the power-series space");
  if (K == 0) return BasicParitySeries<Scalar>::zero(s.parity(), 0);
  std::vector<Scalar> out(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    const auto next = c[static_cast<std::size_t>(k) + 1];
    if (s.parity() == Parity::even)
      out[static_cast<std::size_t>(k)] = Scalar(2 * (k + 1)) * next;
    else
      out[static_cast<std::size_t>(k)] = Scalar(2 * k + 3) * next;
  }
  return BasicParitySeries<Scalar>(s.parity(), std::move(out));
}

template <class Scalar>
BasicParitySeries<Scalar> apply_primitive(const BasicParitySeries<Scalar>& s, PrimitiveRule rule,
                                          std::optional<RealOrder> hint) {
  using Traits = ClosureTraits<Scalar>;
  if (s.parity() != Parity::even) throw std::invalid_argument("apply_primitive: even series required");
  const auto c = s.coeffs();
  const int K = s.order();
  std::vector<Scalar> out(static_cast<std::size_t>(K) + 2, Scalar(0));
  for (int k = 1; k <= K + 1; ++k)
    out[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] / Scalar(2 * k);

  if (rule == PrimitiveRule::basis_closure) {
    Scalar constant(0);
    if (hint) {
      const auto phi = Traits::phi(*hint, K);
      constant = closure_scale(s, phi) * Traits::constant(*hint);
    } else if (!s.is_zero()) {
      const auto j = first_nonzero(c);
      // Leading zeros mark a negative integer order -j; otherwise the first
      // coefficient ratio c_1/c_0 = -1/(4(nu+1)) fixes nu.
      std::optional<RealOrder> nu;
      if (j > 0)
        nu = RealOrder(-static_cast<double>(j));
      else if (K >= 1)
        nu = Traits::infer_order(c[0], c[1]);
      if (!nu) throw std::domain_error("apply_primitive: cannot identify the input as a multiple of a phi series");
      const auto phi = Traits::phi(*nu, K);
      const Scalar alpha = closure_scale(s, phi);
      if (!Traits::matches(c, Scalar(alpha) * phi))
        throw std::domain_error("apply_primitive: input is not a multiple of a phi series; pass a hint");
      constant = alpha * Traits::constant(*nu);
    }
    out[0] = constant;
  }
  return BasicParitySeries<Scalar>(Parity::even, std::move(out));
}

template <class Scalar>
BasicParitySeries<Scalar> ladder_series(const BasicParitySeries<Scalar>& phi_nu, RealOrder nu, int m,
                                        PrimitiveRule rule) {
  BasicParitySeries<Scalar> s = phi_nu;
  if (m > 0) {
    for (int i = 0; i < m; ++i) s = apply_d(s);
  } else {
    // Each primitive lowers the order by one: phi_nu -> -phi_{nu-1} -> +phi_{nu-2} ...
    for (int i = 0; i < -m; ++i) s = apply_primitive(s, rule, RealOrder(nu.value() - i));
  }
  return s;
}

template ParitySeries apply_d(const ParitySeries&);
template ExactSeries apply_d(const ExactSeries&);
template ParitySeries apply_primitive(const ParitySeries&, PrimitiveRule, std::optional<RealOrder>);
template ExactSeries apply_primitive(const ExactSeries&, PrimitiveRule, std::optional<RealOrder>);
template ParitySeries ladder_series(const ParitySeries&, RealOrder, int, PrimitiveRule);
template ExactSeries ladder_series(const ExactSeries&, RealOrder, int, PrimitiveRule);

// --- index-space representation -------------------------------------------

PhiBasisVector::PhiBasisVector(long n_min, std::vector<double> coeffs) : n_min_(n_min), a_(std::move(coeffs)) {
  if (a_.empty()) throw std::invalid_argument("PhiBasisVector: empty window");
  for (double x : a_)
    if (!std::isfinite(x)) throw std::invalid_argument("PhiBasisVector: non-finite coefficient");
}

PhiBasisVector PhiBasisVector::unit(long n) { return PhiBasisVector(n, {1.0}); }

PhiBasisVector PhiBasisVector::zero(long n_min, long n_max) {
  if (n_max < n_min) throw std::invalid_argument("PhiBasisVector: n_max < n_min");
  return PhiBasisVector(n_min, std::vector<double>(static_cast<std::size_t>(n_max - n_min + 1), 0.0));
}

double PhiBasisVector::operator[](long n) const noexcept {
  if (n < n_min_ || n > n_max()) return 0.0;
  return a_[static_cast<std::size_t>(n - n_min_)];
}

double PhiBasisVector::evaluate(double z) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == 0.0) continue;
    sum += a_[i] * phi_direct(RealOrder(static_cast<double>(n_min_ + static_cast<long>(i))), z).value;
  }
  return sum;
}

PhiBasisVector operator+(const PhiBasisVector& u, const PhiBasisVector& v) {
  const long lo = std::min(u.n_min(), v.n_min());
  const long hi = std::max(u.n_max(), v.n_max());
  std::vector<double> a(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (long n = u.n_min(); n <= u.n_max(); ++n) a[static_cast<std::size_t>(n - lo)] += u[n];
  for (long n = v.n_min(); n <= v.n_max(); ++n) a[static_cast<std::size_t>(n - lo)] += v[n];
  return PhiBasisVector(lo, std::move(a));
}

PhiBasisVector operator*(double s, const PhiBasisVector& v) {
  std::vector<double> a(v.a_);
  for (double& x : a) x *= s;
  return PhiBasisVector(v.n_min_, std::move(a));
}

PhiBasisVector ladder_apply(const PhiBasisVector& v, long m) {
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  std::vector<double> a(v.coeffs().begin(), v.coeffs().end());
  if (sign < 0)
    for (double& x : a) x = -x;
  return PhiBasisVector(v.n_min() + m, std::move(a));
}

PhiBasisVector apply_A(const PhiBasisVector& v, int window_cut) {
  if (window_cut < 1) throw std::invalid_argument("apply_A: window_cut must be >= 1");
  const long lo = v.n_min() - window_cut;
  const long hi = v.n_max() + window_cut;
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1), 0.0);
  const auto a = v.coeffs();
  for (int m = -window_cut; m <= window_cut; ++m) {
    if (m == 0) continue;
    // (-1)^m / m
    const double w = ((m % 2 == 0) ? 1.0 : -1.0) / m;
    const std::size_t offset = static_cast<std::size_t>(v.n_min() + m - lo);
    for (std::size_t i = 0; i < a.size(); ++i) out[offset + i] += w * a[i];
  }
  return PhiBasisVector(lo, std::move(out));
}

double ladder_check(long n, int m, double z) {
  if (std::abs(n) > 8 || std::abs(m) > 6) throw std::invalid_argument("ladder_check: requires |n| <= 8, |m| <= 6");
  if (m == 0) return 0.0;
  const RealOrder nu(static_cast<double>(n));
  const int K = 60 + static_cast<int>(std::max(0L, -n)) + std::abs(m);
  const auto lhs_series = ladder_series(phi_series(nu, K), nu, m);
  const double lhs = horner(lhs_series, z);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double rhs = sign * phi_direct(RealOrder(static_cast<double>(n + m)), z).value;
  return std::abs(lhs - rhs);
}

}  // namespace rbessel
