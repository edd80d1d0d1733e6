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

#ifndef RBESSEL_SERIES_HPP
#define RBESSEL_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbessel {

/// Exact rational scalar used for coefficient-identity work.
using Rational = boost::multiprecision::cpp_rational;

/// Gamma function. Throws std::domain_error at the poles 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x); a total function with exact zeros at the non-positive integers.
double recip_gamma(double x);

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

/// A Bessel order nu, usually split as nu = n + lambda with n the nearest integer.
class RealOrder {
 public:
  explicit RealOrder(double nu);

  double value() const noexcept { return nu_; }
  /// Nearest integer to nu (halves round away from zero).
  long integer_part() const noexcept { return std::lround(nu_); }
  /// nu - integer_part(), in [-1/2, 1/2].
  double fractional_part() const noexcept { return nu_ - static_cast<double>(integer_part()); }
  bool is_integer() const noexcept { return nu_ == std::nearbyint(nu_); }

 private:
  double nu_;
};

enum class Parity { even, odd };

/// Truncated power series of fixed parity: coefficient k multiplies z^(2k + parity).
template <class Scalar>
class BasicParitySeries {
 public:
  BasicParitySeries(Parity parity, std::vector<Scalar> coeffs)
      : parity_(parity), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ParitySeries: needs at least one coefficient");
    if constexpr (std::is_floating_point_v<Scalar>) {
      for (const auto& c : coeffs_)
        if (!std::isfinite(c)) throw std::invalid_argument("ParitySeries: non-finite coefficient");
    }
  }

  static BasicParitySeries zero(Parity parity, int order) {
    if (order < 0) throw std::invalid_argument("ParitySeries: negative truncation order");
    return BasicParitySeries(parity, std::vector<Scalar>(static_cast<std::size_t>(order) + 1, Scalar(0)));
  }

  Parity parity() const noexcept { return parity_; }
  /// Truncation order K; there are K + 1 coefficients.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Drops coefficients above `order`, or pads with zeros.
  BasicParitySeries truncated(int order) const {
    if (order < 0) throw std::invalid_argument("ParitySeries: negative truncation order");
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
    for (std::size_t k = 0; k < c.size() && k < coeffs_.size(); ++k) c[k] = coeffs_[k];
    return BasicParitySeries(parity_, std::move(c));
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != Scalar(0)) return false;
    return true;
  }

  friend BasicParitySeries operator+(const BasicParitySeries& a, const BasicParitySeries& b) {
    return combine(a, b, Scalar(1));
  }
  friend BasicParitySeries operator-(const BasicParitySeries& a, const BasicParitySeries& b) {
    return combine(a, b, Scalar(-1));
  }
  friend BasicParitySeries operator*(const Scalar& s, const BasicParitySeries& a) {
    std::vector<Scalar> c(a.coeffs_);
    for (auto& x : c) x *= s;
    return BasicParitySeries(a.parity_, std::move(c));
  }
  friend bool operator==(const BasicParitySeries& a, const BasicParitySeries& b) {
    return a.parity_ == b.parity_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static BasicParitySeries combine(const BasicParitySeries& a, const BasicParitySeries& b, const Scalar& sb) {
    if (a.parity_ != b.parity_) throw std::invalid_argument("ParitySeries: parity mismatch");
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += sb * b.coeffs_[k];
    return BasicParitySeries(a.parity_, std::move(c));
  }

  Parity parity_;
  std::vector<Scalar> coeffs_;
};

using ParitySeries = BasicParitySeries<double>;
using ExactSeries = BasicParitySeries<Rational>;

/// Coefficients of phi_nu(z) = J_nu(z) / z^nu:
///   c_k = (-1)^k / (2^(2k+nu) k! Gamma(nu+k+1)).
/// For nu = -p (p a positive integer) the first p coefficients are exactly zero.
ParitySeries phi_series(RealOrder nu, int order);

/// Same coefficients in exact rational arithmetic; integer orders only.
ExactSeries phi_series_exact(long n, int order);

ExactSeries to_exact(const ParitySeries& s);
ParitySeries to_double(const ExactSeries& s);

/// Result of a truncated-series evaluation.
struct SeriesValue {
  double value = 0.0;
  /// Magnitude of the last retained term.
  double tail = 0.0;
  /// False when tail exceeds tolerance relative to the largest partial sum.
  bool converged = true;
};

inline constexpr double kDefaultTailTolerance = 1e-13;

/// Plain Horner evaluation in z^2 (times z for odd parity).
double horner(const ParitySeries& s, double z);

/// Horner evaluation together with the truncation diagnostic.
SeriesValue eval(const ParitySeries& s, double z, double tolerance = kDefaultTailTolerance);

/// Automatic truncation for phi_nu at z: the smallest K past the leading zeros
/// and past the term peak with |c_K z^2K| < 1e-16 * max |partial sum|.
/// At most kMaxAutoTerms terms are taken after the first nonvanishing one.
inline constexpr int kMaxAutoTerms = 120;
int auto_order(RealOrder nu, double z);

/// phi_nu(z) = J_nu(z) / z^nu from the ascending series with automatic truncation.
/// Requires z >= 0. Leading factors are formed in log space, so deep negative
/// integer orders (many leading zeros) do not overflow.
SeriesValue phi_direct(RealOrder nu, double z, double tolerance = kDefaultTailTolerance);

}  // namespace rbessel

#endif  // RBESSEL_SERIES_HPP
