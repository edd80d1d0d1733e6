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

#ifndef RBESSEL_LADDER_HPP
#define RBESSEL_LADDER_HPP

#include <optional>
#include <vector>

#include "rbessel/series.hpp"

namespace rbessel {

/// Integration-constant policy of the truncated primitive  f -> \int z f dz.
enum class PrimitiveRule {
  /// Drop the constant entirely.
  zero_constant,
  /// Fix the constant so that phi_nu maps to -phi_{nu-1}.
  basis_closure,
};

/// One factor of d/(z dz).
///   even: sum c_k z^2k      -> sum 2(k+1) c_{k+1} z^2k        (order K-1)
///   odd:  sum c_k z^(2k+1)  -> sum (2k+3) c_{k+1} z^(2k+1)    (order K-1)
/// Odd input with c_0 != 0 would produce z^-1 and is rejected with std::domain_error.
template <class Scalar>
BasicParitySeries<Scalar> apply_d(const BasicParitySeries<Scalar>& s);

/// One factor of the truncated primitive \int z dz on an even series:
///   sum c_k z^2k -> sum_{k>=1} c_{k-1}/(2k) z^2k + C      (order K+1)
///
/// Under basis_closure the input is treated as alpha * phi_nu and
/// C = -alpha / (2^(nu-1) Gamma(nu)). With a hint, nu is taken from it and alpha
/// from the first nonvanishing coefficient of phi_nu. Without a hint nu and alpha
/// are recovered from the input, which must match alpha * phi_nu to 1e-10
/// coefficient-wise (exactly, for rational series); otherwise std::domain_error.
template <class Scalar>
BasicParitySeries<Scalar> apply_primitive(const BasicParitySeries<Scalar>& s, PrimitiveRule rule,
                                          std::optional<RealOrder> hint = std::nullopt);

/// The constant C for the input phi_nu (alpha = 1): -1 / (2^(nu-1) Gamma(nu)).
double closure_constant(RealOrder nu);

/// partial_m applied in z-space to the series of phi_nu: m factors of d/(z dz) for
/// m > 0, |m| primitives for m < 0. Primitives use `rule`, hinted with the running
/// order nu, nu-1, ...
template <class Scalar>
BasicParitySeries<Scalar> ladder_series(const BasicParitySeries<Scalar>& phi_nu, RealOrder nu, int m,
                                        PrimitiveRule rule = PrimitiveRule::basis_closure);

/// Finite combination sum_n a_n phi_n over the index window [n_min, n_max].
class PhiBasisVector {
 public:
  PhiBasisVector(long n_min, std::vector<double> coeffs);

  static PhiBasisVector unit(long n);
  static PhiBasisVector zero(long n_min, long n_max);

  long n_min() const noexcept { return n_min_; }
  long n_max() const noexcept { return n_min_ + static_cast<long>(a_.size()) - 1; }
  std::size_t size() const noexcept { return a_.size(); }
  /// a_n; zero outside the window.
  double operator[](long n) const noexcept;
  std::span<const double> coeffs() const noexcept { return a_; }

  /// Sum a_n phi_n(z) through phi_direct.
  double evaluate(double z) const;

  friend PhiBasisVector operator+(const PhiBasisVector& u, const PhiBasisVector& v);
  friend PhiBasisVector operator*(double s, const PhiBasisVector& v);
  friend bool operator==(const PhiBasisVector& u, const PhiBasisVector& v) = default;

 private:
  long n_min_;
  std::vector<double> a_;
};

/// partial_m phi_n = (-1)^m phi_{n+m}: coefficient a_n moves to n+m with sign (-1)^m.
PhiBasisVector ladder_apply(const PhiBasisVector& v, long m);

/// sum_{0<|m|<=window_cut} ladder_apply(v, m) / m. The window grows by window_cut
/// on both sides. Requires window_cut >= 1.
PhiBasisVector apply_A(const PhiBasisVector& v, int window_cut);

/// |LHS - RHS| at z, with LHS = m z-space ladder steps on the phi_n series
/// (basis-closure primitives) and RHS = (-1)^m phi_{n+m}(z) from phi_direct.
/// Requires |n| <= 8, |m| <= 6.
double ladder_check(long n, int m, double z);

extern template ParitySeries apply_d(const ParitySeries&);
extern template ExactSeries apply_d(const ExactSeries&);
extern template ParitySeries apply_primitive(const ParitySeries&, PrimitiveRule, std::optional<RealOrder>);
extern template ExactSeries apply_primitive(const ExactSeries&, PrimitiveRule, std::optional<RealOrder>);
extern template ParitySeries ladder_series(const ParitySeries&, RealOrder, int, PrimitiveRule);
extern template ExactSeries ladder_series(const ExactSeries&, RealOrder, int, PrimitiveRule);

}  // namespace rbessel

#endif  // RBESSEL_LADDER_HPP
