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

#ifndef RBESSEL_GENFUN_HPP
#define RBESSEL_GENFUN_HPP

#include <complex>
#include <map>

#include "rbessel/deform.hpp"
#include "rbessel/ladder.hpp"

namespace rbessel {

using complex = std::complex<double>;

/// Summation window n_min <= n <= n_max for Phi(z, t) = sum_n phi_n(z) t^n.
/// Each term phi_n uses a series of `terms` coefficients past its leading zeros.
struct GenFunWindow {
  long n_min = -40;
  long n_max = 40;
  int terms = 60;

  void validate() const;
};

/// Boundary terms |phi_n(z) t^n| at the window edges must stay below this.
inline constexpr double kWindowDecay = 1e-14;

struct GenFunValue {
  complex value{};
  /// max(|phi_{n_min}(z) t^n_min|, |phi_{n_max}(z) t^n_max|)
  double boundary = 0.0;
  /// boundary < kWindowDecay
  bool window_ok = true;
};

/// Windowed sum_n phi_n(z) t^n.
GenFunValue Phi(double z, complex t, const GenFunWindow& w);

/// exp(t/2 - z^2 / (2t)).
complex Phi_closed_form(double z, complex t);

/// |partial_m applied termwise in z-space to the windowed Phi  -  (-t)^{-m} Phi|.
/// Negative m uses primitives under `rule`.
double eq1_check(int m, double z, complex t, const GenFunWindow& w,
                 PrimitiveRule rule = PrimitiveRule::basis_closure);

/// |d Phi/dz + (z/t) Phi| with the derivative taken termwise on the z-series.
double d_eigen_check(double z, complex t, const GenFunWindow& w);

/// |sum_n deform_phi(n, lambda, z) t^n  -  t^{-lambda} Phi(z, t)| over the window,
/// t = e^{i theta}, principal branch. Requires |theta| < pi - 0.05.
double eq12_check(double z, double theta, const GenFunWindow& w, const DeformationPlan& plan);

/// Odd Laurent polynomial sum_j c_j z^(2j+1), j in Z. On this space d/(z dz) and
/// \int z dz are mutually inverse and need no integration constant.
class OddLaurentSeries {
 public:
  OddLaurentSeries() = default;
  /// z * (even series): c_k z^(2k) -> c_k z^(2k+1).
  static OddLaurentSeries times_z(const ParitySeries& even);

  OddLaurentSeries d() const;
  OddLaurentSeries primitive() const;
  /// partial_m: m factors of d for m > 0, |m| primitives for m < 0.
  OddLaurentSeries ladder(int m) const;

  OddLaurentSeries& operator+=(const OddLaurentSeries& other);
  OddLaurentSeries& operator*=(double s);

  double evaluate(double z) const;
  /// Largest |coefficient|.
  double max_coefficient() const;
  bool finite() const;
  const std::map<long, double>& terms() const noexcept { return c_; }

 private:
  std::map<long, double> c_;  // j -> coefficient of z^(2j+1)
};

struct Eq13Probe {
  complex lhs{};    // d/dz (t^{-lambda} Phi), termwise
  complex rhs{};    // (-t)^{-1} [exp(-lambda V) (z Phi)], Taylor in lambda
  complex f_est{};  // lhs / (t^{-lambda} Phi)
  /// |last Taylor term| / |previous Taylor term|, at z, worst over the window.
  double term_ratio = 0.0;
  bool taylor_converged = true;
};

/// Probe of d_lambda (e^{-lambda V} Phi) = e^{-lambda V} d Phi = (-t)^{-1} e^{-lambda V}(z Phi) dz.
/// V = sum_{0<|m|<=window_cut} partial_m / m acts on z phi_n through OddLaurentSeries,
/// with the exponential truncated at `taylor_order`. Requires |lambda| <= 0.9,
/// |theta| < pi - 0.05.
Eq13Probe eq13_probe(double z, double lambda, double theta, const GenFunWindow& w, int taylor_order,
                     int window_cut);

}  // namespace rbessel

#endif  // RBESSEL_GENFUN_HPP
