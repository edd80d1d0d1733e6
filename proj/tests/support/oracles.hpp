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

// Reference values computed without the library: Boost.Math special functions
// and quadrature, plus a seeded generator for property tests.

#ifndef RBESSEL_TESTS_ORACLES_HPP
#define RBESSEL_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// Gamma(x) for x > 0 from its defining integral, with t = u^2 to remove the
/// endpoint singularity: 2 int_0^inf u^(2x-1) e^(-u^2) du.
inline double gamma_quadrature(double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [x](double u) { return u == 0.0 ? 0.0 : std::pow(u, 2.0 * x - 1.0) * std::exp(-u * u); };
  return 2.0 * integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

/// J_nu(z) / z^nu for z > 0.
inline double reduced_bessel(double nu, double z) { return boost::math::cyl_bessel_j(nu, z) / std::pow(z, nu); }

/// (1/2pi) int_{-pi}^{pi} e^{-i lambda theta} e^{-i k theta} dtheta, folded onto
/// [0, pi] (the imaginary part is odd) and split into unit panels for Gauss-Kronrod.
inline double weight_quadrature(double lambda, int k) {
  const double a = lambda + k;
  const int panels = 8 + 2 * static_cast<int>(std::ceil(std::abs(a)));
  double sum = 0.0;
  for (int i = 0; i < panels; ++i)
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [a](double th) { return std::cos(a * th); }, pi * i / panels, pi * (i + 1) / panels, 0, 0.0);
  return sum / pi;
}

/// (sin(pi nu) / pi) int_1^inf u^(-nu-1) exp(-u/2 + z^2/(2u)) du: the part of the
/// Schlaefli integral for J_nu (in reduced form) that a unit-circle contour misses.
inline double branch_cut_term(double nu, double z) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [nu, z](double u) { return std::pow(u, -nu - 1.0) * std::exp(-0.5 * u + z * z / (2.0 * u)); };
  return std::sin(pi * nu) / pi * integrator.integrate(f, 1.0, std::numeric_limits<double>::infinity());
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'b3550ULL + salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline long uniform_int(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

}  // namespace oracle

#endif  // RBESSEL_TESTS_ORACLES_HPP
