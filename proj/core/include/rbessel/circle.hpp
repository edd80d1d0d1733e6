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

#ifndef RBESSEL_CIRCLE_HPP
#define RBESSEL_CIRCLE_HPP

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace rbessel {

using complex = std::complex<double>;

/// Truncated Fourier series sum_{|m| <= M} c_m e^{i m theta}.
class FourierSeries {
 public:
  FourierSeries(int cutoff, std::vector<complex> coeffs);

  static FourierSeries zero(int cutoff);
  /// e^{i n theta}
  static FourierSeries mode(int cutoff, int n);

  int cutoff() const noexcept { return cutoff_; }
  /// c_m; zero for |m| > cutoff.
  complex operator[](long m) const noexcept;
  std::span<const complex> coeffs() const noexcept { return c_; }

  complex evaluate(double theta) const;
  double norm() const;
  /// c_{-m} == conj(c_m) to `tolerance` (relative to the largest coefficient).
  bool is_real_valued(double tolerance = 1e-12) const;

 private:
  int cutoff_;
  std::vector<complex> c_;
};

/// V(theta) = k theta + phi(theta) with phi' = i sum_{m != 0} rho_m e^{-i m theta};
/// the slope is carried as the real constant mode rho_0.
/// rho is symmetric (rho_{-m} = rho_m) by construction: only m > 0 is stored.
class Prepotential {
 public:
  Prepotential(double rho0, std::vector<double> rho_positive);

  /// rho_m = (-1)^m, the choice that reproduces Bessel index deformation.
  static Prepotential alternating(int modes, double rho0 = 0.0);
  /// rho_m = (-1)^m / (1 + m^2)
  static Prepotential smooth(int modes, double rho0 = 0.0);
  /// rho_m = 1 for |m| = 1, else 0.
  static Prepotential nearest_neighbour(double rho0 = 0.0);

  double rho0() const noexcept { return rho0_; }
  int modes() const noexcept { return static_cast<int>(rho_.size()); }
  /// rho_m for any m (rho_0 at m = 0, zero beyond the stored modes).
  double rho(long m) const noexcept;

 private:
  double rho0_;
  std::vector<double> rho_;  // rho_1 .. rho_M
};

class SummationMethod {
 public:
  enum class Kind { partial, abel, cesaro };

  static SummationMethod partial() { return SummationMethod(Kind::partial, 1.0); }
  /// Weights r^|m|, r in (0, 1).
  static SummationMethod abel(double r);
  /// (C,1) means of the first N partial sums: weights (N - |m| + 1) / N.
  static SummationMethod cesaro() { return SummationMethod(Kind::cesaro, 1.0); }

  Kind kind() const noexcept { return kind_; }
  double r() const noexcept { return r_; }
  /// Weight of the term with index m (|m| >= 1) in a sum of `terms` terms.
  double weight(long m, long terms) const noexcept;

 private:
  SummationMethod(Kind kind, double r) : kind_(kind), r_(r) {}
  Kind kind_;
  double r_;
};

std::string_view to_string(SummationMethod::Kind kind) noexcept;
/// "partial", "abel" (needs r), "cesaro".
SummationMethod parse_summation(std::string_view name, double abel_r = 0.999);

/// W_lambda = W + lambda sum_m rho_m Pi_m in the e^{i n theta} basis, |n| <= M:
/// entry (n', n) = n delta_{n'n} + lambda rho_{n'-n}. Real symmetric.
Eigen::MatrixXd build_W_lambda(const Prepotential& p, double lambda, int cutoff);

struct StateOptions {
  /// Largest coefficient change allowed between grids N and 2N.
  double tolerance = 1e-12;
  int max_grid = 1 << 20;
};

struct DeformedState {
  FourierSeries state;
  /// Grid size of the accepted projection.
  int grid = 0;
  /// Max coefficient change between the last two grids.
  double grid_change = 0.0;
  bool converged = true;
};

/// exp(-lambda g(theta)) e^{i n theta}, g = sum_{0<|m|<=p.modes()} w_m rho_m e^{i m theta} / m
/// with summation weights w_m, projected onto modes |k| <= cutoff by uniform
/// quadrature. The grid starts at N >= 8 * cutoff and doubles until the projected
/// coefficients stop changing. Requires |n| <= cutoff / 2.
DeformedState deformed_state(long n, double lambda, const Prepotential& p, int cutoff, SummationMethod s,
                             const StateOptions& options = {});

/// ||W_lambda v - (n + lambda rho_0) v|| / ||v|| with v = deformed_state(...).
double eigen_residual(const Prepotential& p, double lambda, long n, int cutoff, SummationMethod s,
                      const StateOptions& options = {});

struct RegularizedSum {
  double sum = 0.0;
  double target = 0.0;
};

/// sum_{m=1}^{N} (-1)^m sin(m theta) / m under `s`, with target -theta/2.
/// Requires |theta| < pi - 0.05.
RegularizedSum eq6prime_check(double theta, long terms, SummationMethod s);

/// Ascending eigenvalues of build_W_lambda(p, lambda, cutoff). Requires cutoff <= 512.
std::vector<double> spectrum(const Prepotential& p, double lambda, int cutoff);

}  // namespace rbessel

#endif  // RBESSEL_CIRCLE_HPP
