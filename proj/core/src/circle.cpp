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

#include "rbessel/circle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rbessel {

// --- FourierSeries -----------------------------------------------------------

FourierSeries::FourierSeries(int cutoff, std::vector<complex> coeffs) : cutoff_(cutoff), c_(std::move(coeffs)) {
  if (cutoff_ < 0) throw std::invalid_argument("FourierSeries: negative cutoff");
  if (c_.size() != static_cast<std::size_t>(2 * cutoff_ + 1))
    throw std::invalid_argument("FourierSeries: expected 2M+1 coefficients");
  for (const auto& x : c_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw std::invalid_argument("FourierSeries: non-finite coefficient");
}

FourierSeries FourierSeries::zero(int cutoff) {
  return FourierSeries(cutoff, std::vector<complex>(static_cast<std::size_t>(2 * std::max(cutoff, 0) + 1)));
}

FourierSeries FourierSeries::mode(int cutoff, int n) {
  if (std::abs(n) > cutoff) throw std::invalid_argument("FourierSeries::mode: |n| > cutoff");
  std::vector<complex> c(static_cast<std::size_t>(2 * cutoff + 1));
  c[static_cast<std::size_t>(n + cutoff)] = 1.0;
  return FourierSeries(cutoff, std::move(c));
}

complex FourierSeries::operator[](long m) const noexcept {
  if (m < -cutoff_ || m > cutoff_) return {};
  return c_[static_cast<std::size_t>(m + cutoff_)];
}

complex FourierSeries::evaluate(double theta) const {
  complex sum{};
  for (int m = -cutoff_; m <= cutoff_; ++m) sum += (*this)[m] * std::polar(1.0, m * theta);
  return sum;
}

double FourierSeries::norm() const {
  double s = 0.0;
  for (const auto& x : c_) s += std::norm(x);
  return std::sqrt(s);
}

bool FourierSeries::is_real_valued(double tolerance) const {
  double scale = 0.0;
  for (const auto& x : c_) scale = std::max(scale, std::abs(x));
  for (int m = 0; m <= cutoff_; ++m)
    if (std::abs((*this)[-m] - std::conj((*this)[m])) > tolerance * std::max(scale, 1e-300)) return false;
  return true;
}

// --- Prepotential / SummationMethod ------------------------------------------

Prepotential::Prepotential(double rho0, std::vector<double> rho_positive) : rho0_(rho0), rho_(std::move(rho_positive)) {
  if (!std::isfinite(rho0_)) throw std::invalid_argument("Prepotential: non-finite rho_0");
  for (double x : rho_)
    if (!std::isfinite(x)) throw std::invalid_argument("Prepotential: non-finite rho_m");
}

Prepotential Prepotential::alternating(int modes, double rho0) {
  std::vector<double> r(static_cast<std::size_t>(std::max(modes, 0)));
  for (int m = 1; m <= modes; ++m) r[static_cast<std::size_t>(m - 1)] = (m % 2 == 0) ? 1.0 : -1.0;
  return Prepotential(rho0, std::move(r));
}

Prepotential Prepotential::smooth(int modes, double rho0) {
  std::vector<double> r(static_cast<std::size_t>(std::max(modes, 0)));
  for (int m = 1; m <= modes; ++m)
    r[static_cast<std::size_t>(m - 1)] = ((m % 2 == 0) ? 1.0 : -1.0) / (1.0 + static_cast<double>(m) * m);
  return Prepotential(rho0, std::move(r));
}

Prepotential Prepotential::nearest_neighbour(double rho0) { return Prepotential(rho0, {1.0}); }

double Prepotential::rho(long m) const noexcept {
  if (m == 0) return rho0_;
  const long a = std::abs(m);
  if (a > static_cast<long>(rho_.size())) return 0.0;
  return rho_[static_cast<std::size_t>(a - 1)];
}

SummationMethod SummationMethod::abel(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("SummationMethod: abel r must lie in (0, 1)");
  return SummationMethod(Kind::abel, r);
}

double SummationMethod::weight(long m, long terms) const noexcept {
  const long a = std::abs(m);
  switch (kind_) {
    case Kind::partial:
      return 1.0;
    case Kind::abel:
      return std::pow(r_, static_cast<double>(a));
    case Kind::cesaro:
      return a > terms ? 0.0 : static_cast<double>(terms - a + 1) / static_cast<double>(terms);
  }
  return 1.0;
}

std::string_view to_string(SummationMethod::Kind kind) noexcept {
  switch (kind) {
    case SummationMethod::Kind::partial:
      return "partial";
    case SummationMethod::Kind::abel:
      return "abel";
    case SummationMethod::Kind::cesaro:
      return "cesaro";
  }
  return "unknown";
}

SummationMethod parse_summation(std::string_view name, double abel_r) {
  if (name == "partial") return SummationMethod::partial();
  if (name == "abel") return SummationMethod::abel(abel_r);
  if (name == "cesaro") return SummationMethod::cesaro();
  throw std::invalid_argument("unknown summation method '" + std::string(name) + "'");
}

// --- operators ---------------------------------------------------------------

Eigen::MatrixXd build_W_lambda(const Prepotential& p, double lambda, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("build_W_lambda: negative cutoff");
  if (p.modes() > cutoff) throw std::invalid_argument("build_W_lambda: prepotential has more modes than the cutoff");
  const int size = 2 * cutoff + 1;
  Eigen::MatrixXd w(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) w(i, j) = lambda * p.rho(i - j);
  for (int i = 0; i < size; ++i) w(i, i) += static_cast<double>(i - cutoff);
  return w;
}

namespace {

// fftw_plan_* is not thread-safe; execution is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

class Transform {
 public:
  Transform(int size, int sign) : size_(size), buf_(fftw_alloc_complex(static_cast<std::size_t>(size))) {
    if (!buf_) throw std::bad_alloc();
    std::lock_guard lock(fftw_planner_mutex());
    plan_ = fftw_plan_dft_1d(size, buf_.get(), buf_.get(), sign, FFTW_ESTIMATE);
    if (!plan_) throw std::runtime_error("fftw: planning failed");
  }
  ~Transform() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Transform(const Transform&) = delete;
  Transform& operator=(const Transform&) = delete;

  complex* data() noexcept { return reinterpret_cast<complex*>(buf_.get()); }
  void run() noexcept { fftw_execute(plan_); }
  int size() const noexcept { return size_; }

 private:
  int size_;
  FftwBuffer buf_;
  fftw_plan plan_ = nullptr;
};

// Fourier coefficients d_k, |k| <= K, of exp(-lambda g) on the uniform grid
// theta_j = -pi + 2 pi j / N.
std::vector<complex> project_exp_g(double lambda, const Prepotential& p, SummationMethod s, int K, int N) {
  Transform inverse(N, FFTW_BACKWARD);
  complex* b = inverse.data();
  std::fill(b, b + N, complex{});
  const long modes = p.modes();
  for (long m = -modes; m <= modes; ++m) {
    if (m == 0) continue;
    // e^{i m theta_j} = (-1)^m e^{2 pi i m j / N}
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double coef = sign * s.weight(m, modes) * p.rho(m) / static_cast<double>(m);
    const long q = ((m % N) + N) % N;
    b[q] += coef;
  }
  inverse.run();  // b_j = g(theta_j)

  Transform forward(N, FFTW_FORWARD);
  complex* f = forward.data();
  for (int j = 0; j < N; ++j) f[j] = std::exp(-lambda * b[j]);
  forward.run();

  std::vector<complex> d(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    d[static_cast<std::size_t>(k + K)] = sign * f[((k % N) + N) % N] / static_cast<double>(N);
  }
  return d;
}

int next_pow2(long x) {
  int n = 1;
  while (n < x) n <<= 1;
  return n;
}

}  // namespace

DeformedState deformed_state(long n, double lambda, const Prepotential& p, int cutoff, SummationMethod s,
                             const StateOptions& options) {
  if (cutoff < 1) throw std::invalid_argument("deformed_state: cutoff must be >= 1");
  if (2 * std::abs(n) > cutoff) throw std::invalid_argument("deformed_state: requires |n| <= cutoff/2");
  if (!std::isfinite(lambda)) throw std::invalid_argument("deformed_state: lambda must be finite");

  // Output mode k carries d_{k-n}.
  const int K = cutoff + static_cast<int>(std::abs(n));
  int N = next_pow2(std::max<long>(8L * cutoff, 4L * K + 4));
  auto prev = project_exp_g(lambda, p, s, K, N);
  double change = 0.0;
  bool converged = false;
  while (2 * N <= options.max_grid) {
    auto next = project_exp_g(lambda, p, s, K, 2 * N);
    change = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      change = std::max(change, std::abs(next[i] - prev[i]));
      scale = std::max(scale, std::abs(next[i]));
    }
    prev = std::move(next);
    N *= 2;
    if (change <= options.tolerance * std::max(scale, 1.0)) {
      converged = true;
      break;
    }
  }

  std::vector<complex> c(static_cast<std::size_t>(2 * cutoff + 1));
  for (int k = -cutoff; k <= cutoff; ++k)
    c[static_cast<std::size_t>(k + cutoff)] = prev[static_cast<std::size_t>(k - n + K)];
  return DeformedState{FourierSeries(cutoff, std::move(c)), N, change, converged};
}

double eigen_residual(const Prepotential& p, double lambda, long n, int cutoff, SummationMethod s,
                      const StateOptions& options) {
  const auto st = deformed_state(n, lambda, p, cutoff, s, options);
  const Eigen::MatrixXd w = build_W_lambda(p, lambda, cutoff);
  const auto c = st.state.coeffs();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  const double eigenvalue = static_cast<double>(n) + lambda * p.rho0();
  const Eigen::VectorXcd r = w.cast<complex>() * v - eigenvalue * v;
  return r.norm() / v.norm();
}

RegularizedSum eq6prime_check(double theta, long terms, SummationMethod s) {
  if (!(std::abs(theta) < std::numbers::pi - 0.05)) throw std::invalid_argument("eq6prime_check: requires |theta| < pi - 0.05");
  if (terms < 1) throw std::invalid_argument("eq6prime_check: needs at least one term");
  RegularizedSum out;
  out.target = -0.5 * theta;
  if (theta == 0.0) return out;
  double sum = 0.0;
  for (long m = 1; m <= terms; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    sum += sign * s.weight(m, terms) * std::sin(static_cast<double>(m) * theta) / static_cast<double>(m);
  }
  out.sum = sum;
  return out;
}

std::vector<double> spectrum(const Prepotential& p, double lambda, int cutoff) {
  if (cutoff > 512) throw std::invalid_argument("spectrum: cutoff must be <= 512");
  const Eigen::MatrixXd w = build_W_lambda(p, lambda, cutoff);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rbessel
