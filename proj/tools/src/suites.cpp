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

#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "parallel.hpp"
#include "rbessel/circle.hpp"
#include "rbessel/deform.hpp"
#include "rbessel/genfun.hpp"
#include "rbessel/ladder.hpp"
#include "rbessel/series.hpp"

namespace rbessel::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Job {
  std::string label;
  Rule rule;
  double tolerance;
  std::function<double()> eval;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

template <class T>
std::vector<T> pick(const std::optional<std::vector<T>>& o, std::vector<T> fallback) {
  return o ? *o : std::move(fallback);
}

std::vector<Case> run_jobs(const std::string& suite, std::vector<Job> jobs, const SuiteOptions& opt) {
  auto values = parallel_map<double>(jobs.size(), [&](std::size_t i) {
    try {
      return jobs[i].eval();
    } catch (const std::exception&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  });
  std::vector<Case> out;
  out.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Case c{suite, jobs[i].label, values[i], jobs[i].rule, jobs[i].tolerance, false};
    if (c.rule == Rule::at_most && opt.tolerance) c.tolerance = *opt.tolerance;
    switch (c.rule) {
      case Rule::at_most:
        c.pass = std::isfinite(c.value) && c.value <= c.tolerance;
        break;
      case Rule::exact:
        c.pass = c.value == 0.0;
        break;
      case Rule::nonzero:
        c.pass = std::isfinite(c.value) && c.value > 0.0;
        break;
      case Rule::report:
        c.pass = true;
        break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

// --- eq1: generating function and the ladder eigenrelation ---------------------

std::vector<Job> eq1_jobs(const SuiteOptions& opt) {
  const GenFunWindow w{-40, 40, 60};
  const auto zs = pick(opt.z, {0.0, 0.5, 1.0, 2.0, 3.0});
  const auto thetas = pick(opt.theta, {-2.5, -1.0, 0.0, 1.0, 2.5});
  const double tol = 1e-10;
  std::vector<Job> jobs;
  for (double z : zs)
    for (double th : thetas) {
      const complex t = std::polar(1.0, th);
      const std::string at = "z=" + num(z) + " theta=" + num(th);
      jobs.push_back({"Phi closed form " + at, Rule::at_most, tol,
                      [=] { return std::abs(Phi(z, t, w).value - Phi_closed_form(z, t)); }});
      if (z > 0.0)
        jobs.push_back({"d eigen " + at, Rule::at_most, tol, [=] { return d_eigen_check(z, t, w); }});
      for (int m : {-2, -1, 1, 2, 3})
        jobs.push_back({"m=" + std::to_string(m) + " " + at, Rule::at_most, tol,
                        [=] { return eq1_check(m, z, t, w); }});
    }
  jobs.push_back({"m=-1 z=0.5 theta=0.7 zero-constant", Rule::report, 0.0, [=] {
                    return eq1_check(-1, 0.5, std::polar(1.0, 0.7), w, PrimitiveRule::zero_constant);
                  }});
  return jobs;
}

// --- eq2: unifying formula, half-integer oracle, strategy agreement ------------

std::vector<Job> eq2_jobs(const SuiteOptions& opt) {
  const int W = opt.window.value_or(40);
  const int P = opt.taylor_order.value_or(20);
  std::vector<Job> jobs;
  for (long n : pick(opt.n, {-2, -1, 0, 1, 3}))
    for (double lam : pick(opt.lambda, {0.25, 1.0 / 3.0, 0.5, 0.9}))
      for (double z : pick(opt.z, {0.1, 0.5, 1.0, 2.0, 5.0})) {
        DeformationPlan plan;
        plan.lambda = lam;
        plan.window = W;
        jobs.push_back({"unify n=" + std::to_string(n) + " lambda=" + num(lam) + " z=" + num(z), Rule::at_most,
                        1e-8, [=] { return unify_residual(n, z, plan); }});
      }
  for (double z : {0.5, 1.0, 2.0, 4.0}) {
    DeformationPlan plan;
    plan.lambda = 0.5;
    plan.window = W;
    jobs.push_back({"half-integer z=" + num(z), Rule::at_most, 1e-8, [=] {
                      return std::abs(deform_phi(0, z, plan).value - std::sqrt(2.0 / (kPi * z)) * std::sin(z));
                    }});
  }
  for (double lam : {0.25, 0.5, 0.75})
    for (long n : {0L, 1L})
      for (double z : {0.5, 1.0, 2.0})
        jobs.push_back({"strategy gap n=" + std::to_string(n) + " lambda=" + num(lam) + " z=" + num(z),
                        Rule::at_most, 1e-6, [=] { return strategy_gap(n, lam, z, W, P); }});
  return jobs;
}

// --- eq6: ladder recursion ------------------------------------------------------

double exact_ladder_defect(long n, int m, int K) {
  const ExactSeries lhs = ladder_series(phi_series_exact(n, K), RealOrder(static_cast<double>(n)), m,
                                        PrimitiveRule::basis_closure);
  const ExactSeries rhs_full = phi_series_exact(n + m, K + 2 * std::abs(m));
  const auto a = lhs.coeffs();
  const auto b = rhs_full.coeffs();
  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Rational d = a[k] - sign * b[k];
    if (d != 0) worst = std::max(worst, std::max(std::abs(d.convert_to<double>()), 1e-300));
  }
  return worst;
}

std::vector<Job> eq6_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  const auto ns = pick(opt.n, {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5});
  for (long n : ns)
    for (int m = -5; m <= 5; ++m) {
      if (m == 0) continue;
      jobs.push_back({"exact n=" + std::to_string(n) + " m=" + std::to_string(m) + " K=30", Rule::exact, 0.0,
                      [=] { return exact_ladder_defect(n, m, 30); }});
      for (double z : pick(opt.z, {0.5, 1.0, 2.0}))
        jobs.push_back({"n=" + std::to_string(n) + " m=" + std::to_string(m) + " z=" + num(z), Rule::at_most,
                        1e-12, [=] { return ladder_check(n, m, z); }});
    }
  return jobs;
}

// --- eq6prime: regularized alternating sine sum ----------------------------------

std::vector<Job> eq6prime_jobs(const SuiteOptions& opt) {
  const SummationMethod sm = opt.summation.value_or(SummationMethod::abel(opt.abel_r.value_or(0.999)));
  const std::string name(to_string(sm.kind()));
  const long N = 100000;
  std::vector<Job> jobs;
  for (double th : pick(opt.theta, {-2.5, -1.5, -0.5, 0.0, 0.5, 1.5, kPi / 2, 2.0, 2.5})) {
    jobs.push_back({name + " theta=" + num(th), Rule::at_most, 5e-3, [=] {
                      const auto s = eq6prime_check(th, N, sm);
                      return std::abs(s.sum - s.target);
                    }});
    jobs.push_back({"cesaro vs " + name + " theta=" + num(th), Rule::at_most, 1e-3, [=] {
                      const auto a = eq6prime_check(th, N, sm);
                      const auto c = eq6prime_check(th, N, SummationMethod::cesaro());
                      return std::abs(a.sum - c.sum);
                    }});
  }
  return jobs;
}

// --- eq12: generating function of real order --------------------------------------

std::vector<Job> eq12_jobs(const SuiteOptions& opt) {
  const GenFunWindow w{-60, 60, 60};
  const int W = opt.window.value_or(40);
  std::vector<Job> jobs;
  for (double lam : pick(opt.lambda, {0.25, 1.0 / 3.0, 0.5, 0.9}))
    for (double z : pick(opt.z, {0.1, 0.5, 1.0, 2.0, 5.0}))
      for (double th : pick(opt.theta, {-1.0, 0.5, 2.0})) {
        DeformationPlan plan;
        plan.lambda = lam;
        plan.window = W;
        jobs.push_back({"lambda=" + num(lam) + " z=" + num(z) + " theta=" + num(th), Rule::at_most, 1e-7,
                        [=] { return eq12_check(z, th, w, plan); }});
      }
  DeformationPlan shift;
  shift.lambda = 1.0;
  shift.window = W;
  jobs.push_back({"integer shift lambda=1 z=1 theta=1", Rule::at_most, 1e-10,
                  [=] { return eq12_check(1.0, 1.0, w, shift); }});
  return jobs;
}

// --- eq13: deformed derivative probe ------------------------------------------------

std::vector<Job> eq13_jobs(const SuiteOptions& opt) {
  const GenFunWindow w{-20, 20, 40};
  const int P = opt.taylor_order.value_or(20);
  const int cut = opt.window_cut.value_or(1);
  std::vector<Job> jobs;
  for (double lam : pick(opt.lambda, {0.25, 0.5}))
    for (double z : pick(opt.z, {0.25, 0.5}))
      for (double th : pick(opt.theta, {0.3, 1.0})) {
        const std::string at = "lambda=" + num(lam) + " z=" + num(z) + " theta=" + num(th);
        jobs.push_back({"routes " + at, Rule::at_most, 1e-5, [=] {
                          const auto p = eq13_probe(z, lam, th, w, P, cut);
                          return std::abs(p.lhs - p.rhs);
                        }});
        jobs.push_back({"|F_est| " + at, Rule::nonzero, 0.0,
                        [=] { return std::abs(eq13_probe(z, lam, th, w, P, cut).f_est); }});
      }
  return jobs;
}

// --- weights: closed form against quadrature ----------------------------------------

double weight_quadrature(double lambda, int k) {
  // (1/2pi) \int_{-pi}^{pi} e^{-i lambda theta} e^{-i k theta} dtheta; the sine part is odd.
  const double a = lambda + k;
  auto f = [a](double th) { return std::cos(a * th); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -kPi, kPi, 15, 1e-14) / (2.0 * kPi);
}

std::vector<Job> weights_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  for (double lam : pick(opt.lambda, {0.25, 0.5, 0.9}))
    for (int k = -20; k <= 20; ++k)
      jobs.push_back({"lambda=" + num(lam) + " k=" + std::to_string(k), Rule::at_most, 1e-10, [=] {
                        return std::abs(weights(lam, 20)[static_cast<std::size_t>(k + 20)] -
                                        weight_quadrature(lam, k));
                      }});
  for (double lam : {0.25, 0.5, 0.9})
    jobs.push_back({"abel normalization lambda=" + num(lam) + " W=2000 r=0.999", Rule::at_most, 1e-3, [=] {
                      const int W = 2000;
                      const auto wk = weights(lam, W);
                      double s = 0.0;
                      for (int k = -W; k <= W; ++k)
                        s += wk[static_cast<std::size_t>(k + W)] * std::pow(0.999, std::abs(k));
                      return std::abs(s - 1.0);
                    }});
  return jobs;
}

// --- circle: deformed eigenstates ----------------------------------------------------

double pointwise_error(long n, double lambda, int prepot_modes, int cutoff, SummationMethod s) {
  const auto st = deformed_state(n, lambda, Prepotential::alternating(prepot_modes), cutoff, s);
  double worst = 0.0;
  const int samples = 200;
  for (int i = 0; i <= samples; ++i) {
    const double th = -kPi + 0.1 + (2.0 * kPi - 0.2) * i / samples;
    worst = std::max(worst, std::abs(st.state.evaluate(th) - std::polar(1.0, (n + lambda) * th)));
  }
  return worst;
}

std::vector<Job> circle_jobs(const SuiteOptions& opt) {
  std::vector<Job> jobs;
  const auto lams = pick(opt.lambda, {0.25, 0.5});
  const auto ns = pick(opt.n, {-1, 0, 1});
  for (double lam : lams)
    for (long n : ns)
      for (int M : {32, 64}) {
        jobs.push_back({"smooth halving lambda=" + num(lam) + " n=" + std::to_string(n) + " M=" +
                            std::to_string(M) + "->" + std::to_string(2 * M),
                        Rule::at_most, 0.5, [=] {
                          const auto s = SummationMethod::partial();
                          const double a = eigen_residual(Prepotential::smooth(M), lam, n, M, s);
                          const double b = eigen_residual(Prepotential::smooth(2 * M), lam, n, 2 * M, s);
                          return b / a;
                        }});
      }
  const int cutoff = opt.modes.value_or(2048);
  const SummationMethod sm = opt.summation.value_or(SummationMethod::abel(opt.abel_r.value_or(0.999)));
  std::string how(to_string(sm.kind()));
  if (sm.kind() == SummationMethod::Kind::abel) how += " r=" + num(sm.r());
  for (double lam : lams)
    for (long n : ns)
      jobs.push_back({"pointwise lambda=" + num(lam) + " n=" + std::to_string(n) + " cutoff=" +
                          std::to_string(cutoff) + " " + how,
                      Rule::at_most, 5e-3, [=] { return pointwise_error(n, lam, 20000, cutoff, sm); }});
  jobs.push_back({"state vs weights lambda=0.5 M=256 |k|<=10", Rule::at_most, 5e-3, [] {
                    const auto st = deformed_state(0, 0.5, Prepotential::alternating(256), 256,
                                                   SummationMethod::abel(0.999));
                    const auto w = weights(0.5, 10);
                    double worst = 0.0;
                    for (int k = -10; k <= 10; ++k)
                      worst = std::max(worst, std::abs(st.state[k] - w[static_cast<std::size_t>(-k + 10)]));
                    return worst;
                  }});
  for (int M : {32, 64, 128})
    jobs.push_back({"alternating residual lambda=0.5 n=0 M=" + std::to_string(M), Rule::report, 0.0, [=] {
                      return eigen_residual(Prepotential::alternating(M), 0.5, 0, M, SummationMethod::partial());
                    }});
  return jobs;
}

std::vector<Job> jobs_for(const std::string& name, const SuiteOptions& opt) {
  if (name == "eq1") return eq1_jobs(opt);
  if (name == "eq2") return eq2_jobs(opt);
  if (name == "eq6") return eq6_jobs(opt);
  if (name == "eq6prime") return eq6prime_jobs(opt);
  if (name == "eq12") return eq12_jobs(opt);
  if (name == "eq13") return eq13_jobs(opt);
  if (name == "weights") return weights_jobs(opt);
  if (name == "circle") return circle_jobs(opt);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eq1", "eq2", "eq6", "eq6prime", "eq12", "eq13", "weights", "circle"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::ranges::find(suite_names(), name) != suite_names().end();
}

std::vector<Case> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name != "all") return run_jobs(name, jobs_for(name, opt), opt);
  std::vector<Case> all;
  for (const auto& s : suite_names()) {
    auto part = run_jobs(s, jobs_for(s, opt), opt);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::at_most:
      return "<=";
    case Rule::exact:
      return "exact";
    case Rule::nonzero:
      return ">0";
    case Rule::report:
      return "report";
  }
  return "?";
}

}  // namespace rbessel::cli
