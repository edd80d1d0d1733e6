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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rbessel/deform.hpp"

namespace rbessel {
namespace {

DeformationPlan plan_for(double lambda, int window = 40, Strategy s = Strategy::fourier_weights) {
  DeformationPlan p;
  p.lambda = lambda;
  p.window = window;
  p.strategy = s;
  return p;
}

double w_at(const std::vector<double>& w, int window, int k) { return w[static_cast<std::size_t>(k + window)]; }

TEST(Weights, HalfAtZero) {
  const auto w = weights(0.5, 5);
  EXPECT_NEAR(w_at(w, 5, 0), 2.0 / oracle::pi, 1e-16);
  EXPECT_NEAR(oracle::weight_quadrature(0.5, 0), 0.6366197723675814, 1e-12);
}

TEST(Weights, IntegerLambdaIsAShift) {
  const auto w0 = weights(0.0, 4);
  const auto w1 = weights(1.0, 4);
  const auto w1n = weights(1.0 + 1e-12, 4);
  for (int k = -4; k <= 4; ++k) {
    EXPECT_EQ(w_at(w0, 4, k), k == 0 ? 1.0 : 0.0);
    EXPECT_EQ(w_at(w1, 4, k), k == -1 ? 1.0 : 0.0);
    EXPECT_EQ(w_at(w1n, 4, k), k == -1 ? 1.0 : 0.0);
  }
}

TEST(Weights, MatchQuadrature) {
  for (double lambda : {0.25, 0.5, 0.9, -0.3, 1.7})
    for (int k = -20; k <= 20; ++k)
      EXPECT_NEAR(w_at(weights(lambda, 20), 20, k), oracle::weight_quadrature(lambda, k), 1e-10)
          << "lambda=" << lambda << " k=" << k;
}

TEST(Weights, AbelNormalization) {
  const int W = 2000;
  for (double lambda : {0.25, 0.5, 0.9}) {
    const auto w = weights(lambda, W);
    double s = 0.0;
    for (int k = -W; k <= W; ++k) s += w_at(w, W, k) * std::pow(0.999, std::abs(k));
    EXPECT_LE(std::abs(s - 1.0), 1e-3) << "lambda=" << lambda;
  }
}

TEST(Plan, Validation) {
  EXPECT_NO_THROW(plan_for(0.5).validate());
  EXPECT_THROW(plan_for(21.0).validate(), std::invalid_argument);
  EXPECT_THROW(plan_for(0.5, 0).validate(), std::invalid_argument);
  EXPECT_THROW(plan_for(0.95, 40, Strategy::taylor_operator).validate(), std::invalid_argument);
  auto p = plan_for(0.5, 40, Strategy::taylor_operator);
  p.taylor_order = 26;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = plan_for(0.5);
  p.integer_snap = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_THROW(deform_phi(0, -1.0, plan_for(0.5)), std::invalid_argument);
}

TEST(Strategy, Names) {
  EXPECT_EQ(parse_strategy("fourier"), Strategy::fourier_weights);
  EXPECT_EQ(parse_strategy("taylor-operator"), Strategy::taylor_operator);
  EXPECT_EQ(to_string(Strategy::fourier_weights), "fourier-weights");
  EXPECT_THROW(parse_strategy("magic"), std::invalid_argument);
}

TEST(DeformPhi, IdentityPlan) {
  for (double z : {0.0, 0.7, 3.0}) {
    EXPECT_EQ(deform_phi(3, z, plan_for(0.0)).value, phi_direct(RealOrder(3.0), z).value);
    EXPECT_EQ(deform_phi(3, z, plan_for(0.0, 40, Strategy::taylor_operator)).value,
              phi_direct(RealOrder(3.0), z).value);
  }
  EXPECT_LE(unify_residual(1, 3.0, plan_for(0.0)), 1e-14);
}

TEST(DeformPhi, IntegerShift) {
  EXPECT_NEAR(deform_phi(0, 2.0, plan_for(1.0)).value, phi_direct(RealOrder(1.0), 2.0).value, 1e-12);
  for (long n : {-3L, 0L, 2L})
    for (double lambda : {-2.0, 1.0, 3.0}) EXPECT_LE(unify_residual(n, 1.3, plan_for(lambda)), 1e-12);
}

// The weights realize the Fourier coefficients of t^{-lambda} Phi(z, t) on the
// unit circle. Those equal phi_{n+lambda} plus the branch-cut integral of the
// Schlaefli representation, which is what the fourier path must reproduce.
TEST(DeformPhi, FourierPathEqualsContourIntegral) {
  for (long n : {-2L, -1L, 0L, 1L, 3L})
    for (double lambda : {0.25, 1.0 / 3.0, 0.5, 0.9})
      for (double z : {0.1, 0.5, 1.0, 2.0}) {
        const double nu = static_cast<double>(n) + lambda;
        const double ref = oracle::reduced_bessel(nu, z) + oracle::branch_cut_term(nu, z);
        EXPECT_NEAR(deform_phi(n, z, plan_for(lambda)).value, ref, 1e-9 * std::max(1.0, std::abs(ref)))
            << "n=" << n << " lambda=" << lambda << " z=" << z;
      }
}

TEST(DeformPhi, HalfIntegerAtUnitArgumentIsAngerValue) {
  // J-bold_{1/2}(1) = (1/pi) int_0^pi cos(t/2 - sin t) dt; deform(0, 1/2, 1) equals it.
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double anger =
      integrator.integrate([](double t) { return std::cos(0.5 * t - std::sin(t)); }, 0.0, oracle::pi) / oracle::pi;
  EXPECT_NEAR(deform_phi(0, 1.0, plan_for(0.5)).value, anger, 1e-12);
  EXPECT_GT(std::abs(anger - std::sqrt(2.0 / oracle::pi) * std::sin(1.0)), 0.1);
}

TEST(DeformPhi, UnifyResidualIsBranchCutRatio) {
  for (double lambda : {0.25, 0.5})
    for (double z : {0.5, 1.0}) {
      const double phi = oracle::reduced_bessel(lambda, z);
      const double expected = std::abs(oracle::branch_cut_term(lambda, z)) / std::abs(phi);
      EXPECT_NEAR(unify_residual(0, z, plan_for(lambda)), expected, 1e-8 * expected);
    }
}

TEST(DeformPhi, WindowTooSmallDiagnostic) {
  EXPECT_TRUE(deform_phi(0, 1.0, plan_for(0.5)).converged);
  const auto small = deform_phi(0, 5.0, plan_for(0.5));
  EXPECT_FALSE(small.converged);
  EXPECT_GT(small.tail, 0.0);
  EXPECT_TRUE(deform_phi(0, 5.0, plan_for(0.5, 80)).converged);
}

TEST(DeformPhi, ContinuousThroughIntegerSnap) {
  for (long n : {-2L, 0L, 1L, 3L})
    for (double z : {0.1, 0.5, 1.0, 2.0}) {
      const double a = deform_phi(n, z, plan_for(1.0 - 1e-6)).value;
      const double b = deform_phi(n, z, plan_for(1.0)).value;
      EXPECT_LE(std::abs(a - b), 1e-4) << "n=" << n << " z=" << z;
    }
}

// At z = 5 the terms phi_{n-k} for large k reach 1e4, so the slope in lambda is
// large; the map is still continuous, the gap scaling linearly with the offset.
TEST(DeformPhi, LargeArgumentGapIsLinearInOffset) {
  for (long n : {-2L, 0L, 3L}) {
    const double b = deform_phi(n, 5.0, plan_for(1.0)).value;
    const double g6 = std::abs(deform_phi(n, 5.0, plan_for(1.0 - 1e-6)).value - b);
    const double g7 = std::abs(deform_phi(n, 5.0, plan_for(1.0 - 1e-7)).value - b);
    EXPECT_GT(g6, 1e-4) << "n=" << n;
    EXPECT_NEAR(g6 / g7, 10.0, 0.01) << "n=" << n;
  }
}

TEST(DeformPhi, CommutesWithLadderShift) {
  auto g = oracle::rng(21);
  for (int i = 0; i < 40; ++i) {
    const long n = oracle::uniform_int(g, -3, 3);
    const long m = oracle::uniform_int(g, -3, 3);
    const double lambda = oracle::uniform(g, -0.9, 0.9);
    const double z = oracle::uniform(g, 0.1, 2.0);
    // Shift first: (-1)^m phi_{n+m}, deformed. Deform first, then shift every term.
    const double sign = m % 2 ? -1.0 : 1.0;
    const double shift_then_deform = sign * deform_phi(n + m, z, plan_for(lambda)).value;
    const auto w = weights(lambda, 40);
    double deform_then_shift = 0.0;
    for (int k = -40; k <= 40; ++k)
      deform_then_shift += w_at(w, 40, k) * ladder_apply(PhiBasisVector::unit(n - k), m).evaluate(z);
    EXPECT_NEAR(shift_then_deform, deform_then_shift, 1e-8 * std::max(1.0, std::abs(deform_then_shift)));
  }
}

// Group law in index space: w(l1) * w(l2) = w(l1 + l2) as Fourier series, so the
// composed deformation approaches the single one as the inner window grows.
TEST(DeformPhi, GroupLawConvergesWithWindow) {
  auto composed = [](long n, double l1, double l2, double z, int W) {
    const auto w2 = weights(l2, W / 2);
    double s = 0.0;
    for (int j = -W / 2; j <= W / 2; ++j) s += w_at(w2, W / 2, j) * deform_phi(n - j, z, plan_for(l1, W)).value;
    return s;
  };
  for (double z : {0.5, 1.0}) {
    const double direct = deform_phi(0, z, plan_for(0.5, 400)).value;
    const double e40 = std::abs(composed(0, 0.2, 0.3, z, 40) - direct);
    const double e160 = std::abs(composed(0, 0.2, 0.3, z, 160) - direct);
    EXPECT_LT(e160, 0.5 * e40) << "z=" << z;
  }
}

// With A cut at |m| <= 1, A e_n = e_{n-1} - e_{n+1}; exp(-lambda A) e_0 then has the
// coefficients of exp(lambda (t - 1/t)), the Bessel generating function at 2 lambda.
TEST(TaylorDeformation, CutOneGivesBesselCoefficients) {
  for (double lambda : {0.25, 0.5, 0.9}) {
    const auto v = taylor_deformation(0, lambda, 1, 25);
    for (long k = -6; k <= 6; ++k)
      EXPECT_NEAR(v[k], boost::math::cyl_bessel_j(static_cast<double>(k), 2.0 * lambda), 1e-15)
          << "lambda=" << lambda << " k=" << k;
  }
}

TEST(TaylorDeformation, ApproachesFourierAsCutGrows) {
  double previous = INFINITY;
  for (int cut : {10, 20, 40}) {
    const double gap = strategy_gap(0, 0.5, 1.0, cut, 20);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LE(strategy_gap(0, 0.0, 1.0, 40, 20), 1e-14);
}

TEST(TaylorDeformation, ConvergedAtModerateLambda) {
  const auto r = deform_phi(1, 0.5, plan_for(0.5, 40, Strategy::taylor_operator));
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_GT(r.tail, 0.0);
}

}  // namespace
}  // namespace rbessel
