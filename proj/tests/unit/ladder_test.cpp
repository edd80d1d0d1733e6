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
#include "rbessel/ladder.hpp"

namespace rbessel {
namespace {

ExactSeries exact(std::initializer_list<long> c, Parity p = Parity::even) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactSeries(p, std::move(v));
}

TEST(ApplyD, PhiZeroRaisesToMinusPhiOne) {
  const ExactSeries d = apply_d(phi_series_exact(0, 20));
  EXPECT_EQ(d, Rational(-1) * phi_series_exact(1, 19));
}

TEST(ApplyD, ZeroAndMonomial) {
  EXPECT_TRUE(apply_d(ExactSeries::zero(Parity::even, 5)).is_zero());
  EXPECT_EQ(apply_d(exact({0, 1})), exact({2}));
  // d/(z dz) z^3 = 3 z
  EXPECT_EQ(apply_d(exact({0, 1}, Parity::odd)), exact({3}, Parity::odd));
}

TEST(ApplyD, OddSeriesWithLinearTermIsRejected) {
  EXPECT_THROW(apply_d(exact({1, 1}, Parity::odd)), std::domain_error);
  EXPECT_THROW(apply_d(ParitySeries(Parity::odd, {0.5})), std::domain_error);
}

TEST(ApplyPrimitive, PhiOneLowersToMinusPhiZero) {
  const ExactSeries p = apply_primitive(phi_series_exact(1, 20), PrimitiveRule::basis_closure, RealOrder(1.0));
  EXPECT_EQ(p, Rational(-1) * phi_series_exact(0, 21));
}

TEST(ApplyPrimitive, ZeroConstantOnMonomial) {
  const ExactSeries p = apply_primitive(exact({0, 1}), PrimitiveRule::zero_constant);
  EXPECT_EQ(p, ExactSeries(Parity::even, {Rational(0), Rational(0), Rational(1, 4)}));
}

TEST(ApplyPrimitive, InfersOrderWithoutHint) {
  for (long n = -4; n <= 6; ++n) {
    const auto s = phi_series_exact(n, 20);
    EXPECT_EQ(apply_primitive(s, PrimitiveRule::basis_closure),
              apply_primitive(s, PrimitiveRule::basis_closure, RealOrder(static_cast<double>(n))))
        << "n=" << n;
  }
  for (double nu : {0.5, 1.75, -2.25}) {
    const auto s = 3.0 * phi_series(RealOrder(nu), 25);
    const auto a = apply_primitive(s, PrimitiveRule::basis_closure);
    const auto b = apply_primitive(s, PrimitiveRule::basis_closure, RealOrder(nu));
    for (int k = 0; k <= a.order(); ++k) EXPECT_NEAR(a[k], b[k], 1e-12 * std::max(1.0, std::abs(b[k])));
  }
}

TEST(ApplyPrimitive, RejectsNonPhiInputWithoutHint) {
  EXPECT_THROW(apply_primitive(ParitySeries(Parity::even, {1.0, 1.0, 1.0}), PrimitiveRule::basis_closure),
               std::domain_error);
  EXPECT_THROW(apply_primitive(exact({1, 1, 1}), PrimitiveRule::basis_closure), std::domain_error);
  EXPECT_THROW(apply_primitive(exact({1}, Parity::odd), PrimitiveRule::zero_constant), std::invalid_argument);
}

TEST(ApplyPrimitive, InversePairExact) {
  for (long n = -6; n <= 6; ++n) {
    const auto s = phi_series_exact(n, 25);
    const RealOrder nu(static_cast<double>(n));
    const RealOrder lowered(static_cast<double>(n + 1));
    // apply_d(phi_n) = -phi_{n+1}; the primitive hinted with n+1 returns phi_n.
    EXPECT_EQ(apply_primitive(apply_d(s), PrimitiveRule::basis_closure, lowered), s.truncated(25)) << "n=" << n;
    EXPECT_EQ(apply_d(apply_primitive(s, PrimitiveRule::basis_closure, nu)), s) << "n=" << n;
  }
}

TEST(ApplyPrimitive, ConstantDifferenceIsClosureConstant) {
  for (double nu : {-1.5, 0.5, 1.0, 2.3, 4.0}) {
    const auto s = phi_series(RealOrder(nu), 30);
    const auto closed = apply_primitive(s, PrimitiveRule::basis_closure, RealOrder(nu));
    const auto zero = apply_primitive(s, PrimitiveRule::zero_constant);
    const auto diff = closed - zero;
    for (int k = 1; k <= diff.order(); ++k) EXPECT_EQ(diff[k], 0.0);
    // -phi_{nu-1}(0) = -1 / (2^(nu-1) Gamma(nu))
    const double ref = -1.0 / (std::pow(2.0, nu - 1.0) * boost::math::tgamma(nu));
    EXPECT_NEAR(diff[0], ref, 1e-12 * std::max(1.0, std::abs(ref))) << "nu=" << nu;
    EXPECT_NEAR(closure_constant(RealOrder(nu)), ref, 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST(LadderSeries, AllPairsExactAtK30) {
  for (long n = -5; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m) {
      if (m == 0) continue;
      const auto lhs = ladder_series(phi_series_exact(n, 30), RealOrder(static_cast<double>(n)), m);
      const Rational sign = m % 2 ? Rational(-1) : Rational(1);
      EXPECT_EQ(lhs, sign * phi_series_exact(n + m, 30 - m)) << "n=" << n << " m=" << m;
    }
}

TEST(LadderSeries, PowersCompose) {
  const auto s = phi_series_exact(2, 25);
  const RealOrder nu(2.0);
  EXPECT_EQ(ladder_series(s, nu, 2), apply_d(apply_d(s)));
  EXPECT_EQ(ladder_series(s, nu, -2),
            apply_primitive(apply_primitive(s, PrimitiveRule::basis_closure, nu), PrimitiveRule::basis_closure,
                            RealOrder(1.0)));
  EXPECT_EQ(ladder_series(s, nu, 0), s);
}

TEST(LadderApply, Examples) {
  EXPECT_EQ(ladder_apply(PhiBasisVector::unit(0), 2), PhiBasisVector::unit(2));
  EXPECT_EQ(ladder_apply(PhiBasisVector::unit(3), -1), -1.0 * PhiBasisVector::unit(2));
  const PhiBasisVector v(-2, {1.0, -3.0, 0.5});
  EXPECT_EQ(ladder_apply(v, 0), v);
  const auto w = ladder_apply(v, 4);
  EXPECT_EQ(w.n_min(), 2);
  EXPECT_EQ(w.n_max(), 4);
}

TEST(LadderApply, CompositionProperty) {
  auto g = oracle::rng(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> a(static_cast<std::size_t>(oracle::uniform_int(g, 1, 6)));
    for (auto& x : a) x = static_cast<double>(oracle::uniform_int(g, -9, 9));
    const PhiBasisVector v(oracle::uniform_int(g, -5, 5), a);
    const long m1 = oracle::uniform_int(g, -6, 6), m2 = oracle::uniform_int(g, -6, 6);
    EXPECT_EQ(ladder_apply(ladder_apply(v, m1), m2), ladder_apply(v, m1 + m2));
  }
}

TEST(ApplyA, UnitCutOne) {
  const auto a = apply_A(PhiBasisVector::unit(0), 1);
  EXPECT_EQ(a[-1], 1.0);
  EXPECT_EQ(a[0], 0.0);
  EXPECT_EQ(a[1], -1.0);
  EXPECT_EQ(a.n_min(), -1);
  EXPECT_EQ(a.n_max(), 1);
}

TEST(ApplyA, ZeroAndWindowGrowth) {
  const auto z = apply_A(PhiBasisVector::zero(-2, 2), 3);
  for (double x : z.coeffs()) EXPECT_EQ(x, 0.0);
  EXPECT_EQ(z.n_min(), -5);
  EXPECT_EQ(z.n_max(), 5);
  EXPECT_THROW(apply_A(PhiBasisVector::unit(0), 0), std::invalid_argument);
}

TEST(ApplyA, Linearity) {
  auto g = oracle::rng(12);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> a(5), b(5);
    for (auto& x : a) x = static_cast<double>(oracle::uniform_int(g, -9, 9));
    for (auto& x : b) x = static_cast<double>(oracle::uniform_int(g, -9, 9));
    const PhiBasisVector u(-2, a), v(-2, b);
    const double alpha = static_cast<double>(oracle::uniform_int(g, -4, 4));
    const double beta = static_cast<double>(oracle::uniform_int(g, -4, 4));
    const int cut = static_cast<int>(oracle::uniform_int(g, 1, 6));
    const auto lhs = apply_A(alpha * u + beta * v, cut);
    const auto rhs = alpha * apply_A(u, cut) + beta * apply_A(v, cut);
    ASSERT_EQ(lhs.n_min(), rhs.n_min());
    ASSERT_EQ(lhs.size(), rhs.size());
    for (long n = lhs.n_min(); n <= lhs.n_max(); ++n) EXPECT_NEAR(lhs[n], rhs[n], 1e-12 * std::max(1.0, std::abs(rhs[n])));
  }
}

TEST(LadderCheck, Examples) {
  EXPECT_LE(ladder_check(0, 1, 1.0), 1e-12);
  EXPECT_LE(ladder_check(2, -2, 0.5), 1e-12);
  EXPECT_EQ(ladder_check(0, 0, 1.0), 0.0);
  EXPECT_THROW(ladder_check(9, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(ladder_check(0, 7, 1.0), std::invalid_argument);
}

TEST(LadderCheck, RepresentationsAgreeOnZeroToFive) {
  auto g = oracle::rng(13);
  for (int i = 0; i < 200; ++i) {
    const long n = oracle::uniform_int(g, -5, 5);
    const int m = static_cast<int>(oracle::uniform_int(g, -5, 5));
    const double z = oracle::uniform(g, 0.0, 5.0);
    const double scale = std::max(1.0, std::abs(ladder_apply(PhiBasisVector::unit(n), m).evaluate(z)));
    EXPECT_LE(ladder_check(n, m, z), 1e-12 * scale) << "n=" << n << " m=" << m << " z=" << z;
  }
}

TEST(PhiBasisVector, Evaluate) {
  const PhiBasisVector v(0, {2.0, -1.0});
  EXPECT_NEAR(v.evaluate(1.5), 2.0 * boost::math::cyl_bessel_j(0.0, 1.5) - boost::math::cyl_bessel_j(1.0, 1.5) / 1.5,
              1e-14);
  EXPECT_THROW(PhiBasisVector(0, {}), std::invalid_argument);
  EXPECT_THROW(PhiBasisVector::zero(2, 1), std::invalid_argument);
}

}  // namespace
}  // namespace rbessel
