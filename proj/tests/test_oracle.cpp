#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mcf/mathieu.hpp"
#include "mcf/oracle.hpp"
#include "support/reference.hpp"

namespace mcf {
namespace {

TEST(Trigamma, RealArguments) {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  EXPECT_NEAR(trigamma({1.0, 0.0}).real(), 1.644934066848226, 1e-15);
  EXPECT_NEAR(trigamma({2.0, 0.0}).real(), pi2_6 - 1.0, 1e-15);
  EXPECT_NEAR(trigamma({0.5, 0.0}).real(), std::numbers::pi * std::numbers::pi / 2.0, 1e-14);
  EXPECT_EQ(trigamma({2.0, 0.0}).imag(), 0.0);
}

TEST(Trigamma, RecurrenceAndNegativeArguments) {
  const std::complex<double> z{0.3, 1.7};
  const auto lhs = trigamma(z);
  const auto rhs = trigamma(z + 1.0) + 1.0 / (z * z);
  EXPECT_LT(std::abs(lhs - rhs), 1e-13 * std::abs(lhs));
  // reflection: psi'(1-z) + psi'(z) = pi^2 / sin^2(pi z)
  const std::complex<double> w{-2.4, 0.0};
  const double s = std::sin(std::numbers::pi * w.real());
  EXPECT_NEAR((trigamma(1.0 - w) + trigamma(w)).real(), std::numbers::pi * std::numbers::pi / (s * s), 1e-11);
}

TEST(Trigamma, ConjugateSymmetry) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> re(0.5, 12.0);
  std::uniform_real_distribution<double> im(-15.0, 15.0);
  for (int i = 0; i < 20; ++i) {
    const std::complex<double> z{re(rng), im(rng)};
    const auto a = trigamma(std::conj(z));
    const auto b = std::conj(trigamma(z));
    EXPECT_LT(std::abs(a - b), 1e-15 * std::abs(a)) << z;
  }
}

TEST(Trigamma, MatchesDirectSeries) {
  // sum_{k>=0} 1/(z+k)^2 with the tail integral 1/(z+K) plus Euler-Maclaurin corrections
  const std::complex<double> z{1.3, -0.8};
  std::complex<double> sum{0.0, 0.0};
  const int K = 2000;
  for (int k = 0; k < K; ++k) sum += 1.0 / ((z + double(k)) * (z + double(k)));
  const auto zk = z + double(K);
  sum += 1.0 / zk + 0.5 / (zk * zk) + 1.0 / (6.0 * zk * zk * zk);
  EXPECT_LT(std::abs(trigamma(z) - sum), 1e-13);
}

TEST(Trigamma, Poles) {
  EXPECT_THROW(trigamma({0.0, 0.0}), DomainError);
  EXPECT_THROW(trigamma({-3.0, 0.0}), DomainError);
  EXPECT_NO_THROW(trigamma({-3.0, 1e-3}));
}

TEST(TailViaTrigamma, WholeSeriesAtUnitShift) {
  EXPECT_NEAR(tail_via_trigamma(1.0, 1.0), mathieu_direct(1.0, 1e-12).midpoint(), 1e-11);
  for (const auto& [r, value] : test::kMathieuReference) EXPECT_NEAR(tail_via_trigamma(r, 1.0), value, 2e-14 * value) << r;
}

TEST(TailViaTrigamma, SecondShift) {
  EXPECT_NEAR(tail_via_trigamma(1.0, 2.0), test::kMathieuReference[2].second - 0.5, 1e-11);
}

TEST(TailViaTrigamma, LargeShiftLeadingOrder) {
  for (double x : {50.0, 200.0}) {
    const double r = 1.5;
    EXPECT_NEAR(tail_via_trigamma(r, x) * (x * x - x + r * r), 1.0, 1.0 / (x * x));
  }
}

TEST(TailViaTrigamma, Domain) {
  EXPECT_THROW(tail_via_trigamma(0.0, 1.0), DomainError);
  EXPECT_THROW(tail_via_trigamma(1.0, 0.5), DomainError);
}

TEST(MathieuIntegral, UnitRadius) {
  EXPECT_NEAR(mathieu_integral(1.0, 1e-9), mathieu_direct(1.0, 1e-12).midpoint(), 1e-9);
}

TEST(MathieuIntegral, AgreesWithReferences) {
  for (const auto& [r, value] : test::kMathieuReference) EXPECT_NEAR(mathieu_integral(r, 1e-10), value, 1e-10) << r;
}

TEST(MathieuIntegral, LargeRadiusAgainstAsymptotics) {
  const AsymptoticResult a = asymptotic_auto(10.0);
  EXPECT_LT(std::fabs(mathieu_integral(10.0, 1e-8) - a.value), a.first_omitted_term + 1e-8);
}

TEST(MathieuIntegral, Errors) {
  EXPECT_THROW(mathieu_integral(1.0, 1e-12), ToleranceUnachievable);
  EXPECT_THROW(mathieu_integral(0.0, 1e-9), DomainError);
}

TEST(Apery, FirstApproximants) {
  EXPECT_EQ(apery_cf(1), 1.25);
  EXPECT_EQ(apery_cf(2), 1.2);
  EXPECT_DOUBLE_EQ(apery_cf(3), 1.203125);
  EXPECT_THROW(apery_cf(0), DomainError);
}

TEST(Apery, SixtyApproximants) {
  EXPECT_LT(std::fabs(apery_cf(60) - 1.202056903159594), 1e-10);
  EXPECT_LT(std::fabs(apery_cf(60) - test::zeta3_euler_maclaurin()), 1e-10);
}

TEST(Apery, ApproximantsAlternate) {
  const double zeta = test::zeta3_euler_maclaurin();
  for (std::size_t n = 1; n <= 60; ++n) {
    const double v = apery_cf(n);
    if (n % 2 == 1)
      EXPECT_GT(v, zeta) << n;
    else
      EXPECT_LT(v, zeta) << n;
  }
}

TEST(Zeta3, DirectSummation) {
  const Enclosure e = zeta3_direct(1e-12);
  EXPECT_LE(e.width(), 1e-12 + 1e-14);
  EXPECT_TRUE(e.contains(test::zeta3_euler_maclaurin()));
  EXPECT_NEAR(zeta3(), 1.202056903159594, 1e-14);
}

// CF(r;2) + 2/(1+r^2)^2 -> 2 zeta(3) as r -> 0
TEST(Zeta3, SmallRadiusTailLimit) {
  const double r = 1e-6;
  const CertifiedValue cf = cf_enclosure(MathieuCFParams<double>(r, 2.0), 1e-12);
  ASSERT_TRUE(cf.target_met);
  const double first = 2.0 / ((1.0 + r * r) * (1.0 + r * r));
  // the r^2 perturbation shifts the sum by about 4 zeta(5) r^2
  EXPECT_NEAR(cf.enclosure.midpoint() + first, 2.0 * zeta3(), 6e-12);
}

}  // namespace
}  // namespace mcf
