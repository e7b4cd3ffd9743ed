#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mcf/continued_fraction.hpp"
#include "mcf/mathieu_forms.hpp"
#include "mcf/oracle.hpp"
#include "support/reference.hpp"

namespace mcf {
namespace {

ContinuedFraction<double> golden() {
  return ContinuedFraction<double>(0.0, [](std::size_t) { return Term<double>{1.0, 1.0}; });
}

// A fixed random continued fraction with coefficients drawn once.
struct TabulatedCF {
  double b0 = 0.0;
  std::vector<Term<double>> terms;  // terms[0] is term 1

  ContinuedFraction<double> cf() const {
    auto copy = terms;
    return ContinuedFraction<double>(b0, [copy](std::size_t n) { return copy.at(n - 1); });
  }
  std::pair<double, double> pair(std::size_t n) const { return {terms[n - 1].a, terms[n - 1].b}; }
};

TabulatedCF random_cf(std::mt19937_64& rng, std::size_t n, bool random_signs) {
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  std::bernoulli_distribution flip(0.5);
  auto draw = [&] { return (random_signs && flip(rng)) ? -mag(rng) : mag(rng); };
  TabulatedCF out;
  out.b0 = draw();
  for (std::size_t i = 0; i < n; ++i) out.terms.push_back({draw(), draw()});
  return out;
}

TEST(Convergent, GoldenRatioFirstApproximant) { EXPECT_DOUBLE_EQ(convergent(golden(), 1).value, 1.0); }

TEST(Convergent, GoldenRatioLimit) {
  const double limit = (std::sqrt(5.0) - 1.0) / 2.0;
  EXPECT_LT(std::fabs(convergent(golden(), 40).value - 0.6180339887498949), 1e-12);
  EXPECT_LT(std::fabs(convergent(golden(), 40).value - limit), 1e-12);
}

TEST(Convergent, ZerothApproximantIsLeadingTerm) {
  const ContinuedFraction<double> cf(2.5, [](std::size_t) { return Term<double>{1.0, 3.0}; });
  const auto c = convergent(cf, 0);
  EXPECT_EQ(c.n, 0u);
  EXPECT_EQ(c.value, 2.5);
}

TEST(Convergent, VanishingDenominatorIsIndeterminate) {
  const ContinuedFraction<double> cf(0.0, [](std::size_t) { return Term<double>{1.0, 0.0}; });
  try {
    convergent(cf, 1);
    FAIL() << "expected IndeterminateApproximant";
  } catch (const IndeterminateApproximant& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  // B_2 = b_2 B_1 + a_2 B_0 = 1, so the next approximant is fine
  EXPECT_DOUBLE_EQ(convergent(cf, 2).value, 0.0);
}

TEST(Convergent, ZeroPartialNumeratorRejected) {
  const ContinuedFraction<double> cf(0.0, [](std::size_t n) { return Term<double>{n == 3 ? 0.0 : 1.0, 1.0}; });
  EXPECT_NO_THROW(convergent(cf, 2));
  EXPECT_THROW(convergent(cf, 3), ZeroPartialNumerator);
}

TEST(Convergent, GeneratorIsPure) {
  const auto cf = ab_form(MathieuCFParams<double>(0.7, 2.3));
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto first = cf.term(n);
    const auto second = cf.term(n);
    EXPECT_EQ(first.a, second.a);
    EXPECT_EQ(first.b, second.b);
  }
}

TEST(Convergent, MatchesBackwardEvaluation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_cf(rng, 20, false);
    const auto cf = t.cf();
    for (std::size_t n = 0; n <= 20; ++n) {
      const double want = test::backward_approximant(t.b0, [&](std::size_t k) { return t.pair(k); }, n);
      EXPECT_LT(test::relative_error(convergent(cf, n).value, want), 1e-13) << "trial " << trial << " n " << n;
    }
  }
}

// A_n B_{n-1} - A_{n-1} B_n = (-1)^{n-1} prod a_k, times 4^{scale_exponent}
TEST(Convergent, DeterminantIdentityWithRescaleTracking) {
  std::mt19937_64 rng(11);
  for (double threshold : {1e150, 1e3}) {
    bool rescaled = false;
    for (int trial = 0; trial < 100; ++trial) {
      const auto t = random_cf(rng, 20, true);
      ConvergentStepper<double> stepper(t.cf(), threshold);
      double product = 1.0;
      for (std::size_t n = 1; n <= 20; ++n) {
        const auto& c = stepper.advance();
        product *= t.terms[n - 1].a;
        const double det = c.A * c.B_prev - c.A_prev * c.B;
        const double want = ((n % 2 == 1) ? 1.0 : -1.0) * product * std::ldexp(1.0, 2 * static_cast<int>(c.scale_exponent));
        const double scale = std::fabs(c.A * c.B_prev) + std::fabs(c.A_prev * c.B);
        EXPECT_LE(std::fabs(det - want), 1e-12 * scale) << "threshold " << threshold << " n " << n;
        rescaled = rescaled || c.scale_exponent != 0;
      }
    }
    if (threshold < 1e10) EXPECT_TRUE(rescaled);
  }
}

TEST(Convergent, RescalingThresholdDoesNotChangeValues) {
  const auto cf = ab_form(MathieuCFParams<double>(1.0, 2.0));
  ConvergentStepper<double> low(cf, 1e50);
  ConvergentStepper<double> high(cf, 1e150);
  for (std::size_t n = 1; n <= 2000; ++n) {
    const auto& a = low.advance();
    const auto& b = high.advance();
    ASSERT_EQ(a.value, b.value) << "n " << n;
  }
  EXPECT_NE(low.current().scale_exponent, 0);
}

TEST(Convergent, RescaleThresholdValidated) {
  EXPECT_THROW(ConvergentStepper<double>(golden(), 0.5), DomainError);
}

TEST(Evaluate, GoldenRatioConverges) {
  const auto report = evaluate(golden(), 1e-12, 100);
  EXPECT_TRUE(report.converged);
  EXPECT_LE(report.last_delta, 1e-12);
  EXPECT_NEAR(report.value, 0.618033988749895, 1e-12);
}

TEST(Evaluate, UnreachableToleranceDoesNotConverge) {
  const auto report = evaluate(golden(), 0.0, 2);
  EXPECT_FALSE(report.converged);
  EXPECT_EQ(report.terms_used, 2u);
  EXPECT_DOUBLE_EQ(report.last_delta, 0.5);
}

TEST(Evaluate, AperyFractionReachesZeta3) {
  const auto report = evaluate(apery_form(), 1e-10, 1000);
  ASSERT_TRUE(report.converged);
  EXPECT_LT(std::fabs(report.value - test::zeta3_euler_maclaurin()), 1e-10);
}

TEST(Evaluate, RejectsBadArguments) {
  EXPECT_THROW(evaluate(golden(), 1e-10, 1), DomainError);
  EXPECT_THROW(evaluate(golden(), -1.0, 10), DomainError);
}

TEST(Evaluate, OverflowIsReported) {
  const ContinuedFraction<double> huge(0.0, [](std::size_t) { return Term<double>{1e300, 1e300}; });
  EXPECT_THROW(evaluate(huge, 1e-12, 10), NumericalOverflow);
  const ContinuedFraction<double> nan(0.0, [](std::size_t n) {
    return Term<double>{1.0, n == 4 ? std::nan("") : 1.0};
  });
  EXPECT_THROW(evaluate(nan, 1e-12, 10), NumericalOverflow);
}

TEST(EvenContraction, GoldenRatioEvenApproximants) {
  const auto contracted = even_contraction(golden());
  EXPECT_DOUBLE_EQ(convergent(contracted, 1).value, 1.0 / 2.0);
  EXPECT_DOUBLE_EQ(convergent(contracted, 2).value, 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(convergent(contracted, 3).value, 8.0 / 13.0);
}

TEST(EvenContraction, MatchesEvenApproximantsOfMathieuForm) {
  const auto cf = ab_form(MathieuCFParams<double>(1.0, 2.0));
  const auto contracted = even_contraction(cf);
  for (std::size_t k = 0; k <= 10; ++k)
    EXPECT_LT(test::relative_error(convergent(contracted, k).value, convergent(cf, 2 * k).value), 1e-13) << k;
}

TEST(EvenContraction, RandomFractionsWithNonzeroLeadingTerm) {
  // b0 != 0 exercises the k = 2 term, where the b_0 factor must not appear
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = random_cf(rng, 40, false);
    const auto cf = t.cf();
    const auto contracted = even_contraction(cf);
    for (std::size_t k = 0; k <= 20; ++k)
      EXPECT_LT(test::relative_error(convergent(contracted, k).value, convergent(cf, 2 * k).value), 1e-13);
  }
}

TEST(EvenContraction, VanishingEvenDenominator) {
  const ContinuedFraction<double> cf(0.0, [](std::size_t n) { return Term<double>{1.0, n == 2 ? 0.0 : 1.0}; });
  const auto contracted = even_contraction(cf);
  try {
    convergent(contracted, 1);
    FAIL() << "expected ContractionDoesNotExist";
  } catch (const ContractionDoesNotExist& e) {
    EXPECT_EQ(e.k(), 1u);
  }
}

TEST(EquivalenceTransform, IdentitySequenceKeepsTerms) {
  const auto cf = ab_form(MathieuCFParams<double>(0.3, 1.5));
  const auto same = equivalence_transform(cf, [](std::size_t) { return 1.0; });
  EXPECT_EQ(same.b0(), cf.b0());
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(same.term(n).a, cf.term(n).a);
    EXPECT_EQ(same.term(n).b, cf.term(n).b);
  }
}

TEST(EquivalenceTransform, AlternatingSequencePreservesApproximants) {
  std::mt19937_64 rng(5);
  const auto t = random_cf(rng, 8, false);
  const auto cf = t.cf();
  const auto transformed = equivalence_transform(cf, [](std::size_t n) {
    if (n == 0) return 1.0;
    return n % 2 == 1 ? 2.0 : 0.5;
  });
  for (std::size_t n = 0; n <= 8; ++n)
    EXPECT_LT(test::relative_error(convergent(transformed, n).value, convergent(cf, n).value), 1e-14) << n;
}

TEST(EquivalenceTransform, RandomSequencesPreserveApproximants) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_cf(rng, 50, false);
    std::vector<double> seq{1.0};
    std::uniform_real_distribution<double> factor(0.5, 2.0);
    for (int i = 0; i < 50; ++i) seq.push_back(factor(rng));
    const auto transformed = equivalence_transform(t.cf(), [seq](std::size_t n) { return seq.at(n); });
    ConvergentStepper<double> a(t.cf());
    ConvergentStepper<double> b(transformed);
    for (std::size_t n = 1; n <= 50; ++n)
      EXPECT_LT(test::relative_error(b.advance().value, a.advance().value), 1e-13);
  }
}

TEST(EquivalenceTransform, InvalidSequences) {
  EXPECT_THROW(equivalence_transform(golden(), [](std::size_t) { return 2.0; }), InvalidEquivalenceSequence);
  const auto bad = equivalence_transform(golden(), [](std::size_t n) { return n == 3 ? 0.0 : 1.0; });
  EXPECT_NO_THROW(convergent(bad, 2));
  EXPECT_THROW(convergent(bad, 3), InvalidEquivalenceSequence);
}

}  // namespace
}  // namespace mcf
