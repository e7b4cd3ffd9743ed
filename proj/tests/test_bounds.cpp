#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mcf/bounds.hpp"
#include "mcf/mathieu.hpp"
#include "mcf/oracle.hpp"
#include "support/reference.hpp"

namespace mcf {
namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(lo * std::pow(hi / lo, double(i) / double(points - 1)));
  return out;
}

TEST(Makai, UnitRadius) {
  const BoundResult b = makai_bounds(1.0);
  EXPECT_EQ(b.method, "makai");
  EXPECT_NEAR(*b.lower, 1.0 / 1.5, 1e-15);
  EXPECT_NEAR(*b.upper, 6.0 / 7.0, 1e-15);
  EXPECT_NEAR(*b.lower, 0.666667, 1e-6);
  EXPECT_NEAR(*b.upper, 0.857143, 1e-6);
}

TEST(Makai, LargeRadius) {
  const double r = 1e4;
  const BoundResult b = makai_bounds(r);
  EXPECT_NEAR(*b.lower * r * r, 1.0, 1e-8);
  EXPECT_NEAR(*b.upper * r * r, 1.0, 1e-8);
}

TEST(Alzer, Constant) {
  EXPECT_NEAR(1.0 / (2.0 * zeta3()), 0.41596, 1e-5);
  EXPECT_NEAR(1.0 / (2.0 * zeta3()), 1.0 / (2.0 * test::zeta3_euler_maclaurin()), 1e-14);
}

TEST(Alzer, SharpAtZero) {
  EXPECT_NEAR(*alzer_bounds(1e-9).lower, test::kTwoZeta3, 1e-12);
}

TEST(Alzer, ImprovesMakaiLower) {
  for (double r : log_grid(1e-2, 1e2, 41)) EXPECT_GE(*alzer_bounds(r).lower, *makai_bounds(r).lower) << r;
}

TEST(MilovanovicPogany, Breakpoint) {
  const double r = std::sqrt(3.0) / 2.0;
  EXPECT_NEAR(*mp_upper(r).upper, 1.0, 1e-15);
  EXPECT_NEAR(1.0 / (std::sqrt(1.0 + 4.0 * r * r) - 1.0), 1.0, 1e-15);
  EXPECT_NEAR(*mp_upper(std::nextafter(r, 10.0)).upper, 1.0, 1e-14);
  EXPECT_FALSE(mp_upper(1.0).lower.has_value());
  EXPECT_DOUBLE_EQ(*mp_upper(0.0).upper, 4.0);
}

TEST(MilovanovicPogany, SuperiorityWindow) {
  const double edge = std::sqrt((5.0 + 2.0 * std::sqrt(3.0)) / 6.0);
  EXPECT_NEAR(edge, 1.18772, 1e-5);
  for (double r : log_grid(1e-3, 50.0, 200))
    EXPECT_EQ(*mp_upper(r).upper < *alzer_bounds(r).upper, r < edge) << r;
}

TEST(AllMethods, SandwichTheSeries) {
  for (double r : log_grid(1e-2, 1e2, 25)) {
    const Enclosure s = mathieu_direct(r, 1e-13);
    const double mid = s.midpoint();
    std::vector<BoundResult> all{makai_bounds(r), alzer_bounds(r), mp_upper(r), cf_bounds(r, 2, 1),
                                 cf_bounds(r, 3, 2), closed_form_bounds(r, 2), closed_form_bounds(r, 3)};
    for (const auto& b : all) {
      if (b.lower) EXPECT_LT(*b.lower, mid) << b.method << " r " << r;
      if (b.upper) EXPECT_GT(*b.upper, mid) << b.method << " r " << r;
      if (b.lower && b.upper) EXPECT_LT(*b.lower, *b.upper);
    }
  }
}

TEST(CfBounds, ClosedFormsAtSecondAndThirdShift) {
  for (double r : log_grid(1e-2, 1e2, 25)) {
    const double r2 = r * r;
    const double first = 2.0 / ((1.0 + r2) * (1.0 + r2));
    const double second = 4.0 / ((4.0 + r2) * (4.0 + r2));
    const BoundResult k2 = cf_bounds(r, 2, 1);
    EXPECT_NEAR(*k2.lower, first + 1.0 / (2.5 + r2), 1e-14);
    EXPECT_NEAR(*k2.upper, first + 1.0 / (2.0 + r2), 1e-14);
    const BoundResult k3 = cf_bounds(r, 3, 1);
    EXPECT_NEAR(*k3.lower, first + second + 1.0 / (6.5 + r2), 1e-14);
    EXPECT_NEAR(*k3.upper, first + second + 1.0 / (6.0 + r2), 1e-14);
    EXPECT_EQ(k2.method, "cf_convergent(2,1)");
  }
}

TEST(CfBounds, NestingInDepth) {
  for (double r : {0.05, 1.0, 6.0})
    for (int k : {1, 2, 4})
      for (int l = 1; l < 12; ++l) {
        const BoundResult outer = cf_bounds(r, k, l);
        const BoundResult inner = cf_bounds(r, k, l + 1);
        EXPECT_GE(*inner.lower, *outer.lower);
        EXPECT_LE(*inner.upper, *outer.upper);
      }
}

TEST(CfBounds, DeeperIsNarrowerAroundSeries) {
  const BoundResult shallow = cf_bounds(1.0, 2, 1);
  const BoundResult deep = cf_bounds(1.0, 2, 3);
  const double s = test::kMathieuReference[2].second;
  EXPECT_LT(*deep.lower, s);
  EXPECT_GT(*deep.upper, s);
  EXPECT_LT(*deep.upper - *deep.lower, *shallow.upper - *shallow.lower);
}

TEST(CfBounds, Errors) {
  EXPECT_THROW(cf_bounds(1.0, 0, 1), DomainError);
  EXPECT_THROW(cf_bounds(1.0, 2, 0), DomainError);
  EXPECT_THROW(cf_bounds(0.0, 2, 1), DomainError);
}

TEST(ClosedForm, DerivationFromFirstApproximants) {
  // approximant 1 at x = 2 is 1/(z + r^2) = 1/(2 + r^2); approximant 2 adds a_2/b_2 = 1/2
  const double r = 0.7;
  const auto cf = ab_form(MathieuCFParams<double>(r, 2.0));
  EXPECT_DOUBLE_EQ(convergent(cf, 1).value, 1.0 / (2.0 + r * r));
  EXPECT_DOUBLE_EQ(convergent(cf, 2).value, 1.0 / (2.0 + r * r + 0.5));
  EXPECT_DOUBLE_EQ(ab_form(MathieuCFParams<double>(r, 3.0)).term(1).b, 6.0 + r * r);
}

TEST(ClosedForm, UnitRadius) {
  const BoundResult b = closed_form_bounds(1.0, 2);
  EXPECT_NEAR(*b.lower, 0.7857142857142857, 1e-15);
  EXPECT_NEAR(*b.upper, 0.8333333333333333, 1e-15);
  EXPECT_THROW(closed_form_bounds(1.0, 4), DomainError);
}

TEST(ClosedForm, ThirdShiftStrictlyInsideSecond) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> exponent(-3.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double r = std::pow(10.0, exponent(rng));
    const BoundResult k2 = closed_form_bounds(r, 2);
    const BoundResult k3 = closed_form_bounds(r, 3);
    EXPECT_GT(*k3.lower, *k2.lower) << r;
    EXPECT_LT(*k3.upper, *k2.upper) << r;
  }
}

TEST(Bisection, FindsRootAndReportsBadBracket) {
  const double root = bisect_sign_change([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  EXPECT_NEAR(root, std::sqrt(2.0), 1e-12);
  EXPECT_THROW(bisect_sign_change([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9), Error);
}

TEST(Crossovers, MatchRadicals) {
  const CrossoverReport rep = crossover_analysis();
  EXPECT_TRUE(rep.diagnostics.empty());
  EXPECT_NEAR(rep.upper_crossover, 0.803587, 1e-6);
  EXPECT_NEAR(rep.upper_crossover, rep.upper_crossover_exact, 1e-9);
  EXPECT_NEAR(rep.upper_recrossing, 1.2114057359, 1e-8);
  EXPECT_NEAR(rep.upper_vs_alzer, 1.1474427177, 1e-8);
  EXPECT_NEAR(rep.lower_window_begin, 0.0507096, 1e-6);
  EXPECT_NEAR(rep.lower_window_end, 4.44903, 1e-5);
  EXPECT_NEAR(rep.lower_window_begin, rep.lower_window_begin_exact, 1e-9);
  EXPECT_NEAR(rep.lower_window_end, rep.lower_window_end_exact, 1e-8);
  EXPECT_NEAR(rep.mp_window_end, 1.18772, 1e-5);
  EXPECT_NEAR(rep.mp_window_end, rep.mp_window_end_exact, 1e-9);
}

TEST(Crossovers, UpperSignPatternDense) {
  const double edge = std::sqrt(-2.0 + std::sqrt(7.0));
  const double back = 1.2114057359;
  for (double r : log_grid(1e-3, 1e2, 4001)) {
    if (std::fabs(r - edge) < 1e-6 || std::fabs(r - back) < 1e-6) continue;
    EXPECT_EQ(*closed_form_bounds(r, 2).upper < *mp_upper(r).upper, r < edge || r > back) << r;
  }
}

TEST(Crossovers, LowerSignPatternDense) {
  const CrossoverReport rep = crossover_analysis();
  for (double r : log_grid(1e-3, 1e2, 4001)) {
    if (std::fabs(r - rep.lower_window_begin) < 1e-6 || std::fabs(r - rep.lower_window_end) < 1e-6) continue;
    const bool inside = r > rep.lower_window_begin && r < rep.lower_window_end;
    EXPECT_EQ(*closed_form_bounds(r, 2).lower > *alzer_bounds(r).lower, inside) << r;
  }
}

}  // namespace
}  // namespace mcf
