#include "mcf/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcf/bernoulli.hpp"
#include "summation.hpp"

namespace mcf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// 2 zeta(3) rounded up; S(r) never exceeds it.
constexpr double kSeriesCeiling = 2.4041138063191890;

void require_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive and finite");
}

// The summand 2x/(x^2+r^2)^2 is decreasing for x >= r/sqrt(3).
std::size_t first_monotone_index(double r) {
  const double m = std::ceil(r / std::sqrt(3.0));
  return std::max<std::size_t>(1, static_cast<std::size_t>(m));
}

bool is_monotone_from(double r, std::size_t M) {
  const double m = static_cast<double>(M);
  return 3.0 * m * m >= r * r;
}

double tail_upper(double r, std::size_t M) {
  const double m = static_cast<double>(M);
  return 1.0 / (m * m + r * r);
}

double tail_lower(double r, std::size_t M) { return tail_upper(r, M + 1); }

double direct_width(double r, std::size_t M) {
  const double m = static_cast<double>(M);
  return (2.0 * m + 1.0) / ((m * m + r * r) * ((m + 1.0) * (m + 1.0) + r * r));
}

double summation_pad(double magnitude) { return 10.0 * kEps * magnitude; }

double series_bound(double r) {
  if (r <= 0.0) return kSeriesCeiling;
  return std::min(kSeriesCeiling, 1.0 / (r * r));
}

void require_cf_domain(double r, int k) {
  if (!(r > 0.0)) throw DomainError("the continued fraction path requires r > 0");
  if (k < 1) throw DomainError("k must be a positive integer");
}

}  // namespace

double mathieu_term(double r, std::size_t m) {
  const double mm = static_cast<double>(m);
  const double d = mm * mm + r * r;
  return 2.0 * mm / (d * d);
}

double mathieu_partial_sum(double r, std::size_t count) {
  detail::CompensatedSum sum;
  for (std::size_t m = count; m >= 1; --m) sum.add(mathieu_term(r, m));
  return sum.value();
}

Enclosure mathieu_direct_fixed(double r, std::size_t M) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("direct summation requires r >= 0");
  if (M < 1) throw DomainError("direct summation needs at least one term");
  if (!is_monotone_from(r, M))
    throw NotCertifiable("integral tail bound needs M >= r/sqrt(3); got M = " + std::to_string(M));
  const double partial = mathieu_partial_sum(r, M);
  const double hi = tail_upper(r, M);
  const double lo = tail_lower(r, M);
  const double pad = summation_pad(partial + hi);
  return {partial + lo - pad, partial + hi + pad};
}

std::size_t direct_terms_required(double r, double tol) {
  require_tolerance(tol);
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("direct summation requires r >= 0");
  const double budget = tol - 2.0 * summation_pad(2.0 * series_bound(r));
  if (!(budget > 0.0))
    throw ToleranceUnachievable("tolerance unachievable by direct summation: below rounding floor");

  const std::size_t start = first_monotone_index(r);
  if (direct_width(r, start) <= budget) return start;
  std::size_t lo = start;
  std::size_t hi = start;
  while (direct_width(r, hi) > budget) {
    lo = hi;
    hi *= 2;
    if (hi > 2 * kMaxDirectTerms)
      throw ToleranceUnachievable("tolerance unachievable by direct summation: iteration cap");
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (direct_width(r, mid) <= budget ? hi : lo) = mid;
  }
  if (hi > kMaxDirectTerms)
    throw ToleranceUnachievable("tolerance unachievable by direct summation: iteration cap");
  return hi;
}

Enclosure mathieu_direct(double r, double tol) {
  return mathieu_direct_fixed(r, direct_terms_required(r, tol));
}

std::size_t truncated_terms_required(double r, double tol) {
  require_tolerance(tol);
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("direct summation requires r >= 0");
  const double m = std::ceil(std::sqrt(std::max(0.0, 1.0 / tol - r * r)));
  if (m > static_cast<double>(kMaxDirectTerms))
    throw ToleranceUnachievable("tolerance unachievable by direct summation: iteration cap");
  std::size_t M = std::max(first_monotone_index(r), static_cast<std::size_t>(m));
  while (tail_upper(r, M) > tol) ++M;
  return M;
}

Enclosure mathieu_truncated(double r, double tol) {
  const std::size_t M = truncated_terms_required(r, tol);
  const double partial = mathieu_partial_sum(r, M);
  const double hi = tail_upper(r, M);
  const double pad = summation_pad(partial + hi);
  return {partial - pad, partial + hi + pad};
}

double cf_rounding_pad(std::size_t n, double value) {
  return (8.0 * static_cast<double>(n) + 8.0) * kEps * std::fabs(value);
}

Enclosure cf_bracket(const MathieuCFParams<double>& params, std::size_t n) {
  if (!params.ab_all_positive())
    throw NotCertifiable("even/odd bracketing needs positive a/b coefficients (x >= 1)");
  if (n < 2) throw DomainError("a bracket needs at least two approximants");
  ConvergentStepper<double> stepper(ab_form(params));
  double previous = 0.0;
  while (stepper.current().n < n) {
    previous = stepper.current().value;
    stepper.advance();
  }
  const double current = stepper.current().value;
  const double lo = std::min(previous, current);
  const double hi = std::max(previous, current);
  const double pad = cf_rounding_pad(n, hi);
  return {lo - pad, hi + pad};
}

CertifiedValue cf_enclosure(const MathieuCFParams<double>& params, double tol, std::size_t max_terms) {
  require_tolerance(tol);
  if (!params.ab_all_positive())
    throw NotCertifiable("even/odd bracketing needs positive a/b coefficients (x >= 1)");
  if (max_terms < 2) throw DomainError("max_terms must be at least 2");

  ConvergentStepper<double> stepper(ab_form(params));
  stepper.advance();
  CertifiedValue out;
  while (stepper.current().n < max_terms) {
    const double previous = stepper.current().value;
    const double current = stepper.advance().value;
    const double lo = std::min(previous, current);
    const double hi = std::max(previous, current);
    const double pad = cf_rounding_pad(stepper.current().n, hi);
    out.enclosure = {lo - pad, hi + pad};
    out.terms_used = stepper.current().n;
    if (out.enclosure.width() <= tol) {
      out.target_met = true;
      break;
    }
  }
  return out;
}

Enclosure mathieu_theorem1(double r, int k, std::size_t n_terms) {
  require_cf_domain(r, k);
  const MathieuCFParams<double> params(r, static_cast<double>(k));
  const Enclosure cf = cf_bracket(params, n_terms);
  const double partial = mathieu_partial_sum(r, static_cast<std::size_t>(k - 1));
  return cf.shifted(partial).widened(summation_pad(partial + cf.upper));
}

CertifiedValue tail_identity_to_width(double r, int k, double tol, std::size_t max_terms) {
  require_tolerance(tol);
  require_cf_domain(r, k);
  const MathieuCFParams<double> params(r, static_cast<double>(k));
  const double partial = mathieu_partial_sum(r, static_cast<std::size_t>(k - 1));
  // the first approximant 1/(z + r^2) bounds CF(r;k) from above
  const double pad = summation_pad(std::min(partial + 1.0 / (params.z() + r * r), series_bound(r)));
  if (!(tol > 2.0 * pad)) throw ToleranceUnachievable("tolerance below the rounding floor");
  CertifiedValue cf = cf_enclosure(params, tol - 2.0 * pad, max_terms);
  cf.enclosure = cf.enclosure.shifted(partial).widened(pad);
  return cf;
}

AsymptoticResult asymptotic(double r, std::size_t n_terms) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("asymptotic expansion requires r > 0");
  if (n_terms < 1) throw DomainError("asymptotic expansion needs at least one term");
  if (n_terms > kMaxCachedEvenBernoulli)
    throw DomainError("asymptotic expansion supports at most " +
                      std::to_string(kMaxCachedEvenBernoulli) + " terms");
  const double inv_r2 = 1.0 / (r * r);
  double power = inv_r2;  // r^{-(2m+2)}
  AsymptoticResult out;
  for (std::size_t m = 0; m < n_terms; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    out.value += sign * even_bernoulli(m) * power;
    power *= inv_r2;
  }
  out.terms_used = n_terms;
  out.first_omitted_term = std::fabs(even_bernoulli(n_terms)) * power;
  return out;
}

AsymptoticResult asymptotic_auto(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("asymptotic expansion requires r > 0");
  // choose the smallest term in log space so large r cannot underflow the search
  const double log_r = std::log(r);
  std::size_t best = 0;
  double best_log = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < kMaxCachedEvenBernoulli; ++m) {
    const double log_term = std::log(std::fabs(even_bernoulli(m))) - static_cast<double>(2 * m + 2) * log_r;
    if (log_term < best_log) {
      best_log = log_term;
      best = m;
    }
  }
  return asymptotic(r, std::max<std::size_t>(1, best));
}

double telescoping_residual(double r, double x, double tol, std::size_t max_terms) {
  require_tolerance(tol);
  const MathieuCFParams<double> here(r, x);
  const MathieuCFParams<double> next(r, x + 1.0);
  const CertifiedValue lhs = cf_enclosure(here, tol / 4.0, max_terms);
  const CertifiedValue rhs = cf_enclosure(next, tol / 4.0, max_terms);
  if (!lhs.target_met || !rhs.target_met)
    throw ToleranceUnachievable("telescoping check: CF bracket width " +
                                std::to_string(std::max(lhs.enclosure.width(), rhs.enclosure.width())) +
                                " exceeds tol/4 after " + std::to_string(max_terms) + " terms");
  const double d = x * x + r * r;
  return lhs.enclosure.midpoint() - rhs.enclosure.midpoint() - 2.0 * x / (d * d);
}

}  // namespace mcf
