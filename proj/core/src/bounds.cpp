#include "mcf/bounds.hpp"

#include <cmath>
#include <string>

#include "mcf/errors.hpp"
#include "mcf/mathieu.hpp"
#include "mcf/oracle.hpp"

namespace mcf {

namespace {

void require_positive_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("bounds require r > 0");
}

double alzer_constant() { return 1.0 / (2.0 * zeta3()); }

struct SignChange {
  double lo;
  double hi;
};

// sign changes of f over a log-spaced grid on [lo, hi]
std::vector<SignChange> scan_sign_changes(const std::function<double(double)>& f, double lo, double hi,
                                          std::size_t points) {
  std::vector<SignChange> out;
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  double prev_r = lo;
  double prev_f = f(lo);
  for (std::size_t i = 1; i < points; ++i) {
    const double r = lo * std::exp(step * static_cast<double>(i));
    const double v = f(r);
    if ((prev_f < 0.0) != (v < 0.0)) out.push_back({prev_r, r});
    prev_r = r;
    prev_f = v;
  }
  return out;
}

}  // namespace

BoundResult makai_bounds(double r) {
  require_positive_r(r);
  const double r2 = r * r;
  return {"makai", 1.0 / (r2 + 0.5), 1.0 / (r2 + 1.0 / 6.0)};
}

BoundResult alzer_bounds(double r) {
  require_positive_r(r);
  const double r2 = r * r;
  return {"alzer", 1.0 / (r2 + alzer_constant()), 1.0 / (r2 + 1.0 / 6.0)};
}

BoundResult mp_upper(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("mp_upper requires r >= 0");
  const double r2 = r * r;
  const double upper = (r <= std::sqrt(3.0) / 2.0) ? 1.0 / (r2 + 0.25) : 1.0 / (std::sqrt(1.0 + 4.0 * r2) - 1.0);
  return {"milovanovic_pogany", std::nullopt, upper};
}

BoundResult cf_bounds(double r, int k, int l) {
  require_positive_r(r);
  if (k < 1 || l < 1) throw DomainError("cf_bounds requires k >= 1 and l >= 1");
  const MathieuCFParams<double> params(r, static_cast<double>(k));
  ConvergentStepper<double> stepper(ab_form(params));
  const auto depth = static_cast<std::size_t>(2 * l);
  double odd = 0.0;
  while (stepper.current().n < depth) {
    odd = stepper.current().value;
    stepper.advance();
  }
  const double even = stepper.current().value;
  const double partial = mathieu_partial_sum(r, static_cast<std::size_t>(k - 1));
  return {"cf_convergent(" + std::to_string(k) + "," + std::to_string(l) + ")", partial + even, partial + odd};
}

BoundResult closed_form_bounds(double r, int k) {
  require_positive_r(r);
  const double r2 = r * r;
  const double first = 2.0 / ((1.0 + r2) * (1.0 + r2));
  BoundResult out;
  if (k == 2) {
    out = {"closed_form(2)", first + 1.0 / (2.5 + r2), first + 1.0 / (2.0 + r2)};
  } else if (k == 3) {
    const double second = 4.0 / ((4.0 + r2) * (4.0 + r2));
    out = {"closed_form(3)", first + second + 1.0 / (6.5 + r2), first + second + 1.0 / (6.0 + r2)};
  } else {
    throw DomainError("closed_form_bounds: only k = 2 and k = 3 are available");
  }
  const BoundResult check = cf_bounds(r, k, 1);
  if (std::fabs(*check.lower - *out.lower) > 1e-14 || std::fabs(*check.upper - *out.upper) > 1e-14)
    throw Error("closed_form_bounds disagrees with cf_bounds at r = " + std::to_string(r));
  return out;
}

double bisect_sign_change(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if ((f_lo < 0.0) == (f_hi < 0.0))
    throw Error("bisection bracket failure on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "]: f(lo) = " + std::to_string(f_lo) + ", f(hi) = " + std::to_string(f_hi));
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CrossoverReport crossover_analysis() {
  constexpr double kTol = 1e-9;
  constexpr double kScanLo = 1e-3;
  constexpr double kScanHi = 1e2;
  constexpr std::size_t kScanPoints = 2001;

  CrossoverReport report;
  const double zeta = zeta3();

  auto single = [&](const std::string& name, const std::function<double(double)>& f, double& out) {
    const auto changes = scan_sign_changes(f, kScanLo, kScanHi, kScanPoints);
    if (changes.size() != 1) {
      report.diagnostics.push_back(name + ": expected 1 sign change, found " + std::to_string(changes.size()));
      if (changes.empty()) return;
    }
    out = bisect_sign_change(f, changes.front().lo, changes.front().hi, kTol);
  };

  auto upper_gap = [](double r) { return *closed_form_bounds(r, 2).upper - *mp_upper(r).upper; };
  const auto upper_changes = scan_sign_changes(upper_gap, kScanLo, kScanHi, kScanPoints);
  if (upper_changes.size() == 2) {
    report.upper_crossover = bisect_sign_change(upper_gap, upper_changes[0].lo, upper_changes[0].hi, kTol);
    report.upper_recrossing = bisect_sign_change(upper_gap, upper_changes[1].lo, upper_changes[1].hi, kTol);
  } else {
    report.diagnostics.push_back("upper crossover: expected 2 sign changes, found " +
                                 std::to_string(upper_changes.size()));
  }
  single("upper vs alzer",
         [](double r) { return *closed_form_bounds(r, 2).upper - *alzer_bounds(r).upper; },
         report.upper_vs_alzer);
  single("mp window",
         [](double r) { return *mp_upper(r).upper - *alzer_bounds(r).upper; }, report.mp_window_end);

  auto lower_gap = [](double r) { return *closed_form_bounds(r, 2).lower - *alzer_bounds(r).lower; };
  const auto changes = scan_sign_changes(lower_gap, kScanLo, kScanHi, kScanPoints);
  if (changes.size() == 2) {
    report.lower_window_begin = bisect_sign_change(lower_gap, changes[0].lo, changes[0].hi, kTol);
    report.lower_window_end = bisect_sign_change(lower_gap, changes[1].lo, changes[1].hi, kTol);
  } else {
    report.diagnostics.push_back("lower window: expected 2 sign changes, found " + std::to_string(changes.size()));
  }

  const double root = std::sqrt(-2.0 + 11.0 * zeta - 5.0 * zeta * zeta);
  report.upper_crossover_exact = std::sqrt(-2.0 + std::sqrt(7.0));
  report.lower_window_begin_exact = std::sqrt((-6.0 + 5.0 * zeta) / (2.0 + root));
  report.lower_window_end_exact = std::sqrt((2.0 + root) / (zeta - 1.0));
  report.mp_window_end_exact = std::sqrt((5.0 + 2.0 * std::sqrt(3.0)) / 6.0);
  return report;
}

}  // namespace mcf
