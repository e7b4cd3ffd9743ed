#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mcf/bernoulli.hpp"
#include "mcf/bounds.hpp"
#include "mcf/continued_fraction.hpp"
#include "mcf/mathieu.hpp"
#include "mcf/mathieu_forms.hpp"
#include "mcf/oracle.hpp"
#include "mcf_cli/commands.hpp"

namespace mcf::cli {

namespace {

// A check returns an empty string on success, otherwise what went wrong.
struct Check {
  std::string module;
  std::string name;
  std::function<std::string()> run;
};

std::string fmt(double v) { return format_real(v); }

const double kRadii[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

std::string golden_ratio() {
  const ContinuedFraction<double> cf(0.0, [](std::size_t) { return Term<double>{1.0, 1.0}; });
  const double v = convergent(cf, 40).value;
  const double want = (std::sqrt(5.0) - 1.0) / 2.0;
  if (std::fabs(v - want) > 1e-12) return "approximant 40 = " + fmt(v);
  return {};
}

std::string determinant_identity() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  for (double threshold : {1e150, 1e3}) {
    std::vector<Term<double>> terms;
    for (int i = 0; i < 30; ++i) terms.push_back({mag(rng), mag(rng)});
    ConvergentStepper<double> stepper(
        ContinuedFraction<double>(mag(rng), [terms](std::size_t n) { return terms.at(n - 1); }), threshold);
    double product = 1.0;
    for (std::size_t n = 1; n <= terms.size(); ++n) {
      const auto& c = stepper.advance();
      product *= terms[n - 1].a;
      const double det = c.A * c.B_prev - c.A_prev * c.B;
      const double want =
          ((n % 2 == 1) ? 1.0 : -1.0) * product * std::ldexp(1.0, 2 * static_cast<int>(c.scale_exponent));
      const double scale = std::fabs(c.A * c.B_prev) + std::fabs(c.A_prev * c.B);
      if (std::fabs(det - want) > 1e-12 * scale) return "n = " + std::to_string(n);
    }
  }
  return {};
}

std::string even_contraction_matches() {
  for (auto [r, x] : {std::pair{0.1, 1.0}, {1.0, 2.0}, {10.0, 5.0}}) {
    const auto cf = ab_form(MathieuCFParams<double>(r, x));
    const auto contracted = even_contraction(cf);
    for (std::size_t k = 1; k <= 25; ++k) {
      const double a = convergent(contracted, k).value;
      const double b = convergent(cf, 2 * k).value;
      if (std::fabs(a - b) > 1e-12 * std::fabs(b)) return "r " + fmt(r) + " x " + fmt(x) + " k " + std::to_string(k);
    }
  }
  return {};
}

std::string equivalence_to_cd() {
  const MathieuCFParams<double> p(1.3, 2.7);
  const auto transformed = equivalence_transform(ab_form(p), ab_to_cd_multiplier<double>);
  const auto cd = cd_form(p);
  for (std::size_t n = 1; n <= 40; ++n) {
    const double a = convergent(transformed, n).value;
    const double b = convergent(cd, n).value;
    if (std::fabs(a - b) > 1e-13 * std::fabs(b)) return "n = " + std::to_string(n);
  }
  return {};
}

std::string tail_identity() {
  std::ostringstream bad;
  for (double r : kRadii) {
    const double mid = mathieu_direct(r, 1e-13).midpoint();
    for (int k = 1; k <= 6; ++k) {
      const CertifiedValue v = tail_identity_to_width(r, k, 1e-11);
      // k = 1 converges algebraically; only met targets are part of the invariant
      if (!v.target_met) continue;
      if (!v.enclosure.contains(mid)) bad << "r " << fmt(r) << " k " << k << "; ";
    }
  }
  return bad.str();
}

std::string three_forms() {
  for (double r : kRadii)
    for (double x : {1.0, 2.0, 3.0, 6.0}) {
      const MathieuCFParams<double> p(r, x);
      const CertifiedValue cert = cf_enclosure(p, 1e-11);
      if (!cert.target_met) continue;
      const std::size_t n = cert.terms_used;
      const double ab = convergent(ab_form(p), n).value;
      const double kl = convergent(kappa_lambda_form(p), n / 2).value;
      const double cd = convergent(cd_form(p), n).value;
      const double allowed = 4.0 * cert.enclosure.width();
      if (std::fabs(ab - kl) > allowed || std::fabs(ab - cd) > allowed || std::fabs(kl - cd) > allowed)
        return "r " + fmt(r) + " x " + fmt(x);
    }
  return {};
}

std::string bracketing() {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> rd(1e-3, 10.0);
  std::uniform_real_distribution<double> xd(1.0, 8.0);
  for (int s = 0; s < 20; ++s) {
    const double r = rd(rng);
    const double x = xd(rng);
    ConvergentStepper<Wide> stepper(ab_form(MathieuCFParams<Wide>(Wide(r), Wide(x))));
    std::vector<Wide> v;
    for (int n = 1; n <= 40; ++n) v.push_back(stepper.advance().value);
    for (std::size_t i = 2; i < v.size(); ++i) {
      const bool odd = i % 2 == 0;  // v[i] is approximant i + 1
      if (odd ? !(v[i] < v[i - 2]) : !(v[i] > v[i - 2])) return "r " + fmt(r) + " x " + fmt(x);
    }
    if (!(v[v.size() - 1] < v[v.size() - 2])) return "r " + fmt(r) + " x " + fmt(x);
  }
  return {};
}

std::string telescoping() {
  for (double r : {0.1, 1.0, 10.0})
    for (double x : {2.0, 3.5, 7.0}) {
      const double res = telescoping_residual(r, x, 1e-10);
      if (std::fabs(res) > 1e-10) return "r " + fmt(r) + " x " + fmt(x) + " residual " + fmt(res);
    }
  return {};
}

std::string asymptotics() {
  const AsymptoticResult two = asymptotic(10.0, 2);
  if (std::fabs(two.value - (1e-2 - 1.0 / 6e4)) > 1e-17) return "two-term value " + fmt(two.value);
  const AsymptoticResult best = asymptotic_auto(10.0);
  const Enclosure direct = mathieu_direct(10.0, 1e-14);
  if (direct.distance_to(best.value) > best.first_omitted_term + 1e-14) return "auto value " + fmt(best.value);
  return {};
}

std::string bernoulli() {
  const auto b = bernoulli_numbers(20);
  if (b[20] != Rational(-174611, 330)) return "B_20";
  if (even_bernoulli(10) != b[20].convert_to<double>()) return "cached B_20";
  return {};
}

std::string oracle_triangle() {
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    const double d = mathieu_direct(r, 1e-12).midpoint();
    const double t = tail_via_trigamma(r, 1.0);
    const double i = mathieu_integral(r, 1e-10);
    if (std::fabs(d - t) > 2e-9 || std::fabs(d - i) > 2e-9 || std::fabs(t - i) > 2e-9) return "r " + fmt(r);
  }
  return {};
}

std::string apery() {
  if (apery_cf(1) != 1.25 || apery_cf(2) != 1.2) return "first approximants";
  const double err = apery_cf(60) - zeta3_direct(1e-13).midpoint();
  if (std::fabs(err) >= 1e-10) return "approximant 60 error " + fmt(err);
  return {};
}

std::string sandwich() {
  for (int i = 0; i <= 40; ++i) {
    const double r = std::pow(10.0, -2.0 + 0.1 * i);
    const double s = mathieu_direct(r, 1e-13).midpoint();
    for (const BoundResult& b : {makai_bounds(r), alzer_bounds(r), mp_upper(r), cf_bounds(r, 2, 1),
                                 closed_form_bounds(r, 2), closed_form_bounds(r, 3)}) {
      if (b.lower && !(*b.lower < s)) return b.method + " lower at r " + fmt(r);
      if (b.upper && !(*b.upper > s)) return b.method + " upper at r " + fmt(r);
    }
  }
  return {};
}

std::string nested_closed_forms() {
  for (int i = 0; i <= 50; ++i) {
    const double r = std::pow(10.0, -3.0 + 0.1 * i);
    const BoundResult k2 = closed_form_bounds(r, 2);
    const BoundResult k3 = closed_form_bounds(r, 3);
    if (!(*k3.lower > *k2.lower && *k3.upper < *k2.upper)) return "r " + fmt(r);
  }
  return {};
}

std::string crossovers() {
  const CrossoverReport rep = crossover_analysis();
  if (!rep.diagnostics.empty()) return rep.diagnostics.front();
  if (std::fabs(rep.upper_crossover - rep.upper_crossover_exact) > 1e-8) return "upper " + fmt(rep.upper_crossover);
  if (std::fabs(rep.lower_window_begin - rep.lower_window_begin_exact) > 1e-8 ||
      std::fabs(rep.lower_window_end - rep.lower_window_end_exact) > 1e-7)
    return "lower window";
  if (std::fabs(rep.mp_window_end - rep.mp_window_end_exact) > 1e-8) return "mp window";
  return {};
}

}  // namespace

CommandResult run_selftest(const RunConfig& config) {
  std::vector<Check> checks{
      {"cf_engine", "golden_ratio_limit", golden_ratio},
      {"cf_engine", "determinant_identity", determinant_identity},
      {"cf_engine", "even_contraction", even_contraction_matches},
      {"cf_engine", "equivalence_transform", equivalence_to_cd},
      {"mathieu", "tail_identity_contains_direct", tail_identity},
      {"mathieu", "three_forms_agree", three_forms},
      {"mathieu", "bracketing_x_ge_1", bracketing},
      {"mathieu", "telescoping", telescoping},
      {"mathieu", "asymptotic_expansion", asymptotics},
      {"mathieu", "bernoulli_numbers", bernoulli},
      {"oracle", "oracle_triangle", oracle_triangle},
      {"oracle", "apery_fraction", apery},
      {"bounds", "bounds_sandwich_series", sandwich},
      {"bounds", "closed_forms_nested", nested_closed_forms},
      {"bounds", "crossover_radii", crossovers},
  };
  if (config.force_fail) checks.push_back({"cli", "forced_failure", [] { return std::string("forced by --force-fail"); }});

  CommandResult out;
  out.table.columns = selftest_schema();
  int failures = 0;
  for (const Check& c : checks) {
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const bool passed = detail.empty();
    if (!passed) ++failures;
    out.table.rows.push_back({c.module, c.name, passed, detail});
  }
  out.exit_code = failures ? kExitInvariantFailure : kExitOk;
  out.notes.push_back(std::to_string(checks.size() - failures) + "/" + std::to_string(checks.size()) +
                      " invariants passed");
  return out;
}

}  // namespace mcf::cli
