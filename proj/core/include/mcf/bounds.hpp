#pragma once

// Closed-form and continued-fraction bounds on S(r), and the radii where
// one bound overtakes another.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mcf {

struct BoundResult {
  std::string method;  // makai | alzer | milovanovic_pogany | cf_convergent(k,l) | closed_form(k)
  std::optional<double> lower;
  std::optional<double> upper;
};

/// 1/(r^2 + 1/2) < S(r) < 1/(r^2 + 1/6)
BoundResult makai_bounds(double r);

/// 1/(r^2 + 1/(2 zeta(3))) < S(r) < 1/(r^2 + 1/6)
BoundResult alzer_bounds(double r);

/// Upper bound only: 1/(r^2 + 1/4) up to sqrt(3)/2, 1/(sqrt(1 + 4r^2) - 1) beyond.
BoundResult mp_upper(double r);

/// Partial sum to k-1 plus a/b approximants 2l (lower) and 2l-1 (upper) at x = k.
BoundResult cf_bounds(double r, int k, int l);

/// The l = 1 bounds written out for k = 2 and k = 3. Cross-checked against
/// cf_bounds(r, k, 1) on every call.
BoundResult closed_form_bounds(double r, int k);

/// Bisection for a sign change of f on [lo, hi]; stops when the bracket is
/// narrower than tol. Throws mcf::Error if f(lo) and f(hi) share a sign.
double bisect_sign_change(const std::function<double(double)>& f, double lo, double hi, double tol);

struct CrossoverReport {
  double upper_crossover = 0.0;      // closed_form(2) upper beats mp_upper on [0, this)
  double upper_recrossing = 0.0;     //   and again beyond this radius
  double upper_vs_alzer = 0.0;       // closed_form(2) upper beats alzer upper on [0, this)
  double lower_window_begin = 0.0;   // closed_form(2) lower beats alzer lower on
  double lower_window_end = 0.0;     //   (begin, end)
  double mp_window_end = 0.0;        // mp_upper beats alzer upper on [0, end)
  // closed-form values of the same radii
  double upper_crossover_exact = 0.0;
  double lower_window_begin_exact = 0.0;
  double lower_window_end_exact = 0.0;
  double mp_window_end_exact = 0.0;
  std::vector<std::string> diagnostics;
};

/// Locates every crossover by scanning a log grid for sign changes and
/// bisecting each to 1e-9.
CrossoverReport crossover_analysis();

}  // namespace mcf
