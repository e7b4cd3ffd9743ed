#pragma once

// The Mathieu series S(r) = sum_{m>=1} 2m/(m^2 + r^2)^2.
//
// Certified values come from two places only:
//  * direct summation with an integral tail enclosure, and
//  * even/odd bracketing of the positive a/b form of CF(r; x), x >= 1,
//    combined with S(r) = sum_{m<k} 2m/(m^2+r^2)^2 + CF(r; k).
// Both widen their interval by a first-order rounding-error bound.

#include <cstddef>

#include "mcf/enclosure.hpp"
#include "mcf/mathieu_forms.hpp"

namespace mcf {

inline constexpr std::size_t kDefaultMaxCfTerms = 20000;
inline constexpr std::size_t kMaxDirectTerms = 200'000'000;

/// 2m/(m^2 + r^2)^2
double mathieu_term(double r, std::size_t m);

/// sum_{m=1}^{count} 2m/(m^2 + r^2)^2 (compensated, smallest terms first).
double mathieu_partial_sum(double r, std::size_t count);

/// Partial sum to M plus the integral tail enclosure
/// [1/((M+1)^2 + r^2), 1/(M^2 + r^2)]. Needs M >= r/sqrt(3) so the
/// summand is decreasing past M; throws NotCertifiable otherwise.
Enclosure mathieu_direct_fixed(double r, std::size_t M);

/// Smallest admissible M whose direct enclosure has width <= tol.
std::size_t direct_terms_required(double r, double tol);

/// Direct summation to an enclosure of width <= tol. r = 0 is allowed.
Enclosure mathieu_direct(double r, double tol);

/// Plain truncation: M is the smallest count with tail bound
/// 1/(M^2 + r^2) <= tol; the enclosure is [S_M, S_M + 1/(M^2 + r^2)].
std::size_t truncated_terms_required(double r, double tol);
Enclosure mathieu_truncated(double r, double tol);

/// Bracket of CF(r;x) from a/b approximants n-1 and n (n >= 2), padded by
/// the rounding bound. Throws NotCertifiable when x < 1.
Enclosure cf_bracket(const MathieuCFParams<double>& params, std::size_t n);

/// Adaptive bracketing of CF(r;x) until the width is <= tol or max_terms
/// approximants have been used. `target_met` reports which happened.
CertifiedValue cf_enclosure(const MathieuCFParams<double>& params, double tol,
                            std::size_t max_terms = kDefaultMaxCfTerms);

/// Sum of the first k-1 series terms plus the CF(r;k) bracket built from
/// a/b approximants up to n_terms (n_terms >= 2).
Enclosure mathieu_theorem1(double r, int k, std::size_t n_terms);

/// As mathieu_theorem1, increasing the depth until width <= tol.
CertifiedValue tail_identity_to_width(double r, int k, double tol,
                                 std::size_t max_terms = kDefaultMaxCfTerms);

struct AsymptoticResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  double first_omitted_term = 0.0;  // magnitude
};

/// sum_{m=0}^{n_terms-1} (-1)^m B_{2m} / r^{2m+2}
AsymptoticResult asymptotic(double r, std::size_t n_terms);

/// Optimal truncation: stops before the smallest term (at least one term
/// is always used; the search is capped at kMaxCachedEvenBernoulli terms).
AsymptoticResult asymptotic_auto(double r);

/// CF(r;x) - CF(r;x+1) - 2x/(x^2+r^2)^2 with both continued fractions
/// bracketed to width <= tol/4. Throws ToleranceUnachievable when the
/// brackets cannot be made that narrow.
double telescoping_residual(double r, double x, double tol,
                            std::size_t max_terms = kDefaultMaxCfTerms);

/// First-order bound on the rounding error of a/b approximant n.
double cf_rounding_pad(std::size_t n, double value);

}  // namespace mcf
