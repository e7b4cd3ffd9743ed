#pragma once

// Generic machinery for generalized continued fractions
//
//   b0 + a1/(b1 + a2/(b2 + ...))
//
// Terms are produced lazily by a pure, 1-indexed generator. Approximants
// A_n/B_n follow the three-term recurrence with joint power-of-two
// rescaling, so the value never depends on the rescale threshold.
//
// Everything is templated on the scalar type; `double` is the working
// precision, wider types (e.g. boost::multiprecision) work unchanged.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/math/special_functions/fpclassify.hpp>

#include "mcf/errors.hpp"

namespace mcf {

template <class Real>
struct Term {
  Real a;  // partial numerator
  Real b;  // partial denominator
};

inline constexpr double kDefaultRescaleThreshold = 1e150;

template <class Real = double>
class ContinuedFraction {
 public:
  using Generator = std::function<Term<Real>(std::size_t)>;

  ContinuedFraction(Real b0, Generator terms)
      : b0_(std::move(b0)), terms_(std::make_shared<const Generator>(std::move(terms))) {}

  const Real& b0() const noexcept { return b0_; }

  /// Term n >= 1. Throws ZeroPartialNumerator if the generator yields a_n == 0.
  Term<Real> term(std::size_t n) const {
    if (n == 0) throw DomainError("continued fraction terms are 1-indexed");
    Term<Real> t = (*terms_)(n);
    if (t.a == Real(0)) throw ZeroPartialNumerator(n);
    return t;
  }

 private:
  Real b0_;
  std::shared_ptr<const Generator> terms_;
};

/// (A_n, B_n) as stored after rescaling, together with the previous pair.
/// The stored values equal the true ones times 2^scale_exponent.
template <class Real = double>
struct Convergent {
  std::size_t n = 0;
  Real A{};
  Real B{};
  Real A_prev{};
  Real B_prev{};
  long scale_exponent = 0;
  Real value{};  // A/B; NaN when B == 0
};

namespace detail {

inline int rescale_exponent(double threshold) {
  if (!(threshold > 1.0) || !std::isfinite(threshold))
    throw DomainError("rescale threshold must be finite and > 1");
  int e = 0;
  std::frexp(threshold, &e);
  return e - 1;  // 2^(e-1) <= threshold
}

template <class Real>
Real ratio_or_nan(const Real& a, const Real& b) {
  if (b == Real(0)) return std::numeric_limits<Real>::quiet_NaN();
  return a / b;
}

}  // namespace detail

/// Incremental evaluation of successive approximants.
template <class Real = double>
class ConvergentStepper {
 public:
  explicit ConvergentStepper(ContinuedFraction<Real> cf,
                             double rescale_threshold = kDefaultRescaleThreshold)
      : cf_(std::move(cf)),
        threshold_(rescale_threshold),
        exponent_(detail::rescale_exponent(rescale_threshold)) {
    state_.n = 0;
    state_.A = cf_.b0();
    state_.B = Real(1);
    state_.A_prev = Real(1);
    state_.B_prev = Real(0);
    state_.value = state_.A;
  }

  const Convergent<Real>& current() const noexcept { return state_; }

  const Convergent<Real>& advance() {
    using std::abs;
    using std::ldexp;
    const std::size_t n = state_.n + 1;
    const Term<Real> t = cf_.term(n);
    Real A = t.b * state_.A + t.a * state_.A_prev;
    Real B = t.b * state_.B + t.a * state_.B_prev;
    state_.A_prev = std::move(state_.A);
    state_.B_prev = std::move(state_.B);
    state_.A = std::move(A);
    state_.B = std::move(B);
    state_.n = n;
    if (!boost::math::isfinite(state_.A) || !boost::math::isfinite(state_.B))
      throw NumericalOverflow(n);
    const Real big = abs(state_.A) > abs(state_.B) ? abs(state_.A) : abs(state_.B);
    if (big > Real(threshold_)) {
      state_.A = ldexp(state_.A, -exponent_);
      state_.B = ldexp(state_.B, -exponent_);
      state_.A_prev = ldexp(state_.A_prev, -exponent_);
      state_.B_prev = ldexp(state_.B_prev, -exponent_);
      state_.scale_exponent -= exponent_;
    }
    state_.value = detail::ratio_or_nan(state_.A, state_.B);
    return state_;
  }

 private:
  ContinuedFraction<Real> cf_;
  double threshold_;
  int exponent_;
  Convergent<Real> state_;
};

/// The nth approximant (n = 0 gives b0).
template <class Real>
Convergent<Real> convergent(const ContinuedFraction<Real>& cf, std::size_t n,
                            double rescale_threshold = kDefaultRescaleThreshold) {
  ConvergentStepper<Real> stepper(cf, rescale_threshold);
  while (stepper.current().n < n) stepper.advance();
  if (stepper.current().B == Real(0)) throw IndeterminateApproximant(n);
  return stepper.current();
}

template <class Real = double>
struct EvalReport {
  Real value{};
  std::size_t terms_used = 0;
  bool converged = false;
  Real last_delta{};  // |f_n - f_{n-1}|
};

/// Iterates approximants until two successive values differ by at most
/// `tol`. The stopping rule is heuristic; nothing here is certified.
template <class Real>
EvalReport<Real> evaluate(const ContinuedFraction<Real>& cf, const std::type_identity_t<Real>& tol,
                          std::size_t max_terms) {
  using std::abs;
  if (!(tol >= Real(0))) throw DomainError("evaluate: tolerance must be non-negative");
  if (max_terms < 2) throw DomainError("evaluate: max_terms must be at least 2");

  ConvergentStepper<Real> stepper(cf);
  EvalReport<Real> report;
  report.last_delta = std::numeric_limits<Real>::infinity();
  Real prev = stepper.current().value;
  bool have_prev = true;
  while (stepper.current().n < max_terms) {
    const auto& c = stepper.advance();
    if (c.B == Real(0)) {
      have_prev = false;
      continue;
    }
    report.value = c.value;
    report.terms_used = c.n;
    if (have_prev) {
      report.last_delta = abs(c.value - prev);
      if (report.last_delta <= tol) {
        report.converged = true;
        break;
      }
    }
    prev = c.value;
    have_prev = true;
  }
  if (report.terms_used == 0) throw IndeterminateApproximant(max_terms);
  return report;
}

/// Canonical even contraction: approximant k of the result equals
/// approximant 2k of `cf`. Needs b_{2k} != 0 for k >= 1; a violation is
/// reported lazily, when the offending term is generated.
template <class Real>
ContinuedFraction<Real> even_contraction(const ContinuedFraction<Real>& cf) {
  auto even_b = [cf](std::size_t k) {
    const Real b = cf.term(2 * k).b;
    if (b == Real(0)) throw ContractionDoesNotExist(k);
    return b;
  };
  return ContinuedFraction<Real>(cf.b0(), [cf, even_b](std::size_t k) -> Term<Real> {
    if (k == 1) {
      const Term<Real> t1 = cf.term(1);
      const Term<Real> t2 = cf.term(2);
      even_b(1);
      return {t1.a * t2.b, t2.a + t1.b * t2.b};
    }
    // k >= 2: numerator -a_{2k-2} a_{2k-1} b_{2k-4} b_{2k}, with b_0 dropped at k = 2
    const Real b_lo = k == 2 ? Real(1) : even_b(k - 2);
    const Real b_mid = even_b(k - 1);
    const Real b_hi = even_b(k);
    const Term<Real> t_odd = cf.term(2 * k - 1);
    const Real a_even = cf.term(2 * k - 2).a;
    const Real a_hi = cf.term(2 * k).a;
    return {-(a_even * t_odd.a * b_lo * b_hi), t_odd.a * b_hi + b_mid * (a_hi + t_odd.b * b_hi)};
  });
}

/// Equivalence transform c_n = r_{n-1} r_n a_n, d_n = r_n b_n, d_0 = b_0.
template <class Real>
ContinuedFraction<Real> equivalence_transform(const ContinuedFraction<Real>& cf,
                                              std::function<std::type_identity_t<Real>(std::size_t)> r_seq) {
  if (!r_seq) throw InvalidEquivalenceSequence("invalid equivalence sequence: empty generator");
  if (r_seq(0) != Real(1)) throw InvalidEquivalenceSequence("invalid equivalence sequence: r_0 != 1");
  return ContinuedFraction<Real>(cf.b0(), [cf, r_seq](std::size_t n) -> Term<Real> {
    const Real r_prev = r_seq(n - 1);
    const Real r_n = r_seq(n);
    if (r_n == Real(0) || r_prev == Real(0))
      throw InvalidEquivalenceSequence("invalid equivalence sequence: r_n = 0 near n = " +
                                       std::to_string(n));
    const Term<Real> t = cf.term(n);
    return {r_prev * r_n * t.a, r_n * t.b};
  });
}

}  // namespace mcf
