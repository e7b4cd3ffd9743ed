#pragma once

// The tail continued fraction CF(r; x) in its three coefficient forms.
//
//   kappa/lambda: 1/((x-1/2)^2 + (1+4r^2)/4 + K kappa_n/((x-1/2)^2 + lambda_n))
//   a/b:          K a_n/b_n with positive coefficients when x >= 1
//   c/d:          K c_n/d_n, integer-friendly rescaling of a/b
//
// All three are stored as ordinary continued fractions with b0 = 0, so they
// share the engine in continued_fraction.hpp.

#include <cstddef>
#include <utility>

#include "mcf/continued_fraction.hpp"
#include "mcf/errors.hpp"

namespace mcf {

template <class Real = double>
class MathieuCFParams {
 public:
  MathieuCFParams(Real r, Real x) : r_(std::move(r)), x_(std::move(x)) {
    if (!(r_ > Real(0))) throw DomainError("CF(r;x) requires r > 0");
    if (!(x_ > Real(0.5))) throw DomainError("CF(r;x) requires x > 1/2");
    // x*(x-1) keeps full relative accuracy near x = 1 where z vanishes
    z_ = x_ * (x_ - Real(1));
    r2_ = r_ * r_;
    shift2_ = (x_ - Real(0.5)) * (x_ - Real(0.5));
  }

  const Real& r() const noexcept { return r_; }
  const Real& x() const noexcept { return x_; }
  /// z = (x - 1/2)^2 - 1/4 = x^2 - x.
  const Real& z() const noexcept { return z_; }

  /// (x-1/2)^2 + (1 + 4r^2)/4
  Real leading_denominator() const { return shift2_ + (Real(1) + Real(4) * r2_) / Real(4); }

  Real kappa(std::size_t n) const {
    const Real m(n);
    return -(m * m * m * m * (m * m + Real(4) * r2_)) / (Real(4) * (Real(2) * m - Real(1)) * (Real(2) * m + Real(1)));
  }

  Real lambda(std::size_t n) const {
    const Real m(n);
    return (Real(2) * m * m + Real(2) * m + Real(1) + Real(4) * r2_) / Real(4);
  }

  /// Term n of the kappa/lambda form in the b0 = 0, a_1 = 1 layout.
  Term<Real> kappa_lambda_term(std::size_t n) const {
    if (n == 1) return {Real(1), leading_denominator()};
    return {kappa(n - 1), shift2_ + lambda(n - 1)};
  }

  Term<Real> ab_term(std::size_t n) const {
    if (n == 1) return {Real(1), z_ + r2_};
    const std::size_t half = n / 2;
    const Real m(half);
    if (n % 2 == 0) return {m * m * m / (Real(2) * (Real(2) * m - Real(1))), Real(1)};
    const Real odd = Real(2) * m + Real(1);
    return {m * (m * m + Real(4) * r2_) / (Real(2) * odd), z_ + r2_ / odd};
  }

  Term<Real> cd_term(std::size_t n) const {
    if (n == 1) return {Real(2), Real(2) * z_ + Real(2) * r2_};
    const std::size_t half = n / 2;
    const Real m(half);
    if (n % 2 == 0) return {m * m * m, Real(1)};
    return {m * (m * m + Real(4) * r2_), Real(2) * (Real(2) * m + Real(1)) * z_ + Real(2) * r2_};
  }

  /// Every a_n, b_n of the a/b form is positive exactly when z >= 0.
  bool ab_all_positive() const { return z_ >= Real(0); }

 private:
  Real r_;
  Real x_;
  Real z_{};
  Real r2_{};
  Real shift2_{};
};

template <class Real>
ContinuedFraction<Real> kappa_lambda_form(const MathieuCFParams<Real>& p) {
  return ContinuedFraction<Real>(Real(0), [p](std::size_t n) { return p.kappa_lambda_term(n); });
}

template <class Real>
ContinuedFraction<Real> ab_form(const MathieuCFParams<Real>& p) {
  return ContinuedFraction<Real>(Real(0), [p](std::size_t n) { return p.ab_term(n); });
}

template <class Real>
ContinuedFraction<Real> cd_form(const MathieuCFParams<Real>& p) {
  return ContinuedFraction<Real>(Real(0), [p](std::size_t n) { return p.cd_term(n); });
}

/// Equivalence multipliers taking the a/b form to the c/d form:
/// r_0 = 1, r_n = 2n for odd n, r_n = 1 for even n.
template <class Real = double>
Real ab_to_cd_multiplier(std::size_t n) {
  if (n % 2 == 1) return Real(2 * n);
  return Real(1);
}

}  // namespace mcf
