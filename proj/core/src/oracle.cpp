#include "mcf/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mcf/bernoulli.hpp"
#include "mcf/errors.hpp"
#include "summation.hpp"

namespace mcf {

namespace {

constexpr double kRecurrenceFloor = 10.0;
constexpr std::size_t kAsymptoticOrder = 10;  // through B_20

bool is_pole(ComplexValue z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

}  // namespace

ComplexValue trigamma(ComplexValue z) {
  if (is_pole(z)) throw DomainError("trigamma: pole at non-positive integer");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("trigamma: non-finite argument");

  ComplexValue shifted_sum{0.0, 0.0};
  while (z.real() < kRecurrenceFloor) {
    shifted_sum += 1.0 / (z * z);
    z += 1.0;
  }
  // psi'(z) ~ 1/z + 1/(2z^2) + sum_k B_{2k} / z^{2k+1}
  const ComplexValue inv = 1.0 / z;
  const ComplexValue inv2 = inv * inv;
  ComplexValue power = inv * inv2;
  ComplexValue series = inv + 0.5 * inv2;
  for (std::size_t k = 1; k <= kAsymptoticOrder; ++k) {
    series += even_bernoulli(k) * power;
    power *= inv2;
  }
  return shifted_sum + series;
}

double tail_via_trigamma(double r, double x) {
  if (!(r > 0.0)) throw DomainError("tail_via_trigamma requires r > 0");
  if (!(x > 0.5)) throw DomainError("tail_via_trigamma requires x > 1/2");
  return trigamma({x, -r}).imag() / r;
}

double mathieu_integral(double r, double tol) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("mathieu_integral requires r > 0");
  if (!(tol >= kMinIntegralTolerance))
    throw ToleranceUnachievable("mathieu_integral: tolerance below quadrature capability (1e-10)");

  // |integrand| <= t e^{-t}/(1 - e^{-X}) past X, whose integral is (X+1)e^{-X}/(1-e^{-X})
  double cutoff = 1.0;
  auto remainder = [r](double X) { return (X + 1.0) * std::exp(-X) / (-std::expm1(-X) * r); };
  while (remainder(cutoff) >= tol / 2.0) cutoff += 1.0;

  auto integrand = [r](double t) {
    if (t == 0.0) return 0.0;
    return t / std::expm1(t) * std::sin(r * t);
  };
  // one panel per half period keeps each Gauss-Kronrod rule on a smooth arc
  const double panel = std::min(1.0, std::acos(-1.0) / r);
  const auto panels = static_cast<std::size_t>(std::ceil(cutoff / panel));
  const double step = cutoff / static_cast<double>(panels);
  detail::CompensatedSum total;
  double error_total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = step * static_cast<double>(i);
    const double b = (i + 1 == panels) ? cutoff : a + step;
    double error = 0.0;
    const double piece = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, a, b, 8, 1e-14, &error);
    total.add(piece);
    error_total += error;
  }
  if (error_total / r > tol / 2.0)
    throw ToleranceUnachievable("mathieu_integral: quadrature error estimate " + std::to_string(error_total / r) +
                                " exceeds tol/2");
  return total.value() / r;
}

ContinuedFraction<double> apery_form() {
  return ContinuedFraction<double>(1.0, [](std::size_t n) -> Term<double> {
    if (n == 1) return {1.0, 4.0};
    const double m = static_cast<double>(n / 2);
    if (n % 2 == 0) return {m * m * m, 1.0};
    return {m * m * m, 4.0 * (2.0 * m + 1.0)};
  });
}

double apery_cf(std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("apery_cf needs at least one term");
  return convergent(apery_form(), n_terms).value;
}

Enclosure zeta3_direct(double tol) {
  if (!(tol > 0.0)) throw DomainError("zeta3_direct: tolerance must be positive");
  // width 1/(2N^2) - 1/(2(N+1)^2) < 1/N^3
  auto N = static_cast<std::size_t>(std::ceil(std::cbrt(1.0 / tol)));
  if (N < 1) N = 1;
  detail::CompensatedSum sum;
  for (std::size_t n = N; n >= 1; --n) {
    const double d = static_cast<double>(n);
    sum.add(1.0 / (d * d * d));
  }
  const double partial = sum.value();
  const double d = static_cast<double>(N);
  const double pad = 10.0 * std::numeric_limits<double>::epsilon() * partial;
  return {partial + 0.5 / ((d + 1.0) * (d + 1.0)) - pad, partial + 0.5 / (d * d) + pad};
}

double zeta3() {
  static const double value = zeta3_direct(1e-15).midpoint();
  return value;
}

}  // namespace mcf
