#pragma once

// Independent references for the Mathieu series and zeta(3). None of these
// routines touch the CF(r;x) machinery of mathieu.hpp.

#include <complex>
#include <cstddef>

#include "mcf/continued_fraction.hpp"
#include "mcf/enclosure.hpp"

namespace mcf {

using ComplexValue = std::complex<double>;

/// psi'(z) for complex z off the poles {0, -1, -2, ...}.
ComplexValue trigamma(ComplexValue z);

/// Im psi'(x - ir) / r = sum_{k>=0} 2(x+k)/((x+k)^2 + r^2)^2, i.e. CF(r;x).
double tail_via_trigamma(double r, double x);

/// (1/r) int_0^inf t sin(rt)/(e^t - 1) dt by adaptive Gauss-Kronrod on a
/// truncated range. Requires tol >= 1e-10.
double mathieu_integral(double r, double tol);

inline constexpr double kMinIntegralTolerance = 1e-10;

/// 1 + 1/(4 + 1^3/(1 + 1^3/(12 + 2^3/(1 + 2^3/(20 + ...))))).
ContinuedFraction<double> apery_form();

/// Approximant n_terms of apery_form().
double apery_cf(std::size_t n_terms);

/// sum n^-3 with the integral tail enclosure [1/(2(N+1)^2), 1/(2N^2)].
Enclosure zeta3_direct(double tol);

/// zeta(3) from zeta3_direct, computed once per process.
double zeta3();

}  // namespace mcf
