#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcf {

using Rational = boost::multiprecision::cpp_rational;

/// B_0 .. B_{n_max} as exact rationals, convention B_1 = -1/2
/// (the coefficients of x/(e^x - 1)).
std::vector<Rational> bernoulli_numbers(std::size_t n_max);

/// Largest m for which even_bernoulli(m) is available.
inline constexpr std::size_t kMaxCachedEvenBernoulli = 100;

/// B_{2m} rounded to double, from a process-wide cache filled on first use.
double even_bernoulli(std::size_t m);

}  // namespace mcf
