#include "mcf/bernoulli.hpp"

#include "mcf/errors.hpp"

namespace mcf {

std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
  using boost::multiprecision::cpp_int;

  std::vector<Rational> b(n_max + 1);
  b[0] = 1;
  // Row n+1 of Pascal's triangle, updated in place.
  std::vector<cpp_int> binom{1, 1};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<cpp_int> next(n + 2);
    next[0] = 1;
    next[n + 1] = 1;
    for (std::size_t j = 1; j <= n; ++j) next[j] = binom[j - 1] + binom[j];
    binom = std::move(next);

    if (n > 1 && n % 2 == 1) {
      b[n] = 0;
      continue;
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      acc += Rational(binom[j]) * b[j];
    }
    b[n] = -acc / Rational(binom[n]);
  }
  return b;
}

double even_bernoulli(std::size_t m) {
  static const std::vector<double> cache = [] {
    const auto exact = bernoulli_numbers(2 * kMaxCachedEvenBernoulli);
    std::vector<double> out(kMaxCachedEvenBernoulli + 1);
    for (std::size_t i = 0; i <= kMaxCachedEvenBernoulli; ++i)
      out[i] = exact[2 * i].convert_to<double>();
    return out;
  }();
  if (m > kMaxCachedEvenBernoulli) throw DomainError("even_bernoulli: index beyond cache");
  return cache[m];
}

}  // namespace mcf
