#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// B_n vanished at the requested approximant index.
class IndeterminateApproximant : public Error {
 public:
  explicit IndeterminateApproximant(std::size_t n)
      : Error("indeterminate approximant at n = " + std::to_string(n)), index_(n) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NumericalOverflow : public Error {
 public:
  explicit NumericalOverflow(std::size_t n)
      : Error("numerical overflow despite rescaling at n = " + std::to_string(n)), index_(n) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The even contraction needs b_{2k} != 0; `k()` names the offending index.
class ContractionDoesNotExist : public Error {
 public:
  explicit ContractionDoesNotExist(std::size_t k)
      : Error("contraction does not exist: b_{2k} = 0 for k = " + std::to_string(k)), k_(k) {}
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

class InvalidEquivalenceSequence : public Error {
 public:
  using Error::Error;
};

/// A partial numerator a_n = 0 was produced by a term generator.
class ZeroPartialNumerator : public Error {
 public:
  explicit ZeroPartialNumerator(std::size_t n)
      : Error("partial numerator a_n = 0 at n = " + std::to_string(n)), index_(n) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The requested accuracy cannot be met within the configured work budget.
class ToleranceUnachievable : public Error {
 public:
  using Error::Error;
};

/// Even/odd bracketing is not a valid certificate for these parameters.
class NotCertifiable : public Error {
 public:
  using Error::Error;
};

}  // namespace mcf
