#pragma once

#include <cstddef>
#include <limits>

#include "mcf/errors.hpp"

namespace mcf {

/// Interval [lower, upper] guaranteed to contain the exact value.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;

  static Enclosure from_bounds(double lower, double upper) {
    if (!(lower <= upper)) throw DomainError("enclosure requires lower <= upper");
    return {lower, upper};
  }

  double width() const noexcept { return upper - lower; }
  double midpoint() const noexcept { return lower + 0.5 * (upper - lower); }
  bool contains(double v) const noexcept { return lower <= v && v <= upper; }
  bool contains(const Enclosure& other) const noexcept {
    return lower <= other.lower && other.upper <= upper;
  }
  bool intersects(const Enclosure& other) const noexcept {
    return lower <= other.upper && other.lower <= upper;
  }
  /// Distance from v to the interval; zero when v is inside.
  double distance_to(double v) const noexcept {
    if (v < lower) return lower - v;
    if (v > upper) return v - upper;
    return 0.0;
  }
  Enclosure shifted(double offset) const noexcept { return {lower + offset, upper + offset}; }
  Enclosure widened(double pad) const noexcept { return {lower - pad, upper + pad}; }
};

/// Enclosure produced by an adaptive method, with its work count.
struct CertifiedValue {
  Enclosure enclosure;
  std::size_t terms_used = 0;
  bool target_met = false;
};

inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

}  // namespace mcf
