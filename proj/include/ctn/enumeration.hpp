#pragma once

#include <cstdint>

#include "ctn/rational.hpp"

namespace ctn {

/// The fixed non-repeating enumeration q_0, q_1, ... of Q ∩ [0,1]:
/// 0, 1, then reduced fractions by increasing denominator, then numerator
/// (1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...).
UnitRational enumerate_rationals(std::uint64_t n);

/// Inverse of enumerate_rationals. Throws std::overflow_error when the index
/// would not fit in 64 bits.
std::uint64_t rational_index(const UnitRational& q);

/// Least n with q_n in (lo, hi), or in [lo, hi] when `closed` is set.
/// Requires lo < hi (std::invalid_argument otherwise).
std::uint64_t min_index_in(const UnitRational& lo, const UnitRational& hi, bool closed);

/// Sequential walk over the enumeration, cheaper than repeated
/// enumerate_rationals calls for prefix scans.
class RationalSequence {
 public:
  RationalSequence() = default;
  explicit RationalSequence(std::uint64_t start);

  std::uint64_t index() const { return index_; }
  const UnitRational& value() const { return value_; }
  void advance();

 private:
  std::uint64_t index_ = 0;
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  UnitRational value_{Rational(0)};
};

/// Σ_{k=1}^{n} φ(k).
std::uint64_t totient_sum(std::uint64_t n);

}  // namespace ctn
