#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "apcover/natural.hpp"

namespace apcover {

/// A single base-4 digit. Construction from an out-of-range value throws
/// std::out_of_range, so a DigitVector can never hold a bad entry.
class Digit4 {
 public:
  constexpr Digit4() = default;
  explicit Digit4(unsigned value);

  constexpr unsigned value() const { return value_; }
  friend constexpr bool operator==(Digit4, Digit4) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Little-endian: entry i is the coefficient of 4^i. The canonical form has no
/// trailing zero digit, so zero is the empty vector.
using DigitVector = std::vector<Digit4>;

DigitVector to_digits(const Natural& n);

Natural from_digits(std::span<const Digit4> digits);

/// Raw-integer overload; throws std::out_of_range if an entry is not in {0..3}.
Natural from_digits(std::span<const unsigned> digits);

/// Digit i of n, zero beyond the canonical length. O(1).
Digit4 digit_at(const Natural& n, std::size_t i);

/// Length of the canonical expansion: floor(log4 n) + 1, or 0 for n = 0.
std::size_t digit_length(const Natural& n);

}  // namespace apcover
