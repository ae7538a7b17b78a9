#include "apcover/base4.hpp"

#include <stdexcept>
#include <string>

namespace apcover {

namespace bmp = boost::multiprecision;

Digit4::Digit4(unsigned value) : value_(static_cast<std::uint8_t>(value)) {
  if (value > 3) {
    throw std::out_of_range("base-4 digit out of range: " + std::to_string(value));
  }
}

std::size_t digit_length(const Natural& n) {
  require_nonnegative(n, "digit_length argument");
  if (n == 0) return 0;
  return bmp::msb(n) / 2 + 1;
}

Digit4 digit_at(const Natural& n, std::size_t i) {
  require_nonnegative(n, "digit_at argument");
  const unsigned lo = bmp::bit_test(n, 2 * i) ? 1u : 0u;
  const unsigned hi = bmp::bit_test(n, 2 * i + 1) ? 2u : 0u;
  return Digit4(lo | hi);
}

DigitVector to_digits(const Natural& n) {
  const std::size_t len = digit_length(n);
  DigitVector out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(digit_at(n, i));
  return out;
}

Natural from_digits(std::span<const Digit4> digits) {
  Natural n;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const unsigned d = digits[i].value();
    if (d & 1u) bmp::bit_set(n, 2 * i);
    if (d & 2u) bmp::bit_set(n, 2 * i + 1);
  }
  return n;
}

Natural from_digits(std::span<const unsigned> digits) {
  DigitVector checked;
  checked.reserve(digits.size());
  for (unsigned d : digits) checked.emplace_back(d);
  return from_digits(std::span<const Digit4>(checked));
}

}  // namespace apcover
