#include "apcover/natural.hpp"

#include <stdexcept>

namespace apcover {

Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("expected a nonnegative decimal integer, got an empty string");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("expected a nonnegative decimal integer, got '" +
                                  std::string(text) + "'");
    }
  }
  // cpp_int's string constructor treats a leading 0 as octal.
  const auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return Natural(0);
  return Natural(std::string(text.substr(first)));
}

std::string to_decimal(const Natural& n) { return n.str(); }

Natural pow2(std::size_t e) {
  Natural r;
  boost::multiprecision::bit_set(r, e);
  return r;
}

Natural pow4(std::size_t e) { return pow2(2 * e); }

std::size_t bit_width_minus_one(const Natural& n) {
  if (n <= 0) throw std::domain_error("bit_width_minus_one: argument must be positive");
  return boost::multiprecision::msb(n);
}

void require_nonnegative(const Natural& n, std::string_view what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace apcover
