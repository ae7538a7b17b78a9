#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace apcover {

/// Unbounded nonnegative integer. Every sequence value, count and rank in the
/// library is a Natural; no fixed-width bound applies anywhere.
using Natural = boost::multiprecision::cpp_int;

/// Exact rational, used for squared density ratios.
using Rational = boost::multiprecision::cpp_rational;

/// Parses a plain decimal string (digits only, no sign, no prefix).
/// Throws std::invalid_argument on anything else.
Natural parse_natural(std::string_view text);

/// Decimal rendering, never in scientific notation.
std::string to_decimal(const Natural& n);

Natural pow2(std::size_t e);
Natural pow4(std::size_t e);

/// Index of the highest set bit; n must be positive.
std::size_t bit_width_minus_one(const Natural& n);

/// Throws std::invalid_argument when n is negative. Naturals built from
/// subtraction go through here before they leave the library.
void require_nonnegative(const Natural& n, std::string_view what);

}  // namespace apcover
