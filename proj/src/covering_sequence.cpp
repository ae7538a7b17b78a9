#include "apcover/covering_sequence.hpp"

#include <stdexcept>
#include <string>

#include "apcover/base4.hpp"

namespace apcover {

namespace bmp = boost::multiprecision;

namespace {

// Digit i of n is 1 or 2 exactly when its two bits differ.
bool digit_is_one_or_two(const Natural& n, std::size_t i) {
  return bmp::bit_test(n, 2 * i) != bmp::bit_test(n, 2 * i + 1);
}

bool low_digits_admissible(const Natural& n, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (!digit_is_one_or_two(n, i)) return false;
  }
  return true;
}

TElement element_from_digits(const Natural& n, std::size_t level, unsigned u) {
  TElement e;
  e.level = level;
  e.u = u;
  e.v.reserve(level);
  for (std::size_t i = 0; i < level; ++i) {
    e.v.push_back(static_cast<std::uint8_t>(digit_at(n, i).value()));
  }
  return e;
}

// |{e in T_l : e <= n}|.
Natural count_in_level(std::size_t l, const Natural& n) {
  const Natural top = n >> (2 * l);
  if (top == 0) return 0;
  if (top >= 5) return level_size(l);

  // Every (u, v) with u < top fits; for u == top, scan v from the top digit.
  Natural acc = (top - 1) << l;
  for (std::size_t i = l; i-- > 0;) {
    switch (digit_at(n, i).value()) {
      case 0:
        return acc;
      case 1:
        break;
      case 2:
        acc += pow2(i);
        break;
      default:
        acc += pow2(i + 1);
        return acc;
    }
  }
  return acc + 1;
}

}  // namespace

void check_element(const TElement& e) {
  if (e.u < 1 || e.u > 4) {
    throw std::invalid_argument("TElement: u must be in {1,2,3,4}, got " + std::to_string(e.u));
  }
  if (e.v.size() != e.level) {
    throw std::invalid_argument("TElement: v must have exactly l = " + std::to_string(e.level) +
                                " entries, got " + std::to_string(e.v.size()));
  }
  for (std::size_t i = 0; i < e.v.size(); ++i) {
    if (e.v[i] != 1 && e.v[i] != 2) {
      throw std::invalid_argument("TElement: v[" + std::to_string(i) + "] must be 1 or 2, got " +
                                  std::to_string(e.v[i]));
    }
  }
}

Natural encode(const TElement& e) {
  check_element(e);
  Natural n = Natural(e.u) << (2 * e.level);
  for (std::size_t i = 0; i < e.level; ++i) {
    bmp::bit_set(n, e.v[i] == 1 ? 2 * i : 2 * i + 1);
  }
  return n;
}

std::optional<TElement> decompose(const Natural& n) {
  if (n <= 0) return std::nullopt;
  const std::size_t top = digit_length(n) - 1;

  // Candidate l = top: leading digit is u in {1,2,3}.
  const unsigned lead = digit_at(n, top).value();
  if (lead != 0 && low_digits_admissible(n, top)) {
    return element_from_digits(n, top, lead);
  }
  // Candidate l = top - 1: the two leading digits read 10, i.e. u = 4.
  if (top >= 1 && lead == 1 && digit_at(n, top - 1).value() == 0 &&
      low_digits_admissible(n, top - 1)) {
    return element_from_digits(n, top - 1, 4);
  }
  return std::nullopt;
}

bool member(const Natural& n) { return decompose(n).has_value(); }

Natural level_size(std::size_t l) { return pow2(l + 2); }

Natural level_min(std::size_t l) {
  const Natural p = pow4(l);
  return p + (p - 1) / 3;
}

Natural level_max(std::size_t l) {
  const Natural p = pow4(l);
  return 4 * p + 2 * ((p - 1) / 3);
}

Natural count_leq(const Natural& n) {
  if (n <= 0) return 0;
  const std::size_t top = digit_length(n) - 1;
  if (top == 0) return count_in_level(0, n);

  // Levels below top - 1 end before 4^top <= n; level top + 1 starts above n.
  Natural total = 4 * (pow2(top - 1) - 1);
  total += count_in_level(top - 1, n);
  total += count_in_level(top, n);
  return total;
}

Rank::Rank(Natural j) : j_(std::move(j)) {
  if (j_ < 1) throw std::invalid_argument("rank must be >= 1");
}

Natural element_at(const Rank& rank) {
  const Natural& j = rank.value();
  // 4(2^l - 1) < j <= 4(2^{l+1} - 1)  <=>  2^{l+2} <= j + 3 < 2^{l+3}.
  const std::size_t l = bmp::msb(Natural(j + 3)) - 2;
  const Natural r = j - 4 * (pow2(l) - 1) - 1;
  const Natural u = 1 + (r >> l);

  Natural n = u << (2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    bmp::bit_set(n, bmp::bit_test(r, i) ? 2 * i + 1 : 2 * i);
  }
  return n;
}

ElementRange::ElementRange(Natural lo, Natural hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_nonnegative(lo_, "range lower bound");
  if (lo_ > hi_) throw std::invalid_argument("iter_range requires lo <= hi");
}

ElementRange::iterator::iterator(Natural rank, Natural hi)
    : rank_(std::move(rank)), hi_(std::move(hi)) {
  current_ = element_at(Rank(rank_));
  done_ = current_ > hi_;
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  if (done_) return *this;
  ++rank_;
  current_ = element_at(Rank(rank_));
  done_ = current_ > hi_;
  return *this;
}

ElementRange::iterator ElementRange::begin() const {
  const Natural first_rank = lo_ == 0 ? Natural(1) : count_leq(lo_ - 1) + 1;
  return iterator(first_rank, hi_);
}

ElementRange iter_range(const Natural& lo, const Natural& hi) { return ElementRange(lo, hi); }

}  // namespace apcover
