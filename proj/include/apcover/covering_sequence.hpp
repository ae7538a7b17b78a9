#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "apcover/natural.hpp"

namespace apcover {

// The sequence A is the disjoint union of the levels
//
//   T_l = { u*4^l + sum_{i<l} v_i*4^i : u in {1,2,3,4}, v_i in {1,2} },
//
// and every level lies strictly above the previous one. Inside a level the
// value is monotone in the lexicographic order of (u, v_{l-1}, ..., v_0), which
// is what makes counting and unranking digit scans.

/// Canonical representation of a member of T_level.
struct TElement {
  std::size_t level = 0;
  unsigned u = 1;
  /// Little-endian, exactly `level` entries, each 1 or 2.
  std::vector<std::uint8_t> v;

  friend bool operator==(const TElement&, const TElement&) = default;
};

/// Throws std::invalid_argument if u or any v entry is out of range or v has
/// the wrong length.
void check_element(const TElement& e);

Natural encode(const TElement& e);

/// The unique TElement encoding to n, or nullopt when n is not in A.
std::optional<TElement> decompose(const Natural& n);

bool member(const Natural& n);

/// A(n) = |{a in A : a <= n}|, in O(log n) digit operations.
Natural count_leq(const Natural& n);

/// Smallest and largest element of T_l.
Natural level_min(std::size_t l);
Natural level_max(std::size_t l);

/// |T_l| = 4 * 2^l.
Natural level_size(std::size_t l);

/// 1-based index into A = {n_1 < n_2 < ...}.
class Rank {
 public:
  /// Throws std::invalid_argument unless j >= 1.
  explicit Rank(Natural j);
  const Natural& value() const { return j_; }

 private:
  Natural j_;
};

/// n_j. Inverse of count_leq on A.
Natural element_at(const Rank& j);

/// The elements of A in [lo, hi] in increasing order. Iteration walks ranks
/// through element_at and holds O(1) state regardless of the span.
class ElementRange {
 public:
  class iterator {
   public:
    using value_type = Natural;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Natural& operator*() const { return current_; }
    const Natural* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class ElementRange;
    iterator(Natural rank, Natural hi);

    Natural rank_;
    Natural hi_;
    Natural current_;
    bool done_ = true;
  };

  ElementRange(Natural lo, Natural hi);

  iterator begin() const;
  std::default_sentinel_t end() const { return {}; }

 private:
  Natural lo_;
  Natural hi_;
};

/// Throws std::invalid_argument if lo > hi.
ElementRange iter_range(const Natural& lo, const Natural& hi);

}  // namespace apcover
