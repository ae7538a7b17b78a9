#include "apcover/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "apcover/covering_sequence.hpp"

namespace apcover {

namespace {

void require_order(unsigned k) {
  if (k < 3) throw std::invalid_argument("progression length k must be >= 3, got " + std::to_string(k));
}

bool sorted_contains(std::span<const Natural> s, const Natural& x) {
  return std::binary_search(s.begin(), s.end(), x);
}

// Walks candidates x = n - d for the (k-1)-th term in decreasing order, so the
// first hit has the smallest d. `next` yields members below n, descending.
template <class Next, class Contains>
std::optional<std::vector<Natural>> smallest_difference_witness(const Natural& n, unsigned k,
                                                                Next next, Contains contains) {
  for (auto x = next(); x; x = next()) {
    const Natural d = n - *x;
    if (n < (k - 1) * d) break;
    bool ok = true;
    for (unsigned j = 2; j < k && ok; ++j) ok = contains(Natural(n - j * d));
    if (!ok) continue;
    std::vector<Natural> terms;
    terms.reserve(k - 1);
    for (unsigned j = k - 1; j >= 1; --j) terms.push_back(n - j * d);
    return terms;
  }
  return std::nullopt;
}

std::optional<std::vector<Natural>> covers_sorted(std::span<const Natural> members,
                                                  const Natural& n, unsigned k) {
  auto pos = static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), n) -
                                      members.begin());
  auto next = [&]() -> std::optional<Natural> {
    if (pos == 0) return std::nullopt;
    return members[--pos];
  };
  auto contains = [&](const Natural& x) { return sorted_contains(members, x); };
  return smallest_difference_witness(n, k, next, contains);
}

}  // namespace

bool CoveringSequence::contains(const Natural& n) const { return member(n); }

std::optional<Natural> CoveringSequence::predecessor(const Natural& n) const {
  if (n <= 1) return std::nullopt;
  const Natural below = count_leq(n - 1);
  if (below == 0) return std::nullopt;
  return element_at(Rank(below));
}

std::vector<Natural> CoveringSequence::upto(const Natural& bound) const {
  std::vector<Natural> out;
  if (bound < 1) return out;
  for (const Natural& x : iter_range(0, bound)) out.push_back(x);
  return out;
}

ArithmeticSequence::ArithmeticSequence(Natural offset, Natural step)
    : offset_(std::move(offset)), step_(std::move(step)) {
  require_nonnegative(offset_, "sequence offset");
  if (step_ < 1) throw std::invalid_argument("arithmetic sequence step must be >= 1");
}

bool ArithmeticSequence::contains(const Natural& n) const {
  return n >= offset_ && (n - offset_) % step_ == 0;
}

std::optional<Natural> ArithmeticSequence::predecessor(const Natural& n) const {
  if (n <= offset_) return std::nullopt;
  const Natural steps = (n - offset_ - 1) / step_;
  return offset_ + steps * step_;
}

std::vector<Natural> ArithmeticSequence::upto(const Natural& bound) const {
  std::vector<Natural> out;
  for (Natural x = offset_; x <= bound; x += step_) out.push_back(x);
  return out;
}

FiniteSequence::FiniteSequence(std::vector<Natural> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) require_nonnegative(t, "sequence term");
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool FiniteSequence::contains(const Natural& n) const { return sorted_contains(terms_, n); }

std::optional<Natural> FiniteSequence::predecessor(const Natural& n) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n);
  if (it == terms_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::vector<Natural> FiniteSequence::upto(const Natural& bound) const {
  auto it = std::upper_bound(terms_.begin(), terms_.end(), bound);
  return {terms_.begin(), it};
}

std::optional<std::vector<Natural>> covers(const IntegerSequence& seq, const Natural& n,
                                           unsigned k) {
  require_order(k);
  require_nonnegative(n, "covers argument");
  Natural cursor = n;
  auto next = [&]() -> std::optional<Natural> {
    auto p = seq.predecessor(cursor);
    if (p) cursor = *p;
    return p;
  };
  auto contains = [&](const Natural& x) { return seq.contains(x); };
  return smallest_difference_witness(n, k, next, contains);
}

CoverReport weak_covers(const IntegerSequence& seq, const Natural& n, unsigned k) {
  require_order(k);
  CoverReport report;
  report.n = n;
  if (seq.contains(n)) {
    report.searched = false;
    return report;
  }
  report.witness_terms = covers(seq, n, k);
  return report;
}

std::optional<Natural> min_threshold(const IntegerSequence& seq, unsigned k,
                                     const Natural& scan_to) {
  require_order(k);
  if (scan_to < 1) throw std::invalid_argument("min_threshold needs scan_to >= 1");
  const std::vector<Natural> members = seq.upto(scan_to);
  for (Natural n = scan_to;; --n) {
    if (!covers_sorted(members, n, k)) return n;
    if (n == 0) break;
  }
  return std::nullopt;
}

bool has_k_ap(std::span<const Natural> s, unsigned k) {
  require_order(k);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i - 1] < s[i])) throw std::invalid_argument("has_k_ap needs a strictly increasing set");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Natural d = s[j] - s[i];
      if (s[i] + (k - 1) * d > s.back()) break;
      bool all = true;
      for (unsigned t = 2; t < k && all; ++t) all = sorted_contains(s, Natural(s[i] + t * d));
      if (all) return true;
    }
  }
  return false;
}

bool completes_k_ap(std::span<const Natural> sorted_set, const Natural& candidate, unsigned k) {
  require_order(k);
  auto pos = std::lower_bound(sorted_set.begin(), sorted_set.end(), candidate);
  while (pos != sorted_set.begin()) {
    --pos;
    const Natural d = candidate - *pos;
    if (candidate < (k - 1) * d) break;
    bool all = true;
    for (unsigned j = 2; j < k && all; ++j) all = sorted_contains(sorted_set, Natural(candidate - j * d));
    if (all) return true;
  }
  return false;
}

}  // namespace apcover
