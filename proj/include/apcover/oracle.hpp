#pragma once

#include <optional>
#include <span>
#include <vector>

#include "apcover/integer_sequence.hpp"
#include "apcover/natural.hpp"

namespace apcover {

/// Outcome of a (weak) covering query for a single n.
struct CoverReport {
  Natural n;
  /// The k-1 smaller progression terms, increasing, when n is covered.
  std::optional<std::vector<Natural>> witness_terms;
  /// False when the weak variant exempted n because it is itself a member.
  bool searched = true;

  bool exempt() const { return !searched; }
  bool covered() const { return witness_terms.has_value(); }
};

/// Smallest-difference witness that n completes a k-term progression from
/// members of seq: returns [n-(k-1)d, ..., n-d] for the least d >= 1 with all
/// terms in seq and n-(k-1)d >= 0, or nullopt. Throws std::invalid_argument
/// if k < 3.
std::optional<std::vector<Natural>> covers(const IntegerSequence& seq, const Natural& n,
                                           unsigned k);

/// As covers(), but n in seq is exempt.
CoverReport weak_covers(const IntegerSequence& seq, const Natural& n, unsigned k);

/// Largest n <= scan_to that is not covered, or nullopt if every n in
/// [0, scan_to] is covered.
std::optional<Natural> min_threshold(const IntegerSequence& seq, unsigned k,
                                     const Natural& scan_to);

/// Whether the strictly increasing set contains a k-term progression. Checks
/// every pair. Throws std::invalid_argument if the input is not strictly
/// increasing or k < 3.
bool has_k_ap(std::span<const Natural> sorted_set, unsigned k);

/// Whether candidate completes a k-term progression whose other terms are in
/// sorted_set. Only progressions ending at candidate are examined, which is
/// all an incremental AP-free builder needs.
bool completes_k_ap(std::span<const Natural> sorted_set, const Natural& candidate, unsigned k);

}  // namespace apcover
