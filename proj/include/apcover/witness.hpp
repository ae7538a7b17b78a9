#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "apcover/natural.hpp"

namespace apcover {

/// A 3-term progression a < b < n with a, b in A.
struct Witness {
  Natural a;
  Natural b;
  Natural n;
  /// The l with 2*4^l <= n < 8*4^l.
  std::size_t level = 0;
  /// Leading quotient floor(n / 4^l), in {2..7}.
  unsigned m = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LeadPair {
  unsigned u1;  // leading digit of b
  unsigned u2;  // leading digit of a (0 drops a to the level below)
};

struct DigitPair {
  unsigned v1;  // digit of b
  unsigned v2;  // digit of a
};

/// The case tables of the covering construction. Every row satisfies
/// u2 + m = 2*u1 (resp. v2 + m_i = 2*v1), so a + n = 2b holds digit by digit
/// with no carries.
struct CaseTables {
  /// Indexed by m; rows 0 and 1 are unused.
  std::array<LeadPair, 8> lead;
  /// Indexed by the base-4 digit m_i of n - m*4^l.
  std::array<DigitPair, 4> digit;
};

inline constexpr CaseTables kCaseTables{
    .lead = {{{0, 0}, {0, 0}, {1, 0}, {2, 1}, {2, 0}, {3, 1}, {3, 0}, {4, 1}}},
    .digit = {{{1, 2}, {1, 1}, {2, 2}, {2, 1}}},
};

/// Smallest n the construction handles.
inline constexpr unsigned kMinCoveredN = 32;

/// The unique l >= 2 with 2*4^l <= n < 8*4^l. Throws std::invalid_argument
/// for n < 32.
std::size_t level_for(const Natural& n);

/// The canonical witness for n >= 32. Throws std::invalid_argument for n < 32.
Witness find_witness(const Natural& n);

/// Exact check of every witness invariant: 1 <= a < b < n, a + n = 2b,
/// a and b members of T_level or T_{level-1}.
bool validate(const Witness& w);

struct SweepSummary {
  Natural checked;
  Natural failures;
  /// Smallest n in the range whose witness failed validation.
  std::optional<Natural> first_failure;
};

/// Runs find_witness + validate for every n in [from, to], split into `jobs`
/// contiguous chunks on separate threads. The merged summary does not depend
/// on the job count. Throws std::invalid_argument if from < 32, from > to or
/// jobs == 0.
SweepSummary verify_covering(const Natural& from, const Natural& to, unsigned jobs = 1);

}  // namespace apcover
