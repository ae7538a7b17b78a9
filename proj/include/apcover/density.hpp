#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "apcover/natural.hpp"

namespace apcover {

/// One point of the A(n)/sqrt(n) profile. Ordering decisions only ever use
/// the exact ratio_sq = count^2 / n; `ratio` is for display and export.
struct DensitySample {
  Natural n;
  Natural count;
  Rational ratio_sq;
  double ratio = 0.0;
};

/// Throws std::invalid_argument for n < 1.
DensitySample sample_at(const Natural& n);

/// The all-twos element q_{u,l} = u*4^l + 2(4^l - 1)/3 of T_l, which carries
/// the largest density among elements sharing (u, l).
struct QPoint {
  unsigned u = 1;
  std::size_t level = 0;
  Natural value;
  /// A(value) = (u + 4) * 2^l - 4.
  Natural count;
};

/// Evaluates both closed forms and cross-checks the count against
/// count_leq(); throws std::invalid_argument for u outside {1..4} and
/// std::logic_error if the two counts ever disagree.
QPoint q_point(unsigned u, std::size_t level);

/// lim_{l -> inf} A(q_{u,l})^2 / q_{u,l} = 3(u+4)^2 / (3u+2). Throws
/// std::invalid_argument for u outside {1..4}.
Rational limit_ratio_sq(unsigned u);

/// Orders A(n1)/sqrt(n1) against A(n2)/sqrt(n2) by comparing
/// A(n1)^2 * n2 with A(n2)^2 * n1. Throws std::invalid_argument if either
/// argument is < 1.
std::strong_ordering compare_ratio(const Natural& n1, const Natural& n2);

/// Same comparison with the counts already known.
std::strong_ordering compare_counted(const Natural& count1, const Natural& n1,
                                     const Natural& count2, const Natural& n2);

struct DensityProfile {
  /// q_{u,l} for l = 0..max_level, u = 1..4, in increasing n.
  std::vector<DensitySample> samples;
  /// running_argmax[i]: index of the best sample among samples[0..i].
  std::vector<std::size_t> running_argmax;

  const DensitySample& best() const { return samples[running_argmax.back()]; }
};

DensityProfile profile(std::size_t max_level);

/// The n <= bound maximising A(n)/sqrt(n), smallest on ties. The ratio
/// strictly decreases between consecutive members of A, so only members are
/// scanned. Throws std::invalid_argument for bound < 1.
Natural argmax_upto(const Natural& bound);

/// 15 * q_{1,l} - A(q_{1,l})^2, exact. Positive for every l, and the float
/// ratio approaches sqrt(15) as this gap shrinks relative to q_{1,l}.
Natural convergence_gap(std::size_t level);

/// Header `n,count,ratio`, ratio with 12 significant digits.
void write_csv(std::ostream& out, std::span<const DensitySample> samples);

/// One object per line with keys n, count, ratio_num, ratio_den, ratio.
/// Integers are written as plain decimal literals of any length.
void write_jsonl(std::ostream& out, std::span<const DensitySample> samples);

}  // namespace apcover
