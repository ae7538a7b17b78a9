#include "apcover/density.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include "apcover/covering_sequence.hpp"

namespace apcover {

namespace {

void require_digit_u(unsigned u) {
  if (u < 1 || u > 4) throw std::invalid_argument("u must be in {1,2,3,4}, got " + std::to_string(u));
}

void require_positive(const Natural& n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

DensitySample make_sample(Natural n, Natural count) {
  DensitySample s;
  s.ratio_sq = Rational(count * count, n);
  s.ratio = std::sqrt(s.ratio_sq.convert_to<double>());
  s.n = std::move(n);
  s.count = std::move(count);
  return s;
}

std::string format_ratio(double r) {
  std::ostringstream os;
  os << std::setprecision(12) << r;
  return os.str();
}

}  // namespace

DensitySample sample_at(const Natural& n) {
  require_positive(n, "sample point");
  return make_sample(n, count_leq(n));
}

QPoint q_point(unsigned u, std::size_t level) {
  require_digit_u(u);
  const Natural p = pow4(level);
  QPoint q;
  q.u = u;
  q.level = level;
  q.value = u * p + 2 * ((p - 1) / 3);
  q.count = (u + 4) * pow2(level) - 4;
  if (count_leq(q.value) != q.count) {
    throw std::logic_error("q_point: closed-form count disagrees with count_leq at u=" +
                           std::to_string(u) + " l=" + std::to_string(level));
  }
  return q;
}

Rational limit_ratio_sq(unsigned u) {
  require_digit_u(u);
  const Natural top = 3 * Natural(u + 4) * (u + 4);
  return Rational(top, Natural(3 * u + 2));
}

std::strong_ordering compare_counted(const Natural& count1, const Natural& n1,
                                     const Natural& count2, const Natural& n2) {
  const Natural lhs = count1 * count1 * n2;
  const Natural rhs = count2 * count2 * n1;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_ratio(const Natural& n1, const Natural& n2) {
  require_positive(n1, "compare_ratio argument");
  require_positive(n2, "compare_ratio argument");
  return compare_counted(count_leq(n1), n1, count_leq(n2), n2);
}

DensityProfile profile(std::size_t max_level) {
  DensityProfile prof;
  prof.samples.reserve(4 * (max_level + 1));
  prof.running_argmax.reserve(4 * (max_level + 1));
  for (std::size_t l = 0; l <= max_level; ++l) {
    for (unsigned u = 1; u <= 4; ++u) {
      QPoint q = q_point(u, l);
      prof.samples.push_back(make_sample(std::move(q.value), std::move(q.count)));
      const std::size_t i = prof.samples.size() - 1;
      std::size_t best = i;
      if (i > 0) {
        const std::size_t prev = prof.running_argmax.back();
        const auto& a = prof.samples[prev];
        const auto& b = prof.samples[i];
        if (compare_counted(b.count, b.n, a.count, a.n) != std::strong_ordering::greater) best = prev;
      }
      prof.running_argmax.push_back(best);
    }
  }
  return prof;
}

Natural argmax_upto(const Natural& bound) {
  require_positive(bound, "argmax bound");
  Natural best_n = 1;
  Natural best_count = 1;
  Natural count = 0;
  for (const Natural& x : iter_range(1, bound)) {
    ++count;
    if (compare_counted(count, x, best_count, best_n) == std::strong_ordering::greater) {
      best_n = x;
      best_count = count;
    }
  }
  return best_n;
}

Natural convergence_gap(std::size_t level) {
  const QPoint q = q_point(1, level);
  return 15 * q.value - q.count * q.count;
}

void write_csv(std::ostream& out, std::span<const DensitySample> samples) {
  out << "n,count,ratio\n";
  for (const auto& s : samples) {
    out << to_decimal(s.n) << ',' << to_decimal(s.count) << ',' << format_ratio(s.ratio) << '\n';
  }
}

void write_jsonl(std::ostream& out, std::span<const DensitySample> samples) {
  for (const auto& s : samples) {
    out << "{\"n\":" << to_decimal(s.n) << ",\"count\":" << to_decimal(s.count)
        << ",\"ratio_num\":" << to_decimal(s.count * s.count) << ",\"ratio_den\":" << to_decimal(s.n)
        << ",\"ratio\":" << format_ratio(s.ratio) << "}\n";
  }
}

}  // namespace apcover
