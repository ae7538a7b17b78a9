#include "apcover/witness.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

#include "apcover/base4.hpp"
#include "apcover/covering_sequence.hpp"

namespace apcover {

namespace bmp = boost::multiprecision;

namespace {

void require_covered_range(const Natural& n) {
  if (n < kMinCoveredN) {
    throw std::invalid_argument("the covering construction needs n >= 32, got " + to_decimal(n));
  }
}

// Adds v * 4^i for v in {1, 2} (v occupies a single bit).
void set_digit(Natural& x, std::size_t i, unsigned v) {
  bmp::bit_set(x, v == 1 ? 2 * i : 2 * i + 1);
}

bool in_adjacent_levels(const Natural& x, std::size_t level) {
  const auto e = decompose(x);
  return e && (e->level == level || e->level + 1 == level);
}

}  // namespace

std::size_t level_for(const Natural& n) {
  require_covered_range(n);
  // 2^{2l+1} <= n < 2^{2l+3}.
  return (bmp::msb(n) - 1) / 2;
}

Witness find_witness(const Natural& n) {
  const std::size_t l = level_for(n);
  const unsigned m = static_cast<unsigned>(n >> (2 * l));
  const LeadPair lead = kCaseTables.lead[m];

  Witness w;
  w.n = n;
  w.level = l;
  w.m = m;
  w.a = Natural(lead.u2) << (2 * l);
  w.b = Natural(lead.u1) << (2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    const DigitPair d = kCaseTables.digit[digit_at(n, i).value()];
    set_digit(w.a, i, d.v2);
    set_digit(w.b, i, d.v1);
  }
  return w;
}

bool validate(const Witness& w) {
  if (!(1 <= w.a && w.a < w.b && w.b < w.n)) return false;
  if (w.a + w.n != 2 * w.b) return false;
  return in_adjacent_levels(w.a, w.level) && in_adjacent_levels(w.b, w.level);
}

SweepSummary verify_covering(const Natural& from, const Natural& to, unsigned jobs) {
  require_covered_range(from);
  if (from > to) throw std::invalid_argument("verify_covering needs from <= to");
  if (jobs == 0) throw std::invalid_argument("verify_covering needs at least one job");

  const Natural total = to - from + 1;
  const Natural chunk = (total + jobs - 1) / jobs;
  std::vector<SweepSummary> parts(jobs);

  auto sweep = [&](unsigned job) {
    SweepSummary& part = parts[job];
    const Natural lo = from + chunk * job;
    Natural hi = lo + chunk - 1;
    if (hi > to) hi = to;
    for (Natural n = lo; n <= hi; ++n) {
      ++part.checked;
      if (!validate(find_witness(n))) {
        ++part.failures;
        if (!part.first_failure) part.first_failure = n;
      }
    }
  };

  if (jobs == 1) {
    sweep(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(sweep, j);
  }

  SweepSummary merged;
  for (const auto& part : parts) {
    merged.checked += part.checked;
    merged.failures += part.failures;
    if (part.first_failure && (!merged.first_failure || *part.first_failure < *merged.first_failure)) {
      merged.first_failure = part.first_failure;
    }
  }
  return merged;
}

}  // namespace apcover
