#include "apcover/stanley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "apcover/oracle.hpp"

namespace apcover {

StanleySeed::StanleySeed(std::vector<Natural> terms, unsigned k) : terms_(std::move(terms)), k_(k) {
  if (k_ < 3) throw std::invalid_argument("Stanley order must be >= 3");
  if (terms_.empty()) throw std::invalid_argument("Stanley seed must be nonempty");
  for (const auto& t : terms_) require_nonnegative(t, "seed term");
  std::sort(terms_.begin(), terms_.end());
  if (std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end()) {
    throw std::invalid_argument("Stanley seed has repeated terms");
  }
  if (has_k_ap(terms_, k_)) {
    throw std::invalid_argument("Stanley seed contains a " + std::to_string(k_) +
                                "-term arithmetic progression");
  }
}

StanleyStream::StanleyStream(const StanleySeed& seed) : produced_(seed.terms()), k_(seed.order()) {}

const Natural& StanleyStream::advance() {
  produced_.push_back(greedy_next(produced_, k_));
  return produced_.back();
}

Natural greedy_next(const std::vector<Natural>& produced, unsigned k) {
  if (produced.empty()) throw std::invalid_argument("greedy_next needs a nonempty prefix");
  Natural candidate = produced.back() + 1;
  while (completes_k_ap(produced, candidate, k)) ++candidate;
  return candidate;
}

std::vector<Natural> generate(const StanleySeed& seed, std::size_t count) {
  if (count < seed.terms().size()) {
    throw std::invalid_argument("count must be at least the seed size");
  }
  StanleyStream stream(seed);
  while (stream.produced().size() < count) stream.advance();
  return stream.produced();
}

std::vector<Natural> generate_upto(const StanleySeed& seed, const Natural& bound) {
  StanleyStream stream(seed);
  while (stream.produced().back() <= bound) stream.advance();
  std::vector<Natural> out = stream.produced();
  out.erase(std::upper_bound(out.begin(), out.end(), bound), out.end());
  return out;
}

}  // namespace apcover
