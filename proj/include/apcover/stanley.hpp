#pragma once

#include <cstddef>
#include <vector>

#include "apcover/natural.hpp"

namespace apcover {

/// A nonempty, strictly increasing, k-AP-free starting set.
class StanleySeed {
 public:
  /// Sorts the terms; throws std::invalid_argument if the seed is empty, has
  /// duplicates or negative terms, k < 3, or the seed already contains a
  /// k-term progression.
  StanleySeed(std::vector<Natural> terms, unsigned k);

  const std::vector<Natural>& terms() const { return terms_; }
  unsigned order() const { return k_; }

 private:
  std::vector<Natural> terms_;
  unsigned k_;
};

/// Greedy generation state: everything produced so far, k-AP-free at every
/// step.
class StanleyStream {
 public:
  explicit StanleyStream(const StanleySeed& seed);

  const std::vector<Natural>& produced() const { return produced_; }
  unsigned order() const { return k_; }

  /// Appends and returns the next greedy term.
  const Natural& advance();

 private:
  std::vector<Natural> produced_;
  unsigned k_;
};

/// Smallest a > produced.back() such that produced + {a} has no k-term
/// progression. Only progressions ending at a are checked, so `produced` must
/// already be k-AP-free and strictly increasing.
Natural greedy_next(const std::vector<Natural>& produced, unsigned k);

/// The first `count` terms of the Stanley sequence of order seed.order(),
/// seed first. Throws std::invalid_argument if count < seed size.
std::vector<Natural> generate(const StanleySeed& seed, std::size_t count);

/// All terms <= bound, seed terms included.
std::vector<Natural> generate_upto(const StanleySeed& seed, const Natural& bound);

}  // namespace apcover
