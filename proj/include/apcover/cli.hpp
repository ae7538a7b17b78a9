#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "apcover/natural.hpp"

namespace apcover {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Empirical look at whether a Stanley sequence of order k+1 is AP_k-covering.
struct Problem1Report {
  unsigned k = 3;
  std::vector<Natural> seed;
  Natural upto;
  /// Stanley sequence of order k+1 from the seed, terms <= upto.
  std::vector<Natural> stanley_terms;
  /// Every n <= upto with no k-term progression ending at n from smaller terms.
  std::vector<Natural> uncovered;
};

/// Throws std::invalid_argument if k < 3 or the seed is not a valid Stanley
/// seed of order k+1.
Problem1Report explore_problem1(unsigned k, std::vector<Natural> seed, const Natural& upto);

/// Entry point of the `apcover` tool. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace apcover
