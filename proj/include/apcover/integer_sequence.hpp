#pragma once

#include <optional>
#include <vector>

#include "apcover/natural.hpp"

namespace apcover {

/// A strictly increasing sequence of naturals. contains() must agree with
/// upto().
class IntegerSequence {
 public:
  virtual ~IntegerSequence() = default;

  virtual bool contains(const Natural& n) const = 0;

  /// Largest member strictly below n.
  virtual std::optional<Natural> predecessor(const Natural& n) const = 0;

  /// All members <= bound, ascending.
  virtual std::vector<Natural> upto(const Natural& bound) const = 0;
};

/// The sequence A, backed by decompose() and rank iteration.
class CoveringSequence final : public IntegerSequence {
 public:
  bool contains(const Natural& n) const override;
  std::optional<Natural> predecessor(const Natural& n) const override;
  std::vector<Natural> upto(const Natural& bound) const override;
};

/// {offset, offset + step, offset + 2*step, ...}; step 1 from 0 gives all
/// naturals, step 2 from 0 the even numbers.
class ArithmeticSequence final : public IntegerSequence {
 public:
  /// Throws std::invalid_argument if step < 1.
  ArithmeticSequence(Natural offset, Natural step);

  bool contains(const Natural& n) const override;
  std::optional<Natural> predecessor(const Natural& n) const override;
  std::vector<Natural> upto(const Natural& bound) const override;

 private:
  Natural offset_;
  Natural step_;
};

/// An explicit finite set.
class FiniteSequence final : public IntegerSequence {
 public:
  /// Sorts and deduplicates; throws std::invalid_argument on negative terms.
  explicit FiniteSequence(std::vector<Natural> terms);

  bool contains(const Natural& n) const override;
  std::optional<Natural> predecessor(const Natural& n) const override;
  std::vector<Natural> upto(const Natural& bound) const override;

  const std::vector<Natural>& terms() const { return terms_; }

 private:
  std::vector<Natural> terms_;
};

}  // namespace apcover
