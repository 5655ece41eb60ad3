#pragma once

// Winnow(alpha, theta) over an explicit feature vector.
//
// Weights are stored as integer exponents: feature i weighs alpha^e_i and
// starts at e_i = 0. Prediction is +1 iff sum_{x_i = 1} alpha^e_i >= theta; a
// false negative increments the exponents of active features, a false
// positive decrements them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"

namespace boolkern::winnow {

struct WinnowConfig {
  ExactRat alpha = 2;
  ExactRat theta = 1;

  void validate() const;  // alpha > 1, theta > 0
};

struct StepOutcome {
  Label prediction = Label::Negative;
  bool mistake = false;
  ExactRat score;

  bool operator==(const StepOutcome&) const = default;
};

class ExplicitWinnowState {
 public:
  ExplicitWinnowState(WinnowConfig config, std::size_t features);

  const WinnowConfig& config() const { return config_; }
  std::size_t features() const { return exponents_.size(); }
  std::span<const std::int64_t> exponents() const { return exponents_; }
  ExactRat weight(std::size_t one_based) const;

  ExactRat score(const BitVec& x) const;
  Label predict(const BitVec& x) const;
  StepOutcome observe(const LabeledExample& example);

 private:
  void check_length(const BitVec& x) const;

  WinnowConfig config_;
  std::vector<std::int64_t> exponents_;
};

struct ProcessResult {
  ExplicitWinnowState state;
  Label predicted;
  bool mistake;
};

ProcessResult explicit_process(const ExplicitWinnowState& state, const LabeledExample& example);

struct Trace {
  std::vector<StepOutcome> steps;
  std::size_t mistake_count = 0;
};

Trace explicit_run(const WinnowConfig& config, std::size_t features,
                   std::span<const LabeledExample> stream);

// alpha/(alpha-1) * N/theta + k (alpha+1) (1 + ceil(log_alpha theta)).
// Requires alpha > 1 and theta >= 1. Rounding the logarithm up keeps this an
// upper bound; it can exceed the real-valued bound by less than k (alpha+1).
ExactRat winnow_bound(const ExactRat& alpha, const ExactRat& theta, const ExactInt& features,
                      std::size_t k);

}  // namespace boolkern::winnow
