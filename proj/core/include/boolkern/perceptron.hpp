#pragma once

// Kernel Perceptron in dual form.
//
// The hypothesis is never materialized: it is the signed list of examples on
// which a mistake was made, and
//
//   score(x) = rate * sum_{(v, L) in mistakes} L * K(v, x) + bias
//
// with prediction +1 iff score(x) >= threshold. A promotion (false negative)
// adds rate*phi(x) and, with use_bias, rate to the bias; a demotion mirrors it.

#include <cstddef>
#include <span>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/kernels.hpp"

namespace boolkern::perceptron {

struct PerceptronConfig {
  kernels::KernelKind kind = kernels::KernelKind::monotone();
  ExactRat threshold = 0;
  ExactRat learning_rate = 1;
  bool use_bias = false;

  void validate() const;  // learning_rate > 0
};

struct MistakeRecord {
  BitVec x;
  Label label = Label::Negative;
  std::size_t step = 0;  // 1-based position in the stream

  bool operator==(const MistakeRecord&) const = default;
};

struct StepOutcome {
  Label prediction = Label::Negative;
  bool mistake = false;
  ExactRat score;
};

class DualPerceptronState {
 public:
  explicit DualPerceptronState(PerceptronConfig config = {});

  const PerceptronConfig& config() const { return config_; }
  std::span<const MistakeRecord> mistakes() const { return mistakes_; }
  const ExactRat& bias() const { return bias_; }
  std::size_t steps_seen() const { return steps_; }
  // Example length fixed by the first example seen; 0 before that.
  std::size_t length() const { return length_; }

  ExactRat score(const BitVec& x) const;
  Label predict(const BitVec& x) const;

  // In-place update used by run loops; process() is the value-returning form.
  StepOutcome observe(const LabeledExample& example);

 private:
  void check_length(const BitVec& x) const;

  PerceptronConfig config_;
  std::vector<MistakeRecord> mistakes_;
  ExactRat bias_ = 0;
  std::size_t steps_ = 0;
  std::size_t length_ = 0;
};

struct ProcessResult {
  DualPerceptronState state;
  Label predicted;
  bool mistake;
};

ProcessResult process(const DualPerceptronState& state, const LabeledExample& example);

struct TraceStep {
  Label label = Label::Negative;
  Label prediction = Label::Negative;
  bool mistake = false;
  ExactRat score;

  bool operator==(const TraceStep&) const = default;
};

struct Trace {
  std::vector<TraceStep> steps;
  DualPerceptronState final_state;
  std::size_t mistake_count = 0;
};

Trace run(const PerceptronConfig& config, std::span<const LabeledExample> stream);

// Primal oracle over an explicitly enumerated feature space.
struct ExplicitTrace {
  std::vector<TraceStep> steps;
  std::size_t mistake_count = 0;
  kernels::FeatureSpace space;
  std::vector<ExactRat> weights;  // one per feature of `space`
  ExactRat bias;
};

// Requires a stream of uniform length n within the expansion guard; an empty
// stream needs `n` passed explicitly.
ExplicitTrace explicit_run(const PerceptronConfig& config, std::span<const LabeledExample> stream,
                           std::size_t n);
ExplicitTrace explicit_run(const PerceptronConfig& config, std::span<const LabeledExample> stream);

// Primal weights implied by a dual state: w_T = rate * sum L * [T true in v].
std::vector<ExactRat> expand_weights(const DualPerceptronState& state,
                                     const kernels::FeatureSpace& space);

// R^2 |u|^2 / xi^2; all three arguments strictly positive.
ExactRat perceptron_bound(const ExactRat& radius, const ExactRat& u_norm, const ExactRat& margin);

}  // namespace boolkern::perceptron
