#include "boolkern/winnow.hpp"

#include "boolkern/errors.hpp"

namespace boolkern::winnow {

void WinnowConfig::validate() const {
  if (alpha <= 1) throw InvalidArgument("winnow: alpha must exceed 1, got " + to_string(alpha));
  if (theta <= 0) throw InvalidArgument("winnow: theta must be positive, got " + to_string(theta));
}

ExplicitWinnowState::ExplicitWinnowState(WinnowConfig config, std::size_t features)
    : config_(std::move(config)), exponents_(features, 0) {
  config_.validate();
}

void ExplicitWinnowState::check_length(const BitVec& x) const {
  if (x.size() != exponents_.size()) {
    throw LengthMismatch("winnow: example length " + std::to_string(x.size()) + " but " +
                         std::to_string(exponents_.size()) + " features");
  }
}

ExactRat ExplicitWinnowState::weight(std::size_t one_based) const {
  if (one_based == 0 || one_based > exponents_.size()) {
    throw InvalidArgument("winnow: feature index out of range");
  }
  return ipow(config_.alpha, exponents_[one_based - 1]);
}

ExactRat ExplicitWinnowState::score(const BitVec& x) const {
  check_length(x);
  PowerSum sum;
  for (std::size_t i : x.support()) sum.add(exponents_[i - 1]);
  return sum.value(config_.alpha);
}

Label ExplicitWinnowState::predict(const BitVec& x) const {
  return score(x) >= config_.theta ? Label::Positive : Label::Negative;
}

StepOutcome ExplicitWinnowState::observe(const LabeledExample& example) {
  StepOutcome out;
  out.score = score(example.x);
  out.prediction = out.score >= config_.theta ? Label::Positive : Label::Negative;
  out.mistake = out.prediction != example.label;
  if (out.mistake) {
    const std::int64_t delta = example.label == Label::Positive ? 1 : -1;
    for (std::size_t i : example.x.support()) exponents_[i - 1] += delta;
  }
  return out;
}

ProcessResult explicit_process(const ExplicitWinnowState& state, const LabeledExample& example) {
  ExplicitWinnowState next = state;
  const StepOutcome out = next.observe(example);
  if (!out.mistake) return {state, out.prediction, false};
  return {std::move(next), out.prediction, true};
}

Trace explicit_run(const WinnowConfig& config, std::size_t features,
                   std::span<const LabeledExample> stream) {
  ExplicitWinnowState state(config, features);
  Trace trace;
  trace.steps.reserve(stream.size());
  for (const auto& e : stream) {
    trace.steps.push_back(state.observe(e));
    if (trace.steps.back().mistake) ++trace.mistake_count;
  }
  return trace;
}

ExactRat winnow_bound(const ExactRat& alpha, const ExactRat& theta, const ExactInt& features,
                      std::size_t k) {
  if (alpha <= 1) throw InvalidArgument("winnow_bound: alpha must exceed 1");
  if (theta < 1) throw InvalidArgument("winnow_bound: theta must be at least 1");
  if (features < 0) throw InvalidArgument("winnow_bound: N must be nonnegative");
  const ExactRat first = (alpha / (alpha - 1)) * (ExactRat(features) / theta);
  const std::int64_t log_term = ceil_log(alpha, theta);
  const ExactRat second = ExactRat(static_cast<long>(k)) * (alpha + 1) *
                          ExactRat(1 + static_cast<long>(log_term));
  return first + second;
}

}  // namespace boolkern::winnow
