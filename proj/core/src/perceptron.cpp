#include "boolkern/perceptron.hpp"

#include "boolkern/errors.hpp"

namespace boolkern::perceptron {

namespace {

Label classify(const ExactRat& score, const ExactRat& threshold) {
  return score >= threshold ? Label::Positive : Label::Negative;
}

std::size_t uniform_length(std::span<const LabeledExample> stream) {
  if (stream.empty()) throw InvalidArgument("explicit_run: empty stream needs an explicit n");
  return stream.front().x.size();
}

}  // namespace

void PerceptronConfig::validate() const {
  if (learning_rate <= 0) {
    throw InvalidArgument("perceptron learning rate must be positive, got " +
                          to_string(learning_rate));
  }
}

DualPerceptronState::DualPerceptronState(PerceptronConfig config) : config_(std::move(config)) {
  config_.validate();
}

void DualPerceptronState::check_length(const BitVec& x) const {
  if (length_ != 0 && x.size() != length_) {
    throw LengthMismatch("perceptron: example length " + std::to_string(x.size()) +
                         " differs from " + std::to_string(length_));
  }
}

ExactRat DualPerceptronState::score(const BitVec& x) const {
  check_length(x);
  ExactInt total = 0;
  for (const auto& m : mistakes_) {
    const ExactInt k = kernels::kernel(config_.kind, m.x, x);
    if (m.label == Label::Positive) {
      total += k;
    } else {
      total -= k;
    }
  }
  return config_.learning_rate * ExactRat(total) + bias_;
}

Label DualPerceptronState::predict(const BitVec& x) const {
  return classify(score(x), config_.threshold);
}

StepOutcome DualPerceptronState::observe(const LabeledExample& example) {
  StepOutcome out;
  out.score = score(example.x);
  out.prediction = classify(out.score, config_.threshold);
  out.mistake = out.prediction != example.label;
  if (length_ == 0) length_ = example.x.size();
  ++steps_;
  if (out.mistake) {
    mistakes_.push_back({example.x, example.label, steps_});
    if (config_.use_bias) {
      if (example.label == Label::Positive) {
        bias_ += config_.learning_rate;
      } else {
        bias_ -= config_.learning_rate;
      }
    }
  }
  return out;
}

ProcessResult process(const DualPerceptronState& state, const LabeledExample& example) {
  DualPerceptronState next = state;
  const StepOutcome out = next.observe(example);
  if (!out.mistake) return {state, out.prediction, false};
  return {std::move(next), out.prediction, true};
}

Trace run(const PerceptronConfig& config, std::span<const LabeledExample> stream) {
  Trace trace{{}, DualPerceptronState(config), 0};
  trace.steps.reserve(stream.size());
  for (const auto& e : stream) {
    StepOutcome out = trace.final_state.observe(e);
    if (out.mistake) ++trace.mistake_count;
    trace.steps.push_back({e.label, out.prediction, out.mistake, std::move(out.score)});
  }
  return trace;
}

ExplicitTrace explicit_run(const PerceptronConfig& config, std::span<const LabeledExample> stream,
                           std::size_t n) {
  config.validate();
  ExplicitTrace trace{{}, 0, kernels::FeatureSpace(config.kind, n), {}, 0};
  trace.weights.assign(trace.space.dimension(), ExactRat(0));
  trace.steps.reserve(stream.size());

  for (const auto& e : stream) {
    const std::vector<std::size_t> active = trace.space.active(e.x);
    ExactRat score = trace.bias;
    for (std::size_t idx : active) score += trace.weights[idx];
    const Label prediction = classify(score, config.threshold);
    const bool mistake = prediction != e.label;
    if (mistake) {
      ++trace.mistake_count;
      const ExactRat delta =
          e.label == Label::Positive ? config.learning_rate : ExactRat(-config.learning_rate);
      for (std::size_t idx : active) trace.weights[idx] += delta;
      if (config.use_bias) trace.bias += delta;
    }
    trace.steps.push_back({e.label, prediction, mistake, std::move(score)});
  }
  return trace;
}

ExplicitTrace explicit_run(const PerceptronConfig& config, std::span<const LabeledExample> stream) {
  return explicit_run(config, stream, uniform_length(stream));
}

std::vector<ExactRat> expand_weights(const DualPerceptronState& state,
                                     const kernels::FeatureSpace& space) {
  std::vector<ExactRat> weights(space.dimension(), ExactRat(0));
  const ExactRat& rate = state.config().learning_rate;
  for (const auto& m : state.mistakes()) {
    const ExactRat delta = m.label == Label::Positive ? rate : ExactRat(-rate);
    for (std::size_t idx : space.active(m.x)) weights[idx] += delta;
  }
  return weights;
}

ExactRat perceptron_bound(const ExactRat& radius, const ExactRat& u_norm, const ExactRat& margin) {
  if (radius <= 0 || u_norm <= 0 || margin <= 0) {
    throw InvalidArgument("perceptron_bound: R, |u| and xi must all be positive");
  }
  return (radius * radius * u_norm * u_norm) / (margin * margin);
}

}  // namespace boolkern::perceptron
