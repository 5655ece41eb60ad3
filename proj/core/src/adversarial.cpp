#include <string>
#include <utility>
#include <vector>

#include "boolkern/adversarial.hpp"
#include "boolkern/errors.hpp"

namespace boolkern::adversarial {

std::vector<LabeledExample> build_mistake_sequence(const HardSet& hs) {
  std::vector<LabeledExample> seq;
  seq.reserve(hs.size() + 2);
  seq.push_back({BitVec::zeros(hs.n()), Label::Negative});
  seq.push_back({BitVec::ones(hs.n()), Label::Positive});
  for (const auto& v : hs.vectors) seq.push_back({v, Label::Negative});
  return seq;
}

namespace {

// Bits of `v` restricted to `support`, as a mask over support positions.
std::uint32_t restrict_mask(const BitVec& v, const std::vector<std::size_t>& support) {
  std::uint32_t mask = 0;
  for (std::size_t b = 0; b < support.size(); ++b) {
    if (v.get(support[b])) mask |= std::uint32_t{1} << b;
  }
  return mask;
}

}  // namespace

Certificate certificate(const perceptron::DualPerceptronState& state, const HardSet& hs,
                        std::size_t i) {
  if (state.config().kind.family != kernels::Family::MonotoneConjunctions) {
    throw InvalidArgument("certificate: requires the monotone kernel");
  }
  if (i < 1 || i > hs.size()) throw InvalidArgument("certificate: index out of range");
  const BitVec& xi = hs.vectors[i - 1];
  const auto support = xi.support();
  if (support.size() > kCertificateGuard) {
    throw GuardExceeded("certificate: |x^i| = " + std::to_string(support.size()) +
                        " exceeds guard " + std::to_string(kCertificateGuard));
  }

  std::vector<std::uint32_t> overlaps;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    if (j + 1 != i) overlaps.push_back(restrict_mask(hs.vectors[j], support));
  }
  std::vector<std::pair<std::uint32_t, int>> mistakes;
  for (const auto& rec : state.mistakes()) {
    mistakes.emplace_back(restrict_mask(rec.x, support), to_int(rec.label));
  }

  const ExactRat& rate = state.config().learning_rate;
  Certificate cert;
  ExactInt sum_a = 0;
  ExactInt sum_b = 0;
  const std::uint64_t total = std::uint64_t{1} << support.size();
  for (std::uint64_t t = 0; t < total; ++t) {
    const auto mask = static_cast<std::uint32_t>(t);
    long weight = 0;
    for (const auto& [m, label] : mistakes) {
      if ((mask & m) == mask) weight += label;
    }
    if (mask == 0) {
      cert.empty_weight = rate * weight;
      continue;
    }
    bool shared = false;
    for (std::uint32_t o : overlaps) {
      if ((mask & o) == mask) {
        shared = true;
        break;
      }
    }
    if (shared) {
      sum_a += weight;
      ++cert.a_count;
    } else {
      sum_b += weight;
      ++cert.b_count;
    }
  }
  cert.sum_a = rate * ExactRat(sum_a);
  cert.sum_b = rate * ExactRat(sum_b);
  cert.bias = state.bias();
  cert.score = state.score(xi);
  return cert;
}

bool within_standard_regime(const ExactRat& theta, std::size_t n) {
  if (sgn(theta) < 0) return false;
  return ipow(theta, 1000) <= ExactRat(ipow(ExactInt(2), 47 * static_cast<std::uint64_t>(n)));
}

ThresholdCase threshold_case_sequence(const ExactRat& theta, std::size_t n, const HardSet& hs) {
  ThresholdCase out;
  if (sgn(theta) < 0) {
    out.regime = ThresholdRegime::Negative;
    out.target = "x1 & ... & xn";
    out.repetitions = to_int64(floor(-theta)) + 1;
    for (std::size_t r = 0; r < out.repetitions; ++r) {
      out.sequence.push_back({BitVec::zeros(n), Label::Negative});
    }
    out.sequence.push_back({BitVec::ones(n), Label::Positive});
    for (const auto& v : hs.vectors) {
      if (v.size() != n) throw LengthMismatch("threshold case: hard set length differs from n");
      out.sequence.push_back({v, Label::Negative});
    }
    return out;
  }
  if (within_standard_regime(theta, n)) {
    out.regime = ThresholdRegime::Standard;
    out.target = "x1 & ... & xn";
    if (hs.n() != n) throw LengthMismatch("threshold case: hard set length differs from n");
    out.sequence = build_mistake_sequence(hs);
    return out;
  }
  out.regime = ThresholdRegime::Large;
  out.target = "x1 | ... | xn";
  const ExactInt reps = ceil(theta / 2) - 1;
  out.repetitions = sgn(reps) > 0 ? to_int64(reps) : 0;
  const std::vector<std::size_t> first{1};
  out.sequence.assign(out.repetitions, {BitVec::from_indices(n, first), Label::Positive});
  return out;
}

}  // namespace boolkern::adversarial
