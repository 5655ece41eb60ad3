#include "boolkern/lazy_winnow.hpp"

#include <map>

#include "boolkern/errors.hpp"
#include "boolkern/kernels.hpp"

namespace boolkern::winnow {

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (std::uint32_t v : m) {
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SparseMonomialWeights::SparseMonomialWeights(WinnowConfig config, std::size_t m,
                                             std::size_t support_guard)
    : config_(std::move(config)), m_(m), guard_(support_guard) {
  config_.validate();
  if (guard_ > 62) throw InvalidArgument("support guard above 62 is not representable");
}

std::vector<std::uint32_t> SparseMonomialWeights::checked_support(const BitVec& x) const {
  if (x.size() != m_) {
    throw LengthMismatch("lazy winnow over m=" + std::to_string(m_) + " given length " +
                         std::to_string(x.size()));
  }
  const auto support = x.support();
  if (support.size() > guard_) {
    throw GuardExceeded("example weight " + std::to_string(support.size()) +
                        " exceeds the support guard " + std::to_string(guard_));
  }
  return {support.begin(), support.end()};
}

std::int64_t SparseMonomialWeights::exponent(const Monomial& t) const {
  const auto it = exponents_.find(t);
  return it == exponents_.end() ? 0 : it->second;
}

ExactRat SparseMonomialWeights::score(const BitVec& x) const {
  PowerSum sum;
  visit_subsets(x, [&](const Monomial&, std::int64_t e, std::uint64_t) { sum.add(e); });
  return sum.value(config_.alpha);
}

Label SparseMonomialWeights::predict(const BitVec& x) const {
  return score(x) >= config_.theta ? Label::Positive : Label::Negative;
}

StepOutcome SparseMonomialWeights::observe(const LabeledExample& example) {
  StepOutcome out;
  out.score = score(example.x);
  out.prediction = out.score >= config_.theta ? Label::Positive : Label::Negative;
  out.mistake = out.prediction != example.label;
  if (!out.mistake) return out;

  const int delta = example.label == Label::Positive ? 1 : -1;
  const std::vector<std::uint32_t> support = checked_support(example.x);
  const std::size_t w = support.size();
  Monomial key;
  key.reserve(w);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << w); ++mask) {
    key.clear();
    for (std::size_t j = 0; j < w; ++j) {
      if ((mask >> j) & 1u) key.push_back(support[j]);
    }
    exponents_[key] += delta;
  }
  log_.push_back({example.x, delta});
  return out;
}

std::optional<Monomial> SparseMonomialWeights::audit() const {
  // Collapse repeated supports first; reduction runs repeat a few hundred
  // distinct supports tens of thousands of times.
  std::map<BitVec, std::int64_t> net;
  for (const auto& entry : log_) net[entry.support] += entry.direction;

  for (const auto& [t, stored] : exponents_) {
    std::int64_t expected = 0;
    for (const auto& [support, d] : net) {
      bool inside = true;
      for (std::uint32_t v : t) {
        if (!support.get(v)) {
          inside = false;
          break;
        }
      }
      if (inside) expected += d;
    }
    if (expected != stored) return t;
  }
  return std::nullopt;
}

LazyProcessResult lazy_process(const SparseMonomialWeights& state, const LabeledExample& example) {
  SparseMonomialWeights next = state;
  const StepOutcome out = next.observe(example);
  if (!out.mistake) return {state, out.prediction, false};
  return {std::move(next), out.prediction, true};
}

std::vector<Monomial> nonempty_monomial_order(std::size_t m) {
  const kernels::FeatureSpace space(kernels::KernelKind::monotone(), m);
  std::vector<Monomial> order;
  order.reserve(space.dimension() - 1);
  for (std::size_t idx = 1; idx < space.dimension(); ++idx) {
    const std::uint32_t mask = space.conjunction(idx).positive;
    Monomial t;
    for (std::uint32_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) t.push_back(i + 1);
    }
    order.push_back(std::move(t));
  }
  return order;
}

BitVec nonempty_monomial_features(const BitVec& x) {
  return nonempty_monomial_features(kernels::FeatureSpace(kernels::KernelKind::monotone(), x.size()),
                                    x);
}

BitVec nonempty_monomial_features(const kernels::FeatureSpace& space, const BitVec& x) {
  if (!(space.kind() == kernels::KernelKind::monotone())) {
    throw InvalidArgument("nonempty_monomial_features needs the monotone feature space");
  }
  BitVec out(space.dimension() - 1);
  for (std::size_t idx : space.active(x)) {
    if (idx != 0) out.set(idx);  // feature idx (0-based, 0 = empty) -> position idx
  }
  return out;
}

}  // namespace boolkern::winnow
