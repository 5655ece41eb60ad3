#include <string>

#include "boolkern/adversarial.hpp"
#include "boolkern/errors.hpp"
#include "boolkern/rng.hpp"

namespace boolkern::adversarial {

void HardSetParams::validate() const {
  if (weight > n) throw InvalidArgument("hard set: weight exceeds n");
  if (intersection_cap >= weight) throw InvalidArgument("hard set: cap must be below weight");
  if (count < 1) throw InvalidArgument("hard set: count must be at least 1");
}

void HardSet::verify() const {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != params.n || weight(vectors[i]) != params.weight) {
      throw AssertionFailure("hard set vector " + std::to_string(i + 1) +
                             " does not have weight " + std::to_string(params.weight));
    }
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (intersect_count(vectors[i], vectors[j]) > params.intersection_cap) {
        throw AssertionFailure("hard set vectors " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " overlap beyond the cap");
      }
    }
  }
}

HardSet gen_hard_set(const HardSetParams& params) {
  params.validate();
  Rng rng(params.seed, streams::kHardSet);
  HardSet hs{params, {}};
  hs.vectors.reserve(params.count);

  const std::uint64_t num = 2 * params.weight;
  const std::uint64_t den = params.n;
  std::size_t attempts = 0;
  while (hs.vectors.size() < params.count) {
    if (attempts++ >= params.max_attempts) {
      throw GenerationFailed("hard set: placed " + std::to_string(hs.vectors.size()) + " of " +
                             std::to_string(params.count) + " vectors in " +
                             std::to_string(params.max_attempts) + " attempts");
    }
    BitVec candidate(params.n);
    std::size_t ones = 0;
    for (std::size_t i = 1; i <= params.n; ++i) {
      if (num >= den || rng.bernoulli(num, den)) {
        candidate.set(i);
        ++ones;
      }
    }
    if (ones < params.weight) continue;
    for (std::size_t i = params.n; ones > params.weight; --i) {
      if (candidate.get(i)) {
        candidate.set(i, false);
        --ones;
      }
    }
    bool fits = true;
    for (const auto& v : hs.vectors) {
      if (intersect_count(v, candidate) > params.intersection_cap) {
        fits = false;
        break;
      }
    }
    if (fits) hs.vectors.push_back(std::move(candidate));
  }
  hs.verify();
  return hs;
}

ExactInt mistake_forcing_margin(std::size_t weight, std::size_t cap, std::size_t count) {
  const ExactInt low = binomial_prefix_sum(weight, cap);
  const ExactInt all = ipow(ExactInt(2), weight);
  const ExactInt t(static_cast<unsigned long>(count));
  return (all - low) - t * low - (t + 1);
}

}  // namespace boolkern::adversarial
