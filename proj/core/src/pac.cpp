#include <set>

#include "boolkern/adversarial.hpp"
#include "boolkern/errors.hpp"
#include "boolkern/rng.hpp"

namespace boolkern::adversarial {

PacDistribution::PacDistribution(HardSet hs)
    : hs_(std::move(hs)), zeros_(BitVec::zeros(hs_.n())), ones_(BitVec::ones(hs_.n())) {
  if (hs_.size() == 0) throw InvalidArgument("pac: hard set is empty");
}

const BitVec& PacDistribution::atom(std::size_t a) const {
  if (a == 0) return zeros_;
  if (a == 1) return ones_;
  if (a - 2 >= hs_.size()) throw InvalidArgument("pac: atom out of range");
  return hs_.vectors[a - 2];
}

ExactRat PacDistribution::probability(std::size_t a) const {
  if (a >= atoms()) throw InvalidArgument("pac: atom out of range");
  if (a < 2) return make_rat(1, 4);
  return make_rat(1, 2 * static_cast<long>(hs_.size()));
}

ExactRat PacDistribution::total_probability() const {
  ExactRat total = 0;
  for (std::size_t a = 0; a < atoms(); ++a) total += probability(a);
  return total;
}

std::vector<std::size_t> PacDistribution::sample_atoms(std::size_t count,
                                                       std::uint64_t seed) const {
  Rng rng(seed, streams::kPacSample);
  const std::uint64_t t = hs_.size();
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const std::uint64_t r = rng.below(4 * t);
    if (r < t) {
      out.push_back(0);
    } else if (r < 2 * t) {
      out.push_back(1);
    } else {
      out.push_back(2 + (r - 2 * t) / 2);
    }
  }
  return out;
}

std::vector<LabeledExample> pac_sample(const PacDistribution& d, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<LabeledExample> out;
  out.reserve(count);
  for (std::size_t a : d.sample_atoms(count, seed)) out.push_back({d.atom(a), d.label(a)});
  return out;
}

PacResult pac_experiment(const PacDistribution& d, std::size_t sample_size, std::uint64_t seed,
                         bool force_prefix) {
  std::vector<std::size_t> stream;
  if (force_prefix) {
    stream.push_back(0);
    stream.push_back(1);
  }
  const auto drawn = d.sample_atoms(sample_size, seed);
  stream.insert(stream.end(), drawn.begin(), drawn.end());

  perceptron::DualPerceptronState state(perceptron::PerceptronConfig{});
  std::set<std::size_t> seen;
  for (std::size_t a : stream) {
    state.observe({d.atom(a), d.label(a)});
    seen.insert(a);
  }

  PacResult result{state, 0, false, 0, true, {}};
  result.prefix_hit = stream.size() >= 2 && stream[0] == 0 && stream[1] == 1;
  for (std::size_t a = 0; a < d.atoms(); ++a) {
    const bool wrong = state.predict(d.atom(a)) != d.label(a);
    if (wrong) {
      result.error += d.probability(a);
      result.misclassified_atoms.push_back(a);
    }
    if (a >= 2) {
      if (seen.count(a)) {
        ++result.distinct_seen;
      } else if (!wrong) {
        result.unseen_all_misclassified = false;
      }
    }
  }
  return result;
}

}  // namespace boolkern::adversarial
