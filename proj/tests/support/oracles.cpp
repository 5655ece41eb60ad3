#include "oracles.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

namespace {

using boolkern::kernels::Family;

// Every literal assignment over n variables: 0 absent, 1 positive, 2 negated.
std::vector<std::vector<int>> all_conjunctions(const boolkern::kernels::KernelKind& kind,
                                               std::size_t n) {
  const bool monotone = kind.is_monotone();
  const int choices = monotone ? 2 : 3;
  std::vector<std::vector<int>> out;
  std::vector<int> lits(n, 0);
  while (true) {
    std::size_t size = 0;
    for (int l : lits) size += l != 0;
    if (!kind.is_bounded() || size <= kind.k) out.push_back(lits);
    std::size_t i = 0;
    while (i < n && lits[i] == choices - 1) lits[i++] = 0;
    if (i == n) break;
    ++lits[i];
  }
  return out;
}

bool satisfies(const std::vector<int>& lits, const BitVec& x) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (lits[i] == 1 && !x.get(i + 1)) return false;
    if (lits[i] == 2 && x.get(i + 1)) return false;
  }
  return true;
}

}  // namespace

ExactInt brute_kernel(const boolkern::kernels::KernelKind& kind, const BitVec& x, const BitVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("length");
  ExactInt count = 0;
  for (const auto& c : all_conjunctions(kind, x.size())) {
    if (satisfies(c, x) && satisfies(c, y)) ++count;
  }
  return count;
}

ExactInt pascal(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<ExactInt> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<ExactInt> next(r + 1, 1);
    for (std::size_t j = 1; j < r; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

ExactRat iterated_pow(const ExactRat& base, std::int64_t e) {
  ExactRat out = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
    if (e < 0) {
      out /= base;
    } else {
      out *= base;
    }
  }
  return out;
}

ExactInt brute_count(std::size_t vars, const std::vector<std::vector<std::size_t>>& clauses) {
  ExactInt count = 0;
  std::vector<bool> a(vars, false);
  while (true) {
    bool all = true;
    for (const auto& clause : clauses) {
      bool any = false;
      for (std::size_t v : clause) any = any || a[v - 1];
      all = all && any;
    }
    if (all) ++count;
    std::size_t i = 0;
    while (i < vars && a[i]) a[i++] = false;
    if (i == vars) break;
    a[i] = true;
  }
  return count;
}

BitVec random_bits(boolkern::Rng& rng, std::size_t n) {
  BitVec x(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (rng.below(2)) x.set(i);
  }
  return x;
}

std::vector<LabeledExample> random_stream(boolkern::Rng& rng, std::size_t n, std::size_t steps) {
  std::vector<LabeledExample> out;
  for (std::size_t s = 0; s < steps; ++s) {
    out.push_back({random_bits(rng, n),
                   rng.below(2) ? boolkern::Label::Positive : boolkern::Label::Negative});
  }
  return out;
}

PrimalPerceptron::PrimalPerceptron(const boolkern::kernels::KernelKind& kind, std::size_t n,
                                   ExactRat threshold, ExactRat rate, bool use_bias)
    : n_(n),
      conjunctions_(all_conjunctions(kind, n)),
      weights_(conjunctions_.size(), ExactRat(0)),
      threshold_(std::move(threshold)),
      rate_(std::move(rate)),
      use_bias_(use_bias) {}

std::vector<bool> PrimalPerceptron::features(const BitVec& x) const {
  std::vector<bool> out;
  out.reserve(conjunctions_.size());
  for (const auto& c : conjunctions_) out.push_back(satisfies(c, x));
  return out;
}

std::pair<bool, bool> PrimalPerceptron::observe(const LabeledExample& e) {
  if (e.x.size() != n_) throw std::invalid_argument("length");
  const auto phi = features(e.x);
  ExactRat score = bias_;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i]) score += weights_[i];
  }
  const bool positive = score >= threshold_;
  const bool mistake = positive != (e.label == boolkern::Label::Positive);
  if (mistake) {
    const ExactRat delta = e.label == boolkern::Label::Positive ? rate_ : ExactRat(-rate_);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i]) weights_[i] += delta;
    }
    if (use_bias_) bias_ += delta;
  }
  return {positive, mistake};
}

MonomialWinnow::MonomialWinnow(std::size_t m, ExactRat alpha, ExactRat theta)
    : m_(m), alpha_(std::move(alpha)), theta_(std::move(theta)), exponents_(std::size_t{1} << m, 0) {}

std::uint32_t MonomialWinnow::mask_of(const BitVec& x) const {
  if (x.size() != m_) throw std::invalid_argument("length");
  std::uint32_t mask = 0;
  for (std::size_t i = 1; i <= m_; ++i) {
    if (x.get(i)) mask |= 1u << (i - 1);
  }
  return mask;
}

ExactRat MonomialWinnow::score(const BitVec& x) const {
  const std::uint32_t s = mask_of(x);
  std::map<std::int64_t, long> counts;
  for (std::uint32_t t = 1; t < exponents_.size(); ++t) {
    if ((t & s) == t) ++counts[exponents_[t]];
  }
  ExactRat total = 0;
  for (const auto& [e, c] : counts) total += iterated_pow(alpha_, e) * c;
  return total;
}

MonomialWinnow::Step MonomialWinnow::observe(const LabeledExample& e) {
  const ExactRat sc = score(e.x);
  const bool positive = sc >= theta_;
  const bool mistake = positive != (e.label == boolkern::Label::Positive);
  if (mistake) {
    const std::uint32_t s = mask_of(e.x);
    for (std::uint32_t t = 1; t < exponents_.size(); ++t) {
      if ((t & s) == t) exponents_[t] += positive ? -1 : 1;
    }
  }
  return {positive, mistake, sc};
}

}  // namespace oracle
