#pragma once

// Winnow over all 2^m - 1 nonempty monotone monomials of m variables,
// simulated lazily.
//
// A monomial T is true in x exactly when T is a subset of support(x), so both
// the prediction on x and the update after a mistake on x only involve the
// 2^|x| - 1 nonempty subsets of support(x). The simulator stores exponents
// only for monomials that some update has touched; an absent monomial has
// exponent 0 (weight 1). Cost per step is therefore exponential in the
// example's weight, not in m, which keeps long sequences over hundreds of
// variables exactly executable as long as every support stays small.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/kernels.hpp"
#include "boolkern/winnow.hpp"

namespace boolkern::winnow {

// Sorted 1-based variable indices; never empty inside the simulator.
using Monomial = std::vector<std::uint32_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct AuditEntry {
  BitVec support;
  int direction = 0;  // +1 promotion, -1 demotion
};

inline constexpr std::size_t kDefaultSupportGuard = 24;

class SparseMonomialWeights {
 public:
  using ExponentMap = std::unordered_map<Monomial, std::int64_t, MonomialHash>;

  SparseMonomialWeights(WinnowConfig config, std::size_t m,
                        std::size_t support_guard = kDefaultSupportGuard);

  const WinnowConfig& config() const { return config_; }
  std::size_t variables() const { return m_; }
  std::size_t support_guard() const { return guard_; }
  const ExponentMap& exponent_map() const { return exponents_; }
  std::span<const AuditEntry> audit_log() const { return log_; }

  std::int64_t exponent(const Monomial& t) const;
  ExactRat weight(const Monomial& t) const { return ipow(config_.alpha, exponent(t)); }

  // sum over nonempty T subset of support(x) of alpha^exponent(T).
  ExactRat score(const BitVec& x) const;
  Label predict(const BitVec& x) const;
  StepOutcome observe(const LabeledExample& example);

  // Calls fn(monomial, exponent, mask) for each nonempty T subset of
  // support(x); bit j of `mask` marks support(x)[j] as present in T.
  template <class Fn>
  void visit_subsets(const BitVec& x, Fn&& fn) const;

  // Recomputes every stored exponent from the audit log; returns the first
  // monomial whose stored value disagrees, if any.
  std::optional<Monomial> audit() const;

 private:
  std::vector<std::uint32_t> checked_support(const BitVec& x) const;

  WinnowConfig config_;
  std::size_t m_;
  std::size_t guard_;
  ExponentMap exponents_;
  std::vector<AuditEntry> log_;
};

struct LazyProcessResult {
  SparseMonomialWeights state;
  Label predicted;
  bool mistake;
};

// Value-returning form; copies the state, so prefer observe() in loops.
LazyProcessResult lazy_process(const SparseMonomialWeights& state, const LabeledExample& example);
inline ExactRat lazy_score(const SparseMonomialWeights& state, const BitVec& x) {
  return state.score(x);
}

// The nonempty-monomial expansion of x as a 0/1 vector of length 2^m - 1, in
// the monotone FeatureSpace order with the empty monomial dropped. Used to
// drive ExplicitWinnowState as an oracle for the lazy simulator.
BitVec nonempty_monomial_features(const BitVec& x);
// Same, reusing a monotone FeatureSpace over x.size() variables.
BitVec nonempty_monomial_features(const kernels::FeatureSpace& space, const BitVec& x);
// Monomial for feature index (1-based) of nonempty_monomial_features(.) over m vars.
std::vector<Monomial> nonempty_monomial_order(std::size_t m);

template <class Fn>
void SparseMonomialWeights::visit_subsets(const BitVec& x, Fn&& fn) const {
  const std::vector<std::uint32_t> support = checked_support(x);
  const std::size_t w = support.size();
  Monomial key;
  key.reserve(w);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << w); ++mask) {
    key.clear();
    for (std::size_t j = 0; j < w; ++j) {
      if ((mask >> j) & 1u) key.push_back(support[j]);
    }
    const auto it = exponents_.find(key);
    fn(static_cast<const Monomial&>(key), it == exponents_.end() ? std::int64_t{0} : it->second,
       mask);
  }
}

}  // namespace boolkern::winnow
