#pragma once

// Reference implementations used only by tests. Each one is written the slow,
// obvious way and shares no code path with the library routine it checks.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/kernels.hpp"
#include "boolkern/rng.hpp"

namespace oracle {

using boolkern::BitVec;
using boolkern::ExactInt;
using boolkern::ExactRat;
using boolkern::LabeledExample;

// Counts conjunctions of the given kind true in both x and y by listing every
// conjunction as a per-variable literal choice.
ExactInt brute_kernel(const boolkern::kernels::KernelKind& kind, const BitVec& x, const BitVec& y);

// C(n, k) from Pascal's triangle.
ExactInt pascal(std::size_t n, std::size_t k);

// base^e by |e| multiplications (division for e < 0).
ExactRat iterated_pow(const ExactRat& base, std::int64_t e);

// Assignments of `vars` variables satisfying every clause; each clause is a
// disjunction of positive literals, 1-based.
ExactInt brute_count(std::size_t vars, const std::vector<std::vector<std::size_t>>& clauses);

BitVec random_bits(boolkern::Rng& rng, std::size_t n);
std::vector<LabeledExample> random_stream(boolkern::Rng& rng, std::size_t n, std::size_t steps);

// Perceptron kept in primal form over an explicitly listed conjunction set.
class PrimalPerceptron {
 public:
  PrimalPerceptron(const boolkern::kernels::KernelKind& kind, std::size_t n, ExactRat threshold,
                   ExactRat rate, bool use_bias);

  // Returns (prediction is positive, mistake).
  std::pair<bool, bool> observe(const LabeledExample& e);

 private:
  std::vector<bool> features(const BitVec& x) const;

  std::size_t n_;
  // For each conjunction: per-variable literal 0 absent, 1 positive, 2 negated.
  std::vector<std::vector<int>> conjunctions_;
  std::vector<ExactRat> weights_;
  ExactRat bias_ = 0;
  ExactRat threshold_;
  ExactRat rate_;
  bool use_bias_;
};

// Winnow over all 2^m - 1 nonempty monomials, weights indexed by subset mask.
class MonomialWinnow {
 public:
  MonomialWinnow(std::size_t m, ExactRat alpha, ExactRat theta);

  struct Step {
    bool positive;
    bool mistake;
    ExactRat score;
  };
  Step observe(const LabeledExample& e);
  ExactRat score(const BitVec& x) const;
  std::int64_t exponent(std::uint32_t mask) const { return exponents_[mask]; }

 private:
  std::uint32_t mask_of(const BitVec& x) const;

  std::size_t m_;
  ExactRat alpha_;
  ExactRat theta_;
  std::vector<std::int64_t> exponents_;
};

}  // namespace oracle
