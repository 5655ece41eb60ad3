#pragma once

// Mistake-forcing constructions against the monotone-monomial kernel
// Perceptron.
//
// The hard set is t vectors of weight exactly w whose pairwise overlaps are
// at most c. Fed after <0^n,-1> and <1^n,+1>, every hard-set vector is a
// negative example of x_1 x_2 ... x_n on which the Perceptron still predicts
// +1: its monomials of size > c are unique to it and still carry weight 1,
// and they outweigh everything the earlier demotions could have removed.
//
// At desk scale the guarantee is checked exactly rather than asymptotically:
//   sum_{r=c+1}^{w} C(w,r) - t * sum_{r=0}^{c} C(w,r) > t + 1.
// The calibrated preset (n, w, c, t) = (320, 16, 4, 25) satisfies it with
// 63019 - 25 * 2517 = 94 > 26.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/perceptron.hpp"

namespace boolkern::adversarial {

struct HardSetParams {
  std::size_t n = 320;
  std::size_t weight = 16;           // |x^i|
  std::size_t intersection_cap = 4;  // max |x^i & x^j|
  std::size_t count = 25;            // t
  std::uint64_t seed = 1;
  std::size_t max_attempts = 100000;

  void validate() const;  // weight <= n, cap < weight, count >= 1
};

struct HardSet {
  HardSetParams params;
  std::vector<BitVec> vectors;

  std::size_t n() const { return params.n; }
  std::size_t size() const { return vectors.size(); }
  // Throws AssertionFailure unless every weight is exact and every overlap is capped.
  void verify() const;
};

// Seeded generate-and-verify: each bit is 1 with probability 2w/n, candidates
// lighter than w are rejected, heavier ones are trimmed to w by clearing the
// highest-indexed 1 bits, and candidates overlapping an accepted vector by
// more than c are rejected. Throws GenerationFailed after max_attempts.
HardSet gen_hard_set(const HardSetParams& params);

// sum_{r=c+1}^{w} C(w,r) - t * sum_{r=0}^{c} C(w,r) - (t + 1); positive means
// every hard-set vector is provably a false positive.
ExactInt mistake_forcing_margin(std::size_t weight, std::size_t cap, std::size_t count);

// [<0^n,-1>, <1^n,+1>, <x^1,-1>, ..., <x^t,-1>]
std::vector<LabeledExample> build_mistake_sequence(const HardSet& hs);

struct Certificate {
  ExactRat sum_a;         // monomials of x^i shared with some other x^j (empty excluded)
  ExactRat sum_b;         // nonempty monomials of x^i unique to it
  ExactRat empty_weight;  // w_{empty}
  ExactRat bias;
  ExactRat score;         // the dual score, for cross-checking
  std::size_t a_count = 0;
  std::size_t b_count = 0;

  ExactRat decomposed() const { return sum_a + sum_b + empty_weight + bias; }
};

inline constexpr std::size_t kCertificateGuard = 24;

// Splits w^phi . phi(x^i) (i is 1-based) into its A_i and B_i parts by
// enumerating every monomial of x^i and evaluating its primal weight from the
// mistake list. The state must use the monotone kernel.
Certificate certificate(const perceptron::DualPerceptronState& state, const HardSet& hs,
                        std::size_t i);

enum class ThresholdRegime { Negative, Standard, Large };

struct ThresholdCase {
  ThresholdRegime regime = ThresholdRegime::Standard;
  std::string target;  // "x1 & ... & xn" or "x1 | ... | xn"
  std::vector<LabeledExample> sequence;
  std::size_t repetitions = 0;  // of 0^n (Negative) or of e_1 (Large)
};

// Whether theta <= 2^(0.047 n), decided exactly as theta^1000 <= 2^(47 n).
bool within_standard_regime(const ExactRat& theta, std::size_t n);

// Sequences for a fixed nonzero threshold (learning rate 1, no bias):
//   theta < 0: <0^n,-1> repeated until 0^n is classified negative, i.e.
//              floor(-theta) + 1 times under the ">=" prediction rule, then
//              <1^n,+1> and the hard set;
//   0 <= theta <= 2^(0.047 n): build_mistake_sequence;
//   larger theta: target x1 | ... | xn with ceil(theta/2) - 1 copies of <e_1,+1>.
// `hs` may be empty when only the large-threshold case is needed.
ThresholdCase threshold_case_sequence(const ExactRat& theta, std::size_t n, const HardSet& hs);

// Atom 0 is 0^n (weight 1/4), atom 1 is 1^n (1/4), atom 1+i is x^i (1/(2t)).
class PacDistribution {
 public:
  explicit PacDistribution(HardSet hs);

  const HardSet& hard_set() const { return hs_; }
  std::size_t atoms() const { return hs_.size() + 2; }
  const BitVec& atom(std::size_t a) const;
  Label label(std::size_t a) const { return a == 1 ? Label::Positive : Label::Negative; }
  ExactRat probability(std::size_t a) const;
  ExactRat total_probability() const;

  // Deterministic given seed. Draws uniformly from [0, 4t): [0,t) -> 0^n,
  // [t,2t) -> 1^n, 2t + 2(i-1) + {0,1} -> x^i.
  std::vector<std::size_t> sample_atoms(std::size_t count, std::uint64_t seed) const;

 private:
  HardSet hs_;
  BitVec zeros_;
  BitVec ones_;
};

std::vector<LabeledExample> pac_sample(const PacDistribution& d, std::size_t count,
                                       std::uint64_t seed);

struct PacResult {
  perceptron::DualPerceptronState final_state;
  ExactRat error;  // exact d-probability of misclassified atoms
  bool prefix_hit = false;
  std::size_t distinct_seen = 0;       // distinct hard-set atoms in the training stream
  bool unseen_all_misclassified = true;
  std::vector<std::size_t> misclassified_atoms;
};

// Trains the monotone kernel Perceptron (theta = 0) on `sample_size` draws
// and evaluates its true error exactly over the finite support. With
// force_prefix the stream is [0^n, 1^n] followed by the draws.
PacResult pac_experiment(const PacDistribution& d, std::size_t sample_size, std::uint64_t seed,
                         bool force_prefix = false);

}  // namespace boolkern::adversarial
