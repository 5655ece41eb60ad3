#pragma once

// Counting monotone 2-CNF models with kernel Winnow.
//
// An instance (F, K) of M2SAT over n variables becomes a monotone consistent
// sequence S over m variables and a query z = 1^{n+U} 0^{m-n-U} such that the
// final Winnow hypothesis scores z at least theta iff F has at least K
// satisfying assignments. Variables are laid out as
//
//   A = x_1 .. x_n          one per variable of F
//   B = x_{n+1} .. x_{n+U}  carries a CNF with exactly p models
//   C = everything else     slack, six fresh indices per negative example
//
// and the construction runs in four stages:
//   1  V false-positive demotions per clause of F, so M_A ~ |F^{-1}(1)|
//   2  q promotions on A plus one slack bit, so M_A ~ alpha^q |F^{-1}(1)|
//   3  W demotions per clause of F_{U,p}, so M_B ~ p
//   4  q - c promotions on B, so M_B ~ theta - alpha^q K - M_AB
// where M_A, M_B and M_AB sum the weights of nonempty monomials inside A,
// inside B, and straddling both.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/kwp.hpp"

namespace boolkern::reduction {

inline constexpr std::size_t kCountSatGuard = 24;

struct M2SatInstance {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> clauses;  // 1-based, (i, i) allowed
  ExactInt K = 1;

  // Indices in 1..n, at most n^2 clauses, 1 <= K <= 2^n.
  void validate() const;
};

struct MonotoneCnf {
  std::size_t vars = 0;
  std::vector<std::vector<std::size_t>> clauses;  // sorted 1-based indices

  void validate() const;  // nonempty clauses, indices in 1..vars
  // Bit i-1 of `assignment` is variable i.
  bool evaluate(std::uint64_t assignment) const;
  std::string to_string() const;

  bool operator==(const MonotoneCnf&) const = default;
};

MonotoneCnf to_cnf(const M2SatInstance& f);

// Brute force over all 2^vars assignments; throws GuardExceeded above 24.
ExactInt count_sat(const MonotoneCnf& f);
ExactInt count_sat(const M2SatInstance& f);

// A monotone CNF over ell variables with at most ell clauses and exactly p
// models, 1 <= p <= 2^ell - 1:
//   ell = 1:                 {x_1}
//   p <  2^{ell-1}:          F_{ell-1,p} plus the unit clause {x_ell}
//   p == 2^{ell-1}:          {x_ell}
//   p >  2^{ell-1}:          x_ell added to every clause of F_{ell-1,p-2^{ell-1}}
MonotoneCnf lemma10_cnf(std::size_t ell, const ExactInt& p);

struct ReductionParams {
  std::size_t n = 0;
  ExactRat alpha;
  ExactRat theta;
  ExactRat epsilon;

  std::int64_t U = 0;
  std::int64_t V = 0;
  std::int64_t W = 0;
  std::int64_t m = 0;
  std::int64_t q = 0;
  std::int64_t c = 0;
  std::int64_t L = 0;      // ceil((U - n) / log2 alpha)
  std::int64_t group = 0;  // ceil(log_alpha(theta / 3)), promotions per slack group
  bool epsilon_ok = false; // alpha >= 1 + m^{-(1-epsilon)}

  // First slack index of each stage region (1-based).
  std::int64_t stage1_slack_begin() const { return static_cast<std::int64_t>(n) + U + 1; }
  std::int64_t stage2_slack() const { return static_cast<std::int64_t>(n) + U + 6 * V * n * n + 1; }
  std::int64_t stage3_slack_begin() const { return stage2_slack() + 1; }
  std::int64_t stage3_slack_end() const { return m - 2; }  // inclusive

  // D = theta - (2^n - 1)(2^U - 1) - alpha^q K
  ExactRat D(const ExactInt& K) const;
  // Smallest integer p > 1 with D <= p alpha^{q-c}.
  ExactInt p(const ExactInt& K) const;
};

// m for a given n and alpha; it does not depend on theta.
std::int64_t reduction_width(std::size_t n, const ExactRat& alpha);

// Throws ParameterViolation naming the first failed constraint. The epsilon
// condition is recorded in epsilon_ok but never fatal.
ReductionParams compute_params(std::size_t n, const ExactRat& alpha, const ExactRat& theta,
                               const ExactRat& epsilon = make_rat(1, 2));

enum class Purpose { SlackPromotion, ClauseNegative, Stage2Promotion, Stage4Promotion };

std::string purpose_name(Purpose p);
Purpose parse_purpose(const std::string& name);

struct Annotation {
  int stage = 0;            // 1..4
  Purpose purpose = Purpose::SlackPromotion;
  std::int64_t gadget = -1; // index of the clause negative this example belongs to, stages 1/3
  int group = -1;           // 0..2 for slack promotions

  bool operator==(const Annotation&) const = default;
};

struct KwpInstance {
  std::size_t m = 0;
  ExactRat alpha;
  ExactRat theta;
  std::vector<LabeledExample> sequence;
  std::vector<Annotation> annotations;  // parallel to `sequence`
  BitVec z;
  M2SatInstance source;

  winnow::KwpQuery query() const;
};

struct BuildResult {
  KwpInstance instance;
  ReductionParams params;
  ExactRat D;
  ExactInt p;
  MonotoneCnf stage3_cnf;
  std::int64_t slack_used = 0;
};

BuildResult build_kwp(const M2SatInstance& f, const ExactRat& alpha, const ExactRat& theta);

struct InequalityCheck {
  std::string name;
  std::string relation;  // "<", "<=", "==", ">=" or ">"
  ExactRat lhs;
  ExactRat rhs;
  bool pass = false;
  bool fatal = true;     // informational checks (epsilon) do not fail the report
};

struct InequalityReport {
  std::vector<InequalityCheck> checks;
  bool all_pass() const;
  const InequalityCheck* first_failure() const;
};

InequalityReport verify_inequalities(const ReductionParams& params, const M2SatInstance& f,
                                     const ExactInt& K);

struct TraceReport {
  bool decision = false;
  bool expected = false;
  ExactInt models;
  ExactRat score;
  ExactRat m_a;   // after stage 2
  ExactRat m_b;   // after stage 4
  ExactRat m_ab;  // after stage 4
  std::size_t steps = 0;
  std::size_t mistakes = 0;
  std::size_t claims_checked = 0;
};

// Replays S through the lazy simulator, checking every per-stage claim.
// Throws AssertionFailure naming the step and the claim on the first failure.
TraceReport verify_trace(const KwpInstance& inst, const M2SatInstance& f, const ExactInt& K);

}  // namespace boolkern::reduction
