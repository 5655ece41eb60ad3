#include <string>

#include "boolkern/errors.hpp"
#include "boolkern/reduction.hpp"

namespace boolkern::reduction {

std::string purpose_name(Purpose p) {
  switch (p) {
    case Purpose::SlackPromotion:
      return "slack-promotion";
    case Purpose::ClauseNegative:
      return "clause-negative";
    case Purpose::Stage2Promotion:
      return "stage2-promotion";
    case Purpose::Stage4Promotion:
      return "stage4-promotion";
  }
  throw InvalidArgument("unknown purpose");
}

Purpose parse_purpose(const std::string& name) {
  for (Purpose p : {Purpose::SlackPromotion, Purpose::ClauseNegative, Purpose::Stage2Promotion,
                    Purpose::Stage4Promotion}) {
    if (purpose_name(p) == name) return p;
  }
  throw InvalidArgument("unknown purpose '" + name + "'");
}

winnow::KwpQuery KwpInstance::query() const {
  return winnow::KwpQuery{m, winnow::WinnowConfig{alpha, theta}, sequence, z};
}

namespace {

class Emitter {
 public:
  Emitter(const ReductionParams& params, KwpInstance& inst)
      : params_(params), inst_(inst), m_(static_cast<std::size_t>(params.m)) {}

  void push(BitVec x, Label label, Annotation a) {
    inst_.sequence.push_back({std::move(x), label});
    inst_.annotations.push_back(a);
  }

  // Three groups of `group` promotions on fresh slack pairs, then the
  // negative `base` with the three odd slack bits added.
  void gadget(int stage, BitVec base, std::int64_t& cursor, std::int64_t limit) {
    if (cursor + 5 > limit) {
      throw Error("reduction: slack budget exhausted in stage " + std::to_string(stage));
    }
    const std::int64_t id = next_gadget_++;
    for (int g = 0; g < 3; ++g) {
      BitVec pos(m_);
      pos.set(static_cast<std::size_t>(cursor + 2 * g));
      pos.set(static_cast<std::size_t>(cursor + 2 * g + 1));
      for (std::int64_t k = 0; k < params_.group; ++k) {
        push(pos, Label::Positive, {stage, Purpose::SlackPromotion, id, g});
      }
    }
    for (int g = 0; g < 3; ++g) base.set(static_cast<std::size_t>(cursor + 2 * g));
    push(std::move(base), Label::Negative, {stage, Purpose::ClauseNegative, id, -1});
    cursor += 6;
  }

 private:
  const ReductionParams& params_;
  KwpInstance& inst_;
  std::size_t m_;
  std::int64_t next_gadget_ = 0;
};

}  // namespace

BuildResult build_kwp(const M2SatInstance& f, const ExactRat& alpha, const ExactRat& theta) {
  f.validate();
  if (f.clauses.empty()) throw InvalidArgument("reduction: F must have at least one clause");

  BuildResult out;
  out.params = compute_params(f.n, alpha, theta);
  const ReductionParams& P = out.params;
  const std::size_t n = f.n;
  const auto U = static_cast<std::size_t>(P.U);
  const auto m = static_cast<std::size_t>(P.m);
  out.D = P.D(f.K);
  out.p = P.p(f.K);
  out.stage3_cnf = lemma10_cnf(U, out.p);

  KwpInstance& inst = out.instance;
  inst.m = m;
  inst.alpha = alpha;
  inst.theta = theta;
  inst.source = f;
  Emitter emit(P, inst);

  // Stage 1: V negatives per clause, A-bits set except the clause's.
  std::int64_t cursor = P.stage1_slack_begin();
  const std::int64_t stage1_end = P.stage2_slack() - 1;
  for (const auto& [i1, i2] : f.clauses) {
    BitVec base(m);
    for (std::size_t i = 1; i <= n; ++i) {
      if (i != i1 && i != i2) base.set(i);
    }
    for (std::int64_t v = 0; v < P.V; ++v) emit.gadget(1, base, cursor, stage1_end);
  }
  const std::int64_t stage1_used = cursor - P.stage1_slack_begin();

  // Stage 2: q promotions on A plus one slack bit.
  BitVec s2(m);
  for (std::size_t i = 1; i <= n; ++i) s2.set(i);
  s2.set(static_cast<std::size_t>(P.stage2_slack()));
  for (std::int64_t k = 0; k < P.q; ++k) {
    emit.push(s2, Label::Positive, {2, Purpose::Stage2Promotion, -1, -1});
  }

  // Stage 3: W negatives per clause of F_{U,p}, B-bits set except the clause's.
  cursor = P.stage3_slack_begin();
  for (const auto& clause : out.stage3_cnf.clauses) {
    BitVec base(m);
    for (std::size_t j = 1; j <= U; ++j) base.set(n + j);
    for (std::size_t j : clause) base.set(n + j, false);
    for (std::int64_t w = 0; w < P.W; ++w) emit.gadget(3, base, cursor, P.stage3_slack_end());
  }
  const std::int64_t stage3_used = cursor - P.stage3_slack_begin();

  // Stage 4: q - L promotions with x_{m-1}, then L - c with x_m.
  BitVec b_bits(m);
  for (std::size_t j = 1; j <= U; ++j) b_bits.set(n + j);
  BitVec s4a = b_bits;
  s4a.set(m - 1);
  BitVec s4b = b_bits;
  s4b.set(m);
  for (std::int64_t k = 0; k < P.q - P.L; ++k) {
    emit.push(s4a, Label::Positive, {4, Purpose::Stage4Promotion, -1, 0});
  }
  for (std::int64_t k = 0; k < P.L - P.c; ++k) {
    emit.push(s4b, Label::Positive, {4, Purpose::Stage4Promotion, -1, 1});
  }

  inst.z = BitVec(m);
  for (std::size_t i = 1; i <= n + U; ++i) inst.z.set(i);
  out.slack_used = stage1_used + 1 + stage3_used + 2;
  return out;
}

}  // namespace boolkern::reduction
