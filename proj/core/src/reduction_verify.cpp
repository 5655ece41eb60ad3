#include <string>

#include "boolkern/errors.hpp"
#include "boolkern/lazy_winnow.hpp"
#include "boolkern/reduction.hpp"
#include "reduction_checks.hpp"

namespace boolkern::reduction {

namespace detail {

namespace {

ExactRat pow2(std::int64_t e) { return ipow(ExactRat(2), e); }

}  // namespace

InequalityCheck make_check(std::string name, const ExactRat& lhs, std::string relation,
                           const ExactRat& rhs, bool fatal) {
  bool pass = false;
  if (relation == "<") {
    pass = lhs < rhs;
  } else if (relation == "<=") {
    pass = lhs <= rhs;
  } else if (relation == ">") {
    pass = lhs > rhs;
  } else if (relation == ">=") {
    pass = lhs >= rhs;
  } else if (relation == "==") {
    pass = lhs == rhs;
  } else {
    throw InvalidArgument("unknown relation '" + relation + "'");
  }
  return InequalityCheck{std::move(name), std::move(relation), lhs, rhs, pass, fatal};
}

std::vector<InequalityCheck> structural_checks(const ReductionParams& P) {
  const auto n = static_cast<std::int64_t>(P.n);
  const ExactRat& a = P.alpha;
  const ExactRat aq = ipow(a, P.q);
  std::vector<InequalityCheck> out;
  out.push_back(make_check("stage4.positive.first", P.q - P.L, ">", 0));
  out.push_back(make_check("stage4.positive.second", P.L - P.c, ">=", 0));
  out.push_back(make_check("theta.window.lower", aq * pow2(n + 1), "<", P.theta));
  out.push_back(make_check("theta.window.upper", P.theta, "<=", ipow(a, P.q + 1) * pow2(n + 1)));
  out.push_back(make_check("slack.group", P.group, ">=", 1));
  out.push_back(make_check("theta.above", pow2(n + 1), "<", P.theta));
  out.push_back(make_check("gamma1", pow2(n) * ipow(a, -P.V), "<", make_rat(1, 2)));
  out.push_back(make_check("gamma2", pow2(P.U) * ipow(a, -P.W), "<", make_rat(1, 4)));
  out.push_back(make_check("stage4.start", pow2(P.U + 1), "<", P.theta));
  out.push_back(make_check("stage4.first", ipow(a, P.q - P.L) * pow2(P.U + 1), "<=",
                           aq * pow2(n + 1)));
  out.push_back(make_check("stage4.final", ipow(a, P.L - P.c) * pow2(P.U), "<", aq / 2));
  {
    const ExactInt num = P.epsilon.get_num();
    const ExactInt den = P.epsilon.get_den();
    const ExactRat lhs = ipow(a - 1, to_int64(den)) *
                         ExactRat(ipow(ExactInt(P.m), static_cast<std::uint64_t>(to_int64(den - num))));
    out.push_back(make_check("epsilon.width", lhs, ">=", 1, false));
  }
  return out;
}

std::vector<InequalityCheck> count_checks(const ReductionParams& P, const ExactInt& K,
                                          const std::optional<FormulaFacts>& facts) {
  const auto n = static_cast<std::int64_t>(P.n);
  const ExactRat& a = P.alpha;
  const ExactRat aq = ipow(a, P.q);
  const ExactRat aqc = ipow(a, P.q - P.c);
  const ExactRat D = P.D(K);
  const ExactRat p(P.p(K));
  const ExactRat top = ipow(a, P.c + 1) * pow2(n + 1) - 3;
  const ExactRat quarter = make_rat(1, 4);

  std::vector<InequalityCheck> out;
  if (facts) {
    const ExactRat models(facts->models);
    out.push_back(make_check("models.lower", aq, "<=", aq * models));
    out.push_back(make_check("models.gap", aq * (models + make_rat(1, 2)), "<", aq * pow2(n)));
    out.push_back(make_check("models.upper", aq * pow2(n), "<", P.theta / 2));
  }
  out.push_back(make_check("quarter.left", aqc, "<=", quarter * aq));
  out.push_back(make_check("quarter.right", quarter * aq, "<", D));
  out.push_back(make_check("gap.a", aqc, "<", D));
  out.push_back(make_check("gap.b", D, "<=", p * aqc));
  out.push_back(make_check("gap.c", p * aqc, "<", D + quarter * aq));
  out.push_back(make_check("gap.d", D + quarter * aq, "<=", P.theta - 3 * quarter * aq));
  out.push_back(make_check("gap.top", P.theta - 3 * quarter * aq, "<=",
                           ipow(a, P.q + 1) * pow2(n + 1) - 3 * aqc));
  out.push_back(make_check("top.identity", ipow(a, P.q + 1) * pow2(n + 1) - 3 * aqc, "==", aqc * top));
  out.push_back(make_check("p.lower", 1, "<", p));
  out.push_back(make_check("p.upper", p, "<=", top));
  out.push_back(make_check("top.cap", top, "<=", pow2(P.U) - 3));
  out.push_back(make_check("stage3.lower", D, "<=", p * aqc));
  out.push_back(make_check("stage3.upper", (p + quarter) * aqc, "<", D + aq / 2));
  out.push_back(make_check("final.a", (p + quarter) * aqc, "<=",
                           P.theta - 3 * quarter * aq + aq / 16));
  out.push_back(make_check("final.b", P.theta - 3 * quarter * aq + aq / 16, "<", P.theta - aq / 2));
  if (facts) {
    const auto nn = static_cast<std::int64_t>(facts->clauses);
    const auto rr = static_cast<std::int64_t>(facts->stage3_clauses);
    out.push_back(make_check("slack.budget", 6 * P.V * nn + 1 + 6 * P.W * rr + 2, "<=",
                             P.m - n - P.U));
  }
  return out;
}

}  // namespace detail

bool InequalityReport::all_pass() const { return first_failure() == nullptr; }

const InequalityCheck* InequalityReport::first_failure() const {
  for (const auto& check : checks) {
    if (check.fatal && !check.pass) return &check;
  }
  return nullptr;
}

InequalityReport verify_inequalities(const ReductionParams& params, const M2SatInstance& f,
                                     const ExactInt& K) {
  InequalityReport report;
  report.checks = detail::structural_checks(params);
  detail::FormulaFacts facts{count_sat(f), f.clauses.size(), 0};
  const ExactInt p = params.p(K);
  if (p >= 1 && p < ipow(ExactInt(2), static_cast<std::uint64_t>(params.U))) {
    facts.stage3_clauses = lemma10_cnf(static_cast<std::size_t>(params.U), p).clauses.size();
  } else {
    facts.stage3_clauses = static_cast<std::size_t>(params.U) + 1;
  }
  auto more = detail::count_checks(params, K, facts);
  report.checks.insert(report.checks.end(), more.begin(), more.end());
  return report;
}

namespace {

struct Masses {
  ExactRat a;
  ExactRat b;
  ExactRat ab;
};

// Splits w . phi(z) by whether each monomial lies in A, in B, or in both.
Masses masses(const winnow::SparseMonomialWeights& state, const BitVec& z, std::size_t n) {
  PowerSum a, b, ab;
  const std::uint64_t a_mask = (std::uint64_t{1} << n) - 1;
  state.visit_subsets(z, [&](const winnow::Monomial&, std::int64_t e, std::uint64_t mask) {
    const bool has_a = (mask & a_mask) != 0;
    const bool has_b = (mask & ~a_mask) != 0;
    (has_a && has_b ? ab : has_a ? a : b).add(e);
  });
  const ExactRat& alpha = state.config().alpha;
  return {a.value(alpha), b.value(alpha), ab.value(alpha)};
}

[[noreturn]] void fail(std::size_t step, const std::string& claim) {
  throw AssertionFailure("step " + std::to_string(step) + ": " + claim);
}

}  // namespace

TraceReport verify_trace(const KwpInstance& inst, const M2SatInstance& f, const ExactInt& K) {
  if (inst.annotations.size() != inst.sequence.size()) {
    throw InvalidArgument("verify: annotations do not match the sequence");
  }
  const ReductionParams P = compute_params(f.n, inst.alpha, inst.theta);
  if (static_cast<std::size_t>(P.m) != inst.m || inst.z.size() != inst.m) {
    throw LengthMismatch("verify: instance length disagrees with the derived m");
  }
  const std::size_t n = f.n;
  const auto U = static_cast<std::size_t>(P.U);
  for (std::size_t i = 1; i <= inst.m; ++i) {
    if (inst.z.get(i) != (i <= n + U)) fail(0, "z is 1^{n+U} 0^{m-n-U}");
  }
  const MonotoneCnf cnf = to_cnf(f);
  const ExactRat D = P.D(K);
  const ExactInt p = P.p(K);
  const ExactRat& alpha = inst.alpha;
  const ExactRat& theta = inst.theta;
  const ExactRat aq = ipow(alpha, P.q);

  TraceReport report;
  report.models = count_sat(cnf);
  report.expected = report.models >= K;

  winnow::SparseMonomialWeights state(winnow::WinnowConfig{alpha, theta}, inst.m);
  const std::size_t total = inst.sequence.size();
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t step = i + 1;
    const auto& e = inst.sequence[i];
    const Annotation& an = inst.annotations[i];
    const auto outcome = state.observe(e);
    if (outcome.mistake) ++report.mistakes;

    switch (an.purpose) {
      case Purpose::SlackPromotion: {
        if (e.label != Label::Positive || !outcome.mistake) fail(step, "slack positive is a promotion");
        ++report.claims_checked;
        const bool group_ends = i + 1 == total || inst.annotations[i + 1].gadget != an.gadget ||
                                inst.annotations[i + 1].group != an.group ||
                                inst.annotations[i + 1].purpose != an.purpose;
        if (group_ends) {
          const ExactRat sum = state.score(e.x);
          if (!(theta <= sum && sum < alpha * theta)) {
            fail(step, "theta <= slack group weight < alpha * theta");
          }
          ++report.claims_checked;
        }
        break;
      }
      case Purpose::ClauseNegative:
        if (e.label != Label::Negative || !outcome.mistake) fail(step, "clause negative is a false positive");
        ++report.claims_checked;
        break;
      case Purpose::Stage2Promotion:
      case Purpose::Stage4Promotion:
        if (e.label != Label::Positive || !outcome.mistake || !(outcome.score < theta)) {
          fail(step, "stage " + std::to_string(an.stage) + " positive is a promotion below theta");
        }
        ++report.claims_checked;
        break;
    }

    const bool stage_ends = i + 1 == total || inst.annotations[i + 1].stage != an.stage;
    if (!stage_ends) continue;
    switch (an.stage) {
      case 1: {
        winnow::Monomial t;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
          t.clear();
          for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> j) & 1u) t.push_back(static_cast<std::uint32_t>(j + 1));
          }
          const std::int64_t ex = state.exponent(t);
          const bool ok = cnf.evaluate(mask) ? ex == 0 : ex <= -P.V;
          if (!ok) fail(step, "after stage 1, type-A monomial exponents match F");
          ++report.claims_checked;
        }
        break;
      }
      case 2: {
        const Masses ms = masses(state, inst.z, n);
        if (!(aq < ms.a && ms.a < theta / 2)) fail(step, "after stage 2, alpha^q < M_A < theta/2");
        report.m_a = ms.a;
        ++report.claims_checked;
        break;
      }
      case 3: {
        const Masses ms = masses(state, inst.z, n);
        if (!(ExactRat(p) < ms.b && ms.b < ExactRat(p) + make_rat(1, 4))) {
          fail(step, "after stage 3, p < M_B < p + 1/4");
        }
        ++report.claims_checked;
        break;
      }
      case 4: {
        const Masses ms = masses(state, inst.z, n);
        if (!(D <= ms.b && ms.b < D + aq / 2)) fail(step, "after stage 4, D <= M_B < D + alpha^q/2");
        const ExactRat cross =
            (ipow(ExactRat(2), static_cast<std::int64_t>(n)) - 1) * (ipow(ExactRat(2), P.U) - 1);
        if (ms.ab != cross) fail(step, "after stage 4, M_AB = (2^n - 1)(2^U - 1)");
        if (ms.a != report.m_a) fail(step, "M_A is unchanged after stage 2");
        report.m_b = ms.b;
        report.m_ab = ms.ab;
        report.claims_checked += 3;
        break;
      }
      default:
        fail(step, "annotation names a stage in 1..4");
    }
  }

  report.steps = total;
  report.score = state.score(inst.z);
  if (report.score != report.m_a + report.m_b + report.m_ab) {
    fail(total, "w . phi(z) = M_A + M_B + M_AB");
  }
  report.decision = report.score >= theta;
  if (report.decision != report.expected) {
    fail(total, "decision equals [count_sat(F) >= K]");
  }
  report.claims_checked += 2;
  return report;
}

}  // namespace boolkern::reduction
