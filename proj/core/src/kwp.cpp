#include "boolkern/kwp.hpp"

#include "boolkern/errors.hpp"
#include "boolkern/monotone.hpp"

namespace boolkern::winnow {

KwpOutcome kwp_decide(const KwpQuery& query, const KwpOptions& options) {
  if (query.z.size() != query.m) {
    throw LengthMismatch("kwp: z has length " + std::to_string(query.z.size()) + ", m=" +
                         std::to_string(query.m));
  }
  KwpOutcome out;
  const auto consistency = reduction::check_monotone_consistent(query.sequence);
  out.consistent = consistency.consistent;
  out.violation = consistency.violation;
  if (!consistency.consistent) {
    const std::string where = "examples " + std::to_string(consistency.violation->first) +
                              " and " + std::to_string(consistency.violation->second);
    if (!options.force) {
      throw ConsistencyViolation("kwp: sequence is not monotone consistent (" + where + ")");
    }
  }

  SparseMonomialWeights state(query.config, query.m, options.support_guard);
  for (const auto& e : query.sequence) {
    if (state.observe(e).mistake) ++out.mistakes;
  }
  out.score = state.score(query.z);
  out.decision = out.score >= query.config.theta;
  return out;
}

}  // namespace boolkern::winnow
