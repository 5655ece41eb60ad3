#include <string>

#include "boolkern/errors.hpp"
#include "boolkern/reduction.hpp"
#include "reduction_checks.hpp"

namespace boolkern::reduction {

namespace {

ExactRat pow2(std::int64_t e) { return ipow(ExactRat(2), e); }

void require(const InequalityCheck& check) {
  if (check.fatal && !check.pass) {
    throw ParameterViolation(check.name + ": " + to_string(check.lhs) + " " + check.relation +
                             " " + to_string(check.rhs) + " does not hold");
  }
}

}  // namespace

ExactRat ReductionParams::D(const ExactInt& K) const {
  const ExactRat cross = (pow2(static_cast<std::int64_t>(n)) - 1) * (pow2(U) - 1);
  return theta - cross - ipow(alpha, q) * ExactRat(K);
}

ExactInt ReductionParams::p(const ExactInt& K) const {
  ExactInt value = ceil(D(K) / ipow(alpha, q - c));
  if (value < 2) value = 2;
  return value;
}

std::int64_t reduction_width(std::size_t n, const ExactRat& alpha) {
  if (alpha <= 1) throw ParameterViolation("alpha must exceed 1, got " + to_string(alpha));
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t c = ceil_log(alpha, 4);
  const std::int64_t U = nn + 1 + ceil_log(2, ipow(alpha, c + 1));
  const std::int64_t V = ceil_log(alpha, pow2(nn + 1)) + 1;
  const std::int64_t W = ceil_log(alpha, pow2(U + 2)) + 1;
  return nn + U + 6 * V * nn * nn + 6 * U * W + 3;
}

ReductionParams compute_params(std::size_t n, const ExactRat& alpha, const ExactRat& theta,
                               const ExactRat& epsilon) {
  if (n < 1) throw ParameterViolation("n must be at least 1");
  if (alpha <= 1) throw ParameterViolation("alpha must exceed 1, got " + to_string(alpha));
  if (theta < 1) throw ParameterViolation("theta must be at least 1, got " + to_string(theta));
  if (epsilon < 0 || epsilon > 1) throw ParameterViolation("epsilon must lie in [0, 1]");

  const auto nn = static_cast<std::int64_t>(n);
  ReductionParams P;
  P.n = n;
  P.alpha = alpha;
  P.theta = theta;
  P.epsilon = epsilon;
  P.c = ceil_log(alpha, 4);
  P.U = nn + 1 + ceil_log(2, ipow(alpha, P.c + 1));
  P.V = ceil_log(alpha, pow2(nn + 1)) + 1;
  P.W = ceil_log(alpha, pow2(P.U + 2)) + 1;
  P.m = nn + P.U + 6 * P.V * nn * nn + 6 * P.U * P.W + 3;
  P.q = ceil_log(alpha, theta / pow2(nn + 1)) - 1;
  P.L = ceil_log(alpha, pow2(P.U - nn));
  P.group = ceil_log(alpha, theta / 3);

  // (alpha - 1)^b m^(b - a) >= 1 for epsilon = a/b.
  const ExactInt a = epsilon.get_num();
  const ExactInt b = epsilon.get_den();
  const ExactRat lhs = ipow(alpha - 1, to_int64(b)) *
                       ExactRat(ipow(ExactInt(P.m), static_cast<std::uint64_t>(to_int64(b - a))));
  P.epsilon_ok = lhs >= 1;

  for (const auto& check : detail::structural_checks(P)) require(check);
  const ExactInt k_max = ipow(ExactInt(2), n);
  for (const ExactInt& K : {ExactInt(1), k_max}) {
    for (const auto& check : detail::count_checks(P, K, std::nullopt)) {
      require(check);
    }
  }
  return P;
}

}  // namespace boolkern::reduction
