#pragma once

// Kernel Winnow Prediction: run Winnow over all nonempty monomials of the
// sequence S, then ask whether the final hypothesis scores z at least theta.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/lazy_winnow.hpp"
#include "boolkern/winnow.hpp"

namespace boolkern::winnow {

struct KwpQuery {
  std::size_t m = 0;
  WinnowConfig config;
  std::vector<LabeledExample> sequence;
  BitVec z;
};

struct KwpOptions {
  // Proceed (with `consistent == false` recorded) when S is not monotone
  // consistent instead of throwing ConsistencyViolation.
  bool force = false;
  std::size_t support_guard = kDefaultSupportGuard;
};

struct KwpOutcome {
  bool decision = false;
  ExactRat score;  // w . phi(z)
  bool consistent = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  std::size_t mistakes = 0;
};

KwpOutcome kwp_decide(const KwpQuery& query, const KwpOptions& options = {});

}  // namespace boolkern::winnow
