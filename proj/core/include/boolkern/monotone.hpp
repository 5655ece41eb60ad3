#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "boolkern/bitvec.hpp"

namespace boolkern::reduction {

struct ConsistencyResult {
  bool consistent = true;
  // 1-based positions (i, j) with x^i <= x^j pointwise, b_i = +1, b_j = -1.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

// A sequence is monotone consistent iff no positive example lies pointwise
// below a negative one. Only distinct (vector, label) pairs are compared, so
// long sequences with heavy repetition stay cheap.
ConsistencyResult check_monotone_consistent(std::span<const LabeledExample> sequence);

}  // namespace boolkern::reduction
