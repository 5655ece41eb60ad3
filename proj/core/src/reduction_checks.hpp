#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boolkern/reduction.hpp"

namespace boolkern::reduction::detail {

// K-independent constraints, in the order compute_params reports them.
std::vector<InequalityCheck> structural_checks(const ReductionParams& params);

// Facts about a concrete formula, when one is at hand.
struct FormulaFacts {
  ExactInt models;
  std::size_t clauses = 0;         // of F
  std::size_t stage3_clauses = 0;  // of F_{U,p}
};

// Constraints that depend on K, plus the model-count window and the slack budget
// when `facts` is given.
std::vector<InequalityCheck> count_checks(const ReductionParams& params, const ExactInt& K,
                                          const std::optional<FormulaFacts>& facts);

InequalityCheck make_check(std::string name, const ExactRat& lhs, std::string relation,
                           const ExactRat& rhs, bool fatal = true);

}  // namespace boolkern::reduction::detail
