#pragma once

// Boolean conjunction kernels and an explicit feature-space oracle.
//
// Each kernel counts the conjunctions of its family that are true in both
// arguments, always including the empty conjunction:
//   AllConjunctions                 2^same(x,y)
//   MonotoneConjunctions            2^|x & y|
//   BoundedConjunctions(k)          sum_{l<=k} C(same(x,y), l)
//   BoundedMonotoneConjunctions(k)  sum_{l<=k} C(|x & y|, l)
//
// FeatureSpace enumerates the same conjunctions explicitly so that every
// kernel value can be re-derived as a plain inner product. Enumeration order:
//   * monotone families: monomials by size, then lexicographically on the
//     sorted index list (so index 0 is the empty monomial);
//   * signed families: ternary counter with x_1 as the least significant
//     digit, digit 0 = absent, 1 = positive literal, 2 = negated literal.
// Bounded families keep the same order and drop conjunctions longer than k.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"

namespace boolkern::kernels {

enum class Family { AllConjunctions, MonotoneConjunctions, BoundedConjunctions, BoundedMonotoneConjunctions };

struct KernelKind {
  Family family = Family::MonotoneConjunctions;
  std::size_t k = 0;  // only meaningful for bounded families

  static KernelKind all() { return {Family::AllConjunctions, 0}; }
  static KernelKind monotone() { return {Family::MonotoneConjunctions, 0}; }
  static KernelKind bounded(std::size_t k) { return {Family::BoundedConjunctions, k}; }
  static KernelKind bounded_monotone(std::size_t k) { return {Family::BoundedMonotoneConjunctions, k}; }

  // CLI/JSON names: all, monotone, bounded, bounded-monotone.
  static KernelKind parse(std::string_view name, std::size_t k = 0);

  bool is_monotone() const {
    return family == Family::MonotoneConjunctions || family == Family::BoundedMonotoneConjunctions;
  }
  bool is_bounded() const {
    return family == Family::BoundedConjunctions || family == Family::BoundedMonotoneConjunctions;
  }
  std::string name() const;
  std::string describe() const;  // name plus "(k=K)" for bounded families

  bool operator==(const KernelKind&) const = default;
};

ExactInt kernel(const KernelKind& kind, const BitVec& x, const BitVec& y);

// A conjunction over at most 20 variables as literal masks (bit 0 -> x_1).
struct Conjunction {
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;

  std::size_t size() const;
  bool satisfied_by(std::uint32_t x_mask) const {
    return (positive & ~x_mask) == 0 && (negative & x_mask) == 0;
  }
  std::string to_string() const;  // "{}" or e.g. "x1 ~x3"
  bool operator==(const Conjunction&) const = default;
};

inline constexpr std::size_t kMonotoneExpansionGuard = 20;
inline constexpr std::size_t kSignedExpansionGuard = 10;

struct ExplicitFeatureVector {
  KernelKind kind;
  std::size_t n = 0;
  BitVec indicators;  // dimension = indicators.size()
};

class FeatureSpace {
 public:
  // Throws GuardExceeded past the expansion guards and InvalidArgument for k > n.
  FeatureSpace(KernelKind kind, std::size_t n);

  const KernelKind& kind() const { return kind_; }
  std::size_t n() const { return n_; }
  std::size_t dimension() const { return conjunctions_.size(); }
  const Conjunction& conjunction(std::size_t index) const { return conjunctions_[index]; }
  const std::vector<Conjunction>& conjunctions() const { return conjunctions_; }

  // Feature indices satisfied by x, ascending.
  std::vector<std::size_t> active(const BitVec& x) const;
  ExplicitFeatureVector expand(const BitVec& x) const;

 private:
  std::uint32_t mask_of(const BitVec& x) const;
  std::size_t code_of(const Conjunction& c) const;

  KernelKind kind_;
  std::size_t n_;
  std::vector<Conjunction> conjunctions_;
  // Monotone: indexed by the positive mask. Signed: indexed by ternary code.
  std::vector<std::int64_t> index_of_;
};

ExplicitFeatureVector expand(const KernelKind& kind, const BitVec& x);
ExactInt dot(const ExplicitFeatureVector& a, const ExplicitFeatureVector& b);

}  // namespace boolkern::kernels
