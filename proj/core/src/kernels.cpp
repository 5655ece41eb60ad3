#include "boolkern/kernels.hpp"

#include <algorithm>
#include <bit>

#include "boolkern/errors.hpp"

namespace boolkern::kernels {

namespace {

std::size_t pow3(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

// Same-size monomials: the one containing the smallest index of the
// symmetric difference comes first.
bool monotone_before(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

}  // namespace

KernelKind KernelKind::parse(std::string_view name, std::size_t k) {
  if (name == "all") return all();
  if (name == "monotone") return monotone();
  if (name == "bounded") return bounded(k);
  if (name == "bounded-monotone") return bounded_monotone(k);
  throw InvalidArgument("unknown kernel kind '" + std::string(name) +
                        "' (expected all, monotone, bounded, bounded-monotone)");
}

std::string KernelKind::name() const {
  switch (family) {
    case Family::AllConjunctions:
      return "all";
    case Family::MonotoneConjunctions:
      return "monotone";
    case Family::BoundedConjunctions:
      return "bounded";
    case Family::BoundedMonotoneConjunctions:
      return "bounded-monotone";
  }
  return "?";
}

std::string KernelKind::describe() const {
  return is_bounded() ? name() + "(k=" + std::to_string(k) + ")" : name();
}

ExactInt kernel(const KernelKind& kind, const BitVec& x, const BitVec& y) {
  if (x.size() != y.size()) {
    throw LengthMismatch("kernel: lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
  if (kind.is_bounded() && kind.k > x.size()) {
    throw InvalidArgument("kernel: k=" + std::to_string(kind.k) + " exceeds n=" +
                          std::to_string(x.size()));
  }
  switch (kind.family) {
    case Family::AllConjunctions:
      return ipow(ExactInt(2), same(x, y));
    case Family::MonotoneConjunctions:
      return ipow(ExactInt(2), intersect_count(x, y));
    case Family::BoundedConjunctions:
      return binomial_prefix_sum(same(x, y), kind.k);
    case Family::BoundedMonotoneConjunctions:
      return binomial_prefix_sum(intersect_count(x, y), kind.k);
  }
  return 0;
}

std::size_t Conjunction::size() const {
  return static_cast<std::size_t>(std::popcount(positive) + std::popcount(negative));
}

std::string Conjunction::to_string() const {
  if (positive == 0 && negative == 0) return "{}";
  std::string out;
  for (int i = 0; i < 32; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (!(positive & bit) && !(negative & bit)) continue;
    if (!out.empty()) out += ' ';
    if (negative & bit) out += '~';
    out += "x" + std::to_string(i + 1);
  }
  return out;
}

FeatureSpace::FeatureSpace(KernelKind kind, std::size_t n) : kind_(kind), n_(n) {
  const std::size_t guard = kind.is_monotone() ? kMonotoneExpansionGuard : kSignedExpansionGuard;
  if (n > guard) {
    throw GuardExceeded("explicit expansion of " + kind.describe() + " limited to n <= " +
                        std::to_string(guard) + ", got n=" + std::to_string(n));
  }
  if (kind.is_bounded() && kind.k > n) {
    throw InvalidArgument("expansion: k=" + std::to_string(kind.k) + " exceeds n=" +
                          std::to_string(n));
  }
  const std::size_t max_len = kind.is_bounded() ? kind.k : n;

  if (kind.is_monotone()) {
    std::vector<std::uint32_t> masks;
    masks.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) <= max_len) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), monotone_before);
    index_of_.assign(std::size_t{1} << n, -1);
    conjunctions_.reserve(masks.size());
    for (std::uint32_t m : masks) {
      index_of_[m] = static_cast<std::int64_t>(conjunctions_.size());
      conjunctions_.push_back({m, 0});
    }
    return;
  }

  const std::size_t total = pow3(n);
  index_of_.assign(total, -1);
  for (std::size_t code = 0; code < total; ++code) {
    Conjunction c;
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i, rest /= 3) {
      const std::size_t digit = rest % 3;
      if (digit == 1) c.positive |= std::uint32_t{1} << i;
      if (digit == 2) c.negative |= std::uint32_t{1} << i;
    }
    if (c.size() > max_len) continue;
    index_of_[code] = static_cast<std::int64_t>(conjunctions_.size());
    conjunctions_.push_back(c);
  }
}

std::uint32_t FeatureSpace::mask_of(const BitVec& x) const {
  if (x.size() != n_) {
    throw LengthMismatch("feature space over n=" + std::to_string(n_) + " given length " +
                         std::to_string(x.size()));
  }
  return n_ == 0 ? 0u : static_cast<std::uint32_t>(x.words()[0]);
}

std::size_t FeatureSpace::code_of(const Conjunction& c) const {
  std::size_t code = 0;
  std::size_t place = 1;
  for (std::size_t i = 0; i < n_; ++i, place *= 3) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (c.positive & bit) code += place;
    if (c.negative & bit) code += 2 * place;
  }
  return code;
}

std::vector<std::size_t> FeatureSpace::active(const BitVec& x) const {
  const std::uint32_t xm = mask_of(x);
  std::vector<std::size_t> out;
  if (kind_.is_monotone()) {
    // Every submask of the support, including the empty one.
    std::uint32_t sub = xm;
    while (true) {
      if (const auto idx = index_of_[sub]; idx >= 0) out.push_back(static_cast<std::size_t>(idx));
      if (sub == 0) break;
      sub = (sub - 1) & xm;
    }
  } else {
    // A satisfied signed conjunction picks, for each variable in some subset
    // S, the literal agreeing with x.
    const std::uint32_t all = n_ == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1);
    std::uint32_t sub = all;
    while (true) {
      const Conjunction c{sub & xm, sub & ~xm};
      if (const auto idx = index_of_[code_of(c)]; idx >= 0) {
        out.push_back(static_cast<std::size_t>(idx));
      }
      if (sub == 0) break;
      sub = (sub - 1) & all;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExplicitFeatureVector FeatureSpace::expand(const BitVec& x) const {
  ExplicitFeatureVector v{kind_, n_, BitVec(dimension())};
  for (std::size_t idx : active(x)) v.indicators.set(idx + 1);
  return v;
}

ExplicitFeatureVector expand(const KernelKind& kind, const BitVec& x) {
  return FeatureSpace(kind, x.size()).expand(x);
}

ExactInt dot(const ExplicitFeatureVector& a, const ExplicitFeatureVector& b) {
  if (!(a.kind == b.kind) || a.n != b.n || a.indicators.size() != b.indicators.size()) {
    throw LengthMismatch("dot: feature vectors from different spaces (" + a.kind.describe() +
                         ", n=" + std::to_string(a.n) + ") vs (" + b.kind.describe() +
                         ", n=" + std::to_string(b.n) + ")");
  }
  return ExactInt(static_cast<unsigned long>(intersect_count(a.indicators, b.indicators)));
}

}  // namespace boolkern::kernels
