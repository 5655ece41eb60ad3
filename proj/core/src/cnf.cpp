#include <algorithm>
#include <string>

#include "boolkern/errors.hpp"
#include "boolkern/reduction.hpp"

namespace boolkern::reduction {

void M2SatInstance::validate() const {
  if (n == 0) throw InvalidArgument("m2sat: n must be positive");
  for (const auto& [a, b] : clauses) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InvalidArgument("m2sat: clause index out of range 1.." + std::to_string(n));
    }
  }
  if (clauses.size() > n * n) throw InvalidArgument("m2sat: more than n^2 clauses");
  if (n < 64 && (K < 1 || K > ipow(ExactInt(2), n))) {
    throw InvalidArgument("m2sat: K must lie in 1..2^n");
  }
}

void MonotoneCnf::validate() const {
  for (const auto& clause : clauses) {
    if (clause.empty()) throw InvalidArgument("cnf: empty clause");
    for (std::size_t v : clause) {
      if (v < 1 || v > vars) throw InvalidArgument("cnf: variable index out of range");
    }
  }
}

bool MonotoneCnf::evaluate(std::uint64_t assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (std::size_t v : clause) {
      if ((assignment >> (v - 1)) & 1u) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::string MonotoneCnf::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) out += " & ";
    out += '(';
    for (std::size_t j = 0; j < clauses[i].size(); ++j) {
      if (j) out += " | ";
      out += 'x' + std::to_string(clauses[i][j]);
    }
    out += ')';
  }
  return out.empty() ? "true" : out;
}

MonotoneCnf to_cnf(const M2SatInstance& f) {
  MonotoneCnf cnf{f.n, {}};
  for (const auto& [a, b] : f.clauses) {
    std::vector<std::size_t> clause{a, b};
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

ExactInt count_sat(const MonotoneCnf& f) {
  if (f.vars > kCountSatGuard) {
    throw GuardExceeded("count_sat: " + std::to_string(f.vars) + " variables exceeds guard " +
                        std::to_string(kCountSatGuard));
  }
  f.validate();
  // Clauses as bitmasks: an assignment satisfies a clause iff they intersect.
  std::vector<std::uint64_t> masks;
  masks.reserve(f.clauses.size());
  for (const auto& clause : f.clauses) {
    std::uint64_t mask = 0;
    for (std::size_t v : clause) mask |= std::uint64_t{1} << (v - 1);
    masks.push_back(mask);
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << f.vars;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool sat = true;
    for (std::uint64_t mask : masks) {
      if ((a & mask) == 0) {
        sat = false;
        break;
      }
    }
    if (sat) ++count;
  }
  return ExactInt(static_cast<unsigned long>(count));
}

ExactInt count_sat(const M2SatInstance& f) { return count_sat(to_cnf(f)); }

MonotoneCnf lemma10_cnf(std::size_t ell, const ExactInt& p) {
  if (ell < 1) throw InvalidArgument("lemma10: ell must be at least 1");
  const ExactInt full = ipow(ExactInt(2), ell);
  if (p < 1 || p > full - 1) {
    throw InvalidArgument("lemma10: p = " + boolkern::to_string(p) + " outside 1..2^" +
                          std::to_string(ell) + "-1");
  }
  if (ell == 1) return MonotoneCnf{1, {{1}}};

  const ExactInt half = full / 2;
  if (p == half) return MonotoneCnf{ell, {{ell}}};
  if (p < half) {
    MonotoneCnf f = lemma10_cnf(ell - 1, p);
    f.vars = ell;
    f.clauses.push_back({ell});
    return f;
  }
  MonotoneCnf f = lemma10_cnf(ell - 1, p - half);
  f.vars = ell;
  for (auto& clause : f.clauses) clause.push_back(ell);
  return f;
}

}  // namespace boolkern::reduction
