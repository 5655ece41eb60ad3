#pragma once

// Exact integer and rational arithmetic. Every score, weight and threshold in
// the library is one of these two types; nothing on a comparison path ever
// touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace boolkern {

using ExactInt = mpz_class;
// mpq_class is kept canonical (lowest terms, positive denominator) by every
// helper below and by GMP's own arithmetic.
using ExactRat = mpq_class;

// num/den in lowest terms. Throws InvalidArgument on a zero denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den = 1);

// Parses "P/Q", "P" or a leading-minus variant. Whitespace is not accepted.
ExactRat parse_rat(std::string_view text);
ExactInt parse_int(std::string_view text);

std::string to_string(const ExactInt& value);
// Always "P/Q", including integers ("3/1").
std::string to_string(const ExactRat& value);

ExactInt ipow(const ExactInt& base, std::uint64_t exponent);
// Negative exponents are allowed for a nonzero base.
ExactRat ipow(const ExactRat& base, std::int64_t exponent);

ExactInt floor(const ExactRat& value);
ExactInt ceil(const ExactRat& value);

// Smallest integer e with base^e >= x. Requires base > 1 and x > 0.
std::int64_t ceil_log(const ExactRat& base, const ExactRat& x);

// C(n, k); zero when k > n.
ExactInt binomial(std::uint64_t n, std::uint64_t k);

// sum_{l=0}^{k} C(n, l)
ExactInt binomial_prefix_sum(std::uint64_t n, std::uint64_t k);

std::int64_t to_int64(const ExactInt& value);

// Accumulates a multiset of exponents and evaluates sum count_e * base^e
// exactly. Winnow scores are sums of alpha^e over many monomials sharing a
// handful of distinct exponents, so bucketing first keeps evaluation cheap.
class PowerSum {
 public:
  void add(std::int64_t exponent, std::uint64_t count = 1);
  void merge(const PowerSum& other);

  ExactRat value(const ExactRat& base) const;

  std::uint64_t terms() const { return terms_; }
  bool empty() const { return terms_ == 0; }

 private:
  std::map<std::int64_t, std::uint64_t> counts_;
  std::uint64_t terms_ = 0;
};

}  // namespace boolkern
