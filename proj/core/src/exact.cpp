#include "boolkern/exact.hpp"

#include <limits>

#include "boolkern/errors.hpp"

namespace boolkern {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

ExactInt parse_int(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return ExactInt(std::string(text), 10);
}

ExactRat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(parse_int(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw InvalidArgument("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return make_rat(parse_int(num_text), parse_int(den_text));
}

std::string to_string(const ExactInt& value) { return value.get_str(10); }

std::string to_string(const ExactRat& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

ExactInt ipow(const ExactInt& base, std::uint64_t exponent) {
  ExactInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

ExactRat ipow(const ExactRat& base, std::int64_t exponent) {
  if (exponent < 0 && base == 0) throw InvalidArgument("zero to a negative power");
  const std::uint64_t magnitude =
      exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1u
                   : static_cast<std::uint64_t>(exponent);
  ExactInt num = ipow(base.get_num(), magnitude);
  ExactInt den = ipow(base.get_den(), magnitude);
  if (exponent < 0) std::swap(num, den);
  return make_rat(num, den);
}

ExactInt floor(const ExactRat& value) {
  ExactInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

ExactInt ceil(const ExactRat& value) {
  ExactInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::int64_t ceil_log(const ExactRat& base, const ExactRat& x) {
  if (base <= 1) throw InvalidArgument("ceil_log: base must exceed 1");
  if (x <= 0) throw InvalidArgument("ceil_log: argument must be positive");

  if (x > 1) {
    // Smallest e >= 1 with base^e >= x: gallop, then bisect (lo fails, hi holds).
    std::int64_t lo = 0;
    std::int64_t hi = 1;
    while (ipow(base, hi) < x) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (ipow(base, mid) >= x) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  }

  // x <= 1: answer is -k for the largest k >= 0 with base^k <= 1/x.
  const ExactRat inv = 1 / x;
  std::int64_t lo = 0;  // holds
  std::int64_t hi = 1;
  while (ipow(base, hi) <= inv) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ipow(base, mid) <= inv) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return -lo;
}

ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

ExactInt binomial_prefix_sum(std::uint64_t n, std::uint64_t k) {
  ExactInt total = 0;
  const std::uint64_t top = k < n ? k : n;
  for (std::uint64_t l = 0; l <= top; ++l) total += binomial(n, l);
  return total;
}

std::int64_t to_int64(const ExactInt& value) {
  if (!value.fits_slong_p()) throw InvalidArgument("integer out of 64-bit range");
  return value.get_si();
}

void PowerSum::add(std::int64_t exponent, std::uint64_t count) {
  if (count == 0) return;
  counts_[exponent] += count;
  terms_ += count;
}

void PowerSum::merge(const PowerSum& other) {
  for (const auto& [e, c] : other.counts_) add(e, c);
}

ExactRat PowerSum::value(const ExactRat& base) const {
  if (counts_.empty()) return 0;
  // Horner over ascending exponents:
  // sum c_e b^e = b^e0 (c_0 + b^(e1-e0) (c_1 + ...)).
  ExactRat acc = 0;
  auto it = counts_.rbegin();
  std::int64_t prev = it->first;
  for (; it != counts_.rend(); ++it) {
    if (it->first != prev) {
      acc *= ipow(base, prev - it->first);
      prev = it->first;
    }
    acc += ExactRat(ExactInt(static_cast<unsigned long>(it->second)));
  }
  return acc * ipow(base, prev);
}

}  // namespace boolkern
