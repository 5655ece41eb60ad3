#include "boolkern/bitvec.hpp"

#include <bit>

#include "boolkern/errors.hpp"

namespace boolkern {

namespace {

std::size_t word_count(std::size_t n) { return (n + BitVec::kWordBits - 1) / BitVec::kWordBits; }

void require_same_length(const BitVec& x, const BitVec& y, const char* op) {
  if (x.size() != y.size()) {
    throw LengthMismatch(std::string(op) + ": lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
}

}  // namespace

BitVec::BitVec(std::size_t n) : size_(n), words_(word_count(n), 0) {}

BitVec BitVec::ones(std::size_t n) {
  BitVec v(n);
  for (auto& w : v.words_) w = ~Word{0};
  if (const std::size_t tail = n % kWordBits; tail != 0) {
    v.words_.back() = (Word{1} << tail) - 1;
  }
  return v;
}

BitVec BitVec::parse(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char ch = bits[i];
    if (ch == '1') {
      v.set(i + 1);
    } else if (ch != '0') {
      throw InvalidArgument("bit string may contain only '0' and '1': '" + std::string(bits) +
                            "'");
    }
  }
  return v;
}

BitVec BitVec::from_indices(std::size_t n, std::span<const std::size_t> one_based) {
  BitVec v(n);
  for (std::size_t i : one_based) v.set(i);
  return v;
}

BitVec BitVec::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > kWordBits) throw InvalidArgument("from_mask supports at most 64 bits");
  BitVec v(n);
  if (n > 0) {
    const Word keep = n == kWordBits ? ~Word{0} : (Word{1} << n) - 1;
    v.words_[0] = mask & keep;
  }
  return v;
}

void BitVec::check_index(std::size_t i) const {
  if (i == 0 || i > size_) {
    throw InvalidArgument("bit index " + std::to_string(i) + " outside 1.." +
                          std::to_string(size_));
  }
}

bool BitVec::get(std::size_t i) const {
  check_index(i);
  const std::size_t k = i - 1;
  return (words_[k / kWordBits] >> (k % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool value) {
  check_index(i);
  const std::size_t k = i - 1;
  const Word bit = Word{1} << (k % kWordBits);
  if (value) {
    words_[k / kWordBits] |= bit;
  } else {
    words_[k / kWordBits] &= ~bit;
  }
}

std::string BitVec::to_string() const {
  std::string out(size_, '0');
  for (std::size_t k = 0; k < size_; ++k) {
    if ((words_[k / kWordBits] >> (k % kWordBits)) & 1u) out[k] = '1';
  }
  return out;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      const int tz = std::countr_zero(bits);
      out.push_back(w * kWordBits + static_cast<std::size_t>(tz) + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

std::strong_ordering BitVec::operator<=>(const BitVec& other) const {
  if (size_ != other.size_) return size_ <=> other.size_;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const Word diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      // First differing position; the vector holding 0 there orders first.
      const Word lowest = diff & (~diff + 1);
      return (words_[w] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t BitVec::hash() const {
  std::size_t h = size_ * 0x9E3779B97F4A7C15ull;
  for (Word w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t weight(const BitVec& x) {
  std::size_t total = 0;
  for (auto w : x.words()) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t hamming_distance(const BitVec& x, const BitVec& y) {
  require_same_length(x, y, "hamming_distance");
  std::size_t total = 0;
  const auto xs = x.words();
  const auto ys = y.words();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(xs[i] ^ ys[i]));
  }
  return total;
}

std::size_t same(const BitVec& x, const BitVec& y) {
  require_same_length(x, y, "same");
  return x.size() - hamming_distance(x, y);
}

std::size_t intersect_count(const BitVec& x, const BitVec& y) {
  require_same_length(x, y, "intersect_count");
  std::size_t total = 0;
  const auto xs = x.words();
  const auto ys = y.words();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(xs[i] & ys[i]));
  }
  return total;
}

bool leq(const BitVec& x, const BitVec& y) {
  require_same_length(x, y, "leq");
  const auto xs = x.words();
  const auto ys = y.words();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if ((xs[i] & ~ys[i]) != 0) return false;
  }
  return true;
}

Label label_from_int(long long value) {
  if (value == 1) return Label::Positive;
  if (value == -1) return Label::Negative;
  throw InvalidArgument("label must be -1 or 1, got " + std::to_string(value));
}

}  // namespace boolkern
