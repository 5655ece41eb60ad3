#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolkern {

// Fixed-length Boolean example x_1..x_n, packed into 64-bit words.
//
// Positions are 1-based everywhere in the public API. The text form is a
// string of '0'/'1' with the leftmost character holding x_1; JSON arrays of
// indices use the same 1-based numbering.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t n);

  static BitVec zeros(std::size_t n) { return BitVec(n); }
  static BitVec ones(std::size_t n);
  static BitVec parse(std::string_view bits);
  static BitVec from_indices(std::size_t n, std::span<const std::size_t> one_based);
  // Lowest n bits of `mask`, bit 0 -> x_1. n <= 64.
  static BitVec from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const;
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true);

  std::string to_string() const;
  // 1-based positions of the 1 bits, ascending.
  std::vector<std::size_t> support() const;
  std::span<const Word> words() const { return words_; }

  // Lexicographic over x_1, x_2, ... (0 < 1); shorter vectors order first.
  std::strong_ordering operator<=>(const BitVec& other) const;
  bool operator==(const BitVec& other) const = default;

  std::size_t hash() const;

 private:
  void check_index(std::size_t i) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

std::size_t weight(const BitVec& x);
// Positions where x and y agree.
std::size_t same(const BitVec& x, const BitVec& y);
std::size_t intersect_count(const BitVec& x, const BitVec& y);
std::size_t hamming_distance(const BitVec& x, const BitVec& y);
// Pointwise x_i <= y_i.
bool leq(const BitVec& x, const BitVec& y);

enum class Label : std::int8_t { Negative = -1, Positive = 1 };

inline int to_int(Label label) { return static_cast<int>(label); }
Label label_from_int(long long value);
inline Label flip(Label label) {
  return label == Label::Positive ? Label::Negative : Label::Positive;
}

struct LabeledExample {
  BitVec x;
  Label label = Label::Negative;

  bool operator==(const LabeledExample&) const = default;
};

}  // namespace boolkern

template <>
struct std::hash<boolkern::BitVec> {
  std::size_t operator()(const boolkern::BitVec& v) const noexcept { return v.hash(); }
};
