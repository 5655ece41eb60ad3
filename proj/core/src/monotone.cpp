#include "boolkern/monotone.hpp"

#include <unordered_map>
#include <vector>

#include "boolkern/errors.hpp"

namespace boolkern::reduction {

ConsistencyResult check_monotone_consistent(std::span<const LabeledExample> sequence) {
  // First occurrence of each distinct vector per label, in stream order.
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  std::unordered_map<BitVec, std::size_t> seen_pos;
  std::unordered_map<BitVec, std::size_t> seen_neg;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& e = sequence[i];
    if (i > 0 && e.x.size() != sequence.front().x.size()) {
      throw LengthMismatch("monotone consistency: mixed example lengths");
    }
    auto& seen = e.label == Label::Positive ? seen_pos : seen_neg;
    if (seen.emplace(e.x, i).second) {
      (e.label == Label::Positive ? positives : negatives).push_back(i);
    }
  }

  for (std::size_t p : positives) {
    for (std::size_t q : negatives) {
      if (leq(sequence[p].x, sequence[q].x)) {
        return {false, std::make_pair(p + 1, q + 1)};
      }
    }
  }
  return {};
}

}  // namespace boolkern::reduction
