#pragma once

// Reproducible randomness.
//
// Contract (fixed so traces reproduce across builds and platforms):
//   * derive_seed(root, stream) = splitmix64(root ^ splitmix64(stream)),
//     where splitmix64 is Vigna's SplitMix64 finalizer applied to x + golden.
//   * Each derived stream drives a std::mt19937_64, whose output sequence is
//     pinned by the C++ standard.
//   * Bounded draws use rejection on the raw 64-bit output; the standard
//     library distributions are avoided since their output is
//     implementation-defined.

#include <cstdint>
#include <random>

namespace boolkern {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

// Stream identifiers used by the library. Tests and tools may use any other
// value for their own streams.
namespace streams {
inline constexpr std::uint64_t kHardSet = 1;
inline constexpr std::uint64_t kPacSample = 2;
inline constexpr std::uint64_t kInstanceSampler = 3;
}  // namespace streams

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t root, std::uint64_t stream) : engine_(derive_seed(root, stream)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // True with probability num/den exactly (num <= den, den > 0).
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace boolkern
