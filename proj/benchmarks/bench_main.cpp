#include <benchmark/benchmark.h>

#include "boolkern/kernels.hpp"
#include "boolkern/lazy_winnow.hpp"
#include "boolkern/perceptron.hpp"
#include "boolkern/reduction.hpp"
#include "boolkern/rng.hpp"

namespace bk = boolkern;
using bk::BitVec;
using bk::Label;
using bk::kernels::KernelKind;

namespace {

BitVec random_bits(bk::Rng& rng, std::size_t n) {
  BitVec x(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (rng.below(2)) x.set(i);
  }
  return x;
}

std::vector<bk::LabeledExample> random_stream(bk::Rng& rng, std::size_t n, std::size_t steps) {
  std::vector<bk::LabeledExample> s;
  for (std::size_t i = 0; i < steps; ++i) s.push_back({random_bits(rng, n), rng.below(2) ? Label::Positive : Label::Negative});
  return s;
}

}  // namespace

static void BM_KernelMonotone(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bk::Rng rng(100, 1);
  const auto x = random_bits(rng, n);
  const auto y = random_bits(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(bk::kernels::kernel(KernelKind::monotone(), x, y));
}
BENCHMARK(BM_KernelMonotone)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_KernelBounded(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  bk::Rng rng(100, 2);
  const auto x = random_bits(rng, n);
  const auto y = random_bits(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(bk::kernels::kernel(KernelKind::bounded(5), x, y));
}
BENCHMARK(BM_KernelBounded)->Arg(64)->Arg(1024);

static void BM_DualScore(benchmark::State& state) {
  const auto mistakes = static_cast<std::size_t>(state.range(0));
  bk::Rng rng(100, 3);
  bk::perceptron::PerceptronConfig cfg;
  cfg.kind = KernelKind::all();
  bk::perceptron::DualPerceptronState s(cfg);
  while (s.mistakes().size() < mistakes) s.observe({random_bits(rng, 64), rng.below(2) ? Label::Positive : Label::Negative});
  const auto probe = random_bits(rng, 64);
  for (auto _ : state) benchmark::DoNotOptimize(s.score(probe));
}
BENCHMARK(BM_DualScore)->Arg(10)->Arg(100)->Arg(1000);

static void BM_LazyScoreByWeight(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  bk::Rng rng(100, 4);
  bk::winnow::SparseMonomialWeights s({2, 1000}, 64);
  for (const auto& e : random_stream(rng, 64, 50)) {
    BitVec x(64);
    for (std::size_t i = 1; i <= 8; ++i) {
      if (e.x.get(i)) x.set(i);
    }
    s.observe({x, e.label});
  }
  BitVec probe(64);
  for (std::size_t i = 1; i <= w; ++i) probe.set(i);
  for (auto _ : state) benchmark::DoNotOptimize(s.score(probe));
}
BENCHMARK(BM_LazyScoreByWeight)->DenseRange(4, 20, 4);

static void BM_CountSat(benchmark::State& state) {
  const auto ell = static_cast<std::size_t>(state.range(0));
  const auto f = bk::reduction::lemma10_cnf(ell, (1L << ell) / 3);
  for (auto _ : state) benchmark::DoNotOptimize(bk::reduction::count_sat(f));
}
BENCHMARK(BM_CountSat)->Arg(8)->Arg(14)->Arg(20);
BENCHMARK_MAIN();
