#include <gtest/gtest.h>

#include "boolkern/errors.hpp"
#include "boolkern/kernels.hpp"
#include "oracles.hpp"

namespace bk = boolkern;
using bk::BitVec;
using bk::ExactInt;
using bk::kernels::KernelKind;

namespace {

std::vector<KernelKind> kinds_for(std::size_t n) {
  std::vector<KernelKind> out{KernelKind::all(), KernelKind::monotone()};
  for (std::size_t k = 0; k <= n; ++k) {
    out.push_back(KernelKind::bounded(k));
    out.push_back(KernelKind::bounded_monotone(k));
  }
  return out;
}

}  // namespace

TEST(Kernel, Examples) {
  EXPECT_EQ(bk::kernels::kernel(KernelKind::monotone(), BitVec::parse("1100"), BitVec::parse("0011")), 1);
  EXPECT_EQ(bk::kernels::kernel(KernelKind::all(), BitVec::parse("101"), BitVec::parse("101")), 8);
  EXPECT_EQ(bk::kernels::kernel(KernelKind::bounded_monotone(2), BitVec::parse("1110"),
                                BitVec::parse("1101")),
            4);
  const auto ones = BitVec::ones(100);
  EXPECT_EQ(bk::kernels::kernel(KernelKind::monotone(), ones, ones), bk::ipow(ExactInt(2), 100));
}

TEST(Kernel, ExamplesMatchBruteForce) {
  EXPECT_EQ(oracle::brute_kernel(KernelKind::all(), BitVec::parse("101"), BitVec::parse("101")), 8);
  EXPECT_EQ(oracle::brute_kernel(KernelKind::bounded_monotone(2), BitVec::parse("1110"),
                                 BitVec::parse("1101")),
            4);
}

TEST(Kernel, Errors) {
  EXPECT_THROW(bk::kernels::kernel(KernelKind::all(), BitVec::parse("10"), BitVec::parse("101")),
               bk::LengthMismatch);
  EXPECT_THROW(bk::kernels::kernel(KernelKind::bounded(4), BitVec::parse("101"), BitVec::parse("101")),
               bk::InvalidArgument);
  EXPECT_THROW(KernelKind::parse("nope"), bk::InvalidArgument);
}

TEST(Kernel, ParseNames) {
  EXPECT_EQ(KernelKind::parse("all"), KernelKind::all());
  EXPECT_EQ(KernelKind::parse("monotone"), KernelKind::monotone());
  EXPECT_EQ(KernelKind::parse("bounded", 3), KernelKind::bounded(3));
  EXPECT_EQ(KernelKind::parse("bounded-monotone", 2), KernelKind::bounded_monotone(2));
  for (const auto& kind : kinds_for(3)) EXPECT_EQ(KernelKind::parse(kind.name(), kind.k), kind);
}

TEST(Kernel, ExhaustiveAgainstBruteForce) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& kind : kinds_for(n)) {
      for (std::uint64_t a = 0; a < (1u << n); ++a) {
        for (std::uint64_t b = 0; b < (1u << n); ++b) {
          const auto x = BitVec::from_mask(n, a);
          const auto y = BitVec::from_mask(n, b);
          ASSERT_EQ(bk::kernels::kernel(kind, x, y), oracle::brute_kernel(kind, x, y))
              << kind.describe() << " " << x.to_string() << " " << y.to_string();
        }
      }
    }
  }
}

TEST(Kernel, Symmetric) {
  bk::Rng rng(2, 100);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(60);
    const auto x = oracle::random_bits(rng, n);
    const auto y = oracle::random_bits(rng, n);
    for (const auto& kind : {KernelKind::all(), KernelKind::monotone(), KernelKind::bounded(n / 2),
                             KernelKind::bounded_monotone(n / 3)}) {
      EXPECT_EQ(bk::kernels::kernel(kind, x, y), bk::kernels::kernel(kind, y, x));
    }
  }
}

TEST(Kernel, MonotoneBounds) {
  bk::Rng rng(3, 100);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(40);
    const auto x = oracle::random_bits(rng, n);
    const auto y = oracle::random_bits(rng, n);
    const auto v = bk::kernels::kernel(KernelKind::monotone(), x, y);
    EXPECT_GE(v, 1);
    EXPECT_LE(v, bk::ipow(ExactInt(2), std::min(bk::weight(x), bk::weight(y))));
  }
}

TEST(Kernel, BoundedConverges) {
  bk::Rng rng(4, 100);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.below(30);
    const auto x = oracle::random_bits(rng, n);
    const auto y = oracle::random_bits(rng, n);
    EXPECT_EQ(bk::kernels::kernel(KernelKind::bounded(n), x, y),
              bk::kernels::kernel(KernelKind::all(), x, y));
    EXPECT_EQ(bk::kernels::kernel(KernelKind::bounded_monotone(n), x, y),
              bk::kernels::kernel(KernelKind::monotone(), x, y));
  }
}

TEST(FeatureSpace, Dimensions) {
  EXPECT_EQ(bk::kernels::FeatureSpace(KernelKind::all(), 4).dimension(), 81u);
  EXPECT_EQ(bk::kernels::FeatureSpace(KernelKind::monotone(), 5).dimension(), 32u);
  EXPECT_EQ(bk::kernels::FeatureSpace(KernelKind::bounded_monotone(2), 5).dimension(), 16u);
  // sum_{l<=1} C(4,l) 2^l = 1 + 8
  EXPECT_EQ(bk::kernels::FeatureSpace(KernelKind::bounded(1), 4).dimension(), 9u);
}

TEST(FeatureSpace, Guards) {
  EXPECT_THROW(bk::kernels::FeatureSpace(KernelKind::monotone(), 21), bk::GuardExceeded);
  EXPECT_THROW(bk::kernels::FeatureSpace(KernelKind::all(), 11), bk::GuardExceeded);
  EXPECT_THROW(bk::kernels::FeatureSpace(KernelKind::bounded(3), 2), bk::InvalidArgument);
  EXPECT_NO_THROW(bk::kernels::FeatureSpace(KernelKind::all(), 10));
}

TEST(FeatureSpace, ExpandExamples) {
  const auto v = bk::kernels::expand(KernelKind::monotone(), BitVec::parse("10"));
  EXPECT_EQ(v.indicators.to_string(), "1100");
  const auto z = bk::kernels::expand(KernelKind::monotone(), BitVec::zeros(5));
  EXPECT_EQ(bk::weight(z.indicators), 1u);
  EXPECT_TRUE(z.indicators.get(1));
  const auto a = bk::kernels::expand(KernelKind::all(), BitVec::parse("1"));
  EXPECT_EQ(a.indicators.to_string(), "110");
}

TEST(FeatureSpace, MonotoneOrder) {
  const bk::kernels::FeatureSpace space(KernelKind::monotone(), 3);
  const std::vector<std::string> expected{"{}", "x1", "x2", "x3", "x1 x2", "x1 x3", "x2 x3", "x1 x2 x3"};
  ASSERT_EQ(space.dimension(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(space.conjunction(i).to_string(), expected[i]);
}

TEST(FeatureSpace, SignedOrder) {
  const bk::kernels::FeatureSpace space(KernelKind::all(), 2);
  const std::vector<std::string> expected{"{}", "x1", "~x1", "x2", "x1 x2", "~x1 x2", "~x2", "x1 ~x2", "~x1 ~x2"};
  ASSERT_EQ(space.dimension(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(space.conjunction(i).to_string(), expected[i]);
}

TEST(FeatureSpace, ActiveMatchesSatisfied) {
  bk::Rng rng(9, 100);
  const bk::kernels::FeatureSpace space(KernelKind::bounded(2), 6);
  for (int i = 0; i < 50; ++i) {
    const auto x = oracle::random_bits(rng, 6);
    const auto active = space.active(x);
    std::size_t j = 0;
    for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
      const bool on = j < active.size() && active[j] == idx;
      if (on) ++j;
      std::uint32_t mask = 0;
      for (std::size_t b = 1; b <= 6; ++b) mask |= x.get(b) ? 1u << (b - 1) : 0u;
      EXPECT_EQ(on, space.conjunction(idx).satisfied_by(mask));
    }
  }
}

TEST(Dot, Examples) {
  const auto x = BitVec::parse("1101");
  EXPECT_EQ(bk::kernels::dot(bk::kernels::expand(KernelKind::monotone(), x),
                             bk::kernels::expand(KernelKind::monotone(), x)),
            8);
  EXPECT_EQ(bk::kernels::dot(bk::kernels::expand(KernelKind::monotone(), BitVec::parse("1100")),
                             bk::kernels::expand(KernelKind::monotone(), BitVec::parse("0011"))),
            1);
}

TEST(Dot, MismatchThrows) {
  const auto a = bk::kernels::expand(KernelKind::monotone(), BitVec::parse("11"));
  const auto b = bk::kernels::expand(KernelKind::all(), BitVec::parse("11"));
  const auto c = bk::kernels::expand(KernelKind::monotone(), BitVec::parse("111"));
  EXPECT_ANY_THROW(bk::kernels::dot(a, b));
  EXPECT_ANY_THROW(bk::kernels::dot(a, c));
}

TEST(Dot, RandomIdentity) {
  bk::Rng rng(10, 100);
  const std::size_t n = 8;
  for (const auto& kind : {KernelKind::all(), KernelKind::monotone(), KernelKind::bounded(3),
                           KernelKind::bounded_monotone(3)}) {
    const bk::kernels::FeatureSpace space(kind, n);
    for (int i = 0; i < 200; ++i) {
      const auto x = oracle::random_bits(rng, n);
      const auto y = oracle::random_bits(rng, n);
      EXPECT_EQ(bk::kernels::kernel(kind, x, y), bk::kernels::dot(space.expand(x), space.expand(y)));
    }
  }
}
