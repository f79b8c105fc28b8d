#include <gtest/gtest.h>

#include <cstdlib>
#include <functional>
#include <set>

#include "support.hpp"
#include "zeckvec/bridge.hpp"
#include "zeckvec/error.hpp"
#include "zeckvec/normalize.hpp"

using namespace zeckvec;
using testing_support::strict;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(SnMap, DotProductExamples) {
  const Recurrence rec(strict({2, 1, 1}));
  // (0,1) . (X_4, X_3) = 8 mod 51
  EXPECT_EQ(s_n_map(rec, 5, LatticeVector{0, 1}), 8);
  EXPECT_EQ(s_n_map(rec, 6, LatticeVector{-2, -1}), 8);
  EXPECT_EQ(s_n_map(rec, 7, LatticeVector{0, 0}), 0);
  EXPECT_EQ(s_n_map(rec, 1, LatticeVector{5, 5}), 0);
  EXPECT_EQ(kind_of([&] { s_n_map(rec, 0, LatticeVector{1, 0}); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([&] { s_n_map(rec, 5, LatticeVector{1}); }), ErrorKind::InvalidArgument);
}

TEST(SnMap, TermsMapToScalarTerms) {
  for (const auto& c : {strict({1, 1}), strict({2, 1, 1}), strict({3, 2, 1}), strict({2, 2, 2, 1})}) {
    const Recurrence rec(c);
    for (std::int64_t n = static_cast<std::int64_t>(c.k()); n <= 16; ++n) {
      for (std::int64_t i = 1; i < n; ++i) {
        EXPECT_EQ(s_n_map(rec, n, rec.term(-i)), rec.scalar(n - i)) << c.to_string() << " n=" << n << " i=" << i;
      }
    }
  }
}

TEST(LegalScalar, Examples) {
  const Recurrence fib(strict({1, 1}));
  const auto ten = legal_decompose_scalar(fib, 10);
  EXPECT_EQ(ten.top, 5u);
  EXPECT_EQ(ten.coefficient(5), 1);
  EXPECT_EQ(ten.coefficient(2), 1);
  EXPECT_EQ(ten.summands(), 2);
  EXPECT_EQ(ten.to_string(), "X_5 + X_2");

  const auto zero = legal_decompose_scalar(fib, 0);
  EXPECT_EQ(zero.top, 0u);
  EXPECT_TRUE(zero.digits.empty());

  const Recurrence rec(strict({2, 1, 1}));
  const auto x5 = legal_decompose_scalar(rec, 51);
  EXPECT_EQ(x5.summands(), 1);
  EXPECT_EQ(x5.coefficient(5), 1);
  EXPECT_THROW(legal_decompose_scalar(rec, -1), Error);
}

TEST(LegalScalar, MatchesGreedyOracle) {
  const auto c = strict({3, 2, 1});
  const Recurrence rec(c);
  const auto x = oracle::scalars(testing_support::ints(c), 12);
  for (long long n = 0; n < 3000; ++n) {
    const auto dec = legal_decompose_scalar(rec, n);
    EXPECT_EQ(dec.summands(), oracle::greedy_summands(x, n)) << n;
    BigInt back = 0;
    for (std::size_t i = 1; i <= dec.top; ++i) back += dec.coefficient(i) * rec.scalar(i);
    EXPECT_EQ(back, n);
  }
}

TEST(Enumerate, SmallCounts) {
  const Recurrence rec(strict({2, 1, 1}));
  const auto one = enumerate_sr(rec, 1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_TRUE(one[0].empty());
  EXPECT_EQ(one[1], (CoefficientString{1}));
  EXPECT_EQ(one[2], (CoefficientString{2}));
  EXPECT_EQ(enumerate_sr(rec, 3).size(), 20u);
  EXPECT_EQ(enumerate_sr(rec, 0).size(), 1u);
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (const auto& c : {strict({1, 1}), strict({2, 1, 1}), strict({3, 2, 1}), strict({3, 1, 1, 1})}) {
    const Recurrence rec(c);
    for (int n = 1; n <= 6; ++n) {
      const auto brute = oracle::all_sr(testing_support::ints(c), n);
      const auto mine = enumerate_sr(rec, n);
      ASSERT_EQ(mine.size(), brute.size()) << c.to_string() << " n=" << n;
      EXPECT_EQ(BigInt(mine.size()), rec.scalar(n + 1));
      for (std::size_t i = 0; i < mine.size(); ++i) EXPECT_EQ(mine[i], testing_support::string_of(brute[i]));
    }
  }
}

TEST(Enumerate, CapExceeded) {
  const Recurrence rec(strict({2, 1, 1}));
  EXPECT_EQ(kind_of([&] { enumerate_sr(rec, 10, 100); }), ErrorKind::CapExceeded);
  EXPECT_NO_THROW(enumerate_sr(rec, 4, 51));
}

TEST(Enumerate, EnvironmentOverridesCap) {
  ::setenv("ZECKVEC_CAP", "25", 1);
  EXPECT_EQ(enumeration_cap(), 25u);
  const Recurrence rec(strict({2, 1, 1}));
  EXPECT_EQ(kind_of([&] { region_d(rec, 4); }), ErrorKind::CapExceeded);
  ::setenv("ZECKVEC_CAP", "bogus", 1);
  EXPECT_EQ(kind_of([] { enumeration_cap(); }), ErrorKind::InvalidArgument);
  ::unsetenv("ZECKVEC_CAP");
  EXPECT_EQ(enumeration_cap(), kDefaultEnumerationCap);
}

TEST(Regions, SmallRegions) {
  const Recurrence rec(strict({2, 1, 1}));
  const auto d0 = region_d(rec, 0);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0.contains(LatticeVector{0, 0}));

  const auto d1 = region_d(rec, 1);
  ASSERT_EQ(d1.size(), 3u);
  for (const auto& v : {LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{2, 0}}) EXPECT_TRUE(d1.contains(v));

  const auto d3 = region_d(rec, 3);
  EXPECT_EQ(d3.size(), 20u);
  const auto* m = d3.find(LatticeVector{-2, 1});
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->sr, (CoefficientString{0, 2, 1}));
  EXPECT_EQ(m->n_first, 3u);
  EXPECT_EQ(d3.find(LatticeVector{100, 100}), nullptr);
}

TEST(Regions, LayersPartitionD) {
  const Recurrence rec(strict({2, 1, 1}));
  const auto d = region_d(rec, 6);
  std::size_t total = 0;
  for (std::size_t i = 0; i <= 6; ++i) {
    const auto r = region_r(rec, i);
    total += r.size();
    for (const auto& m : r.members) {
      EXPECT_EQ(m.n_first, i);
      EXPECT_TRUE(d.contains(m.point));
    }
    if (i >= 1) EXPECT_EQ(BigInt(r.size()), rec.scalar(i + 1) - rec.scalar(i));
  }
  EXPECT_EQ(total, d.size());
}

TEST(Regions, BridgeLayerIsPreimageOfInterval) {
  const Recurrence rec(strict({2, 1, 1}));
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto layer = bridge_layer(rec, n);
    EXPECT_EQ(BigInt(layer.size()), rec.scalar(n + 1) - rec.scalar(n));
    std::set<BigInt> images;
    for (const auto& m : layer.members) {
      EXPECT_GE(m.sr[1], 1);
      images.insert(s_n_map(rec, static_cast<std::int64_t>(n) + 1, m.point));
    }
    EXPECT_EQ(images.size(), layer.size());
  }
}

TEST(Coverage, BallGrowth) {
  const Recurrence rec(strict({2, 1, 1}));
  EXPECT_EQ(ball_coverage(rec, 0), 0u);
  // Regression constant from exhaustive growth.
  EXPECT_EQ(ball_coverage(rec, 1), 4u);
  std::size_t last = 0;
  for (std::size_t r = 0; r <= 5; ++r) {
    const auto n = ball_coverage(rec, r);
    EXPECT_GE(n, last);
    last = n;
    // Cross-check: the largest SR support over the ball.
    std::size_t longest = 0;
    for (long long x = -static_cast<long long>(r); x <= static_cast<long long>(r); ++x) {
      for (long long y = -static_cast<long long>(r); y <= static_cast<long long>(r); ++y) {
        longest = std::max(longest, decompose(rec, LatticeVector{x, y}).length());
      }
    }
    EXPECT_EQ(n, longest) << r;
  }
}
