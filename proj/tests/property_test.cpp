#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "zeckvec/bridge.hpp"
#include "zeckvec/error.hpp"
#include "zeckvec/normalize.hpp"

using namespace zeckvec;
using testing_support::strict;

namespace {

const std::vector<RecurrenceVector>& strict_family() {
  static const std::vector<RecurrenceVector> family{strict({1, 1}),    strict({1, 1, 1}), strict({2, 1, 1}),
                                                    strict({3, 2, 1}), strict({4, 2, 1}), strict({2, 2, 1, 1})};
  return family;
}

// Hand-rolled generators over a seeded engine.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long long between(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

  LatticeVector vector(std::size_t dim, long long radius) {
    std::vector<BigInt> v;
    for (std::size_t i = 0; i < dim; ++i) v.emplace_back(between(-radius, radius));
    return LatticeVector(std::move(v));
  }

  CoefficientString digits(std::size_t max_len, long long max_digit) {
    std::vector<BigInt> d(static_cast<std::size_t>(between(0, static_cast<long long>(max_len))));
    for (auto& x : d) x = between(0, max_digit);
    return CoefficientString(std::move(d));
  }

  // Random SR: rejection from random strings bounded by c_1.
  CoefficientString sr(const RecurrenceVector& c, std::size_t max_len) {
    for (;;) {
      auto a = digits(max_len, static_cast<long long>(c.c(1)));
      if (is_sr(c, a)) return a;
    }
  }
};

BigInt spread(const RecurrenceVector& c) {
  BigInt s = 0;
  for (const auto& ci : c.coefficients()) s += ci;
  return s - 1;
}

}  // namespace

TEST(Property, DecomposeRoundTrip) {
  Gen gen(101);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (int trial = 0; trial < 200; ++trial) {
      const auto v = gen.vector(rec.dimension(), 60);
      const auto a = decompose(rec, v);
      ASSERT_TRUE(is_sr(c, a)) << c.to_string() << " " << v.to_string();
      ASSERT_EQ(evaluate(rec, a), v) << c.to_string();
    }
  }
}

TEST(Property, EvaluateThenDecomposeIsIdentityOnSr) {
  Gen gen(102);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = gen.sr(c, 12);
      ASSERT_EQ(decompose(rec, evaluate(rec, a)), a) << c.to_string() << " " << a.to_string();
    }
  }
}

TEST(Property, BothDecompositionRoutesAgree) {
  Gen gen(103);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (int trial = 0; trial < 60; ++trial) {
      const auto v = gen.vector(rec.dimension(), 25);
      ASSERT_EQ(decompose(rec, v), decompose_incremental(rec, v)) << c.to_string() << " " << v.to_string();
    }
  }
}

TEST(Property, IncrementPreservesValueAndYieldsSr) {
  Gen gen(104);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (int trial = 0; trial < 150; ++trial) {
      const auto a = gen.sr(c, 10);
      const auto i = static_cast<std::size_t>(gen.between(1, 12));
      std::vector<TraceRecord> trace;
      const auto b = increment(c, a, i, kUnlimitedBudget, &trace);
      ASSERT_TRUE(is_sr(c, b));
      ASSERT_EQ(evaluate(rec, b), evaluate(rec, a) + rec.term(-static_cast<std::int64_t>(i)));
      // G never grows past the added summand.
      ASSERT_LE(coefficient_sum(b), coefficient_sum(a) + 1);
      LatticeVector value = evaluate(rec, a) + rec.term(-static_cast<std::int64_t>(i));
      for (const auto& step : trace) ASSERT_EQ(evaluate(rec, step.result), value);
    }
  }
}

TEST(Property, IncrementedSrClassifiesAsSrOrNsr) {
  Gen gen(105);
  for (const auto& c : strict_family()) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = gen.sr(c, 10);
      std::vector<BigInt> d(a.digits().begin(), a.digits().end());
      const auto i = static_cast<std::size_t>(gen.between(1, 12));
      if (d.size() < i) d.resize(i, 0);
      d[i - 1] += 1;
      const CoefficientString bumped(std::move(d));
      const auto cls = classify(c, bumped);
      ASSERT_NE(cls.kind, SrKind::Other) << c.to_string() << " " << bumped.to_string();
      if (cls.kind == SrKind::NSR) {
        std::vector<BigInt> e(bumped.digits().begin(), bumped.digits().end());
        e[*cls.witness - 1] -= 1;
        ASSERT_TRUE(is_sr(c, CoefficientString(std::move(e))));
      }
    }
  }
}

TEST(Property, NormalizeNsrDoesNotIncreaseG) {
  Gen gen(106);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    int seen = 0;
    for (int trial = 0; trial < 2000 && seen < 100; ++trial) {
      const auto a = gen.digits(8, static_cast<long long>(c.c(1)) + 2);
      if (classify(c, a).kind != SrKind::NSR) continue;
      ++seen;
      const auto report = normalize_nsr(c, a, kUnlimitedBudget);
      ASSERT_EQ(report.outcome, ProbeOutcome::Terminated);
      ASSERT_TRUE(is_sr(c, report.final_string));
      ASSERT_EQ(evaluate(rec, report.final_string), evaluate(rec, a));
      ASSERT_LE(coefficient_sum(report.final_string), coefficient_sum(a));
    }
    EXPECT_GT(seen, 0) << c.to_string();
  }
}

TEST(Property, CarryAndBorrowShiftG) {
  Gen gen(107);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    const auto delta = spread(c);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = gen.digits(10, 6);
      const auto i = static_cast<std::size_t>(gen.between(0, 10));
      try {
        const auto b = carry(c, a, i);
        ASSERT_EQ(evaluate(rec, b), evaluate(rec, a));
        // the virtual position 0 drops its increment
        ASSERT_EQ(coefficient_sum(b), coefficient_sum(a) - delta - (i == 0 ? 1 : 0));
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::CarryBlocked);
      }
      if (i == 0) continue;
      try {
        const auto b = borrow(c, a, i);
        ASSERT_EQ(evaluate(rec, b), evaluate(rec, a));
        ASSERT_EQ(coefficient_sum(b), coefficient_sum(a) + delta);
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::BorrowBlocked);
      }
    }
  }
}

TEST(Property, EvaluateIsLinear) {
  Gen gen(108);
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = gen.digits(12, 5);
      const auto b = gen.digits(12, 5);
      ASSERT_EQ(evaluate(rec, a + b), evaluate(rec, a) + evaluate(rec, b));
    }
  }
}

TEST(Property, ScannerInvariants) {
  Gen gen(109);
  for (const auto& c : strict_family()) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = gen.digits(10, static_cast<long long>(c.c(1)) + 1);
      const auto result = scan(c, a.digits());
      ASSERT_EQ(result.satisfying, oracle::is_sr(testing_support::ints(c), testing_support::ints(a)));
      if (result.satisfying) {
        // chunks tile the support, and every suffix from a chunk start is an SR
        std::size_t next = 1;
        for (const auto& span : result.chunks.spans) {
          ASSERT_EQ(span.start, next);
          next += span.length;
          std::vector<BigInt> suffix(a.digits().begin() + static_cast<std::ptrdiff_t>(span.start - 1),
                                     a.digits().end());
          ASSERT_TRUE(is_sr(c, CoefficientString(std::move(suffix))));
        }
        ASSERT_GE(next, a.length() + 1);
      } else {
        ASSERT_EQ(result.first_overfilled, result.chunk_start + result.offset);
      }
    }
  }
}

TEST(Property, SnMapMatchesScalarDotProduct) {
  for (const auto& c : {strict({1, 1}), strict({2, 1, 1}), strict({3, 2, 1})}) {
    const Recurrence rec(c);
    for (std::int64_t n = static_cast<std::int64_t>(c.k()); n <= 12; ++n) {
      for_each_sr(rec, static_cast<std::size_t>(n - 1), [&](std::span<const BigInt> digits, const LatticeVector& point) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) sum += digits[i] * rec.scalar(n - 1 - static_cast<std::int64_t>(i));
        ASSERT_EQ(s_n_map(rec, n, point), sum % rec.scalar(n));
        if (sum < rec.scalar(n + 1)) {
          const auto legal = legal_decompose_scalar(rec, sum);
          ASSERT_EQ(legal.summands(), coefficient_sum(digits));
        }
      });
    }
  }
}

TEST(Property, SummandCountTransportsAcrossTheBridge) {
  const Recurrence rec(strict({2, 1, 1}));
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto layer = bridge_layer(rec, n);
    std::set<BigInt> images;
    for (const auto& m : layer.members) {
      const auto image = s_n_map(rec, static_cast<std::int64_t>(n) + 1, m.point);
      ASSERT_GE(image, rec.scalar(static_cast<std::int64_t>(n)));
      ASSERT_LT(image, rec.scalar(static_cast<std::int64_t>(n) + 1));
      ASSERT_EQ(coefficient_sum(decompose(rec, m.point)), legal_decompose_scalar(rec, image).summands());
      images.insert(image);
    }
    ASSERT_EQ(BigInt(images.size()), rec.scalar(static_cast<std::int64_t>(n) + 1) - rec.scalar(static_cast<std::int64_t>(n)));
  }
}

TEST(Property, CountIdentities) {
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto d = region_d(rec, n);
      ASSERT_EQ(BigInt(d.size()), rec.scalar(static_cast<std::int64_t>(n) + 1)) << c.to_string() << " n=" << n;
      ASSERT_EQ(BigInt(enumerate_sr(rec, n).size()), rec.scalar(static_cast<std::int64_t>(n) + 1));
    }
  }
}

TEST(Property, RecurrenceHoldsBothWays) {
  for (const auto& c : strict_family()) {
    const Recurrence rec(c);
    for (std::int64_t n = -30; n <= 30; ++n) {
      LatticeVector sum = LatticeVector(std::vector<BigInt>(rec.dimension(), 0));
      for (std::size_t i = 1; i <= c.k(); ++i) sum.add_scaled(c.c(i), rec.term(n - static_cast<std::int64_t>(i)));
      ASSERT_EQ(sum, rec.term(n)) << c.to_string() << " n=" << n;
    }
    for (std::int64_t n = 1; n < 40; ++n) ASSERT_LT(rec.scalar(n), rec.scalar(n + 1));
  }
}
