#include <gtest/gtest.h>

#include "bintail/errors.hpp"
#include "bintail/exact_dist.hpp"
#include "oracle.hpp"

using namespace bintail;

namespace {
BinomialSpec spec(long n, long a, long b) { return BinomialSpec(n, Rational(a, b)); }
}  // namespace

TEST(BinomialSpec, ValidatesAndNormalizes) {
  EXPECT_THROW(BinomialSpec(0, Rational(1, 2)), RangeError);
  EXPECT_THROW(BinomialSpec(3, Rational(-1, 2)), RangeError);
  EXPECT_THROW(BinomialSpec(3, Rational(3, 2)), RangeError);
  const BinomialSpec s(10, Rational(6, 20));
  EXPECT_EQ(s.p(), Rational(3, 10));
  EXPECT_EQ(s.floor_mean(), 3);
  EXPECT_EQ(s.ceil_mean(), 3);
  EXPECT_EQ(BinomialSpec(7, "2/7").mean(), Rational(2));
  EXPECT_EQ(BinomialSpec(10, Rational(1, 4)).floor_mean(), 2);
  EXPECT_EQ(BinomialSpec(10, Rational(1, 4)).ceil_mean(), 3);
}

TEST(Pmf, Examples) {
  EXPECT_EQ(pmf(spec(2, 1, 2), 2).value(), Rational(1, 4));
  EXPECT_EQ(pmf(spec(10, 1, 2), 5).value(), Rational(63, 256));
  for (long n : {1, 5, 40}) {
    EXPECT_EQ(pmf(spec(n, 0, 1), 0).value(), 1);
    EXPECT_EQ(pmf(spec(n, 1, 1), n).value(), 1);
    EXPECT_EQ(pmf(spec(n, 1, 1), 0).value(), 0);
  }
  EXPECT_THROW(pmf(spec(5, 1, 2), 6), RangeError);
  EXPECT_THROW(pmf(spec(5, 1, 2), -1), RangeError);
}

TEST(TailGe, ReferenceAnchors) {
  EXPECT_EQ(tail_ge(spec(10, 1, 2), 6).value(), Rational(193, 512));
  EXPECT_EQ(tail_ge(spec(3, 1, 3), 2).value(), Rational(7, 27));
  EXPECT_EQ(prob_exceeds_mean(spec(2, 1, 2)).value(), Rational(1, 4));
  EXPECT_EQ(prob_exceeds_mean_plus_one(spec(3, 1, 3)).value(), Rational(1, 27));
  const Rational q94 = prob_exceeds_mean(spec(9, 4, 9)).value();
  EXPECT_GE(q94, Rational(3655, 10000));
  EXPECT_LT(q94, Rational(3656, 10000));
  const Rational q72 = prob_exceeds_mean_plus_one(spec(7, 2, 7)).value();
  EXPECT_GE(q72, Rational(1082, 10000));
  EXPECT_LT(q72, Rational(1083, 10000));
  const Rational half100 = prob_exceeds_mean(spec(100, 1, 2)).value();
  EXPECT_EQ(half100, Rational("145844906960333151020236338515/316912650057057350374175801344"));
}

TEST(TailGe, BoundaryThresholds) {
  const auto s = spec(12, 5, 12);
  EXPECT_EQ(tail_ge(s, 0).value(), 1);
  EXPECT_EQ(tail_ge(s, -4).value(), 1);
  EXPECT_EQ(tail_ge(s, 13).value(), 0);
  EXPECT_EQ(prob_exceeds_mean(spec(9, 1, 1)).value(), 0);
  EXPECT_EQ(prob_exceeds_mean_plus_one(spec(9, 1, 1)).value(), 0);
  EXPECT_EQ(prob_at_least_mean(spec(9, 0, 1)).value(), 1);
}

// Property: the kernel agrees with the convolution oracle on random specs.
TEST(TailGe, MatchesConvolutionOracle) {
  auto rng = oracle::generator(1);
  for (int trial = 0; trial < 300; ++trial) {
    const long n = oracle::uniform(rng, 1, 45);
    const Rational p = oracle::random_probability(rng);
    const long t = oracle::uniform(rng, -1, n + 1);
    const BinomialSpec s(n, p);
    const Rational expected = oracle::tail_ge(n, p, t);
    EXPECT_EQ(tail_ge(s, t).value(), expected) << n << " " << p << " " << t;
    EXPECT_EQ(tail_ge(s, t, TailOrder::upper_sum).value(), expected);
    EXPECT_EQ(tail_ge(s, t, TailOrder::lower_complement).value(), expected);
  }
}

// Property: X > np iff X >= floor(np)+1, also for non-integral means.
TEST(TailGe, EventHelpersMatchDefinitions) {
  auto rng = oracle::generator(2);
  for (int trial = 0; trial < 200; ++trial) {
    const long n = oracle::uniform(rng, 1, 40);
    const Rational p = oracle::random_probability(rng);
    const BinomialSpec s(n, p);
    const auto dist = oracle::distribution(n, p);
    Rational gt = 0, gt1 = 0, ge = 0;
    for (long i = 0; i <= n; ++i) {
      if (i > p * n) gt += dist[i];
      if (i > p * n + 1) gt1 += dist[i];
      if (i >= p * n) ge += dist[i];
    }
    EXPECT_EQ(prob_exceeds_mean(s).value(), gt);
    EXPECT_EQ(prob_exceeds_mean_plus_one(s).value(), gt1);
    EXPECT_EQ(prob_at_least_mean(s).value(), ge);
    EXPECT_EQ(cdf(s, s.floor_mean()).value(), 1 - gt);
  }
}

TEST(PmfTable, SumsToDenominatorAndMatchesPmf) {
  auto rng = oracle::generator(3);
  for (int trial = 0; trial < 100; ++trial) {
    const BinomialSpec s(oracle::uniform(rng, 1, 60), oracle::random_probability(rng));
    const PmfTable table = pmf_table(s);
    ASSERT_EQ(table.weights.size(), static_cast<std::size_t>(s.n() + 1));
    Integer total = 0;
    for (long i = 0; i <= s.n(); ++i) {
      total += table.weights[i];
      Rational ratio(table.weights[i], table.denominator);
      ratio.canonicalize();
      EXPECT_EQ(ratio, pmf(s, i).value());
    }
    EXPECT_EQ(total, table.denominator);
  }
}

TEST(Median, Examples) {
  EXPECT_EQ(median(spec(4, 1, 2)).value, 2);
  const Median m = median(spec(10, 3, 10));
  EXPECT_EQ(m.value, 3);
  EXPECT_TRUE(m.unique);
  EXPECT_EQ(median(spec(1, 1, 1)).value, 1);
  // Bin(1, 1/2): CDF(0) = 1/2 exactly, so 0 and 1 are both medians.
  const Median split = median(spec(1, 1, 2));
  EXPECT_EQ(split.value, 0);
  EXPECT_FALSE(split.unique);
}

// Property: the smallest-median convention against the oracle distribution.
TEST(Median, SmallestMedianConvention) {
  auto rng = oracle::generator(4);
  for (int trial = 0; trial < 150; ++trial) {
    const long n = oracle::uniform(rng, 1, 40);
    const Rational p = oracle::random_probability(rng);
    const auto dist = oracle::distribution(n, p);
    Rational running = 0;
    long expected = -1;
    for (long m = 0; m <= n && expected < 0; ++m) {
      running += dist[m];
      if (2 * running >= 1) expected = m;
    }
    const Median m = median(BinomialSpec(n, p));
    EXPECT_EQ(m.value, expected);
    EXPECT_EQ(m.unique, 2 * running > 1);
  }
}

TEST(Mode, LatticeModeIsMean) {
  for (long n = 2; n <= 40; ++n) {
    for (long k = 1; k < n; ++k) EXPECT_EQ(mode(spec(n, k, n)), k);
  }
  EXPECT_EQ(mode(spec(6, 0, 1)), 0);
  EXPECT_EQ(mode(spec(6, 1, 1)), 6);
  // Bin(3, 1/2): pmf(1) = pmf(2); the smallest maximizer is reported.
  EXPECT_EQ(mode(spec(3, 1, 2)), 1);
}

TEST(Domination, Examples) {
  EXPECT_EQ(check_domination(2, Rational(3, 10), Rational(1, 2), 1), Domination::strict);
  EXPECT_EQ(check_domination(2, Rational(3, 10), Rational(1, 2), 0), Domination::equal);
  EXPECT_EQ(check_domination(5, Rational(1, 5), Rational(2, 5), 3), Domination::strict);
  EXPECT_EQ(tail_ge(spec(5, 1, 5), 3).value(), Rational(181, 3125));
  EXPECT_EQ(tail_ge(spec(5, 2, 5), 3).value(), Rational(992, 3125));
  EXPECT_THROW(check_domination(5, Rational(1, 2), Rational(1, 2), 1), ArgumentError);
  EXPECT_THROW(check_domination(5, Rational(1, 2), Rational(1, 3), 1), ArgumentError);
  EXPECT_THROW(check_domination(5, Rational(1, 5), Rational(1, 3), 6), RangeError);
  EXPECT_EQ(to_string(Domination::strict), "strict");
}
