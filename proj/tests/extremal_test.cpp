#include "nu2sigma/extremal.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "nu2sigma/factor.hpp"
#include "nu2sigma/natural.hpp"
#include "nu2sigma/valuation.hpp"

namespace nu2sigma {
namespace {

TEST(Log2, FloorAndCeil) {
  EXPECT_EQ(floor_log2(1), 0u);
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(floor_log2(2), 1u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(floor_log2(3), 1u);
  EXPECT_EQ(ceil_log2(3), 2u);
  EXPECT_EQ(floor_log2(21), 4u);
  EXPECT_EQ(ceil_log2(21), 5u);
  EXPECT_EQ(floor_log2(1024), 10u);
  EXPECT_EQ(ceil_log2(1024), 10u);
  EXPECT_EQ(floor_log2(1025), 10u);
  EXPECT_EQ(ceil_log2(1025), 11u);
  EXPECT_EQ(floor_log2(pow_ui(2, 400)), 400u);
  EXPECT_EQ(ceil_log2(pow_ui(2, 400) + 1), 401u);
  EXPECT_THROW(floor_log2(0), std::invalid_argument);
  EXPECT_THROW(ceil_log2(0), std::invalid_argument);
}

TEST(Log2, BracketsEverySmallValue) {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    std::uint64_t f = floor_log2(n), c = ceil_log2(n);
    ASSERT_LE(pow_ui(2, f), n);
    ASSERT_GT(pow_ui(2, f + 1), n);
    ASSERT_GE(pow_ui(2, c), n);
    if (c > 0) ASSERT_LT(pow_ui(2, c - 1), n);
  }
}

TEST(BigOmega, CountsWithMultiplicity) {
  EXPECT_EQ(big_omega(factorize(1)), 0u);
  EXPECT_EQ(big_omega(factorize(2)), 1u);
  EXPECT_EQ(big_omega(factorize(12)), 3u);
  EXPECT_EQ(big_omega(factorize(8001)), 4u);
  EXPECT_EQ(big_omega(factorize(1024)), 10u);
}

TEST(Classify, MersenneProductAttainsOddBound) {
  BoundReport r = classify(factorize(21), OrderK(Natural(1)));
  EXPECT_EQ(r.valuation, 5u);
  EXPECT_EQ(r.bound_kind, BoundKind::ceiling);
  EXPECT_EQ(r.bound_value, 5u);
  EXPECT_EQ(r.gap, 0u);
  const auto* mp = std::get_if<MersenneProduct>(&r.classification);
  ASSERT_NE(mp, nullptr);
  EXPECT_EQ(mp->decomposition.exponents, (std::vector<std::uint64_t>{2, 3}));
}

TEST(Classify, ThreeAttainsEvenBound) {
  BoundReport r = classify(factorize(3), OrderK(Natural(2)));
  EXPECT_EQ(r.valuation, 1u);
  EXPECT_EQ(r.bound_kind, BoundKind::floor);
  EXPECT_EQ(r.bound_value, 1u);
  EXPECT_EQ(r.gap, 0u);
  EXPECT_TRUE(std::holds_alternative<ThreeWithEvenK>(r.classification));
}

TEST(Classify, NonAttainers) {
  BoundReport r = classify(factorize(12), OrderK(Natural(1)));
  EXPECT_EQ(r.valuation, 2u);
  EXPECT_EQ(r.bound_value, 4u);
  EXPECT_EQ(r.gap, 2u);
  EXPECT_TRUE(std::holds_alternative<NotExtremal>(r.classification));

  r = classify(factorize(32), OrderK(Natural(1)));
  EXPECT_EQ(r.valuation, 0u);
  EXPECT_EQ(r.gap, 5u);

  r = classify(factorize(21), OrderK(Natural(2)));
  EXPECT_TRUE(std::holds_alternative<NotExtremal>(r.classification));
}

TEST(Classify, SingleMersennePrime) {
  BoundReport r = classify(factorize(127), OrderK(Natural(9)));
  EXPECT_EQ(r.valuation, 7u);
  EXPECT_EQ(r.gap, 0u);
  const auto* mp = std::get_if<MersenneProduct>(&r.classification);
  ASSERT_NE(mp, nullptr);
  EXPECT_EQ(mp->decomposition.exponents, (std::vector<std::uint64_t>{7}));
}

TEST(Classify, RejectsUnit) {
  EXPECT_THROW(classify(factorize(1), OrderK(Natural(1))),
               std::invalid_argument);
}

TEST(Classify, BoundHoldsAndTagsAgreeOnRange) {
  OrderK k1{Natural(1)}, k2{Natural(2)};
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    Factorization f = factorize(Natural(n));
    BoundReport odd = classify(f, k1);
    ASSERT_LE(odd.valuation, odd.bound_value) << "n = " << n;
    ASSERT_EQ(odd.gap == 0,
              std::holds_alternative<MersenneProduct>(odd.classification));
    BoundReport even = classify(f, k2);
    ASSERT_LE(even.valuation, even.bound_value) << "n = " << n;
    ASSERT_EQ(even.gap == 0,
              std::holds_alternative<ThreeWithEvenK>(even.classification));
  }
}

TEST(LucasLehmer, AgreesWithDirectPrimality) {
  for (std::uint64_t q = 0; q <= 61; ++q)
    ASSERT_EQ(lucas_lehmer(q), q >= 2 && is_prime(pow_ui(2, q) - 1))
        << "q = " << q;
}

TEST(LucasLehmer, LargerExponents) {
  EXPECT_TRUE(lucas_lehmer(89));
  EXPECT_TRUE(lucas_lehmer(107));
  EXPECT_TRUE(lucas_lehmer(127));
  EXPECT_FALSE(lucas_lehmer(67));
  EXPECT_FALSE(lucas_lehmer(101));
}

TEST(MersennePrimes, UpToSmallLimits) {
  std::vector<MersennePrime> ps = mersenne_primes_upto(100);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].exponent, 2u);
  EXPECT_EQ(ps[0].value, 3);
  EXPECT_EQ(ps[1].exponent, 3u);
  EXPECT_EQ(ps[1].value, 7);
  EXPECT_EQ(ps[2].exponent, 5u);
  EXPECT_EQ(ps[2].value, 31);

  EXPECT_TRUE(mersenne_primes_upto(2).empty());
}

TEST(MersennePrimes, KnownExponentsBelow1e40) {
  std::vector<std::uint64_t> exponents;
  for (const auto& mp : mersenne_primes_upto(pow_ui(10, 40)))
    exponents.push_back(mp.exponent);
  EXPECT_EQ(exponents, (std::vector<std::uint64_t>{2, 3, 5, 7, 13, 17, 19, 31,
                                                   61, 89, 107, 127}));
}

TEST(MersenneDecompose, RecognizesProducts) {
  auto d = mersenne_decompose(factorize(21));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->exponents, (std::vector<std::uint64_t>{2, 3}));

  d = mersenne_decompose(factorize(651));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->exponents, (std::vector<std::uint64_t>{2, 3, 5}));

  d = mersenne_decompose(factorize(3));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->exponents, (std::vector<std::uint64_t>{2}));
}

TEST(MersenneDecompose, RejectsEverythingElse) {
  EXPECT_FALSE(mersenne_decompose(factorize(9)).has_value());
  EXPECT_FALSE(mersenne_decompose(factorize(15)).has_value());
  EXPECT_FALSE(mersenne_decompose(factorize(2)).has_value());
  EXPECT_FALSE(mersenne_decompose(factorize(6)).has_value());
  EXPECT_FALSE(mersenne_decompose(factorize(2047)).has_value());
  EXPECT_THROW(mersenne_decompose(factorize(1)), std::invalid_argument);
}

TEST(EnumerateMersenneProducts, FrozenSmallSets) {
  std::vector<Natural> expected = {3, 7, 21, 31, 93};
  EXPECT_EQ(enumerate_mersenne_products(100), expected);

  expected = {3, 7, 21, 31, 93, 127, 217, 381, 651, 889};
  EXPECT_EQ(enumerate_mersenne_products(1000), expected);

  EXPECT_THROW(enumerate_mersenne_products(1), std::invalid_argument);
}

TEST(EnumerateMersenneProducts, EveryEntryDecomposes) {
  Natural limit = 1000000;
  std::vector<Natural> products = enumerate_mersenne_products(limit);
  Natural prev = 0;
  for (const auto& n : products) {
    ASSERT_GT(n, prev);
    ASSERT_LE(n, limit);
    ASSERT_TRUE(mersenne_decompose(factorize(n)).has_value()) << "n = " << n;
    prev = n;
  }
}

}  // namespace
}  // namespace nu2sigma
