#include "nu2sigma/factor.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "nu2sigma/natural.hpp"

namespace nu2sigma {
namespace {

Natural next_prime(const Natural& n) {
  Natural out;
  mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

std::vector<bool> prime_sieve(std::uint64_t limit) {
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = false;
  if (limit >= 1) sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  return sieve;
}

TEST(IsPrime, SmallKnowns) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(4));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(7919));
}

TEST(IsPrime, NegativeRejected) {
  EXPECT_THROW(is_prime(Natural(-3)), std::invalid_argument);
}

TEST(IsPrime, AgreesWithSieve) {
  constexpr std::uint64_t kLimit = 1000000;
  std::vector<bool> sieve = prime_sieve(kLimit);
  for (std::uint64_t n = 0; n <= kLimit; ++n)
    ASSERT_EQ(is_prime(Natural(n)), sieve[n]) << "n = " << n;
}

TEST(IsPrime, MersenneCases) {
  EXPECT_TRUE(is_prime(pow_ui(2, 61) - 1));
  EXPECT_TRUE(is_prime(pow_ui(2, 127) - 1));
  EXPECT_FALSE(is_prime(pow_ui(2, 11) - 1));
  EXPECT_FALSE(is_prime(pow_ui(2, 67) - 1));
}

TEST(IsPrime, LargeProbabilisticPath) {
  Natural p = next_prime(pow_ui(10, 30));
  Natural q = next_prime(pow_ui(10, 31));
  EXPECT_TRUE(is_prime(p));
  EXPECT_TRUE(is_prime(q));
  EXPECT_FALSE(is_prime(p * q));
}

TEST(Factorize, Knowns) {
  Factorization f = factorize(8001);
  ASSERT_EQ(f.factors().size(), 3u);
  EXPECT_EQ(f.factors()[0], (PrimePower{3, 2}));
  EXPECT_EQ(f.factors()[1], (PrimePower{7, 1}));
  EXPECT_EQ(f.factors()[2], (PrimePower{127, 1}));
  EXPECT_EQ(f.value(), 8001);

  Factorization unit = factorize(1);
  EXPECT_TRUE(unit.factors().empty());
  EXPECT_EQ(unit.value(), 1);

  Factorization pow2 = factorize(1024);
  ASSERT_EQ(pow2.factors().size(), 1u);
  EXPECT_EQ(pow2.factors()[0], (PrimePower{2, 10}));
}

TEST(Factorize, RejectsNonPositive) {
  EXPECT_THROW(factorize(0), std::invalid_argument);
  EXPECT_THROW(factorize(Natural(-12)), std::invalid_argument);
}

TEST(Factorize, RoundTripSmallRange) {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    Factorization f = factorize(Natural(n));
    Natural product = 1;
    Natural last_prime = 1;
    for (const auto& pp : f.factors()) {
      ASSERT_GT(pp.prime, last_prime) << "n = " << n;
      ASSERT_GE(pp.exponent, 1u);
      ASSERT_TRUE(is_prime(pp.prime)) << "n = " << n;
      last_prime = pp.prime;
      product *= pow_ui(pp.prime, pp.exponent);
    }
    ASSERT_EQ(product, n);
  }
}

TEST(Factorize, RoundTripSampled) {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::uint64_t> dist(100000, 1000000);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t n = dist(rng);
    Factorization f = factorize(Natural(n));
    Natural product = 1;
    for (const auto& pp : f.factors()) product *= pow_ui(pp.prime, pp.exponent);
    ASSERT_EQ(product, n);
  }
}

TEST(Factorize, SemiprimeBeyondTrialDivision) {
  Natural p = 1000003, q = 1000033;
  Factorization f = factorize(p * q);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.factors()[0], (PrimePower{p, 1}));
  EXPECT_EQ(f.factors()[1], (PrimePower{q, 1}));
}

TEST(Factorize, MultiprecisionRhoPath) {
  Natural m31 = pow_ui(2, 31) - 1;
  Natural m61 = pow_ui(2, 61) - 1;
  Factorization f = factorize(m31 * m31 * m61);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.factors()[0], (PrimePower{m31, 2}));
  EXPECT_EQ(f.factors()[1], (PrimePower{m61, 1}));
}

TEST(Factorize, PerfectPowerOfLargePrime) {
  Natural p = next_prime(pow_ui(10, 20));
  Factorization f = factorize(p * p * p);
  ASSERT_EQ(f.factors().size(), 1u);
  EXPECT_EQ(f.factors()[0], (PrimePower{p, 3}));
}

TEST(Factorize, BudgetExhaustionThrows) {
  Natural p = next_prime(pow_ui(10, 25));
  Natural q = next_prime(pow_ui(10, 26));
  FactorizeOptions options;
  options.rho_budget = 1;
  EXPECT_THROW(factorize(p * q, options), budget_exceeded_error);
}

TEST(FromFactors, BuildsAndNormalizes) {
  Factorization f = Factorization::from_factors({{7, 1}, {3, 1}, {3, 1}});
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.factors()[0], (PrimePower{3, 2}));
  EXPECT_EQ(f.factors()[1], (PrimePower{7, 1}));
  EXPECT_EQ(f.value(), 63);
  EXPECT_EQ(f, factorize(63));
}

TEST(FromFactors, RejectsBadInput) {
  EXPECT_THROW(Factorization::from_factors({{4, 1}}), std::invalid_argument);
  EXPECT_THROW(Factorization::from_factors({{3, 0}}), std::invalid_argument);
  EXPECT_THROW(Factorization::from_factors({{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Factorization::from_factors({{2, 1u << 30}}),
               std::invalid_argument);
}

TEST(ParseFactorization, AcceptedForms) {
  EXPECT_EQ(parse_factorization("2^3 * 5 * 11").value(), 440);
  EXPECT_EQ(parse_factorization("2^3*5*11").value(), 440);
  EXPECT_EQ(parse_factorization("  2 ^ 3 * 5 * 11  ").value(), 440);
  EXPECT_EQ(parse_factorization("5^1").value(), 5);
  EXPECT_EQ(parse_factorization("1").value(), 1);
  EXPECT_EQ(parse_factorization("3 * 3").value(), 9);
  EXPECT_EQ(parse_factorization("170141183460469231731687303715884105727")
                .value(),
            pow_ui(2, 127) - 1);
}

TEST(ParseFactorization, RejectsMalformed) {
  EXPECT_THROW(parse_factorization(""), std::invalid_argument);
  EXPECT_THROW(parse_factorization("4"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("3^0"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("3^"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("^2"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("3^^2"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("3 * * 5"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("a * b"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("3 5"), std::invalid_argument);
  EXPECT_THROW(parse_factorization("-3"), std::invalid_argument);
}

TEST(ParseFactorization, RoundTripsThroughToString) {
  for (const char* s : {"1", "2", "2^10", "3^2 * 7 * 127", "2^3 * 5 * 11"}) {
    Factorization f = parse_factorization(s);
    EXPECT_EQ(to_string(f), s);
    EXPECT_EQ(parse_factorization(to_string(f)), f);
  }
}

TEST(ToString, MatchesFactorize) {
  EXPECT_EQ(to_string(factorize(1)), "1");
  EXPECT_EQ(to_string(factorize(2)), "2");
  EXPECT_EQ(to_string(factorize(12)), "2^2 * 3");
  EXPECT_EQ(to_string(factorize(8001)), "3^2 * 7 * 127");
}

TEST(SplitOddPart, Splits) {
  SplitOddPart s = split_odd_part(factorize(48));
  EXPECT_EQ(s.two_exponent, 4u);
  EXPECT_EQ(s.odd_part.value(), 3);

  s = split_odd_part(factorize(45));
  EXPECT_EQ(s.two_exponent, 0u);
  EXPECT_EQ(s.odd_part.value(), 45);

  s = split_odd_part(factorize(64));
  EXPECT_EQ(s.two_exponent, 6u);
  EXPECT_EQ(s.odd_part.value(), 1);
  EXPECT_TRUE(s.odd_part.factors().empty());
}

}  // namespace
}  // namespace nu2sigma
