#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "test_support.hpp"
#include "unitary/arith.hpp"

using namespace unitary;

TEST(SievePrimes, Examples) {
  EXPECT_TRUE(sieve_primes(1).empty());
  EXPECT_TRUE(sieve_primes(0).empty());
  EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(sieve_primes(100).size(), 25u);
}

TEST(SievePrimes, MatchesTrialDivision) {
  auto primes = sieve_primes(5000);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    if (oracle::is_prime_trial(n)) expected.push_back(n);
  }
  EXPECT_EQ(primes, expected);
}

TEST(SievePrimes, BeyondDefaultTable) {
  Sieve small(50);
  EXPECT_EQ(small.primes().size(), 15u);
  EXPECT_THROW(Sieve(std::uint64_t{1} << 33), std::invalid_argument);
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).empty());
  auto f12 = factorize(12);
  ASSERT_EQ(f12.omega(), 2u);
  EXPECT_EQ(f12.factors()[0].p, 2u);
  EXPECT_EQ(f12.factors()[0].v, 2u);
  EXPECT_EQ(f12.factors()[1].p, 3u);
  EXPECT_EQ(f12.factors()[1].v, 1u);
  auto f = factorize(30030);
  ASSERT_EQ(f.omega(), 6u);
  for (const auto& pp : f.factors()) EXPECT_EQ(pp.v, 1u);
  EXPECT_THROW(factorize(0), std::invalid_argument);
  EXPECT_EQ(factorize(360).to_string(), "2^3 * 3^2 * 5");
}

TEST(Factorize, ReconstructsAndIsCanonical) {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    auto f = factorize(n);
    ASSERT_EQ(f.reconstruct(), n);
    std::uint64_t prev = 1;
    for (const auto& pp : f.factors()) {
      ASSERT_GT(pp.p, prev);
      ASSERT_GE(pp.v, 1u);
      prev = pp.p;
    }
  }
}

TEST(Factorize, TrialDivisionFallback) {
  Sieve small(100);
  for (std::uint64_t n : {1009ull * 1013ull, 2ull * 3ull * 1000003ull, 999999937ull,
                          (1ull << 40) + 1, 600851475143ull}) {
    auto f = small.factorize(n);
    EXPECT_EQ(f.reconstruct(), n);
    for (const auto& pp : f.factors()) EXPECT_TRUE(oracle::is_prime_trial(pp.p)) << pp.p;
  }
  EXPECT_TRUE(small.is_prime(999999937));
  EXPECT_FALSE(small.is_prime(1009ull * 1013ull));
}

TEST(Factorize, TemporaryFactorsStayValid) {
  std::vector<std::uint64_t> primes;
  for (const auto& pp : factorize(2 * 9 * 125).factors()) primes.push_back(pp.p);
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(OmegaRadicalValuation, Examples) {
  EXPECT_EQ(omega(1), 0u);
  EXPECT_EQ(radical(1), 1u);
  EXPECT_EQ(omega(12), 2u);
  EXPECT_EQ(radical(12), 6u);
  EXPECT_EQ(valuation(360, 2), 3u);
  EXPECT_EQ(valuation(360, 7), 0u);
  EXPECT_THROW(valuation(360, 4), std::invalid_argument);
  EXPECT_THROW(valuation(360, 1), std::invalid_argument);
}

TEST(OmegaRadicalValuation, MatchTrialDivision) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    ASSERT_EQ(omega(n), oracle::omega_trial(n)) << n;
    std::uint64_t rad = 1;
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (n % p == 0 && oracle::is_prime_trial(p)) rad *= p;
    }
    ASSERT_EQ(radical(n), rad) << n;
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(unitary::gcd(12, 18), 6u);
  EXPECT_EQ(unitary::gcd(1, 97), 1u);
  EXPECT_EQ(unitary::gcd(30030, 77), 77u);
  EXPECT_THROW(unitary::gcd(0, 5), std::invalid_argument);
}

TEST(EulerPhi, MatchesCount) {
  for (std::uint64_t n = 1; n <= 500; ++n) ASSERT_EQ(euler_phi(n), oracle::phi_count(n)) << n;
}

TEST(CoprimeDecompose, Examples) {
  auto t = coprime_decompose(1, 1);
  EXPECT_EQ((std::array{t.p, t.n, t.q}), (std::array<std::uint64_t, 3>{1, 1, 1}));
  t = coprime_decompose(12, 18);
  EXPECT_EQ((std::array{t.p, t.n, t.q}), (std::array<std::uint64_t, 3>{6, 2, 3}));
  t = coprime_decompose(8, 3);
  EXPECT_EQ((std::array{t.p, t.n, t.q}), (std::array<std::uint64_t, 3>{1, 8, 3}));
}

TEST(CoprimeDecompose, BijectiveUpTo300) {
  std::set<std::array<std::uint64_t, 3>> seen;
  for (std::uint64_t a = 1; a <= 300; ++a) {
    for (std::uint64_t b = 1; b <= 300; ++b) {
      auto t = coprime_decompose(a, b);
      ASSERT_EQ(oracle::gcd_euclid(t.n, t.q), 1u);
      ASSERT_EQ(t.reconstruct(), std::make_pair(a, b));
      ASSERT_TRUE(seen.insert({t.p, t.n, t.q}).second);
    }
  }
}

TEST(DivisorPairs, Examples) {
  EXPECT_EQ(divisor_pairs(1), (std::vector<DivisorPair>{{1, 1}}));
  EXPECT_EQ(divisor_pairs(6), (std::vector<DivisorPair>{{1, 6}, {2, 3}, {3, 2}, {6, 1}}));
  EXPECT_EQ(divisor_pairs(13), (std::vector<DivisorPair>{{1, 13}, {13, 1}}));
}

TEST(DivisorPairs, MatchBruteForce) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::vector<DivisorPair> expected;
    for (auto d : oracle::divisors_brute(n)) expected.emplace_back(d, n / d);
    ASSERT_EQ(divisor_pairs(n), expected) << n;
  }
}

TEST(UnitaryDivisorPairs, Examples) {
  EXPECT_EQ(unitary_divisor_pairs(1), (std::vector<DivisorPair>{{1, 1}}));
  EXPECT_EQ(unitary_divisor_pairs(12),
            (std::vector<DivisorPair>{{1, 12}, {3, 4}, {4, 3}, {12, 1}}));
  EXPECT_EQ(unitary_divisor_pairs(30030).size(), 64u);
}

TEST(UnitaryDivisorPairs, ExactlyTheCoprimeSubset) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::vector<DivisorPair> expected;
    for (auto [a, b] : divisor_pairs(n)) {
      if (oracle::gcd_euclid(a, b) == 1) expected.emplace_back(a, b);
    }
    auto pairs = unitary_divisor_pairs(n);
    ASSERT_EQ(pairs, expected) << n;
    ASSERT_EQ(pairs.size(), std::uint64_t{1} << oracle::omega_trial(n)) << n;
  }
}

TEST(Overflow, IsReported) {
  EXPECT_THROW(checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 30), std::overflow_error);
  EXPECT_THROW(checked_pow(10, 20), std::overflow_error);
  EXPECT_EQ(checked_pow(10, 19), 10000000000000000000ull);
}
