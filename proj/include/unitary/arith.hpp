#pragma once

// Integer foundations: primes, factorization and the divisor structures the
// unitary ring is built on.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unitary {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned v = 0;

  /// p^v, throws std::overflow_error if it does not fit.
  std::uint64_t value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition. Primes strictly increasing, exponents
/// at least one; n = 1 has no factors.
class Factorization {
 public:
  Factorization() = default;
  Factorization(std::uint64_t n, std::vector<PrimePower> factors);

  std::uint64_t n() const { return n_; }
  std::span<const PrimePower> factors() const& { return factors_; }
  // On a temporary, hand the factors over by value so range-for stays valid.
  std::vector<PrimePower> factors() && { return std::move(factors_); }
  std::size_t omega() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Product of p^v over the factors, with overflow checking.
  std::uint64_t reconstruct() const;
  std::string to_string() const;

 private:
  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

/// Smallest-prime-factor table, immutable once built.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  Factorization factorize(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> primes_;
};

inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;

/// Process-wide sieve. Its bound is kDefaultSieveLimit unless the
/// UNITARY_SIEVE_LIMIT environment variable overrides it at first use.
const Sieve& default_sieve();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

std::size_t omega(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
/// Exponent of the prime p in n. Rejects non-prime p.
unsigned valuation(std::uint64_t n, std::uint64_t p);
std::uint64_t euler_phi(std::uint64_t n);

/// Rejects zero arguments.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// (a, b) = (p*n, p*q) with gcd(n, q) = 1; p is gcd(a, b).
struct CoprimeTriple {
  std::uint64_t p = 1;
  std::uint64_t n = 1;
  std::uint64_t q = 1;

  std::pair<std::uint64_t, std::uint64_t> reconstruct() const;
  friend bool operator==(const CoprimeTriple&, const CoprimeTriple&) = default;
};

CoprimeTriple coprime_decompose(std::uint64_t a, std::uint64_t b);

using DivisorPair = std::pair<std::uint64_t, std::uint64_t>;

/// All ordered (a, b) with a*b = n, ascending in a.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);
std::vector<DivisorPair> divisor_pairs(std::uint64_t n);
std::vector<DivisorPair> divisor_pairs(const Factorization& f);

/// Ordered (a, b) with a*b = n and gcd(a, b) = 1, ascending in a. There are
/// 2^omega(n) of them.
std::vector<DivisorPair> unitary_divisor_pairs(std::uint64_t n);
std::vector<DivisorPair> unitary_divisor_pairs(const Factorization& f);

}  // namespace unitary
