#include "unitary/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace unitary {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error(fmt::format("integer overflow in {} * {}", a, b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t PrimePower::value() const { return checked_pow(p, v); }

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0) throw std::invalid_argument("factorization of zero");
}

std::uint64_t Factorization::reconstruct() const {
  std::uint64_t out = 1;
  for (const auto& pp : factors_) out = checked_mul(out, pp.value());
  return out;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, v] : factors_) {
    if (!out.empty()) out += " * ";
    out += v == 1 ? fmt::format("{}", p) : fmt::format("{}^{}", p, v);
  }
  return out;
}

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
  if (limit_ >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("sieve limit must be below 2^32");
  }
  spf_.assign(limit_ + 1, 0);
  // Linear sieve: every composite is struck exactly once by its smallest prime.
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    for (std::uint64_t p : primes_) {
      if (p > spf_[i] || i * p > limit_) break;
      spf_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
}

Factorization Sieve::factorize(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<PrimePower> out;
  std::uint64_t m = n;

  auto strip = [&](std::uint64_t p) {
    unsigned v = 0;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
    if (v > 0) out.push_back({p, v});
  };

  if (m > limit_) {
    // Trial division until the cofactor drops into the table.
    for (std::uint64_t p : primes_) {
      if (m <= limit_) break;
      if (p > m / p) break;
      strip(p);
    }
    if (m > limit_) {
      std::uint64_t d = primes_.empty() ? 2 : primes_.back() + 1;
      if (d > 2 && d % 2 == 0) ++d;
      for (; d <= m / d; d += (d == 2 ? 1 : 2)) strip(d);
      if (m > 1) {
        out.push_back({m, 1});
        m = 1;
      }
    }
  }
  while (m > 1) {
    std::uint64_t p = spf_[m];
    strip(p);
  }
  return Factorization(n, std::move(out));
}

bool Sieve::is_prime(std::uint64_t n) const {
  if (n < 2) return false;
  if (n <= limit_) return spf_[n] == n;
  auto f = factorize(n);
  return f.omega() == 1 && f.factors()[0].v == 1;
}

const Sieve& default_sieve() {
  static const Sieve sieve = [] {
    std::uint64_t limit = kDefaultSieveLimit;
    if (const char* env = std::getenv("UNITARY_SIEVE_LIMIT")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') limit = parsed;
    }
    return Sieve(limit);
  }();
  return sieve;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  const Sieve& s = default_sieve();
  if (limit <= s.limit()) {
    auto end = std::upper_bound(s.primes().begin(), s.primes().end(), limit);
    return {s.primes().begin(), end};
  }
  return Sieve(limit).primes();
}

Factorization factorize(std::uint64_t n) { return default_sieve().factorize(n); }

bool is_prime(std::uint64_t n) { return default_sieve().is_prime(n); }

std::size_t omega(std::uint64_t n) { return factorize(n).omega(); }

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t out = 1;
  for (const auto& pp : factorize(n).factors()) out = checked_mul(out, pp.p);
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of 0");
  if (!is_prime(p)) {
    throw std::invalid_argument(fmt::format("valuation base {} is not prime", p));
  }
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (const auto& pp : factorize(n).factors()) out = out / pp.p * (pp.p - 1);
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("gcd arguments must be positive");
  return std::gcd(a, b);
}

std::pair<std::uint64_t, std::uint64_t> CoprimeTriple::reconstruct() const {
  return {checked_mul(p, n), checked_mul(p, q)};
}

CoprimeTriple coprime_decompose(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = gcd(a, b);
  return {g, a / g, b / g};
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, v] : f.factors()) {
    std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= v; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

std::vector<DivisorPair> divisor_pairs(const Factorization& f) {
  std::vector<DivisorPair> out;
  for (std::uint64_t d : divisors(f)) out.emplace_back(d, f.n() / d);
  return out;
}

std::vector<DivisorPair> divisor_pairs(std::uint64_t n) {
  return divisor_pairs(factorize(n));
}

std::vector<DivisorPair> unitary_divisor_pairs(const Factorization& f) {
  std::vector<std::uint64_t> firsts{1};
  for (const auto& pp : f.factors()) {
    std::uint64_t q = pp.value();
    std::size_t base = firsts.size();
    for (std::size_t i = 0; i < base; ++i) firsts.push_back(firsts[i] * q);
  }
  std::sort(firsts.begin(), firsts.end());
  std::vector<DivisorPair> out;
  out.reserve(firsts.size());
  for (std::uint64_t a : firsts) out.emplace_back(a, f.n() / a);
  return out;
}

std::vector<DivisorPair> unitary_divisor_pairs(std::uint64_t n) {
  return unitary_divisor_pairs(factorize(n));
}

}  // namespace unitary
