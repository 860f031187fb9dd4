#pragma once

// The ring of multiplicative functions under unitary convolution (box) and
// pointwise product (times).

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitary/arith.hpp"

namespace unitary {

using Complex = std::complex<double>;

/// Complex-valued multiplicative function, stored as its rule on prime powers.
///
/// Values at prime powers are memoized in a bounded, internally synchronized
/// cache, so a function may be evaluated from several threads at once. Copies
/// share the rule and the cache.
class MultiplicativeFunction {
 public:
  using Rule = std::function<Complex(std::uint64_t p, unsigned v)>;

  static constexpr std::size_t kDefaultCacheCapacity = 1 << 16;

  MultiplicativeFunction(std::string label, Rule rule, bool completely_multiplicative = false,
                         std::size_t cache_capacity = kDefaultCacheCapacity);

  const std::string& label() const;
  bool completely_multiplicative() const;

  /// Value at p^v for v >= 1; the value at p^0 is 1.
  Complex at_prime_power(std::uint64_t p, unsigned v) const;
  Complex operator()(const Factorization& f) const;
  Complex operator()(std::uint64_t n) const;

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

/// Arithmetic function with no multiplicativity promise. This is what a
/// general W-convolution produces.
class ArithmeticFunction {
 public:
  using Eval = std::function<Complex(std::uint64_t n)>;

  ArithmeticFunction(std::string label, Eval eval);

  const std::string& label() const { return label_; }
  Complex operator()(std::uint64_t n) const;

 private:
  std::string label_;
  Eval eval_;
};

/// Weight W on pairs of positive integers.
struct WeightFunction {
  std::string label;
  std::function<Complex(std::uint64_t a, std::uint64_t b)> rule;

  Complex operator()(std::uint64_t a, std::uint64_t b) const { return rule(a, b); }
};

WeightFunction coprime_weight();
WeightFunction ones_weight();
WeightFunction scaled_coprime_weight(Complex scale);
/// Entries override the coprime indicator on the listed pairs.
WeightFunction table_weight(std::string label,
                            std::vector<std::pair<DivisorPair, Complex>> entries);
/// Reads lines "a b re im"; blank lines and lines starting with '#' are skipped.
WeightFunction load_weight_table(const std::string& path);

Complex evaluate(const MultiplicativeFunction& f, std::uint64_t n);

/// [F box_W G](m) = sum over a*b = m of F(a) G(b) W(a, b).
ArithmeticFunction w_convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                              const WeightFunction& w);

/// Unitary convolution: prime-power rule F(p^v) + G(p^v).
MultiplicativeFunction unitary_convolve(const MultiplicativeFunction& f,
                                        const MultiplicativeFunction& g);
/// Iterated unitary convolution of every function in fs; delta1 when empty.
MultiplicativeFunction unitary_convolve_all(std::span<const MultiplicativeFunction> fs);
/// Reference evaluation of [F box G](n) straight from the coprime-pair sum.
Complex unitary_convolve_bruteforce(const MultiplicativeFunction& f,
                                    const MultiplicativeFunction& g, std::uint64_t n);

MultiplicativeFunction pointwise_product(const MultiplicativeFunction& f,
                                         const MultiplicativeFunction& g);

/// Unique box-inverse, I_F(p^v) = -F(p^v). Globally I_F = (-1)^omega x F.
MultiplicativeFunction unitary_inverse(const MultiplicativeFunction& f);

MultiplicativeFunction conjugate(const MultiplicativeFunction& f);
MultiplicativeFunction real_part(const MultiplicativeFunction& f);
MultiplicativeFunction imag_part(const MultiplicativeFunction& f);
MultiplicativeFunction scale_values(const MultiplicativeFunction& f, Complex c);

/// 1_S: one on the listed (prime, exponent) pairs, zero on other prime powers.
MultiplicativeFunction indicator(std::set<std::pair<std::uint64_t, unsigned>> s);
/// 1_s with S read off the factorization of s.
MultiplicativeFunction indicator_of_integer(std::uint64_t s);

// Catalog.
MultiplicativeFunction one();
MultiplicativeFunction delta1();
MultiplicativeFunction identity();
MultiplicativeFunction omega_power(Complex c);
MultiplicativeFunction neg_one_omega();
MultiplicativeFunction inv_radical();
MultiplicativeFunction cosa(double y);
MultiplicativeFunction sina(double y);
MultiplicativeFunction power_iy(double y);
MultiplicativeFunction sigma_hat();
MultiplicativeFunction phi();
/// Completely multiplicative indicator of numbers whose primes all lie in
/// `primes` (or, for the complement, none of them do).
MultiplicativeFunction smooth_indicator(std::set<std::uint64_t> primes);
MultiplicativeFunction rough_indicator(std::set<std::uint64_t> primes);
MultiplicativeFunction restrict_to_primes(const std::set<std::uint64_t>& primes,
                                          const MultiplicativeFunction& f);

/// n -> cos(y ln r) and sin(y ln r) on positive rationals r = num/den. These
/// are the plain (non-multiplicative) functions the trigonometric identities
/// are stated for.
double cosa_plain(double y, double num, double den = 1.0);
double sina_plain(double y, double num, double den = 1.0);

/// [Cosa_y box i^omega x Sina_y](m), which reconstructs m^{iy}.
Complex reconstruct_power(std::uint64_t m, double y);

/// Seeded random function with |F(p^v)| <= max_abs. Values depend only on
/// (seed, p, v), not on evaluation order.
MultiplicativeFunction random_multiplicative(std::uint64_t seed, double max_abs = 1.0);
MultiplicativeFunction random_completely_multiplicative(std::uint64_t seed, double max_abs = 1.0);
/// Values are Gaussian integers with both parts in [-range, range].
MultiplicativeFunction random_gaussian_integer(std::uint64_t seed, int range = 3);

/// True when F(p^v) = F(p)^v for all primes p <= prime_limit and v <= max_exp.
bool check_complete_multiplicativity(const MultiplicativeFunction& f,
                                     std::uint64_t prime_limit = 50, unsigned max_exp = 6,
                                     double tol = 1e-12);

}  // namespace unitary
