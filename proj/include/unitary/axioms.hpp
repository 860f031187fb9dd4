#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitary/mfunc.hpp"

namespace unitary {

enum class Axiom {
  kCommutativity,   // W(a,b) = W(b,a)
  kStability,       // W(a,b) W(c,d) = W(ac,bd) whenever gcd(ab, cd) = 1
  kNeutralElement,  // W(1, p^n) = 1
  kAssociativity,   // W(a,b) W(ab,c) = W(b,c) W(bc,a)
  kDistributivity,  // [1_{p^l} box 1_{p^f}] x 1_{p^n} = [1_{p^l} x 1_{p^n}] box [1_{p^f} x 1_{p^n}]
};

inline constexpr Axiom kAllAxioms[] = {Axiom::kCommutativity, Axiom::kStability,
                                       Axiom::kNeutralElement, Axiom::kAssociativity,
                                       Axiom::kDistributivity};

std::string_view axiom_name(Axiom axiom);

struct Counterexample {
  std::vector<std::uint64_t> witness;
  Complex lhs;
  Complex rhs;
};

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  std::uint64_t cases_checked = 0;
  std::optional<Counterexample> counterexample;
};

struct AxiomReport {
  std::string weight_label;
  std::uint64_t bound = 0;
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult& result(Axiom axiom) const;
};

inline constexpr double kAxiomTolerance = 1e-12;

/// Checks the five conditions on W that make (M, box_W, x) a commutative ring,
/// over every argument tuple within `bound`:
///   commutativity   a, b <= bound
///   stability       a*b <= bound, c*d <= bound
///   neutral element prime powers p^n <= bound, then (1, 1)
///   associativity   a, b, c <= bound
///   distributivity  prime powers p^n <= bound, every split l + f = n
/// Each failed axiom carries its first counterexample in that iteration order.
AxiomReport check_ring_axioms(const WeightFunction& w, std::uint64_t bound);

/// Re-evaluates the two sides of `axiom` at a witness tuple.
std::pair<Complex, Complex> evaluate_axiom(const WeightFunction& w, Axiom axiom,
                                           std::span<const std::uint64_t> witness);

}  // namespace unitary
