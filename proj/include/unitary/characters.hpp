#pragma once

// Dirichlet characters mod k, built from the cyclic decomposition of (Z/kZ)*.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitary/mfunc.hpp"

namespace unitary {

/// A character stores, for each residue r mod k, the exponent t with
/// chi(r) = e^{2 pi i t / L}, L the exponent of (Z/kZ)*, or nothing when
/// gcd(r, k) > 1. Values that are fourth roots of unity come out exact.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t modulus, std::size_t index, std::uint64_t group_exponent,
                     std::vector<unsigned> exponent_tuple, std::vector<std::int64_t> phases);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t index() const { return index_; }
  std::uint64_t group_exponent() const { return exponent_; }
  /// Exponents on each cyclic component, in component order.
  std::span<const unsigned> exponent_tuple() const { return tuple_; }
  bool is_principal() const { return index_ == 0; }

  std::optional<std::uint64_t> phase(std::uint64_t n) const;
  Complex operator()(std::uint64_t n) const;
  std::string label() const;

  /// Table equality of the phase vectors.
  bool same_values(const DirichletCharacter& other) const;
  /// Pointwise product as a phase table; the index is looked up by the caller.
  std::vector<std::int64_t> product_phases(const DirichletCharacter& other) const;
  std::span<const std::int64_t> phases() const { return phases_; }

 private:
  std::uint64_t modulus_;
  std::size_t index_;
  std::uint64_t exponent_;
  std::vector<unsigned> tuple_;
  std::vector<std::int64_t> phases_;  // -1 marks a non-unit residue
};

/// e^{2 pi i t / L}, exact when 4t is a multiple of L.
Complex root_of_unity(std::uint64_t t, std::uint64_t L);

/// Cyclic components of (Z/kZ)*: their orders, in the order used for
/// exponent tuples (ascending prime; for 2^e with e >= 3, the -1 part first).
std::vector<std::uint64_t> unit_group_structure(std::uint64_t k);

/// All phi(k) characters. Index 0 is principal; the rest follow the
/// lexicographic order of exponent tuples. Rejects k = 0.
std::vector<DirichletCharacter> character_group(std::uint64_t k);

/// Index of the enumerated character with this phase table, if any.
std::optional<std::size_t> find_character(std::span<const DirichletCharacter> group,
                                          std::span<const std::int64_t> phases);

MultiplicativeFunction char_to_multiplicative(const DirichletCharacter& chi);

/// Sum of chi(l) over a full residue system.
Complex residue_sum(const DirichletCharacter& chi);

/// The function [box over all characters mod k], built once for repeated evaluation.
MultiplicativeFunction box_over_characters_function(std::uint64_t k);
/// [box_{j} chi_j](a) by iterated unitary convolution. Requires k >= 2, a >= 2.
Complex box_over_characters(std::uint64_t k, std::uint64_t a);
/// phi(k)^omega(a) when every unitary component p^v of a is 1 mod k, else 0.
Complex box_closed_form(std::uint64_t k, std::uint64_t a);

/// prod_j chi_j(l) mod k. Requires k >= 2.
Complex product_over_characters(std::uint64_t k, std::uint64_t l);

}  // namespace unitary
