#include "unitary/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace unitary {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
  }
  return r;
}

struct Component {
  std::uint64_t q;      // prime-power modulus this component lives in
  std::uint64_t order;  // cyclic order
  std::vector<std::int64_t> dlog;  // discrete log of r mod q, -1 for non-units
};

std::uint64_t primitive_root(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t order = q / p * (p - 1);
  auto fac = factorize(order);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const auto& pp : fac.factors()) {
      if (powmod(g, order / pp.p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error(fmt::format("no primitive root mod {}", q));
}

Component cyclic_component(std::uint64_t q, std::uint64_t order, std::uint64_t g) {
  Component c{q, order, std::vector<std::int64_t>(q, -1)};
  std::uint64_t x = 1 % q;
  for (std::uint64_t e = 0; e < order; ++e) {
    c.dlog[x] = static_cast<std::int64_t>(e);
    x = mulmod(x, g, q);
  }
  return c;
}

std::vector<Component> components(std::uint64_t k) {
  std::vector<Component> out;
  if (k == 1) return out;
  for (const auto& [p, e] : factorize(k).factors()) {
    const std::uint64_t q = checked_pow(p, e);
    if (p != 2) {
      out.push_back(cyclic_component(q, q / p * (p - 1), primitive_root(p, q)));
    } else if (e == 2) {
      out.push_back(cyclic_component(4, 2, 3));
    } else if (e >= 3) {
      // (Z/2^e)* = <-1> x <5>; r = (-1)^a 5^b.
      const std::uint64_t half = q / 4;
      Component sign{q, 2, std::vector<std::int64_t>(q, -1)};
      Component five{q, half, std::vector<std::int64_t>(q, -1)};
      std::uint64_t x = 1;
      for (std::uint64_t b = 0; b < half; ++b) {
        sign.dlog[x] = 0;
        five.dlog[x] = static_cast<std::int64_t>(b);
        sign.dlog[q - x] = 1;
        five.dlog[q - x] = static_cast<std::int64_t>(b);
        x = mulmod(x, 5, q);
      }
      out.push_back(std::move(sign));
      out.push_back(std::move(five));
    }
  }
  return out;
}

std::vector<MultiplicativeFunction> group_functions(std::uint64_t k) {
  std::vector<MultiplicativeFunction> fs;
  for (const auto& chi : character_group(k)) fs.push_back(char_to_multiplicative(chi));
  return fs;
}

void require_modulus_at_least_two(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace

Complex root_of_unity(std::uint64_t t, std::uint64_t L) {
  t %= L;
  if ((4 * t) % L == 0) {
    switch (4 * t / L) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(L));
}

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::size_t index,
                                       std::uint64_t group_exponent,
                                       std::vector<unsigned> exponent_tuple,
                                       std::vector<std::int64_t> phases)
    : modulus_(modulus),
      index_(index),
      exponent_(group_exponent),
      tuple_(std::move(exponent_tuple)),
      phases_(std::move(phases)) {}

std::optional<std::uint64_t> DirichletCharacter::phase(std::uint64_t n) const {
  std::int64_t t = phases_[n % modulus_];
  if (t < 0) return std::nullopt;
  return static_cast<std::uint64_t>(t);
}

Complex DirichletCharacter::operator()(std::uint64_t n) const {
  auto t = phase(n);
  return t ? root_of_unity(*t, exponent_) : Complex{0.0, 0.0};
}

std::string DirichletCharacter::label() const { return fmt::format("chi:{}:{}", modulus_, index_); }

bool DirichletCharacter::same_values(const DirichletCharacter& other) const {
  return modulus_ == other.modulus_ && phases_ == other.phases_;
}

std::vector<std::int64_t> DirichletCharacter::product_phases(const DirichletCharacter& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("character moduli differ");
  std::vector<std::int64_t> out(phases_.size());
  const auto L = static_cast<std::int64_t>(exponent_);
  for (std::size_t r = 0; r < phases_.size(); ++r) {
    out[r] = phases_[r] < 0 ? -1 : (phases_[r] + other.phases_[r]) % L;
  }
  return out;
}

std::vector<std::uint64_t> unit_group_structure(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("modulus must be positive");
  std::vector<std::uint64_t> out;
  for (const auto& c : components(k)) out.push_back(c.order);
  return out;
}

std::vector<DirichletCharacter> character_group(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("modulus must be positive");
  const auto comps = components(k);
  std::uint64_t L = 1;
  for (const auto& c : comps) L = std::lcm(L, c.order);

  // Per residue, its discrete log on each component (empty for non-units).
  std::vector<std::vector<std::int64_t>> logs(k);
  for (std::uint64_t r = 0; r < k; ++r) {
    if (std::gcd(r, k) != 1) continue;
    for (const auto& c : comps) logs[r].push_back(c.dlog[r % c.q]);
    if (comps.empty()) logs[r].push_back(0);
  }

  std::vector<DirichletCharacter> out;
  std::vector<unsigned> tuple(comps.size(), 0);
  for (std::size_t index = 0;; ++index) {
    std::vector<std::int64_t> phases(k, -1);
    for (std::uint64_t r = 0; r < k; ++r) {
      if (logs[r].empty()) continue;
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        t += static_cast<std::uint64_t>(tuple[i]) * static_cast<std::uint64_t>(logs[r][i]) %
             comps[i].order * (L / comps[i].order);
      }
      phases[r] = static_cast<std::int64_t>(t % L);
    }
    out.emplace_back(k, index, L, tuple, std::move(phases));

    // Lexicographic successor; the first component is most significant.
    std::size_t i = comps.size();
    while (i > 0) {
      --i;
      if (++tuple[i] < comps[i].order) break;
      tuple[i] = 0;
      if (i == 0) return out;
    }
    if (comps.empty()) return out;
  }
}

std::optional<std::size_t> find_character(std::span<const DirichletCharacter> group,
                                          std::span<const std::int64_t> phases) {
  for (const auto& chi : group) {
    if (std::equal(chi.phases().begin(), chi.phases().end(), phases.begin(), phases.end())) {
      return chi.index();
    }
  }
  return std::nullopt;
}

MultiplicativeFunction char_to_multiplicative(const DirichletCharacter& chi) {
  return MultiplicativeFunction(
      chi.label(),
      [chi](std::uint64_t p, unsigned v) -> Complex {
        auto t = chi.phase(p);
        if (!t) return 0.0;
        const std::uint64_t L = chi.group_exponent();
        return root_of_unity(mulmod(*t, v % L, L), L);
      },
      true);
}

Complex residue_sum(const DirichletCharacter& chi) {
  Complex s = 0.0;
  for (std::uint64_t l = 0; l < chi.modulus(); ++l) s += chi(l);
  return s;
}

MultiplicativeFunction box_over_characters_function(std::uint64_t k) {
  require_modulus_at_least_two(k);
  auto fs = group_functions(k);
  return unitary_convolve_all(fs);
}

Complex box_over_characters(std::uint64_t k, std::uint64_t a) {
  if (a < 2) throw std::invalid_argument("argument must be at least 2");
  return box_over_characters_function(k)(a);
}

Complex box_closed_form(std::uint64_t k, std::uint64_t a) {
  require_modulus_at_least_two(k);
  if (a < 2) throw std::invalid_argument("argument must be at least 2");
  const auto f = factorize(a);
  for (const auto& pp : f.factors()) {
    if (pp.value() % k != 1) return 0.0;
  }
  return std::pow(static_cast<double>(euler_phi(k)), static_cast<double>(f.omega()));
}

Complex product_over_characters(std::uint64_t k, std::uint64_t l) {
  require_modulus_at_least_two(k);
  if (std::gcd(l % k, k) != 1) return 0.0;
  std::uint64_t L = 0;
  std::uint64_t t = 0;
  for (const auto& chi : character_group(k)) {
    L = chi.group_exponent();
    t = (t + *chi.phase(l)) % L;
  }
  return root_of_unity(t, L);
}

}  // namespace unitary
