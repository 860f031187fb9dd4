#include "unitary/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace unitary {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kCommutativity: return "commutativity";
    case Axiom::kStability: return "stability";
    case Axiom::kNeutralElement: return "neutral-element";
    case Axiom::kAssociativity: return "associativity-cocycle";
    case Axiom::kDistributivity: return "distributivity";
  }
  return "unknown";
}

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const AxiomResult& AxiomReport::result(Axiom axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return r;
  }
  throw std::out_of_range(fmt::format("axiom {} not in report", axiom_name(axiom)));
}

namespace {

std::uint64_t ipow(std::uint64_t p, std::uint64_t e) { return checked_pow(p, static_cast<unsigned>(e)); }

// Same-prime witness family: both sides evaluated at p^n through actual
// W-convolutions of prime-power indicators.
std::pair<Complex, Complex> distributivity_sides(const WeightFunction& w, std::uint64_t p,
                                                 unsigned l, unsigned f) {
  const unsigned n = l + f;
  const std::uint64_t pn = ipow(p, n);
  auto ind_l = indicator_of_integer(ipow(p, l));
  auto ind_f = indicator_of_integer(ipow(p, f));
  auto ind_n = indicator_of_integer(pn);
  Complex lhs = w_convolve(ind_l, ind_f, w)(pn) * ind_n(pn);
  Complex rhs = w_convolve(pointwise_product(ind_l, ind_n), pointwise_product(ind_f, ind_n), w)(pn);
  return {lhs, rhs};
}

bool differs(Complex a, Complex b) { return std::abs(a - b) > kAxiomTolerance; }

class Recorder {
 public:
  explicit Recorder(Axiom axiom) { result_.axiom = axiom; }

  // The witness is only materialized for the first failure.
  template <class... Args>
  void check(Complex lhs, Complex rhs, Args... witness) {
    ++result_.cases_checked;
    if (result_.passed && differs(lhs, rhs)) {
      result_.passed = false;
      result_.counterexample =
          Counterexample{{static_cast<std::uint64_t>(witness)...}, lhs, rhs};
    }
  }

  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_with_product_at_most(std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 1; a <= bound; ++a) {
    for (std::uint64_t b = 1; a * b <= bound; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t bound) {
  std::vector<PrimePower> out;
  for (std::uint64_t p : sieve_primes(bound)) {
    std::uint64_t q = p;
    for (unsigned v = 1;; ++v) {
      out.push_back({p, v});
      if (q > bound / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.value() < b.value(); });
  return out;
}

}  // namespace

std::pair<Complex, Complex> evaluate_axiom(const WeightFunction& w, Axiom axiom,
                                           std::span<const std::uint64_t> x) {
  auto need = [&](std::size_t k) {
    if (x.size() != k) {
      throw std::invalid_argument(
          fmt::format("{} witness needs {} entries", axiom_name(axiom), k));
    }
  };
  switch (axiom) {
    case Axiom::kCommutativity:
      need(2);
      return {w(x[0], x[1]), w(x[1], x[0])};
    case Axiom::kStability:
      need(4);
      return {w(x[0], x[1]) * w(x[2], x[3]), w(x[0] * x[2], x[1] * x[3])};
    case Axiom::kNeutralElement:
      need(2);
      return {w(x[0], x[1]), 1.0};
    case Axiom::kAssociativity:
      need(3);
      return {w(x[0], x[1]) * w(x[0] * x[1], x[2]), w(x[1], x[2]) * w(x[1] * x[2], x[0])};
    case Axiom::kDistributivity: {
      // Witness is (p^l, p^f) with a shared prime, or with one side equal to 1.
      need(2);
      std::uint64_t base = x[0] > 1 ? x[0] : x[1];
      if (base == 1) throw std::invalid_argument("distributivity witness needs a prime power");
      std::uint64_t p = factorize(base).factors()[0].p;
      unsigned l = x[0] > 1 ? valuation(x[0], p) : 0;
      unsigned f = x[1] > 1 ? valuation(x[1], p) : 0;
      return distributivity_sides(w, p, l, f);
    }
  }
  throw std::invalid_argument("unknown axiom");
}

AxiomReport check_ring_axioms(const WeightFunction& w, std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("axiom bound must be at least 2");
  AxiomReport report;
  report.weight_label = w.label;
  report.bound = bound;

  {
    Recorder rec(Axiom::kCommutativity);
    for (std::uint64_t a = 1; a <= bound; ++a) {
      for (std::uint64_t b = a + 1; b <= bound; ++b) rec.check(w(a, b), w(b, a), a, b);
    }
    report.results.push_back(rec.take());
  }

  {
    Recorder rec(Axiom::kStability);
    auto pairs = pairs_with_product_at_most(bound);
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, d] : pairs) {
        if (std::gcd(a * b, c * d) != 1) continue;
        rec.check(w(a, b) * w(c, d), w(a * c, b * d), a, b, c, d);
      }
    }
    report.results.push_back(rec.take());
  }

  {
    Recorder rec(Axiom::kNeutralElement);
    for (const auto& pp : prime_powers_up_to(bound)) {
      std::uint64_t q = pp.value();
      rec.check(w(1, q), 1.0, 1, q);
    }
    rec.check(w(1, 1), 1.0, 1, 1);
    report.results.push_back(rec.take());
  }

  {
    Recorder rec(Axiom::kAssociativity);
    for (std::uint64_t a = 1; a <= bound; ++a) {
      for (std::uint64_t b = 1; b <= bound; ++b) {
        const Complex wab = w(a, b);
        for (std::uint64_t c = 1; c <= bound; ++c) {
          rec.check(wab * w(a * b, c), w(b, c) * w(b * c, a), a, b, c);
        }
      }
    }
    report.results.push_back(rec.take());
  }

  {
    Recorder rec(Axiom::kDistributivity);
    for (const auto& [p, n] : prime_powers_up_to(bound)) {
      for (unsigned l = 0; l <= n; ++l) {
        const unsigned f = n - l;
        auto [lhs, rhs] = distributivity_sides(w, p, l, f);
        rec.check(lhs, rhs, ipow(p, l), ipow(p, f));
      }
    }
    report.results.push_back(rec.take());
  }

  return report;
}

}  // namespace unitary
