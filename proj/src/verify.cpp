#include "unitary/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "unitary/axioms.hpp"
#include "unitary/characters.hpp"
#include "unitary/funcspec.hpp"

namespace unitary {

namespace {

constexpr double kExactTolerance = 1e-12;
constexpr double kBoxTolerance = 1e-9;

DirichletCharacter character_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(fmt::format("character spec '{}' should be K:J", spec));
  }
  const std::uint64_t k = std::stoull(spec.substr(0, colon));
  const std::size_t j = std::stoull(spec.substr(colon + 1));
  auto group = character_group(k);
  if (j >= group.size()) {
    throw std::invalid_argument(fmt::format("no character {} mod {}", j, k));
  }
  return group[j];
}

// Worst-case comparison of two sides over 1..bound (or 2..bound).
struct Worst {
  std::uint64_t n = 0;
  Complex lhs, rhs;
  double abs_error = 0.0;
  double rel_error = 0.0;
};

Worst scan(std::uint64_t first, std::uint64_t bound,
           const std::function<std::pair<Complex, Complex>(std::uint64_t)>& sides,
           bool by_relative) {
  Worst w;
  for (std::uint64_t n = first; n <= bound; ++n) {
    auto [l, r] = sides(n);
    const double abs = std::abs(l - r);
    const double rel = abs / std::max(1.0, std::abs(r));
    if (w.n == 0 || (by_relative ? rel > w.rel_error : abs > w.abs_error)) {
      w = {n, l, r, abs, rel};
    }
  }
  return w;
}

ReportRow scan_row(std::string identity, const Worst& w, double tol, bool by_relative) {
  ReportRow row;
  row.identity = std::move(identity);
  row.params["worst_n"] = w.n;
  row.lhs = w.lhs;
  row.rhs = w.rhs;
  row.abs_error = w.abs_error;
  row.rel_error = w.rel_error;
  row.tol = tol;
  const double err = by_relative ? w.rel_error : w.abs_error;
  row.status = err <= tol ? CheckStatus::kPass : CheckStatus::kFail;
  return row;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ReportRow> run_fixed(const VerifyJob& job) {
  std::vector<ReportRow> rows;
  const std::string& id = job.identity;
  if (id == "ring-axioms") {
    return to_rows(check_ring_axioms(weight_from_name(job.weight), job.bound));
  }
  if (id == "box-characters") {
    for (std::uint64_t k : job.moduli) {
      const auto box = box_over_characters_function(k);
      auto w = scan(2, job.bound,
                    [&](std::uint64_t a) { return std::pair{box(a), box_closed_form(k, a)}; },
                    false);
      auto row = scan_row(id, w, job.tolerance.value_or(kBoxTolerance), false);
      row.params["k"] = k;
      row.params["bound"] = job.bound;
      rows.push_back(std::move(row));
    }
    return rows;
  }
  if (id == "product-formula") {
    const auto f = random_multiplicative(derive_seed(job.seed, 0));
    const auto g = random_multiplicative(derive_seed(job.seed, 1));
    const auto box = unitary_convolve(f, g);
    auto w = scan(1, job.bound,
                  [&](std::uint64_t n) {
                    return std::pair{box(n), unitary_convolve_bruteforce(f, g, n)};
                  },
                  true);
    auto row = scan_row(id, w, job.tolerance.value_or(kExactTolerance), true);
    row.params["functions"] = {f.label(), g.label()};
    row.params["bound"] = job.bound;
    row.seed = job.seed;
    rows.push_back(std::move(row));
    return rows;
  }
  if (id == "inverse-law") {
    const auto f = random_multiplicative(derive_seed(job.seed, 0));
    const auto prod = unitary_convolve(f, unitary_inverse(f));
    const auto d = delta1();
    auto w = scan(1, job.bound, [&](std::uint64_t n) { return std::pair{prod(n), d(n)}; }, false);
    auto row = scan_row(id, w, job.tolerance.value_or(kExactTolerance), false);
    row.params["functions"] = {f.label()};
    row.params["bound"] = job.bound;
    row.seed = job.seed;
    rows.push_back(std::move(row));
    return rows;
  }
  return rows;
}

using SeriesCheck = std::function<std::vector<IdentityReport>(SeriesPoint, const SummationConfig&)>;

SeriesCheck series_check(const VerifyJob& job) {
  const std::string& id = job.identity;
  auto one_report = [](auto fn) -> SeriesCheck {
    return [fn](SeriesPoint s, const SummationConfig& cfg) {
      return std::vector<IdentityReport>{fn(s, cfg)};
    };
  };
  if (id == "hardy") {
    return one_report([](SeriesPoint s, const SummationConfig& c) {
      return hardy_identity_check(s.x, c);
    });
  }
  if (id == "zeta-cosine") return one_report(zeta_cosine_check);
  if (id == "omega-series") return one_report(omega_series_check);
  if (id == "omega-reciprocal") {
    return [](SeriesPoint s, const SummationConfig& c) {
      auto both = omega_reciprocal_check(s, c);
      return std::vector<IdentityReport>(both.begin(), both.end());
    };
  }
  if (id == "lseries-factored" || id == "lseries-euler" || id == "euler-product-L") {
    auto chi = character_from_spec(job.character);
    auto fn = id == "lseries-factored" ? lseries_factored_check
              : id == "lseries-euler"  ? lseries_euler_check
                                       : euler_product_L_check;
    return one_report([chi, fn](SeriesPoint s, const SummationConfig& c) { return fn(chi, s, c); });
  }
  if (id == "product" || id == "conj") {
    auto f = parse_function(job.f);
    auto g = parse_function(job.g);
    auto fn = id == "product" ? product_identity_check : conj_identity_check;
    return one_report(
        [f, g, fn](SeriesPoint s, const SummationConfig& c) { return fn(f, g, s, c); });
  }
  if (id == "modsq" || id == "cesaro-direct") {
    auto f = parse_function(job.f);
    auto fn = id == "modsq" ? modsq_identity_check : cesaro_direct_check;
    return one_report([f, fn](SeriesPoint s, const SummationConfig& c) { return fn(f, s, c); });
  }
  if (id == "euler-complement") {
    auto f = parse_function(job.f);
    auto primes = parse_prime_set(job.primes);
    return one_report([f, primes](SeriesPoint s, const SummationConfig& c) {
      return euler_complement_check(f, primes, s, c);
    });
  }
  return {};
}

bool is_fixed(const std::string& id) {
  return id == "ring-axioms" || id == "box-characters" || id == "product-formula" ||
         id == "inverse-law";
}

}  // namespace

const std::vector<IdentityInfo>& list_identities() {
  static const std::vector<IdentityInfo> infos = {
      {"hardy", "zeta(x)^2 = zeta(2x) sum 2^omega(m)/m^x", "--x --N"},
      {"zeta-cosine", "|zeta(s)|^2 = zeta(2x) sum 2^omega(m) prod cos(y ln p^v) / m^x",
       "--x --y --N"},
      {"lseries-factored", "|L(s,chi)|^2 direct vs factored through Q", "--chi --x --y --N"},
      {"lseries-euler", "|L(s,chi)|^2 direct vs Euler product over Q", "--chi --x --y --N --P"},
      {"euler-product-L", "L(s,chi) Euler product vs partial sum", "--chi --x --y --N --P"},
      {"product", "D(F,s) D(G,s) = D(F x G, 2s) D(F box G, s)", "--f --g --x --y --N"},
      {"conj", "D(F,s) D(G,conj s) = D(F x G, 2x) D(F n^-iy box G n^iy, x)",
       "--f --g --x --y --N"},
      {"modsq", "|D(F,s)|^2 = D(|F|^2, 2x) D(F n^-iy box conj F n^iy, x)", "--f --x --y --N"},
      {"euler-complement", "D(1_A x F, s) D(1_notA x F, s) = D(F, s)",
       "--f --primes --x --y --N"},
      {"omega-series", "P(s) zeta(s) = sum omega(n)/n^s", "--x --y --N --P"},
      {"omega-reciprocal", "both 1/omega rearrangements = zeta(s) - 1", "--x --y --N --P"},
      {"cesaro-direct", "Cesaro mean vs direct partial sum of D(F,s)", "--f --x --y --N"},
      {"ring-axioms", "conditions on W for a commutative ring, first counterexamples",
       "--weight --bound"},
      {"box-characters", "box over all characters mod k vs closed form", "--moduli --bound"},
      {"product-formula", "unitary_convolve vs coprime-pair sum for seeded F, G",
       "--seed --bound"},
      {"inverse-law", "F box inv(F) = delta1 for seeded F", "--seed --bound"},
  };
  return infos;
}

WeightFunction weight_from_name(const std::string& name) {
  if (name == "coprime") return coprime_weight();
  if (name == "ones") return ones_weight();
  if (name.starts_with("scaled:")) return scaled_coprime_weight(std::stod(name.substr(7)));
  return load_weight_table(name);
}

std::vector<ReportRow> run_verify(const VerifyJob& job) {
  const auto& infos = list_identities();
  if (std::none_of(infos.begin(), infos.end(),
                   [&](const IdentityInfo& i) { return i.name == job.identity; })) {
    std::string names;
    for (const auto& i : infos) names += (names.empty() ? "" : ", ") + i.name;
    throw std::invalid_argument(
        fmt::format("unknown identity '{}'; available: {}", job.identity, names));
  }
  if (job.tolerance && !(*job.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (is_fixed(job.identity)) return run_fixed(job);

  if (job.xs.empty() || job.ys.empty() || job.Ns.empty() || job.Ps.empty()) {
    throw std::invalid_argument("parameter grid is empty");
  }
  const auto check = series_check(job);
  std::vector<ReportRow> rows;
  for (double x : job.xs) {
    for (double y : job.ys) {
      for (std::uint64_t N : job.Ns) {
        for (std::uint64_t P : job.Ps) {
          SummationConfig cfg = job.config;
          cfg.N = N;
          cfg.P = P;
          cfg.tolerance = job.tolerance;
          for (auto& report : check(SeriesPoint{x, y}, cfg)) {
            report.seed = job.seed;
            rows.push_back(to_row(report));
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace unitary
