#include "unitary/series.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace unitary {

namespace {

constexpr double kTailConstant = 4.0;
constexpr double kMinTolerance = 1e-9;
// A default tolerance looser than this would let tail noise pass as agreement.
constexpr double kMaxDefaultTolerance = 1e-2;
// Inner Euler-factor sums stop once q^{Mx} passes this.
constexpr double kEulerInnerCutoff = 1e15;

double cesaro_weight(std::uint64_t n, const SummationConfig& cfg) {
  if (cfg.mode == SummationMode::kDirect) return 1.0;
  return static_cast<double>(cfg.N - n + 1) / static_cast<double>(cfg.N);
}

void require_complete(const MultiplicativeFunction& f) {
  if (!f.completely_multiplicative()) {
    throw std::invalid_argument(
        fmt::format("{} is not flagged completely multiplicative", f.label()));
  }
}

std::vector<std::uint8_t> omega_table(std::uint64_t N) {
  std::vector<std::uint8_t> w(N + 1, 0);
  for (std::uint64_t p : sieve_primes(N)) {
    for (std::uint64_t m = p; m <= N; m += p) ++w[m];
  }
  return w;
}

}  // namespace

std::string_view mode_name(SummationMode mode) {
  return mode == SummationMode::kDirect ? "direct" : "cesaro";
}

SummationMode parse_mode(std::string_view name) {
  if (name == "direct") return SummationMode::kDirect;
  if (name == "cesaro") return SummationMode::kCesaro;
  throw std::invalid_argument(fmt::format("unknown summation mode '{}'", name));
}

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

bool in_exploratory_strip(SeriesPoint s) { return s.x <= 1.0; }

void validate(SeriesPoint s, const SummationConfig& cfg) {
  if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
    throw std::invalid_argument("series point must be finite");
  }
  if (cfg.N < 1) throw std::invalid_argument("N must be at least 1");
  if (cfg.P < 2) throw std::invalid_argument("P must be at least 2");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (s.x <= 0.5) {
    throw std::domain_error(fmt::format("Re(s) = {} is at or left of 1/2", s.x));
  }
  if (s.x <= 1.0 && !cfg.exploratory) {
    throw std::domain_error(
        fmt::format("Re(s) = {} needs the exploratory flag (series do not converge)", s.x));
  }
}

double tail_estimate(SeriesPoint s, std::uint64_t N) {
  if (s.x <= 1.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(N);
  return kTailConstant * (1.0 + std::log(n)) * std::pow(n, 1.0 - s.x) / (s.x - 1.0);
}

IdentityReport make_report(std::string identity, SeriesPoint s, const SummationConfig& cfg,
                           std::vector<std::string> labels, Complex lhs, Complex rhs,
                           double extra_tail) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.point = s;
  r.config = cfg;
  r.labels = std::move(labels);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = std::abs(lhs - rhs);
  r.rel_error = std::abs(rhs) > 0.0 ? r.abs_error / std::abs(rhs) : r.abs_error;
  r.tail_bound = tail_estimate(s, cfg.N) + extra_tail;
  r.tol = cfg.tolerance.value_or(
      std::clamp(r.tail_bound, kMinTolerance, kMaxDefaultTolerance));
  r.tail_dominated = r.tail_bound > r.tol;
  if (in_exploratory_strip(s)) {
    r.status = CheckStatus::kNotApplicable;
  } else {
    bool ok = r.abs_error <= r.tol || (std::abs(rhs) > 1.0 && r.rel_error <= r.tol);
    r.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  }
  return r;
}

Complex parallel_sum(std::uint64_t first, std::uint64_t last, unsigned workers,
                     const std::function<Complex(std::uint64_t)>& term) {
  if (last < first) return 0.0;
  const std::uint64_t count = last - first + 1;
  const std::uint64_t w = std::clamp<std::uint64_t>(workers, 1, count);
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    Complex acc = 0.0;
    for (std::uint64_t n = lo; n <= hi; ++n) acc += term(n);
    return acc;
  };
  if (w == 1) return run(first, last);

  std::vector<Complex> partial(w);
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t lo = first + count * i / w;
    const std::uint64_t hi = first + count * (i + 1) / w - 1;
    threads.emplace_back([&, i, lo, hi] {
      try {
        partial[i] = run(lo, hi);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Complex total = 0.0;
  for (const auto& p : partial) total += p;
  return total;
}

Complex power_neg(std::uint64_t n, Complex s) {
  const double ln = std::log(static_cast<double>(n));
  return std::exp(-s * ln);
}

Complex dirichlet_sum(const std::function<Complex(std::uint64_t)>& a, SeriesPoint s,
                      const SummationConfig& cfg) {
  validate(s, cfg);
  const Complex z = s.s();
  return parallel_sum(1, cfg.N, cfg.workers, [&](std::uint64_t n) {
    return cesaro_weight(n, cfg) * a(n) * power_neg(n, z);
  });
}

Complex dirichlet_series(const MultiplicativeFunction& f, SeriesPoint s,
                         const SummationConfig& cfg) {
  return dirichlet_sum([&f](std::uint64_t n) { return f(n); }, s, cfg);
}

Complex zeta_partial(SeriesPoint s, const SummationConfig& cfg) {
  return dirichlet_sum([](std::uint64_t) { return Complex{1.0, 0.0}; }, s, cfg);
}

Complex prime_zeta_partial(SeriesPoint s, std::uint64_t P) {
  Complex acc = 0.0;
  for (std::uint64_t p : sieve_primes(P)) acc += power_neg(p, s.s());
  return acc;
}

Complex euler_product_L(const DirichletCharacter& chi, SeriesPoint s, const SummationConfig& cfg) {
  validate(s, cfg);
  Complex prod = 1.0;
  for (std::uint64_t p : sieve_primes(cfg.P)) prod /= 1.0 - chi(p) * power_neg(p, s.s());
  return prod;
}

double lseries_modsq_direct(const DirichletCharacter& chi, SeriesPoint s,
                            const SummationConfig& cfg) {
  return std::norm(dirichlet_sum([&chi](std::uint64_t n) { return chi(n); }, s, cfg));
}

namespace {

SummationConfig finite_sum_config(std::uint64_t N) {
  SummationConfig cfg;
  cfg.N = N;
  return cfg;
}

std::vector<Complex> character_terms(const DirichletCharacter& chi, SeriesPoint s,
                                     std::uint64_t N) {
  std::vector<Complex> t(N + 1, 0.0);
  for (std::uint64_t n = 1; n <= N; ++n) t[n] = chi(n) * power_neg(n, s.s());
  return t;
}

}  // namespace

double lseries_modsq_double_sum(const DirichletCharacter& chi, SeriesPoint s, std::uint64_t N) {
  validate(s, finite_sum_config(N));
  const auto t = character_terms(chi, s, N);
  Complex acc = 0.0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    for (std::uint64_t q = 1; q <= N; ++q) acc += t[n] * std::conj(t[q]);
  }
  return acc.real();
}

std::vector<std::array<std::uint64_t, 3>> coprime_reindex(std::uint64_t N) {
  std::vector<std::array<std::uint64_t, 3>> out;
  for (std::uint64_t m = 1; m <= N; ++m) {
    for (std::uint64_t k = 1; k <= N; ++k) {
      if (std::gcd(m, k) != 1) continue;
      const std::uint64_t top = std::min(N / m, N / k);
      for (std::uint64_t p = 1; p <= top; ++p) out.push_back({p, m, k});
    }
  }
  return out;
}

double lseries_modsq_reindexed(const DirichletCharacter& chi, SeriesPoint s, std::uint64_t N) {
  validate(s, finite_sum_config(N));
  const auto t = character_terms(chi, s, N);
  Complex acc = 0.0;
  for (const auto& [p, m, k] : coprime_reindex(N)) acc += t[p * m] * std::conj(t[p * k]);
  return acc.real();
}

MultiplicativeFunction q_function(const DirichletCharacter& chi, double y) {
  return MultiplicativeFunction(
      fmt::format("Q[{}]@{}", chi.label(), y), [chi, y](std::uint64_t p, unsigned v) -> Complex {
        auto t = chi.phase(p);
        if (!t) return 0.0;
        const std::uint64_t L = chi.group_exponent();
        const Complex cv = root_of_unity((*t % L) * (v % L) % L, L);
        const double angle = y * v * std::log(static_cast<double>(p));
        return 2.0 * (std::cos(angle) * cv.real() + std::sin(angle) * cv.imag());
      });
}

QForms q_forms(Complex chi_value, double y, double log_prime_power) {
  const double c = std::cos(y * log_prime_power);
  const double s = std::sin(y * log_prime_power);
  const double re = chi_value.real();
  const double im = chi_value.imag();
  const Complex i{0.0, 1.0};
  QForms f{};
  f.dot = 2.0 * (c * re + s * im);
  f.det_real = 2.0 * (c * re - (-im) * s);
  f.det_imag = 2.0 * (c * re - (i * im) * (i * s));
  return f;
}

Complex q_matrix_product(const DirichletCharacter& chi, double y, std::uint64_t n) {
  using Mat = std::array<Complex, 4>;  // row-major 2x2
  const Complex i{0.0, 1.0};
  const double r2 = std::numbers::sqrt2;
  Mat acc{1.0, 0.0, 0.0, 1.0};
  for (const auto& pp : factorize(n).factors()) {
    const Complex cv = chi(pp.value() % chi.modulus());
    const double angle = y * std::log(static_cast<double>(pp.value()));
    const Mat m{r2 * std::cos(angle), i * r2 * cv.imag(), i * r2 * std::sin(angle),
                r2 * cv.real()};
    acc = Mat{acc[0] * m[0] + acc[1] * m[2], acc[0] * m[1] + acc[1] * m[3],
              acc[2] * m[0] + acc[3] * m[2], acc[2] * m[1] + acc[3] * m[3]};
  }
  return acc[0] * acc[3] - acc[1] * acc[2];
}

MultiplicativeFunction q_from_cosa_sina(const DirichletCharacter& chi, double y) {
  const auto x = char_to_multiplicative(chi);
  return pointwise_product(omega_power(2.0),
                           unitary_convolve(pointwise_product(cosa(y), real_part(x)),
                                            pointwise_product(sina(y), imag_part(x))));
}

namespace {

Complex modulus_square_factor(const DirichletCharacter& chi, SeriesPoint s,
                              const SummationConfig& cfg) {
  return dirichlet_sum([&chi](std::uint64_t r) { return Complex{std::norm(chi(r)), 0.0}; },
                       SeriesPoint{2.0 * s.x, 0.0}, cfg);
}

}  // namespace

double lseries_modsq_factored(const DirichletCharacter& chi, SeriesPoint s,
                              const SummationConfig& cfg) {
  validate(s, cfg);
  const Complex first = modulus_square_factor(chi, s, cfg);
  const Complex second = dirichlet_series(q_function(chi, s.y), SeriesPoint{s.x, 0.0}, cfg);
  return (first * second).real();
}

double modsq_euler_product(const DirichletCharacter& chi, SeriesPoint s,
                           const SummationConfig& cfg) {
  validate(s, cfg);
  const Complex first = modulus_square_factor(chi, s, cfg);
  const auto q = q_function(chi, s.y);
  double prod = 1.0;
  for (std::uint64_t p : sieve_primes(cfg.P)) {
    const double lp = std::log(static_cast<double>(p));
    const auto M = static_cast<unsigned>(std::floor(std::log(kEulerInnerCutoff) / (s.x * lp))) + 1;
    double factor = 1.0;
    for (unsigned m = 1; m <= M; ++m) factor += q.at_prime_power(p, m).real() * std::exp(-s.x * m * lp);
    prod *= factor;
  }
  return first.real() * prod;
}

double zeta_modsq_cosine(SeriesPoint s, const SummationConfig& cfg) {
  validate(s, cfg);
  const auto trivial = character_group(1).front();
  const Complex first = zeta_partial(SeriesPoint{2.0 * s.x, 0.0}, cfg);
  const Complex second = dirichlet_series(q_function(trivial, s.y), SeriesPoint{s.x, 0.0}, cfg);
  return (first * second).real();
}

IdentityReport hardy_identity_check(double x, const SummationConfig& cfg) {
  const SeriesPoint s{x, 0.0};
  const Complex z = zeta_partial(s, cfg);
  const Complex rhs = zeta_partial(SeriesPoint{2.0 * x, 0.0}, cfg) *
                      dirichlet_series(omega_power(2.0), s, cfg);
  return make_report("hardy", s, cfg, {"one", "two-omega"}, z * z, rhs);
}

IdentityReport zeta_cosine_check(SeriesPoint s, const SummationConfig& cfg) {
  const Complex lhs = std::norm(zeta_partial(s, cfg));
  return make_report("zeta-cosine", s, cfg, {"one"}, lhs, zeta_modsq_cosine(s, cfg));
}

IdentityReport lseries_factored_check(const DirichletCharacter& chi, SeriesPoint s,
                                      const SummationConfig& cfg) {
  return make_report("lseries-factored", s, cfg, {chi.label()}, lseries_modsq_direct(chi, s, cfg),
                     lseries_modsq_factored(chi, s, cfg));
}

IdentityReport lseries_euler_check(const DirichletCharacter& chi, SeriesPoint s,
                                   const SummationConfig& cfg) {
  return make_report("lseries-euler", s, cfg, {chi.label()}, lseries_modsq_direct(chi, s, cfg),
                     modsq_euler_product(chi, s, cfg), tail_estimate(s, cfg.P));
}

IdentityReport euler_product_L_check(const DirichletCharacter& chi, SeriesPoint s,
                                     const SummationConfig& cfg) {
  const Complex direct = dirichlet_sum([&chi](std::uint64_t n) { return chi(n); }, s, cfg);
  return make_report("euler-product-L", s, cfg, {chi.label()}, euler_product_L(chi, s, cfg),
                     direct, tail_estimate(s, cfg.P));
}

IdentityReport product_identity_check(const MultiplicativeFunction& f,
                                      const MultiplicativeFunction& g, SeriesPoint s,
                                      const SummationConfig& cfg) {
  require_complete(f);
  require_complete(g);
  const Complex lhs = dirichlet_series(f, s, cfg) * dirichlet_series(g, s, cfg);
  const Complex rhs = dirichlet_series(pointwise_product(f, g), SeriesPoint{2.0 * s.x, 2.0 * s.y}, cfg) *
                      dirichlet_series(unitary_convolve(f, g), s, cfg);
  return make_report("product", s, cfg, {f.label(), g.label()}, lhs, rhs);
}

IdentityReport conj_identity_check(const MultiplicativeFunction& f,
                                   const MultiplicativeFunction& g, SeriesPoint s,
                                   const SummationConfig& cfg) {
  require_complete(f);
  require_complete(g);
  const SeriesPoint real_x{s.x, 0.0};
  const Complex lhs = dirichlet_series(f, s, cfg) * dirichlet_series(g, s.conj(), cfg);
  const auto twisted = unitary_convolve(pointwise_product(f, power_iy(-s.y)),
                                        pointwise_product(g, power_iy(s.y)));
  const Complex rhs = dirichlet_series(pointwise_product(f, g), SeriesPoint{2.0 * s.x, 0.0}, cfg) *
                      dirichlet_series(twisted, real_x, cfg);
  return make_report("conj", s, cfg, {f.label(), g.label()}, lhs, rhs);
}

IdentityReport modsq_identity_check(const MultiplicativeFunction& f, SeriesPoint s,
                                    const SummationConfig& cfg) {
  require_complete(f);
  const auto fbar = conjugate(f);
  const Complex lhs = std::norm(dirichlet_series(f, s, cfg));
  const auto twisted = unitary_convolve(pointwise_product(f, power_iy(-s.y)),
                                        pointwise_product(fbar, power_iy(s.y)));
  const Complex rhs =
      dirichlet_series(pointwise_product(f, fbar), SeriesPoint{2.0 * s.x, 0.0}, cfg) *
      dirichlet_series(twisted, SeriesPoint{s.x, 0.0}, cfg);
  return make_report("modsq", s, cfg, {f.label()}, lhs, rhs);
}

IdentityReport euler_complement_check(const MultiplicativeFunction& f,
                                      const std::set<std::uint64_t>& primes, SeriesPoint s,
                                      const SummationConfig& cfg) {
  require_complete(f);
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw std::invalid_argument(fmt::format("{} is not prime", p));
  }
  const auto smooth = pointwise_product(smooth_indicator(primes), f);
  const auto rough = pointwise_product(rough_indicator(primes), f);
  const Complex lhs = dirichlet_series(smooth, s, cfg) * dirichlet_series(rough, s, cfg);
  return make_report("euler-complement", s, cfg, {f.label(), smooth.label()}, lhs,
                     dirichlet_series(f, s, cfg));
}

IdentityReport omega_series_check(SeriesPoint s, const SummationConfig& cfg) {
  validate(s, cfg);
  const auto w = omega_table(cfg.N);
  const Complex lhs = prime_zeta_partial(s, cfg.P) * zeta_partial(s, cfg);
  const Complex rhs = dirichlet_sum([&w](std::uint64_t n) { return Complex{double(w[n]), 0.0}; },
                                    s, cfg);
  return make_report("omega-series", s, cfg, {"omega"}, lhs, rhs, tail_estimate(s, cfg.P));
}

std::array<IdentityReport, 2> omega_reciprocal_check(SeriesPoint s, const SummationConfig& cfg) {
  validate(s, cfg);
  const std::uint64_t N = cfg.N;
  const auto w = omega_table(N);
  const auto primes = sieve_primes(std::min(cfg.P, N));
  const Complex z = s.s();

  // Sum over (n, p) with np <= N of (np)^{-s} / omega(np).
  const Complex reciprocal =
      parallel_sum(0, primes.size() == 0 ? 0 : primes.size() - 1, cfg.workers,
                   [&](std::uint64_t i) {
                     if (primes.empty()) return Complex{0.0, 0.0};
                     const std::uint64_t p = primes[i];
                     Complex acc = 0.0;
                     for (std::uint64_t n = 1; n <= N / p; ++n) {
                       const std::uint64_t m = n * p;
                       acc += cesaro_weight(m, cfg) * power_neg(m, z) / double(w[m]);
                     }
                     return acc;
                   });

  // The same pairs regrouped by n: weight 1/(omega(n)+1) on all p, plus the
  // correction over p | n (empty when n = 1).
  const Complex shifted = parallel_sum(1, N, cfg.workers, [&](std::uint64_t n) {
    const double wn = w[n];
    const Complex ns = power_neg(n, z);
    Complex all = 0.0;
    Complex dividing = 0.0;
    for (std::uint64_t p : primes) {
      if (p > N / n) break;
      const Complex term = cesaro_weight(n * p, cfg) * power_neg(p, z);
      all += term;
      if (n % p == 0) dividing += term;
    }
    Complex bracket = all;
    if (wn > 0) bracket += dividing / wn;
    return ns * bracket / (wn + 1.0);
  });

  const Complex rhs = zeta_partial(s, cfg) - cesaro_weight(1, cfg);
  return {make_report("omega-reciprocal", s, cfg, {"omega"}, reciprocal, rhs),
          make_report("omega-shifted", s, cfg, {"omega"}, shifted, rhs)};
}

IdentityReport cesaro_direct_check(const MultiplicativeFunction& f, SeriesPoint s,
                                   const SummationConfig& cfg) {
  SummationConfig direct = cfg;
  direct.mode = SummationMode::kDirect;
  SummationConfig cesaro = cfg;
  cesaro.mode = SummationMode::kCesaro;
  return make_report("cesaro-direct", s, cfg, {f.label()}, dirichlet_series(f, s, cesaro),
                     dirichlet_series(f, s, direct));
}

}  // namespace unitary
