#include "unitary/mfunc.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

namespace unitary {

struct MultiplicativeFunction::State {
  std::string label;
  Rule rule;
  bool completely_multiplicative = false;
  std::size_t capacity = 0;
  mutable std::mutex mutex;
  mutable std::unordered_map<std::uint64_t, Complex> cache;
};

MultiplicativeFunction::MultiplicativeFunction(std::string label, Rule rule,
                                               bool completely_multiplicative,
                                               std::size_t cache_capacity) {
  auto state = std::make_shared<State>();
  state->label = std::move(label);
  state->rule = std::move(rule);
  state->completely_multiplicative = completely_multiplicative;
  state->capacity = cache_capacity;
  state_ = std::move(state);
}

const std::string& MultiplicativeFunction::label() const { return state_->label; }

bool MultiplicativeFunction::completely_multiplicative() const {
  return state_->completely_multiplicative;
}

Complex MultiplicativeFunction::at_prime_power(std::uint64_t p, unsigned v) const {
  if (v == 0) return 1.0;
  const State& s = *state_;
  if (s.capacity == 0) return s.rule(p, v);
  const std::uint64_t key = (p << 6) | v;
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.cache.find(key); it != s.cache.end()) return it->second;
  }
  Complex value = s.rule(p, v);
  std::lock_guard lock(s.mutex);
  if (s.cache.size() >= s.capacity) s.cache.clear();
  s.cache.emplace(key, value);
  return value;
}

Complex MultiplicativeFunction::operator()(const Factorization& f) const {
  Complex out = 1.0;
  for (const auto& [p, v] : f.factors()) out *= at_prime_power(p, v);
  return out;
}

Complex MultiplicativeFunction::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument(fmt::format("{} evaluated at 0", label()));
  if (n == 1) return 1.0;
  return (*this)(factorize(n));
}

ArithmeticFunction::ArithmeticFunction(std::string label, Eval eval)
    : label_(std::move(label)), eval_(std::move(eval)) {}

Complex ArithmeticFunction::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument(fmt::format("{} evaluated at 0", label_));
  return eval_(n);
}

WeightFunction coprime_weight() {
  return {"coprime", [](std::uint64_t a, std::uint64_t b) -> Complex {
            return std::gcd(a, b) == 1 ? 1.0 : 0.0;
          }};
}

WeightFunction ones_weight() {
  return {"ones", [](std::uint64_t, std::uint64_t) -> Complex { return 1.0; }};
}

WeightFunction scaled_coprime_weight(Complex scale) {
  return {fmt::format("coprime*({},{})", scale.real(), scale.imag()),
          [scale](std::uint64_t a, std::uint64_t b) -> Complex {
            return std::gcd(a, b) == 1 ? scale : Complex{0.0};
          }};
}

WeightFunction table_weight(std::string label,
                            std::vector<std::pair<DivisorPair, Complex>> entries) {
  auto table = std::make_shared<std::map<DivisorPair, Complex>>();
  for (auto& [key, value] : entries) (*table)[key] = value;
  return {std::move(label), [table](std::uint64_t a, std::uint64_t b) -> Complex {
            if (auto it = table->find({a, b}); it != table->end()) return it->second;
            return std::gcd(a, b) == 1 ? 1.0 : 0.0;
          }};
}

WeightFunction load_weight_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open weight table '{}'", path));
  std::vector<std::pair<DivisorPair, Complex>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    double re = 0, im = 0;
    std::string extra;
    if (!(ls >> a >> b >> re >> im) || (ls >> extra) || a < 1 || b < 1) {
      throw std::runtime_error(
          fmt::format("{}:{}: expected 'a b re im' with a, b >= 1", path, lineno));
    }
    entries.push_back({{static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)}, {re, im}});
  }
  return table_weight("table:" + path, std::move(entries));
}

Complex evaluate(const MultiplicativeFunction& f, std::uint64_t n) { return f(n); }

ArithmeticFunction w_convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g,
                              const WeightFunction& w) {
  return ArithmeticFunction(
      fmt::format("box[{}]({},{})", w.label, f.label(), g.label()), [f, g, w](std::uint64_t m) {
        Complex sum = 0.0;
        for (const auto& [a, b] : divisor_pairs(m)) sum += f(a) * g(b) * w(a, b);
        return sum;
      });
}

MultiplicativeFunction unitary_convolve(const MultiplicativeFunction& f,
                                        const MultiplicativeFunction& g) {
  return MultiplicativeFunction(
      fmt::format("box({},{})", f.label(), g.label()),
      [f, g](std::uint64_t p, unsigned v) { return f.at_prime_power(p, v) + g.at_prime_power(p, v); });
}

MultiplicativeFunction unitary_convolve_all(std::span<const MultiplicativeFunction> fs) {
  std::vector<MultiplicativeFunction> parts(fs.begin(), fs.end());
  std::string label = "box(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    label += (i ? "," : "") + parts[i].label();
  }
  label += ")";
  return MultiplicativeFunction(std::move(label), [parts](std::uint64_t p, unsigned v) {
    Complex sum = 0.0;
    for (const auto& f : parts) sum += f.at_prime_power(p, v);
    return sum;
  });
}

Complex unitary_convolve_bruteforce(const MultiplicativeFunction& f,
                                    const MultiplicativeFunction& g, std::uint64_t n) {
  Complex sum = 0.0;
  for (const auto& [a, b] : divisor_pairs(n)) {
    if (std::gcd(a, b) == 1) sum += f(a) * g(b);
  }
  return sum;
}

MultiplicativeFunction pointwise_product(const MultiplicativeFunction& f,
                                         const MultiplicativeFunction& g) {
  return MultiplicativeFunction(
      fmt::format("times({},{})", f.label(), g.label()),
      [f, g](std::uint64_t p, unsigned v) { return f.at_prime_power(p, v) * g.at_prime_power(p, v); },
      f.completely_multiplicative() && g.completely_multiplicative());
}

MultiplicativeFunction unitary_inverse(const MultiplicativeFunction& f) {
  return MultiplicativeFunction(fmt::format("inv({})", f.label()),
                                [f](std::uint64_t p, unsigned v) { return -f.at_prime_power(p, v); });
}

MultiplicativeFunction conjugate(const MultiplicativeFunction& f) {
  return MultiplicativeFunction(
      fmt::format("conj({})", f.label()),
      [f](std::uint64_t p, unsigned v) { return std::conj(f.at_prime_power(p, v)); },
      f.completely_multiplicative());
}

MultiplicativeFunction real_part(const MultiplicativeFunction& f) {
  return MultiplicativeFunction(fmt::format("re({})", f.label()), [f](std::uint64_t p, unsigned v) {
    return Complex{f.at_prime_power(p, v).real()};
  });
}

MultiplicativeFunction imag_part(const MultiplicativeFunction& f) {
  return MultiplicativeFunction(fmt::format("im({})", f.label()), [f](std::uint64_t p, unsigned v) {
    return Complex{f.at_prime_power(p, v).imag()};
  });
}

MultiplicativeFunction scale_values(const MultiplicativeFunction& f, Complex c) {
  return MultiplicativeFunction(
      fmt::format("scale({},{})", f.label(), c.real()),
      [f, c](std::uint64_t p, unsigned v) { return c * f.at_prime_power(p, v); });
}

MultiplicativeFunction indicator(std::set<std::pair<std::uint64_t, unsigned>> s) {
  std::string label = "ind{";
  for (const auto& [p, n] : s) label += fmt::format("({},{})", p, n);
  label += "}";
  return MultiplicativeFunction(std::move(label), [s = std::move(s)](std::uint64_t p, unsigned v) {
    return Complex{s.contains({p, v}) ? 1.0 : 0.0};
  });
}

MultiplicativeFunction indicator_of_integer(std::uint64_t s) {
  std::set<std::pair<std::uint64_t, unsigned>> set;
  for (const auto& [p, v] : factorize(s).factors()) set.insert({p, v});
  auto f = indicator(std::move(set));
  return MultiplicativeFunction(fmt::format("ind:{}", s),
                                [f](std::uint64_t p, unsigned v) { return f.at_prime_power(p, v); });
}

MultiplicativeFunction one() {
  return MultiplicativeFunction("one", [](std::uint64_t, unsigned) { return Complex{1.0}; }, true);
}

MultiplicativeFunction delta1() {
  return MultiplicativeFunction("delta1", [](std::uint64_t, unsigned) { return Complex{0.0}; },
                                true);
}

MultiplicativeFunction identity() {
  return MultiplicativeFunction(
      "id", [](std::uint64_t p, unsigned v) { return Complex{std::pow(double(p), double(v))}; },
      true);
}

MultiplicativeFunction omega_power(Complex c) {
  std::string label = c.imag() == 0.0 ? fmt::format("({})^omega", c.real())
                                      : fmt::format("({}{:+}i)^omega", c.real(), c.imag());
  return MultiplicativeFunction(std::move(label), [c](std::uint64_t, unsigned) { return c; });
}

MultiplicativeFunction neg_one_omega() {
  return MultiplicativeFunction("(-1)^omega", [](std::uint64_t, unsigned) { return Complex{-1.0}; });
}

MultiplicativeFunction inv_radical() {
  return MultiplicativeFunction("1/rad",
                                [](std::uint64_t p, unsigned) { return Complex{1.0 / double(p)}; });
}

MultiplicativeFunction cosa(double y) {
  return MultiplicativeFunction(fmt::format("cosa@{}", y), [y](std::uint64_t p, unsigned v) {
    return Complex{std::cos(y * v * std::log(double(p)))};
  });
}

MultiplicativeFunction sina(double y) {
  return MultiplicativeFunction(fmt::format("sina@{}", y), [y](std::uint64_t p, unsigned v) {
    return Complex{std::sin(y * v * std::log(double(p)))};
  });
}

MultiplicativeFunction power_iy(double y) {
  return MultiplicativeFunction(
      fmt::format("niy@{}", y),
      [y](std::uint64_t p, unsigned v) { return std::polar(1.0, y * v * std::log(double(p))); },
      true);
}

MultiplicativeFunction sigma_hat() {
  auto f = unitary_convolve(identity(), one());
  return MultiplicativeFunction("sigma-hat",
                                [f](std::uint64_t p, unsigned v) { return f.at_prime_power(p, v); });
}

MultiplicativeFunction phi() {
  auto f = pointwise_product(identity(),
                             unitary_convolve(one(), pointwise_product(neg_one_omega(), inv_radical())));
  return MultiplicativeFunction("phi",
                                [f](std::uint64_t p, unsigned v) { return f.at_prime_power(p, v); });
}

namespace {

std::string prime_set_label(const std::set<std::uint64_t>& primes) {
  std::string out;
  for (auto p : primes) out += (out.empty() ? "" : ".") + std::to_string(p);
  return out;
}

}  // namespace

MultiplicativeFunction smooth_indicator(std::set<std::uint64_t> primes) {
  std::string label = "smooth:" + prime_set_label(primes);
  return MultiplicativeFunction(
      std::move(label),
      [primes = std::move(primes)](std::uint64_t p, unsigned) {
        return Complex{primes.contains(p) ? 1.0 : 0.0};
      },
      true);
}

MultiplicativeFunction rough_indicator(std::set<std::uint64_t> primes) {
  std::string label = "rough:" + prime_set_label(primes);
  return MultiplicativeFunction(
      std::move(label),
      [primes = std::move(primes)](std::uint64_t p, unsigned) {
        return Complex{primes.contains(p) ? 0.0 : 1.0};
      },
      true);
}

MultiplicativeFunction restrict_to_primes(const std::set<std::uint64_t>& primes,
                                          const MultiplicativeFunction& f) {
  return pointwise_product(smooth_indicator(primes), f);
}

double cosa_plain(double y, double num, double den) {
  return std::cos(y * (std::log(num) - std::log(den)));
}

double sina_plain(double y, double num, double den) {
  return std::sin(y * (std::log(num) - std::log(den)));
}

Complex reconstruct_power(std::uint64_t m, double y) {
  auto rebuilt =
      unitary_convolve(cosa(y), pointwise_product(omega_power(Complex{0.0, 1.0}), sina(y)));
  return rebuilt(m);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

Complex disk_point(std::uint64_t seed, std::uint64_t p, unsigned v, double max_abs) {
  std::uint64_t h = splitmix64(seed ^ splitmix64(p ^ splitmix64(v)));
  double r = max_abs * std::sqrt(unit_interval(h));
  double theta = 2.0 * std::numbers::pi * unit_interval(splitmix64(h));
  return std::polar(r, theta);
}

}  // namespace

MultiplicativeFunction random_multiplicative(std::uint64_t seed, double max_abs) {
  return MultiplicativeFunction(fmt::format("rand@{}", seed),
                                [seed, max_abs](std::uint64_t p, unsigned v) {
                                  return disk_point(seed, p, v, max_abs);
                                });
}

MultiplicativeFunction random_completely_multiplicative(std::uint64_t seed, double max_abs) {
  return MultiplicativeFunction(
      fmt::format("crand@{}", seed),
      [seed, max_abs](std::uint64_t p, unsigned v) {
        return std::pow(disk_point(seed, p, 1, max_abs), static_cast<int>(v));
      },
      true);
}

MultiplicativeFunction random_gaussian_integer(std::uint64_t seed, int range) {
  return MultiplicativeFunction(fmt::format("gauss@{}", seed), [seed, range](std::uint64_t p,
                                                                              unsigned v) {
    std::uint64_t h = splitmix64(seed ^ splitmix64(p ^ splitmix64(v + 0x51ULL)));
    const auto width = static_cast<std::uint64_t>(2 * range + 1);
    auto re = static_cast<int>(h % width) - range;
    auto im = static_cast<int>(splitmix64(h) % width) - range;
    return Complex{double(re), double(im)};
  });
}

bool check_complete_multiplicativity(const MultiplicativeFunction& f, std::uint64_t prime_limit,
                                     unsigned max_exp, double tol) {
  for (std::uint64_t p : sieve_primes(prime_limit)) {
    Complex base = f.at_prime_power(p, 1);
    Complex power = base;
    for (unsigned v = 2; v <= max_exp; ++v) {
      power *= base;
      Complex got = f.at_prime_power(p, v);
      if (std::abs(got - power) > tol * std::max(1.0, std::abs(power))) return false;
    }
  }
  return true;
}

}  // namespace unitary
