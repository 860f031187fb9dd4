#include "unitary/funcspec.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

#include "unitary/characters.hpp"
#include "unitary/series.hpp"

namespace unitary {

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(fmt::format("bad {} '{}'", what, text));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

MultiplicativeFunction character_function(std::string_view body) {
  auto parts = split(body, ':');
  if (parts.size() != 2) throw std::invalid_argument(fmt::format("bad character spec '{}'", body));
  const auto k = parse_number<std::uint64_t>(parts[0], "modulus");
  const auto j = parse_number<std::size_t>(parts[1], "character index");
  auto group = character_group(k);
  if (j >= group.size()) {
    throw std::invalid_argument(
        fmt::format("character index {} out of range for modulus {} ({} characters)", j, k,
                    group.size()));
  }
  return char_to_multiplicative(group[j]);
}

MultiplicativeFunction atom(std::string_view tok) {
  if (tok == "one") return one();
  if (tok == "delta1") return delta1();
  if (tok == "id") return identity();
  if (tok == "sigma-hat") return sigma_hat();
  if (tok == "phi") return phi();
  if (tok == "two-omega") return omega_power(2.0);
  if (tok == "neg1-omega") return neg_one_omega();
  if (tok == "inv-rad") return inv_radical();

  if (auto at = tok.find('@'); at != std::string_view::npos) {
    const auto head = tok.substr(0, at);
    const auto arg = tok.substr(at + 1);
    if (head == "cosa") return cosa(parse_number<double>(arg, "y"));
    if (head == "sina") return sina(parse_number<double>(arg, "y"));
    if (head == "niy") return power_iy(parse_number<double>(arg, "y"));
    if (head == "omega-pow") return omega_power(parse_number<double>(arg, "base"));
    if (head == "rand") return random_multiplicative(parse_number<std::uint64_t>(arg, "seed"));
    if (head == "crand") {
      return random_completely_multiplicative(parse_number<std::uint64_t>(arg, "seed"));
    }
    if (head == "gauss") return random_gaussian_integer(parse_number<std::uint64_t>(arg, "seed"));
    if (head.starts_with("q:")) {
      auto parts = split(head.substr(2), ':');
      if (parts.size() != 2) throw std::invalid_argument(fmt::format("bad Q spec '{}'", tok));
      const auto k = parse_number<std::uint64_t>(parts[0], "modulus");
      const auto j = parse_number<std::size_t>(parts[1], "character index");
      auto group = character_group(k);
      if (j >= group.size()) throw std::invalid_argument(fmt::format("no character {} mod {}", j, k));
      return q_function(group[j], parse_number<double>(arg, "y"));
    }
  }

  if (auto colon = tok.find(':'); colon != std::string_view::npos) {
    const auto head = tok.substr(0, colon);
    const auto body = tok.substr(colon + 1);
    if (head == "chi") return character_function(body);
    if (head == "ind") return indicator_of_integer(parse_number<std::uint64_t>(body, "integer"));
    if (head == "smooth") return smooth_indicator(parse_prime_set(body));
    if (head == "rough") return rough_indicator(parse_prime_set(body));
  }
  throw std::invalid_argument(fmt::format("unknown function '{}'", tok));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiplicativeFunction parse() {
    auto f = spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(std::string_view what) const {
    throw std::invalid_argument(
        fmt::format("{} at position {} in '{}'", what, pos_, text_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a function");
    return text_.substr(start, pos_ - start);
  }

  MultiplicativeFunction spec() {
    const auto name = token();
    if (!eat('(')) {
      try {
        return atom(name);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(fmt::format("{} in '{}'", e.what(), text_));
      }
    }
    std::vector<MultiplicativeFunction> args{spec()};
    while (eat(',')) args.push_back(spec());
    if (!eat(')')) fail("expected ')'");

    auto unary = [&](auto op) {
      if (args.size() != 1) fail(fmt::format("{} takes one argument", name));
      return op(args[0]);
    };
    if (name == "box" || name == "times") {
      if (args.size() < 2) fail(fmt::format("{} takes at least two arguments", name));
      auto acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) {
        acc = name == "box" ? unitary_convolve(acc, args[i]) : pointwise_product(acc, args[i]);
      }
      return acc;
    }
    if (name == "inv") return unary([](const auto& f) { return unitary_inverse(f); });
    if (name == "conj") return unary([](const auto& f) { return conjugate(f); });
    if (name == "re") return unary([](const auto& f) { return real_part(f); });
    if (name == "im") return unary([](const auto& f) { return imag_part(f); });
    fail(fmt::format("unknown combinator '{}'", name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiplicativeFunction parse_function(std::string_view spec) { return Parser(spec).parse(); }

std::set<std::uint64_t> parse_prime_set(std::string_view text) {
  std::set<std::uint64_t> out;
  if (text.empty()) return out;
  const char sep = text.find(',') != std::string_view::npos ? ',' : '.';
  for (auto part : split(text, sep)) {
    const auto p = parse_number<std::uint64_t>(part, "prime");
    if (!is_prime(p)) throw std::invalid_argument(fmt::format("{} is not prime", p));
    out.insert(p);
  }
  return out;
}

std::vector<std::string> function_spec_help() {
  return {
      "one, delta1, id, sigma-hat, phi, two-omega, neg1-omega, inv-rad",
      "cosa@Y, sina@Y        cos / sin of y ln p^v on prime powers",
      "niy@Y                 n^{iy}",
      "omega-pow@C           C^omega",
      "chi:K:J               character J mod K",
      "q:K:J@Y               Q function of chi:K:J at height Y",
      "ind:S                 indicator of the prime powers exactly dividing S",
      "smooth:P.P.., rough:P.P..  numbers built only from / free of the listed primes",
      "rand@SEED, crand@SEED, gauss@SEED  seeded random functions",
      "box(F,G,..), times(F,G,..), inv(F), conj(F), re(F), im(F)",
  };
}

}  // namespace unitary
