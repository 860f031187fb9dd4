// unitary: evaluate and convolve multiplicative functions, print character
// tables, and run identity verification jobs.

#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "unitary/characters.hpp"
#include "unitary/funcspec.hpp"
#include "unitary/mfunc.hpp"
#include "unitary/report.hpp"
#include "unitary/verify.hpp"

namespace {

using namespace unitary;
using ojson = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

// Accepts plain integers and exact scientific forms such as 1e6.
std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || v < 0 || v != std::floor(v) || v > 1.8e19) {
    throw std::invalid_argument(fmt::format("'{}' is not a non-negative integer", text));
  }
  return static_cast<std::uint64_t>(v);
}

// "12", "1..5", "2,3,7".
std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_count(text.substr(0, dots));
    const auto hi = parse_count(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument(fmt::format("empty range '{}'", text));
    for (auto n = lo; n <= hi; ++n) out.push_back(n);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      out.push_back(parse_count(text.substr(start, comma - start)));
      start = comma + 1;
    }
  }
  for (auto n : out) {
    if (n == 0) throw std::invalid_argument("arguments must be positive (got 0)");
  }
  return out;
}

std::string format_complex(Complex z) {
  auto clean = [](double v) { return std::abs(v) < 1e-13 ? 0.0 : v; };
  const double re = clean(z.real());
  const double im = clean(z.imag());
  if (im == 0.0) return fmt::format("{:.15g}", re);
  if (re == 0.0) {
    if (im == 1.0) return "i";
    if (im == -1.0) return "-i";
    return fmt::format("{:.15g}i", im);
  }
  return fmt::format("{:.15g}{:+.15g}i", re, im);
}

void print_values(std::ostream& out, const std::string& label,
                  const std::vector<std::pair<std::uint64_t, Complex>>& values,
                  const std::string& format) {
  if (format == "json") {
    ojson arr = ojson::array();
    for (const auto& [n, v] : values) {
      arr.push_back({{"function", label}, {"n", n}, {"re", v.real()}, {"im", v.imag()}});
    }
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << "function,n,re,im\n";
    for (const auto& [n, v] : values) {
      out << '"' << label << "\"," << n << ',' << fmt::format("{:.17g},{:.17g}", v.real(), v.imag())
          << '\n';
    }
  } else {
    for (const auto& [n, v] : values) out << n << '\t' << format_complex(v) << '\n';
  }
}

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
  return file;
}

int cmd_eval(const std::string& spec, const std::string& range, const std::string& format,
             const std::string& out_path) {
  const auto f = parse_function(spec);
  std::vector<std::pair<std::uint64_t, Complex>> values;
  for (auto n : parse_range(range)) values.emplace_back(n, f(n));
  std::ofstream file;
  print_values(output_stream(out_path, file), f.label(), values, format);
  return 0;
}

int cmd_convolve(const std::string& fspec, const std::string& gspec, const std::string& range,
                 const std::string& weight, const std::string& format,
                 const std::string& out_path) {
  const auto f = parse_function(fspec);
  const auto g = parse_function(gspec);
  const auto w = weight_from_name(weight);
  const auto h = w_convolve(f, g, w);
  std::vector<std::pair<std::uint64_t, Complex>> values;
  for (auto n : parse_range(range)) values.emplace_back(n, h(n));
  std::ofstream file;
  print_values(output_stream(out_path, file), fmt::format("{}[{}]", h.label(), w.label), values,
               format);
  return 0;
}

int cmd_char_table(std::uint64_t k, const std::string& format, const std::string& out_path) {
  const auto group = character_group(k);
  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);

  std::vector<Complex> box_row(k, 0.0);
  std::vector<Complex> prod_row(k, 0.0);
  if (k >= 2) {
    const auto box = box_over_characters_function(k);
    for (std::uint64_t l = 0; l < k; ++l) {
      prod_row[l] = product_over_characters(k, l);
      if (l >= 2) box_row[l] = box(l);
    }
  }

  if (format == "json") {
    ojson j;
    j["modulus"] = k;
    j["structure"] = unit_group_structure(k);
    j["characters"] = ojson::array();
    for (const auto& chi : group) {
      ojson values = ojson::array();
      for (std::uint64_t l = 0; l < k; ++l) values.push_back({chi(l).real(), chi(l).imag()});
      j["characters"].push_back({{"index", chi.index()},
                                 {"exponents", std::vector<unsigned>(chi.exponent_tuple().begin(),
                                                                     chi.exponent_tuple().end())},
                                 {"values", values}});
    }
    if (k >= 2) {
      ojson b = ojson::array(), p = ojson::array();
      for (std::uint64_t l = 0; l < k; ++l) {
        b.push_back(l >= 2 ? ojson::array({box_row[l].real(), box_row[l].imag()}) : ojson(nullptr));
        p.push_back({prod_row[l].real(), prod_row[l].imag()});
      }
      j["box"] = b;
      j["product"] = p;
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  const bool csv = format == "csv";
  const std::string sep = csv ? "," : "\t";
  out << "row";
  for (std::uint64_t l = 0; l < k; ++l) out << sep << l;
  out << '\n';
  for (const auto& chi : group) {
    out << "chi" << chi.index();
    for (std::uint64_t l = 0; l < k; ++l) out << sep << format_complex(chi(l));
    out << '\n';
  }
  if (k >= 2) {
    out << "box";
    for (std::uint64_t l = 0; l < k; ++l) out << sep << (l >= 2 ? format_complex(box_row[l]) : "");
    out << '\n' << "prod";
    for (std::uint64_t l = 0; l < k; ++l) out << sep << format_complex(prod_row[l]);
    out << '\n';
  }
  return 0;
}

int cmd_verify(VerifyJob job, const std::vector<std::string>& Ns, const std::vector<std::string>& Ps,
               const std::string& mode, const std::string& format, const std::string& out_path) {
  if (!Ns.empty()) {
    job.Ns.clear();
    for (const auto& s : Ns) job.Ns.push_back(parse_count(s));
  }
  if (!Ps.empty()) {
    job.Ps.clear();
    for (const auto& s : Ps) job.Ps.push_back(parse_count(s));
  }
  job.config.mode = parse_mode(mode);
  const auto rows = run_verify(job);

  std::ofstream file;
  write_report(output_stream(out_path, file), rows, parse_format(format));

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : rows) {
    switch (r.status) {
      case CheckStatus::kPass: ++passed; break;
      case CheckStatus::kFail: ++failed; break;
      case CheckStatus::kNotApplicable: ++skipped; break;
    }
  }
  std::cerr << fmt::format("{}: {} passed, {} failed, {} not applicable\n", job.identity, passed,
                           failed, skipped);
  return failed == 0 ? 0 : kExitFail;
}

int cmd_list(std::ostream& out) {
  out << "identities:\n";
  for (const auto& i : list_identities()) {
    out << fmt::format("  {:<18} {}\n  {:<18}   inputs: {}\n", i.name, i.summary, "", i.inputs);
  }
  out << "\nfunction specs:\n";
  for (const auto& line : function_spec_help()) out << "  " << line << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative functions under unitary convolution, with series identity checks"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;

  std::string spec, range, gspec;
  std::string weight = "coprime";
  auto* eval = app.add_subcommand("eval", "Evaluate a function spec at n, a range a..b, or a list");
  eval->add_option("function", spec, "Function spec")->required();
  eval->add_option("n", range, "n, a..b, or a,b,c")->required();
  eval->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  eval->add_option("--out", out_path, "Write to FILE instead of stdout");

  auto* conv = app.add_subcommand("convolve", "W-convolution of two function specs");
  conv->add_option("f", spec, "First function spec")->required();
  conv->add_option("g", gspec, "Second function spec")->required();
  conv->add_option("n", range, "n, a..b, or a,b,c")->required();
  conv->add_option("--weight", weight, "coprime, ones, scaled:C, or a table file");
  conv->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  conv->add_option("--out", out_path, "Write to FILE instead of stdout");

  std::uint64_t modulus = 0;
  auto* table = app.add_subcommand("char-table", "Character table mod k with box/product rows");
  table->add_option("k", modulus, "Modulus")->required();
  table->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--out", out_path, "Write to FILE instead of stdout");

  VerifyJob job;
  std::vector<std::string> Ns, Ps;
  std::string mode = "direct";
  std::string report_format = "json";
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Run an identity check over a parameter grid");
  verify->add_option("identity", job.identity, "Identity name (see list-identities)")->required();
  verify->add_option("--x", job.xs, "Re(s) values")->delimiter(',');
  verify->add_option("--y", job.ys, "Im(s) values")->delimiter(',');
  verify->add_option("--N", Ns, "Term counts")->delimiter(',');
  verify->add_option("--P", Ps, "Prime limits")->delimiter(',');
  verify->add_option("--mode", mode, "direct or cesaro")
      ->check(CLI::IsMember({"direct", "cesaro"}));
  auto* tol_opt = verify->add_option("--tol", tol, "Tolerance (default: tail bound clamped to [1e-9, 1e-2])");
  verify->add_option("--bound", job.bound, "Argument bound for finite checks");
  verify->add_option("--weight", job.weight, "coprime, ones, scaled:C, or a table file");
  verify->add_option("--seed", job.seed, "Seed for random functions");
  verify->add_option("--workers", job.config.workers, "Summation threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--f", job.f, "First function spec");
  verify->add_option("--g", job.g, "Second function spec");
  verify->add_option("--chi", job.character, "Character K:J");
  verify->add_option("--primes", job.primes, "Prime set, e.g. 2.3");
  verify->add_option("--moduli", job.moduli, "Moduli for box-characters")->delimiter(',');
  verify->add_flag("--exploratory", job.config.exploratory,
                   "Allow 1/2 < Re(s) <= 1 (reported as not applicable)");
  verify->add_option("--out", out_path, "Write the report to FILE instead of stdout");
  verify->add_option("--format", report_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* list = app.add_subcommand("list-identities", "List identities and function specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*eval) return cmd_eval(spec, range, format, out_path);
    if (*conv) return cmd_convolve(spec, gspec, range, weight, format, out_path);
    if (*table) return cmd_char_table(modulus, format, out_path);
    if (*verify) {
      if (*tol_opt) job.tolerance = tol;
      return cmd_verify(job, Ns, Ps, mode, report_format, out_path);
    }
    if (*list) return cmd_list(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
