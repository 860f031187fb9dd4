#include "unitary/report.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace unitary {

namespace {

using ojson = nlohmann::ordered_json;

ojson complex_json(const std::optional<Complex>& z) {
  if (!z) return nullptr;
  return ojson::array({z->real(), z->imag()});
}

ojson number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "";
  return fmt::format("{:.17g}", *v);
}

}  // namespace

ReportRow to_row(const IdentityReport& r) {
  ReportRow row;
  row.identity = r.identity;
  row.params["x"] = r.point.x;
  row.params["y"] = r.point.y;
  row.params["N"] = r.config.N;
  row.params["P"] = r.config.P;
  row.params["mode"] = std::string(mode_name(r.config.mode));
  row.params["exploratory"] = r.config.exploratory;
  row.params["functions"] = r.labels;
  row.params["tail_dominated"] = r.tail_dominated;
  row.lhs = r.lhs;
  row.rhs = r.rhs;
  row.abs_error = r.abs_error;
  row.rel_error = r.rel_error;
  row.tol = r.tol;
  row.status = r.status;
  row.tail_bound = r.tail_bound;
  row.seed = r.seed;
  row.workers = r.config.workers;
  return row;
}

std::vector<ReportRow> to_rows(const AxiomReport& report) {
  std::vector<ReportRow> rows;
  for (const auto& res : report.results) {
    ReportRow row;
    row.identity = "ring-axioms";
    row.params["axiom"] = std::string(axiom_name(res.axiom));
    row.params["weight"] = report.weight_label;
    row.params["bound"] = report.bound;
    row.params["cases_checked"] = res.cases_checked;
    row.tol = kAxiomTolerance;
    row.status = res.passed ? CheckStatus::kPass : CheckStatus::kFail;
    if (res.counterexample) {
      row.params["witness"] = res.counterexample->witness;
      row.lhs = res.counterexample->lhs;
      row.rhs = res.counterexample->rhs;
      row.abs_error = std::abs(*row.lhs - *row.rhs);
      row.rel_error = std::abs(*row.rhs) > 0 ? row.abs_error / std::abs(*row.rhs) : row.abs_error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson to_json(const ReportRow& row) {
  ojson j;
  j["identity"] = row.identity;
  j["params"] = row.params;
  j["lhs"] = complex_json(row.lhs);
  j["rhs"] = complex_json(row.rhs);
  j["abs_error"] = number_or_null(row.abs_error);
  j["rel_error"] = number_or_null(row.rel_error);
  j["tol"] = number_or_null(row.tol);
  if (row.status == CheckStatus::kNotApplicable) {
    j["pass"] = nullptr;
  } else {
    j["pass"] = row.status == CheckStatus::kPass;
  }
  j["tail_bound"] = row.tail_bound ? number_or_null(*row.tail_bound) : ojson(nullptr);
  j["seed"] = row.seed ? ojson(*row.seed) : ojson(nullptr);
  j["workers"] = row.workers;
  return j;
}

ojson to_json(const std::vector<ReportRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument(fmt::format("unknown report format '{}'", name));
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rel_error,tol,pass,tail_bound,"
         "seed,workers\n";
  for (const auto& r : rows) {
    auto part = [](const std::optional<Complex>& z, bool real) -> std::optional<double> {
      if (!z) return std::nullopt;
      return real ? z->real() : z->imag();
    };
    std::string pass = r.status == CheckStatus::kNotApplicable ? ""
                       : r.status == CheckStatus::kPass        ? "true"
                                                               : "false";
    out << csv_field(r.identity) << ',' << csv_field(r.params.dump()) << ','
        << csv_number(part(r.lhs, true)) << ',' << csv_number(part(r.lhs, false)) << ','
        << csv_number(part(r.rhs, true)) << ',' << csv_number(part(r.rhs, false)) << ','
        << csv_number(r.abs_error) << ',' << csv_number(r.rel_error) << ',' << csv_number(r.tol)
        << ',' << pass << ',' << csv_number(r.tail_bound) << ','
        << (r.seed ? std::to_string(*r.seed) : "") << ',' << r.workers << '\n';
  }
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    write_csv(out, rows);
  } else {
    out << to_json(rows).dump(2) << '\n';
  }
}

bool all_applicable_passed(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows) {
    if (r.status == CheckStatus::kFail) return false;
  }
  return true;
}

}  // namespace unitary
