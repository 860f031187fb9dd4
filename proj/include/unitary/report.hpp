#pragma once

// Flat report rows shared by the identity checks and the axiom checker, with
// JSON and CSV writers.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unitary/axioms.hpp"
#include "unitary/series.hpp"

namespace unitary {

struct ReportRow {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::optional<Complex> lhs;
  std::optional<Complex> rhs;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tol = 0.0;
  CheckStatus status = CheckStatus::kFail;
  std::optional<double> tail_bound;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
};

ReportRow to_row(const IdentityReport& report);
/// One row per axiom. Failed axioms carry the witness and both sides.
std::vector<ReportRow> to_rows(const AxiomReport& report);

nlohmann::ordered_json to_json(const ReportRow& row);
nlohmann::ordered_json to_json(const std::vector<ReportRow>& rows);

enum class ReportFormat { kJson, kCsv };
ReportFormat parse_format(std::string_view name);

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, ReportFormat format);
void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);

/// True when no applicable row failed.
bool all_applicable_passed(const std::vector<ReportRow>& rows);

}  // namespace unitary
