#pragma once

// Batch verification jobs behind the `verify` subcommand.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitary/report.hpp"
#include "unitary/series.hpp"

namespace unitary {

struct VerifyJob {
  std::string identity;
  // The grid is the cartesian product of these lists, in this nesting order
  // (x outermost).
  std::vector<double> xs{2.0};
  std::vector<double> ys{0.0};
  std::vector<std::uint64_t> Ns{100000};
  std::vector<std::uint64_t> Ps{100000};
  SummationConfig config;  // N and P are taken from the grid
  std::optional<double> tolerance;
  std::uint64_t seed = 0;

  std::string f = "one";
  std::string g = "one";
  std::string character = "4:1";      // K:J
  std::string primes = "2";           // prime set for euler-complement
  std::string weight = "coprime";     // coprime | ones | scaled:C | table file
  std::uint64_t bound = 200;          // axioms, box-characters, product-formula
  std::vector<std::uint64_t> moduli{3, 4, 5, 8, 12};
};

struct IdentityInfo {
  std::string name;
  std::string summary;
  std::string inputs;
};

const std::vector<IdentityInfo>& list_identities();

/// coprime, ones, scaled:C, or a path to an "a b re im" table.
WeightFunction weight_from_name(const std::string& name);

/// Runs every grid point in order. Throws std::invalid_argument for an
/// unknown identity (the message lists the known ones) or a bad job.
std::vector<ReportRow> run_verify(const VerifyJob& job);

}  // namespace unitary
