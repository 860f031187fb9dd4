#include <gtest/gtest.h>

#include <sstream>

#include "unitary/verify.hpp"

using namespace unitary;

namespace {

VerifyJob job(std::string identity) {
  VerifyJob j;
  j.identity = std::move(identity);
  j.Ns = {2000};
  j.Ps = {2000};
  return j;
}

std::string dump(const std::vector<ReportRow>& rows, ReportFormat format) {
  std::ostringstream out;
  write_report(out, rows, format);
  return out.str();
}

}  // namespace

TEST(Report, JsonFieldsInOrder) {
  auto rows = run_verify(job("hardy"));
  ASSERT_EQ(rows.size(), 1u);
  auto j = to_json(rows[0]);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "params", "lhs", "rhs", "abs_error", "rel_error",
                                            "tol", "pass", "tail_bound", "seed", "workers"}));
  EXPECT_EQ(j["identity"], "hardy");
  EXPECT_EQ(j["lhs"].size(), 2u);
  EXPECT_EQ(j["params"]["N"], 2000);
  EXPECT_EQ(j["params"]["mode"], "direct");
  EXPECT_TRUE(j["pass"].is_boolean());
}

TEST(Report, NotApplicableHasNullPass) {
  auto j = job("zeta-cosine");
  j.xs = {0.8};
  j.ys = {5};
  j.config.exploratory = true;
  j.config.mode = SummationMode::kCesaro;
  auto rows = run_verify(j);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, CheckStatus::kNotApplicable);
  EXPECT_TRUE(to_json(rows[0])["pass"].is_null());
  EXPECT_TRUE(all_applicable_passed(rows));
  auto csv = dump(rows, ReportFormat::kCsv);
  EXPECT_NE(csv.find(",,"), std::string::npos);
}

TEST(Report, CsvMirrorsColumns) {
  auto rows = run_verify(job("hardy"));
  auto csv = dump(rows, ReportFormat::kCsv);
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header,
            "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rel_error,tol,pass,tail_bound,seed,workers");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("hardy,\"{", 0), 0u) << line;
  EXPECT_NE(line.find(",true,"), std::string::npos) << line;
  EXPECT_EQ(parse_format("csv"), ReportFormat::kCsv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Verify, GridOrderIsNested) {
  auto j = job("zeta-cosine");
  j.xs = {2, 3};
  j.ys = {0, 1};
  j.Ns = {100, 200};
  auto rows = run_verify(j);
  ASSERT_EQ(rows.size(), 8u);
  std::size_t i = 0;
  for (double x : j.xs) {
    for (double y : j.ys) {
      for (std::uint64_t N : j.Ns) {
        EXPECT_EQ(rows[i].params["x"], x);
        EXPECT_EQ(rows[i].params["y"], y);
        EXPECT_EQ(rows[i].params["N"], N);
        ++i;
      }
    }
  }
}

TEST(Verify, DeterministicForJobSeedAndWorkers) {
  auto j = job("product-formula");
  j.seed = 12;
  j.bound = 500;
  EXPECT_EQ(to_json(run_verify(j)).dump(), to_json(run_verify(j)).dump());
  auto s = job("modsq");
  s.f = "crand@5";
  s.ys = {1.5};
  s.config.workers = 3;
  EXPECT_EQ(to_json(run_verify(s)).dump(), to_json(run_verify(s)).dump());
  EXPECT_EQ(run_verify(s)[0].workers, 3u);
}

TEST(Verify, EveryListedIdentityRuns) {
  for (const auto& info : list_identities()) {
    auto j = job(info.name);
    j.bound = 60;
    j.f = "crand@3";
    j.g = "crand@4";
    j.ys = {0.5};
    auto rows = run_verify(j);
    EXPECT_FALSE(rows.empty()) << info.name;
    EXPECT_TRUE(all_applicable_passed(rows)) << info.name << "\n" << to_json(rows).dump(2);
  }
}

TEST(Verify, RingAxiomsRowsAndWitness) {
  auto j = job("ring-axioms");
  j.weight = "ones";
  j.bound = 50;
  auto rows = run_verify(j);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_FALSE(all_applicable_passed(rows));
  const auto& dist = rows[4];
  EXPECT_EQ(dist.params["axiom"], "distributivity");
  EXPECT_EQ(dist.status, CheckStatus::kFail);
  EXPECT_TRUE(dist.params.contains("witness"));
  EXPECT_TRUE(dist.lhs.has_value());
}

TEST(Verify, Errors) {
  try {
    run_verify(job("riemann"));
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("hardy"), std::string::npos);
    EXPECT_NE(msg.find("ring-axioms"), std::string::npos);
  }
  auto j = job("hardy");
  j.tolerance = 0.0;
  EXPECT_THROW(run_verify(j), std::invalid_argument);
  j = job("hardy");
  j.xs.clear();
  EXPECT_THROW(run_verify(j), std::invalid_argument);
  j = job("lseries-euler");
  j.character = "4:7";
  EXPECT_THROW(run_verify(j), std::invalid_argument);
  j = job("hardy");
  j.xs = {1.0};
  EXPECT_THROW(run_verify(j), std::domain_error);
}

TEST(Verify, WeightNames) {
  EXPECT_EQ(weight_from_name("coprime")(2, 3), Complex(1));
  EXPECT_EQ(weight_from_name("ones")(2, 2), Complex(1));
  EXPECT_EQ(weight_from_name("scaled:3")(1, 2), Complex(3));
  EXPECT_THROW(weight_from_name("/nonexistent/weights.txt"), std::runtime_error);
}
