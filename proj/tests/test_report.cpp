#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "bergman/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bergman;

namespace {

bool has_entry(const std::vector<CatalogueEntry>& cat, const std::string& id, const std::string& anchor) {
  for (const auto& e : cat)
    if (e.id == id && e.anchor == anchor) return true;
  return false;
}

CheckSpec fake(std::string id, bool exploratory, std::function<CheckOutcome(const SuiteConfig&)> run) {
  return {std::move(id), "kernel", "anchor", "synthetic", exploratory, std::move(run)};
}

}  // namespace

TEST_CASE("catalogue") {
  auto kernel = list_checks("kernel");
  CHECK(has_entry(kernel, "convolution_residual", "Eq. multconv"));
  CHECK(has_entry(list_checks("carleson"), "dl2_witness", "Lemma DL2norm"));
  auto all = list_checks("all");
  std::set<std::string> ids;
  std::size_t union_size = 0;
  for (const auto& s : suite_names()) union_size += list_checks(s).size();
  for (const auto& e : all) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.anchor.empty());
    CHECK(e.anchor.find("\xc2\xa7") == std::string::npos);  // no section signs
  }
  CHECK(all.size() == union_size);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK_THROWS_AS(list_checks("nope"), std::invalid_argument);
  // each hankel check belongs to the hankel suite and exploratory checks exist
  bool any_exploratory = false;
  for (const auto& e : list_checks("hankel")) {
    CHECK(e.suite == "hankel");
    any_exploratory = any_exploratory || e.exploratory;
  }
  CHECK(any_exploratory);
}

TEST_CASE("config validation") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  auto bad = c;
  bad.tolerance = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.tolerance = 0.02;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = c;
  bad.suite = "spectral";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = c;
  bad.max_degree = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = c;
  bad.prime_count = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("verdicts, errors and exit status") {
  SuiteConfig c;
  c.suite = "kernel";
  std::vector<CheckSpec> checks = {
      fake("a_pass", false, [](const SuiteConfig&) { return CheckOutcome{{{"x", 1.0}}, 0.0, 1.0, true}; }),
      fake("b_open", true, [](const SuiteConfig&) { return CheckOutcome{{}, 5.0, 1.0, false}; }),
      fake("c_throws_open", true, [](const SuiteConfig&) -> CheckOutcome { throw std::runtime_error("boom"); }),
  };
  auto r = run_checks(c, checks);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[0].verdict == Verdict::pass);
  CHECK(r.checks[1].verdict == Verdict::inconclusive);
  CHECK(r.checks[2].verdict == Verdict::inconclusive);
  CHECK(r.checks[2].error == std::string("boom"));
  CHECK(r.exit_status() == 0);

  checks.push_back(fake("d_throws", false, [](const SuiteConfig&) -> CheckOutcome { throw std::bad_alloc(); }));
  checks.push_back(fake("e_after", false, [](const SuiteConfig&) { return CheckOutcome{{}, 0.0, 0.0, true}; }));
  auto r2 = run_checks(c, checks);
  REQUIRE(r2.checks.size() == 5);
  CHECK(r2.checks[3].verdict == Verdict::fail);
  CHECK(r2.checks[3].error == std::string("out of memory"));
  CHECK(r2.checks[4].verdict == Verdict::pass);  // the run continues past the error
  CHECK(r2.summary.failed == 1);
  CHECK(r2.summary.errors == 2);
  CHECK(r2.exit_status() == 1);

  // a nan statistic never passes
  auto r3 = run_checks(c, {fake("nan", false, [](const SuiteConfig&) { return CheckOutcome{{}, NAN, 1.0, true}; })});
  CHECK(r3.checks[0].verdict == Verdict::fail);

  // other suites are skipped
  c.suite = "disc";
  CHECK(run_checks(c, checks).checks.empty());
}

TEST_CASE("renderings") {
  SuiteConfig c;
  c.suite = "kernel";
  std::vector<CheckSpec> checks = {
      fake("one", false,
           [](const SuiteConfig&) { return CheckOutcome{{{"v", 0.1}, {"w", INFINITY}}, -1.0, 0.0, true}; }),
      fake("two, quoted", true, [](const SuiteConfig&) { return CheckOutcome{{}, 0.0, 0.0, true}; }),
  };
  auto r = run_checks(c, checks);
  auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["schema"].is_number_integer());
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["config"]["suite"] == "kernel");
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["values"]["v"] == 0.1);
  CHECK(j["checks"][0]["values"]["w"] == "inf");
  CHECK(j["checks"][1]["verdict"] == "inconclusive");
  CHECK(j["summary"]["exit_status"] == 0);
  CHECK_FALSE(j["checks"][0].contains("wall_seconds"));

  const std::string csv = render_csv(r);
  std::istringstream is(csv);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 3);
  CHECK(csv.find("\"two, quoted\"") != std::string::npos);
  CHECK(csv.find("v=0.10000000000000001;w=inf") != std::string::npos);
  CHECK(render_text(r).find("[INCONCLUSIVE] two, quoted") != std::string::npos);

  c.timing = true;
  auto timed = nlohmann::json::parse(render_json(run_checks(c, checks)));
  CHECK(timed["checks"][0].contains("wall_seconds"));
}

TEST_CASE("kernel suite passes and is deterministic") {
  SuiteConfig c;
  c.suite = "kernel";
  c.max_n = 10000;
  c.format = OutputFormat::json;
  auto a = run_suite(c);
  CHECK(a.summary.failed == 0);
  CHECK(a.summary.total == list_checks("kernel").size());
  CHECK(a.exit_status() == 0);
  auto b = run_suite(c);
  CHECK(render(a) == render(b));
}

TEST_CASE("hankel golden matrix at degree 2") {
  SuiteConfig c;
  c.suite = "hankel";
  c.max_degree = 2;
  auto r = run_suite(c);
  const CheckRecord* golden = nullptr;
  for (const auto& k : r.checks)
    if (k.id == "weakfac_constants.matrix") golden = &k;
  REQUIRE(golden != nullptr);
  CHECK(golden->verdict == Verdict::pass);
  std::map<std::string, double> v(golden->values.begin(), golden->values.end());
  CHECK(v["entry_0_1"] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v["entry_1_0"] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v["s_1"] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v["s_2"] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.exit_status() == 0);
}

TEST_CASE("atomic write") {
  const auto dir = std::filesystem::temp_directory_path() / "bergman_report_test";
  std::filesystem::remove_all(dir);
  const auto path = (dir / "sub" / "r.json").string();
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream is(path);
  std::string s((std::istreambuf_iterator<char>(is)), {});
  CHECK(s == "second\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}
