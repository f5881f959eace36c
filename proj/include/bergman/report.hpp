#pragma once

// Verification suites: a registry of named checks, the configuration they run
// under, and the text / JSON / CSV renderings of their results.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bergman {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

enum class OutputFormat { text, json, csv };
std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);  // throws std::invalid_argument

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

/// Suites with registered checks, in catalogue order; "all" is their union.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& s);

struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t max_n = 10000;       // arithmetic range for table-driven checks
  std::uint32_t prime_count = 3;     // primes available to Dirichlet supports
  std::uint32_t max_degree = 10;     // degree of random polynomials and Hankel sections
  std::uint32_t quad_order = 24;     // radial nodes per variable for non-even p
  double tolerance = 1e-10;          // residual bound for identities, slack for inequality gaps
  std::uint64_t seed = 20240611;
  OutputFormat format = OutputFormat::text;
  std::string out;                   // empty: stdout or the default directory
  bool timing = false;               // include wall times (breaks byte identity)
};

/// Throws std::invalid_argument describing the first violated bound.
void validate(const SuiteConfig& c);

struct CheckRecord {
  std::string id;
  std::string suite;
  std::string anchor;
  std::string description;
  bool exploratory = false;
  std::vector<std::pair<std::string, double>> values;
  double gap = 0;        // the thresholded statistic (violation, residual, ...)
  double tolerance = 0;  // a check passes only if gap <= tolerance
  Verdict verdict = Verdict::pass;
  std::optional<std::string> error;  // set when the check threw
  double wall_seconds = 0;
};

/// What a check body fills in; run_suite derives the verdict. ok carries
/// gap <= tolerance together with any side conditions of the check.
struct CheckOutcome {
  std::vector<std::pair<std::string, double>> values;
  double gap = 0;
  double tolerance = 0;
  bool ok = true;
  void value(std::string name, double v) { values.emplace_back(std::move(name), v); }
};

struct CheckSpec {
  std::string id;  // "<operation>" or "<operation>.<variant>"
  std::string suite;
  std::string anchor;
  std::string description;
  bool exploratory = false;
  std::function<CheckOutcome(const SuiteConfig&)> run;
};

/// Every registered check, sorted by id. Ids are unique.
const std::vector<CheckSpec>& check_registry();

struct CatalogueEntry {
  std::string id;
  std::string suite;
  std::string anchor;
  std::string description;
  bool exploratory;
};
/// Sorted by id. Throws std::invalid_argument for an unknown suite.
std::vector<CatalogueEntry> list_checks(const std::string& suite);

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  std::size_t errors = 0;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  ReportSummary summary;
  /// 0 iff no non-exploratory check failed.
  [[nodiscard]] int exit_status() const { return summary.failed == 0 ? 0 : 1; }
};

/// Runs every check of config.suite in catalogue order. A check that throws
/// becomes a failed record carrying the message (inconclusive if exploratory),
/// and the remaining checks still run. Throws std::invalid_argument on an
/// invalid config.
VerificationReport run_suite(const SuiteConfig& config);
/// Same over an explicit list of checks (those outside config.suite skipped).
VerificationReport run_checks(const SuiteConfig& config, const std::vector<CheckSpec>& checks);

std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);
std::string render_csv(const VerificationReport& r);
std::string render(const VerificationReport& r);  // in r.config.format

/// Writes to a temporary sibling and renames it over path.
void write_file_atomic(const std::string& path, const std::string& body);

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "BERGMAN_VERIFY_OUTDIR";

}  // namespace bergman
