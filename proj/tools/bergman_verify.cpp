// bergman-verify: run the verification suites and print or store the report.
//
//   bergman-verify verify <suite> [--max-n N] [--primes J] [--degree D]
//                  [--quad-order Q] [--tol T] [--seed S]
//                  [--format text|json|csv] [--out PATH] [--timing]
//   bergman-verify list <suite>
//
// Exit status: 0 when no non-exploratory check failed, 1 otherwise, 2 on a
// usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "bergman/report.hpp"

namespace {

constexpr int kUsageError = 2;

std::string extension(bergman::OutputFormat f) {
  switch (f) {
    case bergman::OutputFormat::json: return ".json";
    case bergman::OutputFormat::csv: return ".csv";
    case bergman::OutputFormat::text: return ".txt";
  }
  return ".txt";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification suites for Bergman and Hardy spaces of Dirichlet series"};
  app.require_subcommand(1);

  bergman::SuiteConfig cfg;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "run the checks of a suite and emit a report");
  verify->add_option("suite", cfg.suite, "kernel, disc, polydisc, hankel, carleson or all")->required();
  verify->add_option("--max-n", cfg.max_n, "arithmetic range for table-driven checks")->capture_default_str();
  verify->add_option("--primes", cfg.prime_count, "primes available to Dirichlet supports")->capture_default_str();
  verify->add_option("--degree", cfg.max_degree, "degree of random polynomials and Hankel sections")
      ->capture_default_str();
  verify->add_option("--quad-order", cfg.quad_order, "radial nodes per variable for non-even p")
      ->capture_default_str();
  verify->add_option("--tol", cfg.tolerance, "tolerance in (0, 1e-2]")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed of the random ensembles")->capture_default_str();
  verify->add_option("--format", format, "text, json or csv")->capture_default_str();
  verify->add_option("--out", cfg.out, "output file (default: stdout, or $" + std::string(bergman::kOutputDirEnv) +
                                           "/verify-<suite>.<ext> when set)");
  verify->add_flag("--timing", cfg.timing, "record wall times (reports are then not byte-identical)");

  std::string list_suite;
  auto* list = app.add_subcommand("list", "print the check catalogue of a suite");
  list->add_option("suite", list_suite, "kernel, disc, polydisc, hankel, carleson or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (*list) {
    try {
      for (const auto& e : bergman::list_checks(list_suite))
        std::cout << e.id << " / " << e.anchor << "\t[" << e.suite << (e.exploratory ? ", exploratory" : "") << "] "
                  << e.description << '\n';
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsageError;
    }
    return 0;
  }

  try {
    cfg.format = bergman::parse_format(format);
    bergman::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto report = bergman::run_suite(cfg);
  const std::string body = bergman::render(report);

  std::string path = cfg.out;
  if (path.empty())
    if (const char* dir = std::getenv(bergman::kOutputDirEnv); dir && *dir)
      path = (std::filesystem::path(dir) / ("verify-" + cfg.suite + extension(cfg.format))).string();
  if (path.empty()) {
    std::cout << body;
  } else {
    try {
      bergman::write_file_atomic(path, body);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsageError;
    }
    std::cerr << "report written to " << path << '\n';
  }
  const auto& s = report.summary;
  std::cerr << s.passed << " passed, " << s.failed << " failed, " << s.inconclusive << " inconclusive\n";
  return report.exit_status();
}
