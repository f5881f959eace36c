#include "bergman/report.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bergman {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, json or csv)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "fail";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernel", "disc", "polydisc", "hankel", "carleson"};
  return names;
}

bool is_suite(const std::string& s) {
  return s == "all" || std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end();
}

void validate(const SuiteConfig& c) {
  if (!is_suite(c.suite)) throw std::invalid_argument("unknown suite '" + c.suite + "'");
  if (c.max_n < 100) throw std::invalid_argument("max-n must be at least 100");
  if (c.max_n > 100000000) throw std::invalid_argument("max-n must not exceed 1e8");
  if (c.prime_count < 1 || c.prime_count > 1000) throw std::invalid_argument("primes must lie in [1, 1000]");
  if (c.max_degree < 1 || c.max_degree > 60) throw std::invalid_argument("degree must lie in [1, 60]");
  if (c.quad_order < 4 || c.quad_order > 512) throw std::invalid_argument("quad-order must lie in [4, 512]");
  if (!(c.tolerance > 0 && c.tolerance <= 1e-2)) throw std::invalid_argument("tol must lie in (0, 1e-2]");
}

std::vector<CatalogueEntry> list_checks(const std::string& suite) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<CatalogueEntry> out;
  for (const auto& c : check_registry())
    if (suite == "all" || c.suite == suite) out.push_back({c.id, c.suite, c.anchor, c.description, c.exploratory});
  return out;
}

VerificationReport run_suite(const SuiteConfig& config) { return run_checks(config, check_registry()); }

VerificationReport run_checks(const SuiteConfig& config, const std::vector<CheckSpec>& checks) {
  validate(config);
  VerificationReport rep;
  rep.config = config;
  for (const auto& spec : checks) {
    if (config.suite != "all" && spec.suite != config.suite) continue;
    CheckRecord rec;
    rec.id = spec.id;
    rec.suite = spec.suite;
    rec.anchor = spec.anchor;
    rec.description = spec.description;
    rec.exploratory = spec.exploratory;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      CheckOutcome o = spec.run(config);
      rec.values = std::move(o.values);
      rec.gap = o.gap;
      rec.tolerance = o.tolerance;
      ok = o.ok && !std::isnan(o.gap);
    } catch (const std::bad_alloc&) {
      rec.error = "out of memory";
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (spec.exploratory)
      rec.verdict = Verdict::inconclusive;
    else
      rec.verdict = ok ? Verdict::pass : Verdict::fail;

    auto& s = rep.summary;
    ++s.total;
    if (rec.error) ++s.errors;
    switch (rec.verdict) {
      case Verdict::pass: ++s.passed; break;
      case Verdict::fail: ++s.failed; break;
      case Verdict::inconclusive: ++s.inconclusive; break;
    }
    rep.checks.push_back(std::move(rec));
  }
  return rep;
}

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_num(double x) {
  if (!std::isfinite(x)) return num(x);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return num(x);  // JSON has no inf / nan literals
}

nlohmann::ordered_json config_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["suite"] = c.suite;
  j["max_n"] = c.max_n;
  j["prime_count"] = c.prime_count;
  j["max_degree"] = c.max_degree;
  j["quad_order"] = c.quad_order;
  j["tolerance"] = c.tolerance;
  j["seed"] = c.seed;
  j["format"] = to_string(c.format);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["artifact_version"] = kArtifactVersion;
  j["config"] = config_json(r.config);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json o;
    o["id"] = c.id;
    o["suite"] = c.suite;
    o["anchor"] = c.anchor;
    o["description"] = c.description;
    o["exploratory"] = c.exploratory;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.values) vals[k] = json_number(v);
    o["values"] = vals;
    o["gap"] = json_number(c.gap);
    o["tolerance"] = json_number(c.tolerance);
    o["verdict"] = to_string(c.verdict);
    if (c.error) o["error"] = *c.error;
    if (r.config.timing) o["wall_seconds"] = c.wall_seconds;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json s;
  s["total"] = r.summary.total;
  s["passed"] = r.summary.passed;
  s["failed"] = r.summary.failed;
  s["inconclusive"] = r.summary.inconclusive;
  s["errors"] = r.summary.errors;
  s["exit_status"] = r.exit_status();
  j["summary"] = std::move(s);
  return j.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite,id,anchor,exploratory,verdict,gap,tolerance,error,values";
  if (r.config.timing) os << ",wall_seconds";
  os << '\n';
  for (const auto& c : r.checks) {
    std::string vals;
    for (const auto& [k, v] : c.values) {
      if (!vals.empty()) vals += ';';
      vals += k + "=" + num(v);
    }
    os << csv_field(c.suite) << ',' << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << (c.exploratory ? 1 : 0) << ','
       << to_string(c.verdict) << ',' << num(c.gap) << ',' << num(c.tolerance) << ','
       << csv_field(c.error.value_or("")) << ',' << csv_field(vals);
    if (r.config.timing) os << ',' << num(c.wall_seconds);
    os << '\n';
  }
  return os.str();
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  const auto& c = r.config;
  os << "suite " << c.suite << "  max_n=" << c.max_n << " primes=" << c.prime_count << " degree=" << c.max_degree
     << " quad_order=" << c.quad_order << " tol=" << short_num(c.tolerance) << " seed=" << c.seed << '\n';
  for (const auto& k : r.checks) {
    std::string tag = to_string(k.verdict);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << '[' << tag << "] " << k.id << " / " << k.anchor << "  gap=" << short_num(k.gap)
       << " tol=" << short_num(k.tolerance);
    if (c.timing) os << " time=" << short_num(k.wall_seconds) << "s";
    os << '\n';
    if (k.error) os << "    error: " << *k.error << '\n';
    for (const auto& [name, v] : k.values) os << "    " << name << " = " << short_num(v) << '\n';
  }
  const auto& s = r.summary;
  os << "summary: " << s.total << " checks, " << s.passed << " passed, " << s.failed << " failed, "
     << s.inconclusive << " inconclusive, " << s.errors << " errors\n";
  return os.str();
}

std::string render(const VerificationReport& r) {
  switch (r.config.format) {
    case OutputFormat::json: return render_json(r);
    case OutputFormat::csv: return render_csv(r);
    case OutputFormat::text: return render_text(r);
  }
  return render_text(r);
}

void write_file_atomic(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << body;
    os.flush();
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
}

}  // namespace bergman
