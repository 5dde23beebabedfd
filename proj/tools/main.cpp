// symquot command-line front end.
#include "symquot/reference_checks.hpp"
#include "symquot/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace symquot;

namespace {

enum Exit { ok = 0, verify_failed = 1, bad_input = 2, internal = 3, counterexample = 4 };

struct Output {
  std::string format = "text";
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& command, Json input, Json result, const std::string& text_override = {}) const {
    Json j = envelope(command, std::move(input), std::move(result));
    if (timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      j["timing"] = {{"milliseconds", ms.count()}};
    }
    if (format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << (text_override.empty() ? flatten_text(j) : text_override);
  }
};

std::string fixture_dir() {
  if (const char* env = std::getenv("SYMQUOT_FIXTURE_DIR")) return env;
  return SYMQUOT_DEFAULT_FIXTURE_DIR;
}

ArgumentCheck scan_fixture_check() {
  const std::string path = fixture_dir() + "/scan_n3_alpha10.csv";
  std::ifstream in(path);
  if (!in) return {"scan n=3 α≤10 matches regression fixture", false, "cannot read " + path};
  std::stringstream expected;
  expected << in.rdbuf();
  const bool same = expected.str() == scan_csv(scan(3, 10));
  return {"scan n=3 α≤10 matches regression fixture", same, same ? path : "differs from " + path};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle quotients versus finite unitary quotients: analysis and audit"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", out.timing, "Add elapsed milliseconds to the output");

  std::string weights;
  std::size_t series_degree = 10;
  auto* analyze = app.add_subcommand("analyze", "Invariants of one weight vector");
  analyze->add_option("--weights", weights, "Comma-separated integer weights")->required()->allow_extra_args(false);
  analyze->add_option("--series-degree", series_degree, "Degree of the on-shell series head");

  std::string type;
  DuValSpec spec;
  bool molien = false;
  auto* group = app.add_subcommand("group", "One finite subgroup of U(2)");
  group->add_option("--type", type, "I, II, III, III', IV, ..., IX")->required();
  group->add_option("--m", spec.m, "m");
  group->add_option("--ell", spec.ell, "ell (Types II-IV)");
  group->add_option("--n", spec.n, "n (Type I)");
  group->add_option("--f", spec.f, "f (Type I)");
  group->add_option("--g", spec.g, "g (Type I)");
  group->add_option("--d", spec.d, "d (Type I)");
  group->add_flag("--molien", molien, "Compute the Molien series");
  group->add_option("--series-degree", series_degree, "Taylor terms of the Molien series");

  std::int64_t order = 1;
  auto* catalog = app.add_subcommand("catalog", "All groups of a given order");
  catalog->add_option("--order", order, "Group order")->required()->check(CLI::PositiveNumber);

  bool certificates = false;
  auto* audit_cmd = app.add_subcommand("audit", "Full exclusion audit of one weight vector");
  audit_cmd->add_option("--weights", weights, "Comma-separated integer weights")->required();
  audit_cmd->add_flag("--certificates", certificates, "Include every exclusion certificate");

  std::size_t n = 3;
  std::int64_t alpha_max = 10;
  std::string csv;
  unsigned jobs = 1;
  auto* scan_cmd = app.add_subcommand("scan", "Audit every normalized vector within bounds");
  scan_cmd->add_option("--n", n, "Number of weights")->check(CLI::Range(2, 8));
  scan_cmd->add_option("--alpha-max", alpha_max, "Largest |weight|")->required();
  scan_cmd->add_option("--csv", csv, "Write one row per vector to PATH ('-' for stdout)");
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::int64_t scan_bound = 100;
  auto* verify = app.add_subcommand("verify-paper", "Recompute reference values and the proof scans");
  verify->add_option("--scan-bound", scan_bound, "Bound on alphas for the proof scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? ok : bad_input;
  }

  try {
    if (*analyze) {
      WeightVector a = WeightVector::parse(weights);
      out.emit("analyze", {{"weights", a.to_string()}, {"series_degree", series_degree}}, analyze_json(a, series_degree));
      return ok;
    }
    if (*group) {
      spec.type = parse_duval_type(type);
      spec.validate();
      Json input = {{"type", to_string(spec.type)}, {"m", spec.m}, {"ell", spec.ell}, {"n", spec.n},
                    {"f", spec.f},                  {"g", spec.g}, {"d", spec.d},     {"molien", molien}};
      out.emit("group", input, group_json(spec, molien, series_degree));
      return ok;
    }
    if (*catalog) {
      out.emit("catalog", {{"order", order}}, catalog_json(order));
      return ok;
    }
    if (*audit_cmd) {
      WeightVector a = WeightVector::parse(weights);
      AuditReport r = audit(a);
      out.emit("audit", {{"weights", a.to_string()}, {"certificates", certificates}}, audit_json(r, certificates));
      return r.verdict == Verdict::counterexample_candidate ? counterexample : ok;
    }
    if (*scan_cmd) {
      auto rows = scan(n, alpha_max, jobs);
      if (!csv.empty()) {
        if (csv == "-") {
          std::cout << scan_csv(rows);
        } else {
          std::ofstream file(csv);
          if (!file) throw std::runtime_error("cannot write " + csv);
          file << scan_csv(rows);
        }
      }
      if (csv != "-") out.emit("scan", {{"n", n}, {"alpha_max", alpha_max}}, scan_summary_json(rows, n, alpha_max));
      for (const auto& r : rows)
        if (r.verdict == Verdict::counterexample_candidate) return counterexample;
      return ok;
    }
    if (*verify) {
      auto checks = reference_value_checks(scan_bound);
      checks.push_back(scan_fixture_check());
      Json result = checks_json(checks);
      std::string table = checks_table(checks);
      for (const auto& c : checks)
        if (!c.passed) table += "failed: " + c.name + " (" + c.detail + ")\n";
      out.emit("verify-paper", {{"scan_bound", scan_bound}}, result, table);
      return result["passed"].get<bool>() ? ok : verify_failed;
    }
  } catch (const std::invalid_argument& e) {  // includes InvalidSpec and weight parse errors
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return internal;
}
