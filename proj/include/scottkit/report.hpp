#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace scottkit {

using json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;  // short free-form evidence: counts, witnesses, bounds
};

struct ScenarioReport {
  std::string scenario;
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;

  bool ok() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// One scenario as JSON. Key order is fixed; `elapsed` is the only
// run-dependent field, so reproducibility comparisons strip that key alone.
inline json scenario_json(const ScenarioReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"status", c.passed ? "pass" : "fail"},
                          {"details", c.details}});
  return json{{"scenario", r.scenario}, {"parameters", r.parameters},
              {"seed", r.seed},         {"checks", checks},
              {"status", r.ok() ? "pass" : "fail"},
              {"elapsed", r.elapsed_seconds}};
}

inline json report_json(const std::vector<ScenarioReport>& rs) {
  json scenarios = json::array();
  bool all_ok = true;
  for (const ScenarioReport& r : rs) {
    scenarios.push_back(scenario_json(r));
    all_ok &= r.ok();
  }
  return json{{"schema", 1},
              {"scenarios", scenarios},
              {"status", all_ok ? "pass" : "fail"}};
}

inline std::string scenario_text(const ScenarioReport& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario << " (seed " << r.seed;
  for (auto it = r.parameters.begin(); it != r.parameters.end(); ++it)
    out << ", " << it.key() << " " << it.value().dump();
  out << ")\n";
  for (const CheckResult& c : r.checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.details.empty()) out << ": " << c.details;
    out << "\n";
  }
  std::ostringstream secs;
  secs.precision(2);
  secs << std::fixed << r.elapsed_seconds;
  out << "  result: " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks.size()
      << " checks, " << secs.str() << "s)\n";
  return out.str();
}

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace scottkit
