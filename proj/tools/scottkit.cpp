#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scottkit/finite_poset.hpp"
#include "scottkit/open_family.hpp"
#include "scottkit/product_stages.hpp"
#include "scottkit/scenarios.hpp"
#include "scottkit/table.hpp"

using namespace scottkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;

// --seed beats the SCOTTKIT_SEED environment variable beats the default
std::optional<std::uint64_t> seed_from_env(std::string& error) {
  const char* raw = std::getenv("SCOTTKIT_SEED");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || end == raw || *end != '\0') {
    error = "SCOTTKIT_SEED is not a decimal number: " + std::string(raw);
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return false;
  }
  out << text;
  return true;
}

int cmd_verify(const std::string& scenario, bool all, bool json_mode,
               const std::string& out_path, const ScenarioParams& ps) {
  std::vector<ScenarioReport> reports;
  if (all) {
    reports = run_all_scenarios(ps);
  } else {
    auto r = run_scenario(scenario, ps);
    if (!r) {
      std::cerr << "unknown scenario: " << scenario << "\nknown scenarios:\n";
      for (const auto& [name, fn] : scenario_registry())
        std::cerr << "  " << name << "\n";
      return kExitBadArgs;
    }
    reports.push_back(*r);
  }

  bool ok = true;
  for (const ScenarioReport& r : reports) ok &= r.ok();

  std::string text;
  if (json_mode) {
    text = report_json(reports).dump(2) + "\n";
  } else {
    for (const ScenarioReport& r : reports) text += scenario_text(r);
    text += "overall: ";
    text += ok ? "PASS" : "FAIL";
    text += " (" + std::to_string(reports.size()) + " scenario" +
            (reports.size() == 1 ? "" : "s") + ")\n";
  }
  if (!emit(text, out_path)) return kExitCheckFailed;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_table(bool json_mode, const std::string& out_path) {
  MeetTable primary = licensed_primary_table();
  MeetTable extension = licensed_extension_table();
  std::vector<CellAudit> audits = audit_table(primary);
  for (CellAudit& a : audit_table(extension)) audits.push_back(std::move(a));
  bool ok = true;
  for (const CellAudit& a : audits) ok &= a.ok;

  std::string text;
  if (json_mode) {
    json tables = json::array();
    for (const MeetTable* t : {&primary, &extension}) {
      json cells = json::array();
      for (const CellAudit& a : audit_table(*t)) {
        if (a.row != t->row_tags.front() &&
            std::find(t->row_tags.begin(), t->row_tags.end(), a.row) ==
                t->row_tags.end())
          continue;
        cells.push_back(json{{"row", a.row},
                             {"col", a.col},
                             {"licensed", a.licensed},
                             {"observed", a.observed},
                             {"unreachable", a.dead},
                             {"extensions", a.extras},
                             {"ok", a.ok}});
      }
      tables.push_back(json{{"name", t->name}, {"cells", cells}});
    }
    text = json{{"schema", 1},
                {"tables", tables},
                {"status", ok ? "pass" : "fail"}}
               .dump(2) +
           "\n";
  } else {
    for (const MeetTable* t : {&primary, &extension}) {
      text += "licensed " + t->name + " table\n";
      for (const std::string& line : table_lines(*t, false)) text += line + "\n";
      text += "computed " + t->name + " table (representative pools)\n";
      for (const std::string& line : table_lines(*t, true)) text += line + "\n";
    }
    text += "documented unreachable entries\n";
    for (const auto& [row, col] : unreachable_entries())
      text += "  " + row + " with " + col + ": II\n";
    text += "documented extra entries\n";
    for (const auto& [cell, ext] : extension_entries())
      text += "  " + cell.first + " with " + cell.second + ": " + ext.tag +
              " (" + ext.reason + ")\n";
    for (const CellAudit& a : audits)
      if (!a.ok)
        text += "DISAGREEMENT at " + a.row + " with " + a.col + ": licensed " +
                join_tags(a.licensed) + ", observed " + join_tags(a.observed) +
                "\n";
    text += std::string("agreement: ") +
            (ok ? "exact outside the documented entries" : "BROKEN") + "\n";
  }
  if (!emit(text, out_path)) return kExitCheckFailed;
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_trace_product(std::size_t stages, const std::string& out_path) {
  EnumerablePoset<OmegaElem> p = omega_plus_one();
  EnumerablePoset<OmegaElem> q = omega_plus_one();
  auto at_least3 = [](const OmegaElem& x) { return !x.v || *x.v >= 3; };
  ProductOpenOracle<OmegaElem, OmegaElem> corner{
      "corner(3,3)", [at_least3](const OmegaElem& a, const OmegaElem& b) {
        return at_least3(a) && at_least3(b);
      }};
  auto st = run_stages(p, q, corner, {omega_fin(5), omega_fin(4)}, stages);
  std::string text = "staged run inside " + corner.name + " from (5,4)\n";
  for (const std::string& line : stage_trace_lines(p, q, st)) text += line + "\n";
  if (!emit(text, out_path)) return kExitCheckFailed;
  return kExitOk;
}

int cmd_trace_witness(const std::string& left, const std::string& right,
                      std::size_t depth, const std::string& out_path) {
  auto ls = pelem_parse(left);
  auto rs = pelem_parse(right);
  if (!ls || !rs) {
    std::cerr << "seed points must look like (column|n:3), (column|s:[1,2]) or "
                 "(column|top)\n";
    return kExitBadArgs;
  }
  POpenOracle u = column_open_oracle({ls->col});
  POpenOracle v = column_open_oracle({rs->col});
  IrreducibilityTrace tr = irreducibility_witness_trace(*ls, *rs, u, v, depth);
  std::string text = "witness walk for " + pelem_str(*ls) + " in " + u.name +
                     " and " + pelem_str(*rs) + " in " + v.name + "\n";
  for (const std::string& line : witness_trace_lines(tr)) text += line + "\n";
  if (!emit(text, out_path)) return kExitCheckFailed;
  return kExitOk;
}

int cmd_fixtures_check(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::cerr << "not a directory: " << dir << "\n";
    return kExitCheckFailed;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".poset")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .poset fixtures under " << dir << "\n";
    return kExitCheckFailed;
  }
  bool ok = true;
  for (const fs::path& file : files) {
    try {
      std::ifstream in(file);
      FinitePoset p = poset_load(in);
      FinitePoset again = poset_load_string(poset_save(p));
      bool same = again.size() == p.size() && again.labels() == p.labels();
      for (std::size_t i = 0; same && i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
          if (again.leq(i, j) != p.leq(i, j)) {
            same = false;
            break;
          }
      if (!same) throw std::logic_error("save/load round trip changed the order");
      std::cout << file.filename().string() << ": ok (" << p.size()
                << " elements, sober=" << (is_sober(p) ? "yes" : "no") << ")\n";
      if (!is_sober(p)) ok = false;
    } catch (const std::exception& e) {
      std::cout << file.filename().string() << ": FAIL " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for the countable-lattice sobriety constructions"};
  app.require_subcommand(1);

  ScenarioParams ps;
  std::string scenario_name;
  bool all = false;
  bool json_mode = false;
  std::string out_path;
  std::uint64_t seed_flag = 0;

  CLI::App* verify = app.add_subcommand("verify", "run verification scenarios");
  CLI::Option* scen_opt =
      verify->add_option("--scenario", scenario_name, "scenario name");
  verify->add_flag("--all", all, "run every scenario");
  CLI::Option* seed_opt =
      verify->add_option("--seed", seed_flag, "random seed (64-bit)");
  verify->add_flag("--json", json_mode, "machine-readable report");
  verify->add_option("--out", out_path, "write the report to a file");
  verify->add_option("--col-max", ps.col_max, "column bound of the window")
      ->check(CLI::Range(std::size_t(2), std::size_t(64)));
  verify
      ->add_option("--seq-weight-max", ps.seq_weight_max,
                   "sequence weight bound of the window")
      ->check(CLI::Range(std::size_t(2), std::size_t(10)));
  verify->add_option("--stages", ps.stages, "stages for the product run")
      ->check(CLI::Range(std::size_t(1), std::size_t(64)));
  verify->add_option("--depth", ps.depth, "search depth for witness walks")
      ->check(CLI::Range(std::size_t(4), std::size_t(1024)));
  scen_opt->excludes("--all");

  CLI::App* table =
      app.add_subcommand("table", "licensed meet tables against computed meets");
  bool table_json = false;
  std::string table_out;
  table->add_flag("--json", table_json, "machine-readable tables");
  table->add_option("--out", table_out, "write to a file");

  CLI::App* trace = app.add_subcommand("trace", "narrate one construction run");
  std::string trace_kind;
  trace->add_option("kind", trace_kind, "product | witness")
      ->required()
      ->check(CLI::IsMember({"product", "witness"}));
  std::size_t trace_stages = 4;
  std::size_t trace_depth = 32;
  std::string left = "(1|s:[1])";
  std::string right = "(2|n:1)";
  std::string trace_out;
  trace->add_option("--stages", trace_stages, "stages for the product run")
      ->check(CLI::Range(std::size_t(1), std::size_t(64)));
  trace->add_option("--depth", trace_depth, "search depth for the witness walk")
      ->check(CLI::Range(std::size_t(4), std::size_t(1024)));
  trace->add_option("--left", left, "left seed point");
  trace->add_option("--right", right, "right seed point");
  trace->add_option("--out", trace_out, "write to a file");

  CLI::App* fixtures = app.add_subcommand("fixtures", "poset fixture utilities");
  fixtures->require_subcommand(1);
  CLI::App* fcheck =
      fixtures->add_subcommand("check", "load and validate every fixture");
  std::string fixture_dir = "fixtures";
  fcheck->add_option("--dir", fixture_dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    if (verify->parsed()) {
      if (!all && scenario_name.empty()) {
        std::cerr << "pick --scenario <name> or --all\nknown scenarios:\n";
        for (const auto& [name, fn] : scenario_registry())
          std::cerr << "  " << name << "\n";
        return kExitBadArgs;
      }
      std::string env_error;
      auto env_seed = seed_from_env(env_error);
      if (!env_error.empty() && seed_opt->count() == 0) {
        std::cerr << env_error << "\n";
        return kExitBadArgs;
      }
      if (seed_opt->count() > 0)
        ps.seed = seed_flag;
      else if (env_seed)
        ps.seed = *env_seed;
      return cmd_verify(scenario_name, all, json_mode, out_path, ps);
    }
    if (table->parsed()) return cmd_table(table_json, table_out);
    if (trace->parsed()) {
      if (trace_kind == "product") return cmd_trace_product(trace_stages, trace_out);
      return cmd_trace_witness(left, right, trace_depth, trace_out);
    }
    if (fcheck->parsed()) return cmd_fixtures_check(fixture_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadArgs;
}
