#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sylow/branching_theory.hpp"
#include "sylow/harness.hpp"
#include "sylow/serialization.hpp"
#include "sylow/sn_characters.hpp"
#include "sylow/sylow_wreath.hpp"

namespace {

using namespace sylow;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
  int p = 0;
  int n = 0;
  std::string label;
  bool all_orbits = false;
  std::string lambda;
  std::string method = "composition";
  bool json = false;
  bool exact = false;
  std::vector<int> ns;
  std::vector<std::string> suites;
  std::string cache_in;
  std::string cache_out;
  std::uint64_t budget = 0;
};

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

MultisetLabel label_from(const Options& o) {
  if (o.label.empty()) throw ArgumentError("a label (-s) is required");
  return MultisetLabel::parse_sequences(o.p, o.n, o.label);
}

void print_prediction_row(const Prediction& pred) {
  std::vector<std::string> taus, fs, gs;
  for (const auto& st : pred.stats) {
    taus.push_back(std::to_string(st.tau));
    fs.push_back(optional_text(st.f));
    gs.push_back(optional_text(st.g));
  }
  std::cout << std::left << std::setw(28) << pred.label.to_string() << std::setw(10) << join(taus, ",")
            << std::setw(10) << join(fs, ",") << std::setw(10) << join(gs, ",") << std::setw(12) << pred.type.to_string()
            << std::setw(10) << pred.m << std::setw(10) << pred.M << std::setw(10) << pred.N
            << pred.omega.normal_form() << '\n';
  for (const auto& note : pred.notes) std::cout << "  note: " << note << '\n';
}

int cmd_predict(const Options& o) {
  std::vector<MultisetLabel> labels;
  if (o.all_orbits) labels = orbit_representatives_n(o.p, o.n);
  else labels.push_back(label_from(o));
  if (o.json) {
    Json out = Json::array();
    for (const auto& label : labels) out.push_back(to_json(predict(label)));
    std::cout << (labels.size() == 1 && !o.all_orbits ? out[0] : out).dump(2) << '\n';
    return kOk;
  }
  std::cout << std::left << std::setw(28) << "s" << std::setw(10) << "tau" << std::setw(10) << "f" << std::setw(10)
            << "g" << std::setw(12) << "T" << std::setw(10) << "m" << std::setw(10) << "M" << std::setw(10) << "N"
            << "Omega" << '\n';
  for (const auto& label : labels) print_prediction_row(predict(label));
  return kOk;
}

OracleMethod method_from(const std::string& text) {
  if (text == "direct") return OracleMethod::Direct;
  if (text == "composition") return OracleMethod::Composition;
  throw ArgumentError("unknown method '" + text + "' (direct, composition)");
}

int cmd_oracle(const Options& o) {
  const auto label = label_from(o);
  const auto method = method_from(o.method);
  if (!o.lambda.empty()) {
    const Partition lambda = parse_partition(o.lambda);
    if (lambda.size() != label.n)
      throw ArgumentError("lambda " + lambda.to_string() + " is not a partition of " + std::to_string(label.n));
    const auto& table = z_table(label, method);
    const auto it = table.find(lambda);
    const BranchingResult result{lambda, label, it == table.end() ? BigInt(0) : it->second};
    if (o.json) std::cout << to_json(result).dump(2) << '\n';
    else std::cout << result.z << '\n';
    return kOk;
  }
  const auto& table = z_table(label, method);
  std::vector<Partition> members;
  for (const auto& [lambda, z] : table) members.push_back(lambda);
  const PartitionSet omega(label.n, std::move(members));
  if (o.json) {
    Json mult = Json::array();
    for (const auto& lambda : omega) mult.push_back({{"lambda", to_json(lambda)}, {"z", to_json(table.at(lambda))}});
    Json out{{"schema", kSchemaVersion},
             {"p", label.p},
             {"n", label.n},
             {"label", label.to_string()},
             {"size", omega.size()},
             {"m", observed_m(omega)},
             {"M", observed_M(omega)},
             {"omega", mult}};
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "label " << label.to_string() << ", |Omega| = " << omega.size() << " of " << partition_count(label.n)
            << ", m = " << observed_m(omega) << ", M = " << observed_M(omega) << '\n';
  for (const auto& lambda : omega) std::cout << "  " << lambda.to_string() << "  " << table.at(lambda) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : suites) {
    const auto report = run_suite(name);
    ok = ok && report.ok();
    if (o.json) {
      reports.push_back(to_json(report));
      continue;
    }
    std::cout << "== " << report.suite << " (" << std::fixed << std::setprecision(1) << report.seconds << " s)\n";
    for (const auto& c : report.checks)
      std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                << '\n';
    std::cout << "  " << (report.ok() ? "PASS" : "FAIL") << ": " << report.checks.size() - report.failure_count()
              << "/" << report.checks.size() << " checks\n";
  }
  if (o.json) std::cout << reports.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

int cmd_ratio(const Options& o) {
  Json rows = Json::array();
  double previous = 0;
  bool monotone = true;
  if (!o.json)
    std::cout << std::left << std::setw(8) << "n" << std::setw(8) << "m_min" << std::setw(8) << "M_min" << std::setw(14)
              << "lower" << std::setw(14) << "upper" << "exact" << '\n';
  for (int n : o.ns) {
    const auto b = omega_intersection_bounds(n, o.p, o.exact);
    if (b.lower.to_double() < previous) monotone = false;
    previous = b.lower.to_double();
    if (o.json) {
      rows.push_back(to_json(b));
      continue;
    }
    std::cout << std::setw(8) << n << std::setw(8) << b.m_min << std::setw(8) << b.M_min << std::setw(14)
              << std::setprecision(8) << b.lower.to_double() << std::setw(14) << b.upper.to_double()
              << (b.exact ? b.exact->to_string() + " = " + std::to_string(b.exact->to_double()) : "-") << '\n';
  }
  if (o.json) {
    std::cout << Json{{"schema", kSchemaVersion}, {"p", o.p}, {"rows", rows}, {"lower_nondecreasing", monotone}}.dump(2)
              << '\n';
  } else {
    std::cout << "lower bound " << (monotone ? "nondecreasing" : "not monotone") << " over the given n\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow branching coefficients of symmetric groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-in", o.cache_in, "Load character values from a JSON cache file");
  app.add_option("--cache-out", o.cache_out, "Write character values to a JSON cache file");
  app.add_option("--budget", o.budget, "Maximum group order enumerated directly (default 10^7, env SYLOW_BUDGET)");

  auto* predict = app.add_subcommand("predict", "Closed-form m, M, N and Omega description");
  predict->add_option("-p,--prime", o.p, "Odd prime")->required();
  predict->add_option("-n", o.n, "Degree n")->required();
  auto* s_opt = predict->add_option("-s,--label", o.label, "Label, e.g. \"1,0\" or \"(0,0,0)|(0,0),(1,0)\"");
  predict->add_flag("--all-orbits", o.all_orbits, "One row per orbit representative")->excludes(s_opt);
  predict->add_flag("--json", o.json, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "Brute-force Z^lambda_phi or the full Omega(phi)");
  oracle->add_option("-p,--prime", o.p, "Odd prime")->required();
  oracle->add_option("-n", o.n, "Degree n")->required();
  oracle->add_option("-s,--label", o.label, "Label")->required();
  oracle->add_option("--lambda", o.lambda, "Single partition, e.g. \"24,1\"");
  oracle->add_option("--method", o.method, "composition (default) or direct");
  oracle->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", o.suites, "Suite names or 'all'");
  verify->add_flag("--json", o.json, "JSON output");

  auto* ratio = app.add_subcommand("ratio", "Bounds on |Omega_n| / p(n)");
  ratio->add_option("-p,--prime", o.p, "Odd prime")->required();
  ratio->add_option("-n", o.ns, "Comma separated degrees")->required()->delimiter(',');
  ratio->add_flag("--exact", o.exact, "Also intersect oracle sets");
  ratio->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.budget) set_enumeration_budget(o.budget);
    if (!o.cache_in.empty()) CharacterValueCache::instance().import_json(o.cache_in);
    int code = kOk;
    if (*predict) code = cmd_predict(o);
    else if (*oracle) code = cmd_oracle(o);
    else if (*verify) code = cmd_verify(o);
    else if (*ratio) code = cmd_ratio(o);
    if (!o.cache_out.empty()) CharacterValueCache::instance().export_json(o.cache_out);
    return code;
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
