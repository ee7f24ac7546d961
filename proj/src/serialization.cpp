#include "sylow/serialization.hpp"

namespace sylow {

Json to_json(const BigInt& x) { return x.str(); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) throw ArgumentError("expected a decimal string");
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::runtime_error&) {
    throw ArgumentError("bad integer " + j.get<std::string>());
  }
}

Json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ArgumentError("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const PartitionSet& set) {
  Json out = Json::array();
  for (const auto& lambda : set) out.push_back(to_json(lambda));
  return out;
}

PartitionSet partition_set_from_json(int n, const Json& j) {
  if (!j.is_array()) throw ArgumentError("partition set must be a JSON array");
  std::vector<Partition> out;
  for (const auto& e : j) out.push_back(partition_from_json(e));
  return PartitionSet(n, std::move(out));
}

Json to_json(const CyclotomicInt& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return {{"p", x.p()}, {"coeffs", coeffs}};
}

CyclotomicInt cyclotomic_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
  return CyclotomicInt(j.at("p").get<int>(), std::move(coeffs));
}

Json to_json(const ClassProfile& profile) {
  Json classes = Json::object();
  for (const auto& [t, e] : profile.entries)
    classes[t.to_csv()] = {{"count", to_json(e.count)}, {"phi_sum", to_json(e.phi_sum)}};
  return {{"schema", kSchemaVersion}, {"p", profile.p}, {"n", profile.n}, {"classes", classes}};
}

ClassProfile class_profile_from_json(const Json& j) {
  ClassProfile out{j.at("p").get<int>(), j.at("n").get<int>(), {}};
  for (const auto& [key, value] : j.at("classes").items()) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < key.size()) {
      auto comma = key.find(',', pos);
      if (comma == std::string::npos) comma = key.size();
      parts.push_back(std::stoi(key.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    out.entries.emplace(Partition(std::move(parts)),
                        ProfileEntry{bigint_from_json(value.at("count")), cyclotomic_from_json(value.at("phi_sum"))});
  }
  return out;
}

Json to_json(const OmegaDescription& omega) {
  Json out{{"kind", omega.kind == OmegaDescription::Kind::Exact ? "exact" : "sandwich"},
           {"n", omega.n},
           {"expr", omega.normal_form()}};
  if (omega.kind == OmegaDescription::Kind::Exact) {
    out["box"] = omega.lower;
  } else {
    out["m"] = omega.lower;
    out["M"] = omega.upper;
    out["no_thin_outside_m"] = omega.no_thin_outside;
  }
  if (omega.slice) out["slice"] = {{"row", omega.slice->row}, {"inner", to_json(*omega.slice->inner)}};
  if (!omega.excluded.empty()) {
    Json ex = Json::array();
    for (const auto& lambda : omega.excluded) ex.push_back(to_json(lambda));
    out["excluded"] = ex;
  }
  return out;
}

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Prediction& pred) {
  Json taus = Json::array();
  Json fs = Json::array();
  Json gs = Json::array();
  Json ns = Json::array();
  Json label = Json::array();
  for (std::size_t i = 0; i < pred.stats.size(); ++i) {
    taus.push_back(pred.stats[i].tau);
    fs.push_back(optional_int(pred.stats[i].f));
    gs.push_back(optional_int(pred.stats[i].g));
    ns.push_back(pred.label.is_prime_power() ? pred.N : n_value(pred.label.seqs[i]));
    label.push_back(pred.label.seqs[i].entries);
  }
  return {{"schema", kSchemaVersion},
          {"n", pred.label.n},
          {"p", pred.label.p},
          {"label", label},
          {"tau_profile", taus},
          {"T", pred.type.x},
          {"f", fs},
          {"g", gs},
          {"N_factors", ns},
          {"m", pred.m},
          {"M", pred.M},
          {"N", pred.N},
          {"theorem_applies", pred.theorem_applies},
          {"notes", pred.notes},
          {"omega", to_json(pred.omega)}};
}

Json to_json(const BranchingResult& result) {
  Json label = Json::array();
  for (const auto& s : result.label.seqs) label.push_back(s.entries);
  return {{"schema", kSchemaVersion},
          {"p", result.label.p},
          {"n", result.label.n},
          {"label", label},
          {"lambda", to_json(result.lambda)},
          {"z", to_json(result.z)}};
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  Json failures = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) failures.push_back(c.name);
  }
  return {{"schema", kSchemaVersion},
          {"suite", report.suite},
          {"ok", report.ok()},
          {"seconds", report.seconds},
          {"checks", checks},
          {"failures", failures}};
}

Json to_json(const RatioBounds& b) {
  Json out{{"n", b.n},
           {"p", b.p},
           {"m_min", b.m_min},
           {"M_min", b.M_min},
           {"lower", b.lower.to_string()},
           {"lower_value", b.lower.to_double()},
           {"upper", b.upper.to_string()},
           {"upper_value", b.upper.to_double()}};
  out["exact"] = b.exact ? Json(b.exact->to_string()) : Json(nullptr);
  return out;
}

}  // namespace sylow
