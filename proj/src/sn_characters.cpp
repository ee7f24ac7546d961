#include "sylow/sn_characters.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <shared_mutex>

#include <json.hpp>

#include "sylow/lr_calculus.hpp"

namespace sylow {

namespace {

struct MNStore {
  mutable std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, BigInt> values;
};

MNStore& mn_store() {
  static MNStore store;
  return store;
}

// t is sorted decreasingly; strips of length t[0] are removed first.
BigInt mn_rec(const Partition& lambda, const Partition& t) {
  if (t.empty()) return 1;
  auto& store = mn_store();
  auto key = std::make_pair(lambda, t);
  {
    std::shared_lock lock(store.mutex);
    if (auto it = store.values.find(key); it != store.values.end()) return it->second;
  }
  const int r = t[0];
  const Partition rest(std::vector<int>(t.parts().begin() + 1, t.parts().end()));
  const int l = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (l - 1 - i);
  BigInt total = 0;
  for (int i = 0; i < l; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < from) ++between;
    auto moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < l; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (l - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    const BigInt v = mn_rec(Partition(std::move(parts)), rest);
    if (between % 2) total -= v;
    else total += v;
  }
  std::unique_lock lock(store.mutex);
  store.values.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_value(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw ArgumentError("mn_value: " + lambda.to_string() + " and " + cycle_type.to_string() + " differ in size");
  return mn_rec(lambda, cycle_type);
}

BigInt hook_length_degree(const Partition& lambda) {
  BigInt num = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  const Partition conj = lambda.conjugate();
  BigInt den = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return num / den;
}

CharacterValueCache& CharacterValueCache::instance() {
  static CharacterValueCache cache;
  return cache;
}

std::size_t CharacterValueCache::size() const {
  std::shared_lock lock(mn_store().mutex);
  return mn_store().values.size();
}

void CharacterValueCache::clear() {
  std::unique_lock lock(mn_store().mutex);
  mn_store().values.clear();
}

void CharacterValueCache::export_json(const std::string& path) const {
  nlohmann::json out = nlohmann::json::object();
  {
    std::shared_lock lock(mn_store().mutex);
    for (const auto& [key, v] : mn_store().values) out[key.first.to_csv() + "|" + key.second.to_csv()] = v.str();
  }
  std::ofstream file(path);
  if (!file) throw ArgumentError("cannot write cache file " + path);
  file << out.dump() << '\n';
}


void CharacterValueCache::import_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ArgumentError("cannot read cache file " + path);
  nlohmann::json in;
  try {
    file >> in;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("malformed cache file " + path + ": " + e.what());
  }
  if (!in.is_object()) throw ArgumentError("malformed cache file " + path);
  std::map<std::pair<Partition, Partition>, BigInt> loaded;
  try {
    for (const auto& [key, value] : in.items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos) throw ArgumentError("bad cache key " + key);
      Partition lambda = parse_partition(key.substr(0, bar));
      Partition t = parse_partition(key.substr(bar + 1));
      if (lambda.size() != t.size()) throw ArgumentError("bad cache key " + key);
      loaded.emplace(std::make_pair(std::move(lambda), std::move(t)), BigInt(value.get<std::string>()));
    }
  } catch (const std::invalid_argument& e) {
    throw ArgumentError("malformed cache file " + path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("malformed cache file " + path + ": " + e.what());
  }
  std::unique_lock lock(mn_store().mutex);
  mn_store().values.merge(loaded);
}

BigInt inner_product(const Partition& lambda, const ClassProfile& profile) {
  if (lambda.size() != profile.n) throw ArgumentError("inner_product: size mismatch");
  CyclotomicInt total(profile.p);
  for (const auto& [t, e] : profile.entries) total += conj(e.phi_sum) * mn_value(lambda, t);
  const BigInt sum = as_integer(total);
  const BigInt order = profile.order();
  if (sum % order != 0)
    throw IntegrityError("inner product for " + lambda.to_string() + " is not divisible by |P| = " + order.str());
  const BigInt z = sum / order;
  if (z < 0) throw IntegrityError("negative multiplicity for " + lambda.to_string());
  return z;
}

BranchingResult branching_coefficient(const Partition& lambda, const SequenceLabel& s, std::uint64_t budget) {
  const auto label = MultisetLabel::single(s);
  if (lambda.size() != label.n)
    throw ArgumentError("branching_coefficient: |" + lambda.to_string() + "| != " + std::to_string(label.n));
  return {lambda, label, inner_product(lambda, class_profile(s, budget))};
}

namespace {

std::map<Partition, BigInt> direct_table(const MultisetLabel& label, std::uint64_t budget) {
  const ClassProfile profile = class_profile(label, budget);
  std::map<Partition, BigInt> out;
  for (const auto& lambda : all_partitions(label.n)) {
    BigInt z = inner_product(lambda, profile);
    if (z > 0) out.emplace(lambda, std::move(z));
  }
  return out;
}

std::map<Partition, BigInt> composed_table(const MultisetLabel& label, std::uint64_t budget) {
  std::map<Partition, BigInt> acc{{Partition{}, 1}};
  for (const auto& s : label.seqs) {
    const auto& factor = z_table(MultisetLabel::single(s), OracleMethod::Direct, budget);
    std::map<Partition, BigInt> next;
    for (const auto& [gamma, a] : acc)
      for (const auto& [mu, b] : factor)
        for (const auto& [lambda, c] : lr_product(gamma, mu)) next[lambda] += a * b * c;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

const std::map<Partition, BigInt>& z_table(const MultisetLabel& label, OracleMethod method, std::uint64_t budget) {
  static std::mutex mutex;
  static std::map<std::pair<MultisetLabel, int>, std::map<Partition, BigInt>> cache;
  if (label.is_prime_power()) method = OracleMethod::Direct;
  const auto key = std::make_pair(label, static_cast<int>(method));
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = method == OracleMethod::Direct ? direct_table(label, budget) : composed_table(label, budget);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

BranchingResult branching_coefficient_composite(const Partition& lambda, const MultisetLabel& label,
                                                std::uint64_t budget) {
  if (lambda.size() != label.n)
    throw ArgumentError("branching_coefficient_composite: |" + lambda.to_string() + "| != " + std::to_string(label.n));
  // Sum over factor tuples of iterated LR coefficients times factor multiplicities.
  std::vector<std::vector<std::pair<Partition, BigInt>>> factors;
  for (const auto& s : label.seqs) {
    std::vector<std::pair<Partition, BigInt>> entries;
    for (const auto& [mu, z] : z_table(MultisetLabel::single(s), OracleMethod::Direct, budget))
      if (lambda.contains(mu)) entries.emplace_back(mu, z);
    factors.push_back(std::move(entries));
  }
  BigInt total = 0;
  std::vector<Partition> chosen;
  auto rec = [&](auto&& self, std::size_t i, const BigInt& weight) -> void {
    if (i == factors.size()) {
      total += weight * iterated_lr(lambda, chosen);
      return;
    }
    for (const auto& [mu, z] : factors[i]) {
      chosen.push_back(mu);
      self(self, i + 1, weight * z);
      chosen.pop_back();
    }
  };
  rec(rec, 0, BigInt(1));
  return {lambda, label, total};
}

PartitionSet omega_oracle(const MultisetLabel& label, OracleMethod method, std::uint64_t budget) {
  std::vector<Partition> out;
  for (const auto& [lambda, z] : z_table(label, method, budget)) out.push_back(lambda);
  return PartitionSet(label.n, std::move(out));
}

HookRestriction restriction_to_Pp(const Partition& lambda, int p) {
  if (lambda.size() != p) throw ArgumentError("restriction_to_Pp: |lambda| must equal p");
  const BigInt degree = hook_length_degree(lambda);
  if (!lambda.is_hook()) {
    if (degree % p != 0) throw IntegrityError("degree of non-hook not divisible by p");
    return {degree / p, 0};
  }
  const int sign = lambda.leg_length() % 2 ? -1 : 1;
  const BigInt rest = degree - sign;
  if (rest % p != 0) throw IntegrityError("hook degree has wrong residue mod p");
  return {rest / p, sign};
}

}  // namespace sylow
