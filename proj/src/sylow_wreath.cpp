#include "sylow/sylow_wreath.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

namespace sylow {

namespace {

std::atomic<std::uint64_t>& budget_slot() {
  static std::atomic<std::uint64_t> slot = [] {
    if (const char* env = std::getenv("SYLOW_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kDefaultEnumerationBudget;
  }();
  return slot;
}

}  // namespace

std::uint64_t enumeration_budget() { return budget_slot().load(); }

void set_enumeration_budget(std::uint64_t budget) {
  if (budget == 0) throw ArgumentError("enumeration budget must be positive");
  budget_slot().store(budget);
}

namespace {

void check_prime(int p) {
  if (p < 3 || !is_prime(p)) throw ArgumentError("p must be an odd prime, got " + std::to_string(p));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw ArgumentError("bad integer '" + token + "'");
    } catch (const std::logic_error&) {
      throw ArgumentError("bad integer '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else token += c;
  }
  flush();
  return out;
}

}  // namespace

SequenceLabel::SequenceLabel(int p_, std::vector<int> entries_) : p(p_), entries(std::move(entries_)) {
  check_prime(p);
  for (int e : entries)
    if (e < 0 || e >= p) throw ArgumentError("sequence entry " + std::to_string(e) + " outside [0," + std::to_string(p) + ")");
}

bool SequenceLabel::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

SequenceLabel SequenceLabel::support_representative() const {
  auto e = entries;
  for (int& x : e) x = x != 0 ? 1 : 0;
  return SequenceLabel(p, std::move(e));
}

SequenceLabel SequenceLabel::suffix(int from) const {
  return SequenceLabel(p, std::vector<int>(entries.begin() + from, entries.end()));
}

std::string SequenceLabel::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

SequenceLabel SequenceLabel::parse(int p, const std::string& text) {
  std::string body = text;
  std::erase_if(body, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ArgumentError("unbalanced parentheses in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  if (body.find_first_of("()|{}") != std::string::npos) throw ArgumentError("bad sequence '" + text + "'");
  return SequenceLabel(p, parse_int_list(body));
}

MultisetLabel::MultisetLabel(int p_, int n_, std::vector<SequenceLabel> seqs_) : p(p_), n(n_), seqs(std::move(seqs_)) {
  check_prime(p);
  if (n < 1) throw ArgumentError("label: n must be positive");
  std::map<int, int> needed;
  for (auto [e, a] : p_adic_expansion(n, p)) needed[e] = a;
  std::map<int, int> have;
  for (const auto& s : seqs) {
    if (s.p != p) throw ArgumentError("label: sequence " + s.to_string() + " has a different prime");
    ++have[s.k()];
  }
  if (have != needed) {
    std::string want;
    for (auto [e, a] : needed) want += " " + std::to_string(a) + "x length " + std::to_string(e);
    throw ArgumentError("label " + to_string() + " does not match the " + std::to_string(p) + "-adic expansion of " +
                        std::to_string(n) + ":" + want);
  }
  std::sort(seqs.begin(), seqs.end());
}

MultisetLabel MultisetLabel::single(const SequenceLabel& s) {
  return MultisetLabel(s.p, static_cast<int>(ipow(s.p, s.k())), {s});
}

bool MultisetLabel::is_trivial() const {
  return std::all_of(seqs.begin(), seqs.end(), [](const SequenceLabel& s) { return s.is_zero(); });
}

MultisetLabel MultisetLabel::support_representative() const {
  std::vector<SequenceLabel> out;
  for (const auto& s : seqs) out.push_back(s.support_representative());
  return MultisetLabel(p, n, std::move(out));
}

std::string MultisetLabel::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (i) out += ',';
    out += seqs[i].to_string();
  }
  return out + "}";
}

MultisetLabel MultisetLabel::parse_sequences(int p, int n, const std::string& text) {
  std::string body = text;
  std::erase_if(body, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ArgumentError("unbalanced braces in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<SequenceLabel> seqs;
  if (body.find('(') == std::string::npos) {
    seqs.push_back(SequenceLabel::parse(p, body));
  } else {
    std::size_t pos = 0;
    while (pos < body.size()) {
      const char c = body[pos];
      if (c == '|' || c == ',') {
        ++pos;
        continue;
      }
      if (c != '(') throw ArgumentError("bad label '" + text + "'");
      const auto close = body.find(')', pos);
      if (close == std::string::npos) throw ArgumentError("unbalanced parentheses in '" + text + "'");
      seqs.push_back(SequenceLabel::parse(p, body.substr(pos, close - pos + 1)));
      pos = close + 1;
    }
  }
  return MultisetLabel(p, n, std::move(seqs));
}

MultisetLabel MultisetLabel::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ArgumentError("label '" + text + "' lacks ':'");
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    const auto at = head.find('@');
    if (at == std::string::npos) {
      const int p = std::stoi(head);
      return single(SequenceLabel::parse(p, rest));
    }
    const int p = std::stoi(head.substr(0, at));
    const int n = std::stoi(head.substr(at + 1));
    return parse_sequences(p, n, rest);
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) throw;
    throw ArgumentError("bad label head '" + head + "'");
  } catch (const std::out_of_range&) {
    throw ArgumentError("bad label head '" + head + "'");
  }
}

WreathElement WreathElement::identity(int p, int k) {
  return WreathElement{p, k, std::vector<int>(static_cast<std::size_t>(flat_size(p, k)), 0)};
}

WreathElement WreathElement::leaf(int p, int j) { return WreathElement{p, 1, {((j % p) + p) % p}}; }

WreathElement WreathElement::node(const std::vector<WreathElement>& children, int top) {
  if (children.empty()) throw ArgumentError("wreath node needs children");
  const int p = children.front().p;
  const int k = children.front().k + 1;
  if (static_cast<int>(children.size()) != p) throw ArgumentError("wreath node needs exactly p children");
  WreathElement out{p, k, {((top % p) + p) % p}};
  for (const auto& c : children) {
    if (c.p != p || c.k != k - 1) throw ArgumentError("wreath node children differ in shape");
    out.exps.insert(out.exps.end(), c.exps.begin(), c.exps.end());
  }
  return out;
}

int flat_size(int p, int k) {
  if (k < 0) throw ArgumentError("flat_size: negative depth");
  return static_cast<int>((ipow(p, k) - 1) / (p - 1));
}

BigInt group_order(int p, int k) {
  BigInt out = 1;
  for (int i = flat_size(p, k); i > 0; --i) out *= p;
  return out;
}

BigInt group_order(const MultisetLabel& label) {
  BigInt out = 1;
  for (const auto& s : label.seqs) out *= group_order(label.p, s.k());
  return out;
}

namespace {

// Image of point x under the element rooted at exps (depth k).
int image(const int* exps, int p, int k, int x, const std::vector<int>& sizes, const std::vector<int>& powers) {
  if (k == 1) return (x + exps[0]) % p;
  const int block = powers[static_cast<std::size_t>(k - 1)];
  const int b = x / block;
  const int hb = (b + exps[0]) % p;
  const int* child = exps + 1 + hb * sizes[static_cast<std::size_t>(k - 1)];
  return hb * block + image(child, p, k - 1, x % block, sizes, powers);
}

struct Shape {
  std::vector<int> sizes;   // flat_size(p, i)
  std::vector<int> powers;  // p^i
  std::vector<int> levels;  // level (1 = leaves) of each flat position

  Shape(int p, int k) {
    for (int i = 0; i <= k; ++i) {
      sizes.push_back(flat_size(p, i));
      powers.push_back(static_cast<int>(ipow(p, i)));
    }
    fill_levels(p, k);
  }

  void fill_levels(int p, int k) {
    if (k == 0) return;
    levels.push_back(k);
    for (int c = 0; c < p; ++c) fill_levels(p, k - 1);
  }
};

void permutation_into(const WreathElement& w, const Shape& shape, std::vector<int>& perm) {
  const int n = shape.powers[static_cast<std::size_t>(w.k)];
  perm.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    perm[static_cast<std::size_t>(x)] = w.k == 0 ? x : image(w.exps.data(), w.p, w.k, x, shape.sizes, shape.powers);
}

}  // namespace

std::vector<int> to_permutation(const WreathElement& w) {
  if (static_cast<int>(w.exps.size()) != flat_size(w.p, w.k)) throw ArgumentError("malformed wreath element");
  Shape shape(w.p, w.k);
  std::vector<int> perm;
  permutation_into(w, shape, perm);
  return perm;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_multiset(std::move(lengths));
}

void enumerate_elements(int p, int k, const std::function<void(const WreathElement&)>& visit,
                        std::uint64_t budget) {
  check_prime(p);
  if (group_order(p, k) > budget)
    throw ResourceError("|P_" + std::to_string(p) + "^" + std::to_string(k) + "| = " + to_string(group_order(p, k)) +
                        " exceeds enumeration budget " + std::to_string(budget));
  WreathElement w = WreathElement::identity(p, k);
  while (true) {
    visit(w);
    std::size_t i = 0;
    while (i < w.exps.size() && w.exps[i] == p - 1) w.exps[i++] = 0;
    if (i == w.exps.size()) break;
    ++w.exps[i];
  }
}

int phi_exponent(const SequenceLabel& s, const WreathElement& w) {
  if (s.k() != w.k || s.p != w.p) throw ArgumentError("phi: label " + s.to_string() + " does not match element depth");
  Shape shape(w.p, w.k);
  long long e = 0;
  for (std::size_t i = 0; i < w.exps.size(); ++i)
    e += static_cast<long long>(s.entries[static_cast<std::size_t>(shape.levels[i] - 1)]) * w.exps[i];
  return static_cast<int>(e % w.p);
}

CyclotomicInt phi_value(const SequenceLabel& s, const WreathElement& w) {
  return root_of_unity(s.p, phi_exponent(s, w));
}

BigInt ClassProfile::order() const {
  BigInt total = 0;
  for (const auto& [t, e] : entries) total += e.count;
  return total;
}

ClassProfile convolve(const ClassProfile& a, const ClassProfile& b) {
  if (a.p != b.p) throw ArgumentError("convolve: mismatched primes");
  ClassProfile out{a.p, a.n + b.n, {}};
  for (const auto& [ta, ea] : a.entries)
    for (const auto& [tb, eb] : b.entries) {
      auto parts = ta.parts();
      parts.insert(parts.end(), tb.parts().begin(), tb.parts().end());
      const Partition t = Partition::from_multiset(std::move(parts));
      auto it = out.entries.find(t);
      if (it == out.entries.end()) it = out.entries.emplace(t, ProfileEntry{0, CyclotomicInt(a.p)}).first;
      it->second.count += ea.count * eb.count;
      it->second.phi_sum += ea.phi_sum * eb.phi_sum;
    }
  return out;
}

namespace {

// Counts of elements of P_{p^k} by cycle type and by the vector of
// exponent sums per level (mod p), encoded base p with level 1 lowest.
struct LevelCensus {
  int p = 0;
  int k = 0;
  std::map<Partition, std::vector<std::uint64_t>> counts;
};

LevelCensus build_census(int p, int k, std::uint64_t budget) {
  LevelCensus census{p, k, {}};
  Shape shape(p, k);
  const auto codes = static_cast<std::size_t>(ipow(p, k));
  // Cycle lengths are powers of p; key by their multiplicities.
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> raw;
  std::unordered_map<std::uint64_t, Partition> types;
  const std::uint64_t radix = static_cast<std::uint64_t>(shape.powers[static_cast<std::size_t>(k)]) + 1;
  std::vector<int> perm;
  std::vector<char> seen;
  std::vector<int> sums(static_cast<std::size_t>(k), 0);
  enumerate_elements(
      p, k,
      [&](const WreathElement& w) {
        permutation_into(w, shape, perm);
        seen.assign(perm.size(), 0);
        std::vector<int> mult(static_cast<std::size_t>(k) + 1, 0);
        for (std::size_t i = 0; i < perm.size(); ++i) {
          if (seen[i]) continue;
          int len = 0;
          for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
          }
          int e = 0;
          while (len > 1) {
            if (len % p != 0) throw IntegrityError("cycle length is not a power of p");
            len /= p;
            ++e;
          }
          ++mult[static_cast<std::size_t>(e)];
        }
        std::uint64_t key = 0;
        for (int m : mult) key = key * radix + static_cast<std::uint64_t>(m);
        std::fill(sums.begin(), sums.end(), 0);
        for (std::size_t i = 0; i < w.exps.size(); ++i) sums[static_cast<std::size_t>(shape.levels[i] - 1)] += w.exps[i];
        std::size_t code = 0;
        for (int lvl = k - 1; lvl >= 0; --lvl)
          code = code * static_cast<std::size_t>(p) + static_cast<std::size_t>(sums[static_cast<std::size_t>(lvl)] % p);
        auto& row = raw[key];
        if (row.empty()) {
          row.assign(codes, 0);
          std::vector<int> parts;
          for (int e = k; e >= 0; --e)
            parts.insert(parts.end(), static_cast<std::size_t>(mult[static_cast<std::size_t>(e)]),
                         shape.powers[static_cast<std::size_t>(e)]);
          types.emplace(key, Partition(std::move(parts)));
        }
        ++row[code];
      },
      budget);
  for (auto& [key, row] : raw) census.counts.emplace(types.at(key), std::move(row));
  return census;
}

const LevelCensus& census_for(int p, int k, std::uint64_t budget) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LevelCensus> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, k), build_census(p, k, budget)).first;
  return it->second;
}

}  // namespace

ClassProfile class_profile(const SequenceLabel& s, std::uint64_t budget) {
  const int p = s.p;
  const int k = s.k();
  ClassProfile out{p, static_cast<int>(ipow(p, k)), {}};
  const auto& census = census_for(p, k, budget);
  for (const auto& [type, row] : census.counts) {
    ProfileEntry entry{0, CyclotomicInt(p)};
    std::vector<BigInt> by_exponent(static_cast<std::size_t>(p), 0);
    for (std::size_t code = 0; code < row.size(); ++code) {
      if (row[code] == 0) continue;
      long long e = 0;
      std::size_t c = code;
      for (int lvl = 0; lvl < k; ++lvl, c /= static_cast<std::size_t>(p))
        e += static_cast<long long>(c % static_cast<std::size_t>(p)) * s.entries[static_cast<std::size_t>(lvl)];
      by_exponent[static_cast<std::size_t>(e % p)] += row[code];
      entry.count += row[code];
    }
    for (int j = 0; j < p; ++j) entry.phi_sum.add_root(j, by_exponent[static_cast<std::size_t>(j)]);
    out.entries.emplace(type, std::move(entry));
  }
  return out;
}

ClassProfile class_profile(const MultisetLabel& label, std::uint64_t budget) {
  ClassProfile out{label.p, 0, {{Partition{}, ProfileEntry{1, CyclotomicInt::integer(label.p, 1)}}}};
  for (const auto& s : label.seqs) out = convolve(out, class_profile(s, budget));
  return out;
}

namespace {

ClassProfile scale_cycles(const ClassProfile& a, int factor) {
  ClassProfile out{a.p, a.n * factor, {}};
  for (const auto& [t, e] : a.entries) {
    auto parts = t.parts();
    for (int& x : parts) x *= factor;
    out.entries.emplace(Partition(std::move(parts)), e);
  }
  return out;
}

}  // namespace

ClassProfile structural_profile(const SequenceLabel& s) {
  const int p = s.p;
  if (s.k() == 0) return ClassProfile{p, 1, {{Partition{1}, ProfileEntry{1, CyclotomicInt::integer(p, 1)}}}};
  const SequenceLabel lower(p, std::vector<int>(s.entries.begin(), s.entries.end() - 1));
  const ClassProfile sub = structural_profile(lower);
  // Top exponent 0: the base group acts blockwise.
  ClassProfile out = sub;
  for (int i = 1; i < p; ++i) out = convolve(out, sub);
  // Top exponent j != 0: cycles of the block product get multiplied by p, and
  // every product value is hit |base|^{p-1} times.
  BigInt multiplicity = 1;
  const BigInt base = sub.order();
  for (int i = 1; i < p; ++i) multiplicity *= base;
  CyclotomicInt top(p);
  for (int j = 1; j < p; ++j) top.add_root(s.entries.back() * j, 1);
  for (const auto& [t, e] : scale_cycles(sub, p).entries) {
    auto it = out.entries.find(t);
    if (it == out.entries.end()) it = out.entries.emplace(t, ProfileEntry{0, CyclotomicInt(p)}).first;
    it->second.count += e.count * multiplicity * (p - 1);
    it->second.phi_sum += e.phi_sum * top * multiplicity;
  }
  return out;
}

bool n_orbit_equivalent(const SequenceLabel& s, const SequenceLabel& t) {
  if (s.p != t.p || s.k() != t.k()) return false;
  return s.support_representative() == t.support_representative();
}

bool n_orbit_equivalent(const MultisetLabel& a, const MultisetLabel& b) {
  if (a.p != b.p || a.n != b.n) return false;
  return a.support_representative() == b.support_representative();
}

std::vector<SequenceLabel> orbit_representatives(int p, int k) {
  std::vector<SequenceLabel> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((mask >> (k - 1 - i)) & 1U);
    out.emplace_back(p, std::move(e));
  }
  return out;
}

std::vector<MultisetLabel> orbit_representatives_n(int p, int n) {
  std::vector<std::vector<SequenceLabel>> partial{{}};
  for (auto [e, a] : p_adic_expansion(n, p)) {
    const auto reps = orbit_representatives(p, e);
    // Multisets of size a from reps, as non-decreasing index tuples.
    std::vector<std::vector<SequenceLabel>> next;
    std::vector<std::size_t> idx(static_cast<std::size_t>(a), 0);
    while (true) {
      for (const auto& prefix : partial) {
        auto seqs = prefix;
        for (auto i : idx) seqs.push_back(reps[i]);
        next.push_back(std::move(seqs));
      }
      int pos = a - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == reps.size()) --pos;
      if (pos < 0) break;
      const auto v = idx[static_cast<std::size_t>(pos)] + 1;
      for (int i = pos; i < a; ++i) idx[static_cast<std::size_t>(i)] = v;
    }
    partial = std::move(next);
  }
  std::vector<MultisetLabel> out;
  for (auto& seqs : partial) out.emplace_back(p, n, std::move(seqs));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sylow
