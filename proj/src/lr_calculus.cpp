#include "sylow/lr_calculus.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

namespace sylow {

Partition LRFilling::weight() const {
  std::vector<int> counts;
  for (const auto& row : entries)
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return Partition::from_multiset(std::move(counts));
}

std::vector<int> LRFilling::reading_word() const {
  std::vector<int> word;
  for (const auto& row : entries) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool LRFilling::is_valid() const {
  const auto& outer = shape.outer;
  const auto& inner = shape.inner;
  if (static_cast<int>(entries.size()) != outer.length()) return false;
  for (int i = 0; i < outer.length(); ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != outer[i] - inner[i]) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return false;
      if (j + 1 < row.size() && row[j] > row[j + 1]) return false;
      const int col = inner[i] + static_cast<int>(j);
      if (i > 0 && col >= inner[i - 1]) {
        const int above = entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col - inner[i - 1])];
        if (row[j] <= above) return false;
      }
    }
  }
  const auto word = reading_word();
  return is_good_sequence(word);
}

bool is_good_sequence(std::span<const int> word) {
  std::vector<int> seen;
  for (int c : word) {
    if (c < 1) return false;
    if (static_cast<int>(seen.size()) < c) seen.resize(static_cast<std::size_t>(c), 0);
    if (c > 1 && seen[static_cast<std::size_t>(c - 2)] <= seen[static_cast<std::size_t>(c - 1)]) return false;
    ++seen[static_cast<std::size_t>(c - 1)];
  }
  return true;
}

namespace {

// Depth-first search over LR fillings of [outer \ inner] in reading order.
// `weight` fixes the content when non-empty; otherwise any lattice content
// is allowed. `leaf` receives the grid (row-major, absolute columns).
class FillingSearch {
 public:
  FillingSearch(const Partition& outer, const Partition& inner, const std::optional<Partition>& weight)
      : outer_(outer), inner_(inner), weight_(weight) {
    for (int i = 0; i < outer.length(); ++i)
      for (int j = outer[i] - 1; j >= inner[i]; --j) cells_.emplace_back(i, j);
    grid_.assign(static_cast<std::size_t>(outer.length()), std::vector<int>(static_cast<std::size_t>(outer.first()), 0));
    max_value_ = weight ? weight->length() : outer.length();
    counts_.assign(static_cast<std::size_t>(max_value_) + 1, 0);
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    step(0, leaf);
  }

  const std::vector<std::vector<int>>& grid() const { return grid_; }
  const std::vector<int>& counts() const { return counts_; }

 private:
  template <class Leaf>
  void step(std::size_t idx, Leaf& leaf) {
    if (idx == cells_.size()) {
      leaf();
      return;
    }
    const auto [i, j] = cells_[idx];
    int hi = max_value_;
    if (j + 1 < outer_[i]) hi = std::min(hi, grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
    int lo = 1;
    if (i > 0 && j >= inner_[i - 1]) lo = grid_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (v > 1 && counts_[vi - 1] <= counts_[vi]) continue;
      if (weight_ && counts_[vi] >= (*weight_)[v - 1]) continue;
      grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      ++counts_[vi];
      step(idx + 1, leaf);
      --counts_[vi];
    }
    grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  std::optional<Partition> weight_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
  int max_value_ = 0;
};

std::uint64_t count_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::optional<Partition> weight = nu;
  FillingSearch search(lambda, mu, weight);
  std::uint64_t count = 0;
  search.run([&] { ++count; });
  return count;
}

struct LRCache {
  std::mutex mutex;
  std::map<std::tuple<Partition, Partition, Partition>, std::uint64_t> values;
};

LRCache& lr_cache() {
  static LRCache cache;
  return cache;
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size())
    throw ArgumentError("lr_coefficient: |" + lambda.to_string() + "| != |" + mu.to_string() + "| + |" +
                        nu.to_string() + "|");
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (lambda.first() > mu.first() + nu.first() || lambda.length() > mu.length() + nu.length()) return 0;
  // Symmetric in mu, nu: use the larger one as the inner shape.
  const bool swap = CanonicalOrder{}(mu, nu);
  const Partition& inner = swap ? nu : mu;
  const Partition& weight = swap ? mu : nu;
  auto key = std::make_tuple(lambda, inner, weight);
  auto& cache = lr_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  const std::uint64_t value = count_fillings(lambda, inner, weight);
  std::lock_guard lock(cache.mutex);
  cache.values.emplace(std::move(key), value);
  return value;
}

void for_each_lr_filling(const SkewShape& shape, const std::optional<Partition>& weight,
                         const std::function<void(const LRFilling&)>& visit) {
  if (weight && weight->size() != shape.size()) return;
  FillingSearch search(shape.outer, shape.inner, weight);
  search.run([&] {
    LRFilling filling{shape, {}};
    const auto& grid = search.grid();
    for (int i = 0; i < shape.outer.length(); ++i) {
      const auto& row = grid[static_cast<std::size_t>(i)];
      filling.entries.emplace_back(row.begin() + shape.inner[i], row.begin() + shape.outer[i]);
    }
    visit(filling);
  });
}

PartitionSet lr_weights(const SkewShape& gamma, StarBudget budget) {
  if (gamma.size() > budget.max_n)
    throw ResourceError("lr_weights: |gamma|=" + std::to_string(gamma.size()) + " exceeds budget");
  std::set<std::vector<int>> weights;
  FillingSearch search(gamma.outer, gamma.inner, std::nullopt);
  search.run([&] {
    std::vector<int> w;
    for (std::size_t v = 1; v < search.counts().size(); ++v)
      if (search.counts()[v] > 0) w.push_back(search.counts()[v]);
    weights.insert(std::move(w));
  });
  std::vector<Partition> out;
  for (const auto& w : weights) out.emplace_back(w);
  return PartitionSet(gamma.size(), std::move(out));
}

namespace {

// Adds nu_1 ones, nu_2 twos, ... as successive horizontal strips, keeping
// the reading word a lattice word. rows[i] is the current row length,
// placed[i][v] the number of v's in row i.
class StripBuilder {
 public:
  StripBuilder(const Partition& mu, const Partition& nu, const std::optional<Partition>& bound,
               std::map<Partition, std::uint64_t>& out)
      : nu_(nu), bound_(bound), out_(out) {
    const int max_rows = mu.length() + nu.length();
    rows_.assign(static_cast<std::size_t>(max_rows), 0);
    for (int i = 0; i < mu.length(); ++i) rows_[static_cast<std::size_t>(i)] = mu[i];
    placed_.assign(static_cast<std::size_t>(max_rows),
                   std::vector<int>(static_cast<std::size_t>(nu.length()) + 1, 0));
    old_rows_.reserve(static_cast<std::size_t>(nu.length()) + 1);
  }

  void run() { add_value(1); }

 private:
  void add_value(int v) {
    if (v > nu_.length()) {
      std::vector<int> parts;
      for (int r : rows_)
        if (r > 0) parts.push_back(r);
      ++out_[Partition(std::move(parts))];
      return;
    }
    old_rows_.push_back(rows_);
    place_row(v, 0, nu_[v - 1], 0, 0);
    old_rows_.pop_back();
  }

  // cum_v / cum_prev: running counts of v and v-1 through the rows above.
  void place_row(int v, int row, int remaining, int cum_v, int cum_prev) {
    if (remaining == 0) {
      add_value(v + 1);
      return;
    }
    const auto nrows = static_cast<int>(rows_.size());
    if (row >= nrows) return;
    const auto& old = old_rows_[static_cast<std::size_t>(v - 1)];
    const auto r = static_cast<std::size_t>(row);
    int cap = row == 0 ? old[0] + remaining : old[r - 1];
    if (bound_) cap = std::min(cap, (*bound_)[row]);
    const int max_here = std::min(remaining, cap - old[r]);
    // Values of v-1 in this row are read after the v's, so only rows above count.
    const int prev_rows_above = cum_prev;
    for (int k = std::max(0, max_here); k >= 0; --k) {
      if (v > 1 && cum_v + k > prev_rows_above) continue;
      rows_[r] = old[r] + k;
      placed_[r][static_cast<std::size_t>(v)] = k;
      place_row(v, row + 1, remaining - k, cum_v + k,
                cum_prev + (v > 1 ? placed_[r][static_cast<std::size_t>(v - 1)] : 0));
      placed_[r][static_cast<std::size_t>(v)] = 0;
      rows_[r] = old[r];
    }
  }

  const Partition& nu_;
  const std::optional<Partition>& bound_;
  std::map<Partition, std::uint64_t>& out_;
  std::vector<int> rows_;
  std::vector<std::vector<int>> old_rows_;
  std::vector<std::vector<int>> placed_;
};

}  // namespace

std::map<Partition, std::uint64_t> lr_product(const Partition& mu, const Partition& nu,
                                              const std::optional<Partition>& bound) {
  std::map<Partition, std::uint64_t> out;
  if (bound && (!bound->contains(mu) || !bound->contains(nu))) return out;
  StripBuilder(mu, nu, bound, out).run();
  return out;
}

BigInt iterated_lr(const Partition& lambda, std::span<const Partition> factors) {
  int total = 0;
  for (const auto& f : factors) total += f.size();
  if (total != lambda.size()) throw ArgumentError("iterated_lr: sizes of factors do not add up to |lambda|");
  if (factors.empty()) return lambda.empty() ? 1 : 0;
  if (factors.size() == 1) return factors[0] == lambda ? 1 : 0;
  // gamma -> c^gamma_{mu^1..mu^i}, restricted to gamma inside lambda.
  std::map<Partition, BigInt> partial;
  if (lambda.contains(factors[0])) partial[factors[0]] = 1;
  for (std::size_t i = 1; i + 1 < factors.size(); ++i) {
    std::map<Partition, BigInt> next;
    for (const auto& [gamma, coeff] : partial)
      for (const auto& [shape, c] : lr_product(gamma, factors[i], lambda)) next[shape] += coeff * c;
    partial = std::move(next);
  }
  BigInt result = 0;
  for (const auto& [gamma, coeff] : partial) result += coeff * lr_coefficient(lambda, gamma, factors.back());
  return result;
}

PartitionSet star(const PartitionSet& a, const PartitionSet& b, StarBudget budget) {
  const int n = a.n() + b.n();
  if (n > budget.max_n) throw ResourceError("star: n=" + std::to_string(n) + " exceeds budget");
  std::vector<Partition> out;
  for (const auto& lambda : all_partitions(n, budget.max_n)) {
    bool found = false;
    for (const auto& mu : a) {
      if (!lambda.contains(mu)) continue;
      for (const auto& nu : b) {
        if (lr_coefficient(lambda, mu, nu) > 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) out.push_back(lambda);
  }
  return PartitionSet(n, std::move(out));
}

PartitionSet d_set(int q, int m, const PartitionSet& b, StarBudget budget) {
  if (q < 2) throw ArgumentError("d_set: q must be at least 2");
  if (b.n() != m) throw ArgumentError("d_set: B must consist of partitions of m");
  if (q * m > budget.max_n) throw ResourceError("d_set: qm=" + std::to_string(q * m) + " exceeds budget");
  const auto& elems = b.elements();
  std::set<Partition> support;
  // Iterated LR coefficients are symmetric, so multisets of B suffice.
  std::vector<std::size_t> idx(static_cast<std::size_t>(q), 0);
  while (true) {
    if (idx.front() != idx.back()) {
      std::map<Partition, BigInt> partial{{elems[idx[0]], 1}};
      for (std::size_t i = 1; i < idx.size(); ++i) {
        std::map<Partition, BigInt> next;
        for (const auto& [gamma, coeff] : partial)
          for (const auto& [shape, c] : lr_product(gamma, elems[idx[i]])) next[shape] += coeff * c;
        partial = std::move(next);
      }
      for (const auto& [lambda, c] : partial)
        if (c > 0) support.insert(lambda);
    }
    // Next non-decreasing index tuple.
    int pos = q - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == elems.size()) --pos;
    if (pos < 0) break;
    const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < q; ++i) idx[static_cast<std::size_t>(i)] = v;
    if (elems.empty()) break;
  }
  return PartitionSet(q * m, {support.begin(), support.end()});
}

}  // namespace sylow
