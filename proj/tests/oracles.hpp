#pragma once

// Reference implementations used only by the tests. They avoid the library's
// algorithms on purpose: diagram-based border strips instead of beta-sets,
// characters instead of tableaux, explicit permutations instead of the
// wreath layout.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  return ways[n];
}

inline void partitions_rec(int n, int max_part, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline int at(const Parts& a, int i) { return i < static_cast<int>(a.size()) ? a[i] : 0; }

inline Parts trimmed(Parts a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline bool contains(const Parts& outer, const Parts& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (at(outer, static_cast<int>(i)) < inner[i]) return false;
  return true;
}

// Every sub-diagram mu of lambda with |lambda| - |mu| = r.
inline void subdiagrams(const Parts& lambda, int row, int left, Parts& cur, std::vector<Parts>& out) {
  if (row == static_cast<int>(lambda.size())) {
    if (left == 0) out.push_back(trimmed(cur));
    return;
  }
  const int cap = row == 0 ? lambda[0] : std::min(lambda[row], cur[row - 1]);
  for (int v = cap; v >= 0; --v) {
    const int removed = lambda[row] - v;
    if (removed > left) break;
    cur.push_back(v);
    subdiagrams(lambda, row + 1, left - removed, cur, out);
    cur.pop_back();
  }
}

// A skew shape is a border strip when it is edge-connected and has no 2x2 block.
// Returns the number of rows occupied, or -1.
inline int border_strip_rows(const Parts& outer, const Parts& inner) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(outer.size()); ++i)
    for (int j = at(inner, i); j < outer[i]; ++j) cells.emplace_back(i, j);
  auto in = [&](int i, int j) {
    return i >= 0 && i < static_cast<int>(outer.size()) && j >= at(inner, i) && j < outer[i];
  };
  for (auto [i, j] : cells)
    if (in(i + 1, j) && in(i, j + 1) && in(i + 1, j + 1)) return -1;
  std::vector<std::pair<int, int>> stack{cells.front()};
  std::map<std::pair<int, int>, bool> seen{{cells.front(), true}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      std::pair<int, int> nb{i + di[d], j + dj[d]};
      if (in(nb.first, nb.second) && !seen[nb]) {
        seen[nb] = true;
        stack.push_back(nb);
      }
    }
  }
  if (static_cast<std::size_t>(std::count_if(seen.begin(), seen.end(), [](auto& e) { return e.second; })) !=
      cells.size())
    return -1;
  int rows = 0;
  for (int i = 0; i < static_cast<int>(outer.size()); ++i) rows += outer[i] > at(inner, i);
  return rows;
}

// chi^lambda on cycle type mu, stripping the first part of mu each step.
inline long long character(const Parts& lambda, const Parts& mu) {
  if (mu.empty()) return 1;
  static std::map<std::pair<Parts, Parts>, long long> memo;
  const auto key = std::make_pair(lambda, mu);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu.front();
  const Parts rest(mu.begin() + 1, mu.end());
  std::vector<Parts> subs;
  Parts cur;
  subdiagrams(lambda, 0, r, cur, subs);
  long long total = 0;
  for (const auto& inner : subs) {
    const int rows = border_strip_rows(lambda, inner);
    if (rows < 0) continue;
    total += ((rows - 1) % 2 ? -1 : 1) * character(inner, rest);
  }
  memo.emplace(key, total);
  return total;
}

// z_mu = prod i^{a_i} a_i!.
inline double centralizer(const Parts& mu) {
  std::map<int, int> mult;
  for (int part : mu) ++mult[part];
  double z = 1;
  for (auto [i, a] : mult)
    for (int t = 1; t <= a; ++t) z *= i * t;
  return z;
}

inline Parts merged(Parts a, const Parts& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.rbegin(), a.rend());
  return a;
}

// c^lambda_{mu nu} = <chi^lambda restricted to S_a x S_b, chi^mu x chi^nu>.
inline long long lr_by_characters(const Parts& lambda, const Parts& mu, const Parts& nu) {
  const int a = std::accumulate(mu.begin(), mu.end(), 0);
  const int b = std::accumulate(nu.begin(), nu.end(), 0);
  double total = 0;
  for (const auto& alpha : partitions(a))
    for (const auto& beta : partitions(b))
      total += static_cast<double>(character(lambda, merged(alpha, beta)) * character(mu, alpha) *
                                   character(nu, beta)) /
               (centralizer(alpha) * centralizer(beta));
  return std::llround(total);
}

inline Parts cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  Parts type;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// Every element of C_p wr C_p on p^2 points as (permutation, base sum, top shift):
// pb + i -> p((b + j) mod p) + (i + c_b) mod p.
struct WreathTwo {
  std::vector<int> perm;
  int base_sum = 0;
  int top = 0;
};

inline void for_each_wreath_two(int p, const std::function<void(const WreathTwo&)>& visit) {
  std::vector<int> c(static_cast<std::size_t>(p), 0);
  const int n = p * p;
  std::function<void(int)> rec = [&](int b) {
    if (b == p) {
      for (int j = 0; j < p; ++j) {
        WreathTwo w;
        w.perm.resize(static_cast<std::size_t>(n));
        for (int blk = 0; blk < p; ++blk)
          for (int i = 0; i < p; ++i) w.perm[blk * p + i] = p * ((blk + j) % p) + (i + c[blk]) % p;
        w.base_sum = std::accumulate(c.begin(), c.end(), 0) % p;
        w.top = j;
        visit(w);
      }
      return;
    }
    for (int v = 0; v < p; ++v) {
      c[b] = v;
      rec(b + 1);
    }
  };
  rec(0);
}

// Z^lambda for the linear character (s1, s2) of C_p wr C_p, in floating point.
inline long long wreath_two_multiplicity(int p, const Parts& lambda, int s1, int s2) {
  const double pi = std::acos(-1.0);
  std::map<Parts, long long> chi;
  std::complex<double> total = 0;
  double order = 0;
  for_each_wreath_two(p, [&](const WreathTwo& w) {
    const Parts t = cycle_type(w.perm);
    auto it = chi.find(t);
    if (it == chi.end()) it = chi.emplace(t, character(lambda, t)).first;
    const int e = (s1 * w.base_sum + s2 * w.top) % p;
    total += static_cast<double>(it->second) * std::polar(1.0, -2 * pi * e / p);
    order += 1;
  });
  return std::llround(total.real() / order);
}

}  // namespace oracle
