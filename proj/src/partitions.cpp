#include "sylow/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace sylow {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t p, int e) {
  if (e < 0) throw ArgumentError("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > INT64_MAX / p) throw ResourceError("ipow: overflow");
    r *= p;
  }
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ArgumentError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_multiset(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(first()), 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > (*this)[i]) return false;
  return true;
}

bool Partition::is_hook() const {
  for (int i = 1; i < length(); ++i)
    if (parts_[static_cast<std::size_t>(i)] != 1) return false;
  return !parts_.empty();
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::string Partition::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

PartitionSet::PartitionSet(int n, std::vector<Partition> elements) : n_(n), elems_(std::move(elements)) {
  for (const auto& e : elems_)
    if (e.size() != n_)
      throw ArgumentError("PartitionSet: " + e.to_string() + " is not a partition of " + std::to_string(n_));
  std::sort(elems_.begin(), elems_.end(), CanonicalOrder{});
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool PartitionSet::contains(const Partition& lambda) const {
  if (lambda.size() != n_) return false;
  return std::binary_search(elems_.begin(), elems_.end(), lambda, CanonicalOrder{});
}

void PartitionSet::check_same_n(const PartitionSet& other) const {
  if (other.n_ != n_)
    throw ArgumentError("PartitionSet: mixing sizes " + std::to_string(n_) + " and " + std::to_string(other.n_));
}

PartitionSet PartitionSet::conjugates() const {
  std::vector<Partition> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(e.conjugate());
  return PartitionSet(n_, std::move(out));
}

PartitionSet PartitionSet::united(const PartitionSet& other) const {
  check_same_n(other);
  std::vector<Partition> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out), CanonicalOrder{});
  return PartitionSet(n_, std::move(out));
}

PartitionSet PartitionSet::intersected(const PartitionSet& other) const {
  check_same_n(other);
  std::vector<Partition> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out), CanonicalOrder{});
  return PartitionSet(n_, std::move(out));
}

PartitionSet PartitionSet::minus(const PartitionSet& other) const {
  check_same_n(other);
  std::vector<Partition> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out), CanonicalOrder{});
  return PartitionSet(n_, std::move(out));
}

bool PartitionSet::is_subset_of(const PartitionSet& other) const {
  check_same_n(other);
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end(),
                       CanonicalOrder{});
}

std::string PartitionSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ", ";
    out += elems_[i].to_string();
  }
  return out + "}";
}

namespace {

// Reverse-lexicographic generation with bounds on part size and length.
void generate(int remaining, int max_part, int max_length, std::vector<int>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) >= max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // Remaining cells must fit in the rows still available.
    const int rows_left = max_length - static_cast<int>(current.size());
    if (static_cast<std::int64_t>(part) * rows_left < remaining) break;
    current.push_back(part);
    generate(remaining - part, part, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> bounded_partitions(int n, int max_part, int max_length) {
  if (n < 0) throw ArgumentError("bounded_partitions: negative n");
  std::vector<Partition> out;
  if (max_part < 0 || max_length < 0) return out;
  std::vector<int> current;
  generate(n, max_part, max_length, current, out);
  return out;
}

std::vector<Partition> all_partitions(int n, int budget) {
  if (n < 0) throw ArgumentError("all_partitions: negative n");
  if (n > budget)
    throw ResourceError("all_partitions: n=" + std::to_string(n) + " exceeds budget " + std::to_string(budget));
  return bounded_partitions(n, n, n);
}

std::vector<Partition> subpartitions(const Partition& lambda, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > lambda.size()) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (row >= lambda.length()) return;
    const int cap = std::min(lambda[row], row == 0 ? lambda[0] : current.back());
    // Rows below can hold at most their own lengths (further capped by this row).
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      int room = 0;
      for (int r = row + 1; r < lambda.length(); ++r) room += std::min(lambda[r], part);
      if (part + room < remaining) break;
      current.push_back(part);
      rec(row + 1, remaining - part);
      current.pop_back();
    }
  };
  rec(0, size);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ArgumentError("unbalanced parentheses in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream in(body);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::logic_error&) {
      throw ArgumentError("bad partition '" + text + "'");
    }
    if (used != token.size()) throw ArgumentError("bad partition '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

PartitionSet box_set(int n, int t) {
  if (n < 1 || t < 1) throw ArgumentError("box_set: n and t must be positive");
  return PartitionSet(n, bounded_partitions(n, t, t));
}

bool is_thin(const Partition& lambda) {
  return lambda.is_hook() || lambda.length() <= 2 || lambda.first() <= 2;
}

Partition hook(int n, int m) {
  if (m < 1 || m > n) throw ArgumentError("hook: need 1 <= m <= n");
  std::vector<int> parts{m};
  parts.insert(parts.end(), static_cast<std::size_t>(n - m), 1);
  return Partition(std::move(parts));
}

Partition two_row(int n, int m) {
  if (2 * m < n || m > n) throw ArgumentError("two_row: need n/2 <= m <= n");
  if (m == n) return Partition{n};
  return Partition{m, n - m};
}

std::vector<std::pair<int, int>> p_adic_expansion(std::int64_t n, int p) {
  if (!is_prime(p)) throw ArgumentError("p_adic_expansion: " + std::to_string(p) + " is not prime");
  if (n < 1) throw ArgumentError("p_adic_expansion: n must be positive");
  std::vector<std::pair<int, int>> out;
  for (int e = 0; n > 0; ++e, n /= p)
    if (n % p != 0) out.emplace_back(e, static_cast<int>(n % p));
  return out;
}

PartitionSet circ_closure(const PartitionSet& a) { return a.united(a.conjugates()); }

std::vector<Partition> remove_box(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts = lambda.parts();
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda[i] > lambda[i + 1]) {
      auto copy = parts;
      --copy[static_cast<std::size_t>(i)];
      out.push_back(Partition::from_multiset(std::move(copy)));
    }
  }
  return out;
}

std::vector<Partition> add_box(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts = lambda.parts();
  for (int i = 0; i <= lambda.length(); ++i) {
    if (i == 0 || lambda[i] < lambda[i - 1]) {
      auto copy = parts;
      if (i == lambda.length()) copy.push_back(1);
      else ++copy[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(copy));
    }
  }
  return out;
}

Partition partition_sum(const Partition& lambda, const Partition& mu) {
  std::vector<int> out(static_cast<std::size_t>(std::max(lambda.length(), mu.length())));
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[static_cast<std::size_t>(i)] = lambda[i] + mu[i];
  return Partition(std::move(out));
}

Partition prepend_row(int first, const Partition& rest) {
  std::vector<int> parts{first};
  parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
  return Partition(std::move(parts));
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  if (n > 400) throw ResourceError("partition_count: n too large for 64-bit counts");
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

std::uint64_t box_count(int n, int t) {
  if (n < 0 || t < 0) return 0;
  if (n > 400) throw ResourceError("box_count: n too large for 64-bit counts");
  t = std::min(t, n);
  // ways[c][s]: partitions with exactly c parts, each <= t, summing to s.
  const auto rows = static_cast<std::size_t>(t) + 1;
  const auto cols = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> ways(rows * cols, 0);
  ways[0] = 1;
  for (int part = 1; part <= t; ++part)
    for (std::size_t c = 1; c < rows; ++c)
      for (std::size_t s = static_cast<std::size_t>(part); s < cols; ++s)
        ways[c * cols + s] += ways[(c - 1) * cols + s - static_cast<std::size_t>(part)];
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < rows; ++c) total += ways[c * cols + static_cast<std::size_t>(n)];
  return total;
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner))
    throw ArgumentError("skew shape: " + inner.to_string() + " is not contained in " + outer.to_string());
}

std::string SkewShape::to_string() const { return "[" + outer.to_string() + "\\" + inner.to_string() + "]"; }

}  // namespace sylow
