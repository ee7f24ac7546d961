#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sylow/common.hpp"

namespace sylow {

// A weakly decreasing sequence of positive integers. The empty sequence is
// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts and drops zeros; for callers holding an unordered multiset of parts.
  static Partition from_multiset(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // i-th part (0-based); zero past the end.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  bool is_hook() const;
  int leg_length() const { return length() - 1; }

  // "(3,1,1)"; "()" for the empty partition.
  std::string to_string() const;
  // "3,1,1"; "" for the empty partition.
  std::string to_csv() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Canonical order: reverse lexicographic within one size, (n) first.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  }
};

// A finite set of partitions of one fixed n, kept sorted in canonical order.
class PartitionSet {
 public:
  explicit PartitionSet(int n = 0) : n_(n) {}
  PartitionSet(int n, std::vector<Partition> elements);

  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Partition& lambda) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Partition>& elements() const { return elems_; }

  PartitionSet conjugates() const;
  PartitionSet united(const PartitionSet& other) const;
  PartitionSet intersected(const PartitionSet& other) const;
  PartitionSet minus(const PartitionSet& other) const;
  bool is_subset_of(const PartitionSet& other) const;

  std::string to_string() const;

  friend bool operator==(const PartitionSet& a, const PartitionSet& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }

 private:
  void check_same_n(const PartitionSet& other) const;

  int n_ = 0;
  std::vector<Partition> elems_;
};

inline constexpr int kDefaultPartitionBudget = 250;

// "3,1,1", "(3,1,1)", "()" or "".
Partition parse_partition(const std::string& text);

// Every partition of n in canonical order.
std::vector<Partition> all_partitions(int n, int budget = kDefaultPartitionBudget);

// Partitions of n with every part <= max_part and at most max_length parts.
std::vector<Partition> bounded_partitions(int n, int max_part, int max_length);

// All partitions mu contained in lambda with |mu| = size.
std::vector<Partition> subpartitions(const Partition& lambda, int size);

Partition conjugate(const Partition& lambda);

// B_n(t): partitions of n that fit in a t x t square.
PartitionSet box_set(int n, int t);

bool is_thin(const Partition& lambda);

// (m, 1^{n-m}) for 1 <= m <= n.
Partition hook(int n, int m);
// (m, n-m) for n/2 <= m <= n.
Partition two_row(int n, int m);

// (exponent, digit) pairs of the base-p expansion of n, exponents increasing.
std::vector<std::pair<int, int>> p_adic_expansion(std::int64_t n, int p);

// A union A'.
PartitionSet circ_closure(const PartitionSet& a);

// lambda^- and lambda^+: remove or add one box.
std::vector<Partition> remove_box(const Partition& lambda);
std::vector<Partition> add_box(const Partition& lambda);

// Componentwise sum (lambda + mu)_i = lambda_i + mu_i.
Partition partition_sum(const Partition& lambda, const Partition& mu);

// (first, rest...) for building top-slice partitions such as (M, mu).
Partition prepend_row(int first, const Partition& rest);

// p(n) via the part-size recurrence; exact for n <= 400.
std::uint64_t partition_count(int n);
// |B_n(t)| without enumerating.
std::uint64_t box_count(int n, int t);

// Skew diagram [outer \ inner].
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition outer_, Partition inner_);
  int size() const { return outer.size() - inner.size(); }
  std::string to_string() const;
};

}  // namespace sylow
