#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sylow/common.hpp"
#include "sylow/cyclotomic.hpp"
#include "sylow/partitions.hpp"

namespace sylow {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Enumeration cap: SYLOW_BUDGET if set to a positive integer, else the default.
std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t budget);

// s = (s_1, ..., s_k) labelling a linear character of P_{p^k}.
struct SequenceLabel {
  int p = 0;
  std::vector<int> entries;

  SequenceLabel() = default;
  SequenceLabel(int p_, std::vector<int> entries_);

  int k() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  // s with every nonzero entry replaced by 1.
  SequenceLabel support_representative() const;
  // (s_from, ..., s_k) for a 0-based start.
  SequenceLabel suffix(int from) const;

  // "(0,1,0)"; "()" for k = 0.
  std::string to_string() const;
  // Accepts "0,1", "(0,1)" and "()".
  static SequenceLabel parse(int p, const std::string& text);

  friend bool operator==(const SequenceLabel&, const SequenceLabel&) = default;
  friend auto operator<=>(const SequenceLabel& a, const SequenceLabel& b) {
    if (a.k() != b.k()) return a.k() <=> b.k();
    return a.entries <=> b.entries;
  }
};

// A linear character of P_n: one sequence per p-adic digit unit, sorted.
struct MultisetLabel {
  int p = 0;
  int n = 0;
  std::vector<SequenceLabel> seqs;

  MultisetLabel() = default;
  MultisetLabel(int p_, int n_, std::vector<SequenceLabel> seqs_);
  static MultisetLabel single(const SequenceLabel& s);

  int r() const { return static_cast<int>(seqs.size()); }
  bool is_prime_power() const { return seqs.size() == 1; }
  bool is_trivial() const;
  MultisetLabel support_representative() const;

  // "{(0,0),(1,0)}".
  std::string to_string() const;
  // "5:1,0", "5@30:(1,0)|(2)".
  static MultisetLabel parse(const std::string& text);
  // Sequences written as "(0,0,0)|(0,0),(1,0)" or "0,1" for given p and n.
  static MultisetLabel parse_sequences(int p, int n, const std::string& text);

  friend bool operator==(const MultisetLabel&, const MultisetLabel&) = default;
  friend auto operator<=>(const MultisetLabel&, const MultisetLabel&) = default;
};

// Element of P_{p^k} in pre-order: [top, child_0, ..., child_{p-1}], each
// child laid out the same way one level down; a leaf is a single exponent.
struct WreathElement {
  int p = 0;
  int k = 0;
  std::vector<int> exps;

  static WreathElement identity(int p, int k);
  static WreathElement leaf(int p, int j);
  static WreathElement node(const std::vector<WreathElement>& children, int top);
};

// Number of exponents in an element of P_{p^k}: (p^k - 1) / (p - 1).
int flat_size(int p, int k);
BigInt group_order(int p, int k);
BigInt group_order(const MultisetLabel& label);

// Images of 0..p^k-1 (0-based points).
std::vector<int> to_permutation(const WreathElement& w);
Partition cycle_type(const std::vector<int>& perm);

// Visits every element of P_{p^k}; throws ResourceError above the budget.
void enumerate_elements(int p, int k, const std::function<void(const WreathElement&)>& visit,
                        std::uint64_t budget = enumeration_budget());

// phi(s)(w) = zeta^{phi_exponent(s, w)}.
int phi_exponent(const SequenceLabel& s, const WreathElement& w);
CyclotomicInt phi_value(const SequenceLabel& s, const WreathElement& w);

struct ProfileEntry {
  BigInt count;
  CyclotomicInt phi_sum;
};

// Cycle type -> (number of elements, sum of phi over them).
struct ClassProfile {
  int p = 0;
  int n = 0;
  std::map<Partition, ProfileEntry> entries;

  BigInt order() const;
};

// Direct product of the underlying groups and characters.
ClassProfile convolve(const ClassProfile& a, const ClassProfile& b);

// Enumerates P_{p^k} once per (p, k) and reuses the census for every label.
ClassProfile class_profile(const SequenceLabel& s, std::uint64_t budget = enumeration_budget());
ClassProfile class_profile(const MultisetLabel& label, std::uint64_t budget = enumeration_budget());

// Same profile from the wreath recursion without enumerating elements.
ClassProfile structural_profile(const SequenceLabel& s);

bool n_orbit_equivalent(const SequenceLabel& s, const SequenceLabel& t);
bool n_orbit_equivalent(const MultisetLabel& a, const MultisetLabel& b);
// The 0/1 sequences of length k.
std::vector<SequenceLabel> orbit_representatives(int p, int k);
// One label per orbit for P_n: multisets of 0/1 sequences per digit.
std::vector<MultisetLabel> orbit_representatives_n(int p, int n);

}  // namespace sylow
