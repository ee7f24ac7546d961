#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sylow/partitions.hpp"
#include "sylow/sylow_wreath.hpp"

namespace sylow {

struct LabelStats {
  std::optional<int> f;  // 1-based position of the leftmost nonzero entry
  std::optional<int> g;  // second leftmost
  int z = 0;             // number of nonzero entries
  int tau = 1;
};

LabelStats label_stats(const SequenceLabel& s);

struct TypeTuple {
  std::array<int, 4> x{};

  int r() const { return x[0] + x[1] + x[2] + x[3]; }
  std::string to_string() const;
  friend bool operator==(const TypeTuple&, const TypeTuple&) = default;
};

TypeTuple type_tuple(const MultisetLabel& label);
// No factor of type 4 and not the trivial character.
bool is_quasi_trivial(const MultisetLabel& label);
// T(phi) = (R-1, 1, 0, 0).
bool is_exceptional(const MultisetLabel& label);

std::int64_t big_M(const SequenceLabel& s);
std::int64_t little_m(const SequenceLabel& s);
std::int64_t n_value(const SequenceLabel& s);
std::int64_t big_M_composite(const MultisetLabel& label);
std::int64_t n_value_composite(const MultisetLabel& label);
std::int64_t m_composite(const MultisetLabel& label);

enum class Membership { In, Out, Unknown };

// Symbolic description of Omega(phi) as a set of partitions of n.
//
// Exact: B_n(box) minus `excluded`, plus `extras` and the conjugation-closed
// slice {(row, mu) : mu in inner}.
// Sandwich: B_n(lower) inside, B_n(upper) outside; optionally no thin
// partitions outside B_n(lower) and a known slice at first row `upper`.
struct OmegaDescription {
  enum class Kind { Exact, Sandwich };

  struct Slice {
    int row = 0;
    std::shared_ptr<const OmegaDescription> inner;
  };

  Kind kind = Kind::Exact;
  int n = 0;
  int lower = 0;
  int upper = 0;
  bool no_thin_outside = false;
  std::optional<Slice> slice;
  std::vector<Partition> excluded;
  std::vector<Partition> extras;
  // Short name used in printing, such as "P'(25)".
  std::string alias;

  Membership contains(const Partition& lambda) const;
  // Every partition of n whose membership is In; throws if any is Unknown.
  PartitionSet enumerate(int budget = kDefaultPartitionBudget) const;
  std::string normal_form() const;
};

struct Prediction {
  MultisetLabel label;
  std::vector<LabelStats> stats;  // per sequence, in label order
  TypeTuple type;
  std::int64_t m = 0;
  std::int64_t M = 0;
  std::int64_t N = 0;
  OmegaDescription omega;
  // The closed forms are proved for p >= 5 only.
  bool theorem_applies = true;
  std::vector<std::string> notes;
};

OmegaDescription predict_omega(const MultisetLabel& label);
OmegaDescription predict_omega(const SequenceLabel& s);
Prediction predict(const MultisetLabel& label);

// Largest t with B_n(t) inside the set and smallest t with the set inside B_n(t).
std::int64_t observed_m(const PartitionSet& omega);
std::int64_t observed_M(const PartitionSet& omega);

struct Fraction {
  BigInt num;
  BigInt den;
  std::string to_string() const;
  double to_double() const;
};

struct RatioBounds {
  int n = 0;
  int p = 0;
  std::int64_t m_min = 0;
  std::int64_t M_min = 0;
  Fraction lower;
  Fraction upper;
  std::optional<Fraction> exact;
};

inline constexpr int kExactRatioMaxN = 30;

// |B_n(m_min)| / p(n) and |B_n(M_min)| / p(n); exact |Omega_n| / p(n) on request,
// for n <= kExactRatioMaxN.
RatioBounds omega_intersection_bounds(int n, int p, bool exact = false);

}  // namespace sylow
