#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sylow/common.hpp"
#include "sylow/partitions.hpp"

namespace sylow {

// A filling of a skew shape; entries[i] holds the values of row i of the
// skew part, left to right.
struct LRFilling {
  SkewShape shape;
  std::vector<std::vector<int>> entries;

  Partition weight() const;
  // Right-to-left, top-to-bottom reading word.
  std::vector<int> reading_word() const;
  // Rows weakly increase, columns strictly increase, reading word is good.
  bool is_valid() const;
};

// Caps |lambda| for the enumerative set operations (star, d_set, lr_weights).
struct StarBudget {
  int max_n = 40;
};

bool is_good_sequence(std::span<const int> word);

// c^lambda_{mu nu} by counting LR fillings of [lambda \ mu] of weight nu.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Calls visit for every LR filling of the shape (of the given weight, if any).
void for_each_lr_filling(const SkewShape& shape, const std::optional<Partition>& weight,
                         const std::function<void(const LRFilling&)>& visit);

// LR(gamma): all weights of LR fillings of the skew shape.
PartitionSet lr_weights(const SkewShape& gamma, StarBudget budget = {});

// Expansion of chi^mu x chi^nu induced up: lambda -> c^lambda_{mu nu}. When
// bound is given only lambda contained in bound are produced.
std::map<Partition, std::uint64_t> lr_product(const Partition& mu, const Partition& nu,
                                              const std::optional<Partition>& bound = std::nullopt);

// c^lambda_{mu^1,...,mu^r}.
BigInt iterated_lr(const Partition& lambda, std::span<const Partition> factors);

// A * B = {lambda : c^lambda_{mu nu} > 0 for some mu in A, nu in B}.
PartitionSet star(const PartitionSet& a, const PartitionSet& b, StarBudget budget = {});

// D(q, m, B): partitions of qm with a constituent chi^{mu_1} x ... x chi^{mu_q}
// on restriction to S_m^q, mu_i in B not all equal.
PartitionSet d_set(int q, int m, const PartitionSet& b, StarBudget budget = {});

}  // namespace sylow
