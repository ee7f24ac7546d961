#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sylow/common.hpp"
#include "sylow/partitions.hpp"
#include "sylow/sylow_wreath.hpp"

namespace sylow {

// chi^lambda on the class of cycle type t (Murnaghan-Nakayama), memoized.
BigInt mn_value(const Partition& lambda, const Partition& cycle_type);

// chi^lambda(1) by the hook length formula.
BigInt hook_length_degree(const Partition& lambda);

// Process-wide memo table for mn_value.
class CharacterValueCache {
 public:
  static CharacterValueCache& instance();

  std::size_t size() const;
  void clear();
  // JSON object "lambda|t" -> decimal string, e.g. "3,1|2,1,1": "-1".
  void export_json(const std::string& path) const;
  // Merges entries from a file written by export_json.
  void import_json(const std::string& path);

 private:
  CharacterValueCache() = default;
};

struct BranchingResult {
  Partition lambda;
  MultisetLabel label;
  BigInt z;
};

// <chi^lambda restricted to P, phi> from a class profile of (P, phi).
BigInt inner_product(const Partition& lambda, const ClassProfile& profile);

BranchingResult branching_coefficient(const Partition& lambda, const SequenceLabel& s,
                                      std::uint64_t budget = enumeration_budget());

// Via iterated LR coefficients over the prime-power factors.
BranchingResult branching_coefficient_composite(const Partition& lambda, const MultisetLabel& label,
                                                std::uint64_t budget = enumeration_budget());

enum class OracleMethod {
  // Class profile of the whole group (product of factor censuses).
  Direct,
  // Prime-power factors combined through LR products.
  Composition,
};

// lambda -> Z^lambda_phi for every lambda with Z > 0. Cached per (label, method).
const std::map<Partition, BigInt>& z_table(const MultisetLabel& label, OracleMethod method = OracleMethod::Composition,
                                           std::uint64_t budget = enumeration_budget());

PartitionSet omega_oracle(const MultisetLabel& label, OracleMethod method = OracleMethod::Composition,
                          std::uint64_t budget = enumeration_budget());

// chi^lambda restricted to P_p = m * regular + correction * trivial.
struct HookRestriction {
  BigInt m;
  int correction = 0;
};
HookRestriction restriction_to_Pp(const Partition& lambda, int p);

}  // namespace sylow
