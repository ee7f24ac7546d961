#pragma once

#include <json.hpp>

#include "sylow/branching_theory.hpp"
#include "sylow/cyclotomic.hpp"
#include "sylow/harness.hpp"
#include "sylow/partitions.hpp"
#include "sylow/sn_characters.hpp"
#include "sylow/sylow_wreath.hpp"

namespace sylow {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Big integers travel as decimal strings.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

Json to_json(const PartitionSet& set);
PartitionSet partition_set_from_json(int n, const Json& j);

Json to_json(const CyclotomicInt& x);
CyclotomicInt cyclotomic_from_json(const Json& j);

// Keyed by the cycle type written as "5,5,1".
Json to_json(const ClassProfile& profile);
ClassProfile class_profile_from_json(const Json& j);

Json to_json(const OmegaDescription& omega);
Json to_json(const Prediction& prediction);
Json to_json(const BranchingResult& result);
Json to_json(const VerifyReport& report);
Json to_json(const RatioBounds& bounds);

}  // namespace sylow
