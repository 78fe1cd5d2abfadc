#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fibalg/algebra.hpp"
#include "fibalg/golden.hpp"
#include "fibalg/jordan.hpp"

namespace fibalg {

using json = nlohmann::ordered_json;

/// {"p": …, "q": …, "d": …}; components beyond 64 bits are written as decimal strings.
json to_json(const GoldenRational& x);
GoldenRational golden_from_json(const json& j);

/// {"n": int} | {"point": "a+bt"} | {"central": true}
json to_json(const BasisKey& key);
BasisKey key_from_json(const json& j);

/// List of {"key": …, "coeff": {p,q,d}} in key order.
json to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const json& j);

/**
 * {"algebra", "alpha", "beta", "N", "mode", "basis", "constants"} with
 * constants as {"i","j","k","value":{p,q,d}} for nonzero entries with j ≤ k.
 */
json to_json(const StructureConstantTable& table);
StructureConstantTable structure_constants_from_json(const json& j);

/// Header "i,j,k,p,q,d" followed by one row per nonzero entry.
std::string to_csv(const StructureConstantTable& table);
/// Reads the CSV form; the metadata it cannot carry is taken from `tspec`.
StructureConstantTable structure_constants_from_csv(std::string_view csv, const TruncationSpec& tspec);

}  // namespace fibalg
