#pragma once

// JSON file formats and the divisor micro-grammar.
//
//  cyclotomic  {"conductor": n, "coeffs": [[e, "p/q"], ...]}
//  group       {"order": n, "table": [[...], ...]}
//              {"degree": d, "generators": [[images...], ...]}   (0- or 1-based)
//  table       {"classes": [[representative, size], ...], "irreducibles": [[cyclotomic, ...], ...]}
//  action      {"group": ..., "character_table": ..., "gamma": g,
//               "vector": {"a": [...], "b": [...], "c": [{"element": e, "order": m}, ...]}}
//  divisor     {"terms": [{"site": "branch:2" | "free:0", "r": 5}, ...], "assert_nonspecial": false}
//
// Malformed input throws ValidationError.

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eqrr/chartab.hpp"
#include "eqrr/cover.hpp"
#include "eqrr/divisor.hpp"
#include "eqrr/equivariant.hpp"
#include "eqrr/exact.hpp"
#include "eqrr/group.hpp"

namespace eqrr {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::filesystem::path& path);

Cyclotomic cyclotomic_from_json(const Json& j);
Json to_json(const Cyclotomic& x);

FiniteGroup group_from_json(const Json& j);
Json to_json(const FiniteGroup& group);

/// Reads a table for `group`. Classes may be listed in any order; values are
/// permuted into the group's conjugacy-partition order before validation.
CharacterTable table_from_json(const Json& j, std::shared_ptr<const FiniteGroup> group);
Json to_json(const CharacterTable& table);

GroupAction action_from_json(const Json& j, std::optional<Convention> convention = std::nullopt);
Json to_json(const GroupAction& action);

struct DivisorInput {
  std::vector<TermInput> terms;
  bool assert_nonspecial = false;
};

DivisorInput divisor_from_json(const Json& j);
Json to_json(const DivisorInput& divisor);

/// Comma-separated "branch<j>:<r>" and "free:<r>" terms. Each free term is a
/// distinct free orbit, numbered in order of appearance.
DivisorInput parse_divisor_spec(std::string_view spec);

Site parse_site(std::string_view text);
Convention parse_convention(std::string_view text);
std::string to_string(Convention convention);

/// {"V_0": m_0, "V_1": m_1, ...}
Json multiplicities_to_json(const MultiplicityVector& m);

/// {"multiplicities": ..., "dim_check": {"lhs", "rhs"}, "nonspecial", "paths_agree"}
Json decomposition_to_json(const Decomposition& d, bool paths_agree);

}  // namespace eqrr
