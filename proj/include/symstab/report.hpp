#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symstab/arnold.hpp"
#include "symstab/chars.hpp"
#include "symstab/squarefree.hpp"
#include "symstab/stability.hpp"
#include "symstab/symcore.hpp"

namespace symstab::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// {"num":"p","den":"q"} in lowest terms.
Json rational_json(const Rational& r);
Json partition_json(const Partition& p);

// [{"partition":[...], "stable":[...]|null, "mult":m, "dim":"d"}, ...]
Json multiplicity_table_json(const chars::MultiplicityTable& t);
std::string multiplicity_table_text(const chars::MultiplicityTable& t, bool stable_notation);

Json subset_vector_json(const SubsetVector& v);
std::string factored_basis_string(const squarefree::DeltaPair& dp, int n, int k, int i);

Json character_json(const chars::CharacterFn& f);
std::string character_text(const chars::CharacterFn& f);

Json rep_report_json(const stability::RepStabilityReport& r);
std::string rep_report_text(const stability::RepStabilityReport& r);

Json action_report_json(const stability::ActionStabilityReport& r);
std::string action_report_text(const stability::ActionStabilityReport& r);

Json omega_bases_json(const arnold::OmegaBases& b);
std::string omega_bases_text(const arnold::OmegaBases& b);

// Top-level document: {"command", "schema_version", "params", "result"}.
Json envelope(const std::string& command, Json params, Json result);

}  // namespace symstab::report
