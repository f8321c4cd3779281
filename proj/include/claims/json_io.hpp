#pragma once

#include "claims/axioms.hpp"
#include "claims/paths.hpp"

#include <nlohmann/json.hpp>

namespace claims {

using Json = nlohmann::ordered_json;

// Amounts cross the JSON boundary as strings ("15", "26/123"); numeric
// literals are rejected so no float ever enters the engine.
Amount amount_from_json(const Json& j);
Json amounts_to_json(const AmountVec& v);
AmountVec amounts_from_json(const Json& j);

ClaimsProblem problem_from_json(const Json& j);
HistoricalProblem historical_from_json(const Json& j);
Json to_json(const HistoricalProblem& hp);

// Axiom-specific fields: "E1", "E_prime", "subgroup", "permutation"
// (1-based target positions), "scaled_by", "claim_increase"
// ({"agent": id, "new_claim": str}), "enlarged" (nested problem).
AxiomInstance instance_from_json(const Json& j);

Json to_json(const HistoricalSolution& sol, const ClaimsProblem& p);
Json to_json(const CheckResult& result);
Json to_json(const std::vector<FixtureResult>& report);
Json to_json(const AwardPath& path);
std::string path_to_csv(const AwardPath& path);

}  // namespace claims
