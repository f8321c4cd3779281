#include "claims/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace claims {

Amount amount_from_json(const Json& j) {
    if (!j.is_string())
        throw ParseError("amounts must be strings, got: " + j.dump());
    return parse_amount(j.get<std::string>());
}

Json amounts_to_json(const AmountVec& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(format_amount(x));
    return out;
}

AmountVec amounts_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("expected an array of amounts");
    AmountVec out;
    for (const auto& item : j)
        out.push_back(amount_from_json(item));
    return out;
}

ClaimsProblem problem_from_json(const Json& j) {
    ClaimsProblem p;
    if (!j.is_object())
        throw ParseError("problem must be a JSON object");
    if (!j.contains("claims"))
        throw ParseError("problem is missing \"claims\"");
    p.claims = amounts_from_json(j.at("claims"));
    if (j.contains("agents")) {
        if (!j.at("agents").is_array())
            throw ParseError("\"agents\" must be an array of integers");
        for (const auto& a : j.at("agents")) {
            if (!a.is_number_integer())
                throw ParseError("agent ids must be integers");
            p.agents.push_back(a.get<int>());
        }
    } else {
        for (std::size_t i = 0; i < p.claims.size(); ++i)
            p.agents.push_back(static_cast<int>(i) + 1);
    }
    if (j.contains("endowment"))
        p.endowment = amount_from_json(j.at("endowment"));
    return p;
}

HistoricalProblem historical_from_json(const Json& j) {
    HistoricalProblem hp;
    hp.problem = problem_from_json(j);
    if (j.contains("history")) {
        if (!j.at("history").is_array())
            throw ParseError("\"history\" must be an array of periods");
        for (const auto& period : j.at("history")) {
            if (!period.contains("claims") || !period.contains("allocations"))
                throw ParseError(
                    "each history period needs \"claims\" and \"allocations\"");
            hp.history.periods.push_back(
                {amounts_from_json(period.at("claims")),
                 amounts_from_json(period.at("allocations"))});
        }
    }
    return hp;
}

Json to_json(const HistoricalProblem& hp) {
    Json out;
    out["agents"] = hp.problem.agents;
    out["claims"] = amounts_to_json(hp.problem.claims);
    out["endowment"] = format_amount(hp.problem.endowment);
    if (!hp.history.empty()) {
        Json periods = Json::array();
        for (const auto& period : hp.history.periods) {
            Json p;
            p["claims"] = amounts_to_json(period.claims);
            p["allocations"] = amounts_to_json(period.allocations);
            periods.push_back(std::move(p));
        }
        out["history"] = std::move(periods);
    }
    return out;
}

AxiomInstance instance_from_json(const Json& j) {
    AxiomInstance instance;
    instance.hp = historical_from_json(j);
    if (j.contains("E1"))
        instance.endowment_part = amount_from_json(j.at("E1"));
    if (j.contains("E_prime"))
        instance.larger_endowment = amount_from_json(j.at("E_prime"));
    if (j.contains("subgroup"))
        instance.subgroup = j.at("subgroup").get<std::vector<int>>();
    if (j.contains("permutation")) {
        for (const auto& entry : j.at("permutation")) {
            if (!entry.is_number_integer() || entry.get<int>() < 1)
                throw ParseError("permutation entries are 1-based positions");
            instance.permutation.push_back(
                static_cast<std::size_t>(entry.get<int>() - 1));
        }
    }
    if (j.contains("scaled_by"))
        instance.scale_factor = amount_from_json(j.at("scaled_by"));
    if (j.contains("claim_increase")) {
        const auto& ci = j.at("claim_increase");
        if (!ci.contains("agent") || !ci.contains("new_claim"))
            throw ParseError(
                "claim_increase needs \"agent\" and \"new_claim\"");
        const int id = ci.at("agent").get<int>();
        const auto& agents = instance.hp.problem.agents;
        const auto it = std::find(agents.begin(), agents.end(), id);
        if (it == agents.end())
            throw ParseError("claim_increase agent not in problem");
        instance.claim_increase = {
            static_cast<std::size_t>(it - agents.begin()),
            amount_from_json(ci.at("new_claim"))};
    }
    if (j.contains("enlarged"))
        instance.enlarged = historical_from_json(j.at("enlarged"));
    return instance;
}

Json to_json(const HistoricalSolution& sol, const ClaimsProblem& p) {
    Json out;
    out["awards"] = amounts_to_json(sol.awards.awards);
    out["lambda"] = format_amount(sol.lambda);
    out["tentative"] = amounts_to_json(sol.tentative);
    Json satiated = Json::array();
    for (std::size_t idx : sol.satiated)
        satiated.push_back(p.agents[idx]);
    out["satiated"] = std::move(satiated);
    return out;
}

Json to_json(const CheckResult& result) {
    Json out;
    out["verdict"] = result.holds ? "holds" : "violated";
    if (!result.holds) {
        out["detail"] = result.detail;
        if (result.witness)
            out["witness"] = to_json(result.witness->hp);
    }
    if (result.trial >= 0)
        out["trial"] = result.trial;
    return out;
}

Json to_json(const std::vector<FixtureResult>& report) {
    Json fixtures = Json::array();
    bool all_match = true;
    for (const auto& fx : report) {
        Json item;
        item["name"] = fx.name;
        Json values = Json::array();
        for (const auto& [label, expected, computed] : fx.values) {
            Json v;
            v["label"] = label;
            v["expected"] = expected;
            v["computed"] = computed;
            values.push_back(std::move(v));
        }
        item["values"] = std::move(values);
        item["match"] = fx.match;
        item["violation_confirmed"] = fx.violation_confirmed;
        all_match = all_match && fx.match && fx.violation_confirmed;
        fixtures.push_back(std::move(item));
    }
    Json out;
    out["fixtures"] = std::move(fixtures);
    out["all_match"] = all_match;
    return out;
}

Json to_json(const AwardPath& path) {
    Json out;
    out["claims"] = amounts_to_json(path.claims);
    Json vertices = Json::array();
    for (const auto& v : path.vertices) {
        Json vertex;
        vertex["endowment"] = format_amount(sum(v));
        vertex["awards"] = amounts_to_json(v);
        vertices.push_back(std::move(vertex));
    }
    out["vertices"] = std::move(vertices);
    return out;
}

std::string path_to_csv(const AwardPath& path) {
    std::ostringstream oss;
    oss << "endowment";
    for (std::size_t i = 0; i < path.claims.size(); ++i)
        oss << ",award_" << (i + 1);
    oss << "\n";
    for (const auto& v : path.vertices) {
        oss << format_amount(sum(v));
        for (const auto& x : v)
            oss << "," << format_amount(x);
        oss << "\n";
    }
    return oss.str();
}

}  // namespace claims
