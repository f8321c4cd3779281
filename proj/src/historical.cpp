#include "claims/historical.hpp"

#include <algorithm>

namespace claims {

Amount solve_lambda(const AmountVec& claims, const AmountVec& tentative,
                    const Amount& endowment) {
    Amount floor_sum = 0;
    Amount cap_sum = 0;
    for (std::size_t i = 0; i < claims.size(); ++i) {
        floor_sum += std::min(claims[i], tentative[i]);
        cap_sum += claims[i];
    }
    if (endowment < floor_sum || endowment > cap_sum)
        throw SolveError("WindowViolated");
    return solve_monotone_level(LevelKind::Cap, tentative, claims, endowment);
}

namespace {

HistoricalSolution clamp_solution(const ClaimsProblem& p,
                                  AmountVec tentative, Amount lambda) {
    HistoricalSolution sol;
    sol.lambda = std::move(lambda);
    sol.awards.awards.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Amount raised = tentative[i] + sol.lambda;
        if (raised > p.claims[i]) {
            sol.awards.awards[i] = p.claims[i];
            sol.satiated.push_back(i);
        } else {
            sol.awards.awards[i] = raised;
        }
    }
    sol.tentative = std::move(tentative);
    return sol;
}

AmountVec tentative_allocation(const RuleHandle& rule,
                               const HistoricalProblem& hp) {
    const HistoryAggregates agg = aggregates(hp);
    ClaimsProblem adjusted{hp.problem.agents, agg.adjusted_claims,
                           hp.problem.endowment};
    return rule(adjusted).awards;
}

}  // namespace

HistoricalSolution apply_historical(const RuleHandle& rule,
                                    const HistoricalProblem& hp) {
    require_valid(hp);
    AmountVec tentative = tentative_allocation(rule, hp);
    const Amount lambda =
        solve_lambda(hp.problem.claims, tentative, hp.problem.endowment);
    return clamp_solution(hp.problem, std::move(tentative), lambda);
}

std::pair<HistoricalSolution, IterativeTrace> apply_historical_iterative(
    const RuleHandle& rule, const HistoricalProblem& hp) {
    require_valid(hp);
    const ClaimsProblem& p = hp.problem;
    const AmountVec tentative = tentative_allocation(rule, hp);
    const std::size_t n = p.size();

    IterativeTrace trace;
    std::vector<bool> pinned(n, false);
    std::size_t remaining = n;
    Amount share = 0;  // accumulated per-capita redistribution
    while (true) {
        IterativeTrace::Stage stage;
        stage.excess = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!pinned[i] && tentative[i] + share > p.claims[i]) {
                stage.members.push_back(i);
                stage.excess += tentative[i] + share - p.claims[i];
            }
        }
        if (stage.members.empty())
            break;
        for (std::size_t i : stage.members) {
            pinned[i] = true;
            trace.final_set.push_back(i);
        }
        remaining -= stage.members.size();
        const Amount excess = stage.excess;
        trace.stages.push_back(std::move(stage));
        if (remaining == 0)
            break;  // everyone pinned at their claim; E must equal sum c
        share += excess / Amount(remaining);
    }

    HistoricalSolution sol;
    sol.tentative = tentative;
    sol.awards.awards.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        sol.awards.awards[i] =
            pinned[i] ? p.claims[i] : tentative[i] + share;
    sol.satiated = trace.final_set;
    std::sort(sol.satiated.begin(), sol.satiated.end());
    if (remaining > 0) {
        sol.lambda = share;
    } else {
        // E = sum c: the smallest level satiating every agent.
        Amount level = 0;
        for (std::size_t i = 0; i < n; ++i)
            level = std::max(level, Amount(p.claims[i] - tentative[i]));
        sol.lambda = level;
    }
    return {std::move(sol), std::move(trace)};
}

namespace {

bool gamma_branch(const HistoricalProblem& hp) {
    return hp.problem.size() == 2 &&
           std::max(hp.problem.claims[0], hp.problem.claims[1]) <
               hp.problem.endowment;
}

}  // namespace

Allocation gamma1(const RuleHandle& rule, const HistoricalProblem& hp) {
    require_valid(hp);
    if (gamma_branch(hp)) {
        // max{c1,c2} < E <= c1+c2 forces 0 < E-c1 <= c2, so this is bounded.
        return Allocation{
            {hp.problem.claims[0], hp.problem.endowment - hp.problem.claims[0]}};
    }
    return apply_historical(rule, hp).awards;
}

Allocation gamma2(const RuleHandle& rule, const HistoricalProblem& hp) {
    require_valid(hp);
    if (gamma_branch(hp))
        return cel(hp.problem);
    return apply_historical(rule, hp).awards;
}

OperatorHandle operator_phi() {
    return {"phi", [](const RuleHandle& rule, const HistoricalProblem& hp) {
                return apply_historical(rule, hp).awards;
            }};
}

OperatorHandle operator_gamma1() { return {"gamma1", gamma1}; }

OperatorHandle operator_gamma2() { return {"gamma2", gamma2}; }

OperatorHandle make_operator(const std::string& name) {
    if (name == "phi")
        return operator_phi();
    if (name == "gamma1")
        return operator_gamma1();
    if (name == "gamma2")
        return operator_gamma2();
    throw UnknownName("unknown operator: " + name);
}

}  // namespace claims
