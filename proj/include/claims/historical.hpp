#pragma once

#include "claims/rules.hpp"

#include <functional>
#include <string>
#include <vector>

namespace claims {

// Result of extending a standard rule to a historical problem: the tentative
// allocation at the history-adjusted claims, the clamp level lambda, and the
// agents whose award was clamped at their present claim.
struct HistoricalSolution {
    Allocation awards;
    Amount lambda;
    AmountVec tentative;
    std::vector<std::size_t> satiated;
};

// Stages of the sequential redistribution procedure: at each stage the
// over-awarded agents are pinned at their claims and their excess is split
// equally over the rest.
struct IterativeTrace {
    struct Stage {
        std::vector<std::size_t> members;
        Amount excess;
    };
    std::vector<Stage> stages;
    std::vector<std::size_t> final_set;
};

// Solves sum_i min{claims_i, tentative_i + lambda} = endowment for the
// smallest lambda >= 0. Throws SolveError("WindowViolated") when the
// endowment lies outside [sum min{c, t}, sum c].
Amount solve_lambda(const AmountVec& claims, const AmountVec& tentative,
                    const Amount& endowment);

HistoricalSolution apply_historical(const RuleHandle& rule,
                                    const HistoricalProblem& hp);

// Same awards as apply_historical, computed by the staged equal-redistribution
// procedure; kept as an independent route for cross-checking.
std::pair<HistoricalSolution, IterativeTrace> apply_historical_iterative(
    const RuleHandle& rule, const HistoricalProblem& hp);

// Independence fixtures: each deviates from the historical operator only on
// two-agent problems with max{c1,c2} < E.
Allocation gamma1(const RuleHandle& rule, const HistoricalProblem& hp);
Allocation gamma2(const RuleHandle& rule, const HistoricalProblem& hp);

// A named, evaluable extension operator. Users may construct their own
// handles; the axiom checkers accept any of them.
struct OperatorHandle {
    std::string name;
    std::function<Allocation(const RuleHandle&, const HistoricalProblem&)>
        extend;

    Allocation operator()(const RuleHandle& rule,
                          const HistoricalProblem& hp) const {
        return extend(rule, hp);
    }
};

OperatorHandle operator_phi();
OperatorHandle operator_gamma1();
OperatorHandle operator_gamma2();

// Accepts "phi", "gamma1", "gamma2". Throws UnknownName otherwise.
OperatorHandle make_operator(const std::string& name);

}  // namespace claims
