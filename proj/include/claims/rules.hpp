#pragma once

#include "claims/core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace claims {

enum class LevelKind {
    Cap,   // sum_i min{caps_i, base_i + level} = target
    Loss,  // sum_i max{0, base_i - level} = target
};

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact solver for the piecewise-linear level equations shared by CEA, CEL,
// the Talmud rule and the historical clamp. Returns the smallest nonnegative
// level attaining the target; throws SolveError("TargetUnreachable") when the
// target lies outside the map's range. Caps are ignored for the Loss kind.
Amount solve_monotone_level(LevelKind kind, const AmountVec& base,
                            const AmountVec& caps, const Amount& target);

enum class RuleKind { Proportional, Cea, Cel, Talmud, Priority, RDagger, Custom };

// A named, evaluable division rule. Every evaluate() result satisfies
// boundedness and balance for the given problem.
struct RuleHandle {
    std::string name;
    RuleKind kind = RuleKind::Custom;
    std::vector<int> priority_order;  // agent ids, only for Priority
    std::function<Allocation(const ClaimsProblem&)> evaluate;

    Allocation operator()(const ClaimsProblem& p) const { return evaluate(p); }
};

Allocation proportional(const ClaimsProblem& p);
Allocation cea(const ClaimsProblem& p);
Allocation cel(const ClaimsProblem& p);
Allocation talmud(const ClaimsProblem& p);

// Greedy fill honoring claims in the given order of agent ids. The order must
// contain every agent of the problem.
Allocation priority(const std::vector<int>& order, const ClaimsProblem& p);

// The conditional priority rule used as a claims-monotonicity fixture: on
// N = {1,2,3} it uses order 1>3>2 when c1 > E and c2 > E, otherwise 3>1>2;
// on any other agent set it honors claims in increasing id order.
Allocation conditional_priority_fixture(const ClaimsProblem& p);

RuleHandle rule_proportional();
RuleHandle rule_cea();
RuleHandle rule_cel();
RuleHandle rule_talmud();
RuleHandle rule_priority(std::vector<int> order);
RuleHandle rule_r_dagger();

// The four classical rules; the common test matrix iterates these.
std::vector<RuleHandle> classical_rules();

struct UnknownName : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "prop", "cea", "cel", "talmud", "priority:<id,id,...>",
// "fixture:r-dagger". Throws UnknownName otherwise.
RuleHandle make_rule(const std::string& name);

}  // namespace claims
