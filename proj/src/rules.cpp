#include "claims/rules.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace claims {

namespace {

Amount solve_cap(const AmountVec& base, const AmountVec& caps,
                 const Amount& target) {
    Amount f0 = 0;
    Amount fmax = 0;
    // Breakpoint -> number of agents satiating there.
    std::map<Amount, int> breakpoints;
    for (std::size_t i = 0; i < base.size(); ++i) {
        f0 += std::min(caps[i], base[i]);
        fmax += caps[i];
        if (base[i] < caps[i])
            breakpoints[caps[i] - base[i]] += 1;
    }
    if (target < f0 || target > fmax)
        throw SolveError("TargetUnreachable");
    if (target == f0)
        return 0;
    Amount prev = 0;
    Amount fprev = f0;
    int active = 0;
    for (const auto& entry : breakpoints)
        active += entry.second;
    for (const auto& [bp, count] : breakpoints) {
        const Amount fb = fprev + Amount(active) * (bp - prev);
        if (fb >= target)
            return prev + (target - fprev) / active;
        prev = bp;
        fprev = fb;
        active -= count;
    }
    // target == fmax and the last breakpoint reached it.
    return prev;
}

Amount solve_loss(const AmountVec& base, const Amount& target) {
    Amount f0 = 0;
    std::map<Amount, int> breakpoints;
    for (const auto& b : base) {
        if (b > 0) {
            f0 += b;
            breakpoints[b] += 1;
        }
    }
    if (target > f0 || target < 0)
        throw SolveError("TargetUnreachable");
    if (target == f0)
        return 0;
    Amount prev = 0;
    Amount fprev = f0;
    int active = static_cast<int>(
        std::accumulate(breakpoints.begin(), breakpoints.end(), 0,
                        [](int acc, const auto& kv) { return acc + kv.second; }));
    for (const auto& [bp, count] : breakpoints) {
        const Amount fb = fprev - Amount(active) * (bp - prev);
        if (fb <= target)
            return prev + (fprev - target) / active;
        prev = bp;
        fprev = fb;
        active -= count;
    }
    return prev;
}

std::vector<std::size_t> order_positions(const std::vector<int>& order,
                                         const ClaimsProblem& p) {
    std::vector<std::size_t> positions;
    positions.reserve(p.size());
    for (int id : order) {
        const auto it = std::find(p.agents.begin(), p.agents.end(), id);
        if (it != p.agents.end())
            positions.push_back(
                static_cast<std::size_t>(it - p.agents.begin()));
    }
    if (positions.size() != p.size())
        throw SolveError("priority order does not cover the agent set");
    return positions;
}

Allocation greedy_fill(const std::vector<std::size_t>& positions,
                       const ClaimsProblem& p) {
    Allocation x;
    x.awards.assign(p.size(), 0);
    Amount remaining = p.endowment;
    for (std::size_t pos : positions) {
        const Amount take = std::min(p.claims[pos], remaining);
        x.awards[pos] = take;
        remaining -= take;
    }
    return x;
}

}  // namespace

Amount solve_monotone_level(LevelKind kind, const AmountVec& base,
                            const AmountVec& caps, const Amount& target) {
    if (kind == LevelKind::Cap)
        return solve_cap(base, caps, target);
    return solve_loss(base, target);
}

Allocation proportional(const ClaimsProblem& p) {
    const Amount total = p.total_claims();
    Allocation x;
    x.awards.reserve(p.size());
    for (const auto& c : p.claims)
        x.awards.push_back(c * p.endowment / total);
    return x;
}

Allocation cea(const ClaimsProblem& p) {
    const AmountVec zeros(p.size(), 0);
    const Amount level =
        solve_monotone_level(LevelKind::Cap, zeros, p.claims, p.endowment);
    Allocation x;
    x.awards.reserve(p.size());
    for (const auto& c : p.claims)
        x.awards.push_back(std::min(c, level));
    return x;
}

Allocation cel(const ClaimsProblem& p) {
    const Amount level =
        solve_monotone_level(LevelKind::Loss, p.claims, {}, p.endowment);
    Allocation x;
    x.awards.reserve(p.size());
    for (const auto& c : p.claims)
        x.awards.push_back(std::max(Amount(0), Amount(c - level)));
    return x;
}

Allocation talmud(const ClaimsProblem& p) {
    const Amount total = p.total_claims();
    AmountVec half;
    half.reserve(p.size());
    for (const auto& c : p.claims)
        half.push_back(c / 2);
    const AmountVec zeros(p.size(), 0);
    Allocation x;
    x.awards.reserve(p.size());
    if (p.endowment * 2 <= total) {
        const Amount level =
            solve_monotone_level(LevelKind::Cap, zeros, half, p.endowment);
        for (const auto& h : half)
            x.awards.push_back(std::min(h, level));
    } else {
        // max{c_i/2, c_i - gamma} = c_i - min{c_i/2, gamma}
        const Amount level = solve_monotone_level(LevelKind::Cap, zeros, half,
                                                  total - p.endowment);
        for (std::size_t i = 0; i < p.size(); ++i)
            x.awards.push_back(p.claims[i] - std::min(half[i], level));
    }
    return x;
}

Allocation priority(const std::vector<int>& order, const ClaimsProblem& p) {
    return greedy_fill(order_positions(order, p), p);
}

Allocation conditional_priority_fixture(const ClaimsProblem& p) {
    if (p.agents == std::vector<int>{1, 2, 3}) {
        if (p.claims[0] > p.endowment && p.claims[1] > p.endowment)
            return priority({1, 3, 2}, p);
        return priority({3, 1, 2}, p);
    }
    std::vector<int> natural = p.agents;
    std::sort(natural.begin(), natural.end());
    return priority(natural, p);
}

RuleHandle rule_proportional() {
    return {"prop", RuleKind::Proportional, {}, proportional};
}

RuleHandle rule_cea() { return {"cea", RuleKind::Cea, {}, cea}; }

RuleHandle rule_cel() { return {"cel", RuleKind::Cel, {}, cel}; }

RuleHandle rule_talmud() { return {"talmud", RuleKind::Talmud, {}, talmud}; }

RuleHandle rule_priority(std::vector<int> order) {
    std::string name = "priority:";
    for (std::size_t i = 0; i < order.size(); ++i)
        name += (i ? "," : "") + std::to_string(order[i]);
    auto eval = [order](const ClaimsProblem& p) { return priority(order, p); };
    return {std::move(name), RuleKind::Priority, std::move(order), eval};
}

RuleHandle rule_r_dagger() {
    return {"fixture:r-dagger", RuleKind::RDagger, {},
            conditional_priority_fixture};
}

std::vector<RuleHandle> classical_rules() {
    return {rule_proportional(), rule_cea(), rule_cel(), rule_talmud()};
}

RuleHandle make_rule(const std::string& name) {
    if (name == "prop")
        return rule_proportional();
    if (name == "cea")
        return rule_cea();
    if (name == "cel")
        return rule_cel();
    if (name == "talmud")
        return rule_talmud();
    if (name == "fixture:r-dagger")
        return rule_r_dagger();
    if (name.rfind("priority:", 0) == 0) {
        std::vector<int> order;
        std::stringstream ss(name.substr(9));
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                order.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw UnknownName("bad priority order: " + name);
            }
        }
        if (order.empty())
            throw UnknownName("empty priority order: " + name);
        return rule_priority(std::move(order));
    }
    throw UnknownName("unknown rule: " + name);
}

}  // namespace claims
