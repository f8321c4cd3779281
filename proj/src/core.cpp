#include "claims/core.hpp"

#include <unordered_set>

namespace claims {

const char* validation_code_name(ValidationCode code) {
    switch (code) {
        case ValidationCode::NegativeClaim: return "NegativeClaim";
        case ValidationCode::NegativeEndowment: return "NegativeEndowment";
        case ValidationCode::InfeasibleEndowment: return "InfeasibleEndowment";
        case ValidationCode::ZeroTotalClaims: return "ZeroTotalClaims";
        case ValidationCode::DuplicateAgent: return "DuplicateAgent";
        case ValidationCode::AgentCountMismatch: return "AgentCountMismatch";
        case ValidationCode::BoundednessViolated: return "BoundednessViolated";
        case ValidationCode::BalanceViolated: return "BalanceViolated";
        case ValidationCode::HistoryBoundednessViolated:
            return "HistoryBoundednessViolated";
    }
    return "Unknown";
}

namespace {

ValidationError make_error(ValidationCode code, std::string message,
                           std::size_t agent = 0, std::size_t period = 0) {
    return ValidationError{code, std::move(message), agent, period};
}

}  // namespace

std::optional<ValidationError> validate_problem(const ClaimsProblem& p) {
    if (p.claims.size() != p.agents.size())
        return make_error(ValidationCode::AgentCountMismatch,
                          "claims vector length does not match agent list");
    std::unordered_set<int> seen;
    for (std::size_t i = 0; i < p.agents.size(); ++i) {
        if (p.agents[i] <= 0 || !seen.insert(p.agents[i]).second)
            return make_error(ValidationCode::DuplicateAgent,
                              "agent ids must be distinct positive integers", i);
    }
    for (std::size_t i = 0; i < p.claims.size(); ++i) {
        if (p.claims[i] < 0)
            return make_error(ValidationCode::NegativeClaim,
                              "claim " + std::to_string(i) + " is negative", i);
    }
    if (p.endowment < 0)
        return make_error(ValidationCode::NegativeEndowment,
                          "endowment is negative");
    const Amount total = p.total_claims();
    if (total == 0)
        return make_error(ValidationCode::ZeroTotalClaims,
                          "total claims must be positive");
    if (total < p.endowment)
        return make_error(ValidationCode::InfeasibleEndowment,
                          "endowment exceeds total claims");
    return std::nullopt;
}

std::optional<ValidationError> validate_allocation(const ClaimsProblem& p,
                                                   const Allocation& x) {
    if (x.awards.size() != p.size())
        return make_error(ValidationCode::AgentCountMismatch,
                          "award vector length does not match agent list");
    for (std::size_t i = 0; i < x.awards.size(); ++i) {
        if (x.awards[i] < 0 || x.awards[i] > p.claims[i])
            return make_error(ValidationCode::BoundednessViolated,
                              "award " + std::to_string(i) +
                                  " outside [0, claim]",
                              i);
    }
    if (sum(x.awards) != p.endowment)
        return make_error(ValidationCode::BalanceViolated,
                          "awards sum to " + format_amount(sum(x.awards)) +
                              ", endowment is " + format_amount(p.endowment));
    return std::nullopt;
}

std::optional<ValidationError> validate_historical(const HistoricalProblem& hp) {
    if (auto err = validate_problem(hp.problem))
        return err;
    const std::size_t n = hp.problem.size();
    for (std::size_t t = 0; t < hp.history.periods.size(); ++t) {
        const auto& period = hp.history.periods[t];
        if (period.claims.size() != n || period.allocations.size() != n)
            return make_error(ValidationCode::AgentCountMismatch,
                              "history period " + std::to_string(t) +
                                  " has wrong agent count",
                              0, t);
        for (std::size_t i = 0; i < n; ++i) {
            if (period.allocations[i] < 0 ||
                period.allocations[i] > period.claims[i])
                return make_error(ValidationCode::HistoryBoundednessViolated,
                                  "period " + std::to_string(t) + ", agent " +
                                      std::to_string(i) +
                                      ": past award outside [0, claim]",
                                  i, t);
        }
    }
    return std::nullopt;
}

ValidationFailure::ValidationFailure(ValidationError e)
    : std::runtime_error(std::string(validation_code_name(e.code)) + ": " +
                         e.message),
      error(std::move(e)) {}

void require_valid(const ClaimsProblem& p) {
    if (auto err = validate_problem(p))
        throw ValidationFailure(*err);
}

void require_valid(const HistoricalProblem& hp) {
    if (auto err = validate_historical(hp))
        throw ValidationFailure(*err);
}

HistoryAggregates aggregates(const HistoricalProblem& hp) {
    const std::size_t n = hp.problem.size();
    HistoryAggregates agg;
    agg.delta_claims.assign(n, 0);
    agg.delta_awards.assign(n, 0);
    for (const auto& period : hp.history.periods) {
        for (std::size_t i = 0; i < n; ++i) {
            agg.delta_claims[i] += period.claims[i];
            agg.delta_awards[i] += period.allocations[i];
        }
    }
    agg.delta.resize(n);
    agg.adjusted_claims.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        agg.delta[i] = agg.delta_claims[i] - agg.delta_awards[i];
        agg.adjusted_claims[i] = hp.problem.claims[i] + agg.delta[i];
    }
    return agg;
}

}  // namespace claims
