#pragma once

#include "claims/amount.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace claims {

// A claims problem (N, c, E): agents hold nonnegative claims over an
// endowment that does not exceed the total claim.
struct ClaimsProblem {
    std::vector<int> agents;  // distinct positive identifiers, order fixed
    AmountVec claims;         // aligned with agents
    Amount endowment;

    std::size_t size() const { return agents.size(); }
    Amount total_claims() const { return sum(claims); }
};

// An award vector aligned with a problem's agent list.
struct Allocation {
    AmountVec awards;

    bool operator==(const Allocation&) const = default;
};

// One past period: the claims the agents held and what they were awarded.
// The period endowment is derived as the sum of the allocations.
struct PeriodRecord {
    AmountVec claims;
    AmountVec allocations;
};

struct History {
    std::vector<PeriodRecord> periods;

    bool empty() const { return periods.empty(); }
};

struct HistoricalProblem {
    ClaimsProblem problem;
    History history;
};

// Per-agent aggregates over the history: total past claims, total past
// awards, the shortfall delta = delta_claims - delta_awards, and the
// history-adjusted claims c + delta.
struct HistoryAggregates {
    AmountVec delta_claims;
    AmountVec delta_awards;
    AmountVec delta;
    AmountVec adjusted_claims;
};

enum class ValidationCode {
    NegativeClaim,
    NegativeEndowment,
    InfeasibleEndowment,
    ZeroTotalClaims,
    DuplicateAgent,
    AgentCountMismatch,
    BoundednessViolated,
    BalanceViolated,
    HistoryBoundednessViolated,
};

struct ValidationError {
    ValidationCode code;
    std::string message;
    std::size_t agent_index = 0;   // offending agent position, when applicable
    std::size_t period_index = 0;  // offending history period, when applicable
};

const char* validation_code_name(ValidationCode code);

std::optional<ValidationError> validate_problem(const ClaimsProblem& p);
std::optional<ValidationError> validate_allocation(const ClaimsProblem& p,
                                                   const Allocation& x);
std::optional<ValidationError> validate_historical(const HistoricalProblem& hp);

// Throwing wrappers for call sites that treat invalid input as a bug.
struct ValidationFailure : std::runtime_error {
    ValidationError error;
    explicit ValidationFailure(ValidationError e);
};

void require_valid(const ClaimsProblem& p);
void require_valid(const HistoricalProblem& hp);

HistoryAggregates aggregates(const HistoricalProblem& hp);

}  // namespace claims
