#pragma once

#include "claims/historical.hpp"

#include <optional>

namespace claims {

// Polyline in award space traced as the endowment sweeps from 0 to the total
// claim. The endowment at a vertex is the sum of its components.
struct AwardPath {
    AmountVec claims;
    std::vector<AmountVec> vertices;
};

struct ExactModeUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// samples == nullopt requests exact mode: the true kink vertices of the
// piecewise-linear path. Exact mode covers the four classical rules and
// fixed-order priority rules; other rules must be sampled.
AwardPath trace_standard(const RuleHandle& rule, const AmountVec& claims,
                         std::optional<int> samples = std::nullopt);

// Path of the historically induced rule for the present claims; the base
// rule's kinks at the adjusted claims are merged with the satiation kinks of
// the clamp.
AwardPath trace_historical(const RuleHandle& rule, const AmountVec& claims,
                           const History& history,
                           std::optional<int> samples = std::nullopt);

}  // namespace claims
