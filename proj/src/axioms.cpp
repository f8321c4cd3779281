#include "claims/axioms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace claims {

namespace {

struct AxiomNameEntry {
    Axiom axiom;
    const char* name;
};

constexpr AxiomNameEntry kAxiomNames[] = {
    {Axiom::EqualTreatment, "equal-treatment"},
    {Axiom::OrderGains, "order-gains"},
    {Axiom::OrderLosses, "order-losses"},
    {Axiom::Anonymity, "anonymity"},
    {Axiom::ScaleInvariance, "scale-invariance"},
    {Axiom::ContinuitySampled, "continuity-sampled"},
    {Axiom::SelfDuality, "self-duality"},
    {Axiom::Securement, "securement"},
    {Axiom::CompositionUp, "composition-up"},
    {Axiom::CompositionDown, "composition-down"},
    {Axiom::ResourceMonotonicity, "resource-monotonicity"},
    {Axiom::ClaimsMonotonicity, "claims-monotonicity"},
    {Axiom::PopulationMonotonicity, "population-monotonicity"},
    {Axiom::Consistency, "consistency"},
    {Axiom::PresentBoundedness, "present-boundedness"},
    {Axiom::BalancedTreatment, "balanced-treatment"},
    {Axiom::NonArbitrariness, "non-arbitrariness"},
};

std::string format_vec(const AmountVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + format_amount(v[i]);
    return out + ")";
}

std::string describe(const HistoricalProblem& hp) {
    std::string out = "c=" + format_vec(hp.problem.claims) +
                      " E=" + format_amount(hp.problem.endowment);
    if (!hp.history.empty()) {
        out += " h={";
        for (std::size_t t = 0; t < hp.history.periods.size(); ++t) {
            const auto& period = hp.history.periods[t];
            out += (t ? ";" : "") + format_vec(period.claims) + "->" +
                   format_vec(period.allocations);
        }
        out += "}";
    }
    return out;
}

using Evaluator = std::function<Allocation(const HistoricalProblem&)>;

HistoricalProblem with_endowment(HistoricalProblem hp, Amount endowment) {
    hp.problem.endowment = std::move(endowment);
    return hp;
}

HistoricalProblem with_claims(HistoricalProblem hp, AmountVec new_claims) {
    hp.problem.claims = std::move(new_claims);
    return hp;
}

HistoricalProblem permuted(const HistoricalProblem& hp,
                           const std::vector<std::size_t>& pi) {
    const std::size_t n = hp.problem.size();
    auto apply = [&](const AmountVec& v) {
        AmountVec out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[pi[i]] = v[i];
        return out;
    };
    HistoricalProblem out = hp;
    out.problem.claims = apply(hp.problem.claims);
    for (std::size_t t = 0; t < hp.history.periods.size(); ++t) {
        out.history.periods[t].claims = apply(hp.history.periods[t].claims);
        out.history.periods[t].allocations =
            apply(hp.history.periods[t].allocations);
    }
    return out;
}

HistoricalProblem scaled(const HistoricalProblem& hp, const Amount& rho) {
    auto apply = [&](AmountVec v) {
        for (auto& x : v)
            x *= rho;
        return v;
    };
    HistoricalProblem out = hp;
    out.problem.claims = apply(hp.problem.claims);
    out.problem.endowment = hp.problem.endowment * rho;
    for (auto& period : out.history.periods) {
        period.claims = apply(period.claims);
        period.allocations = apply(period.allocations);
    }
    return out;
}

// Componentwise restriction of the problem and every history period to the
// given agent positions.
HistoricalProblem restricted(const HistoricalProblem& hp,
                             const std::vector<std::size_t>& positions,
                             Amount endowment) {
    HistoricalProblem out;
    for (std::size_t pos : positions) {
        out.problem.agents.push_back(hp.problem.agents[pos]);
        out.problem.claims.push_back(hp.problem.claims[pos]);
    }
    out.problem.endowment = std::move(endowment);
    for (const auto& period : hp.history.periods) {
        PeriodRecord r;
        for (std::size_t pos : positions) {
            r.claims.push_back(period.claims[pos]);
            r.allocations.push_back(period.allocations[pos]);
        }
        out.history.periods.push_back(std::move(r));
    }
    return out;
}

CheckResult violated(const AxiomInstance& instance, std::string detail) {
    CheckResult result;
    result.holds = false;
    result.detail = std::move(detail);
    result.witness = instance;
    return result;
}

CheckResult check_pairwise(Axiom axiom, const Evaluator& eval,
                           const AxiomInstance& instance) {
    const HistoricalProblem& hp = instance.hp;
    const HistoryAggregates agg = aggregates(hp);
    const Allocation x = eval(hp);
    const auto& c = hp.problem.claims;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i == j)
                continue;
            const bool hyp =
                axiom == Axiom::EqualTreatment
                    ? (c[i] == c[j] && agg.delta_claims[i] == agg.delta_claims[j] &&
                       agg.delta_awards[i] == agg.delta_awards[j])
                    : (c[i] >= c[j] && agg.delta_claims[i] >= agg.delta_claims[j] &&
                       agg.delta_awards[i] <= agg.delta_awards[j]);
            if (!hyp)
                continue;
            std::ostringstream oss;
            switch (axiom) {
                case Axiom::EqualTreatment:
                    if (x.awards[i] != x.awards[j]) {
                        oss << "equal-treatment: S_" << i << "="
                            << format_amount(x.awards[i]) << " != S_" << j << "="
                            << format_amount(x.awards[j]) << " at "
                            << describe(hp);
                        return violated(instance, oss.str());
                    }
                    break;
                case Axiom::OrderGains:
                    if (x.awards[i] < x.awards[j]) {
                        oss << "order-gains: S_" << i << "="
                            << format_amount(x.awards[i]) << " < S_" << j << "="
                            << format_amount(x.awards[j]) << " at "
                            << describe(hp);
                        return violated(instance, oss.str());
                    }
                    break;
                case Axiom::OrderLosses: {
                    // Losses are measured against the history-adjusted claims:
                    // with equal present claims and unequal shortfalls the
                    // present-claim reading would contradict order-gains.
                    const auto& ct = agg.adjusted_claims;
                    if (ct[i] - x.awards[i] < ct[j] - x.awards[j]) {
                        oss << "order-losses: loss_" << i << "="
                            << format_amount(ct[i] - x.awards[i]) << " < loss_"
                            << j << "=" << format_amount(ct[j] - x.awards[j])
                            << " at " << describe(hp);
                        return violated(instance, oss.str());
                    }
                    break;
                }
                default:
                    break;
            }
        }
    }
    return {};
}

CheckResult check_axiom_impl(Axiom axiom, const Evaluator& eval,
                             const AxiomInstance& instance) {
    const HistoricalProblem& hp = instance.hp;
    if (auto err = validate_historical(hp))
        throw ValidationFailure(*err);
    const auto& c = hp.problem.claims;
    const Amount& E = hp.problem.endowment;
    const Amount total = hp.problem.total_claims();
    const std::size_t n = hp.problem.size();

    switch (axiom) {
        case Axiom::EqualTreatment:
        case Axiom::OrderGains:
        case Axiom::OrderLosses:
            return check_pairwise(axiom, eval, instance);

        case Axiom::Anonymity: {
            if (instance.permutation.size() != n)
                throw SignatureMismatch("anonymity needs a permutation");
            const Allocation x = eval(hp);
            const Allocation y = eval(permuted(hp, instance.permutation));
            for (std::size_t i = 0; i < n; ++i) {
                if (y.awards[instance.permutation[i]] != x.awards[i]) {
                    std::ostringstream oss;
                    oss << "anonymity: permuted award "
                        << format_amount(y.awards[instance.permutation[i]])
                        << " != " << format_amount(x.awards[i]) << " (agent "
                        << i << ") at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::ScaleInvariance: {
            if (!instance.scale_factor || *instance.scale_factor <= 0)
                throw SignatureMismatch(
                    "scale-invariance needs a positive factor");
            const Amount& rho = *instance.scale_factor;
            const Allocation x = eval(hp);
            const Allocation y = eval(scaled(hp, rho));
            for (std::size_t i = 0; i < n; ++i) {
                if (y.awards[i] != rho * x.awards[i]) {
                    std::ostringstream oss;
                    oss << "scale-invariance: scaled award "
                        << format_amount(y.awards[i]) << " != rho*"
                        << format_amount(x.awards[i]) << " (agent " << i
                        << ", rho=" << format_amount(rho) << ") at "
                        << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::ContinuitySampled: {
            // Convergence probe along the endowment axis: perturbations are
            // halved and the output deviation must not grow, ending well
            // below the initial deviation. A sampled check, not a proof.
            Amount eps = (total - E) / 2;
            int direction = 1;
            if (eps == 0) {
                eps = E / 2;
                direction = -1;
            }
            if (eps == 0)
                return {};
            const Allocation base = eval(hp);
            Amount prev_dev = -1;
            Amount first_dev = 0;
            Amount last_dev = 0;
            for (int k = 0; k < 6; ++k) {
                const Allocation probe =
                    eval(with_endowment(hp, E + Amount(direction) * eps));
                Amount dev = 0;
                for (std::size_t i = 0; i < n; ++i)
                    dev = std::max(dev, Amount(abs(Amount(probe.awards[i] - base.awards[i]))));
                if (k == 0)
                    first_dev = dev;
                if (prev_dev >= 0 && dev > prev_dev) {
                    std::ostringstream oss;
                    oss << "continuity-sampled: deviation grew from "
                        << format_amount(prev_dev) << " to "
                        << format_amount(dev) << " as the perturbation shrank, at "
                        << describe(hp);
                    return violated(instance, oss.str());
                }
                prev_dev = dev;
                last_dev = dev;
                eps /= 2;
            }
            if (first_dev > 0 && last_dev * 4 > first_dev) {
                std::ostringstream oss;
                oss << "continuity-sampled: deviation stuck at "
                    << format_amount(last_dev) << " (initial "
                    << format_amount(first_dev) << ") at " << describe(hp);
                return violated(instance, oss.str());
            }
            return {};
        }

        case Axiom::SelfDuality: {
            const Allocation x = eval(hp);
            const Allocation y = eval(with_endowment(hp, total - E));
            for (std::size_t i = 0; i < n; ++i) {
                if (x.awards[i] != c[i] - y.awards[i]) {
                    std::ostringstream oss;
                    oss << "self-duality: S_" << i << "="
                        << format_amount(x.awards[i]) << " != c_i - dual = "
                        << format_amount(c[i] - y.awards[i]) << " at "
                        << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::Securement: {
            const Allocation x = eval(hp);
            for (std::size_t i = 0; i < n; ++i) {
                const Amount bound = std::min(c[i], E) / Amount(n);
                if (x.awards[i] < bound) {
                    std::ostringstream oss;
                    oss << "securement: S_" << i << "="
                        << format_amount(x.awards[i]) << " < min{c_i,E}/n = "
                        << format_amount(bound) << " at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::CompositionUp: {
            if (!instance.endowment_part)
                throw SignatureMismatch("composition-up needs E1");
            const Amount& e1 = *instance.endowment_part;
            if (e1 <= 0 || e1 >= E)
                throw SignatureMismatch("composition-up needs 0 < E1 < E");
            const Allocation whole = eval(hp);
            const Allocation first = eval(with_endowment(hp, e1));
            AmountVec residual(n);
            for (std::size_t i = 0; i < n; ++i)
                residual[i] = c[i] - first.awards[i];
            const Allocation second =
                eval(with_endowment(with_claims(hp, residual), E - e1));
            for (std::size_t i = 0; i < n; ++i) {
                if (whole.awards[i] != first.awards[i] + second.awards[i]) {
                    std::ostringstream oss;
                    oss << "composition-up: S_" << i << "="
                        << format_amount(whole.awards[i]) << " != "
                        << format_amount(first.awards[i]) << "+"
                        << format_amount(second.awards[i]) << " (E1="
                        << format_amount(e1) << ") at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::CompositionDown: {
            if (!instance.larger_endowment)
                throw SignatureMismatch("composition-down needs E'");
            const Amount& e_prime = *instance.larger_endowment;
            if (e_prime <= E || e_prime > total)
                throw SignatureMismatch(
                    "composition-down needs E < E' <= total claims");
            const Allocation direct = eval(hp);
            const Allocation generous = eval(with_endowment(hp, e_prime));
            const Allocation two_step =
                eval(with_claims(hp, generous.awards));
            for (std::size_t i = 0; i < n; ++i) {
                if (direct.awards[i] != two_step.awards[i]) {
                    std::ostringstream oss;
                    oss << "composition-down: S_" << i << "="
                        << format_amount(direct.awards[i]) << " != two-step "
                        << format_amount(two_step.awards[i]) << " (E'="
                        << format_amount(e_prime) << ") at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::ResourceMonotonicity: {
            if (!instance.larger_endowment)
                throw SignatureMismatch("resource-monotonicity needs E'");
            const Amount& e_prime = *instance.larger_endowment;
            if (e_prime <= E || e_prime > total)
                throw SignatureMismatch(
                    "resource-monotonicity needs E < E' <= total claims");
            const Allocation x = eval(hp);
            const Allocation y = eval(with_endowment(hp, e_prime));
            for (std::size_t i = 0; i < n; ++i) {
                if (y.awards[i] < x.awards[i]) {
                    std::ostringstream oss;
                    oss << "resource-monotonicity: S_" << i << " fell from "
                        << format_amount(x.awards[i]) << " to "
                        << format_amount(y.awards[i]) << " as E rose to "
                        << format_amount(e_prime) << " at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::ClaimsMonotonicity: {
            if (!instance.claim_increase)
                throw SignatureMismatch(
                    "claims-monotonicity needs a claim increase");
            const auto& [agent, new_claim] = *instance.claim_increase;
            if (agent >= n || new_claim <= c[agent])
                throw SignatureMismatch(
                    "claims-monotonicity needs c'_i > c_i");
            AmountVec raised = c;
            raised[agent] = new_claim;
            const Allocation x = eval(hp);
            const Allocation y = eval(with_claims(hp, raised));
            if (y.awards[agent] < x.awards[agent]) {
                std::ostringstream oss;
                oss << "claims-monotonicity: S_" << agent << " fell from "
                    << format_amount(x.awards[agent]) << " to "
                    << format_amount(y.awards[agent]) << " as c_i rose to "
                    << format_amount(new_claim) << " at " << describe(hp);
                return violated(instance, oss.str());
            }
            return {};
        }

        case Axiom::PopulationMonotonicity: {
            if (!instance.enlarged)
                throw SignatureMismatch(
                    "population-monotonicity needs an enlarged problem");
            const HistoricalProblem& big = *instance.enlarged;
            if (auto err = validate_historical(big))
                throw ValidationFailure(*err);
            const Allocation x = eval(hp);
            const Allocation y = eval(big);
            for (std::size_t i = 0; i < n; ++i) {
                const auto it = std::find(big.problem.agents.begin(),
                                          big.problem.agents.end(),
                                          hp.problem.agents[i]);
                if (it == big.problem.agents.end())
                    throw SignatureMismatch(
                        "enlarged problem must contain every original agent");
                const std::size_t pos =
                    static_cast<std::size_t>(it - big.problem.agents.begin());
                if (y.awards[pos] > x.awards[i]) {
                    std::ostringstream oss;
                    oss << "population-monotonicity: S_" << i << " rose from "
                        << format_amount(x.awards[i]) << " to "
                        << format_amount(y.awards[pos])
                        << " after enlargement, at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        case Axiom::Consistency: {
            if (instance.subgroup.empty() ||
                instance.subgroup.size() >= n)
                throw SignatureMismatch(
                    "consistency needs a proper nonempty subgroup");
            std::vector<std::size_t> positions;
            for (int id : instance.subgroup) {
                const auto it = std::find(hp.problem.agents.begin(),
                                          hp.problem.agents.end(), id);
                if (it == hp.problem.agents.end())
                    throw SignatureMismatch("subgroup agent not in problem");
                positions.push_back(
                    static_cast<std::size_t>(it - hp.problem.agents.begin()));
            }
            const Allocation x = eval(hp);
            Amount e_m = 0;
            Amount subgroup_claims = 0;
            for (std::size_t pos : positions) {
                e_m += x.awards[pos];
                subgroup_claims += hp.problem.claims[pos];
            }
            if (subgroup_claims == 0)
                return {};  // restricted problem degenerate, trivially holds
            const Allocation y = eval(restricted(hp, positions, e_m));
            for (std::size_t k = 0; k < positions.size(); ++k) {
                if (y.awards[k] != x.awards[positions[k]]) {
                    std::ostringstream oss;
                    oss << "consistency: agent " << instance.subgroup[k]
                        << " gets " << format_amount(x.awards[positions[k]])
                        << " in N but " << format_amount(y.awards[k])
                        << " in the subgroup (E_M=" << format_amount(e_m)
                        << ") at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }

        default:
            throw SignatureMismatch(std::string(axiom_name(axiom)) +
                                    " is an operator axiom; use "
                                    "check_operator_axiom");
    }
}

}  // namespace

const char* axiom_name(Axiom a) {
    for (const auto& entry : kAxiomNames)
        if (entry.axiom == a)
            return entry.name;
    return "unknown";
}

Axiom axiom_from_name(const std::string& name) {
    for (const auto& entry : kAxiomNames)
        if (name == entry.name)
            return entry.axiom;
    throw UnknownName("unknown axiom: " + name);
}

std::vector<Axiom> all_axioms() {
    std::vector<Axiom> out;
    for (const auto& entry : kAxiomNames)
        out.push_back(entry.axiom);
    return out;
}

CheckResult check_standard(Axiom axiom, const RuleHandle& rule,
                           const AxiomInstance& instance) {
    AxiomInstance stripped = instance;
    stripped.hp.history.periods.clear();
    if (stripped.enlarged)
        stripped.enlarged->history.periods.clear();
    return check_axiom_impl(
        axiom,
        [&rule](const HistoricalProblem& hp) { return rule(hp.problem); },
        stripped);
}

CheckResult check_general(Axiom axiom, const RuleHandle& rule,
                          const OperatorHandle& op,
                          const AxiomInstance& instance) {
    if (axiom == Axiom::PresentBoundedness ||
        axiom == Axiom::BalancedTreatment ||
        axiom == Axiom::NonArbitrariness)
        return check_operator_axiom(axiom, rule, op, instance.hp);
    if (axiom == Axiom::Securement) {
        // The general check tests what the operator adds: when the base rule
        // already breaks securement at the adjusted problem, the instance
        // lies outside the axiom's hypothesis and holds vacuously.
        if (auto err = validate_historical(instance.hp))
            throw ValidationFailure(*err);
        const HistoryAggregates agg = aggregates(instance.hp);
        ClaimsProblem adjusted{instance.hp.problem.agents,
                               agg.adjusted_claims,
                               instance.hp.problem.endowment};
        const AmountVec tentative = rule(adjusted).awards;
        const Amount members = Amount(static_cast<long>(adjusted.size()));
        for (std::size_t i = 0; i < adjusted.size(); ++i)
            if (tentative[i] * members <
                std::min(adjusted.claims[i], adjusted.endowment))
                return {};
    }
    return check_axiom_impl(
        axiom,
        [&](const HistoricalProblem& hp) { return op(rule, hp); },
        instance);
}

CheckResult check_operator_axiom(Axiom axiom, const RuleHandle& rule,
                                 const OperatorHandle& op,
                                 const HistoricalProblem& hp) {
    if (auto err = validate_historical(hp))
        throw ValidationFailure(*err);
    const auto& c = hp.problem.claims;
    const std::size_t n = hp.problem.size();
    const HistoryAggregates agg = aggregates(hp);
    ClaimsProblem adjusted{hp.problem.agents, agg.adjusted_claims,
                           hp.problem.endowment};
    const AmountVec tentative = rule(adjusted).awards;
    const AmountVec awards = op(rule, hp).awards;
    AxiomInstance instance;
    instance.hp = hp;

    switch (axiom) {
        case Axiom::PresentBoundedness: {
            for (std::size_t i = 0; i < n; ++i) {
                if (tentative[i] >= c[i] && awards[i] != c[i]) {
                    std::ostringstream oss;
                    oss << "present-boundedness: tentative_" << i << "="
                        << format_amount(tentative[i]) << " >= c_i="
                        << format_amount(c[i]) << " but award is "
                        << format_amount(awards[i]) << " at " << describe(hp);
                    return violated(instance, oss.str());
                }
            }
            return {};
        }
        case Axiom::BalancedTreatment: {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (awards[i] < c[i] && awards[j] < c[j] &&
                        awards[i] - tentative[i] != awards[j] - tentative[j]) {
                        std::ostringstream oss;
                        oss << "balanced-treatment: margins "
                            << format_amount(awards[i] - tentative[i])
                            << " != "
                            << format_amount(awards[j] - tentative[j])
                            << " for rationed agents " << i << "," << j
                            << " at " << describe(hp);
                        return violated(instance, oss.str());
                    }
                }
            }
            return {};
        }
        case Axiom::NonArbitrariness: {
            for (std::size_t i = 0; i < n; ++i) {
                if (!(awards[i] == c[i] && tentative[i] < c[i]))
                    continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (awards[j] < c[j] &&
                        awards[i] - tentative[i] > awards[j] - tentative[j]) {
                        std::ostringstream oss;
                        oss << "non-arbitrariness: honored agent " << i
                            << " margin "
                            << format_amount(awards[i] - tentative[i])
                            << " > rationed agent " << j << " margin "
                            << format_amount(awards[j] - tentative[j])
                            << " at " << describe(hp);
                        return violated(instance, oss.str());
                    }
                }
            }
            return {};
        }
        default:
            throw SignatureMismatch(std::string(axiom_name(axiom)) +
                                    " is not an operator axiom");
    }
}

}  // namespace claims
