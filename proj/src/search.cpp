#include "claims/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace claims {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 over (seed, trial) so trials are independent of ordering.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Claims with denominators <= 12 keep the exact arithmetic fast and the
// witnesses readable.
Amount rand_claim(std::mt19937_64& rng) {
    return Amount(rand_int(rng, 0, 24), rand_int(rng, 1, 12));
}

// Uniform rational fraction of `whole` over a coarse grid.
Amount rand_fraction_of(std::mt19937_64& rng, const Amount& whole) {
    const int m = rand_int(rng, 1, 16);
    const int k = rand_int(rng, 0, m);
    return whole * k / m;
}

HistoricalProblem random_problem(std::mt19937_64& rng, bool with_history) {
    HistoricalProblem hp;
    const int n = rand_int(rng, 2, 6);
    for (int i = 0; i < n; ++i) {
        hp.problem.agents.push_back(i + 1);
        hp.problem.claims.push_back(rand_claim(rng));
    }
    if (sum(hp.problem.claims) == 0)
        hp.problem.claims[0] = 1;
    hp.problem.endowment = rand_fraction_of(rng, sum(hp.problem.claims));
    if (with_history) {
        const int periods = rand_int(rng, 0, 3);
        for (int t = 0; t < periods; ++t) {
            PeriodRecord record;
            for (int i = 0; i < n; ++i) {
                record.claims.push_back(rand_claim(rng));
                record.allocations.push_back(
                    rand_fraction_of(rng, record.claims.back()));
            }
            hp.history.periods.push_back(std::move(record));
        }
    }
    return hp;
}

bool is_operator_axiom(Axiom axiom) {
    return axiom == Axiom::PresentBoundedness ||
           axiom == Axiom::BalancedTreatment ||
           axiom == Axiom::NonArbitrariness;
}

CheckResult run_trial(Axiom axiom, const RuleHandle& rule,
                      const OperatorHandle* op, std::uint64_t seed,
                      long trial) {
    const AxiomInstance instance = random_instance(axiom, rule, op, seed, trial);
    if (op == nullptr)
        return check_standard(axiom, rule, instance);
    if (is_operator_axiom(axiom))
        return check_operator_axiom(axiom, rule, *op, instance.hp);
    return check_general(axiom, rule, *op, instance);
}

}  // namespace

AxiomInstance random_instance(Axiom axiom, const RuleHandle& rule,
                              const OperatorHandle* op, std::uint64_t seed,
                              long trial) {
    (void)rule;
    std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(trial)));
    AxiomInstance instance;
    instance.hp = random_problem(rng, op != nullptr);
    auto& hp = instance.hp;
    const std::size_t n = hp.problem.size();
    const Amount total = hp.problem.total_claims();

    switch (axiom) {
        case Axiom::Anonymity: {
            instance.permutation.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                instance.permutation[i] = i;
            std::shuffle(instance.permutation.begin(),
                         instance.permutation.end(), rng);
            break;
        }
        case Axiom::ScaleInvariance:
            instance.scale_factor =
                Amount(rand_int(rng, 1, 12), rand_int(rng, 1, 12));
            break;
        case Axiom::CompositionUp: {
            if (hp.problem.endowment == 0)
                hp.problem.endowment = total / 2;
            const int m = rand_int(rng, 2, 16);
            const int k = rand_int(rng, 1, m - 1);
            instance.endowment_part = hp.problem.endowment * k / m;
            break;
        }
        case Axiom::CompositionDown:
        case Axiom::ResourceMonotonicity: {
            if (hp.problem.endowment == total)
                hp.problem.endowment = total / 2;
            const int m = rand_int(rng, 1, 16);
            const int k = rand_int(rng, 1, m);
            instance.larger_endowment =
                hp.problem.endowment +
                (total - hp.problem.endowment) * k / m;
            break;
        }
        case Axiom::ClaimsMonotonicity: {
            const std::size_t agent =
                static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(n) - 1));
            const Amount bump(rand_int(rng, 1, 24), rand_int(rng, 1, 12));
            instance.claim_increase = {agent, hp.problem.claims[agent] + bump};
            break;
        }
        case Axiom::PopulationMonotonicity: {
            HistoricalProblem big = hp;
            const int extra = rand_int(rng, 1, 2);
            for (int j = 0; j < extra; ++j) {
                big.problem.agents.push_back(static_cast<int>(n) + 1 + j);
                big.problem.claims.push_back(rand_claim(rng));
                for (auto& period : big.history.periods) {
                    period.claims.push_back(rand_claim(rng));
                    period.allocations.push_back(
                        rand_fraction_of(rng, period.claims.back()));
                }
            }
            instance.enlarged = std::move(big);
            break;
        }
        case Axiom::Consistency: {
            // Random proper nonempty subgroup with positive total claim.
            for (int attempt = 0; attempt < 32 && instance.subgroup.empty();
                 ++attempt) {
                std::vector<int> group;
                Amount group_claims = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (rand_int(rng, 0, 1)) {
                        group.push_back(hp.problem.agents[i]);
                        group_claims += hp.problem.claims[i];
                    }
                }
                if (!group.empty() && group.size() < n && group_claims > 0)
                    instance.subgroup = std::move(group);
            }
            if (instance.subgroup.empty()) {
                // Fall back to the largest-claim singleton.
                std::size_t best = 0;
                for (std::size_t i = 1; i < n; ++i)
                    if (hp.problem.claims[i] > hp.problem.claims[best])
                        best = i;
                instance.subgroup = {hp.problem.agents[best]};
            }
            break;
        }
        default:
            break;
    }
    return instance;
}

CheckResult search_counterexample_serial(Axiom axiom, const RuleHandle& rule,
                                         const OperatorHandle* op, long budget,
                                         std::uint64_t seed) {
    for (long t = 0; t < budget; ++t) {
        CheckResult result = run_trial(axiom, rule, op, seed, t);
        if (!result.holds) {
            result.trial = t;
            return result;
        }
    }
    return {};
}

CheckResult search_counterexample(Axiom axiom, const RuleHandle& rule,
                                  const OperatorHandle* op, long budget,
                                  std::uint64_t seed) {
#ifdef _OPENMP
    std::atomic<long> best(budget);
#pragma omp parallel for schedule(dynamic, 32)
    for (long t = 0; t < budget; ++t) {
        if (t >= best.load(std::memory_order_relaxed))
            continue;
        const CheckResult result = run_trial(axiom, rule, op, seed, t);
        if (!result.holds) {
            long current = best.load(std::memory_order_relaxed);
            while (t < current &&
                   !best.compare_exchange_weak(current, t)) {
            }
        }
    }
    if (best.load() < budget) {
        CheckResult result = run_trial(axiom, rule, op, seed, best.load());
        result.trial = best.load();
        return result;
    }
    return {};
#else
    return search_counterexample_serial(axiom, rule, op, budget, seed);
#endif
}

}  // namespace claims
