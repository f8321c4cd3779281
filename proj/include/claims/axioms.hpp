#pragma once

#include "claims/historical.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace claims {

enum class Axiom {
    EqualTreatment,
    OrderGains,
    OrderLosses,
    Anonymity,
    ScaleInvariance,
    ContinuitySampled,
    SelfDuality,
    Securement,
    CompositionUp,
    CompositionDown,
    ResourceMonotonicity,
    ClaimsMonotonicity,
    PopulationMonotonicity,
    Consistency,
    PresentBoundedness,
    BalancedTreatment,
    NonArbitrariness,
};

const char* axiom_name(Axiom a);
Axiom axiom_from_name(const std::string& name);  // throws UnknownName
std::vector<Axiom> all_axioms();

struct SignatureMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One concrete instantiation of an axiom's quantifiers. Only the fields the
// axiom's signature calls for need to be set; the checkers throw
// SignatureMismatch when a required field is missing.
struct AxiomInstance {
    HistoricalProblem hp;
    std::optional<Amount> endowment_part;    // E1 for composition up
    std::optional<Amount> larger_endowment;  // E' for composition down /
                                             // resource monotonicity
    std::vector<int> subgroup;               // agent ids, consistency
    std::vector<std::size_t> permutation;    // position i -> pi(i), anonymity
    std::optional<Amount> scale_factor;
    std::optional<std::pair<std::size_t, Amount>> claim_increase;
    std::optional<HistoricalProblem> enlarged;  // population monotonicity
};

struct CheckResult {
    bool holds = true;
    std::string detail;  // both sides of the violated (in)equality
    std::optional<AxiomInstance> witness;
    long trial = -1;  // trial index when found by the search harness
};

// Standard axioms evaluated on the present problem; history is ignored.
CheckResult check_standard(Axiom axiom, const RuleHandle& rule,
                           const AxiomInstance& instance);

// General axioms evaluated on op(rule, .); hypotheses and transformations
// cover the history (permutation, scaling, restriction act per period).
CheckResult check_general(Axiom axiom, const RuleHandle& rule,
                          const OperatorHandle& op,
                          const AxiomInstance& instance);

// Operator-level axioms: present boundedness, balanced treatment,
// non-arbitrariness, judged against the tentative allocation at the
// history-adjusted claims.
CheckResult check_operator_axiom(Axiom axiom, const RuleHandle& rule,
                                 const OperatorHandle& op,
                                 const HistoricalProblem& hp);

// Randomized counterexample search. Pass op = nullptr to test the standard
// axiom on the bare rule. Deterministic for a given seed; the parallel
// variant shards trials across OpenMP threads and reports the violation with
// the smallest trial index, matching the serial reference.
CheckResult search_counterexample(Axiom axiom, const RuleHandle& rule,
                                  const OperatorHandle* op, long budget,
                                  std::uint64_t seed);
CheckResult search_counterexample_serial(Axiom axiom, const RuleHandle& rule,
                                         const OperatorHandle* op, long budget,
                                         std::uint64_t seed);

// Generates the trial instance the search harness would use; exposed so the
// serial/parallel agreement and replay tests can reconstruct trials.
AxiomInstance random_instance(Axiom axiom, const RuleHandle& rule,
                              const OperatorHandle* op, std::uint64_t seed,
                              long trial);

struct FixtureResult {
    std::string name;
    // label -> (expected, computed), all exact fraction strings
    std::vector<std::tuple<std::string, std::string, std::string>> values;
    bool match = true;                // every computed value equals expected
    bool violation_confirmed = true;  // the axiom's checker reports violated
};

// Replays the curated counterexample suite (six non-preserved axioms plus the
// two independence operators) against frozen expected fractions.
std::vector<FixtureResult> run_curated_fixtures();

}  // namespace claims
