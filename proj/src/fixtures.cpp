#include "claims/axioms.hpp"

#include <initializer_list>

namespace claims {

namespace {

AmountVec vec(std::initializer_list<const char*> parts) {
    AmountVec out;
    for (const char* part : parts)
        out.push_back(parse_amount(part));
    return out;
}

HistoricalProblem make_hp(
    AmountVec claims, const char* endowment,
    std::initializer_list<std::pair<AmountVec, AmountVec>> periods = {}) {
    HistoricalProblem hp;
    for (std::size_t i = 0; i < claims.size(); ++i)
        hp.problem.agents.push_back(static_cast<int>(i) + 1);
    hp.problem.claims = std::move(claims);
    hp.problem.endowment = parse_amount(endowment);
    for (const auto& [c, x] : periods)
        hp.history.periods.push_back({c, x});
    return hp;
}

struct FixtureBuilder {
    FixtureResult result;

    explicit FixtureBuilder(std::string name) { result.name = std::move(name); }

    void expect(const std::string& label, const AmountVec& expected,
                const AmountVec& computed) {
        std::string want, got;
        for (std::size_t i = 0; i < expected.size(); ++i)
            want += (i ? "," : "") + format_amount(expected[i]);
        for (std::size_t i = 0; i < computed.size(); ++i)
            got += (i ? "," : "") + format_amount(computed[i]);
        result.values.emplace_back(label, want, got);
        if (expected != computed)
            result.match = false;
    }

    void expect(const std::string& label, const char* expected,
                const Amount& computed) {
        result.values.emplace_back(label, expected, format_amount(computed));
        if (parse_amount(expected) != computed)
            result.match = false;
    }

    void confirm_violation(const CheckResult& check) {
        if (check.holds)
            result.violation_confirmed = false;
    }
};

FixtureResult composition_up_fixture() {
    FixtureBuilder fx("composition-up");
    const RuleHandle rule = rule_cel();
    const HistoricalProblem hp =
        make_hp(vec({"10", "5", "2"}), "15",
                {{vec({"7", "7", "20"}), vec({"2", "2", "2"})}});

    const HistoricalSolution whole = apply_historical(rule, hp);
    fx.expect("whole awards", vec({"9", "4", "2"}), whole.awards.awards);
    fx.expect("lambda", "4", whole.lambda);

    HistoricalProblem part1 = hp;
    part1.problem.endowment = 5;
    const HistoricalSolution first = apply_historical(rule, part1);
    fx.expect("first-step awards", vec({"3/2", "3/2", "2"}),
              first.awards.awards);

    HistoricalProblem part2 = hp;
    part2.problem.endowment = 10;
    for (std::size_t i = 0; i < 3; ++i)
        part2.problem.claims[i] = hp.problem.claims[i] - first.awards.awards[i];
    const HistoricalSolution second = apply_historical(rule, part2);
    fx.expect("second-step awards", vec({"13/2", "7/2", "0"}),
              second.awards.awards);

    AxiomInstance instance;
    instance.hp = hp;
    instance.endowment_part = 5;
    fx.confirm_violation(
        check_general(Axiom::CompositionUp, rule, operator_phi(), instance));
    return fx.result;
}

FixtureResult composition_down_fixture() {
    FixtureBuilder fx("composition-down");
    const RuleHandle rule = rule_cel();
    const HistoricalProblem generous =
        make_hp(vec({"10", "5", "2"}), "15",
                {{vec({"7", "7", "20"}), vec({"2", "2", "2"})}});
    const HistoricalSolution at_eprime = apply_historical(rule, generous);
    fx.expect("awards at E'", vec({"9", "4", "2"}), at_eprime.awards.awards);

    HistoricalProblem two_step = generous;
    two_step.problem.claims = at_eprime.awards.awards;
    two_step.problem.endowment = 9;
    fx.expect("two-step awards", vec({"17/4", "11/4", "2"}),
              apply_historical(rule, two_step).awards.awards);

    HistoricalProblem direct = generous;
    direct.problem.endowment = 9;
    fx.expect("direct awards", vec({"9/2", "5/2", "2"}),
              apply_historical(rule, direct).awards.awards);

    AxiomInstance instance;
    instance.hp = direct;
    instance.larger_endowment = 15;
    fx.confirm_violation(
        check_general(Axiom::CompositionDown, rule, operator_phi(), instance));
    return fx.result;
}

FixtureResult claims_monotonicity_fixture() {
    FixtureBuilder fx("claims-monotonicity");
    const RuleHandle rule = rule_r_dagger();
    const HistoricalProblem hp =
        make_hp(vec({"4", "1", "2"}), "3",
                {{vec({"3", "3", "3"}), vec({"2", "2", "1"})}});
    fx.expect("base awards", vec({"1/2", "1/2", "2"}),
              apply_historical(rule, hp).awards.awards);

    HistoricalProblem raised = hp;
    raised.problem.claims[1] = 3;
    fx.expect("raised-claim awards", vec({"3", "0", "0"}),
              apply_historical(rule, raised).awards.awards);

    AxiomInstance instance;
    instance.hp = hp;
    instance.claim_increase = {{1, Amount(3)}};
    fx.confirm_violation(check_general(Axiom::ClaimsMonotonicity, rule,
                                       operator_phi(), instance));
    return fx.result;
}

FixtureResult consistency_fixture() {
    FixtureBuilder fx("consistency");
    const RuleHandle rule = rule_proportional();
    const HistoricalProblem hp =
        make_hp(vec({"2", "4", "8", "6"}), "9",
                {{vec({"12", "7", "6", "4"}), vec({"2", "2", "2", "2"})}});
    const HistoricalSolution whole = apply_historical(rule, hp);
    fx.expect("awards on N", vec({"2", "269/123", "350/123", "242/123"}),
              whole.awards.awards);
    fx.expect("lambda", "26/123", whole.lambda);

    const Amount e_m = whole.awards.awards[0] + whole.awards.awards[1] +
                       whole.awards.awards[2];
    fx.expect("E_M", "865/123", e_m);

    HistoricalProblem sub = make_hp(
        vec({"2", "4", "8"}), "865/123",
        {{vec({"12", "7", "6"}), vec({"2", "2", "2"})}});
    sub.problem.endowment = e_m;
    fx.expect("awards on M", vec({"2", "2972/1353", "1279/451"}),
              apply_historical(rule, sub).awards.awards);

    AxiomInstance instance;
    instance.hp = hp;
    instance.subgroup = {1, 2, 3};
    fx.confirm_violation(
        check_general(Axiom::Consistency, rule, operator_phi(), instance));
    return fx.result;
}

FixtureResult population_monotonicity_fixture() {
    FixtureBuilder fx("population-monotonicity");
    const RuleHandle rule = rule_proportional();
    const HistoricalProblem hp = make_hp(
        vec({"2", "15"}), "15", {{vec({"2", "20"}), vec({"1", "0"})}});
    fx.expect("awards on N", vec({"45/38", "525/38"}),
              apply_historical(rule, hp).awards.awards);

    const HistoricalProblem big =
        make_hp(vec({"2", "15", "1"}), "15",
                {{vec({"2", "20", "105"}), vec({"1", "0", "5"})}});
    fx.expect("awards on N'", vec({"2", "12", "1"}),
              apply_historical(rule, big).awards.awards);

    AxiomInstance instance;
    instance.hp = hp;
    instance.enlarged = big;
    fx.confirm_violation(check_general(Axiom::PopulationMonotonicity, rule,
                                       operator_phi(), instance));
    return fx.result;
}

FixtureResult self_duality_fixture() {
    FixtureBuilder fx("self-duality");
    const RuleHandle rule = rule_proportional();
    const HistoricalProblem hp =
        make_hp(vec({"2", "4"}), "2", {{vec({"2", "2"}), vec({"1", "1"})}});
    fx.expect("awards at E", vec({"3/4", "5/4"}),
              apply_historical(rule, hp).awards.awards);

    HistoricalProblem dual = hp;
    dual.problem.endowment = 4;  // C - E
    const Allocation at_dual = apply_historical(rule, dual).awards;
    AmountVec complement(2);
    for (std::size_t i = 0; i < 2; ++i)
        complement[i] = hp.problem.claims[i] - at_dual.awards[i];
    fx.expect("c minus dual awards", vec({"1/2", "3/2"}), complement);

    AxiomInstance instance;
    instance.hp = hp;
    fx.confirm_violation(
        check_general(Axiom::SelfDuality, rule, operator_phi(), instance));
    return fx.result;
}

FixtureResult gamma1_fixture() {
    FixtureBuilder fx("gamma1-non-arbitrariness");
    const RuleHandle rule = rule_proportional();
    const HistoricalProblem hp = make_hp(vec({"3", "4"}), "5");
    fx.expect("gamma1 awards", vec({"3", "2"}), gamma1(rule, hp).awards);
    fx.expect("tentative", vec({"15/7", "20/7"}),
              rule(hp.problem).awards);
    fx.expect("honored margin", "6/7", Amount(3) - Amount(15, 7));
    fx.expect("rationed margin", "-6/7", Amount(2) - Amount(20, 7));
    fx.confirm_violation(check_operator_axiom(Axiom::NonArbitrariness, rule,
                                              operator_gamma1(), hp));
    return fx.result;
}

FixtureResult gamma2_fixture() {
    FixtureBuilder fx("gamma2-balanced-treatment");
    const RuleHandle rule = rule_proportional();
    const HistoricalProblem hp = make_hp(vec({"3", "4"}), "5");
    fx.expect("gamma2 awards", vec({"2", "3"}), gamma2(rule, hp).awards);
    fx.expect("margin 1", "-1/7", Amount(2) - Amount(15, 7));
    fx.expect("margin 2", "1/7", Amount(3) - Amount(20, 7));
    fx.confirm_violation(check_operator_axiom(Axiom::BalancedTreatment, rule,
                                              operator_gamma2(), hp));
    return fx.result;
}

}  // namespace

std::vector<FixtureResult> run_curated_fixtures() {
    return {
        claims_monotonicity_fixture(),
        composition_up_fixture(),
        composition_down_fixture(),
        consistency_fixture(),
        population_monotonicity_fixture(),
        self_duality_fixture(),
        gamma1_fixture(),
        gamma2_fixture(),
    };
}

}  // namespace claims
