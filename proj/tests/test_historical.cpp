#include <doctest.h>

#include "claims/axioms.hpp"
#include "claims/historical.hpp"

#include <random>

using namespace claims;

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

}  // namespace

TEST_CASE("solve_lambda on hand examples") {
    // min{10,5+l} + min{5,0+l} + min{2,10+l} = 15 at l = 4.
    CHECK(solve_lambda(vec({"10", "5", "2"}), vec({"5", "0", "10"}), 15) == 4);
    // min{4,l} + min{1,l} + min{2,3+l} = 3 at l = 1/2.
    CHECK(solve_lambda(vec({"4", "1", "2"}), vec({"0", "0", "3"}), 3) ==
          Amount(1, 2));
    // Balanced tentative within bounds needs no lift.
    CHECK(solve_lambda(vec({"3", "6"}), vec({"2", "3"}), 5) == 0);
}

TEST_CASE("solve_lambda rejects endowments outside the clamp window") {
    // sum min{c, t} = 7 > 5: no nonnegative lambda can shrink awards.
    CHECK_THROWS_AS(solve_lambda(vec({"10", "5"}), vec({"5", "2"}), 5),
                    SolveError);
    CHECK_THROWS_AS(solve_lambda(vec({"3", "6"}), vec({"1", "1"}), 10),
                    SolveError);
}

TEST_CASE("historical cel reproduces the frozen golden values") {
    const auto hp = make_hp(vec({"10", "5", "2"}), "15",
                            {{vec({"7", "7", "20"}), vec({"2", "2", "2"})}});
    const auto sol = apply_historical(rule_cel(), hp);
    CHECK(sol.tentative == vec({"5", "0", "10"}));
    CHECK(sol.lambda == 4);
    CHECK(sol.awards.awards == vec({"9", "4", "2"}));
    CHECK(sol.satiated == std::vector<std::size_t>{2});

    auto smaller = hp;
    smaller.problem.endowment = 5;
    CHECK(apply_historical(rule_cel(), smaller).awards.awards ==
          vec({"3/2", "3/2", "2"}));
}

TEST_CASE("historical proportional reproduces the frozen golden values") {
    const auto hp =
        make_hp(vec({"2", "4", "8", "6"}), "9",
                {{vec({"12", "7", "6", "4"}), vec({"2", "2", "2", "2"})}});
    const auto sol = apply_historical(rule_proportional(), hp);
    CHECK(sol.awards.awards ==
          vec({"2", "269/123", "350/123", "242/123"}));
    CHECK(sol.lambda == Amount(26, 123));
}

TEST_CASE("empty history reduces the operator to the bare rule") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        HistoricalProblem hp;
        const int n = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            hp.problem.agents.push_back(i + 1);
            hp.problem.claims.push_back(
                Amount(static_cast<int>(rng() % 20),
                       1 + static_cast<int>(rng() % 8)));
        }
        if (hp.problem.total_claims() == 0)
            hp.problem.claims[0] = 2;
        const int m = 1 + static_cast<int>(rng() % 10);
        hp.problem.endowment =
            hp.problem.total_claims() * static_cast<int>(rng() % (m + 1)) / m;
        for (const auto& rule : classical_rules()) {
            const auto sol = apply_historical(rule, hp);
            CHECK(sol.lambda == 0);
            CHECK(sol.awards == rule(hp.problem));
        }
    }
}

TEST_CASE("awards equal the present claims when the endowment is exhaustive") {
    const auto hp = make_hp(vec({"3", "6"}), "9",
                            {{vec({"4", "4"}), vec({"1", "1"})}});
    for (const auto& rule : classical_rules()) {
        const auto sol = apply_historical(rule, hp);
        CHECK(sol.awards.awards == hp.problem.claims);
        CHECK(sol.lambda >= 0);
    }
}

TEST_CASE("closed form and staged redistribution agree everywhere") {
    std::mt19937_64 rng(31);
    const auto rules = classical_rules();
    for (int trial = 0; trial < 500; ++trial) {
        const auto instance = random_instance(
            Axiom::EqualTreatment, rules[trial % rules.size()], nullptr,
            977, trial);
        // random_instance omits the history for bare-rule axioms; rebuild one
        // through the operator-targeted generator instead.
        const OperatorHandle phi = operator_phi();
        const auto with_h = random_instance(
            Axiom::EqualTreatment, rules[trial % rules.size()], &phi, 977,
            trial);
        for (const auto& hp : {instance.hp, with_h.hp}) {
            for (const auto& rule : rules) {
                const auto direct = apply_historical(rule, hp);
                const auto [staged, trace] =
                    apply_historical_iterative(rule, hp);
                CHECK(direct.awards == staged.awards);
                CHECK(direct.lambda == staged.lambda);
                CHECK(direct.satiated == staged.satiated);
                CHECK(!validate_allocation(hp.problem, direct.awards));
            }
        }
    }
}

TEST_CASE("staged procedure records the satiation stages") {
    const auto hp = make_hp(vec({"10", "5", "2"}), "15",
                            {{vec({"7", "7", "20"}), vec({"2", "2", "2"})}});
    const auto [sol, trace] = apply_historical_iterative(rule_cel(), hp);
    REQUIRE(!trace.stages.empty());
    // Agent 3 is over-awarded first (tentative 10 > claim 2, excess 8).
    CHECK(trace.stages[0].members == std::vector<std::size_t>{2});
    CHECK(trace.stages[0].excess == 8);
    CHECK(sol.awards.awards == vec({"9", "4", "2"}));
}

TEST_CASE("gamma operators deviate only on the two-claimant surplus branch") {
    const auto hp = make_hp(vec({"3", "4"}), "5");
    const auto rule = rule_proportional();
    CHECK(gamma1(rule, hp).awards == vec({"3", "2"}));
    CHECK(gamma2(rule, hp).awards == vec({"2", "3"}));

    // Off the branch (max claim >= E) both match the historical operator.
    const auto off = make_hp(vec({"3", "4"}), "3");
    const auto expected = apply_historical(rule, off).awards;
    CHECK(gamma1(rule, off) == expected);
    CHECK(gamma2(rule, off) == expected);

    // Three claimants never hit the branch.
    const auto three = make_hp(vec({"3", "4", "1"}), "6");
    const auto expected3 = apply_historical(rule, three).awards;
    CHECK(gamma1(rule, three) == expected3);
    CHECK(gamma2(rule, three) == expected3);
}

TEST_CASE("make_operator parses names and rejects unknowns") {
    CHECK(make_operator("phi").name == "phi");
    CHECK(make_operator("gamma1").name == "gamma1");
    CHECK(make_operator("gamma2").name == "gamma2");
    CHECK_THROWS_AS(make_operator("psi"), UnknownName);
}
