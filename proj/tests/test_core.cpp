#include <doctest.h>

#include "claims/core.hpp"

#include <random>

using namespace claims;

namespace {

AmountVec vec(std::initializer_list<const char*> parts) {
    AmountVec out;
    for (const char* part : parts)
        out.push_back(parse_amount(part));
    return out;
}

ClaimsProblem problem(AmountVec claims, const char* endowment) {
    ClaimsProblem p;
    for (std::size_t i = 0; i < claims.size(); ++i)
        p.agents.push_back(static_cast<int>(i) + 1);
    p.claims = std::move(claims);
    p.endowment = parse_amount(endowment);
    return p;
}

}  // namespace

TEST_CASE("amount parsing accepts integers and fractions") {
    CHECK(parse_amount("15") == Amount(15));
    CHECK(parse_amount("-4") == Amount(-4));
    CHECK(parse_amount("26/123") == Amount(26, 123));
    CHECK(parse_amount("27/10") == Amount(27, 10));
    CHECK(format_amount(Amount(26, 123)) == "26/123");
    CHECK(format_amount(Amount(6, 3)) == "2");
    CHECK(format_amount(Amount(-1, 2)) == "-1/2");
}

TEST_CASE("amount parsing rejects floats, exponents and junk") {
    CHECK_THROWS_AS(parse_amount(""), ParseError);
    CHECK_THROWS_AS(parse_amount("1.5"), ParseError);
    CHECK_THROWS_AS(parse_amount("1e3"), ParseError);
    CHECK_THROWS_AS(parse_amount("3/"), ParseError);
    CHECK_THROWS_AS(parse_amount("/4"), ParseError);
    CHECK_THROWS_AS(parse_amount("3/0"), ParseError);
    CHECK_THROWS_AS(parse_amount("a"), ParseError);
    CHECK_THROWS_AS(parse_amount(" 1"), ParseError);
}

TEST_CASE("round trip through format_amount") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const Amount a(static_cast<int>(rng() % 97) - 48,
                       static_cast<int>(rng() % 31) + 1);
        CHECK(parse_amount(format_amount(a)) == a);
    }
}

TEST_CASE("problem validation catches each defect") {
    CHECK(!validate_problem(problem(vec({"3", "6"}), "5")));

    auto p = problem(vec({"3", "-1"}), "1");
    REQUIRE(validate_problem(p));
    CHECK(validate_problem(p)->code == ValidationCode::NegativeClaim);

    p = problem(vec({"3", "6"}), "-1");
    CHECK(validate_problem(p)->code == ValidationCode::NegativeEndowment);

    p = problem(vec({"3", "6"}), "10");
    CHECK(validate_problem(p)->code == ValidationCode::InfeasibleEndowment);

    p = problem(vec({"0", "0"}), "0");
    CHECK(validate_problem(p)->code == ValidationCode::ZeroTotalClaims);

    p = problem(vec({"3", "6"}), "5");
    p.agents = {1, 1};
    CHECK(validate_problem(p)->code == ValidationCode::DuplicateAgent);

    p = problem(vec({"3", "6"}), "5");
    p.claims.push_back(1);
    CHECK(validate_problem(p)->code == ValidationCode::AgentCountMismatch);
}

TEST_CASE("allocation validation enforces bounds and balance") {
    const auto p = problem(vec({"3", "6"}), "5");
    CHECK(!validate_allocation(p, Allocation{vec({"2", "3"})}));

    auto err = validate_allocation(p, Allocation{vec({"4", "1"})});
    REQUIRE(err);
    CHECK(err->code == ValidationCode::BoundednessViolated);

    err = validate_allocation(p, Allocation{vec({"-1", "6"})});
    REQUIRE(err);
    CHECK(err->code == ValidationCode::BoundednessViolated);

    err = validate_allocation(p, Allocation{vec({"2", "2"})});
    REQUIRE(err);
    CHECK(err->code == ValidationCode::BalanceViolated);

    err = validate_allocation(p, Allocation{vec({"2"})});
    REQUIRE(err);
    CHECK(err->code == ValidationCode::AgentCountMismatch);
}

TEST_CASE("history validation rejects over-awarded periods") {
    HistoricalProblem hp;
    hp.problem = problem(vec({"10", "5", "2"}), "15");
    hp.history.periods.push_back({vec({"7", "7", "20"}), vec({"2", "2", "2"})});
    CHECK(!validate_historical(hp));

    hp.history.periods[0].allocations[2] = 21;  // above the period claim
    auto err = validate_historical(hp);
    REQUIRE(err);
    CHECK(err->code == ValidationCode::HistoryBoundednessViolated);

    hp.history.periods[0].allocations[2] = parse_amount("-1");
    err = validate_historical(hp);
    REQUIRE(err);
    CHECK(err->code == ValidationCode::HistoryBoundednessViolated);

    hp.history.periods[0].allocations.pop_back();
    err = validate_historical(hp);
    REQUIRE(err);
    CHECK(err->code == ValidationCode::AgentCountMismatch);
}

TEST_CASE("aggregates reproduce the frozen shortfall vectors") {
    HistoricalProblem hp;
    hp.problem = problem(vec({"10", "5", "2"}), "15");
    hp.history.periods.push_back({vec({"7", "7", "20"}), vec({"2", "2", "2"})});
    const auto agg = aggregates(hp);
    CHECK(agg.delta_claims == vec({"7", "7", "20"}));
    CHECK(agg.delta_awards == vec({"2", "2", "2"}));
    CHECK(agg.delta == vec({"5", "5", "18"}));
    CHECK(agg.adjusted_claims == vec({"15", "10", "20"}));

    HistoricalProblem hp4;
    hp4.problem = problem(vec({"2", "4", "8", "6"}), "9");
    hp4.history.periods.push_back(
        {vec({"12", "7", "6", "4"}), vec({"2", "2", "2", "2"})});
    const auto agg4 = aggregates(hp4);
    CHECK(agg4.delta == vec({"10", "5", "4", "2"}));
    CHECK(agg4.adjusted_claims == vec({"12", "9", "12", "8"}));
}

TEST_CASE("aggregates are additive over period concatenation") {
    HistoricalProblem a;
    a.problem = problem(vec({"4", "9"}), "6");
    a.history.periods.push_back({vec({"3", "5"}), vec({"1", "2"})});
    HistoricalProblem b = a;
    b.history.periods.push_back({vec({"6", "1"}), vec({"5", "1/2"})});

    const auto agg_a = aggregates(a);
    const auto agg_b = aggregates(b);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& last = b.history.periods[1];
        CHECK(agg_b.delta_claims[i] == agg_a.delta_claims[i] + last.claims[i]);
        CHECK(agg_b.delta_awards[i] ==
              agg_a.delta_awards[i] + last.allocations[i]);
        CHECK(agg_b.delta[i] ==
              agg_b.delta_claims[i] - agg_b.delta_awards[i]);
        CHECK(agg_b.adjusted_claims[i] == b.problem.claims[i] + agg_b.delta[i]);
    }
}

TEST_CASE("empty history leaves the claims unchanged") {
    HistoricalProblem hp;
    hp.problem = problem(vec({"3", "6"}), "5");
    const auto agg = aggregates(hp);
    CHECK(agg.delta == vec({"0", "0"}));
    CHECK(agg.adjusted_claims == hp.problem.claims);
}

TEST_CASE("require_valid throws with the validation error attached") {
    auto p = problem(vec({"3", "6"}), "10");
    try {
        require_valid(p);
        FAIL("expected ValidationFailure");
    } catch (const ValidationFailure& e) {
        CHECK(e.error.code == ValidationCode::InfeasibleEndowment);
    }
}
