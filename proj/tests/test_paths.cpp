#include <doctest.h>

#include "claims/paths.hpp"

#include <random>

using namespace claims;

namespace {

AmountVec vec(std::initializer_list<const char*> parts) {
    AmountVec out;
    for (const char* part : parts)
        out.push_back(parse_amount(part));
    return out;
}

std::vector<AmountVec> verts(
    std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<AmountVec> out;
    for (const auto& row : rows)
        out.push_back(vec(row));
    return out;
}

// Any one-period history with shortfall (1, 33/10) adjusts (2, 27/10) to
// (3, 6).
History shortfall_history() {
    History h;
    h.periods.push_back({vec({"2", "4"}), vec({"1", "7/10"})});
    return h;
}

}  // namespace

TEST_CASE("standard paths for claims (3,6) hit the drawn polylines") {
    const auto c = vec({"3", "6"});
    CHECK(trace_standard(rule_proportional(), c).vertices ==
          verts({{"0", "0"}, {"3", "6"}}));
    CHECK(trace_standard(rule_cea(), c).vertices ==
          verts({{"0", "0"}, {"3", "3"}, {"3", "6"}}));
    CHECK(trace_standard(rule_cel(), c).vertices ==
          verts({{"0", "0"}, {"0", "3"}, {"3", "6"}}));
    CHECK(trace_standard(rule_talmud(), c).vertices ==
          verts({{"0", "0"},
                 {"3/2", "3/2"},
                 {"3/2", "9/2"},
                 {"3", "6"}}));
}

TEST_CASE("proportional path is a single straight segment") {
    const auto path = trace_standard(rule_proportional(),
                                     vec({"5", "1/3", "7/2"}));
    CHECK(path.vertices == verts({{"0", "0", "0"}, {"5", "1/3", "7/2"}}));
}

TEST_CASE("priority path visits the cumulative claim corners") {
    const auto path = trace_standard(rule_priority({2, 1}), vec({"3", "6"}));
    CHECK(path.vertices ==
          verts({{"0", "0"}, {"0", "6"}, {"3", "6"}}));
}

TEST_CASE("exact mode rejects rules without a kink inventory") {
    RuleHandle custom{"custom", RuleKind::Custom, {},
                      [](const ClaimsProblem& p) { return cea(p); }};
    CHECK_THROWS_AS(trace_standard(custom, vec({"3", "6"})),
                    ExactModeUnsupported);
    // Sampling still works.
    CHECK(trace_standard(custom, vec({"3", "6"}), 5).vertices.size() == 5);
}

TEST_CASE("historical paths for claims (2,27/10) adjusted to (3,6)") {
    const auto c = vec({"2", "27/10"});
    const History h = shortfall_history();
    CHECK(trace_historical(rule_proportional(), c, h).vertices ==
          verts({{"0", "0"}, {"27/20", "27/10"}, {"2", "27/10"}}));
    CHECK(trace_historical(rule_cea(), c, h).vertices ==
          verts({{"0", "0"}, {"2", "2"}, {"2", "27/10"}}));
    CHECK(trace_historical(rule_cel(), c, h).vertices ==
          verts({{"0", "0"}, {"0", "27/10"}, {"2", "27/10"}}));
    CHECK(trace_historical(rule_talmud(), c, h).vertices ==
          verts({{"0", "0"},
                 {"3/2", "3/2"},
                 {"3/2", "27/10"},
                 {"2", "27/10"}}));
}

TEST_CASE("empty history traces match the standard path") {
    const auto c = vec({"4", "1", "9/2"});
    for (const auto& rule : classical_rules()) {
        const auto standard = trace_standard(rule, c);
        const auto historical = trace_historical(rule, c, History{});
        CHECK(standard.vertices == historical.vertices);
    }
}

TEST_CASE("every path vertex is the rule value at its endowment") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        AmountVec c;
        for (int i = 0; i < n; ++i)
            c.push_back(Amount(1 + static_cast<int>(rng() % 12),
                               1 + static_cast<int>(rng() % 6)));
        History h;
        if (rng() % 2) {
            PeriodRecord record;
            for (int i = 0; i < n; ++i) {
                record.claims.push_back(
                    Amount(static_cast<int>(rng() % 10),
                           1 + static_cast<int>(rng() % 4)));
                record.allocations.push_back(record.claims.back() / 2);
            }
            h.periods.push_back(std::move(record));
        }
        HistoricalProblem hp;
        for (int i = 0; i < n; ++i)
            hp.problem.agents.push_back(i + 1);
        hp.problem.claims = c;
        hp.history = h;
        for (const auto& rule : classical_rules()) {
            const auto path = trace_historical(rule, c, h);
            REQUIRE(path.vertices.size() >= 2);
            CHECK(sum(path.vertices.front()) == 0);
            CHECK(sum(path.vertices.back()) == sum(c));
            AmountVec prev;
            for (const auto& v : path.vertices) {
                hp.problem.endowment = sum(v);
                CHECK(apply_historical(rule, hp).awards.awards == v);
                // Resource-monotone base rules give nested vertices.
                if (!prev.empty())
                    for (std::size_t i = 0; i < v.size(); ++i)
                        CHECK(v[i] >= prev[i]);
                prev = v;
                // Midpoints of segments also lie on the traced polyline.
            }
            for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
                AmountVec mid(c.size());
                for (std::size_t i = 0; i < c.size(); ++i)
                    mid[i] =
                        (path.vertices[s][i] + path.vertices[s + 1][i]) / 2;
                hp.problem.endowment = sum(mid);
                CHECK(apply_historical(rule, hp).awards.awards == mid);
            }
        }
    }
}

TEST_CASE("sampled and exact traces agree at shared endowments") {
    const auto c = vec({"2", "27/10"});
    const History h = shortfall_history();
    for (const auto& rule : classical_rules()) {
        const auto exact = trace_historical(rule, c, h);
        const auto sampled = trace_historical(rule, c, h, 8);
        REQUIRE(sampled.vertices.size() == 8);
        HistoricalProblem hp;
        hp.problem.agents = {1, 2};
        hp.problem.claims = c;
        hp.history = h;
        for (const auto& v : sampled.vertices) {
            hp.problem.endowment = sum(v);
            CHECK(apply_historical(rule, hp).awards.awards == v);
        }
    }
}

TEST_CASE("two-agent paths mimic the base rule then follow the boundary") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        AmountVec c{Amount(1 + static_cast<int>(rng() % 12),
                           1 + static_cast<int>(rng() % 4)),
                    Amount(1 + static_cast<int>(rng() % 12),
                           1 + static_cast<int>(rng() % 4))};
        History h;
        PeriodRecord record;
        for (int i = 0; i < 2; ++i) {
            record.claims.push_back(Amount(static_cast<int>(rng() % 10),
                                           1 + static_cast<int>(rng() % 4)));
            record.allocations.push_back(record.claims.back() / 3);
        }
        h.periods.push_back(std::move(record));

        HistoricalProblem hp;
        hp.problem.agents = {1, 2};
        hp.problem.claims = c;
        hp.history = h;
        const AmountVec adjusted = aggregates(hp).adjusted_claims;

        for (const auto& rule : classical_rules()) {
            for (int s = 0; s <= 12; ++s) {
                const Amount e = sum(c) * s / 12;
                hp.problem.endowment = e;
                const auto awards = apply_historical(rule, hp).awards.awards;
                ClaimsProblem base{{1, 2}, adjusted, e};
                const auto t = rule(base).awards;
                if (t[0] <= c[0] && t[1] <= c[1]) {
                    // Before any satiation the path mimics the base rule.
                    CHECK(awards == t);
                } else {
                    // After satiation it runs along the satiated claim.
                    const std::size_t j = t[0] > c[0] ? 0 : 1;
                    CHECK(awards[j] == c[j]);
                    CHECK(awards[1 - j] == e - c[j]);
                }
            }
        }
    }
}
