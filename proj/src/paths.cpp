#include "claims/paths.hpp"

#include <algorithm>
#include <set>

namespace claims {

namespace {

ClaimsProblem problem_at(const AmountVec& claims, Amount endowment) {
    ClaimsProblem p;
    for (std::size_t i = 0; i < claims.size(); ++i)
        p.agents.push_back(static_cast<int>(i) + 1);
    p.claims = claims;
    p.endowment = std::move(endowment);
    return p;
}

// Candidate kink endowments for the built-in rules; the path is affine
// between consecutive candidates.
std::set<Amount> kink_endowments(const RuleHandle& rule,
                                 const AmountVec& claims) {
    const Amount total = sum(claims);
    std::set<Amount> kinks{Amount(0), total};
    switch (rule.kind) {
        case RuleKind::Proportional:
            break;
        case RuleKind::Cea:
            for (const auto& level : claims) {
                Amount e = 0;
                for (const auto& c : claims)
                    e += std::min(c, level);
                kinks.insert(e);
            }
            break;
        case RuleKind::Cel:
            for (const auto& level : claims) {
                Amount e = 0;
                for (const auto& c : claims)
                    e += std::max(Amount(0), Amount(c - level));
                kinks.insert(e);
            }
            break;
        case RuleKind::Talmud: {
            kinks.insert(total / 2);
            for (const auto& half_level : claims) {
                Amount filled = 0;
                for (const auto& c : claims)
                    filled += std::min(Amount(c / 2), Amount(half_level / 2));
                kinks.insert(filled);
                kinks.insert(total - filled);
            }
            break;
        }
        case RuleKind::Priority: {
            const ClaimsProblem p = problem_at(claims, 0);
            Amount cumulative = 0;
            for (int id : rule.priority_order) {
                const auto it =
                    std::find(p.agents.begin(), p.agents.end(), id);
                if (it == p.agents.end())
                    throw SolveError(
                        "priority order does not cover the agent set");
                cumulative +=
                    claims[static_cast<std::size_t>(it - p.agents.begin())];
                kinks.insert(cumulative);
            }
            break;
        }
        default:
            throw ExactModeUnsupported("no exact path for rule " + rule.name);
    }
    return kinks;
}

// Drops interior vertices lying on the segment between their neighbors.
std::vector<AmountVec> dedupe_collinear(std::vector<AmountVec> vertices) {
    std::vector<AmountVec> out;
    for (auto& v : vertices) {
        while (out.size() >= 2) {
            const AmountVec& a = out[out.size() - 2];
            const AmountVec& b = out.back();
            const Amount ea = sum(a), eb = sum(b), ev = sum(v);
            bool collinear = true;
            for (std::size_t i = 0; i < v.size() && collinear; ++i)
                collinear = (b[i] - a[i]) * (ev - ea) == (v[i] - a[i]) * (eb - ea);
            if (!collinear)
                break;
            out.pop_back();
        }
        if (out.empty() || sum(v) > sum(out.back()))
            out.push_back(std::move(v));
    }
    return out;
}

AwardPath sampled_path(const AmountVec& claims,
                       const std::function<AmountVec(const Amount&)>& eval,
                       int samples) {
    if (samples < 2)
        throw SolveError("sample count must be at least 2");
    const Amount total = sum(claims);
    AwardPath path;
    path.claims = claims;
    for (int s = 0; s < samples; ++s)
        path.vertices.push_back(eval(total * s / (samples - 1)));
    return path;
}

}  // namespace

AwardPath trace_standard(const RuleHandle& rule, const AmountVec& claims,
                         std::optional<int> samples) {
    const auto eval = [&](const Amount& e) {
        return rule(problem_at(claims, e)).awards;
    };
    if (samples)
        return sampled_path(claims, eval, *samples);
    AwardPath path;
    path.claims = claims;
    std::vector<AmountVec> vertices;
    for (const Amount& e : kink_endowments(rule, claims))
        vertices.push_back(eval(e));
    path.vertices = dedupe_collinear(std::move(vertices));
    return path;
}

namespace {

// One affine piece of the historical path is determined by the satiated set
// of the clamp. Gaps g_i(E) = c_i - tentative_i(E) and the clamp level are
// affine on any segment where the base rule's tentative allocation is.
struct PieceSweep {
    const AmountVec& claims;
    std::size_t n;

    // Finds the satiated set valid just right of e_cur, given gap values and
    // slopes there, as a prefix of the agents sorted by (gap, slope).
    // Returns the per-piece level offset/slope via out-parameters.
    std::vector<std::size_t> piece_set(const AmountVec& gap_value,
                                       const AmountVec& gap_slope,
                                       Amount& level_value,
                                       Amount& level_slope) const {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) {
                      if (gap_value[a] != gap_value[b])
                          return gap_value[a] < gap_value[b];
                      return gap_slope[a] < gap_slope[b];
                  });
        for (std::size_t k = 0; k < n; ++k) {
            Amount value_sum = 0, slope_sum = 0;
            for (std::size_t idx = 0; idx < k; ++idx) {
                value_sum += gap_value[order[idx]];
                slope_sum += gap_slope[order[idx]];
            }
            const Amount members = Amount(static_cast<long>(n - k));
            const Amount lv = -value_sum / members;
            const Amount ls = -slope_sum / members;
            bool ok = lv >= 0;
            for (std::size_t idx = 0; idx < k && ok; ++idx) {
                const std::size_t i = order[idx];
                ok = gap_value[i] < lv ||
                     (gap_value[i] == lv && gap_slope[i] <= ls);
            }
            for (std::size_t idx = k; idx < n && ok; ++idx) {
                const std::size_t i = order[idx];
                ok = gap_value[i] > lv ||
                     (gap_value[i] == lv && gap_slope[i] >= ls);
            }
            if (ok) {
                level_value = lv;
                level_slope = ls;
                return {order.begin(), order.begin() + k};
            }
        }
        throw SolveError("no consistent clamp piece");
    }
};

}  // namespace

AwardPath trace_historical(const RuleHandle& rule, const AmountVec& claims,
                           const History& history,
                           std::optional<int> samples) {
    HistoricalProblem hp;
    hp.problem = problem_at(claims, 0);
    hp.history = history;
    const AmountVec adjusted = aggregates(hp).adjusted_claims;
    const std::size_t n = claims.size();

    const auto eval = [&](const Amount& e) {
        HistoricalProblem at = hp;
        at.problem.endowment = e;
        return apply_historical(rule, at).awards.awards;
    };
    if (samples)
        return sampled_path(claims, eval, *samples);

    const AwardPath base = trace_standard(rule, adjusted);
    // The present path ends where the endowment exhausts the present claims,
    // before the base path at the adjusted claims does.
    const Amount e_max = sum(claims);
    std::vector<AmountVec> vertices;
    vertices.push_back(eval(0));
    const PieceSweep sweep{claims, n};

    for (std::size_t seg = 0; seg + 1 < base.vertices.size(); ++seg) {
        const AmountVec& t_lo = base.vertices[seg];
        const AmountVec& t_hi = base.vertices[seg + 1];
        const Amount e_lo = sum(t_lo);
        const Amount e_hi = std::min(sum(t_hi), e_max);
        if (e_lo >= e_max)
            break;
        const Amount width = sum(t_hi) - e_lo;

        Amount e_cur = e_lo;
        int guard = 0;
        while (e_cur < e_hi) {
            if (++guard > 1000)
                throw SolveError("historical path sweep did not terminate");
            AmountVec gap_value(n), gap_slope(n);
            for (std::size_t i = 0; i < n; ++i) {
                const Amount t_slope = (t_hi[i] - t_lo[i]) / width;
                const Amount t_at = t_lo[i] + t_slope * (e_cur - e_lo);
                gap_value[i] = claims[i] - t_at;
                gap_slope[i] = -t_slope;
            }
            Amount level_value, level_slope;
            sweep.piece_set(gap_value, gap_slope, level_value, level_slope);

            // Next event: the earliest E where some gap crosses the level.
            Amount e_next = e_hi;
            for (std::size_t i = 0; i < n; ++i) {
                const Amount diff0 = gap_value[i] - level_value;
                const Amount dslope = gap_slope[i] - level_slope;
                if (diff0 == 0 || dslope == 0)
                    continue;
                const Amount root = e_cur - diff0 / dslope;
                if (root > e_cur && root < e_next)
                    e_next = root;
            }
            vertices.push_back(eval(e_next));
            e_cur = e_next;
        }
    }

    AwardPath path;
    path.claims = claims;
    path.vertices = dedupe_collinear(std::move(vertices));
    return path;
}

}  // namespace claims
