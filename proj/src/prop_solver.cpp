#include "fairdiv/prop_solver.hpp"

#include <algorithm>
#include <set>

#include "fairdiv/matching.hpp"

namespace fairdiv {

namespace {

bool all_uniform(const std::vector<Rational>& shares, int n) {
    Rational u(1, n);
    return std::all_of(shares.begin(), shares.end(), [&](const Rational& s) { return s == u; });
}

} // namespace

Assignment round_robin_assignment(const Profile& profile) {
    std::vector<int> owner(profile.object_count());
    for (int o = 0; o < profile.object_count(); ++o)
        owner[o] = o % profile.agent_count();
    return Assignment(profile, std::move(owner));
}

PropResult exists_sd_proportional_for(const Profile& profile, const std::vector<Rational>& shares,
                                      const std::vector<bool>& constrained) {
    int n = profile.agent_count();
    int m = profile.object_count();
    if (static_cast<int>(shares.size()) != n || static_cast<int>(constrained.size()) != n)
        fail(Errc::InvalidParams, "shares/constrained must cover every agent");

    BMatchingInstance inst;
    for (int o = 0; o < m; ++o)
        inst.add_right(1, 1);

    // vertex_owner[v] = agent that receives objects matched into vertex v
    std::vector<int> vertex_owner;
    for (int i = 0; i < n; ++i) {
        if (constrained[i]) {
            long cumulative = 0;
            for (int c = 0; c < profile.class_count(i); ++c) {
                long target = ceil_long(shares[i] * Rational(profile.prefix_size(i, c)));
                int v = inst.add_left(target - cumulative, BMatchingInstance::kUnbounded);
                cumulative = target;
                vertex_owner.push_back(i);
                for (int o = 0; o < m; ++o)
                    if (profile.class_of(i, o) <= c)
                        inst.add_edge(v, o);
            }
        } else {
            int v = inst.add_left(0, BMatchingInstance::kUnbounded);
            vertex_owner.push_back(i);
            for (int o = 0; o < m; ++o)
                inst.add_edge(v, o);
        }
    }

    auto chosen = feasible_bmatching(inst);
    if (!chosen)
        return {};
    std::vector<int> owner(m, -1);
    for (int e : *chosen)
        owner[inst.edges[e].second] = vertex_owner[inst.edges[e].first];
    return {Assignment(profile, std::move(owner))};
}

PropResult exists_sd_proportional(const Profile& profile, const std::vector<Rational>& shares) {
    int n = profile.agent_count();
    // n | m is necessary for SD proportionality proper (uniform shares only).
    if (all_uniform(shares, n) && profile.object_count() % n != 0)
        return {};
    return exists_sd_proportional_for(profile, shares, std::vector<bool>(n, true));
}

PropResult exists_sd_proportional(const Profile& profile) {
    return exists_sd_proportional(profile, uniform_shares(profile.agent_count()));
}

bool alpha_finite(const Profile& profile) {
    int n = profile.agent_count();
    int m = profile.object_count();
    BipartiteGraph g(n, m);
    for (int i = 0; i < n; ++i)
        for (int o = 0; o < m; ++o)
            if (profile.class_of(i, o) == 0)
                g.add_edge(i, o);
    return max_cardinality_matching(g).size == n;
}

OptimalPropResult optimal_proportional(const Profile& profile) {
    if (!alpha_finite(profile))
        return {std::nullopt, round_robin_assignment(profile), {}};

    int m = profile.object_count();
    std::set<Rational> grid;
    for (int i = 0; i < profile.agent_count(); ++i)
        for (int c = 0; c < profile.class_count(i); ++c)
            for (int l = 0; l < m; ++l)
                grid.insert(Rational(profile.prefix_size(i, c), l + 1));

    OptimalPropResult result{std::nullopt, round_robin_assignment(profile),
                             std::vector<Rational>(grid.begin(), grid.end())};
    auto feasible_at = [&](std::size_t index) {
        std::vector<Rational> shares(profile.agent_count(),
                                     Rational(1) / result.candidates[index]);
        return exists_sd_proportional(profile, shares);
    };
    // Feasibility is monotone in alpha, so the first feasible grid point is
    // found by binary search; the top of the grid (alpha = m) is feasible
    // whenever alpha is finite at all.
    std::size_t lo = 0, hi = result.candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible_at(mid).exists())
            hi = mid;
        else
            lo = mid + 1;
    }
    PropResult best = feasible_at(lo);
    if (best.exists()) {
        result.alpha_star = result.candidates[lo];
        result.assignment = std::move(*best.assignment);
    }
    return result;
}

} // namespace fairdiv
