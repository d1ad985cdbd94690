#include "fairdiv/weakprop_solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fairdiv/matching.hpp"
#include "fairdiv/prop_solver.hpp"

namespace fairdiv {

namespace {

// One satisfaction condition for one agent: beat the share strictly at class
// prefix `prefix`, or (prefix == -1) match the share exactly on every class.
struct Condition {
    int prefix = -1;
    bool equality() const { return prefix < 0; }
};

std::vector<Condition> agent_conditions(const Profile& profile, int agent, const Rational& share,
                                        WeakPropMode mode) {
    std::vector<Condition> out;
    for (int c = 0; c < profile.class_count(agent); ++c)
        out.push_back({c});
    if (mode == WeakPropMode::Closed) {
        bool integral = true;
        for (int c = 0; c < profile.class_count(agent) && integral; ++c)
            integral = (share * Rational(profile.class_size(agent, c))).is_integer();
        if (integral)
            out.push_back({-1});
    }
    // Limit mode drops the equality condition: an exact match pins a single
    // share value and cannot hold on an open interval above the grid point.
    return out;
}

struct BuildResult {
    BMatchingInstance inst;
    std::vector<int> vertex_owner;
};

BuildResult build_instance(const Profile& profile, const std::vector<Rational>& shares,
                           const std::vector<bool>& constrained,
                           const std::vector<const Condition*>& choice, WeakPropMode mode) {
    int n = profile.agent_count();
    int m = profile.object_count();
    BuildResult out;
    for (int o = 0; o < m; ++o)
        out.inst.add_right(1, 1);

    auto add_absorber = [&](int agent) {
        int v = out.inst.add_left(0, BMatchingInstance::kUnbounded);
        out.vertex_owner.push_back(agent);
        for (int o = 0; o < m; ++o)
            out.inst.add_edge(v, o);
    };

    for (int i = 0; i < n; ++i) {
        if (!constrained[i]) {
            add_absorber(i);
            continue;
        }
        const Condition& cond = *choice[i];
        if (cond.equality()) {
            for (int c = 0; c < profile.class_count(i); ++c) {
                Rational quota = shares[i] * Rational(profile.class_size(i, c));
                long q = floor_long(quota); // integral by admissibility
                int v = out.inst.add_left(q, q);
                out.vertex_owner.push_back(i);
                for (int o = 0; o < m; ++o)
                    if (profile.class_of(i, o) == c)
                        out.inst.add_edge(v, o);
            }
        } else {
            Rational mass = shares[i] * Rational(profile.prefix_size(i, cond.prefix));
            long lo = mode == WeakPropMode::Closed ? floor_long(mass) + 1 : ceil_long(mass);
            int v = out.inst.add_left(lo, BMatchingInstance::kUnbounded);
            out.vertex_owner.push_back(i);
            for (int o = 0; o < m; ++o)
                if (profile.class_of(i, o) <= cond.prefix)
                    out.inst.add_edge(v, o);
            add_absorber(i);
        }
    }
    return out;
}

} // namespace

WeakPropResult exists_weak_sd_prop_for(const Profile& profile, const std::vector<Rational>& shares,
                                       const std::vector<bool>& constrained, WeakPropMode mode) {
    int n = profile.agent_count();
    int m = profile.object_count();
    if (static_cast<int>(shares.size()) != n || static_cast<int>(constrained.size()) != n)
        fail(Errc::InvalidParams, "shares/constrained must cover every agent");
    if (m == 0)
        return {Assignment(profile, {})};

    std::vector<std::vector<Condition>> menu(n);
    for (int i = 0; i < n; ++i) {
        if (constrained[i]) {
            menu[i] = agent_conditions(profile, i, shares[i], mode);
            if (menu[i].empty())
                return {};
        } else {
            menu[i] = {Condition{}};
        }
    }

    // Lexicographic sweep over condition combinations, agent-major.
    std::vector<std::size_t> pick(n, 0);
    std::vector<const Condition*> choice(n);
    while (true) {
        for (int i = 0; i < n; ++i)
            choice[i] = &menu[i][pick[i]];
        BuildResult built = build_instance(profile, shares, constrained, choice, mode);
        if (auto chosen = feasible_bmatching(built.inst)) {
            std::vector<int> owner(m, -1);
            for (int e : *chosen)
                owner[built.inst.edges[e].second] = built.vertex_owner[built.inst.edges[e].first];
            return {Assignment(profile, std::move(owner))};
        }
        int i = n - 1;
        while (i >= 0 && ++pick[i] == menu[i].size())
            pick[i--] = 0;
        if (i < 0)
            return {};
    }
}

WeakPropResult exists_weak_sd_prop(const Profile& profile, const std::vector<Rational>& shares) {
    return exists_weak_sd_prop_for(profile, shares,
                                   std::vector<bool>(profile.agent_count(), true),
                                   WeakPropMode::Closed);
}

WeakPropResult exists_weak_sd_prop(const Profile& profile) {
    return exists_weak_sd_prop(profile, uniform_shares(profile.agent_count()));
}

WeakPropResult exists_weak_sd_prop_strict(const Profile& profile) {
    if (!profile.strict())
        fail(Errc::NotStrict, "strict preferences required");
    int n = profile.agent_count();
    int m = profile.object_count();

    if (m == 0)
        return {Assignment(profile, {})};
    if (n == 1)
        return {Assignment(profile, std::vector<int>(m, 0))};
    if (m < n)
        return {};

    if (m == n) {
        // Each agent needs one object that is not its least preferred.
        BipartiteGraph g(n, m);
        for (int i = 0; i < n; ++i)
            for (int o = 0; o < m; ++o)
                if (profile.class_of(i, o) != m - 1)
                    g.add_edge(i, o);
        MatchingResult match = max_cardinality_matching(g);
        if (match.size != n)
            return {};
        std::vector<int> owner(m, -1);
        for (int i = 0; i < n; ++i)
            owner[match.match_left[i]] = i;
        return {Assignment(profile, std::move(owner))};
    }

    // m > n: picking passes 1..n then n..1; each picks its best remaining
    // object. Leftovers go to the final picker (agent 1 of the return pass);
    // extra objects never hurt under the SD relation.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> sequence = order;
    sequence.insert(sequence.end(), order.rbegin(), order.rend());

    std::vector<int> owner(m, -1);
    auto pick_best = [&](int agent) {
        int best = -1;
        for (int o = 0; o < m; ++o)
            if (owner[o] == -1 && (best == -1 || profile.class_of(agent, o) < profile.class_of(agent, best)))
                best = o;
        owner[best] = agent;
    };
    for (int agent : sequence)
        pick_best(agent);
    for (int o = 0; o < m; ++o)
        if (owner[o] == -1)
            owner[o] = sequence.back();
    return {Assignment(profile, std::move(owner))};
}

OptimalWeakPropResult optimal_weak_proportional(const Profile& profile) {
    int n = profile.agent_count();
    int m = profile.object_count();
    if (m < n)
        return {std::nullopt, true, round_robin_assignment(profile)};

    std::set<Rational> grid;
    grid.insert(Rational(1));
    for (int a = 2; a <= m; ++a)
        for (int b = 1; b < a; ++b)
            grid.insert(Rational(a, b));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < profile.class_count(i); ++c)
            for (int l = 0; l < m; ++l)
                grid.insert(Rational(profile.prefix_size(i, c), l + 1));

    // The infimum is at least 1 whenever finite, so the sub-1 grid points
    // cannot win. Limit-mode feasibility is monotone in beta: binary search.
    std::vector<Rational> candidates;
    for (const Rational& beta : grid)
        if (beta >= Rational(1))
            candidates.push_back(beta);
    std::vector<bool> all(n, true);
    auto limit_at = [&](std::size_t index) {
        std::vector<Rational> shares(n, Rational(1) / candidates[index]);
        return exists_weak_sd_prop_for(profile, shares, all, WeakPropMode::Limit);
    };
    std::size_t lo = 0, hi = candidates.size() - 1; // beta = m is always limit-feasible
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (limit_at(mid).exists())
            hi = mid;
        else
            lo = mid + 1;
    }
    WeakPropResult limit = limit_at(lo);
    if (!limit.exists())
        return {std::nullopt, true, round_robin_assignment(profile)}; // cannot happen for m >= n
    std::vector<Rational> shares(n, Rational(1) / candidates[lo]);
    WeakPropResult closed = exists_weak_sd_prop_for(profile, shares, all, WeakPropMode::Closed);
    if (closed.exists())
        return {candidates[lo], true, std::move(*closed.assignment)};
    return {candidates[lo], false, std::move(*limit.assignment)};
}

std::pair<int, Assignment> maximin_assignment(const Profile& profile) {
    int n = profile.agent_count();
    int m = profile.object_count();
    if (n != m || !profile.strict())
        fail(Errc::NotSquareOrNotStrict, "maximin needs n = m and strict preferences");
    for (int rank = 1; rank <= m; ++rank) {
        BipartiteGraph g(n, m);
        for (int i = 0; i < n; ++i)
            for (int o = 0; o < m; ++o)
                if (profile.class_of(i, o) < rank)
                    g.add_edge(i, o);
        MatchingResult match = max_cardinality_matching(g);
        if (match.size == n) {
            std::vector<int> owner(m, -1);
            for (int i = 0; i < n; ++i)
                owner[match.match_left[i]] = i;
            return {rank, Assignment(profile, std::move(owner))};
        }
    }
    fail(Errc::InvalidParams, "no perfect matching on the full graph"); // cannot happen
}

} // namespace fairdiv
