#include "fairdiv/ef_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fairdiv/prop_solver.hpp"
#include "fairdiv/verify.hpp"
#include "fairdiv/weakprop_solver.hpp"

namespace fairdiv {

std::optional<Assignment> exists_sd_ef_two_agents(const Profile& profile) {
    if (profile.agent_count() != 2)
        fail(Errc::WrongAgentCount, "two-agent reduction needs exactly two agents");
    PropResult r = exists_sd_proportional(profile);
    return r.assignment;
}

std::optional<Assignment> exists_weak_or_possible_ef_two_agents(const Profile& profile,
                                                                NotionTag notion) {
    if (profile.agent_count() != 2)
        fail(Errc::WrongAgentCount, "two-agent reduction needs exactly two agents");
    if (notion != NotionTag::WeakSdEf && notion != NotionTag::PossibleEf)
        fail(Errc::UnsupportedNotion, "reduction covers weak-sd-ef and possible-ef");
    WeakPropResult r = exists_weak_sd_prop(profile);
    return r.assignment;
}

std::optional<Assignment> exists_sd_ef_identical(const Profile& profile) {
    if (!profile.identical_prefs())
        fail(Errc::NotIdentical, "identical preferences required");
    int n = profile.agent_count();
    int m = profile.object_count();
    for (int c = 0; c < profile.class_count(0); ++c)
        if (profile.class_size(0, c) % n != 0)
            return std::nullopt;
    std::vector<int> owner(m, -1);
    std::vector<int> dealt(profile.class_count(0), 0);
    for (int o = 0; o < m; ++o) {
        int c = profile.class_of(0, o);
        owner[o] = dealt[c]++ % n;
    }
    return Assignment(profile, std::move(owner));
}

std::optional<Assignment> exists_possible_ef_strict(const Profile& profile) {
    if (!profile.strict())
        fail(Errc::NotStrict, "strict preferences required");
    int n = profile.agent_count();
    int m = profile.object_count();
    if (m == 0)
        return Assignment(profile, {}); // nothing to envy

    // Distinct top-ranked objects and, per top object, the first agent naming it.
    std::map<int, int> top_claimant; // object -> lowest-index agent ranking it first
    for (int i = n - 1; i >= 0; --i)
        if (profile.class_count(i) > 0)
            top_claimant[profile.object_index(profile.agents()[i].classes[0][0])] = i;
    int k = static_cast<int>(top_claimant.size());
    if (m < 2 * n - k)
        return std::nullopt;

    std::vector<int> owner(m, -1);
    std::vector<bool> served(n, false);
    for (const auto& [o, agent] : top_claimant) {
        owner[o] = agent;
        served[agent] = true;
    }
    std::vector<int> unserved;
    for (int i = 0; i < n; ++i)
        if (!served[i])
            unserved.push_back(i);

    auto claim_best = [&](int agent) {
        int best = -1;
        for (int o = 0; o < m; ++o)
            if (owner[o] == -1 && (best == -1 || profile.class_of(agent, o) < profile.class_of(agent, best)))
                best = o;
        owner[best] = agent;
    };
    for (int agent : unserved)
        claim_best(agent);
    for (auto it = unserved.rbegin(); it != unserved.rend(); ++it)
        claim_best(*it);

    // m >= 2n - k guarantees both passes found objects; leftovers can go to
    // the final descending claimant (or anywhere when everyone got a top).
    int sink = unserved.empty() ? n - 1 : unserved.front();
    for (int o = 0; o < m; ++o)
        if (owner[o] == -1)
            owner[o] = sink;
    return Assignment(profile, std::move(owner));
}

namespace {

// Backtracking state for the exact search. Objects get assigned in index
// order; counts[i][j][c] tracks how many of agent j's objects sit in class c
// of agent i's order, remaining[i][c] the unassigned mass there.
struct EfSearch {
    const Profile& profile;
    NotionTag notion;
    const std::vector<bool>& constrained;
    long budget;
    long nodes = 0;

    int n, m;
    std::vector<int> owner;
    std::vector<std::vector<std::vector<int>>> counts;
    std::vector<std::vector<int>> remaining;
    std::vector<int> bundle_size;
    std::vector<int> pref_group; // agents with equal class maps share a group
    std::map<std::vector<int>, bool> possible_ef_memo;

    EfSearch(const Profile& p, NotionTag t, const std::vector<bool>& cons, long b)
        : profile(p), notion(t), constrained(cons), budget(b), n(p.agent_count()),
          m(p.object_count()), owner(m, -1), bundle_size(n, 0) {
        counts.assign(n, std::vector<std::vector<int>>(n));
        remaining.assign(n, {});
        for (int i = 0; i < n; ++i) {
            int k = profile.class_count(i);
            for (int j = 0; j < n; ++j)
                counts[i][j].assign(k, 0);
            remaining[i].assign(k, 0);
            for (int o = 0; o < m; ++o)
                remaining[i][profile.class_of(i, o)] += 1;
        }
        std::map<std::pair<std::vector<int>, bool>, int> groups;
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig(m);
            for (int o = 0; o < m; ++o)
                sig[o] = profile.class_of(i, o);
            auto key = std::make_pair(std::move(sig), constrained[i]);
            auto [it, inserted] = groups.emplace(key, static_cast<int>(groups.size()));
            pref_group.push_back(it->second);
        }
    }

    void place(int o, int j) {
        owner[o] = j;
        bundle_size[j] += 1;
        for (int i = 0; i < n; ++i) {
            int c = profile.class_of(i, o);
            counts[i][j][c] += 1;
            remaining[i][c] -= 1;
        }
    }

    void unplace(int o, int j) {
        owner[o] = -1;
        bundle_size[j] -= 1;
        for (int i = 0; i < n; ++i) {
            int c = profile.class_of(i, o);
            counts[i][j][c] -= 1;
            remaining[i][c] += 1;
        }
    }

    // A pair (i, j) is hopeless when agent j's already-committed prefix counts
    // beat everything agent i could still reach; remaining objects only ever
    // raise j's side, so no completion recovers.
    bool pair_hopeless(int i, int j) const {
        int k = profile.class_count(i);
        int own = 0, reach = 0, committed = 0;
        bool j_ge_everywhere = true, j_strict_somewhere = false;
        for (int c = 0; c < k; ++c) {
            own += counts[i][i][c];
            reach += counts[i][i][c] + remaining[i][c];
            committed += counts[i][j][c];
            if (notion == NotionTag::SdEf) {
                if (reach < committed)
                    return true;
            } else {
                if (committed < reach)
                    j_ge_everywhere = false;
                if (committed > reach)
                    j_strict_somewhere = true;
            }
        }
        if (notion == NotionTag::SdEf)
            return false;
        (void)own;
        return j_ge_everywhere && j_strict_somewhere;
    }

    bool prune() const {
        for (int i = 0; i < n; ++i) {
            if (!constrained[i])
                continue;
            for (int j = 0; j < n; ++j)
                if (i != j && pair_hopeless(i, j))
                    return true;
        }
        return false;
    }

    bool leaf_ok() {
        for (int i = 0; i < n; ++i) {
            if (!constrained[i])
                continue;
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                int k = profile.class_count(i);
                int own = 0, other = 0;
                bool own_ge = true, other_ge = true;
                for (int c = 0; c < k; ++c) {
                    own += counts[i][i][c];
                    other += counts[i][j][c];
                    if (own < other)
                        own_ge = false;
                    if (other < own)
                        other_ge = false;
                }
                if (notion == NotionTag::SdEf && !own_ge)
                    return false;
                if (notion != NotionTag::SdEf && other_ge && !own_ge)
                    return false; // strictly dominated: kills weak and possible EF
            }
            if (notion == NotionTag::PossibleEf && !possible_ef_ok(i))
                return false;
        }
        return true;
    }

    bool possible_ef_ok(int i) {
        std::vector<int> key;
        key.push_back(i);
        for (int j = 0; j < n; ++j)
            for (int c : counts[i][j])
                key.push_back(c);
        auto it = possible_ef_memo.find(key);
        if (it != possible_ef_memo.end())
            return it->second;
        Assignment a(profile, owner);
        bool ok = possible_ef_witness(profile, a, i).has_value();
        possible_ef_memo.emplace(std::move(key), ok);
        return ok;
    }

    std::optional<Assignment> run(int next_object) {
        if (++nodes > budget)
            fail(Errc::BudgetExceeded, "search budget exhausted; verdict unknown");
        if (next_object == m) {
            if (leaf_ok())
                return Assignment(profile, owner);
            return std::nullopt;
        }
        for (int j = 0; j < n; ++j) {
            // empty agents with identical preferences are interchangeable
            bool skip = false;
            for (int j2 = 0; j2 < j && !skip; ++j2)
                skip = bundle_size[j] == 0 && bundle_size[j2] == 0 &&
                       pref_group[j2] == pref_group[j];
            if (skip)
                continue;
            place(next_object, j);
            if (!prune())
                if (auto found = run(next_object + 1))
                    return found;
            unplace(next_object, j);
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<Assignment> exists_ef_exact_for(const Profile& profile, NotionTag notion,
                                              const std::vector<bool>& constrained, long budget) {
    if (notion != NotionTag::SdEf && notion != NotionTag::WeakSdEf &&
        notion != NotionTag::PossibleEf)
        fail(Errc::UnsupportedNotion, "exact search covers the envy notions only");
    EfSearch search(profile, notion, constrained, budget);
    return search.run(0);
}

std::optional<Assignment> exists_ef_exact(const Profile& profile, NotionTag notion, long budget) {
    return exists_ef_exact_for(profile, notion, std::vector<bool>(profile.agent_count(), true),
                               budget);
}

std::optional<Assignment> exists_ef(const Profile& profile, NotionTag notion, long budget) {
    if (profile.agent_count() == 2) {
        if (notion == NotionTag::SdEf)
            return exists_sd_ef_two_agents(profile);
        return exists_weak_or_possible_ef_two_agents(profile, notion);
    }
    if (notion == NotionTag::SdEf && profile.identical_prefs())
        return exists_sd_ef_identical(profile);
    if (notion == NotionTag::PossibleEf && profile.strict())
        return exists_possible_ef_strict(profile);
    return exists_ef_exact(profile, notion, budget);
}

} // namespace fairdiv
