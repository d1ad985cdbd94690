#include "fairdiv/pareto.hpp"

#include <queue>

#include "fairdiv/prop_solver.hpp"
#include "fairdiv/weakprop_solver.hpp"

namespace fairdiv {

Assignment ClonedProblem::to_assignment(const Profile& profile) const {
    std::vector<int> owner(profile.object_count(), -1);
    for (const auto& [agent, object] : clones) {
        if (owner[object] != -1)
            fail(Errc::InvalidAssignment, "clone set allocates an object twice");
        owner[object] = agent;
    }
    return Assignment(profile, std::move(owner));
}

ClonedProblem clone(const Profile& profile, const Assignment& assignment) {
    if (static_cast<int>(assignment.owners().size()) != profile.object_count())
        fail(Errc::InvalidAssignment, "assignment does not match the profile");
    ClonedProblem cloned;
    for (int o = 0; o < profile.object_count(); ++o)
        cloned.clones.emplace_back(assignment.owner(o), o);
    return cloned;
}

namespace {

// Finds one improving trading cycle, reported as the object sequence
// o_0, o_1, ..., o_t (= o_0): the holder of o_s receives o_{s+1}. Strict
// edges are scanned in (from, to) index order; the path back runs over weak
// edges by BFS, so the rotating cycle is shortest for that strict edge.
std::optional<std::vector<int>> find_improving_cycle(const Profile& profile,
                                                     const std::vector<int>& owner) {
    int m = static_cast<int>(owner.size());
    auto cls = [&](int holder_of, int object) {
        return profile.class_of(owner[holder_of], object);
    };
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u == v || cls(u, v) >= cls(u, u))
                continue; // need a strictly preferred first hop
            std::vector<int> parent(m, -2);
            std::queue<int> q;
            parent[v] = -1;
            q.push(v);
            bool reached = false;
            while (!q.empty() && !reached) {
                int w = q.front();
                q.pop();
                for (int x = 0; x < m && !reached; ++x) {
                    if (x == w || parent[x] != -2)
                        continue;
                    if (cls(w, x) <= cls(w, w)) { // holder of w weakly prefers x
                        parent[x] = w;
                        if (x == u)
                            reached = true;
                        else
                            q.push(x);
                    }
                }
            }
            if (!reached)
                continue;
            std::vector<int> path; // u back to v via parents
            for (int x = u; x != -1; x = parent[x])
                path.push_back(x);
            std::vector<int> cycle;
            cycle.push_back(u);
            cycle.insert(cycle.end(), path.rbegin(), path.rend()); // v ... u
            return cycle;                                          // u v ... u
        }
    }
    return std::nullopt;
}

} // namespace

bool is_pareto_optimal(const Profile& profile, const Assignment& assignment) {
    clone(profile, assignment); // shape validation
    return !find_improving_cycle(profile, assignment.owners()).has_value();
}

Assignment pareto_improve(const Profile& profile, const Assignment& assignment) {
    std::vector<int> owner = Assignment(profile, assignment.owners()).owners();
    while (auto cycle = find_improving_cycle(profile, owner)) {
        // Rotate: holder of cycle[s] receives cycle[s+1].
        std::vector<int> updated = owner;
        for (std::size_t s = 0; s + 1 < cycle->size(); ++s)
            updated[(*cycle)[s + 1]] = owner[(*cycle)[s]];
        owner = std::move(updated);
    }
    return Assignment(profile, std::move(owner));
}

std::optional<Assignment> solve_fair_pareto(const Profile& profile, const FairnessNotion& notion) {
    std::optional<Assignment> fair;
    switch (notion.tag()) {
    case NotionTag::SdProp:
        fair = exists_sd_proportional(profile, notion.shares(profile)).assignment;
        break;
    case NotionTag::WeakSdProp:
        fair = exists_weak_sd_prop(profile, notion.shares(profile)).assignment;
        break;
    default:
        fail(Errc::UnsupportedNotion, "fair-and-pareto composition covers sd-prop and weak-sd-prop");
    }
    if (!fair)
        return std::nullopt;
    return pareto_improve(profile, *fair);
}

} // namespace fairdiv
