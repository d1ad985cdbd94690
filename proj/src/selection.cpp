#include "fairdiv/selection.hpp"

#include <algorithm>

#include "fairdiv/prop_solver.hpp"
#include "fairdiv/weakprop_solver.hpp"

namespace fairdiv {

std::optional<Assignment> exists_for_subset(const Profile& profile, const FairnessNotion& notion,
                                            const std::vector<bool>& in_set, long budget) {
    if (static_cast<int>(in_set.size()) != profile.agent_count())
        fail(Errc::InvalidParams, "subset flags must cover every agent");
    switch (notion.tag()) {
    case NotionTag::SdProp:
    case NotionTag::AlphaProp:
        return exists_sd_proportional_for(profile, notion.shares(profile), in_set).assignment;
    case NotionTag::WeakSdProp:
    case NotionTag::BetaWeakProp:
        return exists_weak_sd_prop_for(profile, notion.shares(profile), in_set,
                                       WeakPropMode::Closed)
            .assignment;
    case NotionTag::SdEf:
    case NotionTag::WeakSdEf:
    case NotionTag::PossibleEf:
        return exists_ef_exact_for(profile, notion.tag(), in_set, budget);
    }
    fail(Errc::UnsupportedNotion, "bad notion tag");
}

std::optional<Assignment> exists_for_subset(const Profile& profile, const FairnessNotion& notion,
                                            const std::vector<int>& agents, long budget) {
    std::vector<bool> in_set(profile.agent_count(), false);
    for (int a : agents) {
        if (a < 0 || a >= profile.agent_count())
            fail(Errc::UnknownAgent, "subset agent index out of range");
        in_set[a] = true;
    }
    return exists_for_subset(profile, notion, in_set, budget);
}

FairSetResult maximal_fair_set(const Profile& profile, const FairnessNotion& notion, long budget) {
    int n = profile.agent_count();
    std::vector<bool> in_set(n, false);
    std::optional<Assignment> witness;
    for (int j = 0; j < n; ++j) {
        in_set[j] = true;
        if (auto attempt = exists_for_subset(profile, notion, in_set, budget))
            witness = std::move(attempt);
        else
            in_set[j] = false;
    }
    if (!witness)
        witness = exists_for_subset(profile, notion, in_set, budget); // empty set is feasible
    FairSetResult result;
    result.assignment = std::move(*witness);
    for (int j = 0; j < n; ++j)
        if (in_set[j])
            result.agents.push_back(j);
    return result;
}

FairSetResult maximum_fair_set(const Profile& profile, const FairnessNotion& notion, long budget) {
    int n = profile.agent_count();
    if (n > 20)
        fail(Errc::BudgetExceeded, "subset enumeration limited to 20 agents");
    // Subsets in descending popcount, lexicographically smallest index set
    // first inside each size; the first feasible one wins.
    std::vector<std::vector<int>> by_size(n + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        by_size[__builtin_popcount(mask)].push_back(static_cast<int>(mask));
    for (int size = n; size >= 0; --size) {
        std::sort(by_size[size].begin(), by_size[size].end(), [n](int a, int b) {
            // smaller lowest set bits first = lexicographically smaller index list
            std::vector<int> la, lb;
            for (int i = 0; i < n; ++i) {
                if (a & (1 << i))
                    la.push_back(i);
                if (b & (1 << i))
                    lb.push_back(i);
            }
            return la < lb;
        });
        for (int mask : by_size[size]) {
            std::vector<bool> in_set(n, false);
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i))
                    in_set[i] = true;
            if (auto witness = exists_for_subset(profile, notion, in_set, budget)) {
                FairSetResult result;
                result.assignment = std::move(*witness);
                for (int i = 0; i < n; ++i)
                    if (in_set[i])
                        result.agents.push_back(i);
                return result;
            }
        }
    }
    fail(Errc::InvalidParams, "unreachable: the empty set is always feasible");
}

} // namespace fairdiv
