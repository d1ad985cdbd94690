#ifndef FAIRDIV_PARETO_HPP
#define FAIRDIV_PARETO_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// Single-object companion problem: one clone per allocated object, carrying
/// its original agent's preferences and owning exactly that object. Multi-
/// object Pareto reasoning reduces to trading cycles among the clones, and
/// decloning (union per original agent) reproduces a valid assignment.
struct ClonedProblem {
    std::vector<std::pair<int, int>> clones; // (agent index, owned object index)

    Assignment to_assignment(const Profile& profile) const;
};

ClonedProblem clone(const Profile& profile, const Assignment& assignment);

/// True iff no trading cycle among the clones uses a strictly-preferred edge:
/// in the directed graph where each held object points to every object its
/// holder weakly prefers, a cycle with one strict edge is exactly a Pareto
/// improvement of the single-object problem, hence of the original.
bool is_pareto_optimal(const Profile& profile, const Assignment& assignment);

/// Rotates improving cycles until none remain (lowest-index strict edge
/// first, shortest cycle back via BFS). Every rotation strictly lowers the
/// total rank of held objects and never raises any clone's rank, so this
/// terminates; the output SD-weakly dominates the input for every agent.
Assignment pareto_improve(const Profile& profile, const Assignment& assignment);

/// Fairness existence composed with Pareto improvement; supports sd-prop and
/// weak-sd-prop (optionally entitled). A Pareto improvement preserves both.
std::optional<Assignment> solve_fair_pareto(const Profile& profile, const FairnessNotion& notion);

} // namespace fairdiv

#endif
