#ifndef FAIRDIV_WEAKPROP_SOLVER_HPP
#define FAIRDIV_WEAKPROP_SOLVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

struct WeakPropResult {
    std::optional<Assignment> assignment;
    bool exists() const { return assignment.has_value(); }
};

struct OptimalWeakPropResult {
    std::optional<Rational> beta_star; // nullopt = infinite
    bool attained = true;              // whether some assignment works at beta_star itself
    Assignment assignment;             // witness at beta_star, or for every beta > beta_star
};

/// How the per-agent strict prefix condition count > share * prefix_size is
/// turned into an integer lower bound. Closed uses floor+1 (the condition at
/// beta exactly); Limit uses ceil, which characterizes feasibility for every
/// beta slightly above the grid point. Limit mode is what makes a structural
/// beta-minus-epsilon possible with no numeric epsilon anywhere.
enum class WeakPropMode { Closed, Limit };

/// Condition-combination solver: each agent must either beat its reference
/// share strictly at some class prefix, or match it exactly on every class
/// (the latter only when share * |class| is integral throughout). Every
/// strict-prefix agent also gets a zero-lower-bound absorber vertex so
/// surplus objects can always land somewhere; extra objects never invalidate
/// a strict prefix condition. Intended for a constant number of agents.
WeakPropResult exists_weak_sd_prop(const Profile& profile, const std::vector<Rational>& shares);
WeakPropResult exists_weak_sd_prop(const Profile& profile); // uniform 1/n

/// Subset-restricted and mode-selectable variant used by optimal-beta search
/// and maximal/maximum selection.
WeakPropResult exists_weak_sd_prop_for(const Profile& profile, const std::vector<Rational>& shares,
                                       const std::vector<bool>& constrained, WeakPropMode mode);

/// Strict-preference characterization: NotExists when m < n; for m = n a
/// perfect matching avoiding each agent's least preferred object; for m > n the
/// double-ended picking sequence 1..n, n..1 with leftovers appended to the
/// final picker. Throws NotStrict on profiles with ties.
WeakPropResult exists_weak_sd_prop_strict(const Profile& profile);

/// Infimum beta admitting a 1/beta weak proportional assignment, with
/// attainment flag, scanned over the exact candidate grid
/// {a/b : a > b} + {prefix_size/(l+1)} + {1}. Intended for constant n.
OptimalWeakPropResult optimal_weak_proportional(const Profile& profile);

/// For n = m and strict preferences: smallest r such that every agent can
/// receive one of its top-r objects (perfect matching test), plus a witness.
std::pair<int, Assignment> maximin_assignment(const Profile& profile);

} // namespace fairdiv

#endif
