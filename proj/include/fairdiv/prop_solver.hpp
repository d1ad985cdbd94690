#ifndef FAIRDIV_PROP_SOLVER_HPP
#define FAIRDIV_PROP_SOLVER_HPP

#include <optional>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

struct PropResult {
    std::optional<Assignment> assignment;
    bool exists() const { return assignment.has_value(); }
};

struct OptimalPropResult {
    std::optional<Rational> alpha_star; // nullopt = infinite
    Assignment assignment;
    std::vector<Rational> candidates; // the grid that was examined, ascending
};

/// Existence/construction of an assignment where every agent's bundle weakly
/// SD-dominates the constant reference vector (share_i, ..., share_i).
/// Realized by a bipartite b-matching with lower bounds: one vertex per
/// agent-class prefix with cumulative ceiling bounds, objects bound to exactly
/// one. With uniform shares 1/n this is SD proportionality and fails fast when
/// n does not divide m.
PropResult exists_sd_proportional(const Profile& profile, const std::vector<Rational>& shares);
PropResult exists_sd_proportional(const Profile& profile); // uniform 1/n shares

/// Subset-restricted variant: lower bounds only for agents with
/// constrained[i]; the rest become unconstrained absorbers.
PropResult exists_sd_proportional_for(const Profile& profile, const std::vector<Rational>& shares,
                                      const std::vector<bool>& constrained);

/// True iff some assignment hands every agent one of its top-class objects;
/// exactly the condition for a finite optimal alpha.
bool alpha_finite(const Profile& profile);

/// Smallest alpha whose 1/alpha-proportional assignment exists, found by
/// scanning the candidate grid {prefix_size / (l+1)} ascending. Feasibility is
/// monotone in alpha, so the first feasible candidate is optimal.
OptimalPropResult optimal_proportional(const Profile& profile);

/// Deterministic fallback assignment (object t to agent t mod n).
Assignment round_robin_assignment(const Profile& profile);

} // namespace fairdiv

#endif
