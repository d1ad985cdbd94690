#ifndef FAIRDIV_SELECTION_HPP
#define FAIRDIV_SELECTION_HPP

#include <optional>
#include <vector>

#include "fairdiv/ef_solver.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv {

/// Existence of an assignment satisfying `notion` for exactly the agents in
/// S (everyone else is unconstrained). Proportionality notions keep their
/// b-matching with lower bounds only on S; agents outside S become absorber
/// vertices. Envy notions run the exact search with envy constraints
/// restricted to viewing agents in S. Removing an agent from S never shrinks
/// the feasible set, which is what makes the greedy maximal loop sound.
std::optional<Assignment> exists_for_subset(const Profile& profile, const FairnessNotion& notion,
                                            const std::vector<bool>& in_set,
                                            long budget = kDefaultSearchBudget);
std::optional<Assignment> exists_for_subset(const Profile& profile, const FairnessNotion& notion,
                                            const std::vector<int>& agents,
                                            long budget = kDefaultSearchBudget);

struct FairSetResult {
    std::vector<int> agents; // ascending agent indices
    Assignment assignment;
};

/// Greedy inclusion-maximal set: agents joined in index order whenever the
/// grown set stays feasible. The result admits no feasible superset.
FairSetResult maximal_fair_set(const Profile& profile, const FairnessNotion& notion,
                               long budget = kDefaultSearchBudget);

/// Largest-cardinality feasible set over all 2^n subsets, ties broken by the
/// lexicographically smallest index set. Desk scale only.
FairSetResult maximum_fair_set(const Profile& profile, const FairnessNotion& notion,
                               long budget = kDefaultSearchBudget);

} // namespace fairdiv

#endif
