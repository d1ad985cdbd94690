#ifndef FAIRDIV_EF_SOLVER_HPP
#define FAIRDIV_EF_SOLVER_HPP

#include <optional>

#include "fairdiv/model.hpp"

namespace fairdiv {

inline constexpr long kDefaultSearchBudget = 10'000'000;

/// Two agents: SD proportionality and SD envy-freeness coincide, so this
/// delegates to the proportionality b-matching. Throws WrongAgentCount.
std::optional<Assignment> exists_sd_ef_two_agents(const Profile& profile);

/// Two agents: weak SD envy-freeness, possible envy-freeness and weak SD
/// proportionality all coincide; delegates to the weak-prop solver.
std::optional<Assignment> exists_weak_or_possible_ef_two_agents(const Profile& profile,
                                                                NotionTag notion);

/// Identical preferences: an SD envy-free assignment exists iff n divides
/// every class size; deals each class round-robin. Throws NotIdentical.
std::optional<Assignment> exists_sd_ef_identical(const Profile& profile);

/// Strict preferences, linear time: with k distinct top objects, possible
/// envy-freeness is achievable iff m >= 2n - k; constructs via top handout,
/// then an ascending and a descending claiming pass over the unserved agents,
/// leftovers to the final claimant. Throws NotStrict.
std::optional<Assignment> exists_possible_ef_strict(const Profile& profile);

/// Exact backtracking search over object-by-object allocation with
/// empty-bundle symmetry breaking and sound SD pruning (a branch is cut only
/// when a violation is provable for every completion). Throws BudgetExceeded
/// once the node budget runs out; a normal return is an exact verdict.
std::optional<Assignment> exists_ef_exact(const Profile& profile, NotionTag notion,
                                          long budget = kDefaultSearchBudget);

/// Same search with the envy constraints restricted to viewing agents i with
/// constrained[i]; the backbone of maximal/maximum selection.
std::optional<Assignment> exists_ef_exact_for(const Profile& profile, NotionTag notion,
                                              const std::vector<bool>& constrained,
                                              long budget = kDefaultSearchBudget);

/// Route picker: the cheapest complete method available for the profile
/// (two-agent reductions, identical or strict special cases, else the exact
/// search). Used by the command layer.
std::optional<Assignment> exists_ef(const Profile& profile, NotionTag notion,
                                    long budget = kDefaultSearchBudget);

} // namespace fairdiv

#endif
