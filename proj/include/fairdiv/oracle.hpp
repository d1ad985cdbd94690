#ifndef FAIRDIV_ORACLE_HPP
#define FAIRDIV_ORACLE_HPP

#include <optional>

#include "fairdiv/model.hpp"

namespace fairdiv {

inline constexpr long kDefaultOracleBudget = 10'000'000;

/// Streams every complete assignment exactly once in base-n counter order
/// (object 0 is the least significant digit). Construction throws
/// BudgetExceeded when n^m exceeds the budget.
class AssignmentEnumerator {
public:
    explicit AssignmentEnumerator(const Profile& profile, long budget = kDefaultOracleBudget);

    std::optional<Assignment> next();
    long total() const { return total_; }

private:
    const Profile& profile_;
    std::vector<int> owner_;
    long total_;
    bool exhausted_ = false;
    bool started_ = false;
};

/// n^m, guarded by the budget.
long assignment_count(const Profile& profile, long budget = kDefaultOracleBudget);

// The oracle re-implements every fairness predicate straight from the
// definitions (plain prefix-count loops, and an exact phase-1 simplex over
// utility gaps for possible envy-freeness). It never touches the solver or
// verifier code paths, so agreement between the two is meaningful evidence.

/// Does `agent` satisfy the per-agent condition of `notion` under `assignment`?
bool oracle_satisfies(const Profile& profile, const Assignment& assignment,
                      const FairnessNotion& notion, int agent);

bool oracle_holds(const Profile& profile, const Assignment& assignment,
                  const FairnessNotion& notion);

/// Some enumerated assignment satisfies the notion for all agents.
bool oracle_exists(const Profile& profile, const FairnessNotion& notion,
                   long budget = kDefaultOracleBudget);

/// Smallest alpha this assignment is 1/alpha-proportional for (nullopt = none
/// finite): the max over agents and prefixes of prefix_size / count.
std::optional<Rational> assignment_alpha_threshold(const Profile& profile,
                                                   const Assignment& assignment);

/// Per-assignment weak-proportionality threshold: the least beta bound, open
/// unless the bundle matches the reference exactly (then feasible at the
/// value itself).
struct BetaThreshold {
    std::optional<Rational> value; // nullopt = infinite
    bool closed = false;
};
BetaThreshold assignment_beta_threshold(const Profile& profile, const Assignment& assignment);

/// Exhaustive optima over all assignments.
std::optional<Rational> oracle_optimal_alpha(const Profile& profile,
                                             long budget = kDefaultOracleBudget);
struct OracleBetaResult {
    std::optional<Rational> beta_star;
    bool attained = true;
};
OracleBetaResult oracle_optimal_beta(const Profile& profile, long budget = kDefaultOracleBudget);

/// Exhaustive Pareto-domination test (independent of the trading-cycle path).
bool oracle_is_pareto_optimal(const Profile& profile, const Assignment& assignment,
                              long budget = kDefaultOracleBudget);

} // namespace fairdiv

#endif
