#ifndef FAIRDIV_VERIFY_HPP
#define FAIRDIV_VERIFY_HPP

#include <optional>
#include <vector>

#include "fairdiv/model.hpp"
#include "fairdiv/sd.hpp"

namespace fairdiv {

struct AgentVerdict {
    bool ok = true;
    std::optional<int> violated_prefix;              // 1-based prefix where the share test fails
    std::optional<int> envied_agent;                 // agent index for envy notions
    std::optional<std::vector<Rational>> witness;    // possible-ef utilities, one per class
};

struct Verdict {
    bool satisfied = true;
    std::vector<AgentVerdict> agents;
};

/// Decides whether `assignment` satisfies `notion` for `profile`, with
/// per-agent diagnostics. Exact rational arithmetic throughout.
Verdict verify(const Profile& profile, const Assignment& assignment, const FairnessNotion& notion);

/// Consistent utilities (one value per equivalence class, strictly decreasing
/// and positive) under which `agent` envies nobody, or nullopt iff none exist.
/// The envy constraints are homogeneous in u, so the strict chain is solved as
/// {u_l - u_{l+1} >= 1, u_k >= 1} by exact Fourier-Motzkin elimination; any
/// returned vector is re-checked by substitution before being handed out.
std::optional<std::vector<Rational>> possible_ef_witness(const Profile& profile,
                                                         const Assignment& assignment, int agent);

} // namespace fairdiv

#endif
