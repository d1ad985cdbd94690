#ifndef FAIRDIV_SD_HPP
#define FAIRDIV_SD_HPP

#include <span>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// Cumulative bundle counts at each class boundary of one agent's order:
/// counts[l] = |bundle ∩ (E^1 ∪ … ∪ E^{l+1})|, sizes[l] = |E^1 ∪ … ∪ E^{l+1}|.
/// Evaluating the SD sums only at class boundaries is exact: within a class
/// both the count and any constant reference mass vary linearly.
struct PrefixCounts {
    std::vector<int> counts;
    std::vector<int> sizes;
};

enum class SdOrdering { FirstStrict, Equal, SecondStrict, Incomparable };

const char* to_string(SdOrdering ord);

PrefixCounts prefix_counts(const Profile& profile, int agent, std::span<const int> bundle);

/// Four-way SD comparison of two bundles in `agent`'s preference order.
SdOrdering sd_compare(const Profile& profile, int agent, std::span<const int> bundle_a,
                      std::span<const int> bundle_b);

/// Compares `bundle` against the constant reference vector (share, ..., share):
/// FirstStrict/Equal mean the bundle weakly SD-dominates the reference.
SdOrdering sd_vs_share(const Profile& profile, int agent, std::span<const int> bundle,
                       const Rational& share);

/// Responsive-set-extension test: true iff some injection maps every object of
/// `bundle_b` to a weakly better object of `bundle_a`. Decided by bipartite
/// matching; equivalent to sd_compare(a, b) being FirstStrict or Equal.
bool rs_weakly_prefers(const Profile& profile, int agent, std::span<const int> bundle_a,
                       std::span<const int> bundle_b);

inline bool weakly_dominates(SdOrdering ord) {
    return ord == SdOrdering::FirstStrict || ord == SdOrdering::Equal;
}

} // namespace fairdiv

#endif
