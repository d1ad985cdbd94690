#include "fairdiv/sd.hpp"

#include "fairdiv/matching.hpp"

namespace fairdiv {

const char* to_string(SdOrdering ord) {
    switch (ord) {
    case SdOrdering::FirstStrict: return "first-strict";
    case SdOrdering::Equal: return "equal";
    case SdOrdering::SecondStrict: return "second-strict";
    case SdOrdering::Incomparable: return "incomparable";
    }
    return "?";
}

PrefixCounts prefix_counts(const Profile& profile, int agent, std::span<const int> bundle) {
    int k = profile.class_count(agent);
    PrefixCounts pc;
    pc.counts.assign(k, 0);
    pc.sizes.resize(k);
    for (int c = 0; c < k; ++c)
        pc.sizes[c] = profile.prefix_size(agent, c);
    for (int o : bundle) {
        if (o < 0 || o >= profile.object_count())
            fail(Errc::UnknownObject, "bundle object index out of range");
        pc.counts[profile.class_of(agent, o)] += 1;
    }
    for (int c = 1; c < k; ++c)
        pc.counts[c] += pc.counts[c - 1];
    return pc;
}

namespace {

SdOrdering classify(bool a_ge_everywhere, bool b_ge_everywhere) {
    if (a_ge_everywhere && b_ge_everywhere)
        return SdOrdering::Equal;
    if (a_ge_everywhere)
        return SdOrdering::FirstStrict;
    if (b_ge_everywhere)
        return SdOrdering::SecondStrict;
    return SdOrdering::Incomparable;
}

} // namespace

SdOrdering sd_compare(const Profile& profile, int agent, std::span<const int> bundle_a,
                      std::span<const int> bundle_b) {
    PrefixCounts a = prefix_counts(profile, agent, bundle_a);
    PrefixCounts b = prefix_counts(profile, agent, bundle_b);
    bool a_ge = true, b_ge = true;
    for (std::size_t l = 0; l < a.counts.size(); ++l) {
        if (a.counts[l] < b.counts[l])
            a_ge = false;
        if (b.counts[l] < a.counts[l])
            b_ge = false;
    }
    return classify(a_ge, b_ge);
}

SdOrdering sd_vs_share(const Profile& profile, int agent, std::span<const int> bundle,
                       const Rational& share) {
    PrefixCounts pc = prefix_counts(profile, agent, bundle);
    bool bundle_ge = true, ref_ge = true;
    for (std::size_t l = 0; l < pc.counts.size(); ++l) {
        Rational count(pc.counts[l]);
        Rational mass = share * Rational(pc.sizes[l]);
        if (count < mass)
            bundle_ge = false;
        if (mass < count)
            ref_ge = false;
    }
    return classify(bundle_ge, ref_ge);
}

bool rs_weakly_prefers(const Profile& profile, int agent, std::span<const int> bundle_a,
                       std::span<const int> bundle_b) {
    // Saturating-matching test: left side is bundle_b, right side bundle_a,
    // edge when the right object is weakly preferred.
    for (int o : bundle_b)
        if (o < 0 || o >= profile.object_count())
            fail(Errc::UnknownObject, "bundle object index out of range");
    for (int o : bundle_a)
        if (o < 0 || o >= profile.object_count())
            fail(Errc::UnknownObject, "bundle object index out of range");
    BipartiteGraph g(static_cast<int>(bundle_b.size()), static_cast<int>(bundle_a.size()));
    for (std::size_t i = 0; i < bundle_b.size(); ++i)
        for (std::size_t j = 0; j < bundle_a.size(); ++j)
            if (profile.class_of(agent, bundle_a[j]) <= profile.class_of(agent, bundle_b[i]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return max_cardinality_matching(g).size == static_cast<int>(bundle_b.size());
}

} // namespace fairdiv
