#include "fairdiv/gen.hpp"

#include <string>

namespace fairdiv {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) via rejection
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

} // namespace

Generated gen_profile(const GenOptions& options) {
    if (options.agents < 1 || options.objects < 0)
        fail(Errc::InvalidParams, "need agents >= 1 and objects >= 0");
    if (options.tie_prob.sgn() < 0 || options.tie_prob > Rational(1))
        fail(Errc::InvalidParams, "tie probability must lie in [0, 1]");
    if (!options.tie_prob.den().fits_ulong_p() || !options.tie_prob.num().fits_ulong_p())
        fail(Errc::InvalidParams, "tie probability is absurdly fine-grained");

    SplitMix64 rng(options.seed);
    int n = options.agents, m = options.objects;

    std::vector<ObjectId> objects;
    for (int o = 1; o <= m; ++o)
        objects.push_back("o" + std::to_string(o));

    std::uint64_t tie_num = options.tie_prob.num().get_ui();
    std::uint64_t tie_den = options.tie_prob.den().get_ui();

    std::vector<AgentPref> agents;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> order(m);
        for (int o = 0; o < m; ++o)
            order[o] = o;
        for (int o = m - 1; o > 0; --o)
            std::swap(order[o], order[rng.below(o + 1)]);

        AgentPref pref;
        pref.name = std::to_string(i);
        for (int pos = 0; pos < m; ++pos) {
            bool tie = false;
            if (pos > 0 && !options.strict && tie_num > 0)
                tie = rng.below(tie_den) < tie_num;
            if (!tie)
                pref.classes.emplace_back();
            pref.classes.back().push_back(objects[order[pos]]);
        }
        agents.push_back(std::move(pref));
    }

    Profile profile(std::move(objects), std::move(agents));
    std::optional<Entitlements> entitlements;
    if (options.entitled) {
        std::vector<Rational> weights;
        for (int i = 0; i < n; ++i)
            weights.push_back(Rational(1 + static_cast<long>(rng.below(5))));
        entitlements = Entitlements(profile, std::move(weights));
    }
    return {std::move(profile), std::move(entitlements)};
}

} // namespace fairdiv
