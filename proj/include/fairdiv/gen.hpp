#ifndef FAIRDIV_GEN_HPP
#define FAIRDIV_GEN_HPP

#include <cstdint>
#include <optional>

#include "fairdiv/model.hpp"

namespace fairdiv {

struct GenOptions {
    std::uint64_t seed = 0;
    int agents = 2;
    int objects = 4;
    bool strict = false;
    Rational tie_prob = Rational(1, 2); // chance two adjacent ranks merge
    bool entitled = false;
};

struct Generated {
    Profile profile;
    std::optional<Entitlements> entitlements;
};

/// Deterministic pseudo-random profile: per agent a shuffled object order cut
/// into classes by independent tie events. Bit-reproducible across runs and
/// platforms (own splitmix64, no std distribution machinery).
Generated gen_profile(const GenOptions& options);

} // namespace fairdiv

#endif
