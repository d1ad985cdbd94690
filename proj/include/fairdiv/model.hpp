#ifndef FAIRDIV_MODEL_HPP
#define FAIRDIV_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

using ObjectId = std::string;

/// One agent's ordinal preferences: equivalence classes from most to least
/// preferred. The classes must partition the profile's object set.
struct AgentPref {
    std::string name;
    std::vector<std::vector<ObjectId>> classes;
};

/// An assignment problem: agents with weak orders over a common object set.
/// Construction validates all invariants (unique ids, classes partition the
/// object set) and precomputes the per-agent class index of every object.
/// Immutable afterwards; cheap to copy and safe to share across threads.
class Profile {
public:
    Profile(std::vector<ObjectId> objects, std::vector<AgentPref> agents);

    int agent_count() const { return static_cast<int>(agents_.size()); }
    int object_count() const { return static_cast<int>(objects_.size()); }

    const std::vector<ObjectId>& objects() const { return objects_; }
    const std::vector<AgentPref>& agents() const { return agents_; }
    const std::string& agent_name(int agent) const { return agents_[agent].name; }

    int object_index(const ObjectId& id) const; // throws UnknownObject
    int agent_index(const std::string& name) const; // throws UnknownAgent

    /// Number of equivalence classes of `agent` (k_i; 0 when there are no objects).
    int class_count(int agent) const { return static_cast<int>(class_sizes_[agent].size()); }
    /// 0-based class of `object` in `agent`'s order (0 = most preferred).
    int class_of(int agent, int object) const { return class_of_[agent][object]; }
    int class_size(int agent, int cls) const { return class_sizes_[agent][cls]; }
    /// |E^1 ∪ … ∪ E^{cls+1}|, the prefix size at class boundary `cls`.
    int prefix_size(int agent, int cls) const { return prefix_sizes_[agent][cls]; }

    bool strict(int agent) const;
    bool strict() const;
    bool identical_prefs() const;

private:
    std::vector<ObjectId> objects_;
    std::vector<AgentPref> agents_;
    std::unordered_map<ObjectId, int> object_index_;
    std::unordered_map<std::string, int> agent_index_;
    std::vector<std::vector<int>> class_of_;     // [agent][object] -> class
    std::vector<std::vector<int>> class_sizes_;  // [agent][class]
    std::vector<std::vector<int>> prefix_sizes_; // [agent][class], cumulative
};

/// Throws unless all Profile invariants hold. Profile's constructor runs the
/// same checks; this is the standalone entry point for external callers.
void validate_profile(const std::vector<ObjectId>& objects, const std::vector<AgentPref>& agents);

/// Complete partition of the objects among the agents, stored as an
/// object -> agent index map. Empty bundles are legal.
class Assignment {
public:
    Assignment() = default;
    Assignment(const Profile& profile, std::vector<int> owner);

    /// Builds from named bundles, validating the partition. Throws
    /// InvalidAssignment / UnknownAgent / UnknownObject.
    static Assignment from_bundles(const Profile& profile,
                                   const std::map<std::string, std::vector<ObjectId>>& bundles);

    int owner(int object) const { return owner_[object]; }
    const std::vector<int>& owners() const { return owner_; }

    /// Object indices held by `agent`, ascending.
    std::vector<int> bundle(int agent) const;
    std::vector<std::vector<int>> bundles(int agent_count) const;

    friend bool operator==(const Assignment& a, const Assignment& b) { return a.owner_ == b.owner_; }

private:
    std::vector<int> owner_;
};

/// Positive per-agent weights; agent i's share of the reference vector is
/// e_i / sum_j e_j. Normalization happens at share time, never in storage.
class Entitlements {
public:
    Entitlements(const Profile& profile, std::vector<Rational> weights);
    static Entitlements from_map(const Profile& profile,
                                 const std::map<std::string, Rational>& weights);

    const Rational& weight(int agent) const { return weights_[agent]; }
    Rational share(int agent) const;
    std::vector<Rational> shares() const;

private:
    std::vector<Rational> weights_;
};

/// Equal shares (1/n, ..., 1/n).
std::vector<Rational> uniform_shares(int agent_count);

enum class NotionTag {
    SdEf,
    WeakSdEf,
    PossibleEf,
    SdProp,
    WeakSdProp,
    AlphaProp,
    BetaWeakProp,
};

/// A fairness notion with its parameter payload. Aliases from the literature
/// (necessary/possible proportionality, completion envy-freeness) canonicalize
/// onto these seven tags at parse time.
class FairnessNotion {
public:
    explicit FairnessNotion(NotionTag tag) : tag_(tag) {}
    FairnessNotion(NotionTag tag, Rational param);

    static FairnessNotion sd_ef() { return FairnessNotion(NotionTag::SdEf); }
    static FairnessNotion weak_sd_ef() { return FairnessNotion(NotionTag::WeakSdEf); }
    static FairnessNotion possible_ef() { return FairnessNotion(NotionTag::PossibleEf); }
    static FairnessNotion sd_prop() { return FairnessNotion(NotionTag::SdProp); }
    static FairnessNotion weak_sd_prop() { return FairnessNotion(NotionTag::WeakSdProp); }
    static FairnessNotion alpha_prop(Rational alpha) {
        return FairnessNotion(NotionTag::AlphaProp, std::move(alpha));
    }
    static FairnessNotion beta_weak_prop(Rational beta) {
        return FairnessNotion(NotionTag::BetaWeakProp, std::move(beta));
    }

    /// Accepts canonical names (sd-ef, weak-sd-ef, possible-ef, sd-prop,
    /// weak-sd-prop, alpha-prop, beta-weak-prop) and the literature aliases
    /// necessary-prop, possible-prop, necessary-ef, necessary-completion-ef,
    /// possible-completion-ef.
    static NotionTag parse_tag(const std::string& name);
    static std::string canonical_name(NotionTag tag);

    NotionTag tag() const { return tag_; }
    const Rational& param() const { return param_; }
    std::string name() const { return canonical_name(tag_); }

    bool is_proportionality() const;
    bool is_envy() const { return !is_proportionality(); }

    FairnessNotion with_entitlements(Entitlements e) const;
    const std::optional<Entitlements>& entitlements() const { return entitlements_; }

    /// Reference share for each agent: 1/n by default, e_i/sum e with
    /// entitlements, 1/alpha or 1/beta for the parameterized tags.
    std::vector<Rational> shares(const Profile& profile) const;

private:
    NotionTag tag_;
    Rational param_{0};
    std::optional<Entitlements> entitlements_;
};

} // namespace fairdiv

#endif
