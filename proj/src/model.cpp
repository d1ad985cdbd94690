#include "fairdiv/model.hpp"

#include <algorithm>
#include <set>

namespace fairdiv {

void validate_profile(const std::vector<ObjectId>& objects, const std::vector<AgentPref>& agents) {
    if (agents.empty())
        fail(Errc::InvalidParams, "a profile needs at least one agent");
    std::set<ObjectId> object_set;
    for (const auto& o : objects) {
        if (!object_set.insert(o).second)
            fail(Errc::DuplicateObject, "duplicate object id '" + o + "'");
    }
    std::set<std::string> agent_names;
    for (const auto& a : agents) {
        if (!agent_names.insert(a.name).second)
            fail(Errc::DuplicateAgent, "duplicate agent name '" + a.name + "'");
        std::set<ObjectId> seen;
        for (const auto& cls : a.classes) {
            if (cls.empty())
                fail(Errc::ClassesNotPartition, "agent '" + a.name + "' has an empty class");
            for (const auto& o : cls) {
                if (!object_set.count(o))
                    fail(Errc::ClassesNotPartition,
                         "agent '" + a.name + "' ranks unknown object '" + o + "'");
                if (!seen.insert(o).second)
                    fail(Errc::ClassesNotPartition,
                         "agent '" + a.name + "' ranks object '" + o + "' twice");
            }
        }
        if (seen.size() != object_set.size()) {
            for (const auto& o : objects)
                if (!seen.count(o))
                    fail(Errc::ClassesNotPartition,
                         "agent '" + a.name + "' does not rank object '" + o + "'");
        }
    }
}

Profile::Profile(std::vector<ObjectId> objects, std::vector<AgentPref> agents)
    : objects_(std::move(objects)), agents_(std::move(agents)) {
    validate_profile(objects_, agents_);
    for (int o = 0; o < object_count(); ++o)
        object_index_[objects_[o]] = o;
    for (int i = 0; i < agent_count(); ++i)
        agent_index_[agents_[i].name] = i;

    class_of_.assign(agent_count(), std::vector<int>(object_count(), -1));
    class_sizes_.resize(agent_count());
    prefix_sizes_.resize(agent_count());
    for (int i = 0; i < agent_count(); ++i) {
        int prefix = 0;
        for (int c = 0; c < static_cast<int>(agents_[i].classes.size()); ++c) {
            const auto& cls = agents_[i].classes[c];
            for (const auto& id : cls)
                class_of_[i][object_index_.at(id)] = c;
            prefix += static_cast<int>(cls.size());
            class_sizes_[i].push_back(static_cast<int>(cls.size()));
            prefix_sizes_[i].push_back(prefix);
        }
    }
}

int Profile::object_index(const ObjectId& id) const {
    auto it = object_index_.find(id);
    if (it == object_index_.end())
        fail(Errc::UnknownObject, "unknown object '" + id + "'");
    return it->second;
}

int Profile::agent_index(const std::string& name) const {
    auto it = agent_index_.find(name);
    if (it == agent_index_.end())
        fail(Errc::UnknownAgent, "unknown agent '" + name + "'");
    return it->second;
}

bool Profile::strict(int agent) const {
    for (int size : class_sizes_[agent])
        if (size != 1)
            return false;
    return true;
}

bool Profile::strict() const {
    for (int i = 0; i < agent_count(); ++i)
        if (!strict(i))
            return false;
    return true;
}

bool Profile::identical_prefs() const {
    for (int i = 1; i < agent_count(); ++i)
        if (class_of_[i] != class_of_[0])
            return false;
    return true;
}

Assignment::Assignment(const Profile& profile, std::vector<int> owner) : owner_(std::move(owner)) {
    if (static_cast<int>(owner_.size()) != profile.object_count())
        fail(Errc::InvalidAssignment, "owner vector does not cover the object set");
    for (int a : owner_)
        if (a < 0 || a >= profile.agent_count())
            fail(Errc::InvalidAssignment, "owner index out of range");
}

Assignment Assignment::from_bundles(const Profile& profile,
                                    const std::map<std::string, std::vector<ObjectId>>& bundles) {
    std::vector<int> owner(profile.object_count(), -1);
    for (const auto& [name, ids] : bundles) {
        int agent = profile.agent_index(name);
        for (const auto& id : ids) {
            int o = profile.object_index(id);
            if (owner[o] != -1)
                fail(Errc::InvalidAssignment, "object '" + id + "' allocated twice");
            owner[o] = agent;
        }
    }
    for (int o = 0; o < profile.object_count(); ++o)
        if (owner[o] == -1)
            fail(Errc::InvalidAssignment, "object '" + profile.objects()[o] + "' not allocated");
    return Assignment(profile, std::move(owner));
}

std::vector<int> Assignment::bundle(int agent) const {
    std::vector<int> out;
    for (int o = 0; o < static_cast<int>(owner_.size()); ++o)
        if (owner_[o] == agent)
            out.push_back(o);
    return out;
}

std::vector<std::vector<int>> Assignment::bundles(int agent_count) const {
    std::vector<std::vector<int>> out(agent_count);
    for (int o = 0; o < static_cast<int>(owner_.size()); ++o)
        out[owner_[o]].push_back(o);
    return out;
}

Entitlements::Entitlements(const Profile& profile, std::vector<Rational> weights)
    : weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != profile.agent_count())
        fail(Errc::InvalidParams, "entitlements must cover every agent");
    for (const auto& w : weights_)
        if (w.sgn() <= 0)
            fail(Errc::InvalidParams, "entitlements must be positive");
}

Entitlements Entitlements::from_map(const Profile& profile,
                                    const std::map<std::string, Rational>& weights) {
    std::vector<Rational> out(profile.agent_count(), Rational(0));
    std::vector<bool> present(profile.agent_count(), false);
    for (const auto& [name, w] : weights) {
        int agent = profile.agent_index(name);
        out[agent] = w;
        present[agent] = true;
    }
    for (int i = 0; i < profile.agent_count(); ++i)
        if (!present[i])
            fail(Errc::InvalidParams, "missing entitlement for agent '" + profile.agent_name(i) + "'");
    return Entitlements(profile, std::move(out));
}

Rational Entitlements::share(int agent) const {
    Rational total(0);
    for (const auto& w : weights_)
        total += w;
    return weights_[agent] / total;
}

std::vector<Rational> Entitlements::shares() const {
    std::vector<Rational> out;
    out.reserve(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i)
        out.push_back(share(static_cast<int>(i)));
    return out;
}

std::vector<Rational> uniform_shares(int agent_count) {
    return std::vector<Rational>(agent_count, Rational(1, agent_count));
}

FairnessNotion::FairnessNotion(NotionTag tag, Rational param) : tag_(tag), param_(std::move(param)) {
    if (tag != NotionTag::AlphaProp && tag != NotionTag::BetaWeakProp)
        fail(Errc::InvalidParams, "only alpha-prop and beta-weak-prop take a parameter");
    if (param_.sgn() <= 0)
        fail(Errc::InvalidParams, "notion parameter must be positive");
}

NotionTag FairnessNotion::parse_tag(const std::string& name) {
    if (name == "sd-ef" || name == "necessary-ef" || name == "necessary-completion-ef")
        return NotionTag::SdEf;
    if (name == "weak-sd-ef" || name == "possible-completion-ef")
        return NotionTag::WeakSdEf;
    if (name == "possible-ef")
        return NotionTag::PossibleEf;
    if (name == "sd-prop" || name == "necessary-prop")
        return NotionTag::SdProp;
    if (name == "weak-sd-prop" || name == "possible-prop")
        return NotionTag::WeakSdProp;
    if (name == "alpha-prop")
        return NotionTag::AlphaProp;
    if (name == "beta-weak-prop")
        return NotionTag::BetaWeakProp;
    fail(Errc::UnsupportedNotion, "unknown fairness notion '" + name + "'");
}

std::string FairnessNotion::canonical_name(NotionTag tag) {
    switch (tag) {
    case NotionTag::SdEf: return "sd-ef";
    case NotionTag::WeakSdEf: return "weak-sd-ef";
    case NotionTag::PossibleEf: return "possible-ef";
    case NotionTag::SdProp: return "sd-prop";
    case NotionTag::WeakSdProp: return "weak-sd-prop";
    case NotionTag::AlphaProp: return "alpha-prop";
    case NotionTag::BetaWeakProp: return "beta-weak-prop";
    }
    fail(Errc::UnsupportedNotion, "bad notion tag");
}

bool FairnessNotion::is_proportionality() const {
    return tag_ == NotionTag::SdProp || tag_ == NotionTag::WeakSdProp ||
           tag_ == NotionTag::AlphaProp || tag_ == NotionTag::BetaWeakProp;
}

FairnessNotion FairnessNotion::with_entitlements(Entitlements e) const {
    if (tag_ != NotionTag::SdProp && tag_ != NotionTag::WeakSdProp)
        fail(Errc::UnsupportedNotion,
             "entitlements are only defined for sd-prop and weak-sd-prop here");
    FairnessNotion out(*this);
    out.entitlements_ = std::move(e);
    return out;
}

std::vector<Rational> FairnessNotion::shares(const Profile& profile) const {
    switch (tag_) {
    case NotionTag::AlphaProp:
    case NotionTag::BetaWeakProp:
        return std::vector<Rational>(profile.agent_count(), Rational(1) / param_);
    case NotionTag::SdProp:
    case NotionTag::WeakSdProp:
        if (entitlements_)
            return entitlements_->shares();
        return uniform_shares(profile.agent_count());
    default:
        fail(Errc::UnsupportedNotion, "envy notions have no reference share");
    }
}

} // namespace fairdiv
