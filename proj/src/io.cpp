#include "fairdiv/io.hpp"

#include <algorithm>

namespace fairdiv {

namespace {

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(Errc::ParseError, "malformed JSON input");
    return j;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end())
            fail(Errc::ParseError, std::string("unknown key '") + key + "' in " + where);
    }
}

std::string require_string(const Json& j, const char* where) {
    if (!j.is_string())
        fail(Errc::ParseError, std::string("expected a string in ") + where);
    return j.get<std::string>();
}

} // namespace

ParsedProfile parse_profile_json(const Json& j) {
    if (!j.is_object())
        fail(Errc::ParseError, "profile must be a JSON object");
    reject_unknown_keys(j, {"objects", "agents", "entitlements"}, "profile");
    if (!j.contains("objects") || !j["objects"].is_array())
        fail(Errc::ParseError, "profile needs an 'objects' array");
    if (!j.contains("agents") || !j["agents"].is_array())
        fail(Errc::ParseError, "profile needs an 'agents' array");

    std::vector<ObjectId> objects;
    for (const auto& o : j["objects"])
        objects.push_back(require_string(o, "objects"));

    std::vector<AgentPref> agents;
    for (const auto& a : j["agents"]) {
        if (!a.is_object())
            fail(Errc::ParseError, "each agent must be an object");
        reject_unknown_keys(a, {"name", "prefs"}, "agent");
        if (!a.contains("name") || !a.contains("prefs") || !a["prefs"].is_array())
            fail(Errc::ParseError, "each agent needs 'name' and 'prefs'");
        AgentPref pref;
        pref.name = require_string(a["name"], "agent name");
        for (const auto& cls : a["prefs"]) {
            if (!cls.is_array())
                fail(Errc::ParseError, "each preference class must be an array");
            std::vector<ObjectId> members;
            for (const auto& o : cls)
                members.push_back(require_string(o, "preference class"));
            pref.classes.push_back(std::move(members));
        }
        agents.push_back(std::move(pref));
    }

    Profile profile(std::move(objects), std::move(agents));
    std::optional<Entitlements> entitlements;
    if (j.contains("entitlements")) {
        if (!j["entitlements"].is_object())
            fail(Errc::ParseError, "'entitlements' must map agent names to rationals");
        std::map<std::string, Rational> weights;
        for (const auto& [name, value] : j["entitlements"].items())
            weights.emplace(name, Rational::parse(require_string(value, "entitlements")));
        entitlements = Entitlements::from_map(profile, weights);
    }
    return {std::move(profile), std::move(entitlements)};
}

ParsedProfile parse_profile(const std::string& text) { return parse_profile_json(parse_text(text)); }

Json profile_to_json(const Profile& profile, const std::optional<Entitlements>& entitlements) {
    Json j;
    j["objects"] = profile.objects();
    j["agents"] = Json::array();
    for (int i = 0; i < profile.agent_count(); ++i) {
        Json a;
        a["name"] = profile.agent_name(i);
        a["prefs"] = Json::array();
        for (const auto& cls : profile.agents()[i].classes) {
            std::vector<ObjectId> members = cls;
            std::sort(members.begin(), members.end());
            a["prefs"].push_back(members);
        }
        j["agents"].push_back(std::move(a));
    }
    if (entitlements) {
        Json e = Json::object();
        for (int i = 0; i < profile.agent_count(); ++i)
            e[profile.agent_name(i)] = entitlements->weight(i).str();
        j["entitlements"] = std::move(e);
    }
    return j;
}

Assignment parse_assignment_json(const Json& j, const Profile& profile) {
    if (!j.is_object())
        fail(Errc::ParseError, "assignment must be a JSON object");
    const Json* body = &j;
    if (j.contains("assignment")) // solver output wrapper
        body = &j["assignment"];
    std::map<std::string, std::vector<ObjectId>> bundles;
    for (const auto& [name, ids] : body->items()) {
        if (!ids.is_array())
            fail(Errc::ParseError, "each bundle must be an array of object ids");
        std::vector<ObjectId> members;
        for (const auto& o : ids)
            members.push_back(require_string(o, "bundle"));
        bundles.emplace(name, std::move(members));
    }
    return Assignment::from_bundles(profile, bundles);
}

Assignment parse_assignment(const std::string& text, const Profile& profile) {
    return parse_assignment_json(parse_text(text), profile);
}

Json assignment_to_json(const Profile& profile, const Assignment& assignment) {
    Json j = Json::object();
    auto bundles = assignment.bundles(profile.agent_count());
    for (int i = 0; i < profile.agent_count(); ++i) {
        std::vector<ObjectId> ids;
        for (int o : bundles[i])
            ids.push_back(profile.objects()[o]);
        j[profile.agent_name(i)] = ids;
    }
    return j;
}

Json verdict_to_json(const Profile& profile, const Verdict& verdict, const FairnessNotion& notion) {
    Json j;
    j["notion"] = notion.name();
    j["satisfied"] = verdict.satisfied;
    Json agents = Json::object();
    for (int i = 0; i < profile.agent_count(); ++i) {
        const AgentVerdict& av = verdict.agents[i];
        Json a;
        a["ok"] = av.ok;
        if (av.violated_prefix)
            a["violated_prefix"] = *av.violated_prefix;
        if (av.envied_agent)
            a["envies"] = profile.agent_name(*av.envied_agent);
        if (av.witness) {
            Json w = Json::array();
            for (const auto& u : *av.witness)
                w.push_back(u.str());
            a["witness"] = std::move(w);
        }
        agents[profile.agent_name(i)] = std::move(a);
    }
    j["agents"] = std::move(agents);
    return j;
}

} // namespace fairdiv
