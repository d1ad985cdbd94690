#ifndef FAIRDIV_IO_HPP
#define FAIRDIV_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "fairdiv/model.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {

using Json = nlohmann::json;

struct ParsedProfile {
    Profile profile;
    std::optional<Entitlements> entitlements;
};

/// Profile file format:
///   {"objects": ["o1", ...],
///    "agents": [{"name": "1", "prefs": [["o1"], ["o2", "o3"]]}, ...],
///    "entitlements": {"1": "2/3", ...}}        (optional)
/// Rationals travel as "p/q" or integer strings; unknown keys are rejected.
ParsedProfile parse_profile(const std::string& text);
ParsedProfile parse_profile_json(const Json& j);

/// Canonical serialization: objects in input order, class members sorted, so
/// serialize(parse(text)) is a fixed point.
Json profile_to_json(const Profile& profile, const std::optional<Entitlements>& entitlements = {});

/// Assignment file format: {"1": ["o1", "o4"], "2": ["o2", "o3"]}.
/// A wrapper object carrying an "assignment" key (solver output) unwraps.
Assignment parse_assignment(const std::string& text, const Profile& profile);
Assignment parse_assignment_json(const Json& j, const Profile& profile);
Json assignment_to_json(const Profile& profile, const Assignment& assignment);

Json verdict_to_json(const Profile& profile, const Verdict& verdict, const FairnessNotion& notion);

} // namespace fairdiv

#endif
