#include "fairdiv/commands.hpp"

#include "fairdiv/ef_solver.hpp"
#include "fairdiv/gen.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/pareto.hpp"
#include "fairdiv/prop_solver.hpp"
#include "fairdiv/selection.hpp"
#include "fairdiv/verify.hpp"
#include "fairdiv/weakprop_solver.hpp"

namespace fairdiv::commands {

FairnessNotion make_notion(const std::string& name, const std::string& param,
                           const ParsedProfile& input) {
    NotionTag tag = FairnessNotion::parse_tag(name);
    if (tag == NotionTag::AlphaProp || tag == NotionTag::BetaWeakProp) {
        if (param.empty())
            fail(Errc::InvalidParams, "notion '" + name + "' needs its rational parameter");
        return FairnessNotion(tag, Rational::parse(param));
    }
    FairnessNotion notion(tag);
    if (input.entitlements && (tag == NotionTag::SdProp || tag == NotionTag::WeakSdProp))
        notion = notion.with_entitlements(*input.entitlements);
    return notion;
}

Outcome check(const ParsedProfile& input, const std::string& assignment_text,
              const std::string& notion_name, const std::string& param) {
    FairnessNotion notion = make_notion(notion_name, param, input);
    Assignment assignment = parse_assignment(assignment_text, input.profile);
    Verdict verdict = verify(input.profile, assignment, notion);
    return {verdict_to_json(input.profile, verdict, notion), verdict.satisfied ? 0 : 2};
}

namespace {

Outcome existence_outcome(const ParsedProfile& input, const FairnessNotion& notion,
                          const std::optional<Assignment>& assignment) {
    Json j;
    j["notion"] = notion.name();
    j["exists"] = assignment.has_value();
    if (assignment)
        j["assignment"] = assignment_to_json(input.profile, *assignment);
    return {std::move(j), assignment ? 0 : 2};
}

} // namespace

Outcome solve(const ParsedProfile& input, const std::string& notion_name, const std::string& param,
              long budget) {
    FairnessNotion notion = make_notion(notion_name, param, input);
    std::optional<Assignment> assignment;
    switch (notion.tag()) {
    case NotionTag::SdProp:
    case NotionTag::AlphaProp:
        assignment = exists_sd_proportional(input.profile, notion.shares(input.profile)).assignment;
        break;
    case NotionTag::WeakSdProp:
    case NotionTag::BetaWeakProp:
        assignment = exists_weak_sd_prop(input.profile, notion.shares(input.profile)).assignment;
        break;
    default:
        assignment = exists_ef(input.profile, notion.tag(), budget);
        break;
    }
    return existence_outcome(input, notion, assignment);
}

Outcome optimal_prop(const ParsedProfile& input) {
    OptimalPropResult r = optimal_proportional(input.profile);
    Json j;
    j["alpha_star"] = r.alpha_star ? r.alpha_star->str() : "inf";
    j["value"] = r.alpha_star ? (Rational(1) / *r.alpha_star).str() : "0";
    j["assignment"] = assignment_to_json(input.profile, r.assignment);
    return {std::move(j), r.alpha_star ? 0 : 2}; // no finite optimum exists
}

Outcome optimal_weak_prop(const ParsedProfile& input) {
    OptimalWeakPropResult r = optimal_weak_proportional(input.profile);
    Json j;
    j["beta_star"] = r.beta_star ? r.beta_star->str() : "inf";
    j["value"] = r.beta_star ? (Rational(1) / *r.beta_star).str() : "0";
    j["attained"] = r.attained;
    j["assignment"] = assignment_to_json(input.profile, r.assignment);
    return {std::move(j), r.beta_star ? 0 : 2};
}

Outcome pareto_check(const ParsedProfile& input, const std::string& assignment_text) {
    Assignment assignment = parse_assignment(assignment_text, input.profile);
    bool optimal = is_pareto_optimal(input.profile, assignment);
    Json j;
    j["pareto_optimal"] = optimal;
    return {std::move(j), optimal ? 0 : 2};
}

Outcome pareto_improve_cmd(const ParsedProfile& input, const std::string& assignment_text) {
    Assignment assignment = parse_assignment(assignment_text, input.profile);
    Assignment improved = pareto_improve(input.profile, assignment);
    Json j;
    j["assignment"] = assignment_to_json(input.profile, improved);
    j["changed"] = !(improved == assignment);
    return {std::move(j), 0};
}

namespace {

Outcome set_outcome(const ParsedProfile& input, const FairnessNotion& notion,
                    const FairSetResult& result) {
    Json j;
    j["notion"] = notion.name();
    Json names = Json::array();
    for (int i : result.agents)
        names.push_back(input.profile.agent_name(i));
    j["agents"] = std::move(names);
    j["assignment"] = assignment_to_json(input.profile, result.assignment);
    return {std::move(j), 0};
}

} // namespace

Outcome maximal(const ParsedProfile& input, const std::string& notion_name,
                const std::string& param, long budget) {
    FairnessNotion notion = make_notion(notion_name, param, input);
    return set_outcome(input, notion, maximal_fair_set(input.profile, notion, budget));
}

Outcome maximum(const ParsedProfile& input, const std::string& notion_name,
                const std::string& param, long budget) {
    FairnessNotion notion = make_notion(notion_name, param, input);
    return set_outcome(input, notion, maximum_fair_set(input.profile, notion, budget));
}

Outcome maximin(const ParsedProfile& input) {
    auto [rank, assignment] = maximin_assignment(input.profile);
    Json j;
    j["rank"] = rank;
    j["assignment"] = assignment_to_json(input.profile, assignment);
    return {std::move(j), 0};
}

Outcome oracle(const ParsedProfile& input, const std::string& notion_name,
               const std::string& param, const std::string& optimal, long budget) {
    Json j;
    if (optimal == "alpha") {
        auto a = oracle_optimal_alpha(input.profile, budget);
        j["alpha_star"] = a ? a->str() : "inf";
        return {std::move(j), a ? 0 : 2};
    }
    if (optimal == "beta") {
        auto b = oracle_optimal_beta(input.profile, budget);
        j["beta_star"] = b.beta_star ? b.beta_star->str() : "inf";
        j["attained"] = b.attained;
        return {std::move(j), b.beta_star ? 0 : 2};
    }
    if (!optimal.empty())
        fail(Errc::InvalidParams, "--optimal takes 'alpha' or 'beta'");
    FairnessNotion notion = make_notion(notion_name, param, input);
    bool exists = oracle_exists(input.profile, notion, budget);
    j["notion"] = notion.name();
    j["exists"] = exists;
    return {std::move(j), exists ? 0 : 2};
}

Outcome gen(std::uint64_t seed, int agents, int objects, bool strict, const std::string& tie_prob,
            bool entitled) {
    GenOptions options;
    options.seed = seed;
    options.agents = agents;
    options.objects = objects;
    options.strict = strict;
    options.tie_prob = Rational::parse(tie_prob);
    options.entitled = entitled;
    Generated g = gen_profile(options);
    return {profile_to_json(g.profile, g.entitlements), 0};
}

} // namespace fairdiv::commands
