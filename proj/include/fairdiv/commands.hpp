#ifndef FAIRDIV_COMMANDS_HPP
#define FAIRDIV_COMMANDS_HPP

#include <string>

#include "fairdiv/io.hpp"

namespace fairdiv::commands {

/// Json payload plus the process exit status the CLI maps it to:
/// 0 success, 2 "does not exist / not fair". Hard errors throw.
struct Outcome {
    Json body;
    int status = 0;
};

/// Builds the notion from a CLI-style name, optional alpha/beta parameter and
/// the profile's entitlements (attached for sd-prop / weak-sd-prop only).
FairnessNotion make_notion(const std::string& name, const std::string& param,
                           const ParsedProfile& input);

Outcome check(const ParsedProfile& input, const std::string& assignment_text,
              const std::string& notion, const std::string& param);
Outcome solve(const ParsedProfile& input, const std::string& notion, const std::string& param,
              long budget);
Outcome optimal_prop(const ParsedProfile& input);
Outcome optimal_weak_prop(const ParsedProfile& input);
Outcome pareto_check(const ParsedProfile& input, const std::string& assignment_text);
Outcome pareto_improve_cmd(const ParsedProfile& input, const std::string& assignment_text);
Outcome maximal(const ParsedProfile& input, const std::string& notion, const std::string& param,
                long budget);
Outcome maximum(const ParsedProfile& input, const std::string& notion, const std::string& param,
                long budget);
Outcome maximin(const ParsedProfile& input);
Outcome oracle(const ParsedProfile& input, const std::string& notion, const std::string& param,
               const std::string& optimal, long budget);
Outcome gen(std::uint64_t seed, int agents, int objects, bool strict, const std::string& tie_prob,
            bool entitled);

} // namespace fairdiv::commands

#endif
