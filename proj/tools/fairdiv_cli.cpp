// fairdiv: fair assignment of indivisible objects under ordinal preferences.
// JSON results on stdout, diagnostics on stderr. Exit codes: 0 success,
// 1 usage/parse/IO error, 2 "does not exist / not fair".

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fairdiv/commands.hpp"
#include "fairdiv/ef_solver.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        fairdiv::fail(fairdiv::Errc::ParseError, "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int emit(const fairdiv::commands::Outcome& outcome) {
    std::cout << outcome.body.dump(2) << "\n";
    return outcome.status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair assignment of indivisible objects under ordinal preferences"};
    app.require_subcommand(1);

    std::string profile_path, assignment_path = "-", notion, param, optimal;
    long budget = fairdiv::kDefaultSearchBudget;
    std::uint64_t seed = 0;
    int agents = 2, objects = 4;
    bool strict = false, entitled = false;
    std::string tie_prob = "1/2";

    auto add_profile = [&](CLI::App* cmd) {
        cmd->add_option("--profile", profile_path, "profile JSON file ('-' for stdin)")->required();
    };
    auto add_notion = [&](CLI::App* cmd) {
        cmd->add_option("--notion", notion, "fairness notion")->required();
        cmd->add_option("--alpha", param, "alpha for alpha-prop (rational 'p/q')");
        cmd->add_option("--beta", param, "beta for beta-weak-prop (rational 'p/q')");
    };

    auto* cmd_check = app.add_subcommand("check", "verify a given assignment");
    add_profile(cmd_check);
    add_notion(cmd_check);
    cmd_check->add_option("--assignment", assignment_path, "assignment JSON ('-' for stdin)");

    auto* cmd_solve = app.add_subcommand("solve", "decide existence and construct");
    add_profile(cmd_solve);
    add_notion(cmd_solve);
    cmd_solve->add_option("--budget", budget, "search node budget for envy notions");

    auto* cmd_oprop = app.add_subcommand("optimal-prop", "smallest feasible alpha");
    add_profile(cmd_oprop);

    auto* cmd_oweak = app.add_subcommand("optimal-weak-prop", "infimum feasible beta");
    add_profile(cmd_oweak);

    auto* cmd_pcheck = app.add_subcommand("pareto-check", "test Pareto optimality");
    add_profile(cmd_pcheck);
    cmd_pcheck->add_option("--assignment", assignment_path, "assignment JSON ('-' for stdin)");

    auto* cmd_pimp = app.add_subcommand("pareto-improve", "Pareto-optimal improvement");
    add_profile(cmd_pimp);
    cmd_pimp->add_option("--assignment", assignment_path, "assignment JSON ('-' for stdin)");

    auto* cmd_maximal = app.add_subcommand("maximal", "inclusion-maximal fair agent set");
    add_profile(cmd_maximal);
    add_notion(cmd_maximal);
    cmd_maximal->add_option("--budget", budget, "search node budget for envy notions");

    auto* cmd_maximum = app.add_subcommand("maximum", "largest fair agent set");
    add_profile(cmd_maximum);
    add_notion(cmd_maximum);
    cmd_maximum->add_option("--budget", budget, "search node budget for envy notions");

    auto* cmd_maximin = app.add_subcommand("maximin", "best worst rank (n = m, strict)");
    add_profile(cmd_maximin);

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force ground truth");
    add_profile(cmd_oracle);
    cmd_oracle->add_option("--notion", notion, "fairness notion");
    cmd_oracle->add_option("--alpha", param, "alpha for alpha-prop");
    cmd_oracle->add_option("--beta", param, "beta for beta-weak-prop");
    cmd_oracle->add_option("--optimal", optimal, "'alpha' or 'beta' for exhaustive optimum");
    cmd_oracle->add_option("--budget", budget, "enumeration budget (default 1e7)");

    auto* cmd_gen = app.add_subcommand("gen", "deterministic random profile");
    cmd_gen->add_option("--seed", seed, "PRNG seed")->required();
    cmd_gen->add_option("--agents", agents, "number of agents");
    cmd_gen->add_option("--objects", objects, "number of objects");
    cmd_gen->add_flag("--strict", strict, "force strict preferences");
    cmd_gen->add_option("--tie-prob", tie_prob, "tie probability (rational 'p/q')");
    cmd_gen->add_flag("--entitled", entitled, "draw integer entitlements in 1..5");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace fairdiv::commands;
        if (cmd_gen->parsed())
            return emit(gen(seed, agents, objects, strict, tie_prob, entitled));

        fairdiv::ParsedProfile input = fairdiv::parse_profile(slurp(profile_path));
        if (cmd_check->parsed())
            return emit(check(input, slurp(assignment_path), notion, param));
        if (cmd_solve->parsed())
            return emit(solve(input, notion, param, budget));
        if (cmd_oprop->parsed())
            return emit(optimal_prop(input));
        if (cmd_oweak->parsed())
            return emit(optimal_weak_prop(input));
        if (cmd_pcheck->parsed())
            return emit(pareto_check(input, slurp(assignment_path)));
        if (cmd_pimp->parsed())
            return emit(pareto_improve_cmd(input, slurp(assignment_path)));
        if (cmd_maximal->parsed())
            return emit(maximal(input, notion, param, budget));
        if (cmd_maximum->parsed())
            return emit(maximum(input, notion, param, budget));
        if (cmd_maximin->parsed())
            return emit(fairdiv::commands::maximin(input));
        if (cmd_oracle->parsed())
            return emit(oracle(input, notion, param, optimal, budget));
    } catch (const fairdiv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
