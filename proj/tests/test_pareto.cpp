#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairdiv/oracle.hpp"
#include "fairdiv/pareto.hpp"
#include "fairdiv/sd.hpp"
#include "fairdiv/verify.hpp"

#include "helpers.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

namespace {

bool weakly_improves_everyone(const Profile& p, const Assignment& before,
                              const Assignment& after) {
    for (int i = 0; i < p.agent_count(); ++i) {
        SdOrdering ord = sd_compare(p, i, after.bundle(i), before.bundle(i));
        if (!weakly_dominates(ord))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("cloning splits bundles into single-object holders") {
    Profile p = example1();
    Assignment a = make_assignment(p, {{"1", {"o1", "o4"}}, {"2", {"o2", "o3"}}});
    ClonedProblem cloned = clone(p, a);
    REQUIRE(cloned.clones.size() == 4);
    std::vector<std::pair<int, int>> expected = {
        {0, p.object_index("o1")}, {1, p.object_index("o2")},
        {1, p.object_index("o3")}, {0, p.object_index("o4")}};
    CHECK(cloned.clones == expected);
    CHECK(cloned.to_assignment(p) == a);

    Profile solo = make_profile({{"1", {{"a", "b", "c"}}}});
    Assignment all = make_assignment(solo, {{"1", {"a", "b", "c"}}});
    CHECK(clone(solo, all).clones.size() == 3);

    Profile empty({}, {{"1", {}}});
    CHECK(clone(empty, Assignment(empty, {})).clones.empty());
}

TEST_CASE("Pareto optimality via trading cycles on the worked example") {
    Profile p = pareto_example();
    Assignment bad = make_assignment(p, {{"1", {"b", "c", "f"}}, {"2", {"d", "e", "a"}}});
    CHECK(verify(p, bad, FairnessNotion::sd_prop()).satisfied);
    CHECK(!is_pareto_optimal(p, bad));

    Assignment good = make_assignment(p, {{"1", {"a", "b", "c"}}, {"2", {"d", "e", "f"}}});
    CHECK(is_pareto_optimal(p, good));

    Profile solo = make_profile({{"1", {{"a"}, {"b"}}}});
    CHECK(is_pareto_optimal(solo, make_assignment(solo, {{"1", {"a", "b"}}})));
}

TEST_CASE("improvement reaches a Pareto optimum and never hurts anyone") {
    Profile p = pareto_example();
    Assignment bad = make_assignment(p, {{"1", {"b", "c", "f"}}, {"2", {"d", "e", "a"}}});
    Assignment improved = pareto_improve(p, bad);
    CHECK(is_pareto_optimal(p, improved));
    CHECK(weakly_improves_everyone(p, bad, improved));
    CHECK(verify(p, improved, FairnessNotion::sd_prop()).satisfied);
    Assignment expected = make_assignment(p, {{"1", {"a", "b", "c"}}, {"2", {"d", "e", "f"}}});
    CHECK(improved == expected);

    // already optimal assignments pass through untouched
    CHECK(pareto_improve(p, improved) == improved);

    Profile p1 = example1();
    Assignment fixed = make_assignment(p1, {{"1", {"o1", "o4"}}, {"2", {"o2", "o3"}}});
    CHECK(pareto_improve(p1, fixed) == fixed);
}

TEST_CASE("cycle test agrees with exhaustive domination search") {
    TestRng rng(55);
    for (int trial = 0; trial < 160; ++trial) {
        int n = 2 + static_cast<int>(rng.below(2));
        int m = static_cast<int>(rng.below(5));
        Profile p = random_profile(trial, n, m, rng.below(2) == 0, Rational(1, 2));
        Assignment a = random_assignment(p, rng);
        CHECK(is_pareto_optimal(p, a) == oracle_is_pareto_optimal(p, a));
    }
}

TEST_CASE("improvement contract on random inputs") {
    TestRng rng(65);
    for (int trial = 0; trial < 160; ++trial) {
        int n = 2 + static_cast<int>(rng.below(2));
        int m = static_cast<int>(rng.below(6));
        Profile p = random_profile(trial + 500, n, m, false, Rational(1, 2));
        Assignment a = random_assignment(p, rng);
        Assignment improved = pareto_improve(p, a);
        CHECK(is_pareto_optimal(p, improved));
        CHECK(weakly_improves_everyone(p, a, improved));
        CHECK(pareto_improve(p, improved) == improved); // fixed point

        // fairness preservation
        for (NotionTag tag : {NotionTag::SdProp, NotionTag::WeakSdProp}) {
            if (verify(p, a, FairnessNotion(tag)).satisfied)
                CHECK(verify(p, improved, FairnessNotion(tag)).satisfied);
        }
    }
}

TEST_CASE("fair and Pareto optimal composition") {
    Profile p = pareto_example();
    auto both = solve_fair_pareto(p, FairnessNotion::sd_prop());
    REQUIRE(both.has_value());
    CHECK(is_pareto_optimal(p, *both));
    CHECK(verify(p, *both, FairnessNotion::sd_prop()).satisfied);

    CHECK(!solve_fair_pareto(example1(), FairnessNotion::sd_prop()).has_value());

    auto weak = solve_fair_pareto(example1(), FairnessNotion::weak_sd_prop());
    REQUIRE(weak.has_value());
    CHECK(is_pareto_optimal(example1(), *weak));
    CHECK(verify(example1(), *weak, FairnessNotion::weak_sd_prop()).satisfied);

    CHECK_THROWS_AS(solve_fair_pareto(p, FairnessNotion::sd_ef()), Error);
}
