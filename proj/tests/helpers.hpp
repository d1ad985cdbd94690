#ifndef FAIRDIV_TEST_HELPERS_HPP
#define FAIRDIV_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fairdiv/gen.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv::testing {

// Profile from class lists: {{"1", {{"a","b"},{"c"}}}, ...}; objects are the
// union in first-seen order unless given explicitly.
inline Profile make_profile(
    const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& prefs,
    std::vector<std::string> objects = {}) {
    if (objects.empty()) {
        for (const auto& [name, classes] : prefs)
            for (const auto& cls : classes)
                for (const auto& o : cls)
                    if (std::find(objects.begin(), objects.end(), o) == objects.end())
                        objects.push_back(o);
    }
    std::vector<AgentPref> agents;
    for (const auto& [name, classes] : prefs)
        agents.push_back({name, classes});
    return Profile(std::move(objects), std::move(agents));
}

inline Assignment make_assignment(const Profile& profile,
                                  const std::map<std::string, std::vector<std::string>>& bundles) {
    std::map<std::string, std::vector<ObjectId>> typed;
    for (const auto& [name, ids] : bundles)
        typed.emplace(name, std::vector<ObjectId>(ids.begin(), ids.end()));
    return Assignment::from_bundles(profile, typed);
}

// The recurring worked examples.

inline Profile example1() {
    return make_profile({{"1", {{"o1"}, {"o2"}, {"o3"}, {"o4"}}},
                         {"2", {{"o2"}, {"o3"}, {"o1"}, {"o4"}}}});
}

inline Profile example3() {
    return make_profile({{"1", {{"a", "b", "c"}, {"d", "e", "f"}}},
                         {"2", {{"a", "b", "c", "d", "e", "f"}}},
                         {"3", {{"a", "b", "c", "d", "e", "f"}}}});
}

// 4 copies of A, 6 of B, one C, one D, modeled as distinct object ids.
inline Profile example5() {
    std::vector<std::string> A = {"A1", "A2", "A3", "A4"};
    std::vector<std::string> B = {"B1", "B2", "B3", "B4", "B5", "B6"};
    std::vector<std::vector<std::string>> agent1 = {A, B, {"C"}, {"D"}};
    std::vector<std::string> rest2 = B;
    rest2.push_back("C");
    rest2.push_back("D");
    std::vector<std::string> rest3 = A;
    rest3.push_back("C");
    rest3.push_back("D");
    return make_profile({{"1", agent1}, {"2", {A, rest2}}, {"3", {B, rest3}}});
}

inline Assignment example5_table3(const Profile& p) {
    return make_assignment(p, {{"1", {"A1", "B1", "C", "D"}},
                               {"2", {"A2", "A3", "A4"}},
                               {"3", {"B2", "B3", "B4", "B5", "B6"}}});
}

inline Profile example6() {
    return make_profile({{"1", {{"a"}, {"b", "c"}}}, {"2", {{"a", "b", "c"}}}});
}

inline Profile pareto_example() {
    return make_profile({{"1", {{"a", "b", "c"}, {"d", "e", "f"}}},
                         {"2", {{"d", "e", "f"}, {"a", "b", "c"}}}});
}

inline Profile section73_example() {
    return make_profile({{"1", {{"o1"}, {"o2"}, {"o3"}, {"o4"}, {"o5"}}},
                         {"2", {{"o2", "o3"}, {"o1", "o4", "o5"}}}});
}

// Three identical agents over four good and two bad objects: the canonical
// instance with no weak SD proportional assignment despite n | m.
inline Profile three_identical_blockers() {
    return make_profile({{"1", {{"a1", "a2", "a3", "a4"}, {"b1", "b2"}}},
                         {"2", {{"a1", "a2", "a3", "a4"}, {"b1", "b2"}}},
                         {"3", {{"a1", "a2", "a3", "a4"}, {"b1", "b2"}}}});
}

// --- deterministic randomness for property tests ----------------------------

struct TestRng {
    std::uint64_t state;

    explicit TestRng(std::uint64_t seed) : state(seed ^ 0x5bf03635263eb3a1ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline Profile random_profile(std::uint64_t seed, int n, int m, bool strict = false,
                              Rational tie = Rational(1, 2)) {
    GenOptions options;
    options.seed = seed;
    options.agents = n;
    options.objects = m;
    options.strict = strict;
    options.tie_prob = tie;
    return gen_profile(options).profile;
}

inline Assignment random_assignment(const Profile& profile, TestRng& rng) {
    std::vector<int> owner(profile.object_count());
    for (auto& a : owner)
        a = static_cast<int>(rng.below(profile.agent_count()));
    return Assignment(profile, std::move(owner));
}

// All weak orders over m objects with at most max_classes classes, as ordered
// partitions of {0..m-1}; the backbone of the exhaustive structured suites.
// Each order is a class-index vector with no gaps in the used indices.
inline void enumerate_weak_orders(int m, int max_classes,
                                  const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<int> rank(m, 0);
    auto flush = [&]() {
        int top = 0;
        for (int r : rank)
            top = std::max(top, r);
        std::vector<std::vector<int>> classes(top + 1);
        for (int o = 0; o < m; ++o)
            classes[rank[o]].push_back(o);
        for (const auto& cls : classes)
            if (cls.empty())
                return; // gap: not a valid ordered partition
        emit(classes);
    };
    std::function<void(int)> walk = [&](int item) {
        if (item == m) {
            flush();
            return;
        }
        for (int c = 0; c < max_classes; ++c) {
            rank[item] = c;
            walk(item + 1);
        }
    };
    if (m == 0)
        emit({});
    else
        walk(0);
}

inline Profile profile_from_orders(const std::vector<std::vector<std::vector<int>>>& orders, int m) {
    std::vector<std::string> objects;
    for (int o = 0; o < m; ++o)
        objects.push_back("x" + std::to_string(o));
    std::vector<AgentPref> agents;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        AgentPref pref;
        pref.name = std::to_string(i + 1);
        for (const auto& cls : orders[i]) {
            std::vector<ObjectId> members;
            for (int o : cls)
                members.push_back(objects[o]);
            pref.classes.push_back(std::move(members));
        }
        agents.push_back(std::move(pref));
    }
    return Profile(std::move(objects), std::move(agents));
}

} // namespace fairdiv::testing

#endif
