#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairdiv/matching.hpp"

#include <algorithm>

#include "helpers.hpp"

using namespace fairdiv;
using fairdiv::testing::TestRng;

TEST_CASE("max flow on tiny networks") {
    {
        FlowNetwork net(3, 0, 2);
        net.add_edge(0, 1, 1);
        net.add_edge(1, 2, 1);
        CHECK(max_flow(net).value == 1);
    }
    {
        FlowNetwork net(3, 0, 2);
        net.add_edge(0, 1, 1);
        net.add_edge(0, 1, 1);
        net.add_edge(1, 2, 1);
        CHECK(max_flow(net).value == 1);
    }
    {
        // complete bipartite 3x3, unit capacities
        FlowNetwork net(8, 0, 7);
        for (int l = 0; l < 3; ++l)
            net.add_edge(0, 1 + l, 1);
        for (int l = 0; l < 3; ++l)
            for (int r = 0; r < 3; ++r)
                net.add_edge(1 + l, 4 + r, 1);
        for (int r = 0; r < 3; ++r)
            net.add_edge(4 + r, 7, 1);
        MaxFlowResult res = max_flow(net);
        CHECK(res.value == 3);
        // conservation at internal vertices
        std::vector<long> net_flow(8, 0);
        for (std::size_t e = 0; e < net.edges().size(); ++e) {
            net_flow[net.edges()[e].from] -= res.flow[e];
            net_flow[net.edges()[e].to] += res.flow[e];
        }
        for (int v = 1; v < 7; ++v)
            CHECK(net_flow[v] == 0);
        CHECK(net_flow[7] == 3);
    }
}

TEST_CASE("max flow value is invariant under edge permutation") {
    TestRng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int vertices = 4 + static_cast<int>(rng.below(4));
        std::vector<std::tuple<int, int, long>> edges;
        for (int e = 0; e < 12; ++e) {
            int u = static_cast<int>(rng.below(vertices));
            int v = static_cast<int>(rng.below(vertices));
            if (u != v)
                edges.emplace_back(u, v, 1 + static_cast<long>(rng.below(3)));
        }
        auto value_of = [&](const std::vector<std::tuple<int, int, long>>& order) {
            FlowNetwork net(vertices, 0, vertices - 1);
            for (const auto& [u, v, c] : order)
                net.add_edge(u, v, c);
            return max_flow(net).value;
        };
        long base = value_of(edges);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (std::size_t i = edges.size(); i > 1; --i)
                std::swap(edges[i - 1], edges[rng.below(i)]);
            CHECK(value_of(edges) == base);
        }
    }
}

TEST_CASE("maximum cardinality matching") {
    {
        BipartiteGraph g(2, 2);
        for (int l = 0; l < 2; ++l)
            for (int r = 0; r < 2; ++r)
                g.add_edge(l, r);
        CHECK(max_cardinality_matching(g).size == 2);
    }
    {
        BipartiteGraph g(1, 3); // star
        for (int r = 0; r < 3; ++r)
            g.add_edge(0, r);
        CHECK(max_cardinality_matching(g).size == 1);
    }
    {
        // two agents, both strictly prefer a to b: only non-least-preferred
        // edges survive, so at most one agent can be served
        BipartiteGraph g(2, 2);
        g.add_edge(0, 0);
        g.add_edge(1, 0);
        CHECK(max_cardinality_matching(g).size == 1);
    }
}

TEST_CASE("forced single-edge b-matching") {
    BMatchingInstance inst;
    inst.add_left(1, BMatchingInstance::kUnbounded);
    inst.add_right(1, 1);
    inst.add_edge(0, 0);
    auto chosen = feasible_bmatching(inst);
    REQUIRE(chosen.has_value());
    CHECK(*chosen == std::vector<int>{0});
}

TEST_CASE("b-matching construction of the no-proportionality example") {
    // The two-agent worked profile with alpha = 2: cumulative ceiling lower
    // bounds per agent-class prefix, objects exactly once. Infeasible.
    Profile p = fairdiv::testing::example1();
    BMatchingInstance inst;
    for (int o = 0; o < 4; ++o)
        inst.add_right(1, 1);
    for (int i = 0; i < 2; ++i) {
        long cumulative = 0;
        for (int c = 0; c < 4; ++c) {
            long target = ceil_long(Rational(p.prefix_size(i, c), 2));
            int v = inst.add_left(target - cumulative, BMatchingInstance::kUnbounded);
            cumulative = target;
            for (int o = 0; o < 4; ++o)
                if (p.class_of(i, o) <= c)
                    inst.add_edge(v, o);
        }
    }
    CHECK(!feasible_bmatching(inst).has_value());
}

namespace {

// brute force over all edge subsets
bool subset_feasible(const BMatchingInstance& inst) {
    int ne = static_cast<int>(inst.edges.size());
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        std::vector<long> dl(inst.left.size(), 0), dr(inst.right.size(), 0);
        for (int e = 0; e < ne; ++e)
            if (mask & (1u << e)) {
                dl[inst.edges[e].first] += 1;
                dr[inst.edges[e].second] += 1;
            }
        bool ok = true;
        for (std::size_t v = 0; v < inst.left.size() && ok; ++v)
            ok = dl[v] >= inst.left[v].lo &&
                 (inst.left[v].hi == BMatchingInstance::kUnbounded || dl[v] <= inst.left[v].hi);
        for (std::size_t v = 0; v < inst.right.size() && ok; ++v)
            ok = dr[v] >= inst.right[v].lo &&
                 (inst.right[v].hi == BMatchingInstance::kUnbounded || dr[v] <= inst.right[v].hi);
        if (ok)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("b-matching agrees with exhaustive subset search and meets its bounds") {
    TestRng rng(404);
    for (int trial = 0; trial < 250; ++trial) {
        BMatchingInstance inst;
        int nl = 1 + static_cast<int>(rng.below(3));
        int nr = 1 + static_cast<int>(rng.below(4));
        for (int v = 0; v < nl; ++v) {
            long lo = static_cast<long>(rng.below(3));
            bool unbounded = rng.below(3) == 0;
            inst.add_left(lo, unbounded ? BMatchingInstance::kUnbounded
                                        : lo + static_cast<long>(rng.below(3)));
        }
        for (int v = 0; v < nr; ++v) {
            long lo = static_cast<long>(rng.below(2));
            inst.add_right(lo, lo + static_cast<long>(rng.below(2)));
        }
        std::vector<std::pair<int, int>> all;
        for (int l = 0; l < nl; ++l)
            for (int r = 0; r < nr; ++r)
                all.emplace_back(l, r);
        for (const auto& e : all)
            if (rng.below(3) != 0 && inst.edges.size() < 12)
                inst.edges.push_back(e);

        auto fast = feasible_bmatching(inst);
        CHECK(fast.has_value() == subset_feasible(inst));
        if (fast) {
            std::vector<long> dl(nl, 0), dr(nr, 0);
            for (int e : *fast) {
                dl[inst.edges[e].first] += 1;
                dr[inst.edges[e].second] += 1;
            }
            for (int v = 0; v < nl; ++v) {
                CHECK(dl[v] >= inst.left[v].lo);
                if (inst.left[v].hi != BMatchingInstance::kUnbounded)
                    CHECK(dl[v] <= inst.left[v].hi);
            }
            for (int v = 0; v < nr; ++v) {
                CHECK(dr[v] >= inst.right[v].lo);
                if (inst.right[v].hi != BMatchingInstance::kUnbounded)
                    CHECK(dr[v] <= inst.right[v].hi);
            }
        }
    }
}

TEST_CASE("b-matching instance validation") {
    BMatchingInstance inst;
    inst.add_left(3, 1);
    inst.add_right(1, 1);
    inst.add_edge(0, 0);
    CHECK_THROWS_AS(feasible_bmatching(inst), Error);

    BMatchingInstance dup;
    dup.add_left(0, 1);
    dup.add_right(0, 1);
    dup.add_edge(0, 0);
    dup.add_edge(0, 0);
    CHECK_THROWS_AS(feasible_bmatching(dup), Error);
}
