#ifndef FAIRDIV_MATCHING_HPP
#define FAIRDIV_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/errors.hpp"

namespace fairdiv {

/// Directed flow network with plain integer capacities (no lower bounds;
/// those are handled by the b-matching reduction below).
class FlowNetwork {
public:
    FlowNetwork(int vertex_count, int source, int sink);

    /// Returns an edge id usable to read the flow back out.
    int add_edge(int from, int to, long capacity);

    int vertex_count() const { return vertex_count_; }
    int source() const { return source_; }
    int sink() const { return sink_; }

    struct Edge {
        int from, to;
        long capacity;
    };
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int vertex_count_, source_, sink_;
    std::vector<Edge> edges_;
};

struct MaxFlowResult {
    long value = 0;
    std::vector<long> flow; // per edge id
};

/// Integral maximum flow (Dinic's blocking-flow algorithm).
MaxFlowResult max_flow(const FlowNetwork& network);

/// Bipartite graph for maximum-cardinality matching.
class BipartiteGraph {
public:
    BipartiteGraph(int left_count, int right_count)
        : left_count_(left_count), right_count_(right_count), adj_(left_count) {}

    void add_edge(int left, int right) { adj_[left].push_back(right); }

    int left_count() const { return left_count_; }
    int right_count() const { return right_count_; }
    const std::vector<int>& neighbors(int left) const { return adj_[left]; }

private:
    int left_count_, right_count_;
    std::vector<std::vector<int>> adj_;
};

struct MatchingResult {
    int size = 0;
    std::vector<int> match_left;  // left -> right or -1
    std::vector<int> match_right; // right -> left or -1
};

/// Hopcroft-Karp maximum-cardinality matching.
MatchingResult max_cardinality_matching(const BipartiteGraph& graph);

/// Bipartite degree-constrained subgraph instance: every vertex carries a
/// degree interval [lo, hi] (hi = kUnbounded for no cap) and every edge has
/// unit capacity.
struct BMatchingInstance {
    static constexpr long kUnbounded = -1;

    struct Bounds {
        long lo = 0;
        long hi = kUnbounded;
    };

    std::vector<Bounds> left;
    std::vector<Bounds> right;
    std::vector<std::pair<int, int>> edges; // (left index, right index), no parallels

    int add_left(long lo, long hi = kUnbounded);
    int add_right(long lo, long hi = kUnbounded);
    void add_edge(int l, int r) { edges.emplace_back(l, r); }
};

/// Picks an edge subset whose degrees lie within every vertex interval, or
/// nullopt iff none exists. Standard reduction to max flow with lower bounds
/// (super-source / super-sink augmentation); infeasibility is a value, not an
/// error, so candidate-scanning solvers can call this in a loop.
std::optional<std::vector<int>> feasible_bmatching(const BMatchingInstance& instance);

} // namespace fairdiv

#endif
