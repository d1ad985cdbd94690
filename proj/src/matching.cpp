#include "fairdiv/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace fairdiv {

FlowNetwork::FlowNetwork(int vertex_count, int source, int sink)
    : vertex_count_(vertex_count), source_(source), sink_(sink) {
    if (source < 0 || source >= vertex_count || sink < 0 || sink >= vertex_count || source == sink)
        fail(Errc::InvalidParams, "bad source/sink");
}

int FlowNetwork::add_edge(int from, int to, long capacity) {
    if (from < 0 || from >= vertex_count_ || to < 0 || to >= vertex_count_)
        fail(Errc::InvalidParams, "edge endpoint out of range");
    if (capacity < 0)
        fail(Errc::InvalidParams, "negative capacity");
    edges_.push_back({from, to, capacity});
    return static_cast<int>(edges_.size()) - 1;
}

namespace {

// Residual-graph Dinic. Arc 2e is the forward copy of input edge e, 2e+1 its
// reverse, so recovering per-edge flow afterwards is just cap[2e] - residual.
struct Dinic {
    int n;
    std::vector<int> head; // vertex -> first arc
    std::vector<int> next; // arc -> next arc
    std::vector<int> to;
    std::vector<long> cap;
    std::vector<int> level, iter;

    explicit Dinic(const FlowNetwork& net) : n(net.vertex_count()), head(n, -1) {
        for (const auto& e : net.edges()) {
            add_arc(e.from, e.to, e.capacity);
            add_arc(e.to, e.from, 0);
        }
    }

    void add_arc(int u, int v, long c) {
        to.push_back(v);
        cap.push_back(c);
        next.push_back(head[u]);
        head[u] = static_cast<int>(to.size()) - 1;
    }

    bool bfs(int s, int t) {
        level.assign(n, -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = head[u]; a >= 0; a = next[a]) {
                if (cap[a] > 0 && level[to[a]] < 0) {
                    level[to[a]] = level[u] + 1;
                    q.push(to[a]);
                }
            }
        }
        return level[t] >= 0;
    }

    long dfs(int u, int t, long limit) {
        if (u == t)
            return limit;
        for (int& a = iter[u]; a >= 0; a = next[a]) {
            int v = to[a];
            if (cap[a] > 0 && level[v] == level[u] + 1) {
                long pushed = dfs(v, t, std::min(limit, cap[a]));
                if (pushed > 0) {
                    cap[a] -= pushed;
                    cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    long run(int s, int t) {
        long total = 0;
        while (bfs(s, t)) {
            iter = head;
            while (long pushed = dfs(s, t, std::numeric_limits<long>::max()))
                total += pushed;
        }
        return total;
    }
};

} // namespace

MaxFlowResult max_flow(const FlowNetwork& network) {
    Dinic dinic(network);
    MaxFlowResult result;
    result.value = dinic.run(network.source(), network.sink());
    result.flow.resize(network.edges().size());
    for (std::size_t e = 0; e < network.edges().size(); ++e)
        result.flow[e] = network.edges()[e].capacity - dinic.cap[2 * e];
    return result;
}

MatchingResult max_cardinality_matching(const BipartiteGraph& graph) {
    const int kInf = std::numeric_limits<int>::max();
    int nl = graph.left_count(), nr = graph.right_count();
    MatchingResult res;
    res.match_left.assign(nl, -1);
    res.match_right.assign(nr, -1);
    std::vector<int> dist(nl);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int u = 0; u < nl; ++u) {
            if (res.match_left[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : graph.neighbors(u)) {
                int w = res.match_right[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : graph.neighbors(u)) {
            int w = res.match_right[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                res.match_left[u] = v;
                res.match_right[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < nl; ++u)
            if (res.match_left[u] == -1 && dfs(u))
                ++res.size;
    return res;
}

int BMatchingInstance::add_left(long lo, long hi) {
    left.push_back({lo, hi});
    return static_cast<int>(left.size()) - 1;
}

int BMatchingInstance::add_right(long lo, long hi) {
    right.push_back({lo, hi});
    return static_cast<int>(right.size()) - 1;
}

std::optional<std::vector<int>> feasible_bmatching(const BMatchingInstance& instance) {
    const int nl = static_cast<int>(instance.left.size());
    const int nr = static_cast<int>(instance.right.size());
    const int ne = static_cast<int>(instance.edges.size());

    std::vector<long> deg_left(nl, 0), deg_right(nr, 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& [l, r] : instance.edges) {
        if (l < 0 || l >= nl || r < 0 || r >= nr)
            fail(Errc::InvalidParams, "b-matching edge endpoint out of range");
        if (!seen.insert({l, r}).second)
            fail(Errc::InvalidParams, "parallel edge in b-matching instance");
        ++deg_left[l];
        ++deg_right[r];
    }
    auto check_bounds = [](const BMatchingInstance::Bounds& b) {
        if (b.lo < 0 || (b.hi != BMatchingInstance::kUnbounded && b.lo > b.hi))
            fail(Errc::InvalidParams, "vertex with lo > hi");
    };
    for (const auto& b : instance.left)
        check_bounds(b);
    for (const auto& b : instance.right)
        check_bounds(b);

    // Unbounded caps collapse to the vertex degree; a lower bound above the
    // degree is plain infeasibility, not a malformed instance.
    auto effective = [](const BMatchingInstance::Bounds& b, long degree) {
        long hi = b.hi == BMatchingInstance::kUnbounded ? degree : std::min(b.hi, degree);
        return std::pair<long, long>(b.lo, hi);
    };
    for (int v = 0; v < nl; ++v)
        if (effective(instance.left[v], deg_left[v]).second < instance.left[v].lo)
            return std::nullopt;
    for (int v = 0; v < nr; ++v)
        if (effective(instance.right[v], deg_right[v]).second < instance.right[v].lo)
            return std::nullopt;

    // Circulation with lower bounds: vertices S, T, lefts, rights, SS, TT.
    // Degree intervals become arcs S->left and right->T with bounds [lo, hi];
    // every lower bound l splits into SS->head and tail->TT demand arcs of
    // capacity l, and T->S closes the circulation. Feasible iff the SS->TT
    // max flow saturates all demand.
    const int s = 0, t = 1;
    const int left0 = 2, right0 = 2 + nl;
    const int ss = 2 + nl + nr, tt = ss + 1;
    FlowNetwork net(tt + 1, ss, tt);

    long demand_total = 0;
    auto arc = [&](int u, int v, long lo, long hi) {
        int id = net.add_edge(u, v, hi - lo);
        if (lo > 0) {
            net.add_edge(ss, v, lo);
            net.add_edge(u, tt, lo);
            demand_total += lo;
        }
        return id;
    };
    for (int v = 0; v < nl; ++v) {
        auto [lo, hi] = effective(instance.left[v], deg_left[v]);
        arc(s, left0 + v, lo, hi);
    }
    for (int v = 0; v < nr; ++v) {
        auto [lo, hi] = effective(instance.right[v], deg_right[v]);
        arc(right0 + v, t, lo, hi);
    }
    std::vector<int> edge_arc(ne, -1);
    for (int e = 0; e < ne; ++e)
        edge_arc[e] = arc(left0 + instance.edges[e].first, right0 + instance.edges[e].second, 0, 1);
    net.add_edge(t, s, std::numeric_limits<long>::max() / 4);

    MaxFlowResult mf = max_flow(net);
    if (mf.value != demand_total)
        return std::nullopt;

    std::vector<int> chosen;
    for (int e = 0; e < ne; ++e)
        if (mf.flow[edge_arc[e]] > 0)
            chosen.push_back(e);
    return chosen;
}

} // namespace fairdiv
