#include "at/oracles.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace at {

namespace {

// Small deterministic max-flow (BFS augmenting paths, fixed adjacency order).
struct FlowNet {
    struct E {
        int to, rev, cap;
    };
    std::vector<std::vector<E>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add(int a, int b, int cap) {
        adj[a].push_back({b, static_cast<int>(adj[b].size()), cap});
        adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0});
    }

    int max_flow(int s, int t) {
        int total = 0;
        for (;;) {
            std::vector<int> prev_node(adj.size(), -1), prev_edge(adj.size(), -1);
            std::queue<int> q;
            q.push(s);
            prev_node[s] = s;
            while (!q.empty() && prev_node[t] == -1) {
                int v = q.front();
                q.pop();
                for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
                    const E& e = adj[v][i];
                    if (e.cap > 0 && prev_node[e.to] == -1) {
                        prev_node[e.to] = v;
                        prev_edge[e.to] = i;
                        q.push(e.to);
                    }
                }
            }
            if (prev_node[t] == -1) return total;
            int bottleneck = std::numeric_limits<int>::max();
            for (int v = t; v != s; v = prev_node[v])
                bottleneck = std::min(bottleneck, adj[prev_node[v]][prev_edge[v]].cap);
            for (int v = t; v != s; v = prev_node[v]) {
                E& e = adj[prev_node[v]][prev_edge[v]];
                e.cap -= bottleneck;
                adj[v][e.rev].cap += bottleneck;
            }
            total += bottleneck;
        }
    }
};

} // namespace

std::optional<Orientation> orientation_with_outdegrees(const Graph& g, const OutDegrees& d) {
    long long sum = 0;
    for (auto [v, k] : d) {
        require(g.has_vertex(v), errc::invalid_input, "unknown vertex in target");
        sum += k;
    }
    require(sum == g.edge_count(), errc::invalid_input, "out-degree sum != edge count");
    for (auto [v, k] : d)
        if (k < 0 || k > g.degree(v)) return std::nullopt;

    int m = g.edge_count();
    std::map<int, int> vnode;
    for (int v : g.vertices()) vnode.emplace(v, 1 + m + static_cast<int>(vnode.size()));
    int source = 0, sink = 1 + m + static_cast<int>(vnode.size());

    FlowNet net(sink + 1);
    for (int i = 0; i < m; ++i) {
        net.add(source, 1 + i, 1);
        net.add(1 + i, vnode.at(g.edges()[i].u), 1);
        net.add(1 + i, vnode.at(g.edges()[i].v), 1);
    }
    for (auto [v, node] : vnode) net.add(node, sink, d.count(v) ? d.at(v) : 0);

    if (net.max_flow(source, sink) != m) return std::nullopt;

    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        // The saturated edge-node arc names the tail.
        int tail = -1;
        for (const FlowNet::E& out : net.adj[1 + i]) {
            if (out.to == source) continue;
            if (out.cap == 0) {  // unit consumed
                tail = out.to == vnode.at(e.u) ? e.u : e.v;
                break;
            }
        }
        require(tail != -1, errc::certificate_violation, "flow left an edge unassigned");
        arcs.push_back({tail, e.other(tail)});
    }
    return Orientation(g, arcs);
}

bool is_f_AT(const Orientation& d, const DegreeBudget& f) {
    for (int v : d.graph().vertices())
        if (d.out_degree(v) > f.at(v) - 1) return false;
    long long value;
    try {
        value = diff_coeff(d);
    } catch (const error& e) {
        if (e.code() != errc::oracle_too_large) throw;
        value = diff_enum(d).diff();
    }
    return value != 0;
}

std::optional<Orientation> find_f_AT_orientation(const Graph& g, const DegreeBudget& f,
                                                 int max_edges) {
    require(g.edge_count() <= max_edges, errc::oracle_too_large,
            "find_f_AT_orientation: edge count above brute-force cap");
    for (int v : g.vertices())
        if (f.at(v) <= 0 && g.degree(v) > 0) return std::nullopt;

    // Accumulate the signed orientation count per admissible out-degree
    // vector; a nonzero total is the raw coefficient, so every orientation
    // realizing that vector has nonzero diff.
    int m = g.edge_count();
    std::map<OutDegrees, long long> coeffs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        OutDegrees out;
        for (int v : g.vertices()) out[v] = 0;
        bool ok = true;
        int descents = 0;
        for (int i = 0; i < m && ok; ++i) {
            const Edge& e = g.edges()[i];
            int tail = (mask >> i) & 1 ? e.v : e.u;
            if ((mask >> i) & 1) descents ^= 1;
            if (++out[tail] > f.at(tail) - 1) ok = false;
        }
        if (!ok) continue;
        coeffs[out] += descents ? -1 : 1;
    }
    for (const auto& [out, c] : coeffs)
        if (c != 0) {
            auto realized = orientation_with_outdegrees(g, out);
            require(realized.has_value(), errc::certificate_violation,
                    "nonzero coefficient but no realizing orientation");
            return realized;
        }
    return std::nullopt;
}

int at_number(const Graph& g, int max_edges) {
    int max_degree = 0;
    for (int v : g.vertices()) max_degree = std::max(max_degree, g.degree(v));
    for (int k = 1; k <= max_degree + 1; ++k) {
        if (find_f_AT_orientation(g, DegreeBudget::constant(g, k), max_edges)) return k;
    }
    require(false, errc::certificate_violation, "acyclic orientation bound violated");
    return -1;
}

} // namespace at
