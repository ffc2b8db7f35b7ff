#include "at/graph.hpp"

#include <algorithm>

namespace at {

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    require(std::adjacent_find(vertices_.begin(), vertices_.end()) == vertices_.end(),
            errc::invalid_input, "duplicate vertex id");
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
            errc::invalid_input, "duplicate edge");
    for (int v : vertices_) adjacency_[v] = {};
    for (const Edge& e : edges_) {
        require(adjacency_.count(e.u) && adjacency_.count(e.v), errc::invalid_input,
                "edge endpoint missing: " + e.str());
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& [v, nbrs] : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adjacency_.find(v);
    require(it != adjacency_.end(), errc::precondition, "unknown vertex " + std::to_string(v));
    return it->second;
}

Graph Graph::without_edge(Edge e) const {
    require(has_edge(e), errc::precondition, "no such edge " + e.str());
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (const Edge& f : edges_)
        if (f != e) es.push_back(f);
    return Graph(vertices_, std::move(es));
}

Graph Graph::without_vertex(int v) const {
    require(has_vertex(v), errc::precondition, "no such vertex " + std::to_string(v));
    std::vector<int> vs;
    for (int w : vertices_)
        if (w != v) vs.push_back(w);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (!e.touches(v)) es.push_back(e);
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::with_edge(Edge e) const {
    require(!has_edge(e), errc::precondition, "edge already present " + e.str());
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(vertices_, std::move(es));
}

Graph Graph::with_vertex(int v) const {
    require(!has_vertex(v), errc::precondition, "vertex already present");
    std::vector<int> vs = vertices_;
    vs.push_back(v);
    return Graph(std::move(vs), edges_);
}

bool Graph::is_connected() const {
    if (vertices_.empty()) return true;
    std::set<int> seen{vertices_.front()};
    std::vector<int> stack{vertices_.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vertices_.size();
}

namespace {

struct ArticulationDfs {
    const Graph& g;
    std::map<int, int> disc, low;
    int timer = 0;
    bool found = false;

    explicit ArticulationDfs(const Graph& graph) : g(graph) {}

    void run(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (disc.count(w)) {
                low[v] = std::min(low[v], disc[w]);
            } else {
                ++children;
                run(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent != -1 && low[w] >= disc[v]) found = true;
            }
        }
        if (parent == -1 && children > 1) found = true;
    }
};

} // namespace

bool has_articulation_vertex(const Graph& g) {
    if (g.vertices().empty()) return false;
    ArticulationDfs dfs(g);
    dfs.run(g.vertices().front(), -1);
    return dfs.found;
}

} // namespace at
