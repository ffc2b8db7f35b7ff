#include "at/orientation.hpp"

#include <algorithm>

namespace at {

Orientation::Orientation(Graph base, const std::vector<Arc>& arcs) : graph_(std::move(base)) {
    require(arcs.size() == graph_.edges().size(), errc::invalid_input,
            "arc count does not match edge count");
    std::map<Edge, Arc> by_edge;
    for (const Arc& a : arcs) {
        Edge e = a.edge();
        require(graph_.has_edge(e), errc::invalid_input, "arc on non-edge " + a.str());
        require(by_edge.emplace(e, a).second, errc::invalid_input,
                "edge oriented twice " + e.str());
    }
    for (int v : graph_.vertices()) out_degrees_[v] = 0;
    arcs_.reserve(arcs.size());
    for (const auto& [e, a] : by_edge) {
        arcs_.push_back(a);
        ++out_degrees_[a.tail];
    }
}

Arc Orientation::arc_of(Edge e) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), e,
                               [](const Arc& a, const Edge& key) { return a.edge() < key; });
    require(it != arcs_.end() && it->edge() == e, errc::precondition,
            "no arc on edge " + e.str());
    return *it;
}

int Orientation::out_degree(int v) const {
    auto it = out_degrees_.find(v);
    require(it != out_degrees_.end(), errc::precondition,
            "unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<int> Orientation::out_neighbors(int v) const {
    std::vector<int> out;
    for (const Arc& a : arcs_)
        if (a.tail == v) out.push_back(a.head);
    return out;
}

Orientation Orientation::without_arc(Arc a) const {
    require(arc_of(a.edge()) == a, errc::precondition, "arc not present " + a.str());
    std::vector<Arc> rest;
    rest.reserve(arcs_.size() - 1);
    for (const Arc& b : arcs_)
        if (b != a) rest.push_back(b);
    return Orientation(graph_.without_edge(a.edge()), rest);
}

Orientation Orientation::with_arc(Arc a) const {
    std::vector<Arc> all = arcs_;
    all.push_back(a);
    Graph base = graph_;
    if (!base.has_vertex(a.tail)) base = base.with_vertex(a.tail);
    if (!base.has_vertex(a.head)) base = base.with_vertex(a.head);
    return Orientation(base.with_edge(a.edge()), all);
}

Orientation Orientation::restricted(const Graph& target) const {
    std::vector<Arc> kept;
    for (const Arc& a : arcs_) {
        if (target.has_edge(a.edge())) kept.push_back(a);
    }
    require(kept.size() == target.edges().size(), errc::precondition,
            "target has edges the orientation lacks");
    return Orientation(target, kept);
}

int Orientation::descent_parity() const {
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.tail > a.head) d ^= 1;
    return d;
}

} // namespace at
