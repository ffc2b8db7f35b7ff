#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "at/error.hpp"

namespace at {

// Undirected edge, stored with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        require(a != b, errc::invalid_input, "loop edge " + std::to_string(a));
    }
    auto operator<=>(const Edge&) const = default;

    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }
    std::string str() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

// Immutable simple undirected graph over small integer vertex ids.
// Ids are stable: subgraph operations never re-index.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const { return adjacency_.count(v) > 0; }
    bool has_edge(Edge e) const;
    // Neighbors in ascending id order.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    Graph without_edge(Edge e) const;
    Graph without_vertex(int v) const;
    Graph with_edge(Edge e) const;
    Graph with_vertex(int v) const;

    bool is_connected() const;
    bool operator==(const Graph&) const = default;

  private:
    std::vector<int> vertices_;           // ascending
    std::vector<Edge> edges_;             // ascending (lexicographic)
    std::map<int, std::vector<int>> adjacency_;
};

// Connectivity ignoring isolated vertices is not wanted here: every vertex counts.
bool has_articulation_vertex(const Graph& g);

} // namespace at
