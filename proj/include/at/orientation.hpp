#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "at/graph.hpp"

namespace at {

struct Arc {
    int tail;
    int head;
    auto operator<=>(const Arc&) const = default;
    Edge edge() const { return Edge(tail, head); }
    std::string str() const {
        return std::to_string(tail) + "->" + std::to_string(head);
    }
};

// Out-degree vector, used both as d+_D and as a target exponent vector.
using OutDegrees = std::map<int, int>;

// An orientation of every edge of a base graph. The base need not be plane
// (Case 2 gadget graphs are abstract).
class Orientation {
  public:
    Orientation() = default;
    Orientation(Graph base, const std::vector<Arc>& arcs);

    const Graph& graph() const { return graph_; }
    const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by edge
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    Arc arc_of(Edge e) const;
    int out_degree(int v) const;
    const OutDegrees& out_degrees() const { return out_degrees_; }
    bool is_sink(int v) const { return out_degree(v) == 0; }
    std::vector<int> out_neighbors(int v) const;

    // Drops the arc together with its edge.
    Orientation without_arc(Arc a) const;
    Orientation with_arc(Arc a) const;
    Orientation restricted(const Graph& target) const;

    // Number of arcs with tail > head, mod 2. Relates diff to the raw
    // graph-polynomial coefficient.
    int descent_parity() const;

    bool operator==(const Orientation&) const = default;

  private:
    Graph graph_;
    std::vector<Arc> arcs_;
    OutDegrees out_degrees_;
};

} // namespace at
