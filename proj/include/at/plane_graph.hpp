#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "at/graph.hpp"

namespace at {

// A face is the directed closed walk of a trace orbit, stored as its vertex
// sequence and normalized to the lexicographically least cyclic rotation.
using FaceWalk = std::vector<int>;

// Plane graph: simple graph plus a rotation system (cyclic neighbor order at
// every vertex) and a designated outer face. Faces are the orbits of
// next(u->v) = (v, successor of u in rotation(v)); with that rule each face's
// region lies to the right of its walk. Construction validates everything:
// rotations are permutations of the neighbor sets, the trace covers each
// directed edge once, Euler's formula holds per component, and the outer face
// is one of the traced orbits. Values are immutable; every operation returns
// a new graph, with vertex ids preserved.
class PlaneGraph {
  public:
    PlaneGraph(Graph graph, std::map<int, std::vector<int>> rotation, FaceWalk outer_face);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& vertices() const { return graph_.vertices(); }
    const std::vector<Edge>& edges() const { return graph_.edges(); }
    const std::map<int, std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<int>& rotation_at(int v) const;
    const FaceWalk& outer_face() const { return outer_face_; }

    // Neighbor that follows `from` in the cyclic rotation at v.
    int rotation_successor(int v, int from) const;

    bool operator==(const PlaneGraph&) const = default;

  private:
    Graph graph_;
    std::map<int, std::vector<int>> rotation_;
    FaceWalk outer_face_;
};

// Outer cycle (v1, v2, ..., vn) with the designated edge e1 = v1v2. Only
// defined when the outer face is a simple cycle.
struct BoundaryWalk {
    std::vector<int> verts;

    int n() const { return static_cast<int>(verts.size()); }
    int v1() const { return verts.front(); }
    int v2() const { return verts[1]; }
    int vn() const { return verts.back(); }
    int vn_minus_1() const { return verts[n() - 2]; }
    Edge e1() const { return Edge(v1(), v2()); }
    bool contains(int v) const;
    bool is_walk_edge(Edge e) const;
};

struct ChordSplit {
    Edge chord;
    PlaneGraph part1;  // side holding the boundary segment that starts at the
                       // chord occurrence earliest on the outer walk
    PlaneGraph part2;
};

std::vector<FaceWalk> trace_faces(const PlaneGraph& g);

bool is_2_connected(const PlaneGraph& g);
bool is_near_triangulation(const PlaneGraph& g);

// Outer cycle started at its least vertex (walk direction is the trace
// direction of the stored outer face).
BoundaryWalk boundary(const PlaneGraph& g);
// Outer cycle rotated so that it starts with e1, oriented as the outer face
// traverses it.
BoundaryWalk boundary_from(const PlaneGraph& g, Edge e1);

// Least edge joining two boundary vertices that is not a walk edge.
std::optional<Edge> find_chord(const PlaneGraph& g, const BoundaryWalk& b);

ChordSplit split_at_chord(const PlaneGraph& g, Edge chord);

// Deletes boundary vertex v from a near-triangulation with chordless boundary
// and >= 4 vertices; returns the smaller graph and v's neighbors in rotation
// order from its walk-successor to its walk-predecessor (the interior
// neighbors are the middle entries).
std::pair<PlaneGraph, std::vector<int>> delete_boundary_vertex(const PlaneGraph& g, int v);

// Adds chords until every inner face is a triangle; fan from the least vertex
// of each face, falling back to any ear whose chord is not already an edge.
PlaneGraph triangulate_inner_faces(const PlaneGraph& g);

// Adds edges inside faces with repeated vertices until 2-connected.
PlaneGraph biconnect(const PlaneGraph& g);

enum class GraphKind { cycle, wheel, fan, stacked, tetrahedron, octahedron, icosahedron };

// Deterministic generators; `seed` only matters for stacked triangulations.
PlaneGraph generate(GraphKind kind, int n = 0, std::uint64_t seed = 0);
PlaneGraph generate_named(const std::string& name);

} // namespace at
