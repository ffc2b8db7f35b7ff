#include "at/plane_graph.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace at {

namespace {

// Lexicographically least cyclic rotation. Face walks never repeat a directed
// edge, so the minimum is unique.
FaceWalk normalized(FaceWalk w) {
    if (w.empty()) return w;
    FaceWalk best = w;
    for (std::size_t s = 1; s < w.size(); ++s) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

std::vector<int> rotated_to_start_at(const std::vector<int>& cyc, int v) {
    auto it = std::find(cyc.begin(), cyc.end(), v);
    require(it != cyc.end(), errc::precondition, "vertex not on cycle");
    std::vector<int> out(it, cyc.end());
    out.insert(out.end(), cyc.begin(), it);
    return out;
}

// Walks the trace rule from directed edge (a -> b) until it closes; returns
// the vertex sequence of tails.
FaceWalk trace_orbit(const std::map<int, std::vector<int>>& rotation, int a, int b) {
    FaceWalk walk;
    int u = a, v = b;
    do {
        walk.push_back(u);
        const std::vector<int>& rot = rotation.at(v);
        auto it = std::find(rot.begin(), rot.end(), u);
        require(it != rot.end(), errc::embedding_invalid, "rotation misses neighbor");
        int w = (std::next(it) == rot.end()) ? rot.front() : *std::next(it);
        u = v;
        v = w;
    } while (!(u == a && v == b));
    return walk;
}

std::vector<FaceWalk> trace_all(const Graph& g, const std::map<int, std::vector<int>>& rotation) {
    std::set<std::pair<int, int>> seen;
    std::vector<FaceWalk> faces;
    for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (seen.count({a, b})) continue;
            FaceWalk w = trace_orbit(rotation, a, b);
            for (std::size_t i = 0; i < w.size(); ++i)
                require(seen.emplace(w[i], w[(i + 1) % w.size()]).second, errc::embedding_invalid,
                        "directed edge traced twice");
            faces.push_back(normalized(std::move(w)));
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

// Inserts `value` immediately after `anchor` in the cyclic list.
void insert_after(std::vector<int>& rot, int anchor, int value) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    require(it != rot.end(), errc::precondition, "rotation anchor missing");
    rot.insert(std::next(it), value);
}

std::map<int, int> component_labels(const Graph& g) {
    std::map<int, int> label;
    int next_label = 0;
    for (int v : g.vertices()) {
        if (label.count(v)) continue;
        std::vector<int> stack{v};
        label[v] = next_label;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x))
                if (!label.count(y)) {
                    label[y] = next_label;
                    stack.push_back(y);
                }
        }
        ++next_label;
    }
    return label;
}

} // namespace

PlaneGraph::PlaneGraph(Graph graph, std::map<int, std::vector<int>> rotation, FaceWalk outer_face)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    require(!graph_.edges().empty(), errc::invalid_input, "plane graph needs at least one edge");
    for (int v : graph_.vertices()) {
        auto it = rotation_.find(v);
        require(it != rotation_.end(), errc::invalid_input,
                "rotation missing for vertex " + std::to_string(v));
        std::vector<int> sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        require(sorted == graph_.neighbors(v), errc::invalid_input,
                "rotation at " + std::to_string(v) + " is not a permutation of its neighbors");
        // canonical phase: start each cyclic list at the least neighbor
        if (!it->second.empty()) it->second = rotated_to_start_at(it->second, sorted.front());
    }
    require(rotation_.size() == graph_.vertices().size(), errc::invalid_input,
            "rotation for unknown vertex");

    std::vector<FaceWalk> faces = trace_all(graph_, rotation_);

    // Euler check per component (components without edges have no faces).
    std::map<int, int> label = component_labels(graph_);
    std::map<int, long long> vcount, ecount, fcount;
    for (int v : graph_.vertices()) ++vcount[label.at(v)];
    for (const Edge& e : graph_.edges()) ++ecount[label.at(e.u)];
    for (const FaceWalk& f : faces) ++fcount[label.at(f.front())];
    for (auto [c, vc] : vcount) {
        if (!ecount.count(c)) continue;
        require(vc - ecount[c] + fcount[c] == 2, errc::embedding_invalid,
                "Euler's formula fails on a component");
    }

    require(!outer_face.empty(), errc::invalid_input, "outer face walk empty");
    outer_face_ = normalized(std::move(outer_face));
    require(std::binary_search(faces.begin(), faces.end(), outer_face_), errc::embedding_invalid,
            "designated outer face is not a traced face");
}

const std::vector<int>& PlaneGraph::rotation_at(int v) const {
    auto it = rotation_.find(v);
    require(it != rotation_.end(), errc::precondition, "unknown vertex " + std::to_string(v));
    return it->second;
}

int PlaneGraph::rotation_successor(int v, int from) const {
    const std::vector<int>& rot = rotation_at(v);
    auto it = std::find(rot.begin(), rot.end(), from);
    require(it != rot.end(), errc::precondition, "not a neighbor");
    return (std::next(it) == rot.end()) ? rot.front() : *std::next(it);
}

std::vector<FaceWalk> trace_faces(const PlaneGraph& g) {
    return trace_all(g.graph(), g.rotation());
}

bool is_2_connected(const PlaneGraph& g) {
    return g.graph().vertex_count() >= 3 && g.graph().is_connected() &&
           !has_articulation_vertex(g.graph());
}

bool is_near_triangulation(const PlaneGraph& g) {
    if (!is_2_connected(g)) return false;
    for (const FaceWalk& f : trace_faces(g))
        if (f != g.outer_face() && f.size() != 3) return false;
    return true;
}

bool BoundaryWalk::contains(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool BoundaryWalk::is_walk_edge(Edge e) const {
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (Edge(verts[i], verts[(i + 1) % verts.size()]) == e) return true;
    return false;
}

BoundaryWalk boundary(const PlaneGraph& g) {
    const FaceWalk& w = g.outer_face();
    std::set<int> distinct(w.begin(), w.end());
    require(distinct.size() == w.size() && w.size() >= 3, errc::not_two_connected,
            "outer face is not a simple cycle");
    return BoundaryWalk{w};  // normalized form already starts at the least vertex
}

BoundaryWalk boundary_from(const PlaneGraph& g, Edge e1) {
    BoundaryWalk b = boundary(g);
    require(b.is_walk_edge(e1), errc::precondition, "e1 is not a boundary edge");
    for (std::size_t i = 0; i < b.verts.size(); ++i) {
        if (Edge(b.verts[i], b.verts[(i + 1) % b.verts.size()]) == e1)
            return BoundaryWalk{rotated_to_start_at(b.verts, b.verts[i])};
    }
    fail(errc::precondition, "unreachable");
}

std::optional<Edge> find_chord(const PlaneGraph& g, const BoundaryWalk& b) {
    for (const Edge& e : g.edges())
        if (b.contains(e.u) && b.contains(e.v) && !b.is_walk_edge(e)) return e;
    return std::nullopt;
}

namespace {

// Splits a face between two of its walk positions by a new edge. When the face
// is the outer one, the side keeping the walk's position-0 directed edge stays
// outer.
PlaneGraph add_chord_in_face(const PlaneGraph& g, const FaceWalk& w, std::size_t p,
                             std::size_t q, bool face_is_outer) {
    const std::size_t len = w.size();
    int x = w[p], y = w[q];
    require(x != y && !g.graph().has_edge(Edge(x, y)), errc::precondition,
            "chord endpoints invalid");

    std::map<int, std::vector<int>> rot = g.rotation();
    insert_after(rot[x], w[(p + len - 1) % len], y);
    insert_after(rot[y], w[(q + len - 1) % len], x);

    FaceWalk outer = g.outer_face();
    if (face_is_outer) {
        // Side A runs forward from p to q, side B forward from q to p.
        bool zero_in_a = false;
        FaceWalk side_a;
        for (std::size_t t = p;; t = (t + 1) % len) {
            side_a.push_back(w[t]);
            if (t == 0) zero_in_a = true;
            if ((t + 1) % len == q) {
                side_a.push_back(w[q]);
                break;
            }
        }
        FaceWalk side_b;
        for (std::size_t t = q;; t = (t + 1) % len) {
            side_b.push_back(w[t]);
            if ((t + 1) % len == p) {
                side_b.push_back(w[p]);
                break;
            }
        }
        outer = zero_in_a ? side_a : side_b;
    }
    return PlaneGraph(g.graph().with_edge(Edge(x, y)), std::move(rot), std::move(outer));
}

} // namespace

ChordSplit split_at_chord(const PlaneGraph& g, Edge chord) {
    BoundaryWalk b = boundary(g);
    require(g.graph().has_edge(chord), errc::precondition, "chord is not an edge");
    require(b.contains(chord.u) && b.contains(chord.v) && !b.is_walk_edge(chord),
            errc::precondition, "edge " + chord.str() + " is not a boundary chord");

    std::vector<FaceWalk> faces = trace_faces(g);
    std::vector<FaceWalk> inner;
    for (const FaceWalk& f : faces)
        if (f != g.outer_face()) inner.push_back(f);

    // Faces on the same side of the chord are connected through shared
    // non-chord edges.
    std::map<Edge, std::vector<int>> edge_faces;
    for (int i = 0; i < static_cast<int>(inner.size()); ++i)
        for (std::size_t j = 0; j < inner[i].size(); ++j)
            edge_faces[Edge(inner[i][j], inner[i][(j + 1) % inner[i].size()])].push_back(i);

    std::vector<int> side(inner.size(), -1);
    int region_count = 0;
    for (int start = 0; start < static_cast<int>(inner.size()); ++start) {
        if (side[start] != -1) continue;
        int mark = (side[start] = region_count++);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < inner[f].size(); ++j) {
                Edge e(inner[f][j], inner[f][(j + 1) % inner[f].size()]);
                if (e == chord) continue;
                for (int other : edge_faces[e])
                    if (side[other] == -1) {
                        side[other] = mark;
                        stack.push_back(other);
                    }
            }
        }
    }
    require(region_count == 2, errc::precondition,
            "chord does not separate the interior into two regions");

    // part1 = side of the boundary segment starting at the chord occurrence
    // earliest on the outer walk.
    auto pos_of = [&](int v) {
        return static_cast<std::size_t>(
            std::find(b.verts.begin(), b.verts.end(), v) - b.verts.begin());
    };
    std::size_t p = pos_of(chord.u), q = pos_of(chord.v);
    if (p > q) std::swap(p, q);
    Edge first_seg_edge(b.verts[p], b.verts[(p + 1) % b.verts.size()]);
    require(edge_faces.at(first_seg_edge).size() == 1, errc::embedding_invalid,
            "boundary edge with two inner faces");
    int side1 = side[edge_faces.at(first_seg_edge).front()];

    auto build_part = [&](int side_id, FaceWalk outer_walk) {
        std::set<int> vs;
        std::set<Edge> es;
        for (int i = 0; i < static_cast<int>(inner.size()); ++i) {
            if (side[i] != side_id) continue;
            for (std::size_t j = 0; j < inner[i].size(); ++j) {
                vs.insert(inner[i][j]);
                es.insert(Edge(inner[i][j], inner[i][(j + 1) % inner[i].size()]));
            }
        }
        Graph sub(std::vector<int>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
        std::map<int, std::vector<int>> rot;
        for (int v : sub.vertices()) {
            for (int w : g.rotation_at(v))
                if (sub.has_edge(Edge(v, w))) rot[v].push_back(w);
        }
        return PlaneGraph(std::move(sub), std::move(rot), std::move(outer_walk));
    };

    // Outer walks: forward segment p..q closed by the chord, and the rest.
    FaceWalk walk1(b.verts.begin() + p, b.verts.begin() + q + 1);
    FaceWalk walk2(b.verts.begin() + q, b.verts.end());
    walk2.insert(walk2.end(), b.verts.begin(), b.verts.begin() + p + 1);

    PlaneGraph part1 = build_part(side1, walk1);
    PlaneGraph part2 = build_part(1 - side1, walk2);

    // ChordSplit contract checks.
    std::vector<int> inter;
    std::set_intersection(part1.vertices().begin(), part1.vertices().end(),
                          part2.vertices().begin(), part2.vertices().end(),
                          std::back_inserter(inter));
    require(inter == std::vector<int>({chord.u, chord.v}), errc::certificate_violation,
            "split parts overlap beyond the chord endpoints");
    std::vector<int> uni;
    std::set_union(part1.vertices().begin(), part1.vertices().end(), part2.vertices().begin(),
                   part2.vertices().end(), std::back_inserter(uni));
    require(uni == g.vertices(), errc::certificate_violation, "split loses vertices");
    std::vector<Edge> einter;
    std::set_intersection(part1.edges().begin(), part1.edges().end(), part2.edges().begin(),
                          part2.edges().end(), std::back_inserter(einter));
    require(einter == std::vector<Edge>({chord}), errc::certificate_violation,
            "split parts share edges beyond the chord");
    require(is_2_connected(part1) && is_2_connected(part2), errc::certificate_violation,
            "split produced a part that is not 2-connected");

    return ChordSplit{chord, std::move(part1), std::move(part2)};
}

std::pair<PlaneGraph, std::vector<int>> delete_boundary_vertex(const PlaneGraph& g, int v) {
    require(g.graph().vertex_count() >= 4, errc::precondition, "graph too small");
    require(is_near_triangulation(g), errc::precondition, "not a near-triangulation");
    BoundaryWalk b = boundary(g);
    require(!find_chord(g, b).has_value(), errc::precondition, "boundary has a chord");
    require(b.contains(v), errc::precondition, "vertex not on the boundary");

    std::vector<int> walk = rotated_to_start_at(b.verts, v);
    int succ = walk[1];                    // v1 when v is vn
    int pred = walk.back();                // v_{n-1}

    // Neighbors in rotation order from the walk successor to the predecessor;
    // the outer face forces succ to follow pred at v, so the rotation started
    // at succ ends at pred and the middle entries are the interior neighbors.
    std::vector<int> fan = rotated_to_start_at(g.rotation_at(v), succ);
    require(fan.back() == pred, errc::embedding_invalid,
            "rotation at boundary vertex inconsistent with the outer face");

    std::map<int, std::vector<int>> rot;
    for (const auto& [x, r] : g.rotation()) {
        if (x == v) continue;
        std::vector<int> filtered;
        for (int y : r)
            if (y != v) filtered.push_back(y);
        rot[x] = std::move(filtered);
    }

    // New outer face: trace from any outer directed edge avoiding v.
    FaceWalk outer;
    for (std::size_t i = 0; i < b.verts.size(); ++i) {
        int a = b.verts[i], c = b.verts[(i + 1) % b.verts.size()];
        if (a != v && c != v) {
            outer = trace_orbit(rot, a, c);
            break;
        }
    }

    PlaneGraph result(g.graph().without_vertex(v), std::move(rot), std::move(outer));
    require(is_near_triangulation(result), errc::certificate_violation,
            "deletion broke the near-triangulation invariant");
    return {std::move(result), std::move(fan)};
}

PlaneGraph triangulate_inner_faces(const PlaneGraph& g) {
    require(is_2_connected(g), errc::precondition, "triangulation needs a 2-connected input");
    PlaneGraph cur = g;
    for (;;) {
        std::vector<FaceWalk> faces = trace_faces(cur);
        const FaceWalk* pending = nullptr;
        for (const FaceWalk& f : faces)
            if (f != cur.outer_face() && f.size() > 3) {
                pending = &f;
                break;
            }
        if (!pending) break;

        const FaceWalk& w = *pending;
        const std::size_t len = w.size();
        std::size_t a_pos = static_cast<std::size_t>(
            std::min_element(w.begin(), w.end()) - w.begin());
        // Fan step first (ear at the least vertex's successor), then any ear.
        std::vector<std::size_t> ears{(a_pos + 1) % len};
        for (std::size_t i = 0; i < len; ++i)
            if (i != ears[0]) ears.push_back(i);

        bool inserted = false;
        for (std::size_t i : ears) {
            std::size_t p = (i + len - 1) % len, q = (i + 1) % len;
            if (w[p] != w[q] && !cur.graph().has_edge(Edge(w[p], w[q]))) {
                cur = add_chord_in_face(cur, w, p, q, false);
                inserted = true;
                break;
            }
        }
        require(inserted, errc::certificate_violation,
                "inner face admits no ear; input cannot be a simple plane graph");
    }
    return cur;
}

PlaneGraph biconnect(const PlaneGraph& g) {
    PlaneGraph cur = g;
    require(cur.graph().is_connected() && cur.graph().vertex_count() >= 3, errc::precondition,
            "biconnect needs a connected graph on >= 3 vertices");
    while (!is_2_connected(cur)) {
        std::vector<FaceWalk> faces = trace_faces(cur);
        bool inserted = false;
        for (const FaceWalk& w : faces) {
            const std::size_t len = w.size();
            std::map<int, std::vector<std::size_t>> occurrences;
            for (std::size_t i = 0; i < len; ++i) occurrences[w[i]].push_back(i);
            for (const auto& [vtx, occ] : occurrences) {
                if (occ.size() < 2) continue;
                for (std::size_t a = 0; a < occ.size() && !inserted; ++a)
                    for (std::size_t bidx = a + 1; bidx < occ.size() && !inserted; ++bidx) {
                        std::size_t p = (occ[a] + 1) % len, q = (occ[bidx] + 1) % len;
                        if (w[p] == w[q] || cur.graph().has_edge(Edge(w[p], w[q]))) continue;
                        cur = add_chord_in_face(cur, w, p, q, w == cur.outer_face());
                        inserted = true;
                    }
                if (inserted) break;
            }
            if (inserted) break;
        }
        require(inserted, errc::certificate_violation, "no augmenting edge found");
    }
    return cur;
}

namespace {

PlaneGraph from_faces(const std::vector<FaceWalk>& faces) {
    std::set<int> vs;
    std::set<Edge> es;
    for (const FaceWalk& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            vs.insert(f[i]);
            es.insert(Edge(f[i], f[(i + 1) % f.size()]));
        }
    Graph g(std::vector<int>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));

    // rotation(v): successor map from face corners (a, v, b), chained into the
    // single cycle around v.
    std::map<int, std::map<int, int>> succ;
    for (const FaceWalk& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[(i + f.size() - 1) % f.size()], v = f[i], b = f[(i + 1) % f.size()];
            require(succ[v].emplace(a, b).second, errc::invalid_input,
                    "face list is not a consistent embedding");
        }
    std::map<int, std::vector<int>> rot;
    for (int v : g.vertices()) {
        int start = g.neighbors(v).front();
        int cur = start;
        do {
            rot[v].push_back(cur);
            cur = succ.at(v).at(cur);
        } while (cur != start);
        require(rot[v].size() == g.neighbors(v).size(), errc::invalid_input,
                "corners at a vertex do not chain into one cycle");
    }
    return PlaneGraph(std::move(g), std::move(rot), faces.front());
}

PlaneGraph make_cycle(int n) {
    std::vector<int> vs;
    std::vector<Edge> es;
    std::map<int, std::vector<int>> rot;
    FaceWalk outer;
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1, next = i == n ? 1 : i + 1;
        vs.push_back(i);
        es.emplace_back(i, next);
        rot[i] = {prev, next};
        outer.push_back(i);
    }
    return PlaneGraph(Graph(vs, es), std::move(rot), std::move(outer));
}

PlaneGraph make_wheel(int n) {
    int hub = n + 1;
    std::vector<int> vs;
    std::vector<Edge> es;
    std::map<int, std::vector<int>> rot;
    FaceWalk outer;
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1, next = i == n ? 1 : i + 1;
        vs.push_back(i);
        es.emplace_back(i, next);
        es.emplace_back(i, hub);
        rot[i] = {next, hub, prev};
        outer.push_back(i);
        rot[hub].push_back(i);
    }
    vs.push_back(hub);
    return PlaneGraph(Graph(vs, es), std::move(rot), std::move(outer));
}

PlaneGraph make_fan(int n) {
    int apex = n + 1;
    std::vector<int> vs;
    std::vector<Edge> es;
    std::map<int, std::vector<int>> rot;
    FaceWalk outer;
    for (int i = 1; i <= n; ++i) {
        vs.push_back(i);
        if (i < n) es.emplace_back(i, i + 1);
        es.emplace_back(i, apex);
        if (i == 1)
            rot[i] = {2, apex};
        else if (i == n)
            rot[i] = {apex, i - 1};
        else
            rot[i] = {i + 1, apex, i - 1};
        outer.push_back(i);
        rot[apex].push_back(i);
    }
    vs.push_back(apex);
    outer.push_back(apex);
    return PlaneGraph(Graph(vs, es), std::move(rot), std::move(outer));
}

// New vertex of id `nv` inside triangle face (a, b, c).
PlaneGraph insert_vertex_in_triangle(const PlaneGraph& g, const FaceWalk& f, int nv) {
    require(f.size() == 3, errc::precondition, "stacking face must be a triangle");
    std::map<int, std::vector<int>> rot = g.rotation();
    for (std::size_t i = 0; i < 3; ++i) insert_after(rot[f[i]], f[(i + 2) % 3], nv);
    rot[nv] = {f[0], f[2], f[1]};
    Graph base = g.graph().with_vertex(nv);
    for (int x : f) base = base.with_edge(Edge(x, nv));
    return PlaneGraph(std::move(base), std::move(rot), g.outer_face());
}

PlaneGraph make_stacked(int n, std::uint64_t seed) {
    PlaneGraph cur = make_cycle(3);
    std::mt19937_64 rng(seed);
    for (int nv = 4; nv <= n; ++nv) {
        std::vector<FaceWalk> inner;
        for (const FaceWalk& f : trace_faces(cur))
            if (f != cur.outer_face()) inner.push_back(f);
        const FaceWalk& pick = inner[static_cast<std::size_t>(rng() % inner.size())];
        cur = insert_vertex_in_triangle(cur, pick, nv);
    }
    return cur;
}

PlaneGraph make_tetrahedron() {
    return from_faces({{3, 2, 1}, {1, 2, 4}, {2, 3, 4}, {3, 1, 4}});
}

PlaneGraph make_octahedron() {
    return from_faces({{1, 2, 3},
                       {1, 3, 4},
                       {1, 4, 5},
                       {1, 5, 2},
                       {6, 3, 2},
                       {6, 4, 3},
                       {6, 5, 4},
                       {6, 2, 5}});
}

PlaneGraph make_icosahedron() {
    return from_faces({{1, 2, 3},   {1, 3, 4},   {1, 4, 5},    {1, 5, 6},    {1, 6, 2},
                       {3, 2, 7},   {4, 3, 8},   {5, 4, 9},    {6, 5, 10},   {2, 6, 11},
                       {7, 8, 3},   {8, 9, 4},   {9, 10, 5},   {10, 11, 6},  {11, 7, 2},
                       {12, 8, 7},  {12, 9, 8},  {12, 10, 9},  {12, 11, 10}, {12, 7, 11}});
}

} // namespace

PlaneGraph generate(GraphKind kind, int n, std::uint64_t seed) {
    switch (kind) {
        case GraphKind::cycle:
            require(n >= 3, errc::invalid_input, "cycle needs n >= 3");
            return make_cycle(n);
        case GraphKind::wheel:
            require(n >= 3, errc::invalid_input, "wheel needs n >= 3");
            return make_wheel(n);
        case GraphKind::fan:
            require(n >= 3, errc::invalid_input, "fan needs n >= 3");
            return make_fan(n);
        case GraphKind::stacked:
            require(n >= 3, errc::invalid_input, "stacked triangulation needs n >= 3");
            return make_stacked(n, seed);
        case GraphKind::tetrahedron:
            return make_tetrahedron();
        case GraphKind::octahedron:
            return make_octahedron();
        case GraphKind::icosahedron:
            return make_icosahedron();
    }
    fail(errc::invalid_input, "unknown kind");
}

PlaneGraph generate_named(const std::string& name) {
    if (name == "tetrahedron") return make_tetrahedron();
    if (name == "octahedron") return make_octahedron();
    if (name == "icosahedron") return make_icosahedron();
    fail(errc::invalid_input, "unknown named graph: " + name);
}

} // namespace at
