#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "at/plane_graph.hpp"
#include "at/witnessed.hpp"

namespace fixtures {

inline at::Graph k3() {
    return at::Graph({1, 2, 3}, {at::Edge(1, 2), at::Edge(1, 3), at::Edge(2, 3)});
}

inline at::Graph k4() {
    return at::Graph({1, 2, 3, 4}, {at::Edge(1, 2), at::Edge(1, 3), at::Edge(1, 4),
                                    at::Edge(2, 3), at::Edge(2, 4), at::Edge(3, 4)});
}

inline at::Graph cycle_graph(int n) {
    std::vector<int> vs;
    std::vector<at::Edge> es;
    for (int i = 1; i <= n; ++i) {
        vs.push_back(i);
        es.emplace_back(i, i % n + 1);
    }
    return at::Graph(vs, es);
}

inline at::Graph path_graph(int n) {
    std::vector<int> vs;
    std::vector<at::Edge> es;
    for (int i = 1; i <= n; ++i) {
        vs.push_back(i);
        if (i < n) es.emplace_back(i, i + 1);
    }
    return at::Graph(vs, es);
}

// Orient every edge from its smaller to its larger endpoint.
inline at::Orientation acyclic_orientation(const at::Graph& g) {
    std::vector<at::Arc> arcs;
    for (const at::Edge& e : g.edges()) arcs.push_back({e.u, e.v});
    return at::Orientation(g, arcs);
}

inline at::Orientation directed_cycle(int n) {
    at::Graph g = cycle_graph(n);
    std::vector<at::Arc> arcs;
    for (int i = 1; i <= n; ++i) arcs.push_back({i, i % n + 1});
    return at::Orientation(g, arcs);
}

inline at::Orientation seeded_orientation(const at::Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<at::Arc> arcs;
    for (const at::Edge& e : g.edges()) {
        if (rng() & 1)
            arcs.push_back({e.u, e.v});
        else
            arcs.push_back({e.v, e.u});
    }
    return at::Orientation(g, arcs);
}

// Connected simple graph on n vertices with about extra additional edges
// beyond a random spanning tree.
inline at::Graph seeded_graph(int n, int extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<at::Edge> es;
    for (int v = 2; v <= n; ++v) es.insert(at::Edge(v, 1 + static_cast<int>(rng() % (v - 1))));
    std::size_t want = es.size() + static_cast<std::size_t>(extra);
    std::size_t cap = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (int t = 0; t < 50 * extra && es.size() < std::min(want, cap); ++t) {
        int a = 1 + static_cast<int>(rng() % n);
        int b = 1 + static_cast<int>(rng() % n);
        if (a != b) es.insert(at::Edge(a, b));
    }
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    return at::Graph(vs, std::vector<at::Edge>(es.begin(), es.end()));
}

// Witness from a seeded orientation with nonzero diff, budget d+ + 1; falls
// back to the acyclic orientation (diff 1) when sampling keeps missing.
inline at::WitnessedGraph seeded_witness(const at::Graph& g, std::uint64_t seed) {
    for (int tries = 0; tries < 40; ++tries) {
        at::Orientation d = seeded_orientation(g, seed + 7919 * tries);
        long long diff = at::diff_coeff(d);
        if (diff == 0) continue;
        std::map<int, int> f;
        for (int v : g.vertices()) f[v] = d.out_degree(v) + 1;
        return at::WitnessedGraph::create(g, at::DegreeBudget(f), d, diff);
    }
    at::Orientation d = acyclic_orientation(g);
    std::map<int, int> f;
    for (int v : g.vertices()) f[v] = d.out_degree(v) + 1;
    return at::WitnessedGraph::create(g, at::DegreeBudget(f), d, 1);
}

// The acceptance corpus: named solids, wheels, fans, cycles, seeded stacked
// triangulations; at least 40 graphs.
inline std::vector<std::pair<std::string, at::PlaneGraph>> acceptance_corpus() {
    std::vector<std::pair<std::string, at::PlaneGraph>> out;
    out.emplace_back("tetrahedron", at::generate(at::GraphKind::tetrahedron));
    out.emplace_back("octahedron", at::generate(at::GraphKind::octahedron));
    out.emplace_back("icosahedron", at::generate(at::GraphKind::icosahedron));
    for (int n = 4; n <= 9; ++n)
        out.emplace_back("wheel" + std::to_string(n), at::generate(at::GraphKind::wheel, n));
    for (int n = 3; n <= 8; ++n)
        out.emplace_back("fan" + std::to_string(n), at::generate(at::GraphKind::fan, n));
    for (int n = 4; n <= 8; ++n)
        out.emplace_back("cycle" + std::to_string(n), at::generate(at::GraphKind::cycle, n));
    for (int n : {10, 12})
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            out.emplace_back("stacked" + std::to_string(n) + "_s" + std::to_string(seed),
                             at::generate(at::GraphKind::stacked, n, seed));
    return out;
}

} // namespace fixtures
