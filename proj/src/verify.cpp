#include "at/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "at/json_io.hpp"

namespace at {

OrderedJson verdict_to_json(const Verdict& v) {
    OrderedJson j;
    j["pass"] = v.pass;
    OrderedJson clauses = OrderedJson::object();
    OrderedJson failures = OrderedJson::array();
    for (const VerdictClause& c : v.clauses) {
        clauses[c.name] = c.ok;
        if (!c.ok) {
            OrderedJson f;
            f["clause"] = c.name;
            f["detail"] = c.detail;
            failures.push_back(std::move(f));
        }
    }
    j["clauses"] = std::move(clauses);
    j["failures"] = std::move(failures);
    return j;
}

Verdict check_certificate(const Certificate& c, const PlaneGraph& g) {
    Verdict v;
    bool at4 = c.kind == CertificateKind::at4_matching;

    v.add("graph_digest", graph_sha256(g) == c.graph_sha256,
          "certificate was issued for a different graph");

    // Matching clauses. The budget reconstruction below needs d_M, so this
    // comes first; an AT5 certificate must carry no matching at all.
    std::set<int> covered;
    bool matching_ok = true;
    std::string matching_detail;
    for (const Edge& e : c.matching) {
        if (!g.graph().has_edge(e)) {
            matching_ok = false;
            matching_detail = "matching edge " + e.str() + " is not an edge of the graph";
        }
        if (!covered.insert(e.u).second || !covered.insert(e.v).second) {
            matching_ok = false;
            matching_detail = "matching edges share a vertex";
        }
    }
    if (!at4 && !c.matching.empty()) {
        matching_ok = false;
        matching_detail = "AT5 certificate carries a matching";
    }
    v.add("matching_valid", matching_ok, matching_detail);

    if (at4) {
        bool e1_ok = false;
        std::string detail = "no designated boundary edge e1";
        if (c.e1) {
            bool in_matching =
                std::find(c.matching.begin(), c.matching.end(), *c.e1) != c.matching.end();
            bool on_boundary = false;
            const FaceWalk& w = g.outer_face();
            for (std::size_t i = 0; i < w.size(); ++i)
                if (Edge(w[i], w[(i + 1) % w.size()]) == *c.e1) on_boundary = true;
            e1_ok = in_matching && on_boundary;
            detail = in_matching ? "e1 is not a boundary edge of the graph"
                                 : "e1 is missing from the matching";
        }
        v.add("e1_in_matching", e1_ok, e1_ok ? "" : detail);
    }

    // Arc coverage: exactly E(g) minus the matching (empty for AT5).
    std::set<Edge> expected(g.edges().begin(), g.edges().end());
    for (const Edge& e : c.matching) expected.erase(e);
    std::set<Edge> oriented;
    bool arcs_ok = true;
    std::string arcs_detail;
    for (const Arc& a : c.arcs) {
        if (a.tail == a.head || !g.graph().has_vertex(a.tail) || !g.graph().has_vertex(a.head)) {
            arcs_ok = false;
            arcs_detail = "arc " + a.str() + " is malformed";
            break;
        }
        if (!expected.count(a.edge()) || !oriented.insert(a.edge()).second) {
            arcs_ok = false;
            arcs_detail = "arc " + a.str() + " repeats an edge or orients a non-edge";
            break;
        }
    }
    if (arcs_ok && oriented.size() != expected.size()) {
        arcs_ok = false;
        arcs_detail = "some edges are not oriented";
    }
    v.add("arcs_cover_edges", arcs_ok, arcs_detail);

    // Budget: defined everywhere and within the kind's ceiling.
    int ceiling = at4 ? 4 : 5;
    bool budget_ok = true;
    std::string budget_detail;
    for (int vx : g.vertices()) {
        auto it = c.budget.find(vx);
        if (it == c.budget.end()) {
            budget_ok = false;
            budget_detail = "budget missing at " + std::to_string(vx);
            break;
        }
        if (it->second > ceiling || it->second < 1) {
            budget_ok = false;
            budget_detail = "budget " + std::to_string(it->second) + " at " +
                            std::to_string(vx) + " is outside [1," + std::to_string(ceiling) + "]";
            break;
        }
    }
    v.add("budget_within_kind", budget_ok, budget_detail);

    if (!arcs_ok || !budget_ok) return v;

    // Out-degree bounds and the diff, via both oracles.
    try {
        std::vector<Edge> kept(expected.begin(), expected.end());
        Graph base(g.vertices(), kept);
        Orientation d(base, c.arcs);

        bool bounds_ok = true;
        std::string bounds_detail;
        for (int vx : base.vertices()) {
            if (d.out_degree(vx) + 1 > c.budget.at(vx)) {
                bounds_ok = false;
                bounds_detail = "out-degree " + std::to_string(d.out_degree(vx)) + " at " +
                                std::to_string(vx) + " exceeds budget";
                break;
            }
        }
        v.add("out_degree_bounds", bounds_ok, bounds_detail);

        long long value = diff_coeff(d);
        v.add("diff_nonzero", value != 0, "orientation has diff 0");
        v.add("diff_matches", value == c.diff,
              "recomputed diff " + std::to_string(value) + " != recorded " +
                  std::to_string(c.diff));
        if (d.arc_count() <= kDiffEnumMaxArcs) {
            v.add("diff_enum_crosscheck", diff_enum(d).diff() == value,
                  "enumeration oracle disagrees with the coefficient oracle");
        }
    } catch (const error& e) {
        v.add("oracle_run", false, e.what());
    }
    return v;
}

bool list_coloring_exists(const Graph& g, const std::map<int, std::vector<int>>& lists) {
    require(g.vertex_count() <= kColoringMaxVertices, errc::oracle_too_large,
            "list coloring oracle capped at 16 vertices");
    std::vector<int> order = g.vertices();
    std::map<int, int> color;

    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return true;
        int v = order[i];
        auto it = lists.find(v);
        require(it != lists.end(), errc::precondition,
                "no list for vertex " + std::to_string(v));
        for (int c : it->second) {
            bool clash = false;
            for (int w : g.neighbors(v)) {
                auto cw = color.find(w);
                if (cw != color.end() && cw->second == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color[v] = c;
            if (self(self, i + 1)) return true;
            color.erase(v);
        }
        return false;
    };
    return dfs(dfs, 0);
}

SampleReport sampled_choosability_check(const Graph& g, const DegreeBudget& f, int samples,
                                        std::uint64_t seed) {
    require(g.vertex_count() <= kColoringMaxVertices, errc::oracle_too_large,
            "sampling oracle capped at 16 vertices");
    SampleReport report;
    long long universe = 0;
    for (int v : g.vertices()) {
        if (f.at(v) <= 0) {
            report.pass = false;
            report.counterexample = std::map<int, std::vector<int>>{{v, {}}};
            return report;
        }
        universe += f.at(v);
    }

    std::mt19937_64 rng(seed);
    std::vector<int> palette(static_cast<std::size_t>(universe));
    for (std::size_t i = 0; i < palette.size(); ++i) palette[i] = static_cast<int>(i);

    for (int s = 0; s < samples; ++s) {
        std::map<int, std::vector<int>> lists;
        for (int v : g.vertices()) {
            // partial Fisher-Yates draw of f(v) distinct colors
            std::vector<int> pool = palette;
            std::vector<int> list;
            for (int t = 0; t < f.at(v); ++t) {
                std::size_t j = t + static_cast<std::size_t>(rng() % (pool.size() - t));
                std::swap(pool[t], pool[j]);
                list.push_back(pool[t]);
            }
            std::sort(list.begin(), list.end());
            lists[v] = std::move(list);
        }
        ++report.samples_run;
        if (!list_coloring_exists(g, lists)) {
            report.pass = false;
            report.counterexample = std::move(lists);
            return report;
        }
    }
    return report;
}

namespace {

struct ExhaustiveSearch {
    const Graph& g;
    std::vector<int> order;
    std::map<int, std::vector<int>> lists;
    long long budget_nodes = 50'000'000;

    bool all_colorable(std::size_t i, int used, const DegreeBudget& f) {
        require(--budget_nodes > 0, errc::oracle_too_large,
                "exhaustive choosability budget exhausted");
        if (i == order.size()) return list_coloring_exists(g, lists);
        int v = order[i];
        int want = f.at(v);
        if (want == 0) {
            lists[v] = {};
            bool ok = all_colorable(i + 1, used, f);  // empty list: uncolorable
            lists.erase(v);
            return ok;
        }
        // Choose `fresh` new colors (forced to be used, used+1, ...) and the
        // rest from the existing palette; this is exact up to renaming colors.
        for (int fresh = 0; fresh <= want; ++fresh) {
            int old = want - fresh;
            if (old > used) continue;
            std::vector<int> pick(static_cast<std::size_t>(old));
            // enumerate old-color subsets of {0..used-1}
            auto subsets = [&](auto&& self, int start, int depth) -> bool {
                if (depth == old) {
                    std::vector<int> list = pick;
                    for (int t = 0; t < fresh; ++t) list.push_back(used + t);
                    lists[v] = list;
                    bool ok = all_colorable(i + 1, used + fresh, f);
                    lists.erase(v);
                    return ok;
                }
                for (int c = start; c < used; ++c) {
                    pick[static_cast<std::size_t>(depth)] = c;
                    if (!self(self, c + 1, depth + 1)) return false;
                }
                return true;
            };
            if (!subsets(subsets, 0, 0)) return false;
        }
        return true;
    }
};

} // namespace

bool exhaustive_choosability(const Graph& g, const DegreeBudget& f) {
    require(g.vertex_count() <= kExhaustiveMaxVertices, errc::oracle_too_large,
            "exhaustive choosability capped at 7 vertices");
    long long sum = 0;
    for (int v : g.vertices()) sum += f.at(v);
    require(sum <= kExhaustiveMaxBudgetSum, errc::oracle_too_large,
            "exhaustive choosability capped at budget sum 12");

    // A vertex with more budget than neighbors always has a spare color.
    Graph core = g;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (int v : core.vertices()) {
            if (f.at(v) > core.degree(v)) {
                core = core.without_vertex(v);
                shrunk = true;
                break;
            }
        }
    }
    if (core.vertices().empty()) return true;

    ExhaustiveSearch search{core, core.vertices(), {}};
    return search.all_colorable(0, 0, f);
}

} // namespace at
