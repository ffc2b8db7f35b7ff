#include "at/witnessed.hpp"

#include <algorithm>

namespace at {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    require(!__builtin_mul_overflow(a, b, &r), errc::overflow, "diff product overflow");
    return r;
}

} // namespace

WitnessedGraph WitnessedGraph::create(Graph graph, DegreeBudget budget, Orientation witness,
                                      long long claimed_diff) {
    require(witness.graph() == graph, errc::certificate_violation,
            "witness does not orient exactly the graph's edges");
    require(budget.defined_on(graph), errc::certificate_violation,
            "budget undefined on some vertex");
    for (int v : graph.vertices())
        require(witness.out_degree(v) + 1 <= budget.at(v), errc::certificate_violation,
                "out-degree bound fails at " + std::to_string(v));
    require(claimed_diff != 0, errc::certificate_violation, "claimed diff is zero");
    long long actual = diff_coeff(witness);
    require(actual == claimed_diff, errc::certificate_violation,
            "coefficient oracle disagrees with claimed diff");
    if (witness.arc_count() <= kEnumCheckMaxArcs)
        require(diff_enum(witness).diff() == claimed_diff, errc::certificate_violation,
                "enumeration oracle disagrees with claimed diff");
    return WitnessedGraph(std::move(graph), std::move(budget), std::move(witness), claimed_diff);
}

WitnessedGraph WitnessedGraph::with_budget(DegreeBudget budget) const {
    return create(graph_, std::move(budget), witness_, diff_value_);
}

EdgeRemoval remove_edge_keep_AT(const WitnessedGraph& w, Edge e) {
    require(w.graph().has_edge(e), errc::precondition, "no such edge " + e.str());
    Arc arc = w.witness().arc_of(e);
    Graph reduced_graph = w.graph().without_edge(e);

    // Tail branch: the witness minus the arc realizes d - 1_tail directly.
    Orientation tail_witness = w.witness().without_arc(arc);
    long long tail_diff = diff_coeff(tail_witness);
    if (tail_diff != 0) {
        return EdgeRemoval{
            WitnessedGraph::create(reduced_graph, w.budget().reduced(arc.tail),
                                   std::move(tail_witness), tail_diff),
            arc.tail, true};
    }

    // Head branch: realize d - 1_head by flow. The coefficient identity
    // coeff_G(d) = coeff_{G-e}(d-1_u) - coeff_{G-e}(d-1_v) makes this branch
    // nonzero whenever the tail branch vanished.
    OutDegrees target = w.witness().out_degrees();
    target[arc.head] -= 1;
    long long head_coeff = coeff(reduced_graph, target);
    require(head_coeff != 0, errc::certificate_violation,
            "both reduced coefficients vanish; witness was not valid");
    auto realized = orientation_with_outdegrees(reduced_graph, target);
    require(realized.has_value(), errc::certificate_violation,
            "nonzero coefficient but no realizing orientation");
    long long head_diff = diff_coeff(*realized);
    return EdgeRemoval{WitnessedGraph::create(reduced_graph, w.budget().reduced(arc.head),
                                              std::move(*realized), head_diff),
                       arc.head, false};
}

WitnessedGraph forced_edge_removal(const WitnessedGraph& w, Edge e, int forced_reduction) {
    require(e.touches(forced_reduction), errc::precondition,
            "forced endpoint not on the edge");
    int v = e.other(forced_reduction);
    bool case_a = w.budget().at(v) == 1;
    bool case_b = false;
    if (w.budget().at(v) == 2)
        for (int x : w.graph().neighbors(v))
            if (x != forced_reduction && w.budget().at(x) == 1) case_b = true;
    require(case_a || case_b, errc::precondition,
            "no forcing shape applies to " + e.str());

    EdgeRemoval r = remove_edge_keep_AT(w, e);
    require(r.reduced_vertex == forced_reduction, errc::certificate_violation,
            "forced removal reduced the wrong endpoint");
    return r.result;
}

Deg2Removal remove_deg2_vertex_keep_AT(const WitnessedGraph& w, int x, int first_neighbor) {
    const std::vector<int>& nbrs = w.graph().neighbors(x);
    require(nbrs.size() == 2, errc::precondition,
            "vertex " + std::to_string(x) + " does not have degree 2");
    require(w.budget().at(x) == 2, errc::precondition, "budget at the removed vertex must be 2");
    require(nbrs[0] == first_neighbor || nbrs[1] == first_neighbor, errc::precondition,
            "first_neighbor is not adjacent");
    int u = first_neighbor;
    int v = nbrs[0] == u ? nbrs[1] : nbrs[0];

    EdgeRemoval first = remove_edge_keep_AT(w, Edge(x, u));
    if (first.reduced_vertex == u) {
        // x is now pendant with budget 2; the leftover arc lies in no Eulerian
        // sub-digraph, so it comes off without touching any budget.
        Arc leftover = first.result.witness().arc_of(Edge(x, v));
        WitnessedGraph dropped = remove_arc_no_euler(first.result, leftover);
        return Deg2Removal{drop_isolated_vertex(dropped, x), u, false};
    }
    // Reduction landed on x: its budget is 1 now, so the second removal
    // must charge v.
    WitnessedGraph second = forced_edge_removal(first.result, Edge(x, v), v);
    return Deg2Removal{drop_isolated_vertex(second, x), v, true};
}

Deg2Removal remove_deg2_vertex_keep_AT(const WitnessedGraph& w, int x) {
    return remove_deg2_vertex_keep_AT(w, x, w.graph().neighbors(x).front());
}

WitnessedGraph union_one_way(const WitnessedGraph& wx, const WitnessedGraph& wy,
                             const std::vector<Arc>& cross_arcs, DegreeBudget combined_budget) {
    std::vector<int> shared;
    std::set_intersection(wx.graph().vertices().begin(), wx.graph().vertices().end(),
                          wy.graph().vertices().begin(), wy.graph().vertices().end(),
                          std::back_inserter(shared));
    for (int s : shared)
        require(wy.witness().is_sink(s), errc::precondition,
                "shared vertex " + std::to_string(s) + " is not a sink in the second part");
    for (const Edge& e : wx.graph().edges())
        require(!wy.graph().has_edge(e), errc::precondition,
                "parts share edge " + e.str());
    for (const Arc& a : cross_arcs) {
        bool tails_in_x = wx.graph().has_vertex(a.tail) && !wy.graph().has_vertex(a.tail);
        bool heads_in_y = wy.graph().has_vertex(a.head) && !wx.graph().has_vertex(a.head);
        require(tails_in_x && heads_in_y, errc::precondition,
                "cross arc " + a.str() + " is not oriented from the first part into the second");
    }

    std::set<int> vs(wx.graph().vertices().begin(), wx.graph().vertices().end());
    vs.insert(wy.graph().vertices().begin(), wy.graph().vertices().end());
    std::set<Edge> es(wx.graph().edges().begin(), wx.graph().edges().end());
    es.insert(wy.graph().edges().begin(), wy.graph().edges().end());
    std::vector<Arc> arcs;
    arcs.insert(arcs.end(), wx.witness().arcs().begin(), wx.witness().arcs().end());
    arcs.insert(arcs.end(), wy.witness().arcs().begin(), wy.witness().arcs().end());
    for (const Arc& a : cross_arcs) {
        require(es.insert(a.edge()).second, errc::precondition,
                "cross arc duplicates an edge");
        arcs.push_back(a);
    }

    Graph combined(std::vector<int>(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
    Orientation witness(combined, arcs);
    long long product = checked_mul(wx.diff_value(), wy.diff_value());
    return WitnessedGraph::create(std::move(combined), std::move(combined_budget),
                                  std::move(witness), product);
}

WitnessedGraph add_arc_no_euler(const WitnessedGraph& w, Arc a, DegreeBudget new_budget) {
    require(w.graph().has_vertex(a.tail) && w.graph().has_vertex(a.head), errc::precondition,
            "arc endpoints must exist");
    require(!w.graph().has_edge(a.edge()), errc::precondition, "edge already present");
    require(w.witness().is_sink(a.head), errc::precondition,
            "head " + std::to_string(a.head) + " is not a sink");
    return WitnessedGraph::create(w.graph().with_edge(a.edge()), std::move(new_budget),
                                  w.witness().with_arc(a), w.diff_value());
}

WitnessedGraph remove_arc_no_euler(const WitnessedGraph& w, Arc a) {
    require(w.witness().arc_of(a.edge()) == a, errc::precondition, "arc not present");
    // Sound uses: head is a sink, tail is a source, or the head's only
    // out-neighbor is a sink. Rather than gatekeeping on those shapes, the
    // preserved diff is re-verified at construction, so removing an arc that
    // some Eulerian sub-digraph uses raises certificate_violation.
    return WitnessedGraph::create(w.graph().without_edge(a.edge()), w.budget(),
                                  w.witness().without_arc(a), w.diff_value());
}

WitnessedGraph drop_isolated_vertex(const WitnessedGraph& w, int v) {
    require(w.graph().degree(v) == 0, errc::precondition,
            "vertex " + std::to_string(v) + " still has incident edges");
    Graph g = w.graph().without_vertex(v);
    std::map<int, int> values = w.budget().values();
    values.erase(v);
    return WitnessedGraph::create(g, DegreeBudget(std::move(values)),
                                  w.witness().restricted(g), w.diff_value());
}

Restriction restrict_witness(const WitnessedGraph& w, const Graph& target) {
    for (int v : target.vertices())
        require(w.graph().has_vertex(v), errc::precondition, "target has unknown vertices");
    for (const Edge& e : target.edges())
        require(w.graph().has_edge(e), errc::precondition, "target has unknown edges");

    Restriction out{w, {}};
    for (const Edge& e : w.graph().edges()) {
        if (target.has_edge(e)) continue;
        EdgeRemoval r = remove_edge_keep_AT(out.result, e);
        out.reductions.emplace_back(e, r.reduced_vertex);
        out.result = std::move(r.result);
    }
    for (int v : w.graph().vertices())
        if (!target.has_vertex(v)) out.result = drop_isolated_vertex(out.result, v);
    require(out.result.graph() == target, errc::certificate_violation,
            "restriction did not land on the target");
    return out;
}

} // namespace at
