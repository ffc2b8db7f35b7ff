#pragma once

#include <utility>
#include <vector>

#include "at/budget.hpp"
#include "at/oracles.hpp"

namespace at {

// Direct-enumeration double checks run whenever the witness has at most this
// many arcs; the coefficient oracle always runs.
inline constexpr int kEnumCheckMaxArcs = 18;

// The induction invariant: a graph, a budget f, and an orientation whose
// nonzero diff certifies that the graph is f-AT. Every construction
// re-validates from scratch (out-degree bounds, diff via the coefficient
// oracle, enumeration cross-check when small), so a wrong step surfaces as a
// certificate_violation instead of a wrong answer.
class WitnessedGraph {
  public:
    static WitnessedGraph create(Graph graph, DegreeBudget budget, Orientation witness,
                                 long long claimed_diff);

    const Graph& graph() const { return graph_; }
    const DegreeBudget& budget() const { return budget_; }
    const Orientation& witness() const { return witness_; }
    long long diff_value() const { return diff_value_; }

    // Same witness and diff under another budget; the out-degree bounds are
    // re-validated against it.
    WitnessedGraph with_budget(DegreeBudget budget) const;

  private:
    WitnessedGraph(Graph g, DegreeBudget b, Orientation w, long long d)
        : graph_(std::move(g)), budget_(std::move(b)), witness_(std::move(w)), diff_value_(d) {}

    Graph graph_;
    DegreeBudget budget_;
    Orientation witness_;
    long long diff_value_;
};

struct EdgeRemoval {
    WitnessedGraph result;
    int reduced_vertex;
    bool used_tail_branch;
};

// G-e is f_[u,-1]-AT or f_[v,-1]-AT. Tries the tail of the witnessed arc
// first (reuses the witness minus one arc); otherwise realizes the head-reduced
// out-degree vector by flow. The two reduced coefficients cannot both vanish
// while the witness coefficient is nonzero.
EdgeRemoval remove_edge_keep_AT(const WitnessedGraph& w, Edge e);

// Edge removal whose charged endpoint is forced: the far endpoint either
// has budget 1 (the edge must point into it), or has budget 2 while sitting
// next to a budget-1 vertex (its single out-arc is already spoken for).
WitnessedGraph forced_edge_removal(const WitnessedGraph& w, Edge e, int forced_reduction);

struct Deg2Removal {
    WitnessedGraph result;
    int reduced_vertex;       // one of the two neighbors
    bool second_edge_forced;  // first removal reduced at x, so the second was
                              // pinned to the far neighbor
};

// Removes a degree-2 vertex x with budget 2; the budget drops at exactly one
// of its neighbors. `first_neighbor` selects which incident edge the
// dichotomy is applied to first.
Deg2Removal remove_deg2_vertex_keep_AT(const WitnessedGraph& w, int x, int first_neighbor);
Deg2Removal remove_deg2_vertex_keep_AT(const WitnessedGraph& w, int x);

// Disjoint union (shared vertices allowed when they are sinks on the `wy`
// side) plus optional cross arcs tailed in wx; no Eulerian sub-digraph can use
// a cross arc, so diff multiplies.
WitnessedGraph union_one_way(const WitnessedGraph& wx, const WitnessedGraph& wy,
                             const std::vector<Arc>& cross_arcs, DegreeBudget combined_budget);

// Arc into a sink: no Eulerian sub-digraph can contain it, diff is unchanged.
WitnessedGraph add_arc_no_euler(const WitnessedGraph& w, Arc a, DegreeBudget new_budget);

// Removes an arc that lies in no Eulerian sub-digraph (typical shapes: head
// is a sink, tail is a source, or the head's only out-neighbor is a sink).
// The unchanged diff is re-verified, so a wrong call raises
// certificate_violation instead of corrupting the witness.
WitnessedGraph remove_arc_no_euler(const WitnessedGraph& w, Arc a);

// Drops a vertex with no incident edges.
WitnessedGraph drop_isolated_vertex(const WitnessedGraph& w, int v);

struct Restriction {
    WitnessedGraph result;
    std::vector<std::pair<Edge, int>> reductions;  // removed edge, reduced endpoint
};

// Repeated edge removal down to the target subgraph; budgets only decrease.
Restriction restrict_witness(const WitnessedGraph& w, const Graph& target);

} // namespace at
