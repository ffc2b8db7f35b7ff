#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "at/plane_graph.hpp"
#include "at/witnessed.hpp"

namespace at {

using Trace = nlohmann::ordered_json;

// Pairwise-disjoint edge set with a covered-vertex query.
class Matching {
  public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    bool covers(int v) const;
    int d_m(int v) const { return covers(v) ? 1 : 0; }
    bool contains(Edge e) const;
    bool empty() const { return edges_.empty(); }

    Matching with(Edge e) const;
    Matching without(Edge e) const;
    Matching merged(const Matching& other) const;
    Matching restricted(const Graph& g) const;  // keep edges of g only

  private:
    std::vector<Edge> edges_;  // sorted
};

// Boundary degree budgets. The plain variant is 1 on {v1,v2},
// 3 on the rest of the boundary, 5 inside; the matching-aware variant lowers
// covered boundary vertices by one and interior vertices to 4.
DegreeBudget boundary_budget_at5(const PlaneGraph& g, const BoundaryWalk& b);
DegreeBudget boundary_budget_at4m(const PlaneGraph& g, const BoundaryWalk& b, const Matching& m);

// Case 2 bookkeeping: the peeled vertex vn, its interior neighbors u_1..u_k in
// rotation order, fresh path midpoints w_1..w_k, and the arc set Z.
struct GadgetRecord {
    int vn = 0;
    int v1 = 0;
    int vn_minus_1 = 0;
    std::vector<int> interior;  // u_1..u_k
    std::vector<int> gadget;    // w_1..w_k

    int k() const { return static_cast<int>(interior.size()); }
    std::vector<Arc> z_arcs() const;
};

GadgetRecord make_gadget_record(const PlaneGraph& g, const BoundaryWalk& b,
                                const std::vector<int>& fan);

// Extends a witness on G'-(e1 or M1) by vn and the gadget paths; the pairing
// of Eulerian sub-digraphs through a_i <-> {a'_i, a''_i} cancels in diff, so
// the value is copied and re-verified. Needs v1 to be a sink when k >= 1.
// The budget of the result is the tight g = d+ + 1.
WitnessedGraph case2_gadget_build(const WitnessedGraph& w, const GadgetRecord& peel,
                                  Trace* trace = nullptr);

struct BudgetCheck {
    bool ok = true;
    std::vector<int> offenders;
};

// g(v) = d+(v)+1 <= target(v), the soundness gate of the induction.
BudgetCheck budget_check(const WitnessedGraph& w, const DegreeBudget& target);

// Induction: G-e1 is f_{G,v1v2}-AT for every 2-connected near-triangulation.
WitnessedGraph thm_main_at(const PlaneGraph& g, Edge e1, Trace* trace = nullptr);

// Matching half: a matching M containing e1 with G-M being f_{G,v1v2,M}-AT.
std::pair<Matching, WitnessedGraph> thm_main_matching(const PlaneGraph& g, Edge e1,
                                                      Trace* trace = nullptr);

enum class CertificateKind { at5, at4_matching };

std::string to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

// Exported, independently re-checkable record. The verifier never trusts the
// trace.
struct Certificate {
    CertificateKind kind = CertificateKind::at5;
    std::string graph_sha256;
    std::vector<Arc> arcs;
    std::map<int, int> budget;
    std::vector<Edge> matching;      // empty for at5
    std::optional<Edge> e1;          // absent when no outer edge of the
                                     // scaffold lies in the input graph
    long long diff = 0;
    Trace trace = Trace::array();
};

// Full pipeline: biconnect if needed, triangulate inner faces, run the
// induction, re-insert e1 (arc v1->v2 into the sink v2), restrict back to g.
Certificate at5_certificate(const PlaneGraph& g);

// Matching pipeline: run the matching half on the scaffold, keep M's edges
// that live in g, restrict the witness to g - M.
Certificate at4_matching_certificate(const PlaneGraph& g);

} // namespace at
