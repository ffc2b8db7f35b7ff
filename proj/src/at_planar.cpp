#include "at/at_planar.hpp"

#include <algorithm>
#include <set>

#include "at/json_io.hpp"

namespace at {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
            errc::invalid_input, "duplicate matching edge");
    std::set<int> covered;
    for (const Edge& e : edges_) {
        require(covered.insert(e.u).second && covered.insert(e.v).second, errc::invalid_input,
                "matching edges share vertex");
    }
}

bool Matching::covers(int v) const {
    for (const Edge& e : edges_)
        if (e.touches(v)) return true;
    return false;
}

bool Matching::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Matching Matching::with(Edge e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Matching(std::move(es));
}

Matching Matching::without(Edge e) const {
    std::vector<Edge> es;
    for (const Edge& f : edges_)
        if (f != e) es.push_back(f);
    require(es.size() + 1 == edges_.size(), errc::precondition, "edge not in matching");
    return Matching(std::move(es));
}

Matching Matching::merged(const Matching& other) const {
    std::vector<Edge> es = edges_;
    es.insert(es.end(), other.edges_.begin(), other.edges_.end());
    return Matching(std::move(es));
}

Matching Matching::restricted(const Graph& g) const {
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (g.has_edge(e)) es.push_back(e);
    return Matching(std::move(es));
}

DegreeBudget boundary_budget_at5(const PlaneGraph& g, const BoundaryWalk& b) {
    std::map<int, int> f;
    for (int v : g.vertices()) f[v] = 5;
    for (int v : b.verts) f[v] = 3;
    f[b.v1()] = 1;
    f[b.v2()] = 1;
    return DegreeBudget(std::move(f));
}

DegreeBudget boundary_budget_at4m(const PlaneGraph& g, const BoundaryWalk& b, const Matching& m) {
    std::map<int, int> f;
    for (int v : g.vertices()) f[v] = 4;
    for (int v : b.verts) f[v] = 3 - m.d_m(v);
    f[b.v1()] = 1;
    f[b.v2()] = 1;
    return DegreeBudget(std::move(f));
}

std::vector<Arc> GadgetRecord::z_arcs() const {
    std::vector<Arc> z;
    for (int i = 0; i < k(); ++i) {
        z.push_back({interior[i], vn});
        z.push_back({interior[i], gadget[i]});
        z.push_back({gadget[i], vn});
    }
    z.push_back({vn, vn_minus_1});
    z.push_back({vn, v1});
    return z;
}

GadgetRecord make_gadget_record(const PlaneGraph& g, const BoundaryWalk& b,
                                const std::vector<int>& fan) {
    GadgetRecord rec;
    rec.vn = b.vn();
    rec.v1 = b.v1();
    rec.vn_minus_1 = b.vn_minus_1();
    require(fan.size() >= 2 && fan.front() == rec.v1 && fan.back() == rec.vn_minus_1,
            errc::precondition, "fan does not run from v1 to v_{n-1}");
    rec.interior.assign(fan.begin() + 1, fan.end() - 1);
    int base = g.vertices().back();  // ids ascend; gadget vertices go above
    for (int i = 0; i < static_cast<int>(rec.interior.size()); ++i)
        rec.gadget.push_back(base + 1 + i);
    return rec;
}

WitnessedGraph case2_gadget_build(const WitnessedGraph& w, const GadgetRecord& peel,
                                  Trace* trace) {
    require(!w.graph().has_vertex(peel.vn), errc::precondition, "vn already present");
    require(w.graph().has_vertex(peel.v1) && w.graph().has_vertex(peel.vn_minus_1),
            errc::precondition, "v1 or v_{n-1} missing");
    for (int u : peel.interior)
        require(w.graph().has_vertex(u), errc::precondition, "interior neighbor missing");
    for (int x : peel.gadget)
        require(!w.graph().has_vertex(x), errc::precondition, "gadget id collides");
    // The pairing argument cancels every sub-digraph that enters vn, but only
    // because no Eulerian sub-digraph can leave through (vn, v1).
    require(peel.k() == 0 || w.witness().is_sink(peel.v1), errc::precondition,
            "v1 must be a sink before the gadget is attached");

    Graph g2 = w.graph().with_vertex(peel.vn);
    for (int x : peel.gadget) g2 = g2.with_vertex(x);
    std::vector<Arc> arcs = w.witness().arcs();
    for (const Arc& a : peel.z_arcs()) {
        g2 = g2.with_edge(a.edge());
        arcs.push_back(a);
    }
    Orientation witness(g2, arcs);

    std::map<int, int> tight;
    for (int v : g2.vertices()) tight[v] = witness.out_degree(v) + 1;

    WitnessedGraph out = WitnessedGraph::create(std::move(g2), DegreeBudget(std::move(tight)),
                                                std::move(witness), w.diff_value());
    if (trace) {
        trace->push_back({{"step", "gadget"},
                          {"vn", peel.vn},
                          {"interior", peel.interior},
                          {"gadget", peel.gadget},
                          {"parity_checked", out.witness().arc_count() <= kEnumCheckMaxArcs}});
    }
    return out;
}

BudgetCheck budget_check(const WitnessedGraph& w, const DegreeBudget& target) {
    BudgetCheck r;
    for (int v : w.graph().vertices()) {
        if (w.witness().out_degree(v) + 1 > target.at(v)) {
            r.ok = false;
            r.offenders.push_back(v);
        }
    }
    return r;
}

namespace {

void record(Trace* trace, Trace step) {
    if (trace) trace->push_back(std::move(step));
}

Edge smallest_outer_edge(const PlaneGraph& g) {
    const FaceWalk& w = g.outer_face();
    Edge best(w[0], w[1]);
    for (std::size_t i = 1; i < w.size(); ++i)
        best = std::min(best, Edge(w[i], w[(i + 1) % w.size()]));
    return best;
}

// Shared tail of both theorem halves' Case 2: peel the gadget vertices
// w_k..w_1 by the degree-2 removal, tracking which peels reduced at vn.
struct PeelOutcome {
    WitnessedGraph result;
    std::optional<int> branch_ii_interior;  // u_i whose peel reduced at vn
};

PeelOutcome peel_gadget(WitnessedGraph w, const GadgetRecord& peel, Trace* trace) {
    std::optional<int> branch_ii;
    Trace branches = Trace::array();
    for (int i = peel.k() - 1; i >= 0; --i) {
        Deg2Removal r = remove_deg2_vertex_keep_AT(w, peel.gadget[i], peel.interior[i]);
        if (r.reduced_vertex == peel.vn) {
            // After one hit vn has budget 2 and, with the sink v1 adjacent,
            // its single out-arc is pinned to (vn, v1); a witness reducing vn
            // further cannot exist, so later peels charge their u_i.
            require(!branch_ii.has_value(), errc::certificate_violation,
                    "vn reduced twice during peeling");
            branch_ii = peel.interior[i];
        } else {
            require(r.reduced_vertex == peel.interior[i], errc::certificate_violation,
                    "peel reduced a vertex outside the removal dichotomy");
        }
        branches.push_back({{"w", peel.gadget[i]},
                            {"reduced", r.reduced_vertex},
                            {"drop", r.second_edge_forced ? "forced" : "pendant"}});
        w = std::move(r.result);
    }
    record(trace, {{"step", "peel"}, {"vn", peel.vn}, {"branches", std::move(branches)}});
    return PeelOutcome{std::move(w), branch_ii};
}

} // namespace

WitnessedGraph thm_main_at(const PlaneGraph& g, Edge e1, Trace* trace) {
    require(is_near_triangulation(g), errc::precondition,
            "induction needs a 2-connected near-triangulation");
    BoundaryWalk b = boundary_from(g, e1);
    DegreeBudget target = boundary_budget_at5(g, b);

    if (g.graph().vertex_count() == 3) {
        // Base case: orient G - e1 with v3 as a source.
        int v3 = b.vn();
        Orientation witness(g.graph().without_edge(e1), {{v3, b.v1()}, {v3, b.v2()}});
        record(trace, {{"step", "base"}, {"triangle", b.verts}});
        return WitnessedGraph::create(g.graph().without_edge(e1), target, std::move(witness), 1);
    }

    if (auto chord = find_chord(g, b)) {
        ChordSplit split = split_at_chord(g, *chord);
        bool e1_in_part1 = split.part1.graph().has_edge(e1);
        const PlaneGraph& g1 = e1_in_part1 ? split.part1 : split.part2;
        const PlaneGraph& g2 = e1_in_part1 ? split.part2 : split.part1;
        record(trace, {{"step", "chord_split"},
                       {"chord", {chord->u, chord->v}},
                       {"sizes", {g1.graph().vertex_count(), g2.graph().vertex_count()}}});
        WitnessedGraph w1 = thm_main_at(g1, e1, trace);
        WitnessedGraph w2 = thm_main_at(g2, *chord, trace);
        // x and y are sinks in w2 (their budget there is 1), so diff
        // multiplies across the union.
        return union_one_way(w1, w2, {}, target);
    }

    // Case 2: chordless boundary, peel vn.
    auto [smaller, fan] = delete_boundary_vertex(g, b.vn());
    GadgetRecord peel = make_gadget_record(g, b, fan);
    record(trace, {{"step", "delete_vertex"}, {"vn", b.vn()}, {"fan", fan}});
    WitnessedGraph w1 = thm_main_at(smaller, e1, trace);
    WitnessedGraph w2 = case2_gadget_build(w1, peel, trace);

    Restriction restr = restrict_witness(w2, g.graph().without_edge(e1));
    Trace reductions = Trace::array();
    for (auto [e, v] : restr.reductions) reductions.push_back({{"edge", {e.u, e.v}}, {"reduced", v}});
    record(trace, {{"step", "gadget_restrict"}, {"reductions", std::move(reductions)}});

    BudgetCheck chk = budget_check(restr.result, target);
    require(chk.ok, errc::certificate_violation, "Case 2 witness exceeds the boundary budget");
    return restr.result.with_budget(target);
}

std::pair<Matching, WitnessedGraph> thm_main_matching(const PlaneGraph& g, Edge e1, Trace* trace) {
    require(is_near_triangulation(g), errc::precondition,
            "induction needs a 2-connected near-triangulation");
    BoundaryWalk b = boundary_from(g, e1);

    if (g.graph().vertex_count() == 3) {
        Matching m(std::vector<Edge>{e1});
        int v3 = b.vn();
        DegreeBudget target = boundary_budget_at4m(g, b, m);
        Orientation witness(g.graph().without_edge(e1), {{v3, b.v1()}, {v3, b.v2()}});
        record(trace, {{"step", "base_matching"}, {"triangle", b.verts}});
        return {m, WitnessedGraph::create(g.graph().without_edge(e1), target,
                                          std::move(witness), 1)};
    }

    if (auto chord = find_chord(g, b)) {
        ChordSplit split = split_at_chord(g, *chord);
        bool e1_in_part1 = split.part1.graph().has_edge(e1);
        const PlaneGraph& g1 = e1_in_part1 ? split.part1 : split.part2;
        const PlaneGraph& g2 = e1_in_part1 ? split.part2 : split.part1;
        record(trace, {{"step", "chord_split_matching"}, {"chord", {chord->u, chord->v}}});
        auto [m1, w1] = thm_main_matching(g1, e1, trace);
        auto [m2, w2] = thm_main_matching(g2, *chord, trace);
        require(m2.contains(*chord), errc::certificate_violation,
                "recursive matching misses its designated edge");
        Matching m = m1.merged(m2.without(*chord));
        DegreeBudget target = boundary_budget_at4m(g, b, m);
        return {m, union_one_way(w1, w2, {}, target)};
    }

    auto [smaller, fan] = delete_boundary_vertex(g, b.vn());
    GadgetRecord peel = make_gadget_record(g, b, fan);
    record(trace, {{"step", "delete_vertex_matching"}, {"vn", b.vn()}, {"fan", fan}});
    auto [m1, w1] = thm_main_matching(smaller, e1, trace);
    WitnessedGraph w2 = case2_gadget_build(w1, peel, trace);
    PeelOutcome peeled = peel_gadget(std::move(w2), peel, trace);

    if (!peeled.branch_ii_interior.has_value() || m1.covers(*peeled.branch_ii_interior)) {
        DegreeBudget target = boundary_budget_at4m(g, b, m1);
        BudgetCheck chk = budget_check(peeled.result, target);
        require(chk.ok, errc::certificate_violation,
                "matching witness exceeds the boundary budget");
        return {m1, peeled.result.with_budget(target)};
    }

    // Branch (ii) hit an uncovered u_i: vn's only out-arc goes to the sink v1,
    // so the arc (u_i, vn) joins no Eulerian sub-digraph and extends M.
    int u_star = *peeled.branch_ii_interior;
    require(peeled.result.witness().is_sink(b.v1()), errc::certificate_violation,
            "v1 lost its sink status");
    require(peeled.result.witness().out_neighbors(b.vn()) == std::vector<int>{b.v1()},
            errc::certificate_violation, "vn has an out-arc besides (vn, v1)");
    Arc drop{u_star, b.vn()};
    require(peeled.result.witness().arc_of(drop.edge()) == drop, errc::certificate_violation,
            "edge (u_i, vn) is not oriented into vn");
    WitnessedGraph w3 = remove_arc_no_euler(peeled.result, drop);
    Matching m = m1.with(drop.edge());
    record(trace, {{"step", "matching_extend"}, {"edge", {drop.edge().u, drop.edge().v}}});
    DegreeBudget target = boundary_budget_at4m(g, b, m);
    BudgetCheck chk = budget_check(w3, target);
    require(chk.ok, errc::certificate_violation, "extended matching witness exceeds the budget");
    return {m, w3.with_budget(target)};
}

std::string to_string(CertificateKind k) {
    return k == CertificateKind::at5 ? "AT5" : "AT4-with-matching";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
    if (s == "AT5") return CertificateKind::at5;
    if (s == "AT4-with-matching") return CertificateKind::at4_matching;
    fail(errc::invalid_input, "unknown certificate kind: " + s);
}

namespace {

struct Scaffold {
    PlaneGraph t;
    Trace prep = Trace::array();
};

Scaffold build_scaffold(const PlaneGraph& g) {
    require(g.graph().vertex_count() >= 3, errc::invalid_input, "need at least 3 vertices");
    require(g.graph().is_connected(), errc::invalid_input, "input graph must be connected");
    Scaffold s{g};
    if (!is_2_connected(s.t)) {
        s.t = biconnect(s.t);
        s.prep.push_back({{"step", "biconnect"},
                          {"added_edges", s.t.graph().edge_count() - g.graph().edge_count()}});
    }
    int before = s.t.graph().edge_count();
    s.t = triangulate_inner_faces(s.t);
    s.prep.push_back({{"step", "triangulate"},
                      {"added_edges", s.t.graph().edge_count() - before}});
    return s;
}

} // namespace

Certificate at5_certificate(const PlaneGraph& g) {
    Scaffold s = build_scaffold(g);
    Edge e1 = smallest_outer_edge(s.t);
    BoundaryWalk b = boundary_from(s.t, e1);

    Certificate cert;
    cert.kind = CertificateKind::at5;
    cert.graph_sha256 = graph_sha256(g);
    cert.trace = std::move(s.prep);
    cert.trace.push_back({{"step", "e1"}, {"edge", {b.v1(), b.v2()}}});

    WitnessedGraph w = thm_main_at(s.t, e1, &cert.trace);
    if (g.graph().has_edge(e1)) {
        // v2 has budget 1, hence is a sink; the new arc cannot close any
        // Eulerian sub-digraph.
        w = add_arc_no_euler(w, Arc{b.v1(), b.v2()}, w.budget().with(b.v1(), 2));
        cert.trace.push_back({{"step", "reinsert"}, {"arc", {b.v1(), b.v2()}}});
        cert.e1 = e1;
    }
    Restriction restr = restrict_witness(w, g.graph());
    Trace reductions = Trace::array();
    for (auto [e, v] : restr.reductions)
        reductions.push_back({{"edge", {e.u, e.v}}, {"reduced", v}});
    cert.trace.push_back({{"step", "restrict"}, {"reductions", std::move(reductions)}});

    const WitnessedGraph& fin = restr.result;
    for (int v : fin.graph().vertices())
        require(fin.witness().out_degree(v) <= 4, errc::certificate_violation,
                "AT5 witness has out-degree above 4");
    cert.arcs = fin.witness().arcs();
    cert.budget = fin.budget().values();
    cert.diff = fin.diff_value();
    return cert;
}

Certificate at4_matching_certificate(const PlaneGraph& g) {
    Scaffold s = build_scaffold(g);
    // Prefer a boundary edge of the scaffold that already lives in g, so the
    // exported matching contains a boundary edge of the input.
    std::optional<Edge> e1;
    {
        const FaceWalk& w = s.t.outer_face();
        for (std::size_t i = 0; i < w.size(); ++i) {
            Edge e(w[i], w[(i + 1) % w.size()]);
            if (g.graph().has_edge(e) && (!e1 || e < *e1)) e1 = e;
        }
        if (!e1) e1 = smallest_outer_edge(s.t);
    }

    Certificate cert;
    cert.kind = CertificateKind::at4_matching;
    cert.graph_sha256 = graph_sha256(g);
    cert.trace = std::move(s.prep);

    auto [m, w] = thm_main_matching(s.t, *e1, &cert.trace);
    require(m.contains(*e1), errc::certificate_violation, "matching does not contain e1");
    Matching mg = m.restricted(g.graph());

    Graph target = g.graph();
    for (const Edge& e : mg.edges()) target = target.without_edge(e);
    Restriction restr = restrict_witness(w, target);

    const WitnessedGraph& fin = restr.result;
    for (int v : fin.graph().vertices())
        require(fin.witness().out_degree(v) <= 3, errc::certificate_violation,
                "AT4 witness has out-degree above 3");
    cert.arcs = fin.witness().arcs();
    cert.budget = fin.budget().values();
    cert.matching = mg.edges();
    cert.diff = fin.diff_value();
    if (g.graph().has_edge(*e1)) cert.e1 = *e1;
    return cert;
}

} // namespace at
