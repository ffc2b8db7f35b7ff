#include "at/json_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace at {

OrderedJson graph_to_json(const PlaneGraph& g) {
    OrderedJson j;
    j["vertices"] = g.vertices();
    OrderedJson rot = OrderedJson::object();
    for (int v : g.vertices()) rot[std::to_string(v)] = g.rotation_at(v);
    j["rotations"] = std::move(rot);
    j["outer_face"] = g.outer_face();
    return j;
}

PlaneGraph graph_from_json(const Json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("rotations") &&
                j.contains("outer_face"),
            errc::invalid_input, "graph JSON needs vertices, rotations, outer_face");
    std::vector<int> vertices;
    for (const Json& v : j.at("vertices")) {
        require(v.is_number_integer(), errc::invalid_input, "vertex ids must be integers");
        vertices.push_back(v.get<int>());
    }
    std::set<int> vset(vertices.begin(), vertices.end());

    std::map<int, std::vector<int>> rotation;
    for (int v : vertices) rotation[v] = {};
    std::set<std::pair<int, int>> directed;
    for (const auto& [key, arr] : j.at("rotations").items()) {
        int v = 0;
        try {
            v = std::stoi(key);
        } catch (...) {
            fail(errc::invalid_input, "rotation key is not an integer: " + key);
        }
        require(vset.count(v), errc::invalid_input, "rotation for unknown vertex " + key);
        for (const Json& w : arr) {
            int nb = w.get<int>();
            require(vset.count(nb), errc::invalid_input, "rotation names unknown neighbor");
            require(nb != v, errc::invalid_input, "loop at vertex " + key);
            require(directed.emplace(v, nb).second, errc::invalid_input,
                    "multi-edge in rotation at " + key);
            rotation[v].push_back(nb);
        }
    }
    std::set<Edge> edges;
    for (auto [a, b] : directed) {
        require(directed.count({b, a}), errc::invalid_input,
                "rotations are not symmetric on edge " + Edge(a, b).str());
        edges.insert(Edge(a, b));
    }
    FaceWalk outer;
    for (const Json& v : j.at("outer_face")) outer.push_back(v.get<int>());

    return PlaneGraph(Graph(vertices, std::vector<Edge>(edges.begin(), edges.end())),
                      std::move(rotation), std::move(outer));
}

std::string graph_sha256(const PlaneGraph& g) { return sha256_hex(graph_to_json(g).dump()); }

OrderedJson arcs_to_json(const std::vector<Arc>& arcs) {
    OrderedJson j;
    OrderedJson list = OrderedJson::array();
    for (const Arc& a : arcs) list.push_back({a.tail, a.head});
    j["arcs"] = std::move(list);
    return j;
}

std::vector<Arc> arcs_from_json(const Json& j) {
    require(j.is_object() && j.contains("arcs"), errc::invalid_input,
            "orientation JSON needs an arcs array");
    std::vector<Arc> arcs;
    for (const Json& a : j.at("arcs")) {
        require(a.is_array() && a.size() == 2, errc::invalid_input, "arc must be [tail,head]");
        arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    return arcs;
}

OrderedJson eulerian_to_json(const EulerianCount& c) {
    OrderedJson j;
    j["even_count"] = c.even_count;
    j["odd_count"] = c.odd_count;
    j["diff"] = c.diff();
    return j;
}

OrderedJson certificate_to_json(const Certificate& c) {
    OrderedJson j;
    j["kind"] = to_string(c.kind);
    j["graph_sha256"] = c.graph_sha256;
    OrderedJson arcs = OrderedJson::array();
    for (const Arc& a : c.arcs) arcs.push_back({a.tail, a.head});
    j["arcs"] = std::move(arcs);
    OrderedJson budget = OrderedJson::object();
    for (auto [v, f] : c.budget) budget[std::to_string(v)] = f;
    j["budget"] = std::move(budget);
    OrderedJson matching = OrderedJson::array();
    for (const Edge& e : c.matching) matching.push_back({e.u, e.v});
    j["matching"] = std::move(matching);
    if (c.e1)
        j["e1"] = {c.e1->u, c.e1->v};
    else
        j["e1"] = nullptr;
    j["diff"] = c.diff;
    j["trace"] = Json(c.trace);  // sorted keys inside steps keep the bytes canonical
    return j;
}

Certificate certificate_from_json(const Json& j) {
    require(j.is_object(), errc::invalid_input, "certificate must be a JSON object");
    for (const char* key : {"kind", "graph_sha256", "arcs", "budget", "matching", "diff"})
        require(j.contains(key), errc::invalid_input,
                std::string("certificate misses field ") + key);
    Certificate c;
    c.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
    c.graph_sha256 = j.at("graph_sha256").get<std::string>();
    for (const Json& a : j.at("arcs")) {
        require(a.is_array() && a.size() == 2, errc::invalid_input, "arc must be [tail,head]");
        c.arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    for (const auto& [key, val] : j.at("budget").items()) {
        try {
            c.budget[std::stoi(key)] = val.get<int>();
        } catch (const error&) {
            throw;
        } catch (...) {
            fail(errc::invalid_input, "budget key is not an integer: " + key);
        }
    }
    for (const Json& e : j.at("matching")) {
        require(e.is_array() && e.size() == 2, errc::invalid_input, "matching edge malformed");
        c.matching.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("e1") && !j.at("e1").is_null())
        c.e1 = Edge(j.at("e1")[0].get<int>(), j.at("e1")[1].get<int>());
    c.diff = j.at("diff").get<long long>();
    if (j.contains("trace")) c.trace = j.at("trace");
    return c;
}

std::string to_dot(const PlaneGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v : g.vertices()) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string certificate_dot(const PlaneGraph& g, const Certificate& c) {
    std::set<int> on_boundary(g.outer_face().begin(), g.outer_face().end());
    std::ostringstream out;
    out << "digraph certificate {\n";
    for (int v : g.vertices()) {
        out << "  " << v << " [label=\"" << v;
        auto it = c.budget.find(v);
        if (on_boundary.count(v) && it != c.budget.end()) out << " (f=" << it->second << ")";
        out << "\"];\n";
    }
    for (const Arc& a : c.arcs) out << "  " << a.tail << " -> " << a.head << ";\n";
    for (const Edge& e : c.matching)
        out << "  " << e.u << " -> " << e.v << " [style=dashed, dir=none];\n";
    out << "}\n";
    return out.str();
}

} // namespace at
