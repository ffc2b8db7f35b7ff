#include <doctest.h>

#include "at/json_io.hpp"
#include "fixtures.hpp"

using namespace at;

TEST_CASE("sha256 reference vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("The quick brown fox jumps over the lazy dog") ==
          "d7a8fbb307d7809469ca9abcb0082e4f8d5651e46d3cdb762d02d0bf37c9e592");
}

TEST_CASE("graph JSON round-trips bit-exactly") {
    for (const PlaneGraph& g : {generate(GraphKind::octahedron),
                                generate(GraphKind::stacked, 11, 5),
                                generate(GraphKind::fan, 6)}) {
        OrderedJson j = graph_to_json(g);
        PlaneGraph parsed = graph_from_json(Json::parse(j.dump()));
        CHECK(parsed == g);
        CHECK(graph_to_json(parsed).dump() == j.dump());
    }
}

TEST_CASE("graph JSON parser rejects malformed input") {
    Json missing = Json::parse(R"({"vertices":[1,2],"rotations":{"1":[2],"2":[1]}})");
    CHECK_THROWS_AS(graph_from_json(missing), error);
    // asymmetric rotations
    Json asym = Json::parse(
        R"({"vertices":[1,2,3],"rotations":{"1":[2],"2":[1,3],"3":[]},"outer_face":[1,2,3]})");
    CHECK_THROWS_AS(graph_from_json(asym), error);
    // loop
    Json loop = Json::parse(
        R"({"vertices":[1,2],"rotations":{"1":[1,2],"2":[1]},"outer_face":[1,2]})");
    CHECK_THROWS_AS(graph_from_json(loop), error);
    // rotation names a vertex that does not exist
    Json ghost = Json::parse(
        R"({"vertices":[1,2],"rotations":{"1":[2,5],"2":[1]},"outer_face":[1,2]})");
    CHECK_THROWS_AS(graph_from_json(ghost), error);
}

TEST_CASE("orientation arcs JSON") {
    Graph g = fixtures::k3();
    Orientation d = fixtures::acyclic_orientation(g);
    OrderedJson j = arcs_to_json(d.arcs());
    std::vector<Arc> parsed = arcs_from_json(Json::parse(j.dump()));
    CHECK(parsed == d.arcs());
    CHECK_THROWS_AS(arcs_from_json(Json::parse(R"({"arcs":[[1]]})")), error);
}

TEST_CASE("eulerian count JSON carries the diff") {
    EulerianCount c{5, 2};
    OrderedJson j = eulerian_to_json(c);
    CHECK(j.at("even_count") == 5);
    CHECK(j.at("diff") == 3);
}

TEST_CASE("certificate JSON round-trips bit-exactly") {
    PlaneGraph octa = generate(GraphKind::octahedron);
    for (const Certificate& cert :
         {at5_certificate(octa), at4_matching_certificate(octa)}) {
        OrderedJson j = certificate_to_json(cert);
        Certificate parsed = certificate_from_json(Json::parse(j.dump()));
        CHECK(certificate_to_json(parsed).dump() == j.dump());
        CHECK(parsed.kind == cert.kind);
        CHECK(parsed.arcs == cert.arcs);
        CHECK(parsed.budget == cert.budget);
        CHECK(parsed.matching == cert.matching);
        CHECK(parsed.diff == cert.diff);
    }
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"kind":"AT5"})")), error);
    CHECK_THROWS_AS(certificate_kind_from_string("AT6"), error);
}

TEST_CASE("undirected DOT export is canonical") {
    PlaneGraph tri = generate(GraphKind::cycle, 3);
    CHECK(to_dot(tri) == "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");
    PlaneGraph st = generate(GraphKind::stacked, 9, 4);
    CHECK(to_dot(st) == to_dot(generate(GraphKind::stacked, 9, 4)));
}

TEST_CASE("certificate DOT renders arcs, dashed matching, budget labels") {
    PlaneGraph k4 = generate(GraphKind::tetrahedron);
    Certificate cert = at4_matching_certificate(k4);
    std::string dot = certificate_dot(k4, cert);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("(f=") != std::string::npos);
}
