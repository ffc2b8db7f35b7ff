#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "at/at_planar.hpp"
#include "at/eulerian.hpp"
#include "at/plane_graph.hpp"

namespace at {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes);

// {"vertices":[...], "rotations":{"id":[ccw neighbors]}, "outer_face":[walk]}
// with ascending numeric keys; dump() of this is the canonical byte form.
OrderedJson graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const Json& j);
std::string graph_sha256(const PlaneGraph& g);

// {"arcs":[[tail,head],...]}
OrderedJson arcs_to_json(const std::vector<Arc>& arcs);
std::vector<Arc> arcs_from_json(const Json& j);

OrderedJson eulerian_to_json(const EulerianCount& c);

OrderedJson certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

// Undirected graph in canonical DOT form.
std::string to_dot(const PlaneGraph& g);
// Certificate rendering: arcs directed, matching edges dashed, boundary
// vertices labelled with their budget values.
std::string certificate_dot(const PlaneGraph& g, const Certificate& c);

} // namespace at
