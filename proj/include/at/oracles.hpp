#pragma once

#include <optional>

#include "at/budget.hpp"
#include "at/poly.hpp"

namespace at {

inline constexpr int kBruteForceMaxEdges = 20;

// Realizes an orientation with the exact prescribed out-degrees via a unit
// flow: source -> edge node (1), edge node -> its endpoints (1),
// vertex -> sink (d(v)). Deterministic for a fixed graph and target.
std::optional<Orientation> orientation_with_outdegrees(const Graph& g, const OutDegrees& d);

// d+ <= f-1 everywhere and diff != 0, via diff_coeff with a diff_enum
// fallback when the monomial table blows the cap.
bool is_f_AT(const Orientation& d, const DegreeBudget& f);

// Exhaustive search for an f-AT orientation: sums orientation signs per
// admissible out-degree vector (a nonzero total is the raw coefficient, so
// any realization is a witness) and realizes the least such vector by flow.
std::optional<Orientation> find_f_AT_orientation(const Graph& g, const DegreeBudget& f,
                                                 int max_edges = kBruteForceMaxEdges);

// Least k with an (f == k)-AT orientation. Any graph is (max degree + 1)-AT
// through an acyclic orientation, so the scan terminates.
int at_number(const Graph& g, int max_edges = kBruteForceMaxEdges);

} // namespace at
