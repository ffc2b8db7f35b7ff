#pragma once

#include "at/orientation.hpp"

namespace at {

inline constexpr int kDiffEnumMaxArcs = 24;

// Exact Eulerian sub-digraph counts. The empty arc set is Eulerian and even,
// so even_count >= 1 and diff >= 1 - odd_count.
struct EulerianCount {
    long long even_count = 0;
    long long odd_count = 0;
    long long diff() const { return even_count - odd_count; }
};

// Counts arc subsets H with equal in- and out-degree at every vertex, by
// backtracking over arcs with per-vertex balance pruning.
EulerianCount diff_enum(const Orientation& d, int max_arcs = kDiffEnumMaxArcs);

} // namespace at
