#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "at/at_planar.hpp"

namespace at {

inline constexpr int kColoringMaxVertices = 16;
inline constexpr int kExhaustiveMaxVertices = 7;
inline constexpr int kExhaustiveMaxBudgetSum = 12;

struct VerdictClause {
    std::string name;
    bool ok;
    std::string detail;
};

struct Verdict {
    bool pass = true;
    std::vector<VerdictClause> clauses;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        clauses.push_back({name, ok, detail});
        pass = pass && ok;
    }
};

nlohmann::ordered_json verdict_to_json(const Verdict& v);

// Re-derives everything from the graph and the certificate kind: digest, arc
// coverage of E(g) (or E(g)-M), out-degree bounds, the 5/4 budget ceilings,
// matching validity and the e1 clause, and the diff through both oracles. The
// trace is ignored on purpose.
Verdict check_certificate(const Certificate& c, const PlaneGraph& g);

// Backtracking proper-coloring search from explicit lists.
bool list_coloring_exists(const Graph& g, const std::map<int, std::vector<int>>& lists);

struct SampleReport {
    bool pass = true;
    int samples_run = 0;
    std::optional<std::map<int, std::vector<int>>> counterexample;
};

// Random |L(v)| = f(v) lists over the universe {0..sum f - 1}; every sample
// must be colorable when the budget came from an AT certificate.
SampleReport sampled_choosability_check(const Graph& g, const DegreeBudget& f, int samples,
                                        std::uint64_t seed);

// Ground truth on tiny graphs: all list assignments over the bounded universe
// up to color symmetry, after peeling vertices with f(v) > degree(v).
bool exhaustive_choosability(const Graph& g, const DegreeBudget& f);

} // namespace at
