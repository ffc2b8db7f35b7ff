#pragma once

#include <map>
#include <vector>

#include "at/error.hpp"
#include "at/graph.hpp"

namespace at {

// Per-vertex degree budget f. A graph is f-AT when it has an orientation with
// nonzero diff and out-degree at most f(v)-1 everywhere.
class DegreeBudget {
  public:
    DegreeBudget() = default;
    explicit DegreeBudget(std::map<int, int> values) : values_(std::move(values)) {
        for (auto [v, f] : values_)
            require(f >= 0, errc::invalid_input, "negative budget at " + std::to_string(v));
    }

    static DegreeBudget constant(const Graph& g, int k) {
        std::map<int, int> m;
        for (int v : g.vertices()) m[v] = k;
        return DegreeBudget(std::move(m));
    }

    int at(int v) const {
        auto it = values_.find(v);
        require(it != values_.end(), errc::precondition,
                "budget undefined at " + std::to_string(v));
        return it->second;
    }
    bool defined_on(const Graph& g) const {
        for (int v : g.vertices())
            if (!values_.count(v)) return false;
        return true;
    }
    const std::map<int, int>& values() const { return values_; }

    // f_[X,-1]: decrement on X, identity elsewhere.
    DegreeBudget reduced(const std::vector<int>& xs) const {
        std::map<int, int> m = values_;
        for (int x : xs) {
            auto it = m.find(x);
            require(it != m.end(), errc::precondition, "reduction outside domain");
            require(it->second >= 1, errc::precondition, "budget reduced below zero");
            --it->second;
        }
        return DegreeBudget(std::move(m));
    }
    DegreeBudget reduced(int x) const { return reduced(std::vector<int>{x}); }

    DegreeBudget restricted(const Graph& g) const {
        std::map<int, int> m;
        for (int v : g.vertices()) m[v] = at(v);
        return DegreeBudget(std::move(m));
    }
    DegreeBudget with(int v, int value) const {
        std::map<int, int> m = values_;
        m[v] = value;
        return DegreeBudget(std::move(m));
    }

    bool operator==(const DegreeBudget&) const = default;

  private:
    std::map<int, int> values_;
};

} // namespace at
