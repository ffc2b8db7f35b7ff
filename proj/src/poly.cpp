#include "at/poly.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace at {

namespace {

// Exponent vectors are packed 5 bits per slot; 3 words cover 38 slots, which
// is comfortably above every size the enumeration oracles accept.
constexpr int kBitsPerSlot = 5;
constexpr int kSlotsPerWord = 64 / kBitsPerSlot;
constexpr int kMaxSlots = 3 * kSlotsPerWord;
constexpr int kMaxExponent = (1 << kBitsPerSlot) - 1;

using Key = std::array<std::uint64_t, 3>;

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : k) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

int slot_exponent(const Key& k, int s) {
    return static_cast<int>((k[s / kSlotsPerWord] >> (kBitsPerSlot * (s % kSlotsPerWord))) &
                            kMaxExponent);
}

Key bumped(const Key& k, int s) {
    Key r = k;
    r[s / kSlotsPerWord] += std::uint64_t{1} << (kBitsPerSlot * (s % kSlotsPerWord));
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    require(!__builtin_add_overflow(a, b, &r), errc::overflow, "coefficient overflow");
    return r;
}

} // namespace

long long coeff(const Graph& g, const OutDegrees& d, std::size_t max_monomials) {
    long long sum = 0;
    for (auto [v, k] : d) {
        require(g.has_vertex(v), errc::invalid_input,
                "out-degree given for unknown vertex " + std::to_string(v));
        sum += k;
    }
    require(sum == g.edge_count(), errc::invalid_input,
            "out-degree sum != edge count");
    for (auto [v, k] : d) {
        if (k < 0) return 0;                  // impossible exponent
        if (k > g.degree(v)) return 0;        // more out-arcs than incident edges
    }

    // Slots for vertices incident to at least one edge; isolated vertices only
    // contribute the constraint d(v) == 0, already handled above.
    std::map<int, int> slot;
    std::vector<int> cap;
    for (int v : g.vertices()) {
        if (g.degree(v) == 0) continue;
        slot.emplace(v, static_cast<int>(slot.size()));
        int c = d.count(v) ? d.at(v) : 0;
        require(c <= kMaxExponent, errc::oracle_too_large, "exponent exceeds packing width");
        cap.push_back(c);
    }
    require(static_cast<int>(slot.size()) <= kMaxSlots, errc::oracle_too_large,
            "too many non-isolated vertices for coefficient expansion");

    const std::vector<Edge>& edges = g.edges();  // lexicographic order
    // completion[i]: slots whose last incident edge is edges[i].
    std::vector<std::vector<int>> completion(edges.size());
    {
        std::map<int, std::size_t> last;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            last[slot.at(edges[i].u)] = i;
            last[slot.at(edges[i].v)] = i;
        }
        for (auto [s, i] : last) completion[i].push_back(s);
    }

    std::unordered_map<Key, long long, KeyHash> table;
    table.emplace(Key{0, 0, 0}, 1);

    for (std::size_t i = 0; i < edges.size(); ++i) {
        int su = slot.at(edges[i].u);
        int sv = slot.at(edges[i].v);
        std::unordered_map<Key, long long, KeyHash> next;
        next.reserve(table.size() * 2);
        for (const auto& [key, c] : table) {
            if (slot_exponent(key, su) < cap[su]) {
                auto [it, fresh] = next.try_emplace(bumped(key, su), c);
                if (!fresh && (it->second = checked_add(it->second, c)) == 0) next.erase(it);
            }
            if (slot_exponent(key, sv) < cap[sv]) {
                auto [it, fresh] = next.try_emplace(bumped(key, sv), -c);
                if (!fresh && (it->second = checked_add(it->second, -c)) == 0) next.erase(it);
            }
        }
        for (int s : completion[i]) {
            for (auto it = next.begin(); it != next.end();) {
                if (slot_exponent(it->first, s) != cap[s])
                    it = next.erase(it);
                else
                    ++it;
            }
        }
        require(next.size() <= max_monomials, errc::oracle_too_large,
                "monomial table exceeds cap");
        table = std::move(next);
        if (table.empty()) return 0;
    }

    if (table.empty()) return 0;
    require(table.size() == 1, errc::certificate_violation, "expansion left stray monomials");
    return table.begin()->second;
}

long long diff_coeff(const Orientation& d, std::size_t max_monomials) {
    long long raw = coeff(d.graph(), d.out_degrees(), max_monomials);
    return d.descent_parity() ? -raw : raw;
}

} // namespace at
