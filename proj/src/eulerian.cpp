#include "at/eulerian.hpp"

#include <algorithm>
#include <map>

namespace at {

namespace {

// Arcs are scanned in a fixed order; slot(v) indexes the balance array.
// remaining[i][s] = arcs with index >= i incident to slot s, so a vertex whose
// imbalance exceeds what the tail can still absorb prunes the branch.
struct EnumState {
    std::vector<Arc> arcs;              // re-indexed to slots
    std::vector<std::vector<int>> remaining;
    std::vector<int> balance;
    long long even = 0, odd = 0;

    void search(std::size_t i, int parity) {
        for (int s = 0; s < static_cast<int>(balance.size()); ++s) {
            int b = balance[s];
            if (b < 0) b = -b;
            if (b > remaining[i][s]) return;  // at i == |arcs| this demands balance 0
        }
        if (i == arcs.size()) {
            (parity ? odd : even) += 1;
            return;
        }
        // skip arc i
        search(i + 1, parity);
        // take arc i
        balance[arcs[i].tail] += 1;
        balance[arcs[i].head] -= 1;
        search(i + 1, parity ^ 1);
        balance[arcs[i].tail] -= 1;
        balance[arcs[i].head] += 1;
    }
};

} // namespace

EulerianCount diff_enum(const Orientation& d, int max_arcs) {
    require(d.arc_count() <= max_arcs, errc::oracle_too_large,
            "diff_enum: " + std::to_string(d.arc_count()) + " arcs exceeds cap " +
                std::to_string(max_arcs));

    std::map<int, int> slot;
    for (int v : d.graph().vertices())
        if (d.graph().degree(v) > 0) slot.emplace(v, static_cast<int>(slot.size()));

    EnumState st;
    for (const Arc& a : d.arcs()) st.arcs.push_back({slot.at(a.tail), slot.at(a.head)});
    // Group arcs by their larger slot so vertices close out early.
    std::sort(st.arcs.begin(), st.arcs.end(), [](const Arc& a, const Arc& b) {
        int ma = std::max(a.tail, a.head), mb = std::max(b.tail, b.head);
        if (ma != mb) return ma < mb;
        return std::minmax(a.tail, a.head) < std::minmax(b.tail, b.head);
    });

    int n = static_cast<int>(slot.size());
    st.balance.assign(n, 0);
    st.remaining.assign(st.arcs.size() + 1, std::vector<int>(n, 0));
    for (int i = static_cast<int>(st.arcs.size()) - 1; i >= 0; --i) {
        st.remaining[i] = st.remaining[i + 1];
        st.remaining[i][st.arcs[i].tail] += 1;
        st.remaining[i][st.arcs[i].head] += 1;
    }

    st.search(0, 0);
    return EulerianCount{st.even, st.odd};
}

} // namespace at
