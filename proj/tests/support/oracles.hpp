// Independent reference implementations the main library is tested against:
// contraction by direct rotation surgery, and flow counting with the identity
// label allowed.
#ifndef PRG_TESTS_ORACLES_HPP
#define PRG_TESTS_ORACLES_HPP

#include "prg/flows.hpp"
#include "prg/packaged.hpp"
#include "prg/ribbon.hpp"
#include "prg/tutte.hpp"

#include <algorithm>

namespace prg::testing {

// Contract one edge by splicing rotation cycles. A non-loop edge {h1, h2}
// merges its endpoints into one vertex with cycle (a1..ap b1..bq), the a's
// and b's being the remaining half-edges after h1 resp. h2 in rotation
// order. A loop with cycle (h1 a1..ap h2 b1..bq) splits its vertex into
// (a1..ap) and (b1..bq).
inline RibbonMap contract_oracle(const RibbonMap& map, int edge) {
    auto he = map.edges.at(edge);
    int h1 = he[0], h2 = he[1];
    int u = map.vertex_of.at(h1), v = map.vertex_of.at(h2);

    auto arc_after = [&](const std::vector<int>& cycle, int from, int stop) {
        // Half-edges strictly between `from` and `stop` in cyclic order.
        std::vector<int> out;
        size_t n = cycle.size();
        size_t i = std::find(cycle.begin(), cycle.end(), from) - cycle.begin();
        for (size_t step = 1; step < n; ++step) {
            int h = cycle[(i + step) % n];
            if (h == stop) break;
            out.push_back(h);
        }
        return out;
    };

    std::vector<std::vector<int>> cycles;
    if (u != v) {
        std::vector<int> a = arc_after(map.vertices[u], h1, h1);
        std::vector<int> b = arc_after(map.vertices[v], h2, h2);
        a.insert(a.end(), b.begin(), b.end());
        for (int w = 0; w < map.num_vertices(); ++w) {
            if (w == v) continue;
            cycles.push_back(w == u ? a : map.vertices[w]);
        }
    } else {
        std::vector<int> a = arc_after(map.vertices[u], h1, h2);
        std::vector<int> b = arc_after(map.vertices[u], h2, h1);
        for (int w = 0; w < map.num_vertices(); ++w) {
            if (w == u) {
                cycles.push_back(a);
                cycles.push_back(b);
            } else {
                cycles.push_back(map.vertices[w]);
            }
        }
    }
    std::map<int, std::array<int, 2>> edges = map.edges;
    edges.erase(edge);
    return RibbonMap::make(cycles, edges);
}

// Same enumeration as brute_force_q but with the identity allowed: counts all
// local flows, the quantity the closed product formula computes.
inline BigInt count_all_flows(const RibbonMap& map, const GroupSpec& gamma) {
    std::vector<int> ids;
    for (const auto& [eid, he] : map.edges) ids.push_back(eid);
    int m = static_cast<int>(ids.size());
    std::map<int, int> index;
    for (int i = 0; i < m; ++i) index[ids[i]] = i;

    std::vector<int> inv(gamma.order);
    for (int g = 0; g < gamma.order; ++g) inv[g] = gamma.inverse(g);
    const auto& t = *gamma.cayley;

    BigInt count = 0;
    std::vector<int> digits(m, 0);
    while (true) {
        bool ok = true;
        for (const auto& cycle : map.vertices) {
            int acc = 0;
            for (int h : cycle) {
                int e = map.edge_of.at(h);
                int g = digits[index[e]];
                acc = t[acc][map.edges.at(e)[1] == h ? g : inv[g]];
            }
            if (acc != 0) { ok = false; break; }
        }
        if (ok) count += 1;
        int pos = m - 1;
        while (pos >= 0 && digits[pos] == gamma.order - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return count;
}

// Structural value equality for maps that may only differ by vertex order /
// relabelling: identical counts, vertex degree multiset, and trivially
// packaged state sum.
inline bool same_map_value(const RibbonMap& a, const RibbonMap& b) {
    if (counts(a) != counts(b)) return false;
    auto degrees = [](const RibbonMap& m) {
        std::vector<size_t> d;
        for (const auto& c : m.vertices) d.push_back(c.size());
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    return statesum(from_plain(a)) == statesum(from_plain(b));
}

} // namespace prg::testing

#endif
