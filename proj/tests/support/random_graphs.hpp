// Seeded random instance generators for the property suites. Every map they
// produce is a valid orientable combinatorial map by construction.
#ifndef PRG_TESTS_RANDOM_GRAPHS_HPP
#define PRG_TESTS_RANDOM_GRAPHS_HPP

#include "prg/packaged.hpp"
#include "prg/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace prg::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A random map with 1..max_vertices vertices and 0..max_edges edges: pair up
// 2m half-edges arbitrarily, scatter them over the vertices, shuffle each
// rotation cycle. Disconnected maps and isolated vertices are fair game.
inline RibbonMap random_map(std::mt19937& rng, int max_vertices, int max_edges) {
    int nv = uniform(rng, 1, max_vertices);
    int ne = uniform(rng, 0, max_edges);
    std::vector<int> halves(2 * ne);
    std::iota(halves.begin(), halves.end(), 0);
    std::shuffle(halves.begin(), halves.end(), rng);

    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < ne; ++i) edges.push_back({halves[2 * i], halves[2 * i + 1]});

    std::vector<std::vector<int>> cycles(nv);
    for (int h = 0; h < 2 * ne; ++h) cycles[uniform(rng, 0, nv - 1)].push_back(h);
    for (auto& c : cycles) std::shuffle(c.begin(), c.end(), rng);
    return RibbonMap::make(cycles, edges);
}

template <typename Id>
Partition<Id> random_partition(std::mt19937& rng, std::vector<Id> universe, int max_weight) {
    Partition<Id> part;
    std::shuffle(universe.begin(), universe.end(), rng);
    size_t at = 0;
    while (at < universe.size()) {
        size_t len = 1 + uniform(rng, 0, static_cast<int>(universe.size() - at) - 1);
        if (uniform(rng, 0, 1)) len = 1; // bias towards small blocks
        part.blocks.push_back({universe.begin() + at, universe.begin() + at + len});
        part.weights.push_back(uniform(rng, 0, max_weight));
        at += len;
    }
    part.canonicalize();
    return part;
}

inline PackagedRibbonGraph random_packaged(std::mt19937& rng, int max_vertices, int max_edges,
                                           int max_weight) {
    PackagedRibbonGraph pg;
    pg.map = random_map(rng, max_vertices, max_edges);
    std::vector<int> vs(pg.map.num_vertices());
    std::iota(vs.begin(), vs.end(), 0);
    pg.vpart = random_partition<int>(rng, vs, max_weight);
    std::vector<std::string> fs;
    for (const auto& bc : boundary_components(pg.map)) fs.push_back(bc.id);
    pg.fpart = random_partition<std::string>(rng, fs, max_weight);
    pg.validate();
    return pg;
}

// Nontrivial random blocks but every weight zero (the pseudo-surface
// polynomial is only defined there).
inline PackagedRibbonGraph random_zero_weight_packaged(std::mt19937& rng, int max_vertices,
                                                       int max_edges) {
    return random_packaged(rng, max_vertices, max_edges, 0);
}

// Rejection-sample a connected genus-zero map.
inline RibbonMap random_connected_planar(std::mt19937& rng, int max_vertices, int max_edges) {
    while (true) {
        RibbonMap map = random_map(rng, max_vertices, max_edges);
        CountSummary c = counts(map);
        if (c.k == 1 && c.g == 0) return map;
    }
}

} // namespace prg::testing

#endif
