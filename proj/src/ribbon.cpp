#include "prg/ribbon.hpp"

#include <algorithm>
#include <numeric>

namespace prg {

void RibbonMap::finalize() {
    alpha.clear();
    sigma.clear();
    vertex_of.clear();
    edge_of.clear();

    for (const auto& [eid, he] : edges) {
        auto [t, h] = std::pair(he[0], he[1]);
        if (t == h) throw ValidationError("edge " + std::to_string(eid) +
                                          " pairs a half-edge with itself");
        if (alpha.count(t) || alpha.count(h))
            throw ValidationError("half-edge appears in two edges");
        alpha[t] = h;
        alpha[h] = t;
        edge_of[t] = eid;
        edge_of[h] = eid;
    }

    for (int vi = 0; vi < num_vertices(); ++vi) {
        const auto& cycle = vertices[vi];
        for (size_t p = 0; p < cycle.size(); ++p) {
            int h = cycle[p];
            if (vertex_of.count(h))
                throw ValidationError("half-edge " + std::to_string(h) +
                                      " appears in two rotation positions");
            vertex_of[h] = vi;
            sigma[h] = cycle[(p + 1) % cycle.size()];
        }
    }

    if (vertex_of.size() != alpha.size())
        throw ValidationError("half-edge sets of edges and rotations differ");
    for (const auto& [h, hv] : vertex_of)
        if (!alpha.count(h))
            throw ValidationError("half-edge " + std::to_string(h) +
                                  " lies on a vertex but on no edge");
}

RibbonMap RibbonMap::make(std::vector<std::vector<int>> vertex_cycles,
                          std::vector<std::array<int, 2>> edge_list) {
    std::map<int, std::array<int, 2>> em;
    for (size_t i = 0; i < edge_list.size(); ++i) em[static_cast<int>(i)] = edge_list[i];
    return make(std::move(vertex_cycles), std::move(em));
}

RibbonMap RibbonMap::make(std::vector<std::vector<int>> vertex_cycles,
                          std::map<int, std::array<int, 2>> edge_map) {
    RibbonMap m;
    m.vertices = std::move(vertex_cycles);
    m.edges = std::move(edge_map);
    m.finalize();
    return m;
}

std::vector<BoundaryComponent> boundary_components(const RibbonMap& map) {
    std::vector<BoundaryComponent> out;
    std::set<int> visited;
    // Ascending scan: the first unvisited half-edge of an orbit is its minimum,
    // so each cycle is emitted starting there and orbits arrive sorted.
    for (const auto& [h0, partner] : map.alpha) {
        if (visited.count(h0)) continue;
        BoundaryComponent bc;
        bc.kind = BoundaryComponent::Kind::Orbit;
        int h = h0;
        do {
            bc.half_edges.push_back(h);
            visited.insert(h);
            h = map.sigma.at(map.alpha.at(h));
        } while (h != h0);
        bc.id = "h" + std::to_string(h0);
        out.push_back(std::move(bc));
    }
    for (int vi = 0; vi < map.num_vertices(); ++vi) {
        if (!map.vertices[vi].empty()) continue;
        BoundaryComponent bc;
        bc.kind = BoundaryComponent::Kind::IsolatedVertex;
        bc.vertex = vi;
        bc.id = "v" + std::to_string(vi);
        out.push_back(std::move(bc));
    }
    return out;
}

std::vector<ComponentPart> components(const RibbonMap& map) {
    int n = map.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [eid, he] : map.edges) {
        int a = find(map.vertex_of.at(he[0]));
        int b = find(map.vertex_of.at(he[1]));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, ComponentPart> by_root;
    for (int vi = 0; vi < n; ++vi) by_root[find(vi)].vertices.push_back(vi);
    for (const auto& [eid, he] : map.edges)
        by_root[find(map.vertex_of.at(he[0]))].edges.push_back(eid);
    std::vector<ComponentPart> out;
    for (auto& [root, part] : by_root) out.push_back(std::move(part));
    return out;
}

CountSummary counts(const RibbonMap& map) {
    CountSummary c;
    c.v = map.num_vertices();
    c.e = map.num_edges();
    c.f = static_cast<int>(boundary_components(map).size());
    c.k = static_cast<int>(components(map).size());
    int g2 = 2 * c.k - c.f + c.e - c.v;
    if (g2 < 0 || g2 % 2 != 0)
        throw ValidationError("malformed map: Euler genus 2g = " + std::to_string(g2));
    c.g = g2 / 2;
    c.r = c.v - c.k;
    c.n = c.e - c.r;
    return c;
}

RibbonMap restrict_map(const RibbonMap& map, const std::set<int>& A) {
    for (int e : A)
        if (!map.has_edge(e))
            throw ValidationError("restrict: unknown edge id " + std::to_string(e));
    std::set<int> removed;
    RibbonMap r;
    for (const auto& [eid, he] : map.edges) {
        if (A.count(eid)) {
            r.edges[eid] = he;
        } else {
            removed.insert(he[0]);
            removed.insert(he[1]);
        }
    }
    r.vertices.reserve(map.vertices.size());
    for (const auto& cycle : map.vertices) {
        std::vector<int> kept;
        for (int h : cycle)
            if (!removed.count(h)) kept.push_back(h);
        r.vertices.push_back(std::move(kept));
    }
    r.finalize();
    return r;
}

RibbonMap dual(const RibbonMap& map) {
    RibbonMap d;
    for (const auto& bc : boundary_components(map)) {
        if (bc.kind == BoundaryComponent::Kind::Orbit)
            d.vertices.push_back(bc.half_edges);
        else
            d.vertices.emplace_back();
    }
    d.edges = map.edges;
    d.finalize();
    return d;
}

std::vector<std::string> dual_boundary_ids_of_vertices(const RibbonMap& map) {
    // The dual's face walk is the primal rotation, so a non-isolated primal
    // vertex becomes the dual boundary orbit holding its cycle; a primal
    // isolated vertex stays isolated, at dual index (#orbits + isolated rank).
    int num_orbits = 0;
    for (const auto& bc : boundary_components(map))
        if (bc.kind == BoundaryComponent::Kind::Orbit) ++num_orbits;
    std::vector<std::string> out(map.num_vertices());
    int isolated_rank = 0;
    for (int vi = 0; vi < map.num_vertices(); ++vi) {
        if (map.vertices[vi].empty()) {
            out[vi] = "v" + std::to_string(num_orbits + isolated_rank);
            ++isolated_rank;
        } else {
            out[vi] = "h" + std::to_string(
                *std::min_element(map.vertices[vi].begin(), map.vertices[vi].end()));
        }
    }
    return out;
}

} // namespace prg
