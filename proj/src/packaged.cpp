#include "prg/packaged.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace prg {

void PackagedRibbonGraph::validate() const {
    std::set<int> vuniverse;
    for (int vi = 0; vi < map.num_vertices(); ++vi) vuniverse.insert(vi);
    vpart.validate(vuniverse);
    std::set<std::string> funiverse;
    for (const auto& bc : boundary_components(map)) funiverse.insert(bc.id);
    fpart.validate(funiverse);
}

PackagedRibbonGraph from_plain(const RibbonMap& map) {
    PackagedRibbonGraph pg;
    pg.map = map;
    std::vector<int> vs(map.num_vertices());
    std::iota(vs.begin(), vs.end(), 0);
    pg.vpart = Partition<int>::singletons(vs);
    std::vector<std::string> fs;
    for (const auto& bc : boundary_components(map)) fs.push_back(bc.id);
    pg.fpart = Partition<std::string>::singletons(fs);
    return pg;
}

namespace {

// Boundary ids of the two half-edges of e (they lie on orbit components).
std::pair<std::string, std::string> edge_boundary_ids(const PackagedRibbonGraph& pg, int e) {
    if (!pg.map.has_edge(e))
        throw ValidationError("unknown edge id " + std::to_string(e));
    auto [h1, h2] = std::pair(pg.map.edges.at(e)[0], pg.map.edges.at(e)[1]);
    std::string id1, id2;
    for (const auto& bc : boundary_components(pg.map)) {
        if (bc.kind != BoundaryComponent::Kind::Orbit) continue;
        for (int h : bc.half_edges) {
            if (h == h1) id1 = bc.id;
            if (h == h2) id2 = bc.id;
        }
    }
    assert(!id1.empty() && !id2.empty());
    return {id1, id2};
}

} // namespace

int eta(const PackagedRibbonGraph& pg, int e) {
    auto [f1, f2] = edge_boundary_ids(pg, e);
    return pg.fpart.block_of(f1) == pg.fpart.block_of(f2) ? 1 : 2;
}

int mu(const PackagedRibbonGraph& pg, int e) {
    if (!pg.map.has_edge(e))
        throw ValidationError("unknown edge id " + std::to_string(e));
    int u = pg.map.vertex_of.at(pg.map.edges.at(e)[0]);
    int v = pg.map.vertex_of.at(pg.map.edges.at(e)[1]);
    return pg.vpart.block_of(u) == pg.vpart.block_of(v) ? 1 : 2;
}

PackagedRibbonGraph delete_edge(const PackagedRibbonGraph& pg, int e) {
    auto [f1, f2] = edge_boundary_ids(pg, e);

    std::set<int> keep;
    for (const auto& [eid, he] : pg.map.edges)
        if (eid != e) keep.insert(eid);

    PackagedRibbonGraph out;
    out.map = restrict_map(pg.map, keep);
    out.vpart = pg.vpart;

    // Match old boundary components to new ones. A new component whose id
    // coincides with an old id of the same kind, other than the one or two
    // components the edge lay on, is untouched (its half-edge set, and hence
    // minimum, cannot have changed); everything else is a piece produced by
    // the surgery.
    std::set<std::string> old_ids;
    for (const auto& bc : boundary_components(pg.map)) old_ids.insert(bc.id);
    std::vector<std::string> pieces;
    std::set<std::string> untouched;
    for (const auto& bc : boundary_components(out.map)) {
        if (old_ids.count(bc.id) && bc.id != f1 && bc.id != f2)
            untouched.insert(bc.id);
        else
            pieces.push_back(bc.id);
    }

    out.fpart = pg.fpart;
    auto& blocks = out.fpart.blocks;
    auto& weights = out.fpart.weights;
    auto erase_from_block = [&](int bi, const std::string& id) {
        auto& b = blocks[bi];
        b.erase(std::find(b.begin(), b.end(), id));
    };

    if (f1 == f2) {
        // The edge met one boundary component twice: it splits in two, both
        // pieces stay in its block, and the block weight grows by one.
        if (pieces.size() != 2)
            throw ValidationError("deletion surgery: expected two pieces, got " +
                                  std::to_string(pieces.size()));
        int bi = out.fpart.block_of(f1);
        erase_from_block(bi, f1);
        blocks[bi].push_back(pieces[0]);
        blocks[bi].push_back(pieces[1]);
        weights[bi] += 1;
    } else {
        if (pieces.size() != 1)
            throw ValidationError("deletion surgery: expected one piece, got " +
                                  std::to_string(pieces.size()));
        int b1 = out.fpart.block_of(f1);
        int b2 = out.fpart.block_of(f2);
        if (b1 == b2) {
            // Two components of the same block merge; weight grows by one.
            erase_from_block(b1, f1);
            erase_from_block(b1, f2);
            blocks[b1].push_back(pieces[0]);
            weights[b1] += 1;
        } else {
            // Components in distinct blocks: the blocks fuse around the merged
            // component and the weights add.
            erase_from_block(b1, f1);
            erase_from_block(b2, f2);
            blocks[b1].insert(blocks[b1].end(), blocks[b2].begin(), blocks[b2].end());
            blocks[b1].push_back(pieces[0]);
            weights[b1] += weights[b2];
            blocks.erase(blocks.begin() + b2);
            weights.erase(weights.begin() + b2);
        }
    }
    out.fpart.canonicalize();

    // Untouched components kept their ids and blocks by construction.
    (void)untouched;
    return out;
}

PackagedRibbonGraph dual(const PackagedRibbonGraph& pg) {
    PackagedRibbonGraph out;
    out.map = dual(pg.map);

    // Boundary component #j of pg.map is vertex j of the dual.
    std::map<std::string, int> bc_index;
    {
        int j = 0;
        for (const auto& bc : boundary_components(pg.map)) bc_index[bc.id] = j++;
    }
    out.vpart.blocks.clear();
    out.vpart.weights = pg.fpart.weights;
    for (const auto& block : pg.fpart.blocks) {
        std::vector<int> nb;
        for (const auto& id : block) nb.push_back(bc_index.at(id));
        out.vpart.blocks.push_back(std::move(nb));
    }
    out.vpart.canonicalize();

    // Primal vertex j lies on a known boundary component of the dual.
    std::vector<std::string> vid = dual_boundary_ids_of_vertices(pg.map);
    out.fpart.blocks.clear();
    out.fpart.weights = pg.vpart.weights;
    for (const auto& block : pg.vpart.blocks) {
        std::vector<std::string> nb;
        for (int v : block) nb.push_back(vid.at(v));
        out.fpart.blocks.push_back(std::move(nb));
    }
    out.fpart.canonicalize();
    return out;
}

PackagedRibbonGraph contract_edge(const PackagedRibbonGraph& pg, int e) {
    return dual(delete_edge(dual(pg), e));
}

Multigraph packaging_V(const PackagedRibbonGraph& pg) {
    Multigraph g;
    g.num_vertices = pg.vpart.num_blocks();
    g.vertex_weights = pg.vpart.weights;
    std::vector<int> block_of_vertex(pg.map.num_vertices());
    for (int bi = 0; bi < pg.vpart.num_blocks(); ++bi)
        for (int v : pg.vpart.blocks[bi]) block_of_vertex[v] = bi;
    for (const auto& [eid, he] : pg.map.edges) {
        int u = block_of_vertex[pg.map.vertex_of.at(he[0])];
        int v = block_of_vertex[pg.map.vertex_of.at(he[1])];
        g.edges[eid] = {u, v};
    }
    return g;
}

Multigraph packaging_F(const PackagedRibbonGraph& pg) { return packaging_V(dual(pg)); }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

int mg_component_count(const Multigraph& g) {
    UnionFind uf(g.num_vertices);
    for (const auto& [eid, uv] : g.edges) uf.join(uv.first, uv.second);
    std::set<int> roots;
    for (int i = 0; i < g.num_vertices; ++i) roots.insert(uf.find(i));
    return static_cast<int>(roots.size());
}

int mg_rank(const Multigraph& g) { return g.num_vertices - mg_component_count(g); }

int mg_nullity(const Multigraph& g) { return static_cast<int>(g.edges.size()) - mg_rank(g); }

std::vector<QuotientComponent> quotient_components(const RibbonMap& map,
                                                   const Partition<int>& part) {
    int nb = part.num_blocks();
    std::vector<int> block_of_vertex(map.num_vertices(), -1);
    for (int bi = 0; bi < nb; ++bi)
        for (int v : part.blocks[bi]) block_of_vertex[v] = bi;

    UnionFind uf(nb);
    for (const auto& [eid, he] : map.edges)
        uf.join(block_of_vertex[map.vertex_of.at(he[0])],
                block_of_vertex[map.vertex_of.at(he[1])]);

    std::map<int, QuotientComponent> by_root;
    for (int bi = 0; bi < nb; ++bi) {
        QuotientComponent& c = by_root[uf.find(bi)];
        c.num_blocks += 1;
        c.weight += part.weights[bi];
    }
    for (const auto& [eid, he] : map.edges)
        by_root[uf.find(block_of_vertex[map.vertex_of.at(he[0])])].num_edges += 1;
    // Each boundary component of the map belongs to exactly one quotient
    // component; their counts are the f(G[K]) of the genus formula.
    for (const auto& bc : boundary_components(map)) {
        int root;
        if (bc.kind == BoundaryComponent::Kind::Orbit)
            root = uf.find(block_of_vertex[map.vertex_of.at(bc.half_edges[0])]);
        else
            root = uf.find(block_of_vertex[bc.vertex]);
        by_root[root].boundaries += 1;
    }

    std::vector<QuotientComponent> out;
    for (auto& [root, c] : by_root) out.push_back(c);
    return out;
}

std::pair<RibbonMap, int> induced_subribbon(const PackagedRibbonGraph& host,
                                            const PackagingSubgraph& K) {
    std::set<int> vkeep;
    for (int bi : K.blocks) {
        if (bi < 0 || bi >= host.vpart.num_blocks())
            throw ValidationError("induced_subribbon: unknown block index");
        for (int v : host.vpart.blocks[bi]) vkeep.insert(v);
    }
    std::set<int> ekeep(K.edges.begin(), K.edges.end());
    for (int e : ekeep) {
        if (!host.map.has_edge(e))
            throw ValidationError("induced_subribbon: unknown edge id");
        const auto& he = host.map.edges.at(e);
        if (!vkeep.count(host.map.vertex_of.at(he[0])) ||
            !vkeep.count(host.map.vertex_of.at(he[1])))
            throw ValidationError("induced_subribbon: edge leaves the chosen blocks");
    }

    RibbonMap sub;
    std::set<int> removed;
    for (const auto& [eid, he] : host.map.edges) {
        if (ekeep.count(eid)) {
            sub.edges[eid] = he;
        } else {
            removed.insert(he[0]);
            removed.insert(he[1]);
        }
    }
    for (int v = 0; v < host.map.num_vertices(); ++v) {
        if (!vkeep.count(v)) continue;
        std::vector<int> cycle;
        for (int h : host.map.vertices[v])
            if (!removed.count(h)) cycle.push_back(h);
        sub.vertices.push_back(std::move(cycle));
    }
    sub.finalize();
    return {sub, static_cast<int>(boundary_components(sub).size())};
}

} // namespace prg
