// Packaged ribbon graphs: a ribbon map together with weighted partitions of
// its vertices (vpart) and of its boundary components (fpart, keyed by the
// canonical boundary ids). Deletion performs the three-case boundary-side
// surgery; contraction is dual . delete . dual; packagings are the weighted
// quotient multigraphs.
#ifndef PRG_PACKAGED_HPP
#define PRG_PACKAGED_HPP

#include "prg/ribbon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace prg {

template <class Id>
struct Partition {
    std::vector<std::vector<Id>> blocks; // disjoint, nonempty, each sorted
    std::vector<long long> weights;      // one nonnegative weight per block

    int num_blocks() const { return static_cast<int>(blocks.size()); }

    // Sort each block and order blocks by smallest element; the canonical
    // layout makes equality literal.
    void canonicalize() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::vector<int> order(blocks.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return blocks[i].front() < blocks[j].front();
        });
        std::vector<std::vector<Id>> nb;
        std::vector<long long> nw;
        for (int i : order) {
            nb.push_back(std::move(blocks[i]));
            nw.push_back(weights[i]);
        }
        blocks = std::move(nb);
        weights = std::move(nw);
    }

    // Exact cover of `universe`; nonnegative weights; one weight per block.
    void validate(const std::set<Id>& universe) const {
        if (blocks.size() != weights.size())
            throw ValidationError("partition: weight count differs from block count");
        std::set<Id> seen;
        for (const auto& b : blocks) {
            if (b.empty()) throw ValidationError("partition: empty block");
            for (const Id& x : b) {
                if (!universe.count(x))
                    throw ValidationError("partition: element outside universe");
                if (!seen.insert(x).second)
                    throw ValidationError("partition: element in two blocks");
            }
        }
        if (seen.size() != universe.size())
            throw ValidationError("partition: does not cover the universe");
        for (long long w : weights)
            if (w < 0) throw ValidationError("partition: negative weight");
    }

    int block_of(const Id& x) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            if (std::binary_search(blocks[i].begin(), blocks[i].end(), x))
                return static_cast<int>(i);
        throw ValidationError("partition: unknown element");
    }

    static Partition singletons(const std::vector<Id>& universe) {
        Partition p;
        for (const Id& x : universe) {
            p.blocks.push_back({x});
            p.weights.push_back(0);
        }
        p.canonicalize();
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct PackagedRibbonGraph {
    RibbonMap map;
    Partition<int> vpart;         // over vertex indices
    Partition<std::string> fpart; // over canonical boundary ids

    void validate() const;
};

// Weighted quotient multigraph: one vertex per partition block, one edge per
// ribbon edge (ids preserved), loops and parallels allowed.
struct Multigraph {
    int num_vertices = 0;
    std::map<int, std::pair<int, int>> edges; // edge id -> endpoint vertices
    std::vector<long long> vertex_weights;
};

int mg_component_count(const Multigraph& g);
int mg_rank(const Multigraph& g);    // v - k
int mg_nullity(const Multigraph& g); // e - rank

// Trivial packaging: every vertex and boundary component its own block, all
// weights zero.
PackagedRibbonGraph from_plain(const RibbonMap& map);

// Number of distinct fpart blocks touched by edge e's two half-edges (1 or 2).
int eta(const PackagedRibbonGraph& pg, int e);
// Number of distinct vpart blocks containing e's endpoints (1 or 2).
int mu(const PackagedRibbonGraph& pg, int e);

// Remove edge e; vpart unchanged; fpart follows the three-case surgery:
//  1. e met one boundary component twice -> it splits in two; both pieces
//     join its block, block weight + 1;
//  2. e met two components in the same block -> they merge; weight + 1;
//  3. e met two components in distinct blocks -> the blocks fuse around the
//     merged component; the new weight is the sum of the two.
PackagedRibbonGraph delete_edge(const PackagedRibbonGraph& pg, int e);

// dual(delete_edge(dual(pg), e)); realizes the vertex-side three-case surgery.
PackagedRibbonGraph contract_edge(const PackagedRibbonGraph& pg, int e);

// Map dualized; vpart and fpart exchanged along the vertex <-> boundary
// correspondences, weights carried.
PackagedRibbonGraph dual(const PackagedRibbonGraph& pg);

Multigraph packaging_V(const PackagedRibbonGraph& pg);
Multigraph packaging_F(const PackagedRibbonGraph& pg); // = packaging_V(dual(pg))

// One connected component of the weighted quotient of `part` by the edges of
// `map`: block/edge/weight totals plus the boundary count of the induced
// ribbon subgraph (these are the ingredients of the per-component genus).
struct QuotientComponent {
    int num_blocks = 0;
    int num_edges = 0;
    long long weight = 0;
    int boundaries = 0;
};

std::vector<QuotientComponent> quotient_components(const RibbonMap& map,
                                                   const Partition<int>& part);

// A vertex-and-edge subgraph of a packaging: block indices plus edge ids.
struct PackagingSubgraph {
    std::vector<int> blocks;
    std::vector<int> edges;
};

// The ribbon subgraph on every vertex inside K's blocks with exactly K's
// edges, plus its boundary-component count. `host` is the packaged graph K
// was taken from (vertex side); pass dual(pg) for the boundary side.
std::pair<RibbonMap, int> induced_subribbon(const PackagedRibbonGraph& host,
                                            const PackagingSubgraph& K);

} // namespace prg

#endif
