// Orientable ribbon graphs as combinatorial maps: a fixed-point-free pairing
// involution alpha on half-edges plus counterclockwise rotation cycles at the
// vertices (an empty cycle is an isolated vertex). The face walk is fixed as
// h -> sigma(alpha(h)); its orbits, together with one component per isolated
// vertex, are the boundary components.
//
// Half-edge and edge ids are stable: restriction and deletion never renumber
// or reuse them, and the dual shares both id families with the primal.
#ifndef PRG_RIBBON_HPP
#define PRG_RIBBON_HPP

#include "prg/numeric.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace prg {

struct RibbonMap {
    // Rotation cycles in vertex order; vertices[i] lists half-edge ids
    // counterclockwise around vertex i, empty for an isolated vertex.
    std::vector<std::vector<int>> vertices;
    // edge id -> {tail half-edge, head half-edge}. The tail/head designation
    // is used only by the flow brute force.
    std::map<int, std::array<int, 2>> edges;

    // Derived lookups, populated by finalize().
    std::map<int, int> alpha;     // half-edge pairing
    std::map<int, int> sigma;     // rotation successor
    std::map<int, int> vertex_of; // half-edge -> vertex index
    std::map<int, int> edge_of;   // half-edge -> edge id

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    bool has_edge(int e) const { return edges.count(e) != 0; }

    // Build the derived lookups and check the map invariants (alpha a
    // fixed-point-free involution, every half-edge in exactly one rotation
    // cycle and one edge). Throws ValidationError on malformed input.
    void finalize();

    // Convenience constructor: edge i is edge_list[i].
    static RibbonMap make(std::vector<std::vector<int>> vertex_cycles,
                          std::vector<std::array<int, 2>> edge_list);
    static RibbonMap make(std::vector<std::vector<int>> vertex_cycles,
                          std::map<int, std::array<int, 2>> edge_map);
};

struct BoundaryComponent {
    enum class Kind { Orbit, IsolatedVertex };
    Kind kind = Kind::Orbit;
    std::vector<int> half_edges; // face-walk cycle, starting at its minimum id
    int vertex = -1;             // for IsolatedVertex kind
    std::string id;              // "h<min half-edge>" or "v<vertex index>"
};

struct CountSummary {
    int v = 0, e = 0, f = 0, k = 0;
    int g = 0, r = 0, n = 0;
    friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

struct ComponentPart {
    std::vector<int> vertices;
    std::vector<int> edges;
};

// All face-walk orbits (each cycle listed from its minimal half-edge, orbits
// sorted by that minimum) followed by one component per isolated vertex in
// vertex order. This order is also the dual's vertex order.
std::vector<BoundaryComponent> boundary_components(const RibbonMap& map);

// v, e, f, k counted directly; g, r, n derived. Throws ValidationError if the
// Euler-derived 2g is odd or negative (corrupt/non-orientable input).
CountSummary counts(const RibbonMap& map);

// Spanning ribbon subgraph on the edge set A: half-edges of other edges are
// spliced out of their rotation cycles; the vertex set is preserved.
RibbonMap restrict_map(const RibbonMap& map, const std::set<int>& A);

// Geometric dual: same half-edges and alpha; the primal face-walk orbits are
// the dual rotation cycles, and primal isolated vertices stay isolated.
// Dual vertex j is the j-th primal boundary component in canonical order.
RibbonMap dual(const RibbonMap& map);

// Connected components over vertices and edges; isolated vertices are
// singletons. Components sorted by smallest vertex index.
std::vector<ComponentPart> components(const RibbonMap& map);

// Canonical boundary id of each vertex of `map` inside dual(map):
// result[j] is the boundary component of the dual lying on primal vertex j.
std::vector<std::string> dual_boundary_ids_of_vertices(const RibbonMap& map);

} // namespace prg

#endif
