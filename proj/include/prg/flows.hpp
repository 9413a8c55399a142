// Counting nowhere-identity local flows (and tensions, via the dual) over a
// finite group: closed product formula, inclusion-exclusion, deletion-
// contraction recursion, Tutte-polynomial substitution, and brute-force
// enumeration against an explicit Cayley table. Flow routes read only the
// vertex-side partition; every tension route is the flow route on the dual.
#ifndef PRG_FLOWS_HPP
#define PRG_FLOWS_HPP

#include "prg/numeric.hpp"
#include "prg/packaged.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prg {

struct GroupSpec {
    long long order = 1;
    std::vector<long long> irrep_dims;             // sum of squares must equal order
    std::optional<std::vector<std::vector<int>>> cayley; // row op column; 0 is identity

    // Checks sum(n_i^2) == order and, when a table is present, identity
    // row/column, two-sided inverses, and associativity on random triples
    // (all triples when full_assoc_check).
    void validate(bool full_assoc_check = false) const;

    int op(int g, int h) const { return (*cayley)[g][h]; }
    int inverse(int g) const;
};

GroupSpec cyclic_group(int n);
GroupSpec dihedral_group(int n); // order 2n
GroupSpec group_from_table_text(const std::string& text);
GroupSpec group_from_table_file(const std::string& path);

// Closed formula: product over components C of the vertex-side packaging of
//   |G|^{e(C) - v(C)} * sum_i n_i^{f(C) - e(C) + v(C) - w(C)},
// f(C) the boundary count of the induced ribbon subgraph. Counts all local
// flows (identity allowed); exact rational.
Rational q1(const PackagedRibbonGraph& pg, const GroupSpec& gamma);
Rational p1(const PackagedRibbonGraph& pg, const GroupSpec& gamma); // = q1 on the dual

// Nowhere-identity counts. Exact rationals: integral whenever all block
// weights are zero (asserted there by callers/tests), genuinely fractional on
// some weighted instances.
Rational q_incexc(const PackagedRibbonGraph& pg, const GroupSpec& gamma);
Rational p_incexc(const PackagedRibbonGraph& pg, const GroupSpec& gamma);

// q = |G|^{2-mu(e)} q(pg / e) - q(pg \ e);
// edgeless base  prod_[v] |G|^{-1} sum_i n_i^{1+|[v]|-w([v])}; p dually.
Rational q_dc(const PackagedRibbonGraph& pg, const GroupSpec& gamma);
Rational p_dc(const PackagedRibbonGraph& pg, const GroupSpec& gamma);

// (-1)^{e-|V|} * statesum(pg) at x = 1, y = -|G|, x_g = 1,
// y_g = -(1/|G|) sum_i n_i^{2-2g}; p with the roles of x and y exchanged and
// sign (-1)^{e-|F|}.
Rational q_via_T(const PackagedRibbonGraph& pg, const GroupSpec& gamma);
Rational p_via_T(const PackagedRibbonGraph& pg, const GroupSpec& gamma);

// Enumerate assignments gamma: E -> G \ {1}; at every vertex the rotation-
// ordered product of gamma(e)^{+1 / -1} (head / tail half-edge) must be the
// identity. Requires a Cayley table and |G|^e within `budget`.
BigInt brute_force_q(const RibbonMap& map, const GroupSpec& gamma,
                     long long budget = 10'000'000);
BigInt brute_force_p(const RibbonMap& map, const GroupSpec& gamma,
                     long long budget = 10'000'000);

} // namespace prg

#endif
