// The packaged surface Tutte polynomial: state sum over edge subsets,
// deletion-contraction recursion (with leaf collection and pluggable pivot),
// the duality check, and the universal deletion-contraction invariant.
#ifndef PRG_TUTTE_HPP
#define PRG_TUTTE_HPP

#include "prg/laurent.hpp"
#include "prg/packaged.hpp"
#include "prg/poly.hpp"

#include <functional>
#include <vector>

namespace prg {

// Sum over subsets A of edges of
//   x^{n(G(dual|A^c; F))} y^{n(G(G|A; V))}
//   * prod over components H of the boundary-side packaging of x_{g(H)}
//   * prod over components K of the vertex-side packaging of y_{g(K)},
// where 2 g(component) = 2 + e - (number of blocks) + (total weight) - f and
// f is the boundary count of the induced ribbon subgraph. `threads` > 1
// splits the subset range into contiguous chunks evaluated concurrently.
IntPoly statesum(const PackagedRibbonGraph& pg, int threads = 1);

// Deletion-contraction on the lowest-id edge:
//   T = x^{2-eta(e)} T(pg \ e) + y^{2-mu(e)} T(pg / e),
// edgeless base  prod_[f] x_{(1-|[f]|+w([f]))/2} * prod_[v] y_{(1-|[v]|+w([v]))/2}.
IntPoly dc(const PackagedRibbonGraph& pg);

// Same recursion but keeping one polynomial per leaf (depth-first, delete
// branch before contract branch); their sum is dc(pg).
std::vector<IntPoly> dc_leaves(const PackagedRibbonGraph& pg);

// Deletion-contraction with a caller-chosen pivot (must return a live edge id).
IntPoly dc_with_pivot(const PackagedRibbonGraph& pg,
                      const std::function<int(const PackagedRibbonGraph&)>& pivot);

// statesum(pg) == swap_xy(statesum(dual(pg))).
bool check_duality(const PackagedRibbonGraph& pg);

// Parameters of the universal invariant: values for alpha/beta/kappa/tau and
// the two subscripted families. symbolic() leaves everything a free variable.
struct UniversalParams {
    LaurentPoly alpha, beta, kappa, tau;
    std::function<LaurentPoly(int)> a; // a_j, integer subscript j
    std::function<LaurentPoly(int)> b;
    static UniversalParams symbolic();
};

// Recursive route: U = (eta==1 ? alpha : tau) U(pg \ e)
//                    + (mu==1 ? beta : kappa) U(pg / e),
// edgeless base  prod_[f] tau * a_{w([f])-|[f]|} * prod_[v] kappa * b_{w([v])-|[v]|}.
LaurentPoly universal_recursive(const PackagedRibbonGraph& pg, const UniversalParams& par);

// Closed form: tau^{|F|} kappa^{|V|} * T(pg) under x -> alpha, y -> beta,
// x_g -> a_{2g-1}, y_g -> b_{2g-1}.
LaurentPoly universal_closed(const PackagedRibbonGraph& pg, const UniversalParams& par);

} // namespace prg

#endif
