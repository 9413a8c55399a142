// Specializations of the packaged surface Tutte polynomial: the classical
// Tutte polynomial of a multigraph, the surface Tutte polynomial of a plain
// ribbon map (two independent routes), and the pseudo-surface Tutte
// polynomial (direct rank sum and via the packaged polynomial, with both the
// corrected and the uncorrected prefactor kept for regression).
#ifndef PRG_SPECIALIZATIONS_HPP
#define PRG_SPECIALIZATIONS_HPP

#include "prg/laurent.hpp"
#include "prg/packaged.hpp"
#include "prg/poly.hpp"
#include "prg/tutte.hpp"

namespace prg {

// Subset sum of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
IntPoly classical_tutte(const Multigraph& g);

// statesum(from_plain(map)).
IntPoly surface_tutte(const RibbonMap& map);

// Independent route without packaging machinery: components of the dual
// restricted to A^c on the x side, components of map|A on the y side, plain
// ribbon nullities and genera.
IntPoly surface_tutte_direct(const RibbonMap& map);

// Per-subset rank profile of the pseudo-surface Tutte polynomial.
struct RankProfile {
    long long r1 = 0; // rank of the vertex-side packaging of map|A
    long long r2 = 0; // r(map|A) + g(map|A) - r1(A)
    long long r3 = 0; // r(G(dual;F)) - r(G(dual|A^c;F))
    long long r4 = 0; // |A| + r(G(dual|A^c;F)) - r(G(dual;F)) - r(map|A) - g(map|A)
};

RankProfile rank_profile(const PackagedRibbonGraph& pg, const std::set<int>& A);

// Sum over A of w^{r1(E)-r1(A)} x^{r2(E)-r2(A)} y^{r3(A)} z^{r4(A)}.
// Partitions must carry zero weights.
LaurentPoly tps_direct(const RibbonMap& map, const Partition<int>& vpart,
                       const Partition<std::string>& fpart);

// Prefactor * statesum(pg) under x -> 1, y -> 1, x_g -> c d^{-g},
// y_g -> a b^{-g}, with the corrected prefactor
//   a^{-kV} b^{kV+(e-|V|-f)/2} c^{-kF} d^{kF+(e-|F|-v)/2},
// kV/kF the component counts of the two packagings. Equals tps_direct with
// (w,x,y,z) = (a,b,c,d). Zero weights required.
LaurentPoly tps_via_T(const PackagedRibbonGraph& pg);

// Same substitution with the uncorrected prefactor
//   (ab)^{kV} b^{(e-|V|-f)/2} c^{-kF} d^{(e-|F|+v)/2};
// kept because it demonstrably disagrees with tps_direct (e.g. on a bridge).
LaurentPoly tps_via_T_printed(const PackagedRibbonGraph& pg);

} // namespace prg

#endif
