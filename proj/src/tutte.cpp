#include "prg/tutte.hpp"

#include <algorithm>
#include <thread>

namespace prg {

namespace {

// One side of the state sum: the nullity exponent of the quotient multigraph
// and the doubled genus of each of its components.
struct SideTerm {
    long long nullity = 0;
    std::vector<long long> genus2; // 2 + e - v + w - f per component
};

SideTerm side_term(const RibbonMap& restricted, const Partition<int>& part) {
    SideTerm t;
    auto comps = quotient_components(restricted, part);
    long long blocks = 0;
    for (const auto& c : comps) {
        blocks += c.num_blocks;
        t.genus2.push_back(2 + c.num_edges - c.num_blocks + c.weight - c.boundaries);
    }
    t.nullity = restricted.num_edges() - blocks + static_cast<long long>(comps.size());
    std::sort(t.genus2.begin(), t.genus2.end());
    return t;
}

IntPoly subset_range_sum(const PackagedRibbonGraph& pg, const PackagedRibbonGraph& dpg,
                         const std::vector<int>& edge_ids, unsigned long long lo,
                         unsigned long long hi) {
    IntPoly total;
    int m = static_cast<int>(edge_ids.size());
    for (unsigned long long mask = lo; mask < hi; ++mask) {
        std::set<int> A, Ac;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1 ? A : Ac).insert(edge_ids[i]);

        SideTerm y = side_term(restrict_map(pg.map, A), pg.vpart);
        SideTerm x = side_term(restrict_map(dpg.map, Ac), dpg.vpart);

        Monomial mono;
        if (x.nullity > 0) mono[VarIndex::x()] = static_cast<int>(x.nullity);
        if (y.nullity > 0) mono[VarIndex::y()] = static_cast<int>(y.nullity);
        for (long long g2 : x.genus2) mono[VarIndex::xg2(static_cast<int>(g2))] += 1;
        for (long long g2 : y.genus2) mono[VarIndex::yg2(static_cast<int>(g2))] += 1;
        total += IntPoly::monomial(std::move(mono), 1);
    }
    return total;
}

} // namespace

IntPoly statesum(const PackagedRibbonGraph& pg, int threads) {
    std::vector<int> edge_ids;
    for (const auto& [eid, he] : pg.map.edges) edge_ids.push_back(eid);
    int m = static_cast<int>(edge_ids.size());
    if (m > 62) throw ValidationError("statesum: too many edges for subset enumeration");

    PackagedRibbonGraph dpg = dual(pg);
    unsigned long long total = 1ULL << m;

    if (threads <= 1 || total < 64) {
        return subset_range_sum(pg, dpg, edge_ids, 0, total);
    }
    int n = std::min<unsigned long long>(threads, total);
    std::vector<IntPoly> parts(n);
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) {
        unsigned long long lo = total / n * t + std::min<unsigned long long>(t, total % n);
        unsigned long long hi = lo + total / n + (static_cast<unsigned long long>(t) < total % n ? 1 : 0);
        pool.emplace_back([&, t, lo, hi] { parts[t] = subset_range_sum(pg, dpg, edge_ids, lo, hi); });
    }
    for (auto& th : pool) th.join();
    IntPoly sum;
    for (auto& p : parts) sum += p;
    return sum;
}

namespace {

IntPoly edgeless_base(const PackagedRibbonGraph& pg) {
    Monomial mono;
    for (size_t i = 0; i < pg.fpart.blocks.size(); ++i) {
        long long sub2 = 1 - static_cast<long long>(pg.fpart.blocks[i].size()) + pg.fpart.weights[i];
        mono[VarIndex::xg2(static_cast<int>(sub2))] += 1;
    }
    for (size_t i = 0; i < pg.vpart.blocks.size(); ++i) {
        long long sub2 = 1 - static_cast<long long>(pg.vpart.blocks[i].size()) + pg.vpart.weights[i];
        mono[VarIndex::yg2(static_cast<int>(sub2))] += 1;
    }
    return IntPoly::monomial(std::move(mono), 1);
}

int lowest_edge(const PackagedRibbonGraph& pg) { return pg.map.edges.begin()->first; }

IntPoly branch_factor(VarFamily plain, int count) {
    // x^{2-eta} or y^{2-mu}; the exponent is 0 or 1.
    if (count == 2) return IntPoly::constant(1);
    return IntPoly::var({plain, 0});
}

void dc_rec(const PackagedRibbonGraph& pg, const IntPoly& prefix,
            std::vector<IntPoly>* leaves, IntPoly& total,
            const std::function<int(const PackagedRibbonGraph&)>& pivot) {
    if (pg.map.num_edges() == 0) {
        IntPoly leaf = prefix * edgeless_base(pg);
        if (leaves) leaves->push_back(leaf);
        total += leaf;
        return;
    }
    int e = pivot(pg);
    dc_rec(delete_edge(pg, e), prefix * branch_factor(VarFamily::X, eta(pg, e)), leaves,
           total, pivot);
    dc_rec(contract_edge(pg, e), prefix * branch_factor(VarFamily::Y, mu(pg, e)), leaves,
           total, pivot);
}

} // namespace

IntPoly dc(const PackagedRibbonGraph& pg) { return dc_with_pivot(pg, lowest_edge); }

IntPoly dc_with_pivot(const PackagedRibbonGraph& pg,
                      const std::function<int(const PackagedRibbonGraph&)>& pivot) {
    IntPoly total;
    dc_rec(pg, IntPoly::constant(1), nullptr, total, pivot);
    return total;
}

std::vector<IntPoly> dc_leaves(const PackagedRibbonGraph& pg) {
    IntPoly total;
    std::vector<IntPoly> leaves;
    dc_rec(pg, IntPoly::constant(1), &leaves, total, lowest_edge);
    return leaves;
}

bool check_duality(const PackagedRibbonGraph& pg) {
    return statesum(pg) == swap_xy(statesum(dual(pg)));
}

UniversalParams UniversalParams::symbolic() {
    UniversalParams p;
    p.alpha = LaurentPoly::var(lvar("alpha"));
    p.beta = LaurentPoly::var(lvar("beta"));
    p.kappa = LaurentPoly::var(lvar("kappa"));
    p.tau = LaurentPoly::var(lvar("tau"));
    p.a = [](int j) { return LaurentPoly::var(lvar("a", j)); };
    p.b = [](int j) { return LaurentPoly::var(lvar("b", j)); };
    return p;
}

LaurentPoly universal_recursive(const PackagedRibbonGraph& pg, const UniversalParams& par) {
    if (pg.map.num_edges() == 0) {
        LaurentPoly r = LaurentPoly::constant(1);
        for (size_t i = 0; i < pg.fpart.blocks.size(); ++i) {
            long long j = pg.fpart.weights[i] - static_cast<long long>(pg.fpart.blocks[i].size());
            r *= par.tau * par.a(static_cast<int>(j));
        }
        for (size_t i = 0; i < pg.vpart.blocks.size(); ++i) {
            long long j = pg.vpart.weights[i] - static_cast<long long>(pg.vpart.blocks[i].size());
            r *= par.kappa * par.b(static_cast<int>(j));
        }
        return r;
    }
    int e = lowest_edge(pg);
    LaurentPoly del_coeff = eta(pg, e) == 1 ? par.alpha : par.tau;
    LaurentPoly con_coeff = mu(pg, e) == 1 ? par.beta : par.kappa;
    return del_coeff * universal_recursive(delete_edge(pg, e), par) +
           con_coeff * universal_recursive(contract_edge(pg, e), par);
}

LaurentPoly universal_closed(const PackagedRibbonGraph& pg, const UniversalParams& par) {
    IntPoly T = statesum(pg);
    LaurentPoly img = substitute(T, [&](const VarIndex& v) -> std::optional<LaurentPoly> {
        switch (v.family) {
        case VarFamily::X: return par.alpha;
        case VarFamily::Y: return par.beta;
        // x_g -> a_{2g-1}: with doubled subscripts 2g - 1 = sub2 - 1.
        case VarFamily::Xg: return par.a(v.sub2 - 1);
        case VarFamily::Yg: return par.b(v.sub2 - 1);
        }
        return std::nullopt;
    });
    return par.tau.pow(pg.fpart.num_blocks()) * par.kappa.pow(pg.vpart.num_blocks()) * img;
}

} // namespace prg
