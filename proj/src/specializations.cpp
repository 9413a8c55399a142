#include "prg/specializations.hpp"

#include <algorithm>
#include <numeric>

namespace prg {

namespace {

IntPoly int_pow(const IntPoly& p, long long k) {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = p;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

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
    int roots() {
        std::set<int> r;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) r.insert(find(i));
        return static_cast<int>(r.size());
    }
};

} // namespace

IntPoly classical_tutte(const Multigraph& g) {
    std::vector<int> edge_ids;
    for (const auto& [eid, uv] : g.edges) edge_ids.push_back(eid);
    int m = static_cast<int>(edge_ids.size());
    if (m > 30) throw ValidationError("classical_tutte: too many edges");

    auto rank_of_subset = [&](unsigned long long mask) {
        UnionFind uf(g.num_vertices);
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) {
                const auto& uv = g.edges.at(edge_ids[i]);
                uf.join(uv.first, uv.second);
            }
        return g.num_vertices - uf.roots();
    };

    int rE = rank_of_subset(~0ULL >> (64 - (m == 0 ? 1 : m)));
    if (m == 0) rE = 0;
    IntPoly xm1 = IntPoly::var(VarIndex::x()) - IntPoly::constant(1);
    IntPoly ym1 = IntPoly::var(VarIndex::y()) - IntPoly::constant(1);
    IntPoly total;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        int rA = rank_of_subset(mask);
        int sz = __builtin_popcountll(mask);
        total += int_pow(xm1, rE - rA) * int_pow(ym1, sz - rA);
    }
    return total;
}

IntPoly surface_tutte(const RibbonMap& map) { return statesum(from_plain(map)); }

namespace {

// Doubled genera of the connected components of a (restricted) plain map.
std::vector<long long> component_genus2(const RibbonMap& map) {
    auto comps = components(map);
    std::vector<int> comp_of_vertex(map.num_vertices(), -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci].vertices) comp_of_vertex[v] = static_cast<int>(ci);

    std::vector<int> faces(comps.size(), 0);
    for (const auto& bc : boundary_components(map)) {
        int v = bc.kind == BoundaryComponent::Kind::Orbit
                    ? map.vertex_of.at(bc.half_edges[0])
                    : bc.vertex;
        faces[comp_of_vertex[v]] += 1;
    }
    std::vector<long long> out;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        long long v = static_cast<long long>(comps[ci].vertices.size());
        long long e = static_cast<long long>(comps[ci].edges.size());
        out.push_back(2 - faces[ci] + e - v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

IntPoly surface_tutte_direct(const RibbonMap& map) {
    std::vector<int> edge_ids;
    for (const auto& [eid, he] : map.edges) edge_ids.push_back(eid);
    int m = static_cast<int>(edge_ids.size());
    if (m > 30) throw ValidationError("surface_tutte_direct: too many edges");
    RibbonMap dmap = dual(map);

    IntPoly total;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        std::set<int> A, Ac;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1 ? A : Ac).insert(edge_ids[i]);
        RibbonMap ysub = restrict_map(map, A);
        RibbonMap xsub = restrict_map(dmap, Ac);
        CountSummary yc = counts(ysub), xc = counts(xsub);

        Monomial mono;
        if (xc.n > 0) mono[VarIndex::x()] = xc.n;
        if (yc.n > 0) mono[VarIndex::y()] = yc.n;
        for (long long g2 : component_genus2(xsub)) mono[VarIndex::xg2(static_cast<int>(g2))] += 1;
        for (long long g2 : component_genus2(ysub)) mono[VarIndex::yg2(static_cast<int>(g2))] += 1;
        total += IntPoly::monomial(std::move(mono), 1);
    }
    return total;
}

namespace {

void require_zero_weights(const PackagedRibbonGraph& pg, const char* who) {
    for (long long w : pg.vpart.weights)
        if (w != 0) throw ValidationError(std::string(who) + ": nonzero vertex block weight");
    for (long long w : pg.fpart.weights)
        if (w != 0) throw ValidationError(std::string(who) + ": nonzero boundary block weight");
}

// Rank of the quotient of `part` by the edges of `map`: |blocks| - components.
long long quotient_rank(const RibbonMap& map, const Partition<int>& part) {
    return part.num_blocks() - static_cast<long long>(quotient_components(map, part).size());
}

struct TpsContext {
    PackagedRibbonGraph dpg;
    long long rF_full = 0; // r(G(dual; F))

    explicit TpsContext(const PackagedRibbonGraph& pg) : dpg(dual(pg)) {
        rF_full = quotient_rank(dpg.map, dpg.vpart);
    }
};

RankProfile rank_profile_in(const PackagedRibbonGraph& pg, const TpsContext& ctx,
                            const std::set<int>& A) {
    std::set<int> Ac;
    for (const auto& [eid, he] : pg.map.edges)
        if (!A.count(eid)) Ac.insert(eid);

    RankProfile rp;
    RibbonMap sub = restrict_map(pg.map, A);
    CountSummary sc = counts(sub);
    rp.r1 = quotient_rank(sub, pg.vpart);
    rp.r2 = sc.r + sc.g - rp.r1;
    long long rF_sub = quotient_rank(restrict_map(ctx.dpg.map, Ac), ctx.dpg.vpart);
    rp.r3 = ctx.rF_full - rF_sub;
    rp.r4 = static_cast<long long>(A.size()) + rF_sub - ctx.rF_full - sc.r - sc.g;
    return rp;
}

} // namespace

RankProfile rank_profile(const PackagedRibbonGraph& pg, const std::set<int>& A) {
    require_zero_weights(pg, "rank_profile");
    return rank_profile_in(pg, TpsContext(pg), A);
}

LaurentPoly tps_direct(const RibbonMap& map, const Partition<int>& vpart,
                       const Partition<std::string>& fpart) {
    PackagedRibbonGraph pg{map, vpart, fpart};
    pg.validate();
    require_zero_weights(pg, "tps_direct");

    std::vector<int> edge_ids;
    for (const auto& [eid, he] : map.edges) edge_ids.push_back(eid);
    int m = static_cast<int>(edge_ids.size());
    if (m > 30) throw ValidationError("tps_direct: too many edges");

    TpsContext ctx(pg);
    std::set<int> all(edge_ids.begin(), edge_ids.end());
    RankProfile full = rank_profile_in(pg, ctx, all);

    LaurentPoly total;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        std::set<int> A;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) A.insert(edge_ids[i]);
        RankProfile rp = rank_profile_in(pg, ctx, A);
        LMonomial mono;
        auto put = [&](const char* name, long long exp) {
            if (exp != 0) mono[lvar(name)] = static_cast<int>(2 * exp);
        };
        put("w", full.r1 - rp.r1);
        put("x", full.r2 - rp.r2);
        put("y", rp.r3);
        put("z", rp.r4);
        total += LaurentPoly::monomial(std::move(mono), 1);
    }
    return total;
}

namespace {

LaurentPoly tps_substituted(const PackagedRibbonGraph& pg) {
    IntPoly T = statesum(pg);
    return substitute(T, [&](const VarIndex& v) -> std::optional<LaurentPoly> {
        switch (v.family) {
        case VarFamily::X:
        case VarFamily::Y: return LaurentPoly::constant(1);
        case VarFamily::Xg: {
            // x_g -> c d^{-g}; doubled exponent of d is -sub2.
            LMonomial m;
            m[lvar("c")] = 2;
            if (v.sub2 != 0) m[lvar("d")] = -v.sub2;
            return LaurentPoly::monomial(m, 1);
        }
        case VarFamily::Yg: {
            LMonomial m;
            m[lvar("a")] = 2;
            if (v.sub2 != 0) m[lvar("b")] = -v.sub2;
            return LaurentPoly::monomial(m, 1);
        }
        }
        return std::nullopt;
    });
}

struct TpsExponents {
    long long e, v, f, nV, nF; // counts and partition sizes
    int kV, kF;                // packaging component counts
};

TpsExponents tps_exponents(const PackagedRibbonGraph& pg) {
    CountSummary c = counts(pg.map);
    TpsExponents x{};
    x.e = c.e;
    x.v = c.v;
    x.f = c.f;
    x.nV = pg.vpart.num_blocks();
    x.nF = pg.fpart.num_blocks();
    x.kV = mg_component_count(packaging_V(pg));
    x.kF = mg_component_count(packaging_F(pg));
    return x;
}

} // namespace

LaurentPoly tps_via_T(const PackagedRibbonGraph& pg) {
    require_zero_weights(pg, "tps_via_T");
    TpsExponents t = tps_exponents(pg);
    LMonomial pre;
    auto put = [&](const char* name, long long exp2) {
        if (exp2 != 0) pre[lvar(name)] = static_cast<int>(exp2);
    };
    put("a", -2 * t.kV);
    put("b", 2 * t.kV + t.e - t.nV - t.f);
    put("c", -2 * t.kF);
    put("d", 2 * t.kF + t.e - t.nF - t.v);
    return LaurentPoly::monomial(pre, 1) * tps_substituted(pg);
}

LaurentPoly tps_via_T_printed(const PackagedRibbonGraph& pg) {
    require_zero_weights(pg, "tps_via_T_printed");
    TpsExponents t = tps_exponents(pg);
    LMonomial pre;
    auto put = [&](const char* name, long long exp2) {
        if (exp2 != 0) pre[lvar(name)] = static_cast<int>(exp2);
    };
    put("a", 2 * t.kV);
    put("b", 2 * t.kV + t.e - t.nV - t.f);
    put("c", -2 * t.kF);
    put("d", t.e - t.nF + t.v);
    return LaurentPoly::monomial(pre, 1) * tps_substituted(pg);
}

} // namespace prg
