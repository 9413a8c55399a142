#include "prg/flows.hpp"

#include "prg/tutte.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace prg {

// ---------------------------------------------------------------------------
// Group construction and validation
// ---------------------------------------------------------------------------

void GroupSpec::validate(bool full_assoc_check) const {
    if (order < 1) throw ValidationError("group order must be positive");
    if (irrep_dims.empty()) throw ValidationError("irrep dimension list is empty");
    long long sq = 0;
    for (long long n : irrep_dims) {
        if (n < 1) throw ValidationError("irrep dimensions must be positive");
        sq += n * n;
    }
    if (sq != order)
        throw ValidationError("irrep dimensions do not satisfy sum of squares = group order");
    if (!cayley) return;

    const auto& t = *cayley;
    if (static_cast<long long>(t.size()) != order)
        throw ValidationError("cayley table has wrong number of rows");
    for (const auto& row : t) {
        if (static_cast<long long>(row.size()) != order)
            throw ValidationError("cayley table has a wrong-length row");
        for (int x : row)
            if (x < 0 || x >= order) throw ValidationError("cayley table entry out of range");
    }
    for (int g = 0; g < order; ++g)
        if (t[0][g] != g || t[g][0] != g)
            throw ValidationError("element 0 is not a two-sided identity");
    for (int g = 0; g < order; ++g) {
        bool found = false;
        for (int h = 0; h < order && !found; ++h)
            found = (t[g][h] == 0 && t[h][g] == 0);
        if (!found) throw ValidationError("element without a two-sided inverse");
    }
    if (full_assoc_check) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (t[t[a][b]][c] != t[a][t[b][c]])
                        throw ValidationError("cayley table is not associative");
    } else {
        std::mt19937 rng(20240517);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(order) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (t[t[a][b]][c] != t[a][t[b][c]])
                throw ValidationError("cayley table is not associative");
        }
    }
}

int GroupSpec::inverse(int g) const {
    if (!cayley) throw ValidationError("group has no cayley table");
    for (int h = 0; h < order; ++h)
        if ((*cayley)[g][h] == 0 && (*cayley)[h][g] == 0) return h;
    throw ValidationError("element without a two-sided inverse");
}

GroupSpec cyclic_group(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be positive");
    GroupSpec g;
    g.order = n;
    g.irrep_dims.assign(n, 1);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    g.cayley = std::move(table);
    g.validate();
    return g;
}

GroupSpec dihedral_group(int n) {
    if (n < 1) throw ValidationError("dihedral parameter must be positive");
    GroupSpec g;
    g.order = 2LL * n;
    // Element a*n + b encodes s^a r^b with a in {0,1}, b in 0..n-1;
    // (s^a1 r^b1)(s^a2 r^b2) = s^(a1+a2) r^(b2 + (-1)^a2 b1).
    std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < n; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    int a = (a1 + a2) % 2;
                    int b = ((a2 ? b2 - b1 : b1 + b2) % n + n) % n;
                    table[a1 * n + b1][a2 * n + b2] = a * n + b;
                }
    g.cayley = std::move(table);
    if (n % 2 == 1) {
        g.irrep_dims.assign(2, 1);
        g.irrep_dims.insert(g.irrep_dims.end(), (n - 1) / 2, 2);
    } else {
        g.irrep_dims.assign(4, 1);
        g.irrep_dims.insert(g.irrep_dims.end(), n / 2 - 1, 2);
    }
    g.validate();
    return g;
}

GroupSpec group_from_table_text(const std::string& text) {
    std::istringstream in(text);
    long long n = 0;
    if (!(in >> n) || n < 1) throw ValidationError("cayley file: bad group order");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!(in >> table[i][j]))
                throw ValidationError("cayley file: table is truncated");
    std::string word;
    if (!(in >> word))
        throw ValidationError("cayley file: missing \"dims:\" line (irrep dimensions required)");
    if (word != "dims:") throw ValidationError("cayley file: unexpected token '" + word + "'");
    GroupSpec g;
    g.order = n;
    long long d = 0;
    while (in >> d) g.irrep_dims.push_back(d);
    g.cayley = std::move(table);
    g.validate();
    return g;
}

GroupSpec group_from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open cayley file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return group_from_table_text(buf.str());
}

// ---------------------------------------------------------------------------
// Closed formula and inclusion-exclusion
// ---------------------------------------------------------------------------

namespace {

// Product over the components of the vertex-side quotient of
// |G|^(e-b) * sum_i n_i^(f-e+b-w), with b blocks, e edges, f boundary
// components of the induced ribbon subgraph, and w the component's weight.
Rational q1_core(const RibbonMap& map, const Partition<int>& vpart, const GroupSpec& gamma) {
    Rational result(1);
    for (const QuotientComponent& c : quotient_components(map, vpart)) {
        Rational dim_sum(0);
        long long exp = c.boundaries - c.num_edges + c.num_blocks - c.weight;
        for (long long n : gamma.irrep_dims) dim_sum += pow_rat(Rational(n), exp);
        result *= pow_rat(Rational(gamma.order), c.num_edges - c.num_blocks) * dim_sum;
    }
    return result;
}

std::vector<int> edge_id_list(const RibbonMap& map) {
    std::vector<int> ids;
    for (const auto& [eid, he] : map.edges) ids.push_back(eid);
    return ids;
}

} // namespace

Rational q1(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    gamma.validate();
    return q1_core(pg.map, pg.vpart, gamma);
}

Rational p1(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    gamma.validate();
    PackagedRibbonGraph d = dual(pg);
    return q1_core(d.map, d.vpart, gamma);
}

Rational q_incexc(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    gamma.validate();
    std::vector<int> ids = edge_id_list(pg.map);
    int m = static_cast<int>(ids.size());
    if (m > 30) throw ValidationError("q_incexc: too many edges");
    Rational total(0);
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        std::set<int> A;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) A.insert(ids[i]);
        Rational term = q1_core(restrict_map(pg.map, A), pg.vpart, gamma);
        ((m - __builtin_popcountll(mask)) % 2 == 0) ? total += term : total -= term;
    }
    return total;
}

Rational p_incexc(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    gamma.validate();
    std::vector<int> ids = edge_id_list(pg.map);
    int m = static_cast<int>(ids.size());
    if (m > 30) throw ValidationError("p_incexc: too many edges");
    Rational total(0);
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        PackagedRibbonGraph cur = pg; // contract the complement, ascending ids
        for (int i = 0; i < m; ++i)
            if (!((mask >> i) & 1)) cur = contract_edge(cur, ids[i]);
        PackagedRibbonGraph d = dual(cur);
        Rational term = q1_core(d.map, d.vpart, gamma);
        ((m - __builtin_popcountll(mask)) % 2 == 0) ? total += term : total -= term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Deletion-contraction recursion
// ---------------------------------------------------------------------------

namespace {

Rational edgeless_flow_base(const Partition<int>& part, const GroupSpec& gamma) {
    Rational result(1);
    for (size_t b = 0; b < part.blocks.size(); ++b) {
        Rational dim_sum(0);
        long long exp = 1 + static_cast<long long>(part.blocks[b].size()) - part.weights[b];
        for (long long n : gamma.irrep_dims) dim_sum += pow_rat(Rational(n), exp);
        result *= dim_sum / Rational(gamma.order);
    }
    return result;
}

Rational edgeless_flow_base(const Partition<std::string>& part, const GroupSpec& gamma) {
    Rational result(1);
    for (size_t b = 0; b < part.blocks.size(); ++b) {
        Rational dim_sum(0);
        long long exp = 1 + static_cast<long long>(part.blocks[b].size()) - part.weights[b];
        for (long long n : gamma.irrep_dims) dim_sum += pow_rat(Rational(n), exp);
        result *= dim_sum / Rational(gamma.order);
    }
    return result;
}

} // namespace

Rational q_dc(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    if (pg.map.edges.empty()) return edgeless_flow_base(pg.vpart, gamma);
    int e = pg.map.edges.begin()->first;
    Rational factor = pow_rat(Rational(gamma.order), 2 - mu(pg, e));
    return factor * q_dc(contract_edge(pg, e), gamma) - q_dc(delete_edge(pg, e), gamma);
}

Rational p_dc(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    if (pg.map.edges.empty()) return edgeless_flow_base(pg.fpart, gamma);
    int e = pg.map.edges.begin()->first;
    Rational factor = pow_rat(Rational(gamma.order), 2 - eta(pg, e));
    return factor * p_dc(delete_edge(pg, e), gamma) - p_dc(contract_edge(pg, e), gamma);
}

// ---------------------------------------------------------------------------
// Tutte-polynomial substitution
// ---------------------------------------------------------------------------

namespace {

// -(1/|G|) sum_i n_i^(2 - 2g), with 2g given as the doubled subscript.
Rational genus_substitution(const GroupSpec& gamma, int sub2) {
    Rational dim_sum(0);
    for (long long n : gamma.irrep_dims) dim_sum += pow_rat(Rational(n), 2 - sub2);
    return -dim_sum / Rational(gamma.order);
}

int sign_pow(long long exp) { return ((exp % 2) + 2) % 2 == 0 ? 1 : -1; }

} // namespace

Rational q_via_T(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    gamma.validate();
    IntPoly T = statesum(pg);
    Rational value = T.eval([&](const VarIndex& v) -> Rational {
        switch (v.family) {
        case VarFamily::X: return Rational(1);
        case VarFamily::Y: return Rational(-gamma.order);
        case VarFamily::Xg: return Rational(1);
        case VarFamily::Yg: return genus_substitution(gamma, v.sub2);
        }
        throw ValidationError("unreachable variable family");
    });
    long long e = static_cast<long long>(pg.map.edges.size());
    return Rational(sign_pow(e - pg.vpart.num_blocks())) * value;
}

Rational p_via_T(const PackagedRibbonGraph& pg, const GroupSpec& gamma) {
    gamma.validate();
    IntPoly T = statesum(pg);
    Rational value = T.eval([&](const VarIndex& v) -> Rational {
        switch (v.family) {
        case VarFamily::X: return Rational(-gamma.order);
        case VarFamily::Y: return Rational(1);
        case VarFamily::Xg: return genus_substitution(gamma, v.sub2);
        case VarFamily::Yg: return Rational(1);
        }
        throw ValidationError("unreachable variable family");
    });
    long long e = static_cast<long long>(pg.map.edges.size());
    return Rational(sign_pow(e - pg.fpart.num_blocks())) * value;
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

BigInt brute_force_q(const RibbonMap& map, const GroupSpec& gamma, long long budget) {
    if (!gamma.cayley) throw ValidationError("brute force needs a cayley table");
    gamma.validate();

    std::vector<int> ids = edge_id_list(map);
    int m = static_cast<int>(ids.size());
    long long space = 1;
    for (int i = 0; i < m; ++i) {
        if (space > budget / std::max<long long>(gamma.order, 1))
            throw ValidationError("brute force enumeration budget exceeded");
        space *= gamma.order;
        if (space > budget) throw ValidationError("brute force enumeration budget exceeded");
    }

    std::map<int, int> edge_index;
    for (int i = 0; i < m; ++i) edge_index[ids[i]] = i;

    // Per vertex: rotation-ordered (edge index, is-head) pairs. The head of
    // edge e is its second listed half-edge.
    std::vector<std::vector<std::pair<int, bool>>> stations(map.vertices.size());
    for (size_t v = 0; v < map.vertices.size(); ++v)
        for (int h : map.vertices[v]) {
            int e = map.edge_of.at(h);
            stations[v].push_back({edge_index[e], map.edges.at(e)[1] == h});
        }

    std::vector<int> inv(gamma.order);
    for (int g = 0; g < gamma.order; ++g) inv[g] = gamma.inverse(g);
    const auto& t = *gamma.cayley;

    int nonid = static_cast<int>(gamma.order) - 1;
    if (nonid == 0) return m == 0 ? BigInt(1) : BigInt(0);

    std::vector<int> digits(m, 1);
    BigInt count = 0;
    while (true) {
        bool ok = true;
        for (const auto& st : stations) {
            int acc = 0;
            for (auto [ei, head] : st) acc = t[acc][head ? digits[ei] : inv[digits[ei]]];
            if (acc != 0) { ok = false; break; }
        }
        if (ok) count += 1;

        int pos = m - 1;
        while (pos >= 0 && digits[pos] == nonid) digits[pos--] = 1;
        if (pos < 0) break;
        ++digits[pos];
    }
    return count;
}

BigInt brute_force_p(const RibbonMap& map, const GroupSpec& gamma, long long budget) {
    return brute_force_q(dual(map), gamma, budget);
}

} // namespace prg
