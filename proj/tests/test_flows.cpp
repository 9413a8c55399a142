// Local flow and tension counting: group plumbing, the closed product
// formula, and agreement of the four nowhere-identity routes.
#include "prg/flows.hpp"

#include "prg/ribbon.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace prg;
using namespace prg::testing;

namespace {

PackagedRibbonGraph single_vertex_weight(long long w) {
    RibbonMap m;
    m.vertices = {{}};
    m.finalize();
    PackagedRibbonGraph pg = from_plain(m);
    pg.vpart.weights = {w};
    return pg;
}

} // namespace

TEST_CASE("built-in groups") {
    GroupSpec z4 = cyclic_group(4);
    CHECK(z4.order == 4);
    CHECK(z4.irrep_dims == std::vector<long long>{1, 1, 1, 1});
    z4.validate(true);
    CHECK(z4.op(1, 3) == 0);
    CHECK(z4.inverse(1) == 3);

    GroupSpec d3 = dihedral_group(3);
    CHECK(d3.order == 6);
    CHECK(d3.irrep_dims == std::vector<long long>{1, 1, 2});
    d3.validate(true);
    CHECK(d3.inverse(3) == 3);          // reflections are involutions
    CHECK(d3.inverse(1) == 2);          // r^-1 = r^2
    CHECK(d3.op(3, 1) != d3.op(1, 3));  // nonabelian

    GroupSpec d4 = dihedral_group(4);
    CHECK(d4.order == 8);
    CHECK(d4.irrep_dims == std::vector<long long>{1, 1, 1, 1, 2});
    d4.validate(true);
}

TEST_CASE("group table files") {
    GroupSpec t = group_from_table_file(fixture_path("d3_table.txt"));
    t.validate(true);
    CHECK(t.order == 6);
    CHECK(t.irrep_dims == std::vector<long long>{1, 1, 2});
    CHECK(t.cayley == dihedral_group(3).cayley);

    CHECK_THROWS_AS(group_from_table_text("2\n0 1\n1 0\n"), ValidationError);

    GroupSpec bad_dims;
    bad_dims.order = 4;
    bad_dims.irrep_dims = {1, 1};
    CHECK_THROWS_AS(bad_dims.validate(), ValidationError);

    GroupSpec bad_table = cyclic_group(2);
    (*bad_table.cayley)[1][1] = 1; // 1*1 must be the identity
    CHECK_THROWS_AS(bad_table.validate(), ValidationError);
}

TEST_CASE("closed product formula for all local flows") {
    PackagedRibbonGraph inter = from_plain(make_interlaced());
    CHECK(q1(inter, dihedral_group(3)) == Rational(18));
    CHECK(q1(inter, cyclic_group(2)) == Rational(4));
    CHECK(q1(from_plain(make_loop()), cyclic_group(3)) == Rational(3));
    CHECK(q1(single_vertex_weight(0), dihedral_group(3)) == Rational(1));
}

TEST_CASE("closed formula matches direct enumeration on trivial packagings") {
    std::mt19937 rng(31741);
    std::vector<GroupSpec> groups{cyclic_group(2), cyclic_group(3), dihedral_group(3)};
    for (int trial = 0; trial < 20; ++trial) {
        RibbonMap m = random_map(rng, 3, 3);
        PackagedRibbonGraph pg = from_plain(m);
        for (const GroupSpec& g : groups)
            CHECK(q1(pg, g) == Rational(count_all_flows(m, g)));
    }
}

TEST_CASE("nowhere-identity flows: four routes, known values") {
    PackagedRibbonGraph inter = from_plain(make_interlaced());
    GroupSpec d3 = dihedral_group(3);
    CHECK(q_incexc(inter, d3) == Rational(7));
    CHECK(q_dc(inter, d3) == Rational(7));
    CHECK(q_via_T(inter, d3) == Rational(7));
    CHECK(brute_force_q(inter.map, d3) == BigInt(7));

    PackagedRibbonGraph loop = from_plain(make_loop());
    GroupSpec z3 = cyclic_group(3);
    CHECK(q_incexc(loop, z3) == Rational(2));
    CHECK(q_dc(loop, z3) == Rational(2));
    CHECK(brute_force_q(loop.map, z3) == BigInt(2));

    PackagedRibbonGraph bridge = from_plain(make_bridge());
    for (const GroupSpec& g : {cyclic_group(2), dihedral_group(3)}) {
        CHECK(q_incexc(bridge, g) == Rational(0));
        CHECK(q_dc(bridge, g) == Rational(0));
        CHECK(q_via_T(bridge, g) == Rational(0));
        CHECK(brute_force_q(bridge.map, g) == BigInt(0));
    }

    CHECK(brute_force_p(inter.map, cyclic_group(2)) == BigInt(1));
}

TEST_CASE("the brute-force count ignores edge directions") {
    GroupSpec d3 = dihedral_group(3);
    std::mt19937 rng(42852);
    for (int trial = 0; trial < 8; ++trial) {
        RibbonMap m = make_interlaced();
        for (auto& [eid, he] : m.edges)
            if (uniform(rng, 0, 1)) std::swap(he[0], he[1]);
        m.finalize();
        CHECK(brute_force_q(m, d3) == BigInt(7));
    }
}

TEST_CASE("every tension route is the flow route on the dual") {
    std::mt19937 rng(53963);
    std::vector<GroupSpec> groups{cyclic_group(2), dihedral_group(3)};
    for (int trial = 0; trial < 15; ++trial) {
        PackagedRibbonGraph pg = random_packaged(rng, 3, 3, 2);
        PackagedRibbonGraph d = dual(pg);
        for (const GroupSpec& g : groups) {
            CHECK(p1(pg, g) == q1(d, g));
            CHECK(p_incexc(pg, g) == q_incexc(d, g));
            CHECK(p_dc(pg, g) == q_dc(d, g));
            CHECK(p_via_T(pg, g) == q_via_T(d, g));
        }
    }
    CHECK(brute_force_p(make_interlaced(), cyclic_group(2)) ==
          brute_force_q(dual(make_interlaced()), cyclic_group(2)));
}

TEST_CASE("weighted blocks give rational counts, same along every route") {
    GroupSpec d3 = dihedral_group(3);
    CHECK(q_dc(single_vertex_weight(2), d3) == Rational(1) / 2);
    CHECK(q_incexc(single_vertex_weight(2), d3) == Rational(1) / 2);
    CHECK(q_dc(single_vertex_weight(3), d3) == Rational(5) / 12);
    CHECK(q_via_T(single_vertex_weight(3), d3) == Rational(5) / 12);

    std::mt19937 rng(65074);
    for (int trial = 0; trial < 15; ++trial) {
        PackagedRibbonGraph pg = random_packaged(rng, 3, 3, 2);
        for (const GroupSpec& g : {cyclic_group(3), dihedral_group(3)}) {
            Rational via_incexc = q_incexc(pg, g);
            CHECK(q_dc(pg, g) == via_incexc);
            CHECK(q_via_T(pg, g) == via_incexc);
        }
    }
}

TEST_CASE("brute force guard rails") {
    CHECK_THROWS_AS(brute_force_q(make_interlaced(), cyclic_group(3), 5),
                    ValidationError);
    GroupSpec tableless;
    tableless.order = 6;
    tableless.irrep_dims = {1, 1, 2};
    CHECK_THROWS_AS(brute_force_q(make_loop(), tableless), ValidationError);
}
