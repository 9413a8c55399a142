// State sum vs. recursion, duality, leaf structure, and the universal invariant.
#include "prg/tutte.hpp"

#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

#include <doctest.h>

#include <random>

using namespace prg;
using namespace prg::testing;

TEST_CASE("state sum on the one-edge maps") {
    CHECK(statesum(from_plain(make_bridge())).to_string() ==
          "x*x[0]*y[0]^2 + x[0]*y[0]");
    CHECK(statesum(from_plain(make_loop())).to_string() ==
          "y*x[0]^2*y[0] + x[0]*y[0]");
}

TEST_CASE("interlaced-loops torus map: state sum, recursion, leaves") {
    const std::string want =
        "x^3*x[1]*y[0]^2 + x^2*y*x[0]*y[0]^2 + 2*x^2*x[1]*y[0] + "
        "3*x*y*x[0]*y[0] + y^2*x[0]*y[1]";
    PackagedRibbonGraph pg = from_plain(make_interlaced());

    IntPoly via_sum = statesum(pg);
    CHECK(via_sum.to_string() == want);
    CHECK(dc(pg).to_string() == want);
    CHECK(via_sum.coefficient_sum() == BigInt(8));

    std::vector<IntPoly> leaves = dc_leaves(pg);
    CHECK(leaves.size() == 8); // one per subset of three edges
    IntPoly total;
    for (const IntPoly& leaf : leaves) total = total + leaf;
    CHECK(total == via_sum);
}

TEST_CASE("threaded state sum agrees with sequential") {
    for (const RibbonMap& m : all_fixture_maps()) {
        PackagedRibbonGraph pg = from_plain(m);
        CHECK(statesum(pg, 2) == statesum(pg));
    }
}

TEST_CASE("edgeless bases, including negative genus subscripts") {
    // three isolated vertices in one weight-0 block under a single boundary
    // partition: genus subscript (1 - 3 + 0)/2 = -1
    RibbonMap m;
    m.vertices = {{}, {}, {}};
    m.finalize();
    PackagedRibbonGraph pg = from_plain(m);
    pg.vpart.blocks = {{0, 1, 2}};
    pg.vpart.weights = {0};
    pg.validate();
    CHECK(dc(pg).to_string() == "x[0]^3*y[-1]");
    CHECK(statesum(pg).to_string() == "x[0]^3*y[-1]");

    pg.vpart.weights = {1}; // subscript (1 - 3 + 1)/2 = -1/2
    CHECK(dc(pg).to_string() == "x[0]^3*y[-1/2]");

    pg.fpart.blocks = {{"v0", "v1"}, {"v2"}};
    pg.fpart.weights = {2, 0};
    pg.validate(); // x side: (1-2+2)/2 = 1/2 and (1-1+0)/2 = 0
    CHECK(dc(pg).to_string() == "x[0]*x[1/2]*y[-1/2]");
    CHECK(statesum(pg) == dc(pg));
}

TEST_CASE("random packaged graphs: recursion == state sum, duality, mass") {
    std::mt19937 rng(61114);
    for (int trial = 0; trial < 60; ++trial) {
        PackagedRibbonGraph pg = random_packaged(rng, 4, 5, 2);
        IntPoly t = statesum(pg);
        CHECK(dc(pg) == t);
        CHECK(check_duality(pg));
        CHECK(t.coefficient_sum() == pow_int(BigInt(2), pg.map.num_edges()));
    }
}

TEST_CASE("pivot choice does not change the recursion's value") {
    std::mt19937 rng(72225);
    auto random_pivot = [&rng](const PackagedRibbonGraph& pg) {
        std::vector<int> ids;
        for (const auto& [eid, he] : pg.map.edges) ids.push_back(eid);
        return ids[uniform(rng, 0, static_cast<int>(ids.size()) - 1)];
    };
    for (int trial = 0; trial < 25; ++trial) {
        PackagedRibbonGraph pg = random_packaged(rng, 4, 5, 2);
        CHECK(dc_with_pivot(pg, random_pivot) == statesum(pg));
    }
}

TEST_CASE("universal invariant: recursion equals the closed form") {
    UniversalParams par = UniversalParams::symbolic();
    for (const RibbonMap& m : all_fixture_maps()) {
        PackagedRibbonGraph pg = from_plain(m);
        CHECK(universal_recursive(pg, par) == universal_closed(pg, par));
    }
    std::mt19937 rng(83336);
    for (int trial = 0; trial < 15; ++trial) {
        PackagedRibbonGraph pg = random_packaged(rng, 3, 4, 2);
        CHECK(universal_recursive(pg, par) == universal_closed(pg, par));
    }
}
