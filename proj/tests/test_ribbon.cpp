#include "prg/ribbon.hpp"

#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

#include <doctest.h>

#include <random>

using namespace prg;
using namespace prg::testing;

TEST_CASE("fixture counts") {
    CHECK(counts(make_loop()) == CountSummary{1, 1, 2, 1, 0, 0, 1});
    CHECK(counts(make_bridge()) == CountSummary{2, 1, 1, 1, 0, 1, 0});
    CHECK(counts(make_interlaced()) == CountSummary{2, 3, 1, 1, 1, 1, 2});
    CHECK(counts(make_double_loop()) == CountSummary{1, 2, 1, 1, 1, 0, 2});
    CHECK(counts(make_two_component()) == CountSummary{4, 2, 4, 3, 0, 1, 1});
}

TEST_CASE("malformed maps are rejected") {
    // alpha with a fixed point (edge pairing a half-edge with itself)
    std::vector<std::vector<int>> cyc = {{0, 1}};
    std::vector<std::array<int, 2>> self = {{0, 0}};
    CHECK_THROWS_AS(RibbonMap::make(cyc, self), ValidationError);
    // half-edge in two rotation cycles
    std::vector<std::vector<int>> dup = {{0, 1}, {1}};
    std::vector<std::array<int, 2>> e01 = {{0, 1}};
    CHECK_THROWS_AS(RibbonMap::make(dup, e01), ValidationError);
    // half-edge missing from the rotation cycles
    std::vector<std::vector<int>> missing = {{0}};
    CHECK_THROWS_AS(RibbonMap::make(missing, e01), ValidationError);
}

TEST_CASE("boundary components of the fixtures") {
    auto ids = [](const RibbonMap& m) {
        std::vector<std::string> out;
        for (const auto& bc : boundary_components(m)) out.push_back(bc.id);
        return out;
    };
    CHECK(ids(make_loop()) == std::vector<std::string>{"h0", "h1"});
    CHECK(ids(make_bridge()) == std::vector<std::string>{"h0"});
    CHECK(ids(make_interlaced()) == std::vector<std::string>{"h0"});
    CHECK(ids(make_two_component()) == std::vector<std::string>{"h0", "h1", "h2", "v3"});

    auto bcs = boundary_components(make_interlaced());
    REQUIRE(bcs.size() == 1);
    CHECK(bcs[0].half_edges == std::vector<int>{0, 4, 1, 2, 5, 3});
}

TEST_CASE("isolated vertices are their own boundary components") {
    RibbonMap m;
    m.vertices = {{}, {}};
    m.finalize();
    auto bcs = boundary_components(m);
    REQUIRE(bcs.size() == 2);
    CHECK(bcs[0].kind == BoundaryComponent::Kind::IsolatedVertex);
    CHECK(bcs[0].id == "v0");
    CHECK(bcs[1].id == "v1");
    CHECK(counts(m) == CountSummary{2, 0, 2, 2, 0, 0, 0});
}

TEST_CASE("restriction keeps vertices and drops half-edges") {
    RibbonMap m = make_interlaced();
    RibbonMap sub = restrict_map(m, {2});
    CHECK(counts(sub).v == 2);
    CHECK(counts(sub).e == 1);
    CHECK(sub.vertices[0].empty());
    CHECK(sub.vertices[1] == std::vector<int>{4, 5});
    CHECK_THROWS_AS(restrict_map(m, {9}), ValidationError);

    RibbonMap empty = restrict_map(m, {});
    CHECK(counts(empty) == CountSummary{2, 0, 2, 2, 0, 0, 0});
}

TEST_CASE("dual of the fixtures") {
    // plane loop <-> bridge
    CHECK(counts(dual(make_loop())) == counts(make_bridge()));
    CHECK(counts(dual(make_bridge())) == counts(make_loop()));
    // the interlaced map keeps v=1? no: f=1 so the dual has a single vertex
    CountSummary d = counts(dual(make_interlaced()));
    CHECK(d.v == 1);
    CHECK(d.e == 3);
    CHECK(d.f == 2);
    CHECK(d.g == 1);
    // double loop is self-dual at the level of counts
    CHECK(counts(dual(make_double_loop())) == counts(make_double_loop()));
}

TEST_CASE("components") {
    auto comps = components(make_two_component());
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].vertices == std::vector<int>{0});
    CHECK(comps[0].edges == std::vector<int>{0});
    CHECK(comps[1].vertices == std::vector<int>{1, 2});
    CHECK(comps[1].edges == std::vector<int>{1});
    CHECK(comps[2].vertices == std::vector<int>{3});
    CHECK(comps[2].edges.empty());
}

TEST_CASE("dual properties on random maps") {
    std::mt19937 rng(7101);
    for (int trial = 0; trial < 60; ++trial) {
        RibbonMap m = random_map(rng, 4, 6);
        CountSummary c = counts(m);
        RibbonMap d = dual(m);
        CountSummary cd = counts(d);
        CHECK(cd.v == c.f);
        CHECK(cd.f == c.v);
        CHECK(cd.e == c.e);
        CHECK(cd.k == c.k);
        CHECK(cd.g == c.g);
        // the dual's faces are the primal's vertices, so the double dual has
        // the primal's counts
        CHECK(counts(dual(d)) == c);
    }
}

TEST_CASE("dual boundary ids line up with dual vertices") {
    RibbonMap m = make_two_component();
    auto ids = dual_boundary_ids_of_vertices(m);
    REQUIRE(ids.size() == 4);
    // vertex j of the primal is a boundary component of the dual
    RibbonMap d = dual(m);
    auto dbcs = boundary_components(d);
    std::set<std::string> seen;
    for (const auto& bc : dbcs) seen.insert(bc.id);
    for (const auto& id : ids) CHECK(seen.count(id) == 1);
}
