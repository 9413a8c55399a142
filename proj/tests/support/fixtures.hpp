// Hand-built maps shared by the tests, mirroring the JSON fixtures.
#ifndef PRG_TESTS_FIXTURES_HPP
#define PRG_TESTS_FIXTURES_HPP

#include "prg/packaged.hpp"
#include "prg/ribbon.hpp"

#include <string>

namespace prg::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(PRG_FIXTURES_DIR) + "/" + name;
}

// One vertex, one loop, in the plane (2 boundary components).
inline RibbonMap make_loop() {
    std::vector<std::vector<int>> cycles = {{0, 1}};
    std::vector<std::array<int, 2>> edges = {{0, 1}};
    return RibbonMap::make(cycles, edges);
}

// Two vertices joined by one edge.
inline RibbonMap make_bridge() {
    std::vector<std::vector<int>> cycles = {{0}, {1}};
    std::vector<std::array<int, 2>> edges = {{0, 1}};
    return RibbonMap::make(cycles, edges);
}

// A 2-cycle interlaced with a loop: v=2, e=3, f=1, genus 1.
inline RibbonMap make_interlaced() {
    std::vector<std::vector<int>> cycles = {{0, 2}, {1, 4, 3, 5}};
    std::vector<std::array<int, 2>> edges = {{0, 1}, {2, 3}, {4, 5}};
    return RibbonMap::make(cycles, edges);
}

// Two interlaced loops on one vertex: the torus map, v=1, e=2, f=1.
inline RibbonMap make_double_loop() {
    std::vector<std::vector<int>> cycles = {{0, 2, 1, 3}};
    std::vector<std::array<int, 2>> edges = {{0, 1}, {2, 3}};
    return RibbonMap::make(cycles, edges);
}

// Plane loop + bridge + an isolated vertex (3 connected components).
inline RibbonMap make_two_component() {
    std::vector<std::vector<int>> cycles = {{0, 1}, {2}, {3}, {}};
    std::vector<std::array<int, 2>> edges = {{0, 1}, {2, 3}};
    return RibbonMap::make(cycles, edges);
}

inline std::vector<RibbonMap> all_fixture_maps() {
    return {make_loop(), make_bridge(), make_interlaced(), make_double_loop(),
            make_two_component()};
}

} // namespace prg::testing

#endif
