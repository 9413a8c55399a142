// JSON graph files and their validation. A file carries num_half_edges, the
// edge list ([tail, head] half-edge pairs; entry i is edge i), the rotation
// cycles (one array per vertex, [] for an isolated vertex), and optional
// vertex_partition / boundary_partition blocks with weights. Boundary blocks
// reference the canonical boundary ids ("h<k>" / "v<j>") that `show` prints.
#ifndef PRG_GRAPH_IO_HPP
#define PRG_GRAPH_IO_HPP

#include "prg/packaged.hpp"

#include <iosfwd>
#include <string>

namespace prg {

struct GraphParseError : ValidationError {
    using ValidationError::ValidationError;
};

PackagedRibbonGraph parse_graph_text(const std::string& json_text);
PackagedRibbonGraph parse_graph_file(const std::string& path);

// Canonical JSON text (stable key and block order); parse . emit = identity
// on canonicalized files.
std::string emit_graph_text(const PackagedRibbonGraph& pg);

} // namespace prg

#endif
