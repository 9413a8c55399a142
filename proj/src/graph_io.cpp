#include "prg/graph_io.hpp"

#include "prg/ribbon.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace prg {

using json = nlohmann::ordered_json;

namespace {

long long require_weight(const json& j, const char* where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw GraphParseError(std::string(where) + ": weight is not a nonnegative integer");
    return j.get<long long>();
}

const json& require_key(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw GraphParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

template <typename Id>
Partition<Id> parse_partition(const json& j, const char* where,
                              const std::function<Id(const json&)>& element) {
    if (!j.is_object()) throw GraphParseError(std::string(where) + ": expected an object");
    const json& jblocks = require_key(j, "blocks");
    const json& jweights = require_key(j, "weights");
    if (!jblocks.is_array() || !jweights.is_array() ||
        jblocks.size() != jweights.size())
        throw GraphParseError(std::string(where) +
                              ": blocks and weights must be arrays of equal length");
    Partition<Id> part;
    for (const json& jb : jblocks) {
        if (!jb.is_array()) throw GraphParseError(std::string(where) + ": block is not an array");
        std::vector<Id> block;
        for (const json& el : jb) block.push_back(element(el));
        part.blocks.push_back(std::move(block));
    }
    for (const json& jw : jweights) part.weights.push_back(require_weight(jw, where));
    part.canonicalize();
    return part;
}

} // namespace

PackagedRibbonGraph parse_graph_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw GraphParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw GraphParseError("top level is not an object");

    const json& jn = require_key(doc, "num_half_edges");
    if (!jn.is_number_integer() || jn.get<long long>() < 0)
        throw GraphParseError("num_half_edges must be a nonnegative integer");
    long long n = jn.get<long long>();
    if (n % 2 != 0) throw GraphParseError("num_half_edges must be even");

    const json& jedges = require_key(doc, "edges");
    if (!jedges.is_array()) throw GraphParseError("edges must be an array");
    std::vector<std::array<int, 2>> edge_list;
    std::set<int> seen;
    for (const json& je : jedges) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
            !je[1].is_number_integer())
            throw GraphParseError("each edge must be a [tail, head] pair of half-edge ids");
        int tail = je[0].get<int>(), head = je[1].get<int>();
        for (int h : {tail, head}) {
            if (h < 0 || h >= n)
                throw GraphParseError("half-edge id " + std::to_string(h) + " out of range");
            if (!seen.insert(h).second)
                throw GraphParseError("half-edge " + std::to_string(h) +
                                      " appears in more than one edge");
        }
        edge_list.push_back({tail, head});
    }
    if (static_cast<long long>(seen.size()) != n)
        throw GraphParseError("some half-edges are missing from the edge list");

    const json& jverts = require_key(doc, "vertices");
    if (!jverts.is_array()) throw GraphParseError("vertices must be an array");
    std::vector<std::vector<int>> cycles;
    for (const json& jc : jverts) {
        if (!jc.is_array()) throw GraphParseError("each vertex must be a rotation cycle array");
        std::vector<int> cycle;
        for (const json& jh : jc) {
            if (!jh.is_number_integer())
                throw GraphParseError("rotation cycles must contain half-edge ids");
            cycle.push_back(jh.get<int>());
        }
        cycles.push_back(std::move(cycle));
    }

    RibbonMap map;
    try {
        map = RibbonMap::make(std::move(cycles), std::move(edge_list));
        counts(map); // orientability / consistency check
    } catch (const ValidationError& ex) {
        throw GraphParseError(ex.what());
    }

    PackagedRibbonGraph pg;
    if (auto it = doc.find("vertex_partition"); it != doc.end()) {
        pg.vpart = parse_partition<int>(*it, "vertex_partition", [&](const json& el) {
            if (!el.is_number_integer())
                throw GraphParseError("vertex_partition: block entries must be vertex indices");
            int v = el.get<int>();
            if (v < 0 || v >= map.num_vertices())
                throw GraphParseError("vertex_partition: vertex index " + std::to_string(v) +
                                      " out of range");
            return v;
        });
    } else {
        pg.vpart = from_plain(map).vpart;
    }
    if (auto it = doc.find("boundary_partition"); it != doc.end()) {
        std::set<std::string> known;
        for (const auto& bc : boundary_components(map)) known.insert(bc.id);
        pg.fpart = parse_partition<std::string>(*it, "boundary_partition", [&](const json& el) {
            if (!el.is_string())
                throw GraphParseError("boundary_partition: block entries must be boundary ids");
            std::string id = el.get<std::string>();
            if (!known.count(id))
                throw GraphParseError("boundary_partition: unknown boundary id \"" + id + "\"");
            return id;
        });
    } else {
        pg.fpart = from_plain(map).fpart;
    }
    pg.map = std::move(map);
    try {
        pg.validate();
    } catch (const ValidationError& ex) {
        throw GraphParseError(ex.what());
    }
    return pg;
}

PackagedRibbonGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string emit_graph_text(const PackagedRibbonGraph& pg) {
    int m = pg.map.num_edges();
    for (int i = 0; i < m; ++i)
        if (!pg.map.has_edge(i))
            throw ValidationError("emit_graph_text: edge ids are not dense 0..e-1");

    json doc;
    doc["num_half_edges"] = 2 * m;
    json jedges = json::array();
    for (int i = 0; i < m; ++i) {
        const auto& he = pg.map.edges.at(i);
        jedges.push_back(json::array({he[0], he[1]}));
    }
    doc["edges"] = std::move(jedges);
    json jverts = json::array();
    for (const auto& cycle : pg.map.vertices) jverts.push_back(cycle);
    doc["vertices"] = std::move(jverts);

    auto emit_part = [](const auto& part) {
        json jp;
        json jblocks = json::array();
        for (const auto& block : part.blocks) jblocks.push_back(block);
        jp["blocks"] = std::move(jblocks);
        jp["weights"] = part.weights;
        return jp;
    };
    doc["vertex_partition"] = emit_part(pg.vpart);
    doc["boundary_partition"] = emit_part(pg.fpart);
    return doc.dump(2) + "\n";
}

} // namespace prg
