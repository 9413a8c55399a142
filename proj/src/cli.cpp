#include "prg/cli.hpp"

#include "prg/flows.hpp"
#include "prg/graph_io.hpp"
#include "prg/ribbon.hpp"
#include "prg/specializations.hpp"
#include "prg/tutte.hpp"

#include <CLI11.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace prg {

namespace {

std::map<std::string, Rational> parse_at(const std::vector<std::string>& pairs) {
    std::map<std::string, Rational> values;
    for (const std::string& p : pairs) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ValidationError("--at expects name=value, got '" + p + "'");
        std::string name = p.substr(0, eq), text = p.substr(eq + 1);
        try {
            values[name] = Rational(text);
        } catch (const std::exception&) {
            throw ValidationError("--at: '" + text + "' is not a rational number");
        }
    }
    return values;
}

Rational lookup(const std::map<std::string, Rational>& values, const std::string& name) {
    auto it = values.find(name);
    if (it == values.end()) throw ValidationError("--at: no value given for variable " + name);
    return it->second;
}

GroupSpec parse_group(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("--group expects cyclic:N, dihedral:N, or table:PATH");
    std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    if (kind == "table") return group_from_table_file(rest);
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
        throw ValidationError("--group: '" + rest + "' is not an integer");
    }
    if (kind == "cyclic") return cyclic_group(n);
    if (kind == "dihedral") return dihedral_group(n);
    throw ValidationError("--group: unknown kind '" + kind + "'");
}

bool partition_trivial(const Partition<int>& part) {
    for (size_t b = 0; b < part.blocks.size(); ++b)
        if (part.blocks[b].size() != 1 || part.weights[b] != 0) return false;
    return true;
}

bool partition_trivial(const Partition<std::string>& part) {
    for (size_t b = 0; b < part.blocks.size(); ++b)
        if (part.blocks[b].size() != 1 || part.weights[b] != 0) return false;
    return true;
}

bool zero_weights(const PackagedRibbonGraph& pg) {
    for (long long w : pg.vpart.weights)
        if (w != 0) return false;
    for (long long w : pg.fpart.weights)
        if (w != 0) return false;
    return true;
}

Multigraph underlying_multigraph(const RibbonMap& map) {
    Multigraph g;
    g.num_vertices = map.num_vertices();
    g.vertex_weights.assign(map.num_vertices(), 0);
    for (const auto& [eid, he] : map.edges)
        g.edges[eid] = {map.vertex_of.at(he[0]), map.vertex_of.at(he[1])};
    return g;
}

void cmd_show(const PackagedRibbonGraph& pg, std::ostream& out) {
    CountSummary c = counts(pg.map);
    out << "vertices: " << c.v << "\n"
        << "edges: " << c.e << "\n"
        << "boundary components: " << c.f << "\n"
        << "connected components: " << c.k << "\n"
        << "genus: " << c.g << "\n"
        << "rank: " << c.r << "\n"
        << "nullity: " << c.n << "\n";
    out << "boundary walks:\n";
    for (const auto& bc : boundary_components(pg.map)) {
        out << "  " << bc.id << ":";
        if (bc.kind == BoundaryComponent::Kind::IsolatedVertex) {
            out << " isolated vertex " << bc.vertex;
        } else {
            for (int h : bc.half_edges) out << " " << h;
        }
        out << "\n";
    }
    out << "vertex partition:\n";
    for (size_t b = 0; b < pg.vpart.blocks.size(); ++b) {
        out << "  {";
        for (size_t i = 0; i < pg.vpart.blocks[b].size(); ++i)
            out << (i ? " " : "") << pg.vpart.blocks[b][i];
        out << "} weight " << pg.vpart.weights[b] << "\n";
    }
    out << "boundary partition:\n";
    for (size_t b = 0; b < pg.fpart.blocks.size(); ++b) {
        out << "  {";
        for (size_t i = 0; i < pg.fpart.blocks[b].size(); ++i)
            out << (i ? " " : "") << pg.fpart.blocks[b][i];
        out << "} weight " << pg.fpart.weights[b] << "\n";
    }
}

// Rename the tps-direct variables w,x,y,z to the via-T names a,b,c,d.
LaurentPoly rename_tps(const LaurentPoly& p) {
    std::map<std::string, std::string> names{
        {"w", "a"}, {"x", "b"}, {"y", "c"}, {"z", "d"}};
    LaurentPoly out;
    for (const auto& [mono, coeff] : p.terms) {
        LMonomial renamed;
        for (const auto& [v, exp2] : mono) renamed[lvar(names.at(v.base))] = exp2;
        out += LaurentPoly::monomial(std::move(renamed), coeff);
    }
    return out;
}

int cmd_verify(const PackagedRibbonGraph& pg, const std::vector<std::string>& group_names,
               long long budget, std::ostream& out) {
    bool ok = true;
    auto report = [&](const std::string& what, bool pass, const std::string& detail = "") {
        out << what << ": " << (pass ? "ok" : "MISMATCH");
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
        if (!pass) ok = false;
    };

    IntPoly s = statesum(pg);
    IntPoly viadc = dc(pg);
    report("statesum vs deletion-contraction", s == viadc,
           s == viadc ? "" : first_difference(s, viadc));

    IntPoly sdual = swap_xy(statesum(dual(pg)));
    report("duality swap", s == sdual, s == sdual ? "" : first_difference(s, sdual));

    if (zero_weights(pg)) {
        LaurentPoly direct = rename_tps(tps_direct(pg.map, pg.vpart, pg.fpart));
        LaurentPoly viat = tps_via_T(pg);
        report("pseudo-surface Tutte direct vs via-T", direct == viat,
               direct == viat ? "" : first_difference(direct, viat));
    } else {
        out << "pseudo-surface Tutte direct vs via-T: skipped (nonzero weights)\n";
    }

    for (const std::string& gname : group_names) {
        GroupSpec gamma = parse_group(gname);
        for (char side : {'q', 'p'}) {
            std::vector<std::pair<std::string, Rational>> routes;
            if (side == 'q') {
                routes.push_back({"incexc", q_incexc(pg, gamma)});
                routes.push_back({"dc", q_dc(pg, gamma)});
                routes.push_back({"viaT", q_via_T(pg, gamma)});
                if (partition_trivial(pg.vpart)) {
                    try {
                        routes.push_back(
                            {"brute", Rational(brute_force_q(pg.map, gamma, budget))});
                    } catch (const ValidationError&) {
                        out << "flows q " << gname << " brute: skipped (budget)\n";
                    }
                }
            } else {
                routes.push_back({"incexc", p_incexc(pg, gamma)});
                routes.push_back({"dc", p_dc(pg, gamma)});
                routes.push_back({"viaT", p_via_T(pg, gamma)});
                if (partition_trivial(pg.fpart)) {
                    try {
                        routes.push_back(
                            {"brute", Rational(brute_force_p(pg.map, gamma, budget))});
                    } catch (const ValidationError&) {
                        out << "flows p " << gname << " brute: skipped (budget)\n";
                    }
                }
            }
            bool agree = true;
            std::ostringstream detail;
            for (size_t i = 0; i < routes.size(); ++i) {
                if (routes[i].second != routes[0].second) agree = false;
                detail << (i ? " " : "") << routes[i].first << "=" << routes[i].second;
            }
            report(std::string("flows ") + side + " " + gname, agree, detail.str());
        }
    }
    return ok ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"packaged ribbon graph toolkit"};
    app.require_subcommand(1);

    std::string file;
    std::string method = "statesum", target, side = "q", flow_method = "incexc";
    std::vector<std::string> at_pairs, groups;
    int parallel = 1;
    long long budget = 10'000'000;

    CLI::App* show = app.add_subcommand("show", "counts, boundary components, partitions");
    show->add_option("file", file, "graph file")->required();

    CLI::App* dualcmd = app.add_subcommand("dual", "emit the geometric dual as a graph file");
    dualcmd->add_option("file", file, "graph file")->required();

    CLI::App* tutte = app.add_subcommand("tutte", "packaged surface Tutte polynomial");
    tutte->add_option("file", file, "graph file")->required();
    tutte->add_option("--method", method, "statesum or dc")
        ->check(CLI::IsMember({"statesum", "dc"}));
    tutte->add_option("--parallel", parallel, "worker threads for the state sum")
        ->check(CLI::PositiveNumber);

    CLI::App* spec = app.add_subcommand("specialize", "specializations of the polynomial");
    spec->add_option("file", file, "graph file")->required();
    spec->add_option("--target", target, "classical, surface, tps-direct, or tps-viaT")
        ->required()
        ->check(CLI::IsMember({"classical", "surface", "tps-direct", "tps-viaT"}));
    spec->add_option("--at", at_pairs, "evaluate at name=value (exact rationals)");

    CLI::App* flows = app.add_subcommand("flows", "count nowhere-identity local flows/tensions");
    flows->add_option("file", file, "graph file")->required();
    flows->add_option("--group", groups, "cyclic:N, dihedral:N, or table:PATH")->required();
    flows->add_option("--side", side, "q (flows) or p (tensions)")
        ->check(CLI::IsMember({"q", "p"}));
    flows->add_option("--method", flow_method, "formula, incexc, dc, viaT, or brute")
        ->check(CLI::IsMember({"formula", "incexc", "dc", "viaT", "brute"}));
    flows->add_option("--budget", budget, "brute-force enumeration budget");

    CLI::App* verify = app.add_subcommand("verify", "cross-check every route; exit 3 on mismatch");
    verify->add_option("file", file, "graph file")->required();
    verify->add_option("--group", groups, "groups for the flow checks (repeatable)");
    verify->add_option("--budget", budget, "brute-force enumeration budget");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        PackagedRibbonGraph pg = parse_graph_file(file);

        if (show->parsed()) {
            cmd_show(pg, out);
        } else if (dualcmd->parsed()) {
            out << emit_graph_text(dual(pg));
        } else if (tutte->parsed()) {
            IntPoly t = method == "dc" ? dc(pg) : statesum(pg, parallel);
            out << t.to_string() << "\n";
        } else if (spec->parsed()) {
            std::map<std::string, Rational> at = parse_at(at_pairs);
            if (target == "classical" || target == "surface") {
                IntPoly p = target == "classical"
                                ? classical_tutte(underlying_multigraph(pg.map))
                                : surface_tutte(pg.map);
                if (at_pairs.empty())
                    out << p.to_string() << "\n";
                else
                    out << p.eval([&](const VarIndex& v) { return lookup(at, v.to_string()); })
                        << "\n";
            } else {
                LaurentPoly p = target == "tps-direct"
                                    ? tps_direct(pg.map, pg.vpart, pg.fpart)
                                    : tps_via_T(pg);
                if (at_pairs.empty())
                    out << p.to_string() << "\n";
                else
                    out << p.eval([&](const LVar& v) { return lookup(at, v.to_string()); })
                        << "\n";
            }
        } else if (flows->parsed()) {
            GroupSpec gamma = parse_group(groups.at(0));
            bool q = side == "q";
            if (flow_method == "formula") {
                out << (q ? q1(pg, gamma) : p1(pg, gamma)) << "\n";
            } else if (flow_method == "incexc") {
                out << (q ? q_incexc(pg, gamma) : p_incexc(pg, gamma)) << "\n";
            } else if (flow_method == "dc") {
                out << (q ? q_dc(pg, gamma) : p_dc(pg, gamma)) << "\n";
            } else if (flow_method == "viaT") {
                out << (q ? q_via_T(pg, gamma) : p_via_T(pg, gamma)) << "\n";
            } else {
                out << (q ? brute_force_q(pg.map, gamma, budget)
                          : brute_force_p(pg.map, gamma, budget))
                    << "\n";
            }
        } else if (verify->parsed()) {
            if (groups.empty()) groups = {"cyclic:2", "dihedral:3"};
            return cmd_verify(pg, groups, budget, out);
        }
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace prg
