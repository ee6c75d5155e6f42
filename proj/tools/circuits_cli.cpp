// Command-line front end for the (2,2)-sparsity circuit toolkit: sparsity and
// circuit checks, decomposition to base graphs, trace replay, random
// generation, enumeration, matroid components and exact cylinder rank.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "m22/canonical.hpp"
#include "m22/construction.hpp"
#include "m22/cylinder.hpp"
#include "m22/io.hpp"
#include "m22/matroid.hpp"
#include "m22/moves.hpp"
#include "m22/pebble.hpp"
#include "m22/structure.hpp"
#include "m22/trace.hpp"

using nlohmann::json;

namespace {

constexpr unsigned long long kDefaultSeed = 12345;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw m22::ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw m22::ParseError("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

json cutset_json(const m22::EdgeCutset3& cs) {
    json edges = json::array();
    for (const auto& [u, v] : cs.edges) edges.push_back({u, v});
    return {{"edges", edges}, {"side_a", cs.side_a}, {"side_b", cs.side_b}};
}

json check_simple(const m22::Graph& g, int k, int l, bool oracle) {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["f_value"] = m22::f_value(g);
    j["is_sparse"] = m22::is_sparse(g, k, l);
    j["is_tight"] = m22::is_tight(g, k, l);
    j["is_circuit"] = oracle && g.vertex_count() <= 16 ? m22::brute_force_is_circuit(g)
                                                       : m22::is_circuit(g);
    j["connected"] = m22::connected_components(g).size() <= 1;
    j["two_connected"] = m22::is_2_connected(g);
    if (g.vertex_count() >= 4) j["three_connected"] = m22::is_3_connected(g);
    int ec = m22::edge_connectivity(g);
    j["edge_connectivity"] = ec;
    if (ec >= 3) {
        json cuts = json::array();
        for (const auto& cs : m22::nontrivial_3_edge_cutsets(g)) cuts.push_back(cutset_json(cs));
        j["nontrivial_3_edge_cutsets"] = cuts;
    }
    auto nc = m22::node_census(g);
    j["node_census"] = {{"nodes", nc.nodes},
                        {"starred", nc.starred},
                        {"leaves", nc.leaves},
                        {"series", nc.series},
                        {"branching", nc.branching}};
    return j;
}

json check_multi(const m22::MultiGraph& g, int k, int l) {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["f_value"] = m22::f_value(g);
    j["is_sparse"] = m22::is_sparse(g, k, l);
    j["is_tight"] = m22::is_tight(g, k, l);
    j["is_multicircuit"] = m22::is_multicircuit(g);
    j["connected"] = m22::connected_components(g).size() <= 1;
    j["two_connected"] = m22::is_2_connected(g);
    if (g.vertex_count() >= 4) j["three_connected"] = m22::is_3_connected(g);
    int ec = m22::edge_connectivity(g);
    j["edge_connectivity"] = ec;
    if (ec >= 3) {
        json cuts = json::array();
        for (const auto& cs : m22::nontrivial_3_edge_cutsets(g)) cuts.push_back(cutset_json(cs));
        j["nontrivial_3_edge_cutsets"] = cuts;
    }
    return j;
}

json edge_list_json(const std::vector<m22::Edge>& edges) {
    json arr = json::array();
    for (const auto& [u, v] : edges) arr.push_back({u, v});
    return arr;
}

int run(int argc, char** argv) {
    CLI::App app{"circuits in the simple (2,2)-sparsity matroid"};
    app.require_subcommand(1);

    std::string input, out_path, iso_other;
    bool oracle = false;
    int k = 2, l = 2, n = 0;
    unsigned long long seed = kDefaultSeed;

    auto* cmd_check = app.add_subcommand("check", "sparsity, circuit and connectivity facts");
    cmd_check->add_option("input", input)->required();
    cmd_check->add_option("--iso", iso_other, "second graph to compare up to isomorphism");
    cmd_check->add_flag("--oracle", oracle, "use brute-force definitional checks");
    cmd_check->add_option("--k", k);
    cmd_check->add_option("--l", l);
    cmd_check->add_option("--out", out_path);

    auto* cmd_decompose = app.add_subcommand("decompose", "decompose a circuit to base graphs");
    cmd_decompose->add_option("input", input)->required();
    cmd_decompose->add_option("--out", out_path);

    auto* cmd_build = app.add_subcommand("build", "replay a construction trace");
    cmd_build->add_option("input", input)->required();
    cmd_build->add_option("--out", out_path);

    auto* cmd_generate = app.add_subcommand("generate", "random circuit with trace");
    cmd_generate->add_option("--n", n)->required();
    cmd_generate->add_option("--seed", seed);
    cmd_generate->add_option("--out", out_path);

    auto* cmd_enumerate = app.add_subcommand("enumerate", "all circuits on n vertices up to iso");
    cmd_enumerate->add_option("--n", n)->required();
    cmd_enumerate->add_option("--out", out_path);

    auto* cmd_components = app.add_subcommand("components", "matroid and rigid components");
    cmd_components->add_option("input", input)->required();
    cmd_components->add_flag("--oracle", oracle, "definitional circuit enumeration");
    cmd_components->add_option("--out", out_path);

    auto* cmd_rank = app.add_subcommand("rank", "exact cylinder rank vs pebble rank");
    cmd_rank->add_option("input", input)->required();
    cmd_rank->add_option("--seed", seed);
    cmd_rank->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    if (cmd_check->parsed()) {
        auto parsed = m22::parse_graph_input(slurp(input));
        json j;
        if (std::holds_alternative<m22::Graph>(parsed)) {
            const auto& g = std::get<m22::Graph>(parsed);
            j = check_simple(g, k, l, oracle);
            if (!iso_other.empty()) {
                auto other = m22::parse_graph_input(slurp(iso_other));
                if (!std::holds_alternative<m22::Graph>(other))
                    throw m22::PreconditionError("--iso expects a simple graph");
                j["isomorphic"] = m22::is_isomorphic(g, std::get<m22::Graph>(other));
            }
        } else {
            j = check_multi(std::get<m22::MultiGraph>(parsed), k, l);
        }
        emit(j, out_path);
    } else if (cmd_decompose->parsed()) {
        auto parsed = m22::parse_graph_input(slurp(input));
        if (!std::holds_alternative<m22::Graph>(parsed))
            throw m22::PreconditionError("decompose expects a simple graph");
        auto trace = m22::decompose(std::get<m22::Graph>(parsed));
        emit(trace.to_json(), out_path);
    } else if (cmd_build->parsed()) {
        json j = json::parse(slurp(input), nullptr, false);
        if (j.is_discarded()) throw m22::ParseError("bad trace JSON");
        auto g = m22::replay(m22::ConstructionTrace::from_json(j));
        emit(m22::graph_to_json(g), out_path);
    } else if (cmd_generate->parsed()) {
        auto gen = m22::random_circuit(n, seed);
        json j;
        j["graph"] = m22::graph_to_json(gen.graph);
        j["trace"] = gen.trace.to_json();
        j["seed"] = seed;
        emit(j, out_path);
    } else if (cmd_enumerate->parsed()) {
        auto forms = m22::enumerate_circuits(n);
        json arr = json::array();
        for (const auto& cf : forms) {
            std::vector<int> vs(cf.n);
            for (int i = 0; i < cf.n; ++i) vs[i] = i;
            arr.push_back({{"vertices", vs}, {"edges", edge_list_json(cf.edges)}});
        }
        emit({{"n", n}, {"count", forms.size()}, {"circuits", arr}}, out_path);
    } else if (cmd_components->parsed()) {
        auto parsed = m22::parse_graph_input(slurp(input));
        if (!std::holds_alternative<m22::Graph>(parsed))
            throw m22::PreconditionError("components expects a simple graph");
        const auto& g = std::get<m22::Graph>(parsed);
        auto mc = m22::matroid_components(g, oracle);
        auto rc = m22::redundantly_rigid_components(g);
        json j;
        j["matroid_components"] = json::array();
        for (const auto& cls : mc.partition) j["matroid_components"].push_back(edge_list_json(cls));
        j["bridges"] = edge_list_json(mc.bridges);
        j["rm_connected"] = g.edge_count() >= 2 && mc.bridges.empty() && mc.partition.size() == 1;
        j["redundantly_rigid"] = m22::is_redundantly_rigid(g);
        j["redundantly_rigid_components"] = json::array();
        for (const auto& cls : rc.partition)
            j["redundantly_rigid_components"].push_back(edge_list_json(cls));
        emit(j, out_path);
    } else if (cmd_rank->parsed()) {
        auto parsed = m22::parse_graph_input(slurp(input));
        if (!std::holds_alternative<m22::Graph>(parsed))
            throw m22::PreconditionError("rank expects a simple graph");
        const auto& g = std::get<m22::Graph>(parsed);
        auto report = m22::edge_matroid_rank(g, seed);
        json j;
        j["numeric_rank"] = report.numeric_rank;
        j["combinatorial_rank"] = report.combinatorial_rank;
        j["agrees"] = report.agrees;
        j["samples_used"] = report.samples_used;
        j["inf_rigid"] = m22::is_inf_rigid(g, seed);
        emit(j, out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const m22::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const m22::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        json j{{"error", "theorem_violation"}, {"message", e.what()}};
        j["graph"] = json::parse(e.graph_json, nullptr, false);
        std::cout << j.dump(2) << "\n";
        return 3;
    } catch (const m22::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
