#ifndef M22_IO_HPP
#define M22_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "m22/graph.hpp"

namespace m22 {

// JSON graph format:
//   {"vertices":[ints], "edges":[[u,v],...], "multiplicity":{"u-v":int}}
// The multiplicity map is optional; entries above 1 make the input a
// multigraph.
nlohmann::json graph_to_json(const Graph& g);
nlohmann::json graph_to_json(const MultiGraph& g);
Graph graph_from_json(const nlohmann::json& j);
MultiGraph multigraph_from_json(const nlohmann::json& j);

// graph6: standard 6-bit encoding of simple graphs on 0..n-1.
Graph graph_from_graph6(const std::string& s);

// Auto-detects JSON ('{' first non-space byte) vs graph6. A multigraph is
// returned when a multiplicity entry exceeds 1.
std::variant<Graph, MultiGraph> parse_graph_input(const std::string& text);

}  // namespace m22

#endif
