#ifndef M22_CONSTRUCTION_HPP
#define M22_CONSTRUCTION_HPP

#include <optional>
#include <vector>

#include "m22/canonical.hpp"
#include "m22/trace.hpp"

namespace m22 {

// Isomorphism test against the three base graphs.
std::optional<BaseKind> classify_base(const Graph& g);

// Decomposes a circuit into base-graph leaves via inverse Henneberg-2 moves
// and 1/2/3-separations, returning a forward trace whose replay is
// isomorphic to g. Preference order: base leaf, inverse Henneberg-2 (when
// 3-connected with no non-trivial 3-edge cutset), 3-separation,
// 1-separation, 2-separation, then an exhaustive scan over all inverse
// moves and separations. Throws TheoremViolation when nothing applies.
ConstructionTrace decompose(const Graph& g);

struct GeneratedCircuit {
    Graph graph;
    ConstructionTrace trace;
};

// Seeded random circuit on exactly n vertices (n >= 5), built by forward
// moves from base graphs; replaying the trace reproduces the graph exactly.
GeneratedCircuit random_circuit(int n, unsigned long long seed);

// All circuits on exactly n vertices up to isomorphism (n <= 8), via
// breadth-first closure of canonical sparse graphs followed by one edge
// addition onto each tight graph.
std::vector<CanonicalForm> enumerate_circuits(int n);

}  // namespace m22

#endif
