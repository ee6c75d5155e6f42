#ifndef M22_TRACE_HPP
#define M22_TRACE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "m22/graph.hpp"
#include "m22/moves.hpp"

namespace m22 {

enum class BaseKind { K5minusE, K4edgeK4, K4vertexK4 };

const char* base_kind_name(BaseKind k);
BaseKind base_kind_from_name(const std::string& name);

// The fixed labeled representative of each base kind (vertices 0..n-1).
Graph base_graph(BaseKind k);

// Forward construction steps. Sum parameters are expressed in the label
// space of each operand component; replay shifts the right operand's
// surviving vertices above the left operand's maximum label.
struct Hen2Step {
    int component;
    VertexId u, w, z;  // split edge uw, attach to z
    VertexId v;        // fresh label for the new vertex
};

struct Sum1Step {
    int left, right, out;
    VertexId a1, b1;          // edge in the left operand
    VertexId a2, b2, c2, d2;  // hanging K4 in the right operand
};

struct Sum2Step {
    int left, right, out;
    VertexId a1, b1, c1, d1;
    VertexId a2, b2, c2, d2;
};

struct Sum3Step {
    int left, right, out;
    VertexId v1, a1, b1, c1;  // node and neighbors in the left operand
    VertexId v2, a2, b2, c2;  // matched in order: a1a2, b1b2, c1c2
};

using TraceStep = std::variant<Hen2Step, Sum1Step, Sum2Step, Sum3Step>;

struct TraceLeaf {
    int component;
    BaseKind base;
};

// Replayable certificate that a graph is a circuit: base-graph leaves plus
// an ordered list of forward moves. Replaying a trace on its leaves
// reproduces the target graph exactly, labels included.
struct ConstructionTrace {
    std::vector<TraceLeaf> leaves;
    std::vector<TraceStep> steps;

    nlohmann::json to_json() const;
    static ConstructionTrace from_json(const nlohmann::json& j);
};

// Replays a trace, validating that every intermediate component is a
// circuit; exactly one component must remain, and it is returned.
Graph replay(const ConstructionTrace& trace);

// Single-step application used by both replay and the random generator.
// `live` maps component ids to their current graphs.
void apply_trace_step(std::map<int, Graph>& live, const TraceStep& step,
                      bool validate_circuits);

}  // namespace m22

#endif
