#ifndef M22_GRAPH_HPP
#define M22_GRAPH_HPP

#include <map>
#include <utility>
#include <vector>

#include "m22/errors.hpp"

namespace m22 {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized u < v

inline Edge make_edge(VertexId u, VertexId v) {
    if (u == v) throw PreconditionError("loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Labeled undirected simple graph. Vertices and edges are kept sorted;
// values are immutable after construction and cheap to copy at the sizes
// this library targets (a few hundred vertices at most).
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    static Graph from_edges(const std::vector<Edge>& edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    int degree(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;
    VertexId fresh_vertex_id() const;  // max id + 1, or 0 when empty

    Graph add_vertex(VertexId v) const;
    Graph add_edge(VertexId u, VertexId v) const;
    Graph remove_edge(VertexId u, VertexId v) const;
    Graph remove_vertex(VertexId v) const;  // drops incident edges
    Graph relabel(const std::map<VertexId, VertexId>& pi) const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
};

// Undirected multigraph without loops; parallel edges carry a multiplicity.
class MultiGraph {
public:
    struct MEdge {
        VertexId u, v;  // u < v
        int multiplicity = 1;
        bool operator==(const MEdge&) const = default;
    };

    MultiGraph() = default;
    MultiGraph(std::vector<VertexId> vertices, std::vector<MEdge> edges);

    static MultiGraph from_graph(const Graph& g);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<MEdge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const;  // counts multiplicity
    int multiplicity(VertexId u, VertexId v) const;
    int degree(VertexId v) const;  // counts multiplicity
    std::vector<VertexId> neighbors(VertexId v) const;  // distinct
    bool has_vertex(VertexId v) const;

    MultiGraph add_edge(VertexId u, VertexId v, int copies = 1) const;
    MultiGraph remove_one_copy(VertexId u, VertexId v) const;
    MultiGraph remove_vertex(VertexId v) const;

    // Underlying simple graph (multiplicities collapsed to 1).
    Graph simple() const;

    bool operator==(const MultiGraph& other) const = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<MEdge> edges_;
};

// i_G(X): number of edges with both ends in X.
int induced_edge_count(const Graph& g, const std::vector<VertexId>& x);
int induced_edge_count(const MultiGraph& g, const std::vector<VertexId>& x);

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& x);
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& x);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);

// f(G) = 2|V| - |E| (multiplicity counted for multigraphs).
int f_value(const Graph& g);
int f_value(const MultiGraph& g);

}  // namespace m22

#endif
