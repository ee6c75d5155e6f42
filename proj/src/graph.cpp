#include "m22/graph.hpp"

#include <algorithm>
#include <set>

namespace m22 {

namespace {

void check_vertices_present(const std::vector<VertexId>& vertices,
                            VertexId u, VertexId v) {
    if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
        !std::binary_search(vertices.begin(), vertices.end(), v)) {
        throw PreconditionError("edge endpoint not a vertex: " + std::to_string(u) +
                                "-" + std::to_string(v));
    }
}

}  // namespace

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (!vertices_.empty() && vertices_.front() < 0)
        throw PreconditionError("vertex ids must be non-negative");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw PreconditionError("duplicate vertex id");
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw PreconditionError("duplicate edge");
    for (const auto& [u, v] : edges_) check_vertices_present(vertices_, u, v);
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    std::set<VertexId> vs;
    for (const auto& [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
    }
    return Graph({vs.begin(), vs.end()}, edges);
}

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

int Graph::degree(VertexId v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexId Graph::fresh_vertex_id() const {
    return vertices_.empty() ? 0 : vertices_.back() + 1;
}

Graph Graph::add_vertex(VertexId v) const {
    if (has_vertex(v)) throw PreconditionError("vertex already present: " + std::to_string(v));
    auto vs = vertices_;
    vs.push_back(v);
    return Graph(std::move(vs), edges_);
}

Graph Graph::add_edge(VertexId u, VertexId v) const {
    if (has_edge(u, v)) throw PreconditionError("edge already present");
    auto es = edges_;
    es.push_back(make_edge(u, v));
    return Graph(vertices_, std::move(es));
}

Graph Graph::remove_edge(VertexId u, VertexId v) const {
    if (!has_edge(u, v))
        throw PreconditionError("edge not present: " + std::to_string(u) + "-" + std::to_string(v));
    auto es = edges_;
    es.erase(std::find(es.begin(), es.end(), make_edge(u, v)));
    return Graph(vertices_, std::move(es));
}

Graph Graph::remove_vertex(VertexId v) const {
    if (!has_vertex(v)) throw PreconditionError("vertex not present: " + std::to_string(v));
    std::vector<VertexId> vs;
    for (VertexId x : vertices_)
        if (x != v) vs.push_back(x);
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (e.first != v && e.second != v) es.push_back(e);
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::relabel(const std::map<VertexId, VertexId>& pi) const {
    std::vector<VertexId> vs;
    for (VertexId v : vertices_) vs.push_back(pi.at(v));
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_) es.push_back(make_edge(pi.at(u), pi.at(v)));
    return Graph(std::move(vs), std::move(es));
}

MultiGraph::MultiGraph(std::vector<VertexId> vertices, std::vector<MEdge> edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (!vertices_.empty() && vertices_.front() < 0)
        throw PreconditionError("vertex ids must be non-negative");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw PreconditionError("duplicate vertex id");
    std::map<Edge, int> mult;
    for (const auto& me : edges) {
        Edge e = make_edge(me.u, me.v);  // rejects loops
        if (me.multiplicity < 1) throw PreconditionError("multiplicity must be >= 1");
        mult[e] += me.multiplicity;
    }
    for (const auto& [e, m] : mult) {
        check_vertices_present(vertices_, e.first, e.second);
        edges_.push_back({e.first, e.second, m});
    }
}

MultiGraph MultiGraph::from_graph(const Graph& g) {
    std::vector<MEdge> es;
    for (const auto& [u, v] : g.edges()) es.push_back({u, v, 1});
    return MultiGraph(g.vertices(), std::move(es));
}

int MultiGraph::edge_count() const {
    int m = 0;
    for (const auto& e : edges_) m += e.multiplicity;
    return m;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    if (u == v) return 0;
    Edge key = make_edge(u, v);
    for (const auto& e : edges_)
        if (e.u == key.first && e.v == key.second) return e.multiplicity;
    return 0;
}

int MultiGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges_) d += ((e.u == v) + (e.v == v)) * e.multiplicity;
    return d;
}

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool MultiGraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

MultiGraph MultiGraph::add_edge(VertexId u, VertexId v, int copies) const {
    if (copies < 1) throw PreconditionError("copies must be >= 1");
    auto es = edges_;
    es.push_back({std::min(u, v), std::max(u, v), copies});
    return MultiGraph(vertices_, std::move(es));
}

MultiGraph MultiGraph::remove_one_copy(VertexId u, VertexId v) const {
    Edge key = make_edge(u, v);
    auto es = edges_;
    for (auto it = es.begin(); it != es.end(); ++it) {
        if (it->u == key.first && it->v == key.second) {
            if (--it->multiplicity == 0) es.erase(it);
            return MultiGraph(vertices_, std::move(es));
        }
    }
    throw PreconditionError("edge not present");
}

MultiGraph MultiGraph::remove_vertex(VertexId v) const {
    if (!has_vertex(v)) throw PreconditionError("vertex not present");
    std::vector<VertexId> vs;
    for (VertexId x : vertices_)
        if (x != v) vs.push_back(x);
    std::vector<MEdge> es;
    for (const auto& e : edges_)
        if (e.u != v && e.v != v) es.push_back(e);
    return MultiGraph(std::move(vs), std::move(es));
}

Graph MultiGraph::simple() const {
    std::vector<Edge> es;
    for (const auto& e : edges_) es.push_back({e.u, e.v});
    return Graph(vertices_, std::move(es));
}

int induced_edge_count(const Graph& g, const std::vector<VertexId>& x) {
    std::set<VertexId> in(x.begin(), x.end());
    int count = 0;
    for (const auto& [u, v] : g.edges()) count += in.count(u) && in.count(v);
    return count;
}

int induced_edge_count(const MultiGraph& g, const std::vector<VertexId>& x) {
    std::set<VertexId> in(x.begin(), x.end());
    int count = 0;
    for (const auto& e : g.edges())
        if (in.count(e.u) && in.count(e.v)) count += e.multiplicity;
    return count;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& x) {
    std::set<VertexId> in(x.begin(), x.end());
    for (VertexId v : in)
        if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges())
        if (in.count(u) && in.count(v)) es.push_back({u, v});
    return Graph({in.begin(), in.end()}, std::move(es));
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<VertexId>& x) {
    std::set<VertexId> in(x.begin(), x.end());
    for (VertexId v : in)
        if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    std::vector<MultiGraph::MEdge> es;
    for (const auto& e : g.edges())
        if (in.count(e.u) && in.count(e.v)) es.push_back(e);
    return MultiGraph({in.begin(), in.end()}, std::move(es));
}

namespace {

template <typename G>
std::vector<std::vector<VertexId>> components_impl(const G& g) {
    std::set<VertexId> unseen(g.vertices().begin(), g.vertices().end());
    std::vector<std::vector<VertexId>> comps;
    while (!unseen.empty()) {
        std::vector<VertexId> stack{*unseen.begin()};
        unseen.erase(unseen.begin());
        std::vector<VertexId> comp;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                auto it = unseen.find(w);
                if (it != unseen.end()) {
                    unseen.erase(it);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    return components_impl(g);
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
    return components_impl(g);
}

int f_value(const Graph& g) { return 2 * g.vertex_count() - g.edge_count(); }
int f_value(const MultiGraph& g) { return 2 * g.vertex_count() - g.edge_count(); }

}  // namespace m22
