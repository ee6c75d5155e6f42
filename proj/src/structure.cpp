#include "m22/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace m22 {

namespace {

template <typename G>
bool connected_after_removal(const G& g, const std::vector<VertexId>& removed) {
    std::set<VertexId> gone(removed.begin(), removed.end());
    std::vector<VertexId> keep;
    for (VertexId v : g.vertices())
        if (!gone.count(v)) keep.push_back(v);
    if (keep.empty()) return true;
    return connected_components(induced_subgraph(g, keep)).size() == 1;
}

template <typename G>
bool vertex_k_connected(const G& g, int k) {
    const int n = g.vertex_count();
    if (n < k + 1) return false;
    if (connected_components(g).size() != 1) return false;
    if (k == 1) return true;
    const auto& vs = g.vertices();
    if (k >= 2) {
        for (int i = 0; i < n; ++i)
            if (!connected_after_removal(g, {vs[i]})) return false;
    }
    if (k >= 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!connected_after_removal(g, {vs[i], vs[j]})) return false;
    }
    return true;
}

// Expanded edge list (one entry per parallel copy) for cut scans.
std::vector<Edge> edge_copies(const Graph& g) { return g.edges(); }

std::vector<Edge> edge_copies(const MultiGraph& g) {
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        for (int c = 0; c < e.multiplicity; ++c) edges.push_back({e.u, e.v});
    return edges;
}

// Indexed view for repeated edge-deletion connectivity scans.
struct EdgeScan {
    std::vector<VertexId> verts;
    std::vector<std::pair<int, int>> edges;               // index pairs, one per copy
    std::vector<std::vector<std::pair<int, int>>> adj;    // (neighbor index, edge id)
    std::vector<char> dropped;
    std::vector<int> seen;
    int stamp = 0;

    template <typename G>
    explicit EdgeScan(const G& g) : verts(g.vertices()) {
        std::map<VertexId, int> index;
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        adj.resize(verts.size());
        for (const auto& [u, v] : edge_copies(g)) {
            int id = static_cast<int>(edges.size());
            edges.push_back({index[u], index[v]});
            adj[index[u]].push_back({index[v], id});
            adj[index[v]].push_back({index[u], id});
        }
        dropped.assign(edges.size(), 0);
        seen.assign(verts.size(), 0);
    }

    // number of components after dropping the given edge ids
    int component_count(const std::vector<int>& drop) {
        for (int id : drop) dropped[id] = 1;
        ++stamp;
        int comps = 0;
        std::vector<int> stack;
        for (size_t s = 0; s < verts.size(); ++s) {
            if (seen[s] == stamp) continue;
            ++comps;
            seen[s] = stamp;
            stack.push_back(static_cast<int>(s));
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& [w, id] : adj[v])
                    if (!dropped[id] && seen[w] != stamp) {
                        seen[w] = stamp;
                        stack.push_back(w);
                    }
            }
        }
        for (int id : drop) dropped[id] = 0;
        return comps;
    }

    std::vector<std::vector<VertexId>> components(const std::vector<int>& drop) {
        for (int id : drop) dropped[id] = 1;
        ++stamp;
        std::vector<std::vector<VertexId>> comps;
        std::vector<int> stack;
        for (size_t s = 0; s < verts.size(); ++s) {
            if (seen[s] == stamp) continue;
            comps.emplace_back();
            seen[s] = stamp;
            stack.push_back(static_cast<int>(s));
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comps.back().push_back(verts[v]);
                for (const auto& [w, id] : adj[v])
                    if (!dropped[id] && seen[w] != stamp) {
                        seen[w] = stamp;
                        stack.push_back(w);
                    }
            }
        }
        for (int id : drop) dropped[id] = 0;
        for (auto& c : comps) std::sort(c.begin(), c.end());
        std::sort(comps.begin(), comps.end());
        return comps;
    }
};

template <typename G>
int edge_connectivity_impl(const G& g) {
    if (g.vertex_count() <= 1) return 0;
    EdgeScan scan(g);
    const int m = static_cast<int>(scan.edges.size());
    if (scan.component_count({}) > 1) return 0;
    int min_deg = m;
    for (VertexId v : g.vertices()) min_deg = std::min(min_deg, g.degree(v));
    for (int c = 1; c <= min_deg; ++c) {
        std::vector<int> idx(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            if (scan.component_count(idx) > 1) return c;
            int i = c - 1;
            while (i >= 0 && idx[i] == m - c + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return min_deg;
}

template <typename G>
std::vector<EdgeCutset3> cutsets3_impl(const G& g) {
    if (edge_connectivity_impl(g) < 3)
        throw PreconditionError("nontrivial_3_edge_cutsets requires a 3-edge-connected graph");
    EdgeScan scan(g);
    auto copies = edge_copies(g);
    const int m = static_cast<int>(copies.size());
    std::vector<EdgeCutset3> out;
    std::set<std::array<Edge, 3>> seen;  // parallel copies give equal triples
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                if (scan.component_count({i, j, k}) < 2) continue;
                auto comps = scan.components({i, j, k});
                EdgeCutset3 cs;
                cs.edges = {copies[i], copies[j], copies[k]};
                if (!seen.insert(cs.edges).second) continue;
                cs.side_a = comps.front();
                for (size_t c = 1; c < comps.size(); ++c)
                    cs.side_b.insert(cs.side_b.end(), comps[c].begin(), comps[c].end());
                std::sort(cs.side_b.begin(), cs.side_b.end());
                cs.trivial = std::min(cs.side_a.size(), cs.side_b.size()) < 2;
                if (!cs.trivial) out.push_back(cs);
            }
    return out;
}

}  // namespace

bool is_2_connected(const Graph& g) { return vertex_k_connected(g, 2); }
bool is_2_connected(const MultiGraph& g) { return vertex_k_connected(g, 2); }

bool is_3_connected(const Graph& g) {
    if (g.vertex_count() < 4)
        throw PreconditionError("is_3_connected requires |V| >= 4");
    return vertex_k_connected(g, 3);
}

bool is_3_connected(const MultiGraph& g) {
    if (g.vertex_count() < 4)
        throw PreconditionError("is_3_connected requires |V| >= 4");
    return vertex_k_connected(g, 3);
}

std::vector<CutPair> cutpairs(const Graph& g) {
    if (connected_components(g).size() != 1)
        throw PreconditionError("cutpairs requires a connected graph");
    if (g.vertex_count() < 4) throw PreconditionError("cutpairs requires |V| >= 4");
    std::vector<CutPair> out;
    const auto& vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            std::vector<VertexId> rest;
            for (VertexId v : vs)
                if (v != vs[i] && v != vs[j]) rest.push_back(v);
            auto comps = connected_components(induced_subgraph(g, rest));
            if (comps.size() < 2) continue;
            CutPair cp;
            cp.a = vs[i];
            cp.b = vs[j];
            cp.ab_present = g.has_edge(cp.a, cp.b);
            cp.components = comps;
            cp.side_a = comps.front();
            for (size_t c = 1; c < comps.size(); ++c)
                cp.side_b.insert(cp.side_b.end(), comps[c].begin(), comps[c].end());
            std::sort(cp.side_b.begin(), cp.side_b.end());
            out.push_back(std::move(cp));
        }
    return out;
}

int edge_connectivity(const Graph& g) { return edge_connectivity_impl(g); }
int edge_connectivity(const MultiGraph& g) { return edge_connectivity_impl(g); }

std::vector<EdgeCutset3> nontrivial_3_edge_cutsets(const Graph& g) {
    return cutsets3_impl(g);
}

std::vector<EdgeCutset3> nontrivial_3_edge_cutsets(const MultiGraph& g) {
    return cutsets3_impl(g);
}

namespace {

// vertices covered by some 4-clique
std::set<VertexId> k4_covered(const Graph& g) {
    std::set<VertexId> covered;
    for (const auto& [u, v] : g.edges()) {
        std::vector<VertexId> common;
        for (VertexId x : g.neighbors(u))
            if (x != v && g.has_edge(x, v)) common.push_back(x);
        for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j)
                if (g.has_edge(common[i], common[j])) {
                    covered.insert(u);
                    covered.insert(v);
                    covered.insert(common[i]);
                    covered.insert(common[j]);
                }
    }
    return covered;
}

}  // namespace

NodeCensus node_census(const Graph& g) {
    NodeCensus nc;
    for (VertexId v : g.vertices())
        if (g.degree(v) == 3) nc.nodes.push_back(v);
    auto covered = k4_covered(g);
    for (VertexId v : nc.nodes)
        if (!covered.count(v)) nc.starred.push_back(v);
    Graph star = induced_subgraph(g, nc.starred);
    for (VertexId v : nc.starred) {
        int d = star.degree(v);
        if (d <= 1)
            nc.leaves.push_back(v);
        else if (d == 2)
            nc.series.push_back(v);
        else
            nc.branching.push_back(v);
    }
    return nc;
}

std::vector<HangingK4> hanging_k4_cutpairs(const Graph& g) {
    std::vector<HangingK4> out;
    if (g.vertex_count() < 4 || connected_components(g).size() != 1) return out;
    for (const auto& cp : cutpairs(g)) {
        for (const auto& comp : cp.components) {
            if (comp.size() != 2) continue;
            VertexId c = comp[0], d = comp[1];
            if (g.has_edge(cp.a, cp.b) && g.has_edge(c, d) && g.has_edge(cp.a, c) &&
                g.has_edge(cp.a, d) && g.has_edge(cp.b, c) && g.has_edge(cp.b, d))
                out.push_back({cp, c, d});
        }
    }
    return out;
}

MultiGraph contract_hanging_k4s(const Graph& g) {
    auto pairs = g.vertex_count() >= 4 && connected_components(g).size() == 1
                     ? cutpairs(g)
                     : std::vector<CutPair>{};
    auto hangings = hanging_k4_cutpairs(g);
    for (const auto& cp : pairs) {
        bool ok = false;
        for (const auto& h : hangings)
            if (h.pair.a == cp.a && h.pair.b == cp.b) ok = true;
        if (!cp.ab_present || !ok)
            throw PreconditionError("contract_hanging_k4s: cutpair " + std::to_string(cp.a) +
                                    "," + std::to_string(cp.b) + " has no hanging K4 side");
    }
    std::set<VertexId> interior;
    for (const auto& h : hangings) {
        interior.insert(h.c);
        interior.insert(h.d);
    }
    std::vector<VertexId> keep;
    for (VertexId v : g.vertices())
        if (!interior.count(v)) keep.push_back(v);
    std::vector<MultiGraph::MEdge> edges;
    for (const auto& [u, v] : g.edges())
        if (!interior.count(u) && !interior.count(v)) edges.push_back({u, v, 1});
    for (const auto& h : hangings)
        edges.push_back({std::min(h.pair.a, h.pair.b), std::max(h.pair.a, h.pair.b), 1});
    return MultiGraph(keep, edges);
}

}  // namespace m22
