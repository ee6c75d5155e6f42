#include "m22/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "m22/pebble.hpp"

namespace m22 {

namespace {

int rank_of_edges(const Graph& g, const std::vector<Edge>& edges) {
    Graph sub(g.vertices(), edges);
    return pebble_rank(sub).rank;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// vertices spanned by an edge set
std::vector<VertexId> span(const std::vector<Edge>& edges) {
    std::set<VertexId> vs;
    for (const auto& [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
    }
    return {vs.begin(), vs.end()};
}

bool edge_set_rigid(const std::vector<Edge>& edges) {
    auto vs = span(edges);
    if (vs.size() < 2) return false;
    Graph sub(vs, edges);
    return pebble_rank(sub).rank == 2 * static_cast<int>(vs.size()) - 2;
}

// all circuit-subgraph edge sets, by direct scan (audit oracle)
std::vector<std::vector<Edge>> enumerate_circuit_subsets(const Graph& g) {
    if (g.vertex_count() > 7)
        throw PreconditionError("definitional circuit enumeration capped at 7 vertices");
    std::vector<std::vector<Edge>> out;
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<VertexId> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) sub.push_back(vs[i]);
        if (sub.size() < 5) continue;
        Graph h = induced_subgraph(g, sub);
        auto he = h.edges();
        const int hm = static_cast<int>(he.size());
        const int want = 2 * static_cast<int>(sub.size()) - 1;
        if (hm < want) continue;
        // choose edge subsets of the right size
        std::vector<int> idx(want);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Edge> chosen;
            for (int i : idx) chosen.push_back(he[i]);
            auto spanned = span(chosen);
            if (spanned.size() == sub.size() &&
                brute_force_is_circuit(Graph(spanned, chosen)))
                out.push_back(chosen);
            int i = want - 1;
            while (i >= 0 && idx[i] == hm - want + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace

std::vector<Edge> fundamental_circuit(const Graph& g, const std::vector<Edge>& basis,
                                      Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw PreconditionError("fundamental_circuit: e is not an edge of g");
    for (const auto& b : basis)
        if (b == e) throw PreconditionError("fundamental_circuit: e must lie outside the basis");
    if (rank_of_edges(g, basis) != static_cast<int>(basis.size()))
        throw PreconditionError("fundamental_circuit: basis is dependent");
    std::vector<Edge> with_e = basis;
    with_e.push_back(e);
    if (rank_of_edges(g, with_e) == static_cast<int>(with_e.size()))
        throw PreconditionError("fundamental_circuit: e extends the basis independently");
    std::vector<Edge> circuit{e};
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<Edge> swapped;
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i) swapped.push_back(basis[j]);
        swapped.push_back(e);
        if (rank_of_edges(g, swapped) == static_cast<int>(swapped.size()))
            circuit.push_back(basis[i]);
    }
    std::sort(circuit.begin(), circuit.end());
    return circuit;
}

MatroidComponents matroid_components(const Graph& g, bool definitional) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::map<Edge, int> eidx;
    for (int i = 0; i < m; ++i) eidx[edges[i]] = i;
    UnionFind uf(m);
    std::vector<char> in_circuit(m, 0);

    if (definitional) {
        for (const auto& circuit : enumerate_circuit_subsets(g)) {
            for (const auto& e : circuit) in_circuit[eidx.at(e)] = 1;
            for (size_t i = 1; i < circuit.size(); ++i)
                uf.unite(eidx.at(circuit[0]), eidx.at(circuit[i]));
        }
    } else {
        auto basis = pebble_rank(g).independent_edges;
        std::set<Edge> in_basis(basis.begin(), basis.end());
        for (const auto& e : edges) {
            if (in_basis.count(e)) continue;
            auto circuit = fundamental_circuit(g, basis, e);
            for (const auto& c : circuit) in_circuit[eidx.at(c)] = 1;
            for (size_t i = 1; i < circuit.size(); ++i)
                uf.unite(eidx.at(circuit[0]), eidx.at(circuit[i]));
        }
    }

    MatroidComponents out;
    std::map<int, std::vector<Edge>> classes;
    for (int i = 0; i < m; ++i) {
        if (in_circuit[i])
            classes[uf.find(i)].push_back(edges[i]);
        else
            out.bridges.push_back(edges[i]);
    }
    for (auto& [root, cls] : classes) {
        std::sort(cls.begin(), cls.end());
        out.partition.push_back(std::move(cls));
    }
    for (const auto& b : out.bridges) out.partition.push_back({b});
    std::sort(out.partition.begin(), out.partition.end());
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

bool is_rm_connected(const Graph& g) {
    if (g.edge_count() < 2)
        throw PreconditionError("is_rm_connected requires at least two edges");
    auto mc = matroid_components(g);
    return mc.bridges.empty() && mc.partition.size() == 1;
}

bool is_redundantly_rigid(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return false;
    const int target = 2 * n - 2;
    if (pebble_rank(g).rank != target) return false;
    for (const auto& [u, v] : g.edges())
        if (pebble_rank(g.remove_edge(u, v)).rank != target) return false;
    return true;
}

RigidComponents redundantly_rigid_components(const Graph& g) {
    auto mc = matroid_components(g);
    std::vector<std::vector<Edge>> groups;
    for (const auto& cls : mc.partition) {
        bool is_bridge_class =
            cls.size() == 1 &&
            std::find(mc.bridges.begin(), mc.bridges.end(), cls[0]) != mc.bridges.end();
        if (!is_bridge_class) groups.push_back(cls);
    }
    // grow unions of circuit classes while the union stays rigid
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < groups.size() && !merged; ++i)
            for (size_t j = i + 1; j < groups.size() && !merged; ++j) {
                std::vector<Edge> both = groups[i];
                both.insert(both.end(), groups[j].begin(), groups[j].end());
                std::sort(both.begin(), both.end());
                if (edge_set_rigid(both)) {
                    groups[i] = std::move(both);
                    groups.erase(groups.begin() + j);
                    merged = true;
                }
            }
    }
    RigidComponents out;
    out.partition = std::move(groups);
    out.bridges = mc.bridges;
    for (const auto& b : out.bridges) out.partition.push_back({b});
    std::sort(out.partition.begin(), out.partition.end());
    return out;
}

}  // namespace m22
