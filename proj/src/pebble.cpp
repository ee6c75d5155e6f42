#include "m22/pebble.hpp"

#include <algorithm>
#include <map>

namespace m22 {

PebbleGame::PebbleGame(const std::vector<VertexId>& vertices, int k, int l)
    : k_(k), l_(l), verts_(vertices) {
    if (k < 1 || l < 0 || l >= 2 * k)
        throw PreconditionError("pebble game requires k >= 1 and 0 <= l < 2k");
    std::sort(verts_.begin(), verts_.end());
    pebbles_.assign(verts_.size(), k_);
    out_.assign(verts_.size(), {});
}

int PebbleGame::index(VertexId v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v)
        throw PreconditionError("unknown vertex " + std::to_string(v));
    return static_cast<int>(it - verts_.begin());
}

int PebbleGame::pebbles_on(VertexId v) const { return pebbles_[index(v)]; }

// DFS from root along the orientation for a vertex (other than root/other)
// holding a pebble; reversing the path moves one pebble to root.
bool PebbleGame::pull_pebble_to(int root, int other) {
    const int n = static_cast<int>(verts_.size());
    std::vector<int> pred(n, -2);
    pred[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : out_[x]) {
            if (pred[y] != -2) continue;
            pred[y] = x;
            if (y != other && pebbles_[y] > 0) {
                // reverse edges along root -> ... -> y
                int cur = y;
                while (pred[cur] != -1) {
                    int p = pred[cur];
                    auto it = std::find(out_[p].begin(), out_[p].end(), cur);
                    out_[p].erase(it);
                    out_[cur].push_back(p);
                    cur = p;
                }
                --pebbles_[y];
                ++pebbles_[root];
                return true;
            }
            stack.push_back(y);
        }
    }
    return false;
}

int PebbleGame::maximize_pebbles(VertexId uu, VertexId vv) {
    int u = index(uu), v = index(vv);
    while (pebbles_[u] + pebbles_[v] < l_ + 1) {
        if (pebbles_[u] < k_ && pull_pebble_to(u, v)) continue;
        if (pebbles_[v] < k_ && pull_pebble_to(v, u)) continue;
        break;
    }
    return pebbles_[u] + pebbles_[v];
}

bool PebbleGame::try_insert(VertexId uu, VertexId vv) {
    if (uu == vv) throw PreconditionError("loop edge rejected by pebble game");
    int u = index(uu), v = index(vv);
    if (maximize_pebbles(uu, vv) < l_ + 1) return false;
    if (pebbles_[u] > 0) {
        --pebbles_[u];
        out_[u].push_back(v);
    } else {
        --pebbles_[v];
        out_[v].push_back(u);
    }
    ++accepted_;
    return true;
}

std::vector<VertexId> PebbleGame::blocked_region(VertexId uu, VertexId vv) const {
    int u = index(uu), v = index(vv);
    const int n = static_cast<int>(verts_.size());
    // reverse adjacency, then backward closure from pebbled vertices != u,v
    std::vector<std::vector<int>> in(n);
    for (int x = 0; x < n; ++x)
        for (int y : out_[x]) in[y].push_back(x);
    std::vector<char> reaches(n, 0);
    std::vector<int> stack;
    for (int x = 0; x < n; ++x)
        if (pebbles_[x] > 0 && x != u && x != v) {
            reaches[x] = 1;
            stack.push_back(x);
        }
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (int x : in[y])
            if (!reaches[x]) {
                reaches[x] = 1;
                stack.push_back(x);
            }
    }
    std::vector<VertexId> region;
    for (int x = 0; x < n; ++x)
        if (!reaches[x]) region.push_back(verts_[x]);
    return region;
}

namespace {

RankResult rank_of_edge_list(const std::vector<VertexId>& vertices,
                             std::vector<Edge> edges, int k, int l) {
    std::sort(edges.begin(), edges.end());
    PebbleGame game(vertices, k, l);
    RankResult r;
    for (const auto& [u, v] : edges)
        if (game.try_insert(u, v)) r.independent_edges.push_back({u, v});
    r.rank = game.accepted_count();
    return r;
}

std::vector<Edge> expand_multiedges(const MultiGraph& g) {
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        for (int c = 0; c < e.multiplicity; ++c) edges.push_back({e.u, e.v});
    return edges;
}

}  // namespace

RankResult pebble_rank(const Graph& g, int k, int l) {
    return rank_of_edge_list(g.vertices(), g.edges(), k, l);
}

RankResult pebble_rank(const MultiGraph& g, int k, int l) {
    return rank_of_edge_list(g.vertices(), expand_multiedges(g), k, l);
}

bool is_sparse(const Graph& g, int k, int l) {
    return pebble_rank(g, k, l).rank == g.edge_count();
}

bool is_sparse(const MultiGraph& g, int k, int l) {
    return pebble_rank(g, k, l).rank == g.edge_count();
}

bool is_tight(const Graph& g, int k, int l) {
    return g.edge_count() == k * g.vertex_count() - l && is_sparse(g, k, l);
}

bool is_tight(const MultiGraph& g, int k, int l) {
    return g.edge_count() == k * g.vertex_count() - l && is_sparse(g, k, l);
}

bool is_circuit(const Graph& g) {
    const int n = g.vertex_count(), m = g.edge_count();
    if (m != 2 * n - 1) return false;
    for (VertexId v : g.vertices())
        if (g.degree(v) < 3) return false;
    if (pebble_rank(g).rank != m - 1) return false;
    // every single-edge deletion must be independent (sparse)
    for (const auto& [u, v] : g.edges())
        if (!is_sparse(g.remove_edge(u, v))) return false;
    return true;
}

bool is_multicircuit(const MultiGraph& g) {
    const int n = g.vertex_count(), m = g.edge_count();
    if (m != 2 * n - 1) return false;
    if (pebble_rank(g).rank != m - 1) return false;
    for (const auto& e : g.edges())
        if (!is_sparse(g.remove_one_copy(e.u, e.v))) return false;
    return true;
}

bool brute_force_is_circuit(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw PreconditionError("brute_force_is_circuit capped at 16 vertices");
    if (g.edge_count() != 2 * n - 1) return false;
    std::vector<uint32_t> adj(n, 0);
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[g.vertices()[i]] = i;
    for (const auto& [u, v] : g.edges()) {
        adj[index[u]] |= (1u << index[v]);
        adj[index[v]] |= (1u << index[u]);
    }
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (uint32_t x = 1; x < full; ++x) {
        int size = __builtin_popcount(x);
        int inside = 0;
        for (int i = 0; i < n; ++i)
            if (x & (1u << i)) inside += __builtin_popcount(adj[i] & x);
        if (inside / 2 > 2 * size - 2) return false;
    }
    return true;
}

std::optional<CriticalSet> blocking_tight_set(const Graph& g, VertexId u, VertexId w) {
    if (!g.has_vertex(u) || !g.has_vertex(w) || u == w)
        throw PreconditionError("blocking_tight_set needs two distinct vertices of g");
    if (g.has_edge(u, w)) throw PreconditionError("edge uw already present");
    PebbleGame game(g.vertices(), 2, 2);
    for (const auto& [a, b] : g.edges())
        if (!game.try_insert(a, b))
            throw PreconditionError("blocking_tight_set requires a (2,2)-sparse graph");
    if (game.maximize_pebbles(u, w) >= 3) return std::nullopt;
    CriticalSet cs;
    cs.vertices = game.blocked_region(u, w);
    cs.edge_count = induced_edge_count(g, cs.vertices);
    return cs;
}

}  // namespace m22
