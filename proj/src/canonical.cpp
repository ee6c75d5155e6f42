#include "m22/canonical.hpp"

#include <algorithm>
#include <cstdint>

namespace m22 {

std::vector<int> CanonicalForm::key() const {
    std::vector<int> k{n};
    for (const auto& [u, v] : edges) {
        k.push_back(u);
        k.push_back(v);
    }
    return k;
}

namespace {

// Ordered partition of vertex indices 0..n-1 into cells. Refinement splits
// cells by neighbor counts against every cell until equitable; cell order is
// determined by structure only, so isomorphic graphs refine identically.
struct Searcher {
    int n;
    std::vector<uint32_t> adj;  // bitmask rows
    std::vector<uint64_t> best;
    std::vector<int> best_order;  // position -> vertex index
    bool have_best = false;

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t target = 0; target < cells.size(); ++target) {
                uint32_t tmask = 0;
                for (int v : cells[target]) tmask |= (1u << v);
                for (size_t ci = 0; ci < cells.size(); ++ci) {
                    if (cells[ci].size() <= 1) continue;
                    // split cell ci by #neighbors in target cell
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cells[ci].size());
                    for (int v : cells[ci])
                        keyed.push_back({__builtin_popcount(adj[v] & tmask), v});
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) continue;
                    std::vector<std::vector<int>> pieces;
                    int prev = keyed.front().first - 1;
                    for (const auto& [cnt, v] : keyed) {
                        if (cnt != prev) {
                            pieces.emplace_back();
                            prev = cnt;
                        }
                        pieces.back().push_back(v);
                    }
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
                    changed = true;
                    ci += pieces.size() - 1;
                }
            }
        }
    }

    // colex pair order: (0,1),(0,2),(1,2),(0,3),... so the bits among the
    // first p placed vertices form a prefix, usable for pruning
    std::vector<uint64_t> encode(const std::vector<int>& order, int upto) const {
        std::vector<uint64_t> bits((static_cast<size_t>(upto) * (upto - 1) / 2 + 63) / 64, 0);
        size_t pos = 0;
        for (int j = 1; j < upto; ++j)
            for (int i = 0; i < j; ++i, ++pos)
                if (adj[order[i]] & (1u << order[j])) bits[pos / 64] |= (1ull << (pos % 64));
        return bits;
    }

    // True when the candidate's settled prefix already exceeds the best.
    // Only complete 64-bit words are usable: inside a word the high bits
    // (later pairs) dominate the comparison, and a partial word's high bits
    // are still undetermined in this subtree.
    bool prefix_beaten(const std::vector<std::vector<int>>& cells) const {
        if (!have_best) return false;
        std::vector<int> order;
        for (const auto& c : cells) {
            if (c.size() > 1) break;
            order.push_back(c.front());
        }
        const int p = static_cast<int>(order.size());
        if (p < 2) return false;
        const size_t full_words = (static_cast<size_t>(p) * (p - 1) / 2) / 64;
        if (full_words == 0) return false;
        auto bits = encode(order, p);
        for (size_t w = 0; w < full_words; ++w)
            if (bits[w] != best[w]) return bits[w] > best[w];
        return false;
    }

    void search(std::vector<std::vector<int>>& cells) {
        refine(cells);
        if (prefix_beaten(cells)) return;
        size_t branch = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                branch = i;
                break;
            }
        if (branch == cells.size()) {
            std::vector<int> order;
            order.reserve(n);
            for (const auto& c : cells) order.push_back(c.front());
            auto bits = encode(order, n);
            if (!have_best || bits < best) {
                best = bits;
                best_order = order;
                have_best = true;
            }
            return;
        }
        for (int v : cells[branch]) {
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i != branch) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                next.push_back(std::move(rest));
            }
            search(next);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap || n > kHardCanonicalCap)
        throw PreconditionError("canonical_form: vertex count " + std::to_string(n) +
                                " exceeds cap " + std::to_string(std::min(cap, kHardCanonicalCap)));
    CanonicalForm out;
    out.n = n;
    if (n == 0) return out;

    Searcher s;
    s.n = n;
    s.adj.assign(n, 0);
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[g.vertices()[i]] = i;
    for (const auto& [u, v] : g.edges()) {
        s.adj[index[u]] |= (1u << index[v]);
        s.adj[index[v]] |= (1u << index[u]);
    }

    std::vector<std::vector<int>> cells(1);
    for (int i = 0; i < n; ++i) cells[0].push_back(i);
    s.search(cells);

    std::vector<int> pos(n);  // vertex index -> canonical label
    for (int p = 0; p < n; ++p) pos[s.best_order[p]] = p;
    for (int i = 0; i < n; ++i) out.labeling[g.vertices()[i]] = pos[i];
    for (const auto& [u, v] : g.edges())
        out.edges.push_back(make_edge(pos[index[u]], pos[index[v]]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    return find_isomorphism(g1, g2).has_value();
}

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Graph& g1,
                                                             const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    auto degseq = [](const Graph& g) {
        std::vector<int> d;
        for (VertexId v : g.vertices()) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(g1) != degseq(g2)) return std::nullopt;
    int cap = std::max(g1.vertex_count(), kDefaultCanonicalCap);
    auto c1 = canonical_form(g1, cap);
    auto c2 = canonical_form(g2, cap);
    if (!c1.same_class(c2)) return std::nullopt;
    // map through the canonical labels: v -> c1(v) -> c2^{-1}
    std::map<VertexId, VertexId> inv2;
    for (const auto& [v, lab] : c2.labeling) inv2[lab] = v;
    std::map<VertexId, VertexId> iso;
    for (const auto& [v, lab] : c1.labeling) iso[v] = inv2.at(lab);
    return iso;
}

}  // namespace m22
