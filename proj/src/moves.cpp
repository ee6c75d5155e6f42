#include "m22/moves.hpp"

#include <algorithm>
#include <set>

#include "m22/pebble.hpp"

namespace m22 {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Henneberg2: return "Henneberg2";
        case MoveKind::InvHenneberg2: return "InvHenneberg2";
        case MoveKind::Sum1: return "Sum1";
        case MoveKind::Sum2: return "Sum2";
        case MoveKind::Sum3: return "Sum3";
        case MoveKind::Sep1: return "Sep1";
        case MoveKind::Sep2: return "Sep2";
        case MoveKind::Sep3: return "Sep3";
    }
    return "?";
}

MoveKind move_kind_from_name(const std::string& name) {
    for (MoveKind k : {MoveKind::Henneberg2, MoveKind::InvHenneberg2, MoveKind::Sum1,
                       MoveKind::Sum2, MoveKind::Sum3, MoveKind::Sep1, MoveKind::Sep2,
                       MoveKind::Sep3})
        if (name == move_kind_name(k)) return k;
    throw ParseError("unknown move kind: " + name);
}

Graph henneberg2(const Graph& g, Edge uw, VertexId z, VertexId v_label) {
    auto [u, w] = make_edge(uw.first, uw.second);
    if (!g.has_edge(u, w)) throw PreconditionError("henneberg2: edge uw not present");
    if (!g.has_vertex(z) || z == u || z == w)
        throw PreconditionError("henneberg2: z must be a vertex distinct from u and w");
    if (g.has_vertex(v_label)) throw PreconditionError("henneberg2: label clash");
    return g.remove_edge(u, w)
        .add_vertex(v_label)
        .add_edge(v_label, u)
        .add_edge(v_label, w)
        .add_edge(v_label, z);
}

Graph inverse_henneberg2(const Graph& g, VertexId v, Edge uw) {
    auto [u, w] = make_edge(uw.first, uw.second);
    if (!g.has_vertex(v) || g.degree(v) != 3)
        throw PreconditionError("inverse_henneberg2: v must have degree 3");
    if (!g.has_edge(v, u) || !g.has_edge(v, w))
        throw PreconditionError("inverse_henneberg2: u,w must be neighbors of v");
    if (g.has_edge(u, w))
        throw PreconditionError("inverse_henneberg2: uw already an edge");
    return g.remove_vertex(v).add_edge(u, w);
}

MultiGraph inverse_henneberg2(const MultiGraph& g, VertexId v, Edge uw) {
    auto [u, w] = make_edge(uw.first, uw.second);
    if (!g.has_vertex(v) || g.degree(v) != 3)
        throw PreconditionError("inverse_henneberg2: v must have degree 3");
    if (g.multiplicity(v, u) < 1 || g.multiplicity(v, w) < 1)
        throw PreconditionError("inverse_henneberg2: u,w must be neighbors of v");
    if (g.multiplicity(u, w) > 0)
        throw PreconditionError("inverse_henneberg2: uw would create a parallel edge");
    return g.remove_vertex(v).add_edge(u, w);
}

bool is_admissible_pair(const Graph& g, VertexId v, Edge uw) {
    auto [u, w] = uw.first < uw.second ? uw : Edge{uw.second, uw.first};
    if (u == w || !g.has_vertex(v) || g.degree(v) != 3) return false;
    if (!g.has_edge(v, u) || !g.has_edge(v, w) || g.has_edge(u, w)) return false;
    return is_circuit(inverse_henneberg2(g, v, {u, w}));
}

bool is_admissible_pair(const MultiGraph& g, VertexId v, Edge uw) {
    auto [u, w] = uw.first < uw.second ? uw : Edge{uw.second, uw.first};
    if (u == w || !g.has_vertex(v) || g.degree(v) != 3) return false;
    if (g.multiplicity(v, u) < 1 || g.multiplicity(v, w) < 1 || g.multiplicity(u, w) > 0)
        return false;
    return is_multicircuit(inverse_henneberg2(g, v, {u, w}));
}

namespace {

template <typename G>
std::vector<AdmissibleNode> admissible_nodes_impl(const G& g) {
    std::vector<AdmissibleNode> out;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        auto nbrs = g.neighbors(v);
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        AdmissibleNode an{v, {}};
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (is_admissible_pair(g, v, {nbrs[i], nbrs[j]}))
                    an.pairs.push_back({nbrs[i], nbrs[j]});
        if (!an.pairs.empty()) out.push_back(std::move(an));
    }
    return out;
}

// a hanging K4 on (a,b,c,d): full K4 present and c,d see nothing else
void check_hanging_k4(const Graph& g, std::array<VertexId, 4> k4, const char* who) {
    auto [a, b, c, d] = k4;
    std::set<VertexId> distinct{a, b, c, d};
    if (distinct.size() != 4)
        throw PreconditionError(std::string(who) + ": K4 vertices must be distinct");
    for (VertexId x : {a, b, c, d})
        if (!g.has_vertex(x)) throw PreconditionError(std::string(who) + ": unknown K4 vertex");
    for (auto [x, y] : {Edge{a, b}, Edge{a, c}, Edge{a, d}, Edge{b, c}, Edge{b, d}, Edge{c, d}})
        if (!g.has_edge(x, y))
            throw PreconditionError(std::string(who) + ": vertices do not induce K4");
    if (g.degree(c) != 3 || g.degree(d) != 3)
        throw PreconditionError(std::string(who) + ": interior pair must have degree 3");
}

}  // namespace

std::vector<AdmissibleNode> admissible_nodes(const Graph& g) {
    return admissible_nodes_impl(g);
}

std::vector<AdmissibleNode> admissible_nodes(const MultiGraph& g) {
    return admissible_nodes_impl(g);
}

Graph one_sum(const Graph& g1, Edge a1b1, const Graph& g2,
              std::array<VertexId, 4> k4_2) {
    // (a1,b1) is an ordered identification: a2 merges onto a1, b2 onto b1
    auto [a1, b1] = a1b1;
    if (!g1.has_edge(a1, b1)) throw PreconditionError("one_sum: edge a1b1 not present");
    check_hanging_k4(g2, k4_2, "one_sum");
    auto [a2, b2, c2, d2] = k4_2;
    const VertexId delta = g1.fresh_vertex_id();
    auto shift = [&](VertexId x) -> VertexId {
        if (x == a2) return a1;
        if (x == b2) return b1;
        return x + delta;
    };
    std::vector<VertexId> vs;
    for (VertexId v : g1.vertices()) vs.push_back(v);
    for (VertexId v : g2.vertices())
        if (v != a2 && v != b2 && v != c2 && v != d2) vs.push_back(v + delta);
    std::vector<Edge> es;
    for (const auto& [u, v] : g1.edges())
        if (make_edge(u, v) != make_edge(a1, b1)) es.push_back({u, v});
    for (const auto& [u, v] : g2.edges()) {
        if (u == c2 || u == d2 || v == c2 || v == d2) continue;
        if (make_edge(u, v) == make_edge(a2, b2)) continue;
        es.push_back(make_edge(shift(u), shift(v)));
    }
    return Graph(vs, es);
}

Graph two_sum(const Graph& g1, std::array<VertexId, 4> k4_1, const Graph& g2,
              std::array<VertexId, 4> k4_2) {
    check_hanging_k4(g1, k4_1, "two_sum (left)");
    check_hanging_k4(g2, k4_2, "two_sum (right)");
    auto [a1, b1, c1, d1] = k4_1;
    auto [a2, b2, c2, d2] = k4_2;
    const VertexId delta = g1.fresh_vertex_id();
    auto shift = [&](VertexId x) -> VertexId {
        if (x == a2) return a1;
        if (x == b2) return b1;
        return x + delta;
    };
    std::vector<VertexId> vs;
    for (VertexId v : g1.vertices())
        if (v != c1 && v != d1) vs.push_back(v);
    for (VertexId v : g2.vertices())
        if (v != a2 && v != b2 && v != c2 && v != d2) vs.push_back(v + delta);
    std::vector<Edge> es;
    for (const auto& [u, v] : g1.edges())
        if (u != c1 && u != d1 && v != c1 && v != d1) es.push_back({u, v});
    for (const auto& [u, v] : g2.edges()) {
        if (u == c2 || u == d2 || v == c2 || v == d2) continue;
        if (make_edge(u, v) == make_edge(a2, b2)) continue;  // one ab copy kept
        es.push_back(make_edge(shift(u), shift(v)));
    }
    return Graph(vs, es);
}

Graph three_sum(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2,
                const std::array<std::pair<VertexId, VertexId>, 3>& matching) {
    if (!g1.has_vertex(v1) || g1.degree(v1) != 3)
        throw PreconditionError("three_sum: v1 must have degree 3");
    if (!g2.has_vertex(v2) || g2.degree(v2) != 3)
        throw PreconditionError("three_sum: v2 must have degree 3");
    std::vector<VertexId> n1{matching[0].first, matching[1].first, matching[2].first};
    std::vector<VertexId> n2{matching[0].second, matching[1].second, matching[2].second};
    std::sort(n1.begin(), n1.end());
    std::sort(n2.begin(), n2.end());
    if (n1 != g1.neighbors(v1) || n2 != g2.neighbors(v2))
        throw PreconditionError("three_sum: matching must pair N(v1) with N(v2)");
    const VertexId delta = g1.fresh_vertex_id();
    std::vector<VertexId> vs;
    for (VertexId v : g1.vertices())
        if (v != v1) vs.push_back(v);
    for (VertexId v : g2.vertices())
        if (v != v2) vs.push_back(v + delta);
    std::vector<Edge> es;
    for (const auto& [u, v] : g1.edges())
        if (u != v1 && v != v1) es.push_back({u, v});
    for (const auto& [u, v] : g2.edges())
        if (u != v2 && v != v2) es.push_back(make_edge(u + delta, v + delta));
    for (const auto& [x, y] : matching) es.push_back(make_edge(x, y + delta));
    return Graph(vs, es);
}

namespace {

// checks that (side_a, side_b) partitions V - {a,b} with no cross edges
void check_cutpair(const Graph& g, const CutPair& cp) {
    if (!g.has_vertex(cp.a) || !g.has_vertex(cp.b) || cp.a == cp.b)
        throw PreconditionError("separation: bad cutpair vertices");
    std::set<VertexId> in_a(cp.side_a.begin(), cp.side_a.end());
    std::set<VertexId> in_b(cp.side_b.begin(), cp.side_b.end());
    if (in_a.empty() || in_b.empty())
        throw PreconditionError("separation: both sides must be non-empty");
    size_t covered = in_a.size() + in_b.size() + 2;
    if (covered != static_cast<size_t>(g.vertex_count()))
        throw PreconditionError("separation: sides do not partition V - {a,b}");
    for (VertexId v : cp.side_a)
        if (in_b.count(v) || v == cp.a || v == cp.b)
            throw PreconditionError("separation: sides overlap");
    for (VertexId v : cp.side_b)
        if (v == cp.a || v == cp.b)
            throw PreconditionError("separation: sides overlap");
    for (const auto& [u, v] : g.edges())
        if ((in_a.count(u) && in_b.count(v)) || (in_a.count(v) && in_b.count(u)))
            throw PreconditionError("separation: an edge joins the two sides");
}

std::vector<VertexId> with_pair(const std::vector<VertexId>& side, VertexId a, VertexId b) {
    std::vector<VertexId> out = side;
    out.push_back(a);
    out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

Graph glue_k4(const Graph& side, VertexId a, VertexId b, VertexId c, VertexId d) {
    Graph out = side.add_vertex(c).add_vertex(d);
    for (auto [x, y] : {Edge{a, c}, Edge{a, d}, Edge{b, c}, Edge{b, d}, Edge{c, d}})
        out = out.add_edge(x, y);
    if (!out.has_edge(a, b)) out = out.add_edge(a, b);
    return out;
}

}  // namespace

std::pair<Graph, Graph> one_separation(const Graph& g, const CutPair& cp) {
    check_cutpair(g, cp);
    if (g.has_edge(cp.a, cp.b)) throw PreconditionError("one_separation: ab must be absent");
    Graph ga = induced_subgraph(g, with_pair(cp.side_a, cp.a, cp.b));
    Graph gb = induced_subgraph(g, with_pair(cp.side_b, cp.a, cp.b));
    int fa = f_value(ga), fb = f_value(gb);
    if (std::min(fa, fb) != 2 || std::max(fa, fb) != 3)
        throw PreconditionError("one_separation: side f-values must be {2,3}, got " +
                                std::to_string(fa) + "," + std::to_string(fb));
    if (fa != 2) std::swap(ga, gb);
    VertexId c = g.fresh_vertex_id(), d = c + 1;
    return {ga.add_edge(cp.a, cp.b), glue_k4(gb, cp.a, cp.b, c, d)};
}

std::pair<Graph, Graph> two_separation(const Graph& g, const CutPair& cp) {
    check_cutpair(g, cp);
    if (!g.has_edge(cp.a, cp.b)) throw PreconditionError("two_separation: ab must be present");
    Graph ga = induced_subgraph(g, with_pair(cp.side_a, cp.a, cp.b));
    Graph gb = induced_subgraph(g, with_pair(cp.side_b, cp.a, cp.b));
    if (f_value(ga) != 2 || f_value(gb) != 2)
        throw PreconditionError("two_separation: both side f-values must equal 2");
    VertexId c = g.fresh_vertex_id(), d = c + 1;
    return {glue_k4(ga, cp.a, cp.b, c, d), glue_k4(gb, cp.a, cp.b, c, d)};
}

std::pair<Graph, Graph> three_separation(const Graph& g, const EdgeCutset3& cs) {
    std::set<VertexId> in_a(cs.side_a.begin(), cs.side_a.end());
    std::set<VertexId> in_b(cs.side_b.begin(), cs.side_b.end());
    if (in_a.size() < 2 || in_b.size() < 2)
        throw PreconditionError("three_separation: cutset is trivial");
    if (in_a.size() + in_b.size() != static_cast<size_t>(g.vertex_count()))
        throw PreconditionError("three_separation: sides must partition V");
    std::set<VertexId> endpoints;
    std::array<VertexId, 3> end_a{}, end_b{};
    for (int i = 0; i < 3; ++i) {
        auto [x, y] = cs.edges[i];
        if (!g.has_edge(x, y)) throw PreconditionError("three_separation: cut edge not in G");
        if (in_a.count(x) && in_b.count(y)) {
            end_a[i] = x;
            end_b[i] = y;
        } else if (in_a.count(y) && in_b.count(x)) {
            end_a[i] = y;
            end_b[i] = x;
        } else {
            throw PreconditionError("three_separation: cut edge does not cross the sides");
        }
        endpoints.insert(x);
        endpoints.insert(y);
    }
    if (endpoints.size() != 6)
        throw PreconditionError("three_separation: cutset edges must be vertex-disjoint");
    std::set<Edge> cut(cs.edges.begin(), cs.edges.end());
    for (const auto& [u, v] : g.edges())
        if (!cut.count(make_edge(u, v)) &&
            ((in_a.count(u) && in_b.count(v)) || (in_a.count(v) && in_b.count(u))))
            throw PreconditionError("three_separation: extra edge crosses the cut");
    VertexId fresh = g.fresh_vertex_id();
    Graph ga = induced_subgraph(g, cs.side_a).add_vertex(fresh);
    for (VertexId x : end_a) ga = ga.add_edge(fresh, x);
    Graph gb = induced_subgraph(g, cs.side_b).add_vertex(fresh);
    for (VertexId x : end_b) gb = gb.add_edge(fresh, x);
    return {ga, gb};
}

}  // namespace m22
