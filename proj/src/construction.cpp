#include "m22/construction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "m22/io.hpp"
#include "m22/pebble.hpp"

namespace m22 {

std::optional<BaseKind> classify_base(const Graph& g) {
    for (BaseKind k : {BaseKind::K5minusE, BaseKind::K4edgeK4, BaseKind::K4vertexK4}) {
        Graph base = base_graph(k);
        if (g.vertex_count() == base.vertex_count() && g.edge_count() == base.edge_count() &&
            is_isomorphic(g, base))
            return k;
    }
    return std::nullopt;
}

namespace {

using Iso = std::map<VertexId, VertexId>;  // replay label -> current-graph label

Iso invert(const Iso& m) {
    Iso out;
    for (const auto& [k, v] : m) out[v] = k;
    return out;
}

VertexId max_key(const Iso& m) { return m.rbegin()->first; }

struct Decomposer {
    ConstructionTrace trace;
    int next_component = 0;

    std::pair<int, Iso> leaf(const Graph& g, BaseKind kind) {
        int comp = next_component++;
        trace.leaves.push_back({comp, kind});
        auto iso = find_isomorphism(base_graph(kind), g);
        if (!iso)
            throw TheoremViolation("base classification mismatch", graph_to_json(g).dump());
        return {comp, *iso};
    }

    std::pair<int, Iso> use_inverse_henneberg(const Graph& g, VertexId v, Edge uw) {
        std::vector<VertexId> nbrs = g.neighbors(v);
        VertexId z = -1;
        for (VertexId x : nbrs)
            if (x != uw.first && x != uw.second) z = x;
        Graph smaller = inverse_henneberg2(g, v, uw);
        auto [comp, iso] = decompose_rec(smaller);
        Iso inv = invert(iso);
        VertexId v_replay = max_key(iso) + 1;
        trace.steps.push_back(
            Hen2Step{comp, inv.at(uw.first), inv.at(uw.second), inv.at(z), v_replay});
        iso[v_replay] = v;
        return {comp, iso};
    }

    std::pair<int, Iso> use_three_separation(const Graph& g, const EdgeCutset3& cs) {
        std::set<VertexId> in_a(cs.side_a.begin(), cs.side_a.end());
        std::array<VertexId, 3> end_a{}, end_b{};
        for (int i = 0; i < 3; ++i) {
            auto [x, y] = cs.edges[i];
            end_a[i] = in_a.count(x) ? x : y;
            end_b[i] = in_a.count(x) ? y : x;
        }
        VertexId fresh = g.fresh_vertex_id();
        auto [ga, gb] = three_separation(g, cs);
        check_shrinks(g, ga);
        check_shrinks(g, gb);
        auto [cl, isoL] = decompose_rec(ga);
        auto [cr, isoR] = decompose_rec(gb);
        Iso invL = invert(isoL), invR = invert(isoR);
        int out = next_component++;
        trace.steps.push_back(Sum3Step{cl, cr, out, invL.at(fresh), invL.at(end_a[0]),
                                       invL.at(end_a[1]), invL.at(end_a[2]), invR.at(fresh),
                                       invR.at(end_b[0]), invR.at(end_b[1]), invR.at(end_b[2])});
        Iso iso;
        VertexId delta = max_key(isoL) + 1;
        for (const auto& [r, cur] : isoL)
            if (cur != fresh) iso[r] = cur;
        for (const auto& [r, cur] : isoR)
            if (cur != fresh) iso[r + delta] = cur;
        return {out, iso};
    }

    std::pair<int, Iso> use_one_separation(const Graph& g, const CutPair& cp) {
        VertexId c_fresh = g.fresh_vertex_id(), d_fresh = c_fresh + 1;
        auto [ga, gb] = one_separation(g, cp);  // (f=2 side + ab, f=3 side + K4)
        check_shrinks(g, ga);
        check_shrinks(g, gb);
        auto [cl, isoL] = decompose_rec(ga);
        auto [cr, isoR] = decompose_rec(gb);
        Iso invL = invert(isoL), invR = invert(isoR);
        int out = next_component++;
        trace.steps.push_back(Sum1Step{cl, cr, out, invL.at(cp.a), invL.at(cp.b),
                                       invR.at(cp.a), invR.at(cp.b), invR.at(c_fresh),
                                       invR.at(d_fresh)});
        Iso iso;
        VertexId delta = max_key(isoL) + 1;
        for (const auto& [r, cur] : isoL) iso[r] = cur;
        for (const auto& [r, cur] : isoR)
            if (cur != cp.a && cur != cp.b && cur != c_fresh && cur != d_fresh)
                iso[r + delta] = cur;
        return {out, iso};
    }

    std::pair<int, Iso> use_two_separation(const Graph& g, const CutPair& cp) {
        VertexId c_fresh = g.fresh_vertex_id(), d_fresh = c_fresh + 1;
        auto [ga, gb] = two_separation(g, cp);
        check_shrinks(g, ga);
        check_shrinks(g, gb);
        auto [cl, isoL] = decompose_rec(ga);
        auto [cr, isoR] = decompose_rec(gb);
        Iso invL = invert(isoL), invR = invert(isoR);
        int out = next_component++;
        trace.steps.push_back(Sum2Step{cl, cr, out, invL.at(cp.a), invL.at(cp.b),
                                       invL.at(c_fresh), invL.at(d_fresh), invR.at(cp.a),
                                       invR.at(cp.b), invR.at(c_fresh), invR.at(d_fresh)});
        Iso iso;
        VertexId delta = max_key(isoL) + 1;
        for (const auto& [r, cur] : isoL)
            if (cur != c_fresh && cur != d_fresh) iso[r] = cur;
        for (const auto& [r, cur] : isoR)
            if (cur != cp.a && cur != cp.b && cur != c_fresh && cur != d_fresh)
                iso[r + delta] = cur;
        return {out, iso};
    }

    // first admissible inverse move in scan order, if any
    std::optional<std::pair<VertexId, Edge>> first_admissible(const Graph& g) const {
        for (VertexId v : g.vertices()) {
            if (g.degree(v) != 3) continue;
            auto nbrs = g.neighbors(v);
            for (size_t i = 0; i < nbrs.size(); ++i)
                for (size_t j = i + 1; j < nbrs.size(); ++j)
                    if (is_admissible_pair(g, v, {nbrs[i], nbrs[j]}))
                        return std::pair<VertexId, Edge>{v, {nbrs[i], nbrs[j]}};
        }
        return std::nullopt;
    }

    std::optional<EdgeCutset3> first_disjoint_cutset(const Graph& g) const {
        for (const auto& cs : nontrivial_3_edge_cutsets(g)) {
            std::set<VertexId> ends;
            for (const auto& [x, y] : cs.edges) {
                ends.insert(x);
                ends.insert(y);
            }
            if (ends.size() == 6) return cs;
        }
        return std::nullopt;
    }

    void check_shrinks(const Graph& g, const Graph& piece) const {
        if (piece.vertex_count() >= g.vertex_count())
            throw TheoremViolation("separation failed to shrink the circuit",
                                   graph_to_json(g).dump());
    }

    std::pair<int, Iso> decompose_rec(const Graph& g) {
        if (auto kind = classify_base(g)) return leaf(g, *kind);

        if (!is_2_connected(g))
            throw TheoremViolation("circuit is not 2-connected", graph_to_json(g).dump());
        std::vector<CutPair> pairs = cutpairs(g);
        if (pairs.empty()) {
            if (auto cs = first_disjoint_cutset(g)) return use_three_separation(g, *cs);
            if (auto adm = first_admissible(g))
                return use_inverse_henneberg(g, adm->first, adm->second);
            throw TheoremViolation(
                "3-connected circuit without non-trivial 3-edge cutsets has no admissible node",
                graph_to_json(g).dump());
        }
        for (const auto& cp : pairs)
            if (!cp.ab_present) return use_one_separation(g, cp);
        for (const auto& cp : pairs) {
            // a single component with side f-value 2 and >= 3 vertices, facing
            // a remainder with >= 3 vertices, gives a shrinking 2-separation
            for (size_t i = 0; i < cp.components.size(); ++i) {
                const auto& comp = cp.components[i];
                size_t rest = 0;
                for (size_t j = 0; j < cp.components.size(); ++j)
                    if (j != i) rest += cp.components[j].size();
                if (comp.size() < 3 || rest < 3) continue;
                std::vector<VertexId> side = comp;
                side.push_back(cp.a);
                side.push_back(cp.b);
                if (f_value(induced_subgraph(g, side)) != 2) continue;
                CutPair split;
                split.a = cp.a;
                split.b = cp.b;
                split.ab_present = true;
                split.side_a = comp;
                for (size_t j = 0; j < cp.components.size(); ++j)
                    if (j != i)
                        split.side_b.insert(split.side_b.end(), cp.components[j].begin(),
                                            cp.components[j].end());
                std::sort(split.side_b.begin(), split.side_b.end());
                return use_two_separation(g, split);
            }
        }
        // every cutpair hangs a K4: scan all inverse moves, then 3-separations
        if (auto adm = first_admissible(g))
            return use_inverse_henneberg(g, adm->first, adm->second);
        if (auto cs = first_disjoint_cutset(g)) return use_three_separation(g, *cs);
        throw TheoremViolation("no move applies to circuit", graph_to_json(g).dump());
    }
};

}  // namespace

ConstructionTrace decompose(const Graph& g) {
    if (!is_circuit(g)) throw PreconditionError("decompose requires a circuit");
    Decomposer d;
    d.decompose_rec(g);
    return std::move(d.trace);
}

namespace {

struct Generator {
    std::mt19937_64 rng;
    ConstructionTrace trace;
    std::map<int, Graph> live;
    int next_component = 0;

    explicit Generator(unsigned long long seed) : rng(seed) {}

    int rand_below(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

    int pick_weight(const std::vector<int>& weights) {
        int total = 0;
        for (int w : weights) total += w;
        int r = rand_below(total);
        for (size_t i = 0; i < weights.size(); ++i) {
            if (r < weights[i]) return static_cast<int>(i);
            r -= weights[i];
        }
        return 0;
    }

    int leaf(BaseKind kind) {
        int comp = next_component++;
        trace.leaves.push_back({comp, kind});
        live.emplace(comp, base_graph(kind));
        return comp;
    }

    void step(const TraceStep& s) {
        trace.steps.push_back(s);
        apply_trace_step(live, s, false);
    }

    int hen2(int comp) {
        const Graph& g = live.at(comp);
        Edge e = g.edges()[rand_below(g.edge_count())];
        std::vector<VertexId> others;
        for (VertexId v : g.vertices())
            if (v != e.first && v != e.second) others.push_back(v);
        VertexId z = others[rand_below(static_cast<int>(others.size()))];
        step(Hen2Step{comp, e.first, e.second, z, g.fresh_vertex_id()});
        return comp;
    }

    int sum1(int left, BaseKind right_kind) {
        const Graph& l = live.at(left);
        Edge e = l.edges()[rand_below(l.edge_count())];
        int right = leaf(right_kind);
        int out = next_component++;
        // hanging K4 (0,1,2,3) of either base kind
        step(Sum1Step{left, right, out, e.first, e.second, 0, 1, 2, 3});
        return out;
    }

    int sum3(int left, int right) {
        auto pick_node = [&](const Graph& g) {
            std::vector<VertexId> nodes;
            for (VertexId v : g.vertices())
                if (g.degree(v) == 3) nodes.push_back(v);
            return nodes[rand_below(static_cast<int>(nodes.size()))];
        };
        const Graph& l = live.at(left);
        const Graph& r = live.at(right);
        VertexId v1 = pick_node(l), v2 = pick_node(r);
        auto n1 = l.neighbors(v1);
        auto n2 = r.neighbors(v2);
        // random matching: permute the right side
        for (int i = 2; i > 0; --i) std::swap(n2[i], n2[rand_below(i + 1)]);
        int out = next_component++;
        step(Sum3Step{left, right, out, v1, n1[0], n1[1], n1[2], v2, n2[0], n2[1], n2[2]});
        return out;
    }

    // grows a component from K4edgeK4 while keeping its K4 on (0,1,2,3)
    // hanging: splits avoid that K4's vertices entirely except 0,1 as plain
    // endpoints of foreign edges
    int build_with_hanging(int n) {
        int comp = leaf(BaseKind::K4edgeK4);
        while (live.at(comp).vertex_count() < n) {
            const Graph& g = live.at(comp);
            std::vector<Edge> usable;
            for (const auto& [u, v] : g.edges()) {
                bool u_in = u >= 0 && u <= 3, v_in = v >= 0 && v <= 3;
                if (u == 2 || u == 3 || v == 2 || v == 3) continue;
                if (u_in && v_in) continue;  // keep the K4 intact
                usable.push_back({u, v});
            }
            Edge e = usable[rand_below(static_cast<int>(usable.size()))];
            std::vector<VertexId> zs;
            for (VertexId v : g.vertices())
                if (v != e.first && v != e.second && v != 2 && v != 3) zs.push_back(v);
            VertexId z = zs[rand_below(static_cast<int>(zs.size()))];
            step(Hen2Step{comp, e.first, e.second, z, g.fresh_vertex_id()});
        }
        return comp;
    }

    int sum2(int left, int right) {
        int out = next_component++;
        step(Sum2Step{left, right, out, 0, 1, 2, 3, 0, 1, 2, 3});
        return out;
    }

    int build(int n) {
        if (n == 5) return leaf(BaseKind::K5minusE);
        if (n == 6) return rand_below(2) == 0 ? leaf(BaseKind::K4edgeK4) : hen2(build(5));
        if (n == 7) {
            switch (pick_weight({2, 2, 1})) {
                case 0: return leaf(BaseKind::K4vertexK4);
                case 1: return hen2(build(6));
                default: return sum1(build(5), BaseKind::K4edgeK4);
            }
        }
        switch (pick_weight({40, 15, 10, 20, 15})) {
            case 0:
                return hen2(build(n - 1));
            case 1:
                return sum1(build(n - 2), BaseKind::K4edgeK4);
            case 2:
                return sum1(build(n - 3), BaseKind::K4vertexK4);
            case 3: {
                int n1 = 5 + rand_below(n + 2 - 5 - 5 + 1);
                return sum3(build(n1), build(n + 2 - n1));
            }
            default: {
                int n1 = 6 + rand_below(n + 6 - 6 - 6 + 1);
                return sum2(build_with_hanging(n1), build_with_hanging(n + 6 - n1));
            }
        }
    }
};

}  // namespace

GeneratedCircuit random_circuit(int n, unsigned long long seed) {
    if (n < 5) throw PreconditionError("random_circuit requires n >= 5");
    Generator gen(seed);
    int comp = gen.build(n);
    return {gen.live.at(comp), std::move(gen.trace)};
}

std::vector<CanonicalForm> enumerate_circuits(int n) {
    if (n > 8) throw PreconditionError("enumerate_circuits capped at n = 8");
    if (n < 5) return {};
    std::vector<Graph> level{Graph({}, {})};
    for (int target = 1; target <= 2 * n - 2; ++target) {
        std::set<std::vector<int>> seen;
        std::vector<Graph> next;
        auto consider = [&](const Graph& h) {
            if (!is_sparse(h)) return;
            auto cf = canonical_form(h, n);
            if (seen.insert(cf.key()).second) {
                std::vector<VertexId> vs(cf.n);
                for (int i = 0; i < cf.n; ++i) vs[i] = i;
                next.push_back(Graph(vs, cf.edges));
            }
        };
        for (const Graph& g : level) {
            const int v = g.vertex_count();
            for (int i = 0; i < v; ++i)
                for (int j = i + 1; j < v; ++j)
                    if (!g.has_edge(i, j)) consider(g.add_edge(i, j));
            if (v + 1 <= n)
                for (int i = 0; i < v; ++i) consider(g.add_vertex(v).add_edge(i, v));
            if (v + 2 <= n) consider(g.add_vertex(v).add_vertex(v + 1).add_edge(v, v + 1));
        }
        level = std::move(next);
    }
    std::set<std::vector<int>> keys;
    std::vector<CanonicalForm> out;
    for (const Graph& t : level) {
        if (t.vertex_count() != n) continue;  // sparse with 2n-2 edges spans n anyway
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (t.has_edge(i, j)) continue;
                Graph c = t.add_edge(i, j);
                if (!is_circuit(c)) continue;
                auto cf = canonical_form(c, n);
                if (keys.insert(cf.key()).second) out.push_back(std::move(cf));
            }
    }
    std::sort(out.begin(), out.end(),
              [](const CanonicalForm& a, const CanonicalForm& b) { return a.key() < b.key(); });
    return out;
}

}  // namespace m22
