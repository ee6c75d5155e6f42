#include "m22/trace.hpp"

#include "m22/io.hpp"
#include "m22/pebble.hpp"

namespace m22 {

using nlohmann::json;

const char* base_kind_name(BaseKind k) {
    switch (k) {
        case BaseKind::K5minusE: return "K5minusE";
        case BaseKind::K4edgeK4: return "K4edgeK4";
        case BaseKind::K4vertexK4: return "K4vertexK4";
    }
    return "?";
}

BaseKind base_kind_from_name(const std::string& name) {
    for (BaseKind k : {BaseKind::K5minusE, BaseKind::K4edgeK4, BaseKind::K4vertexK4})
        if (name == base_kind_name(k)) return k;
    throw ParseError("unknown base kind: " + name);
}

Graph base_graph(BaseKind k) {
    switch (k) {
        case BaseKind::K5minusE: {
            // K5 on 0..4 minus the edge 34
            std::vector<Edge> es;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (!(i == 3 && j == 4)) es.push_back({i, j});
            return Graph({0, 1, 2, 3, 4}, es);
        }
        case BaseKind::K4edgeK4: {
            // two K4s sharing the edge 01: {0,1,2,3} and {0,1,4,5}
            std::vector<Edge> es{{0, 1}};
            for (int x : {2, 3}) es.insert(es.end(), {{0, x}, {1, x}});
            es.push_back({2, 3});
            for (int x : {4, 5}) es.insert(es.end(), {{0, x}, {1, x}});
            es.push_back({4, 5});
            return Graph({0, 1, 2, 3, 4, 5}, es);
        }
        case BaseKind::K4vertexK4: {
            // two K4s sharing vertex 0 ({0,1,2,3} and {0,4,5,6}) plus edge 14
            std::vector<Edge> es;
            for (int i : {0, 1, 2, 3})
                for (int j : {0, 1, 2, 3})
                    if (i < j) es.push_back({i, j});
            for (int i : {0, 4, 5, 6})
                for (int j : {0, 4, 5, 6})
                    if (i < j) es.push_back({i, j});
            es.push_back({1, 4});
            return Graph({0, 1, 2, 3, 4, 5, 6}, es);
        }
    }
    throw PreconditionError("bad base kind");
}

json ConstructionTrace::to_json() const {
    json j;
    j["leaves"] = json::array();
    for (const auto& leaf : leaves)
        j["leaves"].push_back({{"component", leaf.component}, {"base", base_kind_name(leaf.base)}});
    j["steps"] = json::array();
    for (const auto& step : steps) {
        json s;
        if (const auto* h = std::get_if<Hen2Step>(&step)) {
            s["kind"] = "Henneberg2";
            s["component"] = h->component;
            s["params"] = {{"u", h->u}, {"w", h->w}, {"z", h->z}, {"v", h->v}};
        } else if (const auto* s1 = std::get_if<Sum1Step>(&step)) {
            s["kind"] = "Sum1";
            s["left"] = s1->left;
            s["right"] = s1->right;
            s["out"] = s1->out;
            s["params"] = {{"a1", s1->a1}, {"b1", s1->b1}, {"a2", s1->a2},
                           {"b2", s1->b2}, {"c2", s1->c2}, {"d2", s1->d2}};
        } else if (const auto* s2 = std::get_if<Sum2Step>(&step)) {
            s["kind"] = "Sum2";
            s["left"] = s2->left;
            s["right"] = s2->right;
            s["out"] = s2->out;
            s["params"] = {{"a1", s2->a1}, {"b1", s2->b1}, {"c1", s2->c1}, {"d1", s2->d1},
                           {"a2", s2->a2}, {"b2", s2->b2}, {"c2", s2->c2}, {"d2", s2->d2}};
        } else if (const auto* s3 = std::get_if<Sum3Step>(&step)) {
            s["kind"] = "Sum3";
            s["left"] = s3->left;
            s["right"] = s3->right;
            s["out"] = s3->out;
            s["params"] = {{"v1", s3->v1}, {"a1", s3->a1}, {"b1", s3->b1}, {"c1", s3->c1},
                           {"v2", s3->v2}, {"a2", s3->a2}, {"b2", s3->b2}, {"c2", s3->c2}};
        }
        j["steps"].push_back(s);
    }
    return j;
}

ConstructionTrace ConstructionTrace::from_json(const json& j) {
    ConstructionTrace t;
    try {
        for (const auto& leaf : j.at("leaves"))
            t.leaves.push_back({leaf.at("component").get<int>(),
                                base_kind_from_name(leaf.at("base").get<std::string>())});
        for (const auto& s : j.at("steps")) {
            const std::string kind = s.at("kind").get<std::string>();
            const auto& p = s.at("params");
            if (kind == "Henneberg2") {
                t.steps.push_back(Hen2Step{s.at("component").get<int>(), p.at("u").get<int>(),
                                           p.at("w").get<int>(), p.at("z").get<int>(),
                                           p.at("v").get<int>()});
            } else if (kind == "Sum1") {
                t.steps.push_back(Sum1Step{s.at("left").get<int>(), s.at("right").get<int>(),
                                           s.at("out").get<int>(), p.at("a1").get<int>(),
                                           p.at("b1").get<int>(), p.at("a2").get<int>(),
                                           p.at("b2").get<int>(), p.at("c2").get<int>(),
                                           p.at("d2").get<int>()});
            } else if (kind == "Sum2") {
                t.steps.push_back(Sum2Step{s.at("left").get<int>(), s.at("right").get<int>(),
                                           s.at("out").get<int>(), p.at("a1").get<int>(),
                                           p.at("b1").get<int>(), p.at("c1").get<int>(),
                                           p.at("d1").get<int>(), p.at("a2").get<int>(),
                                           p.at("b2").get<int>(), p.at("c2").get<int>(),
                                           p.at("d2").get<int>()});
            } else if (kind == "Sum3") {
                t.steps.push_back(Sum3Step{s.at("left").get<int>(), s.at("right").get<int>(),
                                           s.at("out").get<int>(), p.at("v1").get<int>(),
                                           p.at("a1").get<int>(), p.at("b1").get<int>(),
                                           p.at("c1").get<int>(), p.at("v2").get<int>(),
                                           p.at("a2").get<int>(), p.at("b2").get<int>(),
                                           p.at("c2").get<int>()});
            } else {
                throw ParseError("unknown trace step kind: " + kind);
            }
        }
    } catch (const json::exception& err) {
        throw ParseError(std::string("bad trace JSON: ") + err.what());
    }
    return t;
}

namespace {

Graph take_component(std::map<int, Graph>& live, int id) {
    auto it = live.find(id);
    if (it == live.end())
        throw PreconditionError("trace references missing component " + std::to_string(id));
    Graph g = std::move(it->second);
    live.erase(it);
    return g;
}

void put_component(std::map<int, Graph>& live, int id, Graph g, bool validate) {
    if (live.count(id))
        throw PreconditionError("trace reuses live component id " + std::to_string(id));
    if (validate && !is_circuit(g))
        throw PreconditionError("trace step produced a non-circuit component");
    live.emplace(id, std::move(g));
}

}  // namespace

void apply_trace_step(std::map<int, Graph>& live, const TraceStep& step,
                      bool validate_circuits) {
    if (const auto* h = std::get_if<Hen2Step>(&step)) {
        Graph g = take_component(live, h->component);
        put_component(live, h->component, henneberg2(g, {h->u, h->w}, h->z, h->v),
                      validate_circuits);
    } else if (const auto* s1 = std::get_if<Sum1Step>(&step)) {
        Graph l = take_component(live, s1->left);
        Graph r = take_component(live, s1->right);
        put_component(live, s1->out,
                      one_sum(l, {s1->a1, s1->b1}, r, {s1->a2, s1->b2, s1->c2, s1->d2}),
                      validate_circuits);
    } else if (const auto* s2 = std::get_if<Sum2Step>(&step)) {
        Graph l = take_component(live, s2->left);
        Graph r = take_component(live, s2->right);
        put_component(live, s2->out,
                      two_sum(l, {s2->a1, s2->b1, s2->c1, s2->d1}, r,
                              {s2->a2, s2->b2, s2->c2, s2->d2}),
                      validate_circuits);
    } else if (const auto* s3 = std::get_if<Sum3Step>(&step)) {
        Graph l = take_component(live, s3->left);
        Graph r = take_component(live, s3->right);
        put_component(live, s3->out,
                      three_sum(l, s3->v1, r, s3->v2,
                                {{{s3->a1, s3->a2}, {s3->b1, s3->b2}, {s3->c1, s3->c2}}}),
                      validate_circuits);
    }
}

Graph replay(const ConstructionTrace& trace) {
    std::map<int, Graph> live;
    if (trace.leaves.empty()) throw PreconditionError("trace has no leaves");
    for (const auto& leaf : trace.leaves)
        put_component(live, leaf.component, base_graph(leaf.base), true);
    for (const auto& step : trace.steps) apply_trace_step(live, step, true);
    if (live.size() != 1)
        throw PreconditionError("trace must end with exactly one component, has " +
                                std::to_string(live.size()));
    return live.begin()->second;
}

}  // namespace m22
