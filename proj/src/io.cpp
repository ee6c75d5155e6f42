#include "m22/io.hpp"

#include <cctype>
#include <set>

namespace m22 {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

json graph_to_json(const MultiGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    j["edges"] = json::array();
    json mult = json::object();
    for (const auto& e : g.edges()) {
        j["edges"].push_back({e.u, e.v});
        if (e.multiplicity > 1)
            mult[std::to_string(e.u) + "-" + std::to_string(e.v)] = e.multiplicity;
    }
    if (!mult.empty()) j["multiplicity"] = mult;
    return j;
}

namespace {

Edge parse_mult_key(const std::string& key) {
    auto dash = key.find('-', key.empty() || key[0] != '-' ? 0 : 1);
    if (dash == std::string::npos) throw ParseError("bad multiplicity key: " + key);
    try {
        return make_edge(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
    } catch (const std::logic_error&) {
        throw ParseError("bad multiplicity key: " + key);
    }
}

struct ParsedParts {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    std::map<Edge, int> mult;
};

ParsedParts parse_parts(const json& j) {
    if (!j.is_object() || !j.contains("edges")) throw ParseError("graph JSON needs an edges array");
    ParsedParts p;
    if (j.contains("vertices")) {
        for (const auto& v : j.at("vertices")) p.vertices.push_back(v.get<VertexId>());
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [u,v] pair");
        try {
            p.edges.push_back(make_edge(e[0].get<VertexId>(), e[1].get<VertexId>()));
        } catch (const PreconditionError& err) {
            throw ParseError(err.what());
        }
    }
    if (p.vertices.empty()) {
        std::set<VertexId> vs;
        for (const auto& [u, v] : p.edges) {
            vs.insert(u);
            vs.insert(v);
        }
        p.vertices.assign(vs.begin(), vs.end());
    }
    if (j.contains("multiplicity")) {
        for (const auto& [key, val] : j.at("multiplicity").items())
            p.mult[parse_mult_key(key)] = val.get<int>();
    }
    return p;
}

}  // namespace

Graph graph_from_json(const json& j) {
    auto p = parse_parts(j);
    for (const auto& [e, m] : p.mult)
        if (m > 1) throw ParseError("multiplicity > 1 in simple graph input");
    try {
        return Graph(p.vertices, p.edges);
    } catch (const PreconditionError& err) {
        throw ParseError(err.what());
    }
}

MultiGraph multigraph_from_json(const json& j) {
    auto p = parse_parts(j);
    std::vector<MultiGraph::MEdge> es;
    for (const auto& [u, v] : p.edges) {
        auto it = p.mult.find({u, v});
        es.push_back({u, v, it == p.mult.end() ? 1 : it->second});
    }
    try {
        return MultiGraph(p.vertices, es);
    } catch (const PreconditionError& err) {
        throw ParseError(err.what());
    }
}

Graph graph_from_graph6(const std::string& s) {
    std::string body = s;
    if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    if (body.empty()) throw ParseError("empty graph6 string");
    size_t pos = 0;
    long n;
    auto byte = [&](size_t i) -> int {
        if (i >= body.size()) throw ParseError("truncated graph6 string");
        int c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte");
        return c - 63;
    };
    if (body[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (body.size() > 1 && body[1] != '~') {
        n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        throw ParseError("graph6 graphs beyond 258047 vertices not supported");
    }
    std::vector<VertexId> vs(n);
    for (long i = 0; i < n; ++i) vs[i] = static_cast<VertexId>(i);
    std::vector<Edge> es;
    long bit = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i, ++bit) {
            int chunk = byte(pos + bit / 6);
            if (chunk & (1 << (5 - bit % 6)))
                es.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        }
    return Graph(vs, es);
}

std::variant<Graph, MultiGraph> parse_graph_input(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw ParseError("empty input");
    if (text[i] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& err) {
            throw ParseError(std::string("bad JSON: ") + err.what());
        }
        bool multi = false;
        if (j.contains("multiplicity"))
            for (const auto& [key, val] : j.at("multiplicity").items()) {
                (void)key;
                if (val.get<int>() > 1) multi = true;
            }
        if (multi) return multigraph_from_json(j);
        return graph_from_json(j);
    }
    return graph_from_graph6(text.substr(i));
}

}  // namespace m22
