#include "emcover/io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace emcover {

namespace {

int get_int(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw std::invalid_argument(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

}  // namespace

json to_json(const Hypergraph& h) {
    return json{{"n", h.n()}, {"r", h.r()}, {"edges", h.edges()}};
}

json to_json(const Digraph& d) {
    json arcs = json::array();
    for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
    return json{{"n", d.n()}, {"arcs", std::move(arcs)}, {"oriented", d.oriented()}};
}

bool is_digraph_json(const json& j) { return j.is_object() && j.contains("arcs"); }

Hypergraph hypergraph_from_json(const json& j) {
    const int n = get_int(j, "n");
    const int r = get_int(j, "r");
    if (!j.contains("edges") || !j.at("edges").is_array()) throw std::invalid_argument("missing \"edges\" array");
    std::vector<VertexSet> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array()) throw std::invalid_argument("edge is not an array");
        VertexSet s;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertex is not an integer");
            s.push_back(v.get<int>());
        }
        edges.push_back(std::move(s));
    }
    return make_hypergraph(n, r, std::move(edges));
}

Digraph digraph_from_json(const json& j) {
    const int n = get_int(j, "n");
    if (!j.contains("arcs") || !j.at("arcs").is_array()) throw std::invalid_argument("missing \"arcs\" array");
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
            throw std::invalid_argument("arc is not a pair of integers");
        }
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    bool oriented = false;
    if (j.contains("oriented")) {
        if (!j.at("oriented").is_boolean()) throw std::invalid_argument("\"oriented\" is not a boolean");
        oriented = j.at("oriented").get<bool>();
    }
    return Digraph(n, std::move(arcs), oriented);
}

std::string to_edgelist(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n() << ' ' << h.r() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
    return os.str();
}

Hypergraph hypergraph_from_edgelist(std::istream& in) {
    std::string line;
    int n = 0;
    int r = 0;
    if (!std::getline(in, line) || !(std::istringstream(line) >> n >> r)) {
        throw std::invalid_argument("edge list: missing \"n r\" header");
    }
    std::vector<VertexSet> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        VertexSet e;
        int v = 0;
        while (ls >> v) e.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("edge list: bad token in line \"" + line + "\"");
        if (!e.empty()) edges.push_back(std::move(e));
    }
    return make_hypergraph(n, r, std::move(edges));
}

}  // namespace emcover
