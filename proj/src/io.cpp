#include "sandrank/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sandrank {

namespace {

Int as_int(const Json& v, const char* what) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
    return v.get<Int>();
}

} // namespace

MultiGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs keys \"n\" and \"edges\"");
    const Int n = as_int(j.at("n"), "n");
    if (n < 1 || n > 100000) throw std::invalid_argument("graph vertex count out of range");
    const Json& edges = j.at("edges");
    if (!edges.is_array()) throw std::invalid_argument("\"edges\" must be an array");
    std::vector<Edge> list;
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw std::invalid_argument("each edge must be [i, j] or [i, j, multiplicity]");
        const Int u = as_int(e[0], "edge endpoint");
        const Int v = as_int(e[1], "edge endpoint");
        const Int m = e.size() == 3 ? as_int(e[2], "edge multiplicity") : 1;
        if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("edge endpoint outside 1..n");
        list.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), m});
    }
    return MultiGraph::from_edges(static_cast<int>(n), list);
}

Json graph_to_json(const MultiGraph& g) {
    Json edges = Json::array();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.multiplicity(i, j) > 0) edges.push_back({i + 1, j + 1, g.multiplicity(i, j)});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Configuration configuration_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("configuration must be a JSON array of integers");
    std::vector<Int> v;
    for (const Json& x : j) v.push_back(as_int(x, "configuration entry"));
    return Configuration(std::move(v));
}

Json configuration_to_json(const Configuration& f) { return Json(f.values()); }

Json load_json(const std::string& text) {
    std::string body = text;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty JSON input");
    if (text[first] != '[' && text[first] != '{') {
        std::ifstream in(text);
        if (!in) throw std::invalid_argument("cannot read JSON file '" + text + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

Json series_to_json(const TruncatedSeries& s) {
    Json out = Json::object();
    for (const auto& [e, c] : s.terms()) {
        std::string key = "[";
        for (int v = 0; v < s.nvars(); ++v) key += (v ? "," : "") + std::to_string(e[v]);
        key += "]";
        out[key] = c;
    }
    return out;
}

} // namespace sandrank
