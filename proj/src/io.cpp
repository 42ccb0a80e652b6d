#include "hplanar/io.hpp"

#include <fstream>
#include <sstream>

namespace hplanar {

namespace {

int parse_vertex(const std::string& tok, int n, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0 || v >= n) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    long line_no = 0;
    Graph g;
    int edges_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (n < 0) {
            if (toks.size() != 2) throw ParseError("header must be 'n m' (line " + std::to_string(line_no) + ")");
            n = parse_vertex(toks[0], INT32_MAX, "vertex count");
            try {
                m = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError("bad edge count '" + toks[1] + "'");
            }
            if (m < 0) throw ParseError("bad edge count '" + toks[1] + "'");
            g = Graph(n);
            continue;
        }
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("edge line must be 'u v [p/q]' (line " + std::to_string(line_no) + ")");
        int u = parse_vertex(toks[0], n, "vertex");
        int v = parse_vertex(toks[1], n, "vertex");
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v)) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        if (toks.size() == 3) {
            auto w = parse_rational(toks[2]);
            if (!w || *w < 0) throw ParseError("bad weight '" + toks[2] + "'");
            g.add_edge(u, v, *w);
        } else {
            g.add_edge(u, v);
        }
        ++edges_read;
    }
    if (n < 0) throw ParseError("empty graph input");
    if (edges_read != m)
        throw ParseError("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges_read));
    return g;
}

std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v;
        if (g.has_explicit_weight(u, v)) out << ' ' << format_rational(g.weight(u, v));
        out << '\n';
    }
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        nlohmann::json e = {{"u", u}, {"v", v}};
        if (g.has_explicit_weight(u, v)) e["w"] = format_rational(g.weight(u, v));
        edges.push_back(e);
    }
    return {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        if (n < 0) throw ParseError("negative vertex count");
        Graph g(n);
        for (const auto& e : j.at("edges")) {
            int u = e.at("u").get<int>(), v = e.at("v").get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range in edge list");
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
            if (g.has_edge(u, v)) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            if (e.contains("w")) {
                auto w = parse_rational(e.at("w").get<std::string>());
                if (!w || *w < 0) throw ParseError("bad weight in edge list");
                g.add_edge(u, v, *w);
            } else {
                g.add_edge(u, v);
            }
        }
        if (j.contains("m") && j.at("m").get<int>() != g.num_edges())
            throw ParseError("edge count field disagrees with edge list");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON in '") + path + "': " + e.what());
        }
    }
    return parse_graph_text(text);
}

}  // namespace hplanar
