#ifndef HPLANAR_IO_HPP
#define HPLANAR_IO_HPP

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "hplanar/graph.hpp"

namespace hplanar {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: header "n m", then m lines "u v" or "u v p/q".
Graph parse_graph_text(const std::string& text);
std::string write_graph_text(const Graph& g);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Reads a graph from a file; JSON when the first non-space byte is '{'.
Graph load_graph_file(const std::string& path);

}  // namespace hplanar

#endif
