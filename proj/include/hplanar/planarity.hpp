#ifndef HPLANAR_PLANARITY_HPP
#define HPLANAR_PLANARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hplanar/decomposition.hpp"
#include "hplanar/graph.hpp"

namespace hplanar {

// Combinatorial embedding: per-vertex cyclic order of neighbors.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

// Edge set of a subdivision of K5 or K3,3 found in the graph.
struct KuratowskiWitness {
    std::vector<std::pair<int, int>> edges;
};

struct PlanarityResult {
    std::optional<RotationSystem> embedding;
    std::optional<KuratowskiWitness> witness;
    bool planar() const { return embedding.has_value(); }
};

PlanarityResult is_planar(const Graph& g);
inline bool planar(const Graph& g) { return is_planar(g).planar(); }

// Same edge set as g, and Euler's formula holds per connected component.
bool verify_rotation_system(const Graph& g, const RotationSystem& rs, std::string* why = nullptr);
int count_faces(const Graph& g, const RotationSystem& rs);
bool verify_kuratowski_witness(const Graph& g, const KuratowskiWitness& w);

struct Coloring {
    std::vector<int> color;
    int color_count = 0;
};

bool verify_coloring(const Graph& g, const Coloring& c);

// Proper coloring of a planar graph: <= 5 colors always; exact chromatic
// number (hence <= 4) when n is at most four_color_ceiling.
Coloring planar_color(const Graph& g, int four_color_ceiling = 40);

// Exact chromatic number by backtracking (used as an oracle and for the
// component palettes); nullopt above the ceiling.
std::optional<Coloring> exact_color(const Graph& g, int size_ceiling = 20);

struct BfsLayers {
    std::vector<VertexSet> layers;  // layers[i] = vertices at distance i from root
    VertexSet unreachable;
};

BfsLayers bfs_layers(const Graph& g, int root);

// Tree decomposition of a planar graph whose BFS layering (from any root)
// uses at most layers_used consecutive bands; promised width <= 3*layers_used
// + 1. Exact treewidth under the subset-DP ceiling, min-fill above it; throws
// logic_error if the promised bound is violated.
TreeDecomposition few_layer_tree_decomposition(const Graph& g, int layers_used);

}  // namespace hplanar

#endif
