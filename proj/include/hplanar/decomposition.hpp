#ifndef HPLANAR_DECOMPOSITION_HPP
#define HPLANAR_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hplanar/graph.hpp"

namespace hplanar {

class HClass;

struct TreeDecomposition {
    std::vector<VertexSet> bags;                  // bag of tree node i
    std::vector<std::pair<int, int>> tree_edges;  // tree on nodes 0..bags-1

    int width() const {
        int w = -1;
        for (const VertexSet& b : bags) w = std::max(w, b.count() - 1);
        return w;
    }
};

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td, std::string* why = nullptr);

// Tree decomposition of torso(g, x) plus the components of g - x, each
// attested to lie in H and attached at a bag containing its neighborhood.
struct HTreeDecomposition {
    VertexSet x;
    TreeDecomposition base;  // decomposition of torso(g, x), bags in g's vertex ids
    std::vector<VertexSet> leaf_components;
};

bool verify_h_tree_decomposition(const Graph& g, const HClass& h, const HTreeDecomposition& htd,
                                 std::string* why = nullptr);

// Successive planar-torso layers X_1..X_k; removing them all must leave only
// components in H (the empty graph for pure planar treedepth).
struct EliminationSequence {
    std::vector<VertexSet> layers;
};

bool verify_elimination_sequence(const Graph& g, const HClass& h, const EliminationSequence& seq,
                                 std::string* why = nullptr);

enum class BagTag { small, planar_torso };

struct PlanarWidthDecomposition {
    TreeDecomposition base;
    std::vector<BagTag> tags;  // one per bag
};

bool verify_planar_width(const Graph& g, const PlanarWidthDecomposition& pw, int k, std::string* why = nullptr);

// --- exact solvers (desk scale) ---

struct EliminationOrderResult {
    int width;
    std::vector<int> order;
};

// Exact treewidth by subset dynamic programming; nullopt above the ceiling.
std::optional<EliminationOrderResult> exact_treewidth(const Graph& g, int size_ceiling = 18);

// Min-fill heuristic elimination order (any size).
EliminationOrderResult min_fill_elimination(const Graph& g);

// Tree decomposition induced by an elimination order (bags = vertex plus its
// live neighborhood at elimination time).
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order);

// Exact treedepth (ordinary); nullopt above ceiling.
std::optional<int> exact_treedepth(const Graph& g, int size_ceiling = 14);

struct PtdResult {
    int depth;
    EliminationSequence seq;
};

// Exact H-planar treedepth with certificate; depth capped at k_max
// (returns nullopt when ptd > k_max).
std::optional<PtdResult> planar_treedepth_exact(const Graph& g, const HClass& h, int k_max,
                                                int size_ceiling = 14);

// Planar treewidth decision: does g admit a tree decomposition where every
// bag is small (<= k+1) or has a planar torso? On success, optionally emits a
// decomposition that passes verify_planar_width.
bool planar_treewidth_at_most(const Graph& g, int k, int size_ceiling = 14,
                              PlanarWidthDecomposition* certificate = nullptr);

bool quasi_4_connected(const Graph& g, int size_ceiling = 18);

// Adhesions (bag intersections) along each tree edge of a decomposition.
std::vector<VertexSet> adhesions(const TreeDecomposition& td);

nlohmann::json tree_decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j, int universe);

}  // namespace hplanar

#endif
