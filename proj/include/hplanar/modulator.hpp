#ifndef HPLANAR_MODULATOR_HPP
#define HPLANAR_MODULATOR_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hplanar/graph.hpp"
#include "hplanar/hclass.hpp"
#include "hplanar/planarity.hpp"

namespace hplanar {

// A verified planar H-modulator: torso(g, x) is planar (embedding attached)
// and every component of g - x lies in H.
struct PlanarModulator {
    VertexSet x;
    RotationSystem torso_embedding;
    std::vector<std::pair<VertexSet, std::string>> component_certificates;
};

// True iff torso(g, x) is planar and every component of g - x is in h.
// Diagnostics name the first failing component or report the torso failure.
bool verify_planar_modulator(const Graph& g, const HClass& h, const VertexSet& x,
                             std::string* why = nullptr);

// Builds the attested certificate for a valid modulator; nullopt otherwise.
std::optional<PlanarModulator> attest_planar_modulator(const Graph& g, const HClass& h,
                                                       const VertexSet& x);

// Exhaustive search for a smallest modulator; ties broken by the
// lexicographically least sorted vertex list.
std::optional<PlanarModulator> brute_force_planar_modulator(const Graph& g, const HClass& h,
                                                            int size_ceiling = 22);

// H-planarity decision by a pruned branching search: hit a minimal non-member
// witness in some component, or hit a component providing a clique edge of a
// Kuratowski witness in the torso. Exact, and much faster than the subset
// sweep on padded instances.
bool decide_h_planarity(const Graph& g, const HClass& h);

// Big-leaf search: a modulator S such that some component of g - S has size
// >= a, found through the order-<=4 separation enumeration. Complete on
// (a,4)-unbreakable inputs.
std::optional<PlanarModulator> big_leaf_search(const Graph& g, const HClass& h, int a);

struct SplitterFamily {
    int universe_size;
    int a, b;
    std::vector<VertexSet> sets;
};

// Deterministic family: for every disjoint (A, B) with |A| <= a, |B| <= b,
// some member R has A subset of R and B disjoint from R.
SplitterFamily splitter_family(int universe_size, int a, int b);
bool verify_splitter_family(const SplitterFamily& fam);

// Target class G_k for the big-leaf G|>H search.
struct GHTarget {
    enum class Kind { ptw, ptd, td, tw, size };
    Kind kind;
    int k;
};

// True iff torso(g, x) lies in the target class and every component of
// g - x is in h.
bool verify_gh_modulator(const Graph& g, const HClass& h, GHTarget target, const VertexSet& x);

// Big-leaf G_k|>H-modulator search over a splitter family: for each guess U,
// derive A_U = N(union of non-member components), the unique big component,
// a minimum H-deletion set inside it, and try every Y outside its closed
// neighborhood. Complete on suitably unbreakable inputs.
std::optional<VertexSet> big_leaf_GH_search(const Graph& g, const HClass& h, GHTarget target, int a);

// Minimum set S (at most `budget` vertices) whose removal puts every
// component of g - S into h; nullopt when none that small exists.
std::optional<VertexSet> min_h_deletion(const Graph& g, const HClass& h, int budget);

// Upgrades a decision oracle to a constructive one by the padding
// self-reduction: per vertex, attach five rooted copies of the minimum
// forbidden subgraph and keep the vertex iff the padded graph still passes.
// Throws on an inconsistent oracle (the assembled set fails verification).
PlanarModulator self_reduce_modulator(const Graph& g, const HClass& h,
                                      const std::function<bool(const Graph&)>& decide);

}  // namespace hplanar

#endif
