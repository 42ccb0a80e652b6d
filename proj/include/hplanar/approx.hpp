#ifndef HPLANAR_APPROX_HPP
#define HPLANAR_APPROX_HPP

#include <vector>

#include "hplanar/decomposition.hpp"
#include "hplanar/graph.hpp"
#include "hplanar/hclass.hpp"
#include "hplanar/modulator.hpp"
#include "hplanar/planarity.hpp"
#include "hplanar/rational.hpp"

namespace hplanar {

// Maximum independent set by dynamic programming over a tree H-decomposition:
// subset-per-bag states on the base decomposition, leaf components resolved by
// the class solver conditioned on the boundary choice. Throws when the class
// has no independent-set solver or the decomposition fails verification.
VertexSet treedec_is_dp(const Graph& g, const HClass& h, const HTreeDecomposition& htd);

// One full run of the layered independent-set scheme.
struct BakerRun {
    Rational epsilon;
    int k;                          // smallest k with 2/k <= epsilon
    std::vector<VertexSet> strata;  // partition of x by BFS layer residue mod k
    int chosen;                     // index of the winning stratum
    VertexSet result;               // independent in g, size >= (1-eps) * alpha(g)
};

BakerRun baker_independent_set(const Graph& g, const HClass& h, const PlanarModulator& x,
                               const Rational& epsilon);

// Proper coloring with at most chi(G) + palette colors (palette 4 or 5 per
// the planar coloring guarantee): one shared exact palette for the
// components, a fresh planar palette for the modulator torso.
Coloring additive_color(const Graph& g, const HClass& h, const PlanarModulator& x);

// Proper coloring with at most chi(G) + depth * palette colors: a fresh
// planar palette per elimination layer.
Coloring ptd_color(const Graph& g, const HClass& h, const EliminationSequence& seq);

// Proper coloring with at most chi(G) + max{palette, k+1} colors from a
// planar-width decomposition of the modulator torso: bags are colored
// top-down, extending the colors fixed by the parent adhesion. The bound is
// escalated (and reflected in color_count) in the rare case an extension
// needs more colors than the target palette.
Coloring ptw_color(const Graph& g, const HClass& h, const HTreeDecomposition& htd,
                   const std::vector<BagTag>& tags, int k);

}  // namespace hplanar

#endif
