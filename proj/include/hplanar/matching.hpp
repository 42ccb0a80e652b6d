#ifndef HPLANAR_MATCHING_HPP
#define HPLANAR_MATCHING_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hplanar/graph.hpp"
#include "hplanar/planarity.hpp"
#include "hplanar/rational.hpp"

namespace hplanar {

class HClass;
struct PlanarModulator;

// Weighted perfect-matching count: sum over perfect matchings of the product
// of edge weights. Exhaustive; exact rational.
Rational pmm_bruteforce(const Graph& g, int size_ceiling = 18);

// FKT: pmm of a planar graph via a Pfaffian orientation and an exact
// determinant (pmm^2 = det of the signed skew adjacency matrix).
Rational fkt_pmm(const Graph& g);

// Direct combination identity across a separation of order 2 or 3:
// pmm(g) = sum over gamma subset of A cap B of
//          pmm(G[A] - (A cap B minus gamma)) * pmm(G_B - gamma),
// where G_B is G[B] without the edges inside A cap B. side_pmm evaluates the
// side subgraphs.
Rational combine_separation_pmm(const Graph& g, const Separation& sep,
                                const std::function<Rational(const Graph&)>& side_pmm);

// Conditional counts p_gamma for one side of a separation, keyed by a bitmask
// over the boundary list.
using ConditionalCounts = std::map<uint32_t, Rational>;

struct MatchgateGadget {
    Graph graph;                // weighted, planar, boundary on the outer face
    std::vector<int> boundary;  // 2 or 3 vertices of `graph`
    int parity;                 // feasible gamma have |gamma| = parity (mod 2)
};

// p keyed by bitmask over boundary positions; only parity-feasible entries
// are read (missing entries mean 0). The synthesized gadget is validated
// against pmm_bruteforce for every feasible gamma before being returned.
std::optional<MatchgateGadget> synthesize_matchgate(int boundary_size, int parity,
                                                    const ConditionalCounts& p);

bool validate_matchgate(const MatchgateGadget& gadget, const ConditionalCounts& p);

// Full pipeline for counting on an H-planar graph with verified modulator x:
// replaces each component of g - x hanging on a 2- or 3-vertex boundary by a
// matchgate, then runs FKT on the resulting planar graph. Components the
// pipeline cannot place (see transcript) fall back to the direct combination
// identity.
struct PmmTranscript {
    std::vector<std::string> steps;
};

Rational hplanar_pmm(const Graph& g, const HClass& h, const PlanarModulator& x,
                     PmmTranscript* transcript = nullptr);

}  // namespace hplanar

#endif
