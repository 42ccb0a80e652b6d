#ifndef HPLANAR_HCLASS_HPP
#define HPLANAR_HCLASS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hplanar/graph.hpp"
#include "hplanar/rational.hpp"

namespace hplanar {

// A target graph class H: a membership predicate plus structural flags and
// optional per-class sub-solvers. Values are immutable once built and the
// predicates are pure, so instances can be shared freely.
class HClass {
public:
    std::string name;
    std::function<bool(const Graph&)> membership;
    bool hereditary = false;
    bool union_closed = false;

    // Empty std::function means "no specialist; use a generic fallback".
    std::function<int(const Graph&)> chromatic_solver;
    std::function<VertexSet(const Graph&)> independent_set_solver;
    std::function<Rational(const Graph&)> pmm_solver;

    // Set when this class is a size restriction H^(k) of a base class.
    std::optional<int> size_cap;

    bool contains(const Graph& g) const { return membership(g); }
};

// Builtin classes: edgeless, forests, bipartite, planar, chordal, cluster,
// complete_K4_only, all_graphs, perfect. The perfect-graph membership test is
// brute force (odd hole / odd antihole search) and throws above n = 18.
HClass builtin_hclass(const std::string& name);
const std::vector<std::string>& builtin_hclass_names();

// H^(k): members of h with at most k vertices.
HClass restrict_to_size(const HClass& h, int k);

// Smallest graph not in h, enumerating by order, then edge count, then the
// numeric code of the edge bitmask. Requires h hereditary. Absent when every
// graph with at most `ceiling` vertices is a member (inconclusive for classes
// other than all_graphs).
std::optional<Graph> min_forbidden_subgraph(const HClass& h, int ceiling = 6);

}  // namespace hplanar

#endif
