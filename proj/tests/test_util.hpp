#ifndef HPLANAR_TEST_UTIL_HPP
#define HPLANAR_TEST_UTIL_HPP

#include "hplanar/graph.hpp"
#include "hplanar/rng.hpp"

namespace hplanar::testutil {

inline Graph random_graph(Rng& rng, int n, uint64_t edge_num, uint64_t edge_den) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_num, edge_den)) g.add_edge(u, v);
    return g;
}

// Random connected graph: random graph plus a random spanning tree.
inline Graph random_connected_graph(Rng& rng, int n, uint64_t edge_num, uint64_t edge_den) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.range(0, v - 1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng.chance(edge_num, edge_den)) g.add_edge(u, v);
    return g;
}

}  // namespace hplanar::testutil

#endif
