#include "hplanar/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace hplanar {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.num_vertices());
    int ei = 0;
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, ei++, bg);
    return bg;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    std::vector<std::vector<BoostEdge>> emb(std::max(1, g.num_vertices()));
    std::vector<BoostEdge> kur;
    bool ok = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = &emb[0],
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    PlanarityResult res;
    if (ok) {
        RotationSystem rs;
        rs.order.resize(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v)
            for (const BoostEdge& e : emb[v]) {
                int s = int(boost::source(e, bg)), t = int(boost::target(e, bg));
                rs.order[v].push_back(s == v ? t : s);
            }
        res.embedding = std::move(rs);
    } else {
        KuratowskiWitness w;
        std::set<std::pair<int, int>> seen;
        for (const BoostEdge& e : kur) {
            int s = int(boost::source(e, bg)), t = int(boost::target(e, bg));
            auto key = std::minmax(s, t);
            if (seen.insert({key.first, key.second}).second) w.edges.push_back({key.first, key.second});
        }
        res.witness = std::move(w);
    }
    return res;
}

int count_faces(const Graph& g, const RotationSystem& rs) {
    // Orbits of the next-edge map: after arriving at v from u, leave along the
    // neighbor following u in the rotation at v. Isolated vertices count one
    // face each.
    std::map<std::pair<int, int>, bool> visited;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int w : rs.order[v]) visited[{v, w}] = false;
    std::vector<std::vector<int>> pos(g.num_vertices());
    int faces = 0;
    auto next_at = [&](int v, int from) {
        const auto& ord = rs.order[v];
        for (size_t i = 0; i < ord.size(); ++i)
            if (ord[i] == from) return ord[(i + 1) % ord.size()];
        return -1;
    };
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        ++faces;
        auto e = start;
        do {
            visited[e] = true;
            e = {e.second, next_at(e.second, e.first)};
        } while (e != start);
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) ++faces;
    return faces;
}

bool verify_rotation_system(const Graph& g, const RotationSystem& rs, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (int(rs.order.size()) != g.num_vertices()) return fail("vertex count mismatch");
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexSet listed(g.num_vertices());
        for (int w : rs.order[v]) {
            if (w < 0 || w >= g.num_vertices() || !g.has_edge(v, w)) return fail("rotation lists a non-edge");
            if (listed.contains(w)) return fail("rotation repeats a neighbor");
            listed.add(w);
        }
        if (listed != g.neighbors(v)) return fail("rotation misses a neighbor");
    }
    // Euler's formula per connected component: f - e + v = 2. Face orbits are
    // confined to one component, so count faces component by component.
    for (const VertexSet& comp : connected_components(g)) {
        Graph sub = g.induced(comp);
        std::vector<int> old_of = comp.to_vector();
        std::vector<int> new_of(g.num_vertices(), -1);
        for (size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = int(i);
        RotationSystem sub_rs;
        sub_rs.order.resize(sub.num_vertices());
        comp.for_each([&](int v) {
            for (int w : rs.order[v]) sub_rs.order[new_of[v]].push_back(new_of[w]);
        });
        if (count_faces(sub, sub_rs) - sub.num_edges() + sub.num_vertices() != 2)
            return fail("Euler check failed on a component");
    }
    return true;
}

bool verify_kuratowski_witness(const Graph& g, const KuratowskiWitness& w) {
    if (w.edges.empty()) return false;
    int n = g.num_vertices();
    Graph sub(n);
    for (auto [u, v] : w.edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v)) return false;
        if (sub.has_edge(u, v)) return false;
        sub.add_edge(u, v);
    }
    return !is_planar(sub).planar();
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (int(c.color.size()) != g.num_vertices()) return false;
    std::vector<bool> used(std::max(1, c.color_count), false);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.color_count) return false;
        used[c.color[v]] = true;
    }
    for (int k = 0; k < c.color_count; ++k)
        if (!used[k]) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

namespace {

// Backtracking with at most k colors, DSATUR vertex choice and first-use
// color symmetry breaking.
bool k_color_backtrack(const Graph& g, int k, std::vector<int>& color) {
    int n = g.num_vertices();
    int colored = int(std::count_if(color.begin(), color.end(), [](int c) { return c >= 0; }));
    if (colored == n) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        VertexSet nbcols(k);
        g.neighbors(v).for_each([&](int u) {
            if (color[u] >= 0) nbcols.add(color[u]);
        });
        int sat = nbcols.count(), deg = g.degree(v);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    int max_used = -1;
    for (int c : color) max_used = std::max(max_used, c);
    for (int c = 0; c < std::min(k, max_used + 2); ++c) {
        bool clash = false;
        g.neighbors(pick).for_each([&](int u) {
            if (color[u] == c) clash = true;
        });
        if (clash) continue;
        color[pick] = c;
        if (k_color_backtrack(g, k, color)) return true;
        color[pick] = -1;
    }
    return false;
}

Coloring finish_coloring(const Graph& g, std::vector<int> color) {
    // compress to consecutive color indices
    std::map<int, int> remap;
    for (int c : color)
        if (!remap.count(c)) remap[c] = int(remap.size());
    Coloring out;
    out.color.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) out.color[v] = remap[color[v]];
    out.color_count = int(remap.size());
    return out;
}

// Planar 5-coloring by the contraction method. Each reduction step removes a
// vertex of degree <= 5; in the degree-5 case two nonadjacent neighbors are
// first identified (choosing a pair that keeps the graph planar, which the
// classical embedding argument guarantees to exist).
Coloring five_color(const Graph& g) {
    int n = g.num_vertices();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [u, v] : g.edges()) {
        adj[u].add(v);
        adj[v].add(u);
    }
    VertexSet alive = VertexSet::full(n);
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    struct Op {
        int v;
        std::vector<int> nbs;
    };
    std::vector<Op> ops;

    auto current_graph = [&]() {
        Graph cur(n);
        alive.for_each([&](int u) {
            (adj[u] & alive).for_each([&](int v) {
                if (u < v) cur.add_edge(u, v);
            });
        });
        return cur;
    };
    auto merge = [&](int u, int w) {  // w into u
        (adj[w] & alive).for_each([&](int x) {
            adj[x].remove(w);
            if (x != u) {
                adj[x].add(u);
                adj[u].add(x);
            }
        });
        adj[u].remove(u);
        adj[u].remove(w);
        alive.remove(w);
        parent[w] = u;
    };

    while (!alive.empty()) {
        int v = -1, vd = -1;
        alive.for_each([&](int u) {
            int d = (adj[u] & alive).count();
            if (v == -1 || d < vd) {
                v = u;
                vd = d;
            }
        });
        if (vd > 5) throw std::logic_error("five_color: no low-degree vertex (input not planar?)");
        std::vector<int> nbs = (adj[v] & alive).to_vector();
        if (vd == 5) {
            // identify two nonadjacent neighbors, keeping planarity
            bool merged = false;
            for (size_t i = 0; i < nbs.size() && !merged; ++i)
                for (size_t j = i + 1; j < nbs.size() && !merged; ++j) {
                    int u = nbs[i], w = nbs[j];
                    if (adj[u].contains(w)) continue;
                    auto save_adj = adj;
                    auto save_alive = alive;
                    ops.push_back({v, nbs});
                    alive.remove(v);
                    merge(u, w);
                    if (is_planar(current_graph()).planar()) {
                        merged = true;
                    } else {
                        adj = save_adj;
                        alive = save_alive;
                        parent[w] = w;
                        ops.pop_back();
                    }
                }
            if (!merged) throw std::logic_error("five_color: no plane-preserving identification");
        } else {
            ops.push_back({v, nbs});
            alive.remove(v);
        }
    }

    std::vector<int> color(n, -1);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        bool taken[6] = {};
        for (int u : it->nbs) {
            int c = color[find(u)];
            if (c >= 0) taken[c] = true;
        }
        for (int c = 0; c < 6; ++c)
            if (!taken[c]) {
                color[it->v] = c;
                break;
            }
    }
    for (int v = 0; v < n; ++v) color[v] = color[find(v)];
    return finish_coloring(g, color);
}

}  // namespace

std::optional<Coloring> exact_color(const Graph& g, int size_ceiling) {
    if (g.num_vertices() > size_ceiling) return std::nullopt;
    if (g.num_vertices() == 0) return Coloring{{}, 0};
    for (int k = 1; k <= g.num_vertices(); ++k) {
        std::vector<int> color(g.num_vertices(), -1);
        if (k_color_backtrack(g, k, color)) return finish_coloring(g, color);
    }
    return std::nullopt;  // unreachable
}

Coloring planar_color(const Graph& g, int four_color_ceiling) {
    if (!is_planar(g).planar()) throw std::invalid_argument("planar_color: input is not planar");
    if (g.num_vertices() == 0) return Coloring{{}, 0};
    if (g.num_vertices() <= four_color_ceiling) {
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> color(g.num_vertices(), -1);
            if (k_color_backtrack(g, k, color)) return finish_coloring(g, color);
        }
        // unreachable by the Four Color theorem, but stay safe
    }
    return five_color(g);
}

BfsLayers bfs_layers(const Graph& g, int root) {
    if (root < 0 || root >= g.num_vertices()) throw std::out_of_range("bfs_layers: bad root");
    BfsLayers out;
    out.unreachable = VertexSet::full(g.num_vertices());
    VertexSet frontier(g.num_vertices());
    frontier.add(root);
    VertexSet seen = frontier;
    while (!frontier.empty()) {
        out.layers.push_back(frontier);
        out.unreachable -= frontier;
        frontier = neighborhood(g, seen);
        seen |= frontier;
    }
    return out;
}

TreeDecomposition few_layer_tree_decomposition(const Graph& g, int layers_used) {
    if (!is_planar(g).planar())
        throw std::invalid_argument("few_layer_tree_decomposition: input is not planar");
    int bound = 3 * layers_used + 1;
    TreeDecomposition td;
    if (auto exact = exact_treewidth(g)) {
        td = td_from_elimination(g, exact->order);
    } else {
        td = td_from_elimination(g, min_fill_elimination(g).order);
    }
    if (td.width() > bound)
        throw std::logic_error("few_layer_tree_decomposition: width bound violated (promised " +
                               std::to_string(bound) + ", got " + std::to_string(td.width()) + ")");
    return td;
}

}  // namespace hplanar
