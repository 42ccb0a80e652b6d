#include "hplanar/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hplanar {

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    VertexSet nb(g.num_vertices());
    x.for_each([&](int v) { nb |= g.neighbors(v); });
    return nb - x;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    return neighborhood(g, x) | x;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.num_vertices());
    region.for_each([&](int root) {
        if (seen.contains(root)) return;
        VertexSet comp(g.num_vertices());
        std::vector<int> stack{root};
        comp.add(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            (g.neighbors(u) & region).for_each([&](int v) {
                if (!comp.contains(v)) {
                    comp.add(v);
                    stack.push_back(v);
                }
            });
        }
        seen |= comp;
        comps.push_back(comp);
    });
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, VertexSet::full(g.num_vertices()));
}

bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

Graph torso(const Graph& g, const VertexSet& x) {
    std::vector<int> old_of;
    Graph t = [&] {
        // induced() carries weights; the torso is unweighted by definition.
        std::vector<int> ids = x.to_vector();
        std::vector<int> new_of(g.num_vertices(), -1);
        for (size_t i = 0; i < ids.size(); ++i) new_of[ids[i]] = int(i);
        Graph h(int(ids.size()));
        for (size_t i = 0; i < ids.size(); ++i)
            (g.neighbors(ids[i]) & x).for_each([&](int v) {
                if (ids[i] < v) h.add_edge(int(i), new_of[v]);
            });
        old_of = std::move(ids);
        return h;
    }();
    std::vector<int> new_of(g.num_vertices(), -1);
    for (size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = int(i);
    for (const VertexSet& comp : components_within(g, VertexSet::full(g.num_vertices()) - x)) {
        std::vector<int> nb = (neighborhood(g, comp) & x).to_vector();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!t.has_edge(new_of[nb[i]], new_of[nb[j]])) t.add_edge(new_of[nb[i]], new_of[nb[j]]);
    }
    return t;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.num_vertices();
    Graph g(na + b.num_vertices());
    for (auto [u, v] : a.edges())
        if (a.has_explicit_weight(u, v))
            g.add_edge(u, v, a.weight(u, v));
        else
            g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        if (b.has_explicit_weight(u, v))
            g.add_edge(na + u, na + v, b.weight(u, v));
        else
            g.add_edge(na + u, na + v);
    return g;
}

Graph complement_graph(const Graph& g) {
    int n = g.num_vertices();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

bool verify_separation(const Graph& g, const Separation& sep) {
    int n = g.num_vertices();
    if (sep.left.universe() != n || sep.right.universe() != n) return false;
    if ((sep.left | sep.right) != VertexSet::full(n)) return false;
    VertexSet lpriv = sep.left - sep.right, rpriv = sep.right - sep.left;
    bool ok = true;
    lpriv.for_each([&](int v) {
        if (g.neighbors(v).intersects(rpriv)) ok = false;
    });
    return ok;
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, int small_side_bound,
                                              bool include_trivial) {
    int n = g.num_vertices();
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::vector<Separation> out;
    VertexSet full = VertexSet::full(n);
    for (int c = 0; c <= std::min(max_order, n); ++c) {
        for_each_subset_of_size(n, all, c, [&](const VertexSet& s) {
            for (const VertexSet& comp : components_within(g, full - s)) {
                int other_side = n - comp.count() - c;
                if (other_side >= small_side_bound) continue;
                if (other_side == 0 && !include_trivial) continue;
                out.push_back({comp | s, full - comp});
            }
            return false;
        });
    }
    return out;
}

std::optional<Separation> find_breaking_separation(const Graph& g, int s, int c, int size_ceiling) {
    int n = g.num_vertices();
    if (n > size_ceiling) throw std::length_error("find_breaking_separation: size ceiling exceeded");
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    VertexSet full = VertexSet::full(n);
    std::optional<Separation> found;
    for (int k = 0; k <= std::min(c, n) && !found; ++k) {
        for_each_subset_of_size(n, all, k, [&](const VertexSet& sep) {
            auto comps = components_within(g, full - sep);
            // Look for a bipartition of the components with both sides >= s.
            int total = n - k;
            if (total < 2 * s) return false;
            std::vector<int> reach(total + 1, -1);  // reach[t] = last comp used
            reach[0] = int(comps.size());
            for (size_t i = 0; i < comps.size(); ++i) {
                int sz = comps[i].count();
                for (int t = total; t >= sz; --t)
                    if (reach[t] == -1 && reach[t - sz] != -1) reach[t] = int(i);
            }
            for (int t = s; t + s <= total; ++t) {
                if (reach[t] == -1) continue;
                VertexSet left = sep;
                int rem = t;
                while (rem > 0) {
                    int i = reach[rem];
                    left |= comps[i];
                    rem -= comps[i].count();
                    // reach stores one valid chain because comps were added in order
                    // and reach[t] is only set once.
                }
                found = Separation{left, full - (left - sep)};
                return true;
            }
            return false;
        });
    }
    return found;
}

bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
    int p = pattern.num_vertices();
    if (int(model.branch_sets.size()) != p) return false;
    VertexSet used(host.num_vertices());
    for (const VertexSet& b : model.branch_sets) {
        if (b.empty() || b.intersects(used)) return false;
        if (components_within(host, b).size() != 1) return false;
        used |= b;
    }
    for (auto [x, y] : pattern.edges()) {
        if (!neighborhood(host, model.branch_sets[x]).intersects(model.branch_sets[y])) return false;
    }
    return true;
}

namespace {

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    int p;
    std::vector<VertexSet> branch;
    std::vector<VertexSet> branch_nb;  // host neighborhood of each placed branch set
    VertexSet used;
    bool done = false;

    MinorSearch(const Graph& h, const Graph& pat)
        : host(h), pattern(pat), p(pat.num_vertices()), used(h.num_vertices()) {}

    void place(int i) {
        if (done) return;
        if (i == p) {
            done = true;
            return;
        }
        VertexSet avail = used.complement();
        avail.for_each([&](int root) {
            if (done) return;
            // Dedupe: root is the minimum vertex of its branch set.
            VertexSet allowed(host.num_vertices());
            avail.for_each([&](int v) {
                if (v > root) allowed.add(v);
            });
            VertexSet start(host.num_vertices());
            start.add(root);
            grow(i, start, allowed);
        });
    }

    void grow(int i, const VertexSet& s, const VertexSet& allowed) {
        if (done) return;
        if (edges_back_ok(i, s)) {
            branch.push_back(s);
            branch_nb.push_back(neighborhood(host, s));
            used |= s;
            place(i + 1);
            if (done) return;
            used -= s;
            branch.pop_back();
            branch_nb.pop_back();
        }
        // Leave room for the remaining pattern vertices.
        if (used.count() + s.count() + (p - i - 1) >= host.num_vertices()) return;
        VertexSet ext = neighborhood(host, s) & allowed;
        VertexSet banned(host.num_vertices());
        std::vector<int> exts = ext.to_vector();
        for (int v : exts) {
            VertexSet s2 = s;
            s2.add(v);
            grow(i, s2, allowed - banned);
            if (done) return;
            banned.add(v);
        }
    }

    bool edges_back_ok(int i, const VertexSet& s) const {
        for (int j = 0; j < i; ++j)
            if (pattern.has_edge(i, j) && !branch_nb[j].intersects(s)) return false;
        return true;
    }
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern, int pattern_ceiling) {
    if (pattern.num_vertices() > pattern_ceiling)
        throw std::length_error("find_minor: pattern size ceiling exceeded");
    if (pattern.num_vertices() > host.num_vertices()) return std::nullopt;
    MinorSearch search(host, pattern);
    search.place(0);
    if (!search.done) return std::nullopt;
    return MinorModel{search.branch};
}

Graph generate_grid(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("grid dimensions must be positive");
    Graph g(k * r);
    for (int row = 0; row < r; ++row)
        for (int col = 0; col < k; ++col) {
            int v = row * k + col;
            if (col + 1 < k) g.add_edge(v, v + 1);
            if (row + 1 < r) g.add_edge(v, v + k);
        }
    return g;
}

Graph generate_apex_grid(int k) {
    Graph grid = generate_grid(k, k);
    int n = grid.num_vertices();
    Graph g(n + 1);
    for (auto [u, v] : grid.edges()) g.add_edge(u, v);
    for (int v = 0; v < n; ++v) g.add_edge(v, n);
    return g;
}

namespace {

// Outer cycle of a 2-connected plane subgraph of the integer grid, found by
// tracing faces of the geometric embedding and taking the longest one.
VertexSet outer_face(const Graph& g, const VertexSet& live, const std::vector<std::pair<int, int>>& pos) {
    // Counterclockwise direction order E, N, W, S.
    auto dir = [&](int from, int to) {
        int dx = pos[to].first - pos[from].first, dy = pos[to].second - pos[from].second;
        if (dx == 1) return 0;
        if (dy == 1) return 1;
        if (dx == -1) return 2;
        return 3;
    };
    std::map<std::pair<int, int>, bool> visited;
    live.for_each([&](int u) {
        (g.neighbors(u) & live).for_each([&](int v) { visited[{u, v}] = false; });
    });
    VertexSet best(g.num_vertices());
    size_t best_len = 0;
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        VertexSet face(g.num_vertices());
        size_t len = 0;
        auto e = start;
        do {
            visited[e] = true;
            face.add(e.second);
            ++len;
            // Next edge of the face: first neighbor clockwise from the
            // reverse direction at the head.
            int back = dir(e.second, e.first);
            int next = -1;
            for (int step = 1; step <= 4 && next == -1; ++step) {
                int d = (back + 4 - step) % 4;
                (g.neighbors(e.second) & live).for_each([&](int w) {
                    if (next == -1 && dir(e.second, w) == d) next = w;
                });
            }
            e = {e.second, next};
        } while (e != start);
        if (len > best_len) {
            best_len = len;
            best = face;
        }
    }
    return best;
}

}  // namespace

WallInfo generate_wall(int r) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("wall height must be odd and >= 3");
    // (2r x r)-grid with 1-based coordinates (x,y); drop vertical edges
    // {(x,y),(x,y+1)} with x+y odd, then degree-1 vertices.
    auto at = [&](int x, int y) { return (y - 1) * 2 * r + (x - 1); };  // provisional grid index
    int big = 2 * r * r;
    std::vector<bool> alive(big, true);
    std::vector<std::vector<int>> adj(big);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int y = 1; y <= r; ++y)
        for (int x = 1; x <= 2 * r; ++x) {
            if (x + 1 <= 2 * r) link(at(x, y), at(x + 1, y));
            if (y + 1 <= r && (x + y) % 2 == 0) link(at(x, y), at(x, y + 1));
        }
    for (int v = 0; v < big; ++v)
        if (adj[v].size() <= 1) alive[v] = false;
    // Renumber survivors row-major.
    std::vector<int> idx(big, -1);
    std::vector<std::pair<int, int>> pos;
    int n = 0;
    for (int y = 1; y <= r; ++y)
        for (int x = 1; x <= 2 * r; ++x)
            if (alive[at(x, y)]) {
                idx[at(x, y)] = n++;
                pos.push_back({x, y});
            }
    WallInfo info{Graph(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), {}};
    for (int v = 0; v < big; ++v)
        if (alive[v])
            for (int u : adj[v])
                if (alive[u] && v < u) info.graph.add_edge(idx[v], idx[u]);

    info.perimeter = outer_face(info.graph, VertexSet::full(n), pos);
    info.perimeter.for_each([&](int v) {
        if (info.graph.degree(v) == 2) info.pegs.add(v);
    });
    for (auto [x, y] : std::initializer_list<std::pair<int, int>>{{1, 1}, {2, r}, {2 * r - 1, 1}, {2 * r, r}})
        info.corners.add(idx[at(x, y)]);

    // Layers by repeated peeling: drop the current perimeter, then prune
    // degree-1 vertices, (r-1)/2 times in total.
    VertexSet live = VertexSet::full(n);
    VertexSet layer = info.perimeter;
    for (int i = 0; i < (r - 1) / 2; ++i) {
        info.layers.push_back(layer);
        live -= layer;
        if (i + 1 < (r - 1) / 2) {
            bool pruned = true;
            while (pruned) {
                pruned = false;
                live.for_each([&](int v) {
                    if ((info.graph.neighbors(v) & live).count() <= 1) {
                        live.remove(v);
                        pruned = true;
                    }
                });
            }
            layer = outer_face(info.graph, live, pos);
        }
    }
    live.for_each([&](int v) {
        if (info.graph.degree(v) == 3) info.central.add(v);
    });
    return info;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

}  // namespace hplanar
