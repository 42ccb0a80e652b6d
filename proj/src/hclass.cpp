#include "hplanar/hclass.hpp"

#include <algorithm>

#include "hplanar/matching.hpp"
#include "hplanar/planarity.hpp"

namespace hplanar {

namespace {

bool is_forest(const Graph& g) {
    return g.num_edges() == g.num_vertices() - int(connected_components(g).size());
}

bool is_bipartite(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            bool ok = true;
            g.neighbors(u).for_each([&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

bool is_cluster(const Graph& g) {
    for (const VertexSet& comp : connected_components(g)) {
        int k = comp.count();
        int inside = 0;
        comp.for_each([&](int v) { inside += (g.neighbors(v) & comp).count(); });
        if (inside != k * (k - 1)) return false;
    }
    return true;
}

// Greedy simplicial elimination; succeeds exactly on chordal graphs. With
// record_clique set, also reports the largest simplicial neighborhood + 1,
// which equals both the clique number and the chromatic number.
bool simplicial_eliminate(const Graph& g, int* clique_number = nullptr) {
    int n = g.num_vertices();
    VertexSet live = VertexSet::full(n);
    int best = n == 0 ? 0 : 1;
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n && pick == -1; ++v) {
            if (!live.contains(v)) continue;
            VertexSet nb = g.neighbors(v) & live;
            bool clique = true;
            nb.for_each([&](int a) {
                if (!nb.subset_of(g.neighbors(a) | VertexSet::of(n, {a}))) clique = false;
            });
            if (clique) {
                pick = v;
                best = std::max(best, nb.count() + 1);
            }
        }
        if (pick == -1) return false;
        live.remove(pick);
    }
    if (clique_number) *clique_number = best;
    return true;
}

// Induced odd cycle of length >= 5, by growing induced paths whose smallest
// vertex is the start.
bool has_odd_hole(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    std::function<bool()> extend = [&]() {
        int last = path.back(), start = path[0];
        bool found = false;
        g.neighbors(last).for_each([&](int u) {
            if (found || u <= start || on_path[u]) return;
            // u may touch the path only at `last`, except possibly at `start`
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(u, path[i])) return;
            bool closes = path.size() >= 2 && g.has_edge(u, start);
            if (closes) {
                size_t len = path.size() + 1;
                if (len >= 5 && len % 2 == 1) found = true;
                return;  // a chord to start forbids extending through u
            }
            path.push_back(u);
            on_path[u] = true;
            if (extend()) found = true;
            on_path[u] = false;
            path.pop_back();
        });
        return found;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(on_path.begin(), on_path.end(), false);
        on_path[s] = true;
        if (extend()) return true;
    }
    return false;
}

int bipartite_chromatic(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    return g.num_edges() == 0 ? 1 : 2;
}

// Maximum independent set of a bipartite graph: maximum matching by
// augmenting paths, then the complement of the König vertex cover.
VertexSet bipartite_max_independent_set(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (size_t q = 0; q < queue.size(); ++q)
            g.neighbors(queue[q]).for_each([&](int u) {
                if (side[u] == -1) {
                    side[u] = 1 - side[queue[q]];
                    queue.push_back(u);
                }
            });
    }
    std::vector<int> match(n, -1);
    std::vector<bool> seen(n);
    std::function<bool(int)> augment = [&](int v) {
        bool found = false;
        g.neighbors(v).for_each([&](int u) {
            if (found || seen[u]) return;
            seen[u] = true;
            if (match[u] == -1 || augment(match[u])) {
                match[u] = v;
                match[v] = u;
                found = true;
            }
        });
        return found;
    };
    for (int v = 0; v < n; ++v)
        if (side[v] == 0 && match[v] == -1) {
            std::fill(seen.begin(), seen.end(), false);
            augment(v);
        }
    // alternating reachability from unmatched left vertices
    std::vector<bool> reach(n, false);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (side[v] == 0 && match[v] == -1) {
            reach[v] = true;
            queue.push_back(v);
        }
    for (size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        g.neighbors(v).for_each([&](int u) {
            if (side[v] == 0 ? reach[u] : (match[v] != u || reach[u])) return;
            reach[u] = true;
            queue.push_back(u);
        });
    }
    VertexSet out(n);  // complement of the cover (L \ reach) ∪ (R ∩ reach)
    for (int v = 0; v < n; ++v)
        if (side[v] == 0 ? reach[v] : !reach[v]) out.add(v);
    return out;
}

HClass make(const std::string& name, std::function<bool(const Graph&)> member, bool hereditary,
            bool union_closed) {
    HClass h;
    h.name = name;
    h.membership = std::move(member);
    h.hereditary = hereditary;
    h.union_closed = union_closed;
    h.pmm_solver = [](const Graph& g) { return pmm_bruteforce(g); };
    return h;
}

}  // namespace

HClass builtin_hclass(const std::string& name) {
    if (name == "edgeless") {
        HClass h = make(name, [](const Graph& g) { return g.num_edges() == 0; }, true, true);
        h.chromatic_solver = [](const Graph& g) { return g.num_vertices() == 0 ? 0 : 1; };
        h.independent_set_solver = [](const Graph& g) { return VertexSet::full(g.num_vertices()); };
        h.pmm_solver = [](const Graph& g) { return Rational(g.num_vertices() == 0 ? 1 : 0); };
        return h;
    }
    if (name == "forests") {
        HClass h = make(name, is_forest, true, true);
        h.chromatic_solver = bipartite_chromatic;
        h.independent_set_solver = bipartite_max_independent_set;
        return h;
    }
    if (name == "bipartite") {
        HClass h = make(name, is_bipartite, true, true);
        h.chromatic_solver = bipartite_chromatic;
        h.independent_set_solver = bipartite_max_independent_set;
        return h;
    }
    if (name == "planar") {
        HClass h = make(name, [](const Graph& g) { return is_planar(g).planar(); }, true, true);
        h.pmm_solver = [](const Graph& g) { return fkt_pmm(g); };
        return h;
    }
    if (name == "chordal") {
        HClass h = make(name, [](const Graph& g) { return simplicial_eliminate(g); }, true, true);
        h.chromatic_solver = [](const Graph& g) {
            int omega = 0;
            if (!simplicial_eliminate(g, &omega)) throw std::invalid_argument("chromatic solver: not chordal");
            return omega;
        };
        return h;
    }
    if (name == "cluster") {
        HClass h = make(name, is_cluster, true, true);
        h.chromatic_solver = [](const Graph& g) {
            int best = 0;
            for (const VertexSet& comp : connected_components(g)) best = std::max(best, comp.count());
            return best;
        };
        h.independent_set_solver = [](const Graph& g) {
            VertexSet out(g.num_vertices());
            for (const VertexSet& comp : connected_components(g)) out.add(comp.first());
            return out;
        };
        return h;
    }
    if (name == "complete_K4_only") {
        HClass h = make(name,
                        [](const Graph& g) { return g.num_vertices() == 4 && g.num_edges() == 6; },
                        false, false);
        h.chromatic_solver = [](const Graph&) { return 4; };
        h.independent_set_solver = [](const Graph& g) { return VertexSet::of(g.num_vertices(), {0}); };
        return h;
    }
    if (name == "all_graphs") return make(name, [](const Graph&) { return true; }, true, true);
    if (name == "perfect") {
        return make(name,
                    [](const Graph& g) {
                        if (g.num_vertices() > 18)
                            throw std::length_error("perfect membership: brute force limited to n <= 18");
                        return !has_odd_hole(g) && !has_odd_hole(complement_graph(g));
                    },
                    true, true);
    }
    throw std::invalid_argument("unknown graph class: " + name);
}

const std::vector<std::string>& builtin_hclass_names() {
    static const std::vector<std::string> names{"edgeless",  "forests", "bipartite",        "planar",
                                               "chordal",   "cluster", "complete_K4_only", "all_graphs",
                                               "perfect"};
    return names;
}

HClass restrict_to_size(const HClass& h, int k) {
    if (k < 0) throw std::invalid_argument("restrict_to_size: negative cap");
    HClass r = h;
    r.name = h.name + "^(" + std::to_string(k) + ")";
    r.size_cap = k;
    // a disjoint union of members can exceed the cap
    r.union_closed = false;
    auto base = h.membership;
    r.membership = [base, k](const Graph& g) { return g.num_vertices() <= k && base(g); };
    return r;
}

std::optional<Graph> min_forbidden_subgraph(const HClass& h, int ceiling) {
    if (!h.hereditary) throw std::invalid_argument("min_forbidden_subgraph: class is not hereditary");
    for (int n = 0; n <= ceiling; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        int bits = int(pairs.size());
        if (bits > 21) throw std::length_error("min_forbidden_subgraph: ceiling too large to enumerate");
        for (int m = 0; m <= bits; ++m)
            for (uint32_t code = 0; code < (uint32_t(1) << bits); ++code) {
                if (__builtin_popcount(code) != m) continue;
                Graph g(n);
                for (int i = 0; i < bits; ++i)
                    if (code >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
                if (!h.membership(g)) return g;
            }
    }
    return std::nullopt;
}

}  // namespace hplanar
