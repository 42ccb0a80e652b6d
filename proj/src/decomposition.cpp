#include "hplanar/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "hplanar/hclass.hpp"
#include "hplanar/planarity.hpp"

namespace hplanar {

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int t = int(td.bags.size());
    for (const VertexSet& b : td.bags)
        if (b.universe() != g.num_vertices()) return fail("bag universe mismatch");
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || b < 0 || a >= t || b >= t || a == b) return fail("bad tree edge");
    if (t == 0) return g.num_vertices() == 0 ? true : fail("no bags for nonempty graph");
    // tree: connected and acyclic
    if (int(td.tree_edges.size()) != t - 1) return fail("tree edge count is not nodes-1");
    {
        std::vector<std::vector<int>> nb(t);
        for (auto [a, b] : td.tree_edges) {
            nb[a].push_back(b);
            nb[b].push_back(a);
        }
        std::vector<bool> seen(t, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : nb[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++cnt;
                    stack.push_back(v);
                }
        }
        if (cnt != t) return fail("tree is disconnected");
    }
    // coverage of vertices and edges
    VertexSet covered(g.num_vertices());
    for (const VertexSet& b : td.bags) covered |= b;
    if (covered != VertexSet::full(g.num_vertices())) return fail("vertex not covered by any bag");
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const VertexSet& b : td.bags)
            if (b.contains(u) && b.contains(v)) {
                ok = true;
                break;
            }
        if (!ok) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
    }
    // per-vertex connectivity in the tree
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> nodes;
        for (int i = 0; i < t; ++i)
            if (td.bags[i].contains(v)) nodes.push_back(i);
        std::vector<bool> in(t, false), seen(t, false);
        for (int i : nodes) in[i] = true;
        std::vector<int> stack{nodes[0]};
        seen[nodes[0]] = true;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [a, b] : td.tree_edges) {
                int o = a == u ? b : b == u ? a : -1;
                if (o >= 0 && in[o] && !seen[o]) {
                    seen[o] = true;
                    ++cnt;
                    stack.push_back(o);
                }
            }
        }
        if (cnt != int(nodes.size()))
            return fail("bags of vertex " + std::to_string(v) + " do not form a subtree");
    }
    return true;
}

namespace {

std::vector<uint32_t> mask_adjacency(const Graph& g) {
    std::vector<uint32_t> adj(g.num_vertices(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= uint32_t(1) << v;
        adj[v] |= uint32_t(1) << u;
    }
    return adj;
}

// Filled-degree of v when the vertices of S are already eliminated: the
// number of vertices outside S+{v} adjacent to the component of v in G[S+{v}].
int elimination_cost(const std::vector<uint32_t>& adj, uint32_t S, int v) {
    uint32_t su = S | (uint32_t(1) << v);
    uint32_t comp = uint32_t(1) << v, reach = 0;
    for (;;) {
        uint32_t nb = 0;
        for (uint32_t c = comp; c;) {
            int u = __builtin_ctz(c);
            c &= c - 1;
            nb |= adj[u];
        }
        reach = nb;
        uint32_t grown = comp | (nb & S);
        if (grown == comp) break;
        comp = grown;
    }
    return __builtin_popcount(reach & ~su);
}

}  // namespace

std::optional<EliminationOrderResult> exact_treewidth(const Graph& g, int size_ceiling) {
    int n = g.num_vertices();
    if (n > size_ceiling || n > 25) return std::nullopt;
    if (n == 0) return EliminationOrderResult{-1, {}};
    auto adj = mask_adjacency(g);
    uint32_t full = (n == 32) ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    std::vector<uint8_t> dp(size_t(full) + 1, 0);
    for (uint32_t S = full; S-- > 0;) {
        int best = 255;
        for (uint32_t rest = full & ~S; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            best = std::min(best, std::max(elimination_cost(adj, S, v), int(dp[S | (uint32_t(1) << v)])));
        }
        dp[S] = uint8_t(best);
    }
    EliminationOrderResult res{int(dp[0]), {}};
    uint32_t S = 0;
    while (S != full) {
        for (uint32_t rest = full & ~S; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            uint32_t S2 = S | (uint32_t(1) << v);
            if (std::max(elimination_cost(adj, S, v), int(dp[S2])) <= res.width) {
                res.order.push_back(v);
                S = S2;
                break;
            }
        }
    }
    return res;
}

EliminationOrderResult min_fill_elimination(const Graph& g) {
    int n = g.num_vertices();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [u, v] : g.edges()) {
        adj[u].add(v);
        adj[v].add(u);
    }
    VertexSet live = VertexSet::full(n);
    EliminationOrderResult res{-1, {}};
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        live.for_each([&](int v) {
            long fill = 0;
            auto nb = (adj[v] & live).to_vector();
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!adj[nb[i]].contains(nb[j])) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        });
        auto nb = (adj[best] & live).to_vector();
        res.width = std::max(res.width, int(nb.size()));
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!adj[nb[i]].contains(nb[j])) {
                    adj[nb[i]].add(nb[j]);
                    adj[nb[j]].add(nb[i]);
                }
        live.remove(best);
        res.order.push_back(best);
    }
    return res;
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order) {
    int n = g.num_vertices();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [u, v] : g.edges()) {
        adj[u].add(v);
        adj[v].add(u);
    }
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = int(i);
    TreeDecomposition td;
    VertexSet live = VertexSet::full(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        VertexSet nb = adj[v] & live;
        VertexSet bag = nb;
        bag.add(v);
        td.bags.push_back(bag);
        // connect to the bag of the earliest-eliminated live neighbor
        int attach = -1;
        nb.for_each([&](int u) {
            if (attach == -1 || pos[u] < pos[attach]) attach = u;
        });
        if (attach != -1)
            td.tree_edges.push_back({i, pos[attach]});
        else if (i + 1 < n)
            td.tree_edges.push_back({i, i + 1});
        // fill in
        auto nbv = nb.to_vector();
        for (size_t a = 0; a < nbv.size(); ++a)
            for (size_t b = a + 1; b < nbv.size(); ++b) {
                adj[nbv[a]].add(nbv[b]);
                adj[nbv[b]].add(nbv[a]);
            }
        live.remove(v);
    }
    return td;
}

namespace {

struct TreedepthSolver {
    std::vector<uint32_t> adj;
    std::unordered_map<uint32_t, int> memo;

    int solve(uint32_t mask) {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        // split into components
        std::vector<uint32_t> comps;
        uint32_t left = mask;
        while (left) {
            uint32_t comp = uint32_t(1) << __builtin_ctz(left);
            for (;;) {
                uint32_t nb = 0;
                for (uint32_t c = comp; c;) {
                    int u = __builtin_ctz(c);
                    c &= c - 1;
                    nb |= adj[u];
                }
                uint32_t grown = comp | (nb & mask);
                if (grown == comp) break;
                comp = grown;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        int result;
        if (comps.size() > 1) {
            result = 0;
            for (uint32_t c : comps) result = std::max(result, solve(c));
        } else {
            result = __builtin_popcount(mask);  // upper bound: eliminate everything
            for (uint32_t rest = mask; rest;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                result = std::min(result, 1 + solve(mask & ~(uint32_t(1) << v)));
            }
        }
        memo[mask] = result;
        return result;
    }
};

}  // namespace

std::optional<int> exact_treedepth(const Graph& g, int size_ceiling) {
    if (g.num_vertices() > size_ceiling || g.num_vertices() > 25) return std::nullopt;
    if (g.num_vertices() == 0) return 0;
    TreedepthSolver solver{mask_adjacency(g), {}};
    return solver.solve((uint32_t(1) << g.num_vertices()) - 1);
}

bool quasi_4_connected(const Graph& g, int size_ceiling) {
    int n = g.num_vertices();
    if (n > size_ceiling) throw std::length_error("quasi_4_connected: size ceiling exceeded");
    if (n < 4) return false;  // 3-connectivity requires at least 4 vertices
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    VertexSet full = VertexSet::full(n);
    for (int k = 0; k <= 2; ++k) {
        bool separated = false;
        for_each_subset_of_size(n, all, k, [&](const VertexSet& s) {
            if (components_within(g, full - s).size() > 1) separated = true;
            return separated;
        });
        if (separated) return false;
    }
    bool bad = false;
    for_each_subset_of_size(n, all, 3, [&](const VertexSet& s) {
        auto comps = components_within(g, full - s);
        if (comps.size() < 2) return false;
        // fails iff the components can be split into two groups of >= 2 vertices
        int total = n - 3;
        std::vector<bool> reach(total + 1, false);
        reach[0] = true;
        for (const VertexSet& c : comps) {
            int sz = c.count();
            for (int t = total; t >= sz; --t)
                if (reach[t - sz]) reach[t] = true;
        }
        for (int t = 2; t + 2 <= total; ++t)
            if (reach[t]) bad = true;
        return bad;
    });
    return !bad;
}

bool verify_elimination_sequence(const Graph& g, const HClass& h, const EliminationSequence& seq,
                                 std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int n = g.num_vertices();
    VertexSet remaining = VertexSet::full(n);
    for (size_t i = 0; i < seq.layers.size(); ++i) {
        const VertexSet& layer = seq.layers[i];
        if (layer.universe() != n) return fail("layer universe mismatch");
        if (!layer.subset_of(remaining)) return fail("layer " + std::to_string(i) + " reuses removed vertices");
        std::vector<int> ids;
        Graph level = g.induced(remaining, &ids);
        VertexSet x(level.num_vertices());
        for (size_t j = 0; j < ids.size(); ++j)
            if (layer.contains(ids[j])) x.add(int(j));
        if (!is_planar(torso(level, x)).planar())
            return fail("layer " + std::to_string(i) + " has a non-planar torso");
        remaining -= layer;
    }
    for (const VertexSet& comp : components_within(g, remaining))
        if (!h.contains(g.induced(comp)))
            return fail("residual component containing vertex " + std::to_string(comp.first()) +
                        " is not in " + h.name);
    return true;
}

bool verify_h_tree_decomposition(const Graph& g, const HClass& h, const HTreeDecomposition& htd,
                                 std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int n = g.num_vertices();
    if (htd.x.universe() != n) return fail("modulator universe mismatch");
    auto comps = components_within(g, htd.x.complement());
    if (comps.size() != htd.leaf_components.size()) return fail("leaf component list mismatch");
    for (size_t i = 0; i < comps.size(); ++i)
        if (std::find(htd.leaf_components.begin(), htd.leaf_components.end(), comps[i]) ==
            htd.leaf_components.end())
            return fail("leaf component list mismatch");
    for (const VertexSet& comp : comps) {
        if (!h.contains(g.induced(comp)))
            return fail("component containing vertex " + std::to_string(comp.first()) + " is not in " +
                        h.name);
        VertexSet nb = neighborhood(g, comp);
        bool hosted = false;
        for (const VertexSet& bag : htd.base.bags)
            if (nb.subset_of(bag)) {
                hosted = true;
                break;
            }
        if (!hosted)
            return fail("neighborhood of component containing vertex " + std::to_string(comp.first()) +
                        " fits in no bag");
    }
    // base must be a tree decomposition of torso(g, x); bags are in g's ids
    std::vector<int> ids = htd.x.to_vector();
    std::vector<int> new_of(n, -1);
    for (size_t i = 0; i < ids.size(); ++i) new_of[ids[i]] = int(i);
    Graph t = torso(g, htd.x);
    TreeDecomposition mapped;
    mapped.tree_edges = htd.base.tree_edges;
    for (const VertexSet& bag : htd.base.bags) {
        if (bag.universe() != n) return fail("bag universe mismatch");
        if (!bag.subset_of(htd.x)) return fail("bag leaves the modulator");
        VertexSet mb(t.num_vertices());
        bag.for_each([&](int v) { mb.add(new_of[v]); });
        mapped.bags.push_back(mb);
    }
    std::string sub;
    if (!verify_tree_decomposition(t, mapped, &sub)) return fail("torso decomposition invalid: " + sub);
    return true;
}

bool verify_planar_width(const Graph& g, const PlanarWidthDecomposition& pw, int k, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (pw.tags.size() != pw.base.bags.size()) return fail("one tag per bag required");
    std::string sub;
    if (!verify_tree_decomposition(g, pw.base, &sub)) return fail(sub);
    for (size_t i = 0; i < pw.base.bags.size(); ++i) {
        const VertexSet& bag = pw.base.bags[i];
        if (pw.tags[i] == BagTag::small) {
            if (bag.count() > k + 1) return fail("bag " + std::to_string(i) + " exceeds size " + std::to_string(k + 1));
        } else {
            // torso relative to the decomposition: every component of g - bag
            // hangs off this bag through the tree, so this is torso(g, bag)
            if (!is_planar(torso(g, bag)).planar())
                return fail("bag " + std::to_string(i) + " has a non-planar torso");
        }
    }
    return true;
}

namespace {

// Exact H-planar treedepth of connected induced subgraphs, memoized on the
// vertex set. bestX records the first optimal top layer for reconstruction.
struct PtdSolver {
    const Graph& g;
    const HClass& h;
    std::map<VertexSet, int> memo;
    std::map<VertexSet, VertexSet> best_x;

    int depth_of(const VertexSet& region) {
        int d = 0;
        for (const VertexSet& comp : components_within(g, region)) d = std::max(d, connected_depth(comp));
        return d;
    }

    int connected_depth(const VertexSet& comp) {
        auto it = memo.find(comp);
        if (it != memo.end()) return it->second;
        std::vector<int> ids;
        Graph sub = g.induced(comp, &ids);
        int result;
        VertexSet chosen(g.num_vertices());
        if (h.contains(sub)) {
            result = 0;
        } else if (is_planar(sub).planar()) {
            // one layer removes everything: the torso of the full set is the
            // graph itself
            result = 1;
            chosen = comp;
        } else {
            result = sub.num_vertices() + 1;
            for (uint64_t mask = 1; mask < (uint64_t(1) << sub.num_vertices()); ++mask) {
                VertexSet x(sub.num_vertices());
                VertexSet x_glob(g.num_vertices());
                for (int i = 0; i < sub.num_vertices(); ++i)
                    if (mask >> i & 1) {
                        x.add(i);
                        x_glob.add(ids[i]);
                    }
                if (!is_planar(torso(sub, x)).planar()) continue;
                int below = depth_of(comp - x_glob);
                if (1 + below < result) {
                    result = 1 + below;
                    chosen = x_glob;
                    if (result == 1) break;
                }
            }
        }
        memo[comp] = result;
        best_x[comp] = chosen;
        return result;
    }

    void assemble(const VertexSet& comp, int level, std::vector<VertexSet>& layers) {
        if (connected_depth(comp) == 0) return;
        VertexSet x = best_x[comp];
        layers[level] |= x;
        for (const VertexSet& sub : components_within(g, comp - x)) assemble(sub, level + 1, layers);
    }
};

}  // namespace

std::optional<PtdResult> planar_treedepth_exact(const Graph& g, const HClass& h, int k_max,
                                                int size_ceiling) {
    if (g.num_vertices() > size_ceiling) throw std::length_error("planar_treedepth_exact: size ceiling exceeded");
    PtdSolver solver{g, h, {}, {}};
    int depth = solver.depth_of(VertexSet::full(g.num_vertices()));
    if (depth > k_max) return std::nullopt;
    PtdResult res;
    res.depth = depth;
    res.seq.layers.assign(depth, VertexSet(g.num_vertices()));
    for (const VertexSet& comp : connected_components(g)) solver.assemble(comp, 0, res.seq.layers);
    return res;
}

namespace {

// Root-bag recursion for the planar-treewidth decision. The key is the
// subproblem region plus the interface that must sit inside its root bag; a
// key reached again along the current recursion path is rejected (a valid
// decomposition never needs to repeat a bag choice).
struct PtwSolver {
    const Graph& g;
    int k;
    std::map<std::pair<VertexSet, VertexSet>, int> state;  // 1 in progress, 2 yes, 3 no
    std::map<std::pair<VertexSet, VertexSet>, VertexSet> chosen_bag;

    bool bag_ok(const VertexSet& region, const VertexSet& bag, const VertexSet& interface) {
        if (bag.count() <= k + 1) return true;
        // conservative torso: clique the interface toward the unseen rest of
        // the graph; any component actually hanging there spans a subset of it
        std::vector<int> ids;
        Graph sub = g.induced(region, &ids);
        std::vector<int> new_of(g.num_vertices(), -1);
        for (size_t i = 0; i < ids.size(); ++i) new_of[ids[i]] = int(i);
        VertexSet local_bag(sub.num_vertices());
        bag.for_each([&](int v) { local_bag.add(new_of[v]); });
        Graph t = torso(sub, local_bag);
        std::vector<int> bag_ids = local_bag.to_vector();
        std::vector<int> pos(sub.num_vertices(), -1);
        for (size_t i = 0; i < bag_ids.size(); ++i) pos[bag_ids[i]] = int(i);
        std::vector<int> iface;
        interface.for_each([&](int v) { iface.push_back(pos[new_of[v]]); });
        for (size_t i = 0; i < iface.size(); ++i)
            for (size_t j = i + 1; j < iface.size(); ++j)
                if (!t.has_edge(iface[i], iface[j])) t.add_edge(iface[i], iface[j]);
        return is_planar(t).planar();
    }

    bool solve(const VertexSet& region, const VertexSet& interface) {
        auto key = std::make_pair(region, interface);
        auto it = state.find(key);
        if (it != state.end()) return it->second == 2 ? true : false;
        state[key] = 1;
        std::vector<int> free = (region - interface).to_vector();
        bool found = false;
        VertexSet winner(g.num_vertices());
        for (uint64_t mask = 0; mask < (uint64_t(1) << free.size()) && !found; ++mask) {
            VertexSet bag = interface;
            for (size_t i = 0; i < free.size(); ++i)
                if (mask >> i & 1) bag.add(free[i]);
            if (bag.empty()) continue;
            if (!bag_ok(region, bag, interface)) continue;
            bool ok = true;
            for (const VertexSet& comp : components_within(g, region - bag)) {
                VertexSet nb = neighborhood(g, comp) & region;
                auto child = std::make_pair(comp | nb, nb);
                if (state.count(child) && state[child] == 1) {
                    ok = false;  // would repeat an open subproblem
                    break;
                }
                if (!solve(child.first, child.second)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                winner = bag;
            }
        }
        state[key] = found ? 2 : 3;
        if (found) chosen_bag[key] = winner;
        return found;
    }

    // Rebuild the decomposition tree from the recorded bag choices.
    int emit(const VertexSet& region, const VertexSet& interface, PlanarWidthDecomposition& out) {
        VertexSet bag = chosen_bag.at({region, interface});
        int node = int(out.base.bags.size());
        out.base.bags.push_back(bag);
        out.tags.push_back(bag.count() <= k + 1 ? BagTag::small : BagTag::planar_torso);
        for (const VertexSet& comp : components_within(g, region - bag)) {
            VertexSet nb = neighborhood(g, comp) & region;
            int child = emit(comp | nb, nb, out);
            out.base.tree_edges.push_back({node, child});
        }
        return node;
    }
};

}  // namespace

bool planar_treewidth_at_most(const Graph& g, int k, int size_ceiling,
                              PlanarWidthDecomposition* certificate) {
    if (k < 0) return false;
    if (g.num_vertices() > size_ceiling) throw std::length_error("planar_treewidth_at_most: size ceiling exceeded");
    if (g.num_vertices() == 0) {
        if (certificate) *certificate = PlanarWidthDecomposition{};
        return true;
    }
    PtwSolver solver{g, k, {}, {}};
    VertexSet full = VertexSet::full(g.num_vertices());
    if (!solver.solve(full, VertexSet(g.num_vertices()))) return false;
    if (certificate) {
        PlanarWidthDecomposition pw;
        solver.emit(full, VertexSet(g.num_vertices()), pw);
        *certificate = pw;
    }
    return true;
}

std::vector<VertexSet> adhesions(const TreeDecomposition& td) {
    std::vector<VertexSet> out;
    for (auto [a, b] : td.tree_edges) out.push_back(td.bags[a] & td.bags[b]);
    return out;
}

nlohmann::json tree_decomposition_to_json(const TreeDecomposition& td) {
    nlohmann::json bags = nlohmann::json::array();
    for (const VertexSet& b : td.bags) bags.push_back(b.to_vector());
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
    return {{"bags", bags}, {"edges", edges}};
}

TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j, int universe) {
    TreeDecomposition td;
    for (const auto& bag : j.at("bags")) {
        VertexSet b(universe);
        for (int v : bag) b.add(v);
        td.bags.push_back(b);
    }
    for (const auto& e : j.at("edges")) td.tree_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return td;
}

}  // namespace hplanar
