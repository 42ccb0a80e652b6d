#include "hplanar/approx.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace hplanar {

namespace {

// Child lists of the base tree rooted at node 0.
std::vector<std::vector<int>> root_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(nodes), children(nodes);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(nodes, -2);
    std::vector<int> queue{0};
    parent[0] = -1;
    for (size_t q = 0; q < queue.size(); ++q) {
        int u = queue[q];
        for (int w : adj[u])
            if (parent[w] == -2) {
                parent[w] = u;
                children[u].push_back(w);
                queue.push_back(w);
            }
    }
    return children;
}

bool independent_in(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int u) {
        (g.neighbors(u) & s).for_each([&](int) { ok = false; });
    });
    return ok;
}

}  // namespace

VertexSet treedec_is_dp(const Graph& g, const HClass& h, const HTreeDecomposition& htd) {
    if (!h.independent_set_solver)
        throw std::invalid_argument("treedec_is_dp: class has no independent-set solver");
    std::string why;
    if (!verify_h_tree_decomposition(g, h, htd, &why))
        throw std::invalid_argument("treedec_is_dp: decomposition rejected: " + why);
    int n = g.num_vertices();
    std::vector<VertexSet> bags = htd.base.bags;
    std::vector<std::pair<int, int>> tree_edges = htd.base.tree_edges;
    if (bags.empty()) bags.push_back(VertexSet(n));
    int nodes = int(bags.size());
    std::vector<std::vector<int>> children = root_tree(nodes, tree_edges);

    // each leaf component is resolved at the first bag holding its boundary
    std::vector<std::vector<int>> attach(nodes);
    for (size_t c = 0; c < htd.leaf_components.size(); ++c) {
        VertexSet nb = neighborhood(g, htd.leaf_components[c]);
        for (int u = 0; u < nodes; ++u)
            if (nb.subset_of(bags[u])) {
                attach[u].push_back(int(c));
                break;
            }
    }

    struct Entry {
        long long value;
        VertexSet set;
    };
    std::vector<std::map<VertexSet, Entry>> table(nodes);

    std::function<void(int, const VertexSet&)> dfs = [&](int u, const VertexSet& parent_bag) {
        for (int w : children[u]) dfs(w, bags[u]);
        std::vector<int> bv = bags[u].to_vector();
        for (uint64_t mask = 0; mask < (uint64_t(1) << bv.size()); ++mask) {
            VertexSet s(n);
            for (size_t i = 0; i < bv.size(); ++i)
                if ((mask >> i) & 1) s.add(bv[i]);
            if (!independent_in(g, s)) continue;
            VertexSet own = s - parent_bag;  // counted at the topmost bag only
            Entry e{own.count(), own};
            for (int c : attach[u]) {
                const VertexSet& comp = htd.leaf_components[c];
                VertexSet free = comp - neighborhood(g, s);
                std::vector<int> ids;
                VertexSet local = h.independent_set_solver(g.induced(free, &ids));
                local.for_each([&](int v) { e.set.add(ids[v]); });
                e.value += local.count();
            }
            bool feasible = true;
            for (int w : children[u]) {
                const Entry* best = nullptr;
                for (const auto& [sw, ew] : table[w])
                    if ((sw & bags[u]) == (s & bags[w]) && (!best || ew.value > best->value)) best = &ew;
                if (!best) {
                    feasible = false;
                    break;
                }
                e.value += best->value;
                e.set |= best->set;
            }
            if (feasible) table[u][s] = e;
        }
    };
    dfs(0, VertexSet(n));

    const Entry* best = nullptr;
    VertexSet root_set(n);
    for (const auto& [s, e] : table[0])
        if (!best || e.value > best->value) {
            best = &e;
            root_set = s;
        }
    assert(best != nullptr);  // the empty selection is always a state
    VertexSet result = best->set | root_set;
    if (!independent_in(g, result)) throw std::logic_error("treedec_is_dp: assembled set is not independent");
    return result;
}

BakerRun baker_independent_set(const Graph& g, const HClass& h, const PlanarModulator& x,
                               const Rational& epsilon) {
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("baker_independent_set: epsilon must lie strictly between 0 and 1");
    if (!h.independent_set_solver)
        throw std::invalid_argument("baker_independent_set: class has no independent-set solver");
    if (!verify_planar_modulator(g, h, x.x))
        throw std::invalid_argument("baker_independent_set: set is not a planar H-modulator");
    int n = g.num_vertices();

    // smallest k with 2/k <= epsilon
    Rational inv = Rational(2) / epsilon;
    Integer k_int = (inv.get_num() + inv.get_den() - 1) / inv.get_den();
    int k = int(k_int.get_si());

    BakerRun run;
    run.epsilon = epsilon;
    run.k = k;
    run.strata.assign(k, VertexSet(n));
    run.chosen = 0;
    run.result = VertexSet(n);
    if (n == 0) return run;

    // BFS layers of the torso, rooted at the lowest-index vertex of each
    // torso component; layer residues mod k define the strata
    std::vector<int> xid = x.x.to_vector();
    Graph t = torso(g, x.x);
    std::vector<int> layer(t.num_vertices(), -1);
    for (const VertexSet& comp : connected_components(t)) {
        BfsLayers bl = bfs_layers(t, comp.first());
        for (size_t d = 0; d < bl.layers.size(); ++d)
            (bl.layers[d] & comp).for_each([&](int v) { layer[v] = int(d); });
    }
    std::vector<int> layer_of(n, -1);
    for (size_t i = 0; i < xid.size(); ++i) {
        run.strata[layer[i] % k].add(xid[i]);
        layer_of[xid[i]] = layer[i];
    }

    std::vector<VertexSet> comps = components_within(g, x.x.complement());
    for (const VertexSet& comp : comps) {
        // clique boundaries live in at most two consecutive layers
        int lo = n, hi = -1;
        neighborhood(g, comp).for_each([&](int v) {
            lo = std::min(lo, layer_of[v]);
            hi = std::max(hi, layer_of[v]);
        });
        assert(hi - lo <= 1);
        (void)lo;
        (void)hi;
    }

    long long best = -1;
    for (int i = 0; i < k; ++i) {
        VertexSet xi = x.x - run.strata[i];
        VertexSet keep = xi;
        for (const VertexSet& comp : comps)
            if (neighborhood(g, comp).subset_of(xi)) keep |= comp;
        std::vector<int> ids;
        Graph gi = g.induced(keep, &ids);
        VertexSet xi_local(gi.num_vertices());
        for (size_t j = 0; j < ids.size(); ++j)
            if (xi.contains(ids[j])) xi_local.add(int(j));

        HTreeDecomposition htd;
        htd.x = xi_local;
        Graph ti = torso(gi, xi_local);
        std::vector<int> til = xi_local.to_vector();
        TreeDecomposition td = few_layer_tree_decomposition(ti, k);
        for (const VertexSet& bag : td.bags) {
            VertexSet b(gi.num_vertices());
            bag.for_each([&](int v) { b.add(til[v]); });
            htd.base.bags.push_back(b);
        }
        htd.base.tree_edges = td.tree_edges;
        if (htd.base.bags.empty()) htd.base.bags.push_back(VertexSet(gi.num_vertices()));
        htd.leaf_components = components_within(gi, xi_local.complement());

        VertexSet local = treedec_is_dp(gi, h, htd);
        VertexSet lifted(n);
        local.for_each([&](int v) { lifted.add(ids[v]); });
        if (lifted.count() > best) {
            best = lifted.count();
            run.chosen = i;
            run.result = lifted;
        }
    }
    if (!independent_in(g, run.result))
        throw std::logic_error("baker_independent_set: result is not independent");
    return run;
}

namespace {

// Shared exact palette for the residual components; returns the palette size
// and writes component colors starting at 0.
int color_components(const Graph& g, const std::vector<VertexSet>& comps, std::vector<int>& col) {
    int chi = 0;
    for (const VertexSet& comp : comps) {
        std::vector<int> ids;
        Graph sub = g.induced(comp, &ids);
        auto c = exact_color(sub);
        if (!c) throw std::length_error("coloring: component too large for the exact palette");
        chi = std::max(chi, c->color_count);
        for (int v = 0; v < sub.num_vertices(); ++v) col[ids[v]] = c->color[v];
    }
    return chi;
}

// Compacts to a surjective palette 0..m-1 (bounds only ever shrink) and
// checks propriety.
Coloring finish_coloring(const Graph& g, std::vector<int> col, int count) {
    std::map<int, int> remap;
    for (int c : col)
        if (c >= 0) remap.emplace(c, 0);
    int next = 0;
    for (auto& [from, to] : remap) to = next++;
    for (int& c : col)
        if (c >= 0) c = remap[c];
    assert(next <= count);
    (void)count;
    Coloring out{std::move(col), next};
    if (!verify_coloring(g, out)) throw std::logic_error("coloring: produced assignment is not proper");
    return out;
}

}  // namespace

Coloring additive_color(const Graph& g, const HClass& h, const PlanarModulator& x) {
    if (!h.chromatic_solver) throw std::invalid_argument("additive_color: class has no chromatic solver");
    if (!verify_planar_modulator(g, h, x.x))
        throw std::invalid_argument("additive_color: set is not a planar H-modulator");
    std::vector<int> col(g.num_vertices(), -1);
    int chi = color_components(g, components_within(g, x.x.complement()), col);
    std::vector<int> xid = x.x.to_vector();
    Coloring tc = planar_color(torso(g, x.x));
    for (size_t i = 0; i < xid.size(); ++i) col[xid[i]] = chi + tc.color[i];
    return finish_coloring(g, std::move(col), chi + tc.color_count);
}

Coloring ptd_color(const Graph& g, const HClass& h, const EliminationSequence& seq) {
    if (!h.chromatic_solver) throw std::invalid_argument("ptd_color: class has no chromatic solver");
    std::string why;
    if (!verify_elimination_sequence(g, h, seq, &why))
        throw std::invalid_argument("ptd_color: sequence rejected: " + why);
    int n = g.num_vertices();
    VertexSet remaining = VertexSet::full(n);
    for (const VertexSet& layer : seq.layers) remaining -= layer;

    std::vector<int> col(n, -1);
    int used = color_components(g, components_within(g, remaining), col);

    // one fresh planar palette per layer
    VertexSet live = VertexSet::full(n);
    for (const VertexSet& layer : seq.layers) {
        std::vector<int> ids;
        Graph gl = g.induced(live, &ids);
        VertexSet layer_local(gl.num_vertices());
        for (size_t i = 0; i < ids.size(); ++i)
            if (layer.contains(ids[i])) layer_local.add(int(i));
        std::vector<int> lid = layer_local.to_vector();
        Coloring tc = planar_color(torso(gl, layer_local));
        for (size_t i = 0; i < lid.size(); ++i) col[ids[lid[i]]] = used + tc.color[i];
        used += tc.color_count;
        live -= layer;
    }
    return finish_coloring(g, std::move(col), used);
}

namespace {

// Proper coloring of `graph` with colors < palette extending `fixed`
// (-1 = free); exact backtracking. Returns false if impossible.
bool extend_coloring(const Graph& graph, std::vector<int>& fixed, int palette) {
    std::vector<int> order;
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (fixed[v] == -1) order.push_back(v);
    std::function<bool(size_t)> rec = [&](size_t at) {
        if (at == order.size()) return true;
        int v = order[at];
        for (int c = 0; c < palette; ++c) {
            bool ok = true;
            graph.neighbors(v).for_each([&](int u) {
                if (fixed[u] == c) ok = false;
            });
            if (!ok) continue;
            fixed[v] = c;
            if (rec(at + 1)) return true;
            fixed[v] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

Coloring ptw_color(const Graph& g, const HClass& h, const HTreeDecomposition& htd,
                   const std::vector<BagTag>& tags, int k) {
    if (!h.chromatic_solver) throw std::invalid_argument("ptw_color: class has no chromatic solver");
    std::string why;
    if (!verify_h_tree_decomposition(g, h, htd, &why))
        throw std::invalid_argument("ptw_color: decomposition rejected: " + why);
    // the tagged base must be a planar-width-k decomposition of the torso
    int n = g.num_vertices();
    std::vector<int> xid = htd.x.to_vector();
    std::vector<int> new_of(n, -1);
    for (size_t i = 0; i < xid.size(); ++i) new_of[xid[i]] = int(i);
    PlanarWidthDecomposition pw;
    for (const VertexSet& bag : htd.base.bags) {
        VertexSet b(int(xid.size()));
        bag.for_each([&](int v) { b.add(new_of[v]); });
        pw.base.bags.push_back(b);
    }
    pw.base.tree_edges = htd.base.tree_edges;
    pw.tags = tags;
    if (!verify_planar_width(torso(g, htd.x), pw, k, &why))
        throw std::invalid_argument("ptw_color: planar-width certificate rejected: " + why);

    std::vector<int> col(n, -1);
    int chi = color_components(g, components_within(g, htd.x.complement()), col);

    // torso palette target; escalation below records any overshoot
    int palette = std::max(g.num_vertices() <= 40 ? 4 : 5, k + 1);
    int used = 0;

    int nodes = int(pw.base.bags.size());
    std::vector<std::vector<int>> children = root_tree(std::max(nodes, 1), htd.base.tree_edges);
    std::vector<int> torso_col(n, -1);  // over g ids, torso palette starting at 0
    std::vector<int> preorder{0};
    for (size_t q = 0; q < preorder.size() && nodes > 0; ++q)
        for (int w : children[preorder[q]]) preorder.push_back(w);
    for (size_t q = 0; q < preorder.size() && nodes > 0; ++q) {
        const VertexSet& bag = htd.base.bags[preorder[q]];
        std::vector<int> ids;
        Graph hb = torso(g, bag);
        ids = bag.to_vector();
        std::vector<int> fixed(hb.num_vertices(), -1);
        for (size_t i = 0; i < ids.size(); ++i) fixed[i] = torso_col[ids[i]];
        int p = palette;
        while (!extend_coloring(hb, fixed, p)) ++p;
        used = std::max(used, p);
        for (size_t i = 0; i < ids.size(); ++i) torso_col[ids[i]] = fixed[i];
    }
    for (int v : xid) col[v] = chi + torso_col[v];
    return finish_coloring(g, std::move(col), chi + (xid.empty() ? 0 : used));
}

}  // namespace hplanar
