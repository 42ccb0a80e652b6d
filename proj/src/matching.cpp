#include "hplanar/matching.hpp"

#include <algorithm>
#include <cassert>

#include "hplanar/hclass.hpp"
#include "hplanar/modulator.hpp"

namespace hplanar {

Rational pmm_bruteforce(const Graph& g, int size_ceiling) {
    int n = g.num_vertices();
    if (n > size_ceiling) throw std::length_error("pmm_bruteforce: size ceiling exceeded");
    if (n % 2 != 0) return 0;
    std::vector<bool> used(n, false);
    Rational total = 0;
    // match the lowest unused vertex at each step
    std::function<void(int, const Rational&)> rec = [&](int from, const Rational& acc) {
        int v = from;
        while (v < n && used[v]) ++v;
        if (v == n) {
            total += acc;
            return;
        }
        used[v] = true;
        g.neighbors(v).for_each([&](int u) {
            if (u < v || used[u]) return;
            used[u] = true;
            rec(v + 1, acc * g.weight(v, u));
            used[u] = false;
        });
        used[v] = false;
    };
    rec(0, Rational(1));
    return total;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
    int n = int(a.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (int c2 = col; c2 < n; ++c2) a[row][c2] -= f * a[col][c2];
        }
    }
    return det;
}

// pmm of a 2-connected planar graph by FKT: build a Pfaffian orientation
// (every face except one has an odd number of co-oriented boundary edges,
// constructed leaves-first along the dual spanning tree formed by the
// non-tree edges), then pmm = sqrt(det of the signed skew matrix).
Rational fkt_two_connected(const Graph& g) {
    int n = g.num_vertices();
    auto res = is_planar(g);
    if (!res.planar()) throw std::invalid_argument("fkt_pmm: input is not planar");
    const RotationSystem& rs = *res.embedding;

    // trace faces; record the face of each directed edge
    std::map<std::pair<int, int>, int> face_of;
    std::vector<std::vector<std::pair<int, int>>> faces;
    auto next_at = [&](int v, int from) {
        const auto& ord = rs.order[v];
        for (size_t i = 0; i < ord.size(); ++i)
            if (ord[i] == from) return ord[(i + 1) % ord.size()];
        return -1;
    };
    for (int v = 0; v < n; ++v)
        for (int w : rs.order[v]) {
            if (face_of.count({v, w})) continue;
            int id = int(faces.size());
            faces.push_back({});
            std::pair<int, int> e{v, w};
            do {
                face_of[e] = id;
                faces[id].push_back(e);
                e = {e.second, next_at(e.second, e.first)};
            } while (e != std::make_pair(v, w));
        }

    // primal spanning tree (BFS), tree edges oriented parent -> child
    std::map<std::pair<int, int>, int> oriented;  // (u,v) with u<v -> +1 if u->v, -1 if v->u
    auto key = [](int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); };
    auto set_orient = [&](int from, int to) { oriented[key(from, to)] = from < to ? 1 : -1; };
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        g.neighbors(u).for_each([&](int v) {
            if (!seen[v]) {
                seen[v] = true;
                set_orient(u, v);
                queue.push_back(v);
            }
        });
    }

    // dual tree over faces via the non-tree edges
    int f = int(faces.size());
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> dual(f);  // (face, primal edge)
    for (auto [u, v] : g.edges()) {
        if (oriented.count(key(u, v))) continue;  // tree edge
        int f1 = face_of[{u, v}], f2 = face_of[{v, u}];
        dual[f1].push_back({f2, {u, v}});
        dual[f2].push_back({f1, {u, v}});
    }
    std::vector<int> parent(f, -2), order;
    std::vector<std::pair<int, int>> parent_edge(f, {-1, -1});
    parent[0] = -1;
    order.push_back(0);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int fu = order[qi];
        for (auto& [fv, e] : dual[fu])
            if (parent[fv] == -2) {
                parent[fv] = fu;
                parent_edge[fv] = e;
                order.push_back(fv);
            }
    }
    // leaves first: reverse BFS order; orient each face's parent edge to make
    // the number of co-oriented boundary arcs odd
    for (size_t qi = order.size(); qi-- > 1;) {
        int fc = order[qi];
        auto pe = parent_edge[fc];
        int agree = 0;
        std::pair<int, int> pe_arc{-1, -1};
        for (auto [x, y] : faces[fc]) {
            if (key(x, y) == key(pe.first, pe.second)) {
                pe_arc = {x, y};
                continue;
            }
            int o = oriented.at(key(x, y));
            if ((x < y && o == 1) || (x > y && o == -1)) ++agree;
        }
        if (agree % 2 == 0)
            set_orient(pe_arc.first, pe_arc.second);
        else
            set_orient(pe_arc.second, pe_arc.first);
    }

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (auto [u, v] : g.edges()) {
        Rational w = g.weight(u, v);
        int o = oriented.at(key(u, v));
        a[u][v] = o == 1 ? w : -w;
        a[v][u] = -a[u][v];
    }
    Rational det = determinant(std::move(a));
    auto root = exact_sqrt(det);
    if (!root) throw std::logic_error("fkt_pmm: determinant is not a perfect square");
    return *root;
}

Rational pmm_connected(const Graph& g);

Rational pmm_component_product(const Graph& g) {
    Rational total = 1;
    for (const VertexSet& comp : connected_components(g)) {
        total *= pmm_connected(g.induced(comp));
        if (total == 0) return 0;
    }
    return total;
}

Rational pmm_connected(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return 1;
    if (n % 2 != 0) return 0;
    if (n == 2) return g.has_edge(0, 1) ? g.weight(0, 1) : Rational(0);
    // split at a cut vertex: it is matched into exactly one piece
    VertexSet full = VertexSet::full(n);
    for (int v = 0; v < n; ++v) {
        VertexSet rest = full;
        rest.remove(v);
        auto comps = components_within(g, rest);
        if (comps.size() < 2) continue;
        Rational total = 0;
        for (size_t i = 0; i < comps.size(); ++i) {
            VertexSet with_v = comps[i];
            with_v.add(v);
            Rational term = pmm_component_product(g.induced(with_v));
            for (size_t j = 0; j < comps.size() && term != 0; ++j)
                if (j != i) term *= pmm_component_product(g.induced(comps[j]));
            total += term;
        }
        return total;
    }
    return fkt_two_connected(g);
}

}  // namespace

Rational fkt_pmm(const Graph& g) {
    if (!is_planar(g).planar()) throw std::invalid_argument("fkt_pmm: input is not planar");
    return pmm_component_product(g);
}

Rational combine_separation_pmm(const Graph& g, const Separation& sep,
                                const std::function<Rational(const Graph&)>& side_pmm) {
    if (!verify_separation(g, sep)) throw std::invalid_argument("combine_separation_pmm: invalid separation");
    VertexSet boundary = sep.left & sep.right;
    int b = boundary.count();
    if (b != 2 && b != 3) throw std::invalid_argument("combine_separation_pmm: order must be 2 or 3");
    std::vector<int> bverts = boundary.to_vector();

    // right side without the edges inside the boundary
    auto right_side_minus = [&](const VertexSet& gamma) {
        std::vector<int> old_of;
        Graph r = g.induced(sep.right - gamma, &old_of);
        Graph clean(r.num_vertices());
        for (auto [u, v] : r.edges()) {
            if (boundary.contains(old_of[u]) && boundary.contains(old_of[v])) continue;
            if (r.has_explicit_weight(u, v))
                clean.add_edge(u, v, r.weight(u, v));
            else
                clean.add_edge(u, v);
        }
        return clean;
    };

    Rational total = 0;
    for_each_subset(g.num_vertices(), bverts, [&](const VertexSet& gamma) {
        Graph left = g.induced(sep.left - (boundary - gamma));
        Rational lp = side_pmm(left);
        if (lp == 0) return;
        total += lp * side_pmm(right_side_minus(gamma));
    });
    return total;
}

namespace {

// mpq comparisons are only defined on canonical values, and callers may build
// counts with mpq_class(p, q), which does not reduce.
ConditionalCounts canonical_counts(const ConditionalCounts& p) {
    ConditionalCounts out;
    for (const auto& [mask, val] : p) {
        Rational c = val;
        c.canonicalize();
        out[mask] = c;
    }
    return out;
}

}  // namespace

bool validate_matchgate(const MatchgateGadget& gadget, const ConditionalCounts& raw) {
    ConditionalCounts p = canonical_counts(raw);
    int b = int(gadget.boundary.size());
    VertexSet all_boundary(gadget.graph.num_vertices());
    for (int v : gadget.boundary) all_boundary.add(v);
    for (uint32_t mask = 0; mask < (uint32_t(1) << b); ++mask) {
        if (int(__builtin_popcount(mask)) % 2 != gadget.parity % 2) continue;
        VertexSet keep = VertexSet::full(gadget.graph.num_vertices());
        for (int i = 0; i < b; ++i)
            if (!(mask >> i & 1)) keep.remove(gadget.boundary[i]);
        Rational want = 0;
        if (auto it = p.find(mask); it != p.end()) want = it->second;
        if (pmm_bruteforce(gadget.graph.induced(keep)) != want) return false;
    }
    return true;
}

namespace {

Rational p_at(const ConditionalCounts& p, uint32_t mask) {
    auto it = p.find(mask);
    return it == p.end() ? Rational(0) : it->second;
}

}  // namespace

std::optional<MatchgateGadget> synthesize_matchgate(int boundary_size, int parity,
                                                    const ConditionalCounts& raw) {
    if ((boundary_size != 2 && boundary_size != 3) || (parity != 0 && parity != 1))
        throw std::invalid_argument("synthesize_matchgate: boundary size must be 2 or 3, parity 0 or 1");
    ConditionalCounts p = canonical_counts(raw);
    for (const auto& [mask, val] : p) {
        if (mask >= (uint32_t(1) << boundary_size)) throw std::invalid_argument("bad gamma mask");
        if (int(__builtin_popcount(mask)) % 2 != parity && val != 0)
            throw std::invalid_argument("nonzero count with infeasible parity");
        if (val < 0) throw std::invalid_argument("negative conditional count");
    }

    MatchgateGadget gadget;
    gadget.parity = parity;
    if (boundary_size == 2) {
        gadget.boundary = {0, 1};
        if (parity == 0) {
            // path a - u - v - b: gamma={a,b} uses the two outer edges,
            // gamma={} leaves the middle edge
            Graph g(4);
            g.add_edge(0, 2, p_at(p, 0b11));
            g.add_edge(2, 3, p_at(p, 0b00));
            g.add_edge(3, 1, Rational(1));
            gadget.graph = g;
        } else {
            // path a - u - b
            Graph g(3);
            g.add_edge(0, 2, p_at(p, 0b01));
            g.add_edge(1, 2, p_at(p, 0b10));
            gadget.graph = g;
        }
    } else if (parity == 1) {
        Rational pa = p_at(p, 0b001), pb = p_at(p, 0b010), pc = p_at(p, 0b100), pabc = p_at(p, 0b111);
        gadget.boundary = {0, 1, 2};
        if (pabc == 0) {
            // claw: center 3 adjacent to a,b,c; the full gadget has no
            // perfect matching, single exposures read the spoke weights
            Graph g(4);
            g.add_edge(0, 3, pa);
            g.add_edge(1, 3, pb);
            g.add_edge(2, 3, pc);
            gadget.graph = g;
        } else {
            // pendant triangle d_a d_b d_c with pendants a,b,c
            Graph g(6);  // d_a=3, d_b=4, d_c=5
            g.add_edge(0, 3, pabc);
            g.add_edge(1, 4, Rational(1));
            g.add_edge(2, 5, Rational(1));
            g.add_edge(4, 5, pa / pabc);
            g.add_edge(3, 5, pb);
            g.add_edge(3, 4, pc);
            gadget.graph = g;
        }
    } else {
        Rational p0 = p_at(p, 0b000), pab = p_at(p, 0b011), pac = p_at(p, 0b101), pbc = p_at(p, 0b110);
        gadget.boundary = {0, 1, 2};
        if (pab == 0 && pac == 0 && pbc == 0) {
            if (p0 == 0) {
                Graph g(4);  // everything isolated: all counts 0
                gadget.graph = g;
            } else {
                Graph g(5);  // isolated boundary plus one internal edge
                g.add_edge(3, 4, p0);
                gadget.graph = g;
            }
        } else {
            // spider: pendants a-u_a, b-u_b, c-u_c; triangle u_a u_b u_c;
            // center m adjacent to all u. Pair exposures read the opposite
            // spoke of m; the empty exposure reads one triangle edge.
            Graph g(7);  // u_a=3, u_b=4, u_c=5, m=6
            g.add_edge(0, 3, Rational(1));
            g.add_edge(1, 4, Rational(1));
            g.add_edge(2, 5, Rational(1));
            g.add_edge(6, 5, pab);
            g.add_edge(6, 4, pac);
            g.add_edge(6, 3, pbc);
            Rational ta = 0, tb = 0, tc = 0;
            if (pbc != 0)
                ta = p0 / pbc;
            else if (pac != 0)
                tb = p0 / pac;
            else
                tc = p0 / pab;
            g.add_edge(4, 5, ta);
            g.add_edge(3, 5, tb);
            g.add_edge(3, 4, tc);
            gadget.graph = g;
        }
    }
    if (!validate_matchgate(gadget, p)) return std::nullopt;
    return gadget;
}

namespace {

// Evaluator for side subgraphs (component plus exposed boundary vertices):
// planar sides go through FKT, members of h through the class solver, the
// rest through enumeration.
Rational side_count(const HClass& h, const Graph& side) {
    if (planar(side)) return fkt_pmm(side);
    if (h.pmm_solver && h.contains(side)) return h.pmm_solver(side);
    return pmm_bruteforce(side);
}

// Graph on comp ∪ gamma with the component's edges and the gamma-comp edges;
// edges inside gamma belong to the other side of the separation.
Graph conditional_side(const Graph& g, const VertexSet& comp, const VertexSet& gamma) {
    std::vector<int> ids;
    Graph ind = g.induced(comp | gamma, &ids);
    Graph side(ind.num_vertices());
    for (auto [u, v] : ind.edges()) {
        if (gamma.contains(ids[u]) && gamma.contains(ids[v])) continue;
        if (ind.has_explicit_weight(u, v))
            side.add_edge(u, v, ind.weight(u, v));
        else
            side.add_edge(u, v);
    }
    return side;
}

std::string describe_component(const VertexSet& comp, int boundary_size) {
    return "component at vertex " + std::to_string(comp.first()) + " (size " +
           std::to_string(comp.count()) + ", boundary " + std::to_string(boundary_size) + ")";
}

}  // namespace

Rational hplanar_pmm(const Graph& g, const HClass& h, const PlanarModulator& x,
                     PmmTranscript* transcript) {
    auto note = [&](const std::string& s) {
        if (transcript) transcript->steps.push_back(s);
    };
    if (!verify_planar_modulator(g, h, x.x))
        throw std::invalid_argument("hplanar_pmm: set is not a planar H-modulator");
    int n = g.num_vertices();
    std::vector<VertexSet> comps = components_within(g, x.x.complement());

    struct CompPlan {
        VertexSet comp;
        std::vector<int> nb;
        int parity;
        ConditionalCounts counts;                // boundary size 2..3 only
        std::optional<MatchgateGadget> gadget;   // placed components
    };
    std::vector<CompPlan> plans;
    int fallback_at = -1;
    for (const VertexSet& comp : comps) {
        CompPlan plan{comp, neighborhood(g, comp).to_vector(), comp.count() & 1, {}, std::nullopt};
        int b = int(plan.nb.size());
        if (b >= 2 && b <= 3) {
            for (uint32_t mask = 0; mask < (1u << b); ++mask) {
                if (__builtin_popcount(mask) % 2 != plan.parity) continue;
                VertexSet gamma(n);
                for (int i = 0; i < b; ++i)
                    if ((mask >> i) & 1) gamma.add(plan.nb[i]);
                plan.counts[mask] = side_count(h, conditional_side(g, comp, gamma));
            }
            plan.gadget = synthesize_matchgate(b, plan.parity, plan.counts);
        }
        bool unplaceable = b >= 4 || (b >= 2 && !plan.gadget);
        plans.push_back(std::move(plan));
        if (unplaceable && fallback_at == -1) fallback_at = int(plans.size()) - 1;
    }

    // A component the splice cannot place is peeled off by the combination
    // identity: sum over the exposed boundary subsets, recursing on the rest.
    auto peel = [&](int idx) -> Rational {
        const CompPlan* fallback = &plans[idx];
        int b = int(fallback->nb.size());
        note(describe_component(fallback->comp, b) + ": direct combination");
        Rational total = 0;
        for (uint32_t mask = 0; mask < (1u << b); ++mask) {
            if (__builtin_popcount(mask) % 2 != fallback->parity) continue;
            VertexSet gamma(n);
            for (int i = 0; i < b; ++i)
                if ((mask >> i) & 1) gamma.add(fallback->nb[i]);
            Rational pg = side_count(h, conditional_side(g, fallback->comp, gamma));
            if (pg == 0) continue;
            std::vector<int> ids;
            Graph rest = g.induced((fallback->comp | gamma).complement(), &ids);
            VertexSet x2(rest.num_vertices());
            for (size_t i = 0; i < ids.size(); ++i)
                if (x.x.contains(ids[i])) x2.add(int(i));
            auto m2 = attest_planar_modulator(rest, h, x2);
            if (!m2) throw std::logic_error("hplanar_pmm: residual modulator failed verification");
            total += pg * hplanar_pmm(rest, h, *m2, transcript);
        }
        return total;
    };
    if (fallback_at >= 0) return peel(fallback_at);

    // Everything is placeable: multiply out the closed components, turn
    // odd 1-boundary components into weighted pendants, splice the gadgets
    // into the modulator graph and finish with one FKT run.
    Rational prefactor = 1;
    struct Pendant {
        int at;
        Rational w;
    };
    std::vector<Pendant> pendants;
    int extra = 0;
    for (const CompPlan& plan : plans) {
        int b = int(plan.nb.size());
        if (b == 0) {
            Rational f = side_count(h, g.induced(plan.comp));
            note(describe_component(plan.comp, 0) + ": factor " + format_rational(f));
            if (f == 0) return 0;
            prefactor *= f;
        } else if (b == 1) {
            if (plan.parity == 0) {
                // the boundary vertex cannot be matched into an even component
                Rational f = side_count(h, g.induced(plan.comp));
                note(describe_component(plan.comp, 1) + ": factor " + format_rational(f));
                if (f == 0) return 0;
                prefactor *= f;
            } else {
                VertexSet gamma(n);
                gamma.add(plan.nb[0]);
                Rational w = side_count(h, conditional_side(g, plan.comp, gamma));
                note(describe_component(plan.comp, 1) + ": pendant of weight " + format_rational(w));
                pendants.push_back({plan.nb[0], w});
            }
        } else {
            note(describe_component(plan.comp, b) + ": matchgate with " +
                 std::to_string(plan.gadget->graph.num_vertices() - b) + " internal vertices");
            extra += plan.gadget->graph.num_vertices() - b;
        }
    }

    std::vector<int> x_ids = x.x.to_vector();
    std::vector<int> hv(n, -1);
    for (size_t i = 0; i < x_ids.size(); ++i) hv[x_ids[i]] = int(i);
    Graph host(int(x_ids.size()) + int(pendants.size()) + extra);
    for (auto [u, v] : g.edges())
        if (hv[u] >= 0 && hv[v] >= 0) {
            if (g.has_explicit_weight(u, v))
                host.add_edge(hv[u], hv[v], g.weight(u, v));
            else
                host.add_edge(hv[u], hv[v]);
        }
    int cursor = int(x_ids.size());
    for (const Pendant& p : pendants) host.add_edge(hv[p.at], cursor++, p.w);
    for (const CompPlan& plan : plans) {
        if (plan.nb.size() < 2) continue;
        const MatchgateGadget& gadget = *plan.gadget;
        std::vector<int> place(gadget.graph.num_vertices(), -1);
        for (size_t i = 0; i < gadget.boundary.size(); ++i) place[gadget.boundary[i]] = hv[plan.nb[i]];
        for (int v = 0; v < gadget.graph.num_vertices(); ++v)
            if (place[v] == -1) place[v] = cursor++;
        for (auto [u, v] : gadget.graph.edges()) {
            assert(place[u] >= int(x_ids.size()) || place[v] >= int(x_ids.size()));
            host.add_edge(place[u], place[v], gadget.graph.weight(u, v));
        }
    }
    // Gadgets sharing boundary vertices can crowd one another out of the
    // embedding; in that case peel one of them and retry on the rest.
    if (!planar(host)) {
        for (size_t i = 0; i < plans.size(); ++i)
            if (plans[i].nb.size() >= 2) {
                note("spliced host is not planar; peeling " +
                     describe_component(plans[i].comp, int(plans[i].nb.size())));
                return peel(int(i));
            }
        throw std::logic_error("hplanar_pmm: non-planar host without splice components");
    }
    Rational result = prefactor * fkt_pmm(host);
    note("fkt on spliced host (" + std::to_string(host.num_vertices()) + " vertices): total " +
         format_rational(result));
    return result;
}

}  // namespace hplanar
