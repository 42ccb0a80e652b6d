#include "hplanar/hardness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hplanar/hclass.hpp"
#include "hplanar/planarity.hpp"

namespace hplanar {

namespace {

int literal_vertex(const ReductionOutput& red, int lit) {
    return lit > 0 ? red.pos_vertex[lit - 1] : red.neg_vertex[-lit - 1];
}

}  // namespace

Graph formula_graph(const PlanarCnf& phi) {
    int n = phi.num_variables, m = int(phi.clauses.size());
    Graph g(2 * n + m);
    for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
    for (int j = 0; j < m; ++j)
        for (int lit : phi.clauses[j]) {
            int v = lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1;
            if (!g.has_edge(v, 2 * n + j)) g.add_edge(v, 2 * n + j);
        }
    return g;
}

std::optional<std::string> planar_cnf_violation(const PlanarCnf& phi) {
    if (phi.num_variables < 0) return "negative variable count";
    std::vector<int> pos(phi.num_variables, 0), neg(phi.num_variables, 0);
    for (size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto& cl = phi.clauses[j];
        if (cl.size() != 2 && cl.size() != 3)
            return "clause " + std::to_string(j + 1) + " has " + std::to_string(cl.size()) +
                   " literals (two or three required)";
        for (int lit : cl) {
            int v = lit < 0 ? -lit : lit;
            if (lit == 0 || v > phi.num_variables)
                return "clause " + std::to_string(j + 1) + " has an out-of-range literal " +
                       std::to_string(lit);
            ++(lit > 0 ? pos : neg)[v - 1];
        }
    }
    for (int i = 0; i < phi.num_variables; ++i) {
        if (pos[i] > 2) return "variable x" + std::to_string(i + 1) + " occurs positively more than twice";
        if (neg[i] > 2) return "variable x" + std::to_string(i + 1) + " occurs negated more than twice";
    }
    if (!is_planar(formula_graph(phi)).planar()) return "incidence graph is not planar";
    return std::nullopt;
}

void require_planar_cnf(const PlanarCnf& phi) {
    if (auto why = planar_cnf_violation(phi))
        throw std::invalid_argument("inadmissible formula: " + *why);
}

ReductionOutput reduce(const PlanarCnf& phi) {
    require_planar_cnf(phi);
    int n = phi.num_variables, m = int(phi.clauses.size());
    ReductionOutput red;
    red.phi = phi;
    int total = 5 * n;
    for (const auto& cl : phi.clauses) total += 3 + int(cl.size());
    Graph g(total);
    for (int i = 0; i < n; ++i) {
        int base = 5 * i;
        red.pos_vertex.push_back(base);
        red.neg_vertex.push_back(base + 1);
        red.pad_vertex.push_back({base + 2, base + 3, base + 4});
        g.add_edge(base, base + 1);
        for (int a = 2; a < 5; ++a) {
            g.add_edge(base, base + a);
            g.add_edge(base + 1, base + a);
            for (int b = a + 1; b < 5; ++b) g.add_edge(base + a, base + b);
        }
    }
    int cursor = 5 * n;
    for (int j = 0; j < m; ++j) {
        const auto& cl = phi.clauses[j];
        std::array<int, 3> uvw{cursor, cursor + 1, cursor + 2};
        red.clause_vertex.push_back(uvw);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) g.add_edge(uvw[a], uvw[b]);
        cursor += 3;
        std::vector<int> z;
        for (size_t t = 0; t < cl.size(); ++t) {
            z.push_back(cursor);
            for (int prev : z)
                if (prev != cursor) g.add_edge(prev, cursor);
            for (int cv : uvw) g.add_edge(cursor, cv);
            ++cursor;
        }
        red.z_vertex.push_back(z);
        // literal t rides clause vertex t; a two-literal clause leaves w
        // untouched by variable vertices
        std::vector<int> anchors;
        for (size_t t = 0; t < cl.size(); ++t) {
            int host = uvw[t];
            anchors.push_back(host);
            g.add_edge(literal_vertex(red, cl[t]), host);
        }
        red.anchor.push_back(anchors);
    }
    red.g = std::move(g);
    return red;
}

bool check_reduction_shape(const ReductionOutput& red, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const PlanarCnf& phi = red.phi;
    int n = phi.num_variables, m = int(phi.clauses.size());
    if (int(red.pos_vertex.size()) != n || int(red.neg_vertex.size()) != n ||
        int(red.pad_vertex.size()) != n)
        return fail("variable role tables do not match the variable count");
    if (int(red.clause_vertex.size()) != m || int(red.z_vertex.size()) != m ||
        int(red.anchor.size()) != m)
        return fail("clause role tables do not match the clause count");
    int total = 5 * n;
    for (int j = 0; j < m; ++j) {
        if (red.z_vertex[j].size() != phi.clauses[j].size())
            return fail("clause " + std::to_string(j + 1) + " has " +
                        std::to_string(red.z_vertex[j].size()) + " pads for " +
                        std::to_string(phi.clauses[j].size()) + " literals");
        total += 3 + int(red.z_vertex[j].size());
    }
    if (red.g.num_vertices() != total)
        return fail("vertex count " + std::to_string(red.g.num_vertices()) + " differs from the mandated " +
                    std::to_string(total));
    // every vertex plays exactly one role
    std::vector<int> seen(total, 0);
    auto claim = [&](int v) {
        if (v < 0 || v >= total || seen[v]++) return false;
        return true;
    };
    for (int i = 0; i < n; ++i) {
        if (!claim(red.pos_vertex[i]) || !claim(red.neg_vertex[i])) return fail("variable vertices collide");
        for (int p : red.pad_vertex[i])
            if (!claim(p)) return fail("variable pads collide");
    }
    for (int j = 0; j < m; ++j) {
        for (int cv : red.clause_vertex[j])
            if (!claim(cv)) return fail("clause vertices collide");
        for (int zv : red.z_vertex[j])
            if (!claim(zv)) return fail("clause pads collide");
    }
    // assemble the mandated edge set and compare exactly
    std::set<std::pair<int, int>> want;
    auto put = [&](int u, int v) { want.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u)); };
    for (int i = 0; i < n; ++i) {
        put(red.pos_vertex[i], red.neg_vertex[i]);
        for (int a = 0; a < 3; ++a) {
            put(red.pad_vertex[i][a], red.pos_vertex[i]);
            put(red.pad_vertex[i][a], red.neg_vertex[i]);
            for (int b = a + 1; b < 3; ++b) put(red.pad_vertex[i][a], red.pad_vertex[i][b]);
        }
    }
    for (int j = 0; j < m; ++j) {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) put(red.clause_vertex[j][a], red.clause_vertex[j][b]);
        const auto& z = red.z_vertex[j];
        for (size_t a = 0; a < z.size(); ++a) {
            for (size_t b = a + 1; b < z.size(); ++b) put(z[a], z[b]);
            for (int cv : red.clause_vertex[j]) put(z[a], cv);
        }
        if (red.anchor[j].size() != phi.clauses[j].size())
            return fail("clause " + std::to_string(j + 1) + " anchors do not match its literals");
        for (size_t t = 0; t < red.anchor[j].size(); ++t) {
            int host = red.anchor[j][t];
            if (std::find(red.clause_vertex[j].begin(), red.clause_vertex[j].end(), host) ==
                red.clause_vertex[j].end())
                return fail("anchor of clause " + std::to_string(j + 1) + " is not one of its clause vertices");
            put(literal_vertex(red, phi.clauses[j][t]), host);
        }
    }
    auto got = red.g.edges();
    if (std::set<std::pair<int, int>>(got.begin(), got.end()) != want)
        return fail("edge set differs from the mandated construction");
    // clause-vertex discipline: at most one variable neighbor each, and none
    // on w of a two-literal clause
    VertexSet variable_vertices(total);
    for (int i = 0; i < n; ++i) {
        variable_vertices.add(red.pos_vertex[i]);
        variable_vertices.add(red.neg_vertex[i]);
    }
    for (int j = 0; j < m; ++j) {
        for (int cv : red.clause_vertex[j])
            if ((red.g.neighbors(cv) & variable_vertices).count() > 1)
                return fail("a clause vertex of clause " + std::to_string(j + 1) +
                            " is adjacent to two variable vertices");
        if (phi.clauses[j].size() == 2 &&
            (red.g.neighbors(red.clause_vertex[j][2]) & variable_vertices).count() != 0)
            return fail("w of two-literal clause " + std::to_string(j + 1) +
                        " is adjacent to a variable vertex");
    }
    return true;
}

bool evaluate(const PlanarCnf& phi, const std::vector<bool>& assignment) {
    if (int(assignment.size()) != phi.num_variables)
        throw std::invalid_argument("evaluate: assignment length mismatch");
    for (const auto& cl : phi.clauses) {
        bool sat = false;
        for (int lit : cl)
            if (lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1]) sat = true;
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> sat_search(const PlanarCnf& phi) {
    if (phi.num_variables > 20) throw std::length_error("sat_search: more than 20 variables");
    int n = phi.num_variables;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        std::vector<bool> a(n);
        for (int i = 0; i < n; ++i) a[i] = mask >> i & 1;
        if (evaluate(phi, a)) return a;
    }
    return std::nullopt;
}

bool sat_bruteforce(const PlanarCnf& phi) { return sat_search(phi).has_value(); }

VertexSet constructive_modulator(const ReductionOutput& red, const std::vector<bool>& assignment) {
    if (!evaluate(red.phi, assignment))
        throw std::invalid_argument("constructive_modulator: assignment does not satisfy the formula");
    int n = red.phi.num_variables, m = int(red.phi.clauses.size());
    VertexSet keep_out(red.g.num_vertices());  // union of the chosen K4s
    for (int i = 0; i < n; ++i) {
        keep_out.add(assignment[i] ? red.neg_vertex[i] : red.pos_vertex[i]);
        for (int p : red.pad_vertex[i]) keep_out.add(p);
    }
    for (int j = 0; j < m; ++j) {
        const auto& cl = red.phi.clauses[j];
        int r = -1;
        for (size_t t = 0; t < cl.size(); ++t)
            if (cl[t] > 0 ? assignment[cl[t] - 1] : !assignment[-cl[t] - 1]) {
                r = red.anchor[j][t];
                break;
            }
        keep_out.add(r);
        if (cl.size() == 2) keep_out.add(red.clause_vertex[j][2]);  // w, variable-free
        for (int zv : red.z_vertex[j]) keep_out.add(zv);
    }
    return keep_out.complement();
}

std::optional<std::vector<bool>> decode_assignment(const ReductionOutput& red, const VertexSet& x,
                                                   std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return std::nullopt;
    };
    int total = red.g.num_vertices();
    std::vector<int> comp_of(total, -1);
    std::vector<VertexSet> comps = components_within(red.g, x.complement());
    for (size_t c = 0; c < comps.size(); ++c)
        comps[c].for_each([&](int v) { comp_of[v] = int(c); });
    auto confined_k4 = [&](const VertexSet& clique) -> std::optional<VertexSet> {
        int free = -1;
        clique.for_each([&](int v) {
            if (free == -1 && !x.contains(v)) free = v;
        });
        if (free == -1) return std::nullopt;  // entire clique swallowed by x
        const VertexSet& comp = comps[comp_of[free]];
        if (!comp.subset_of(clique)) return std::nullopt;  // confinement breach
        if (comp.count() != 4) return std::nullopt;
        int inside = 0;
        comp.for_each([&](int v) { inside += (red.g.neighbors(v) & comp).count(); });
        if (inside != 12) return std::nullopt;
        return comp;
    };
    int n = red.phi.num_variables, m = int(red.phi.clauses.size());
    std::vector<bool> a(n);
    for (int i = 0; i < n; ++i) {
        VertexSet block(total);
        block.add(red.pos_vertex[i]);
        block.add(red.neg_vertex[i]);
        for (int p : red.pad_vertex[i]) block.add(p);
        auto comp = confined_k4(block);
        if (!comp)
            return fail("no confined K4 component in the block of variable x" + std::to_string(i + 1));
        a[i] = !comp->contains(red.pos_vertex[i]);
    }
    for (int j = 0; j < m; ++j) {
        VertexSet block(total);
        for (int cv : red.clause_vertex[j]) block.add(cv);
        for (int zv : red.z_vertex[j]) block.add(zv);
        if (!confined_k4(block))
            return fail("no confined K4 component in the gadget of clause " + std::to_string(j + 1));
    }
    if (!evaluate(red.phi, a)) return fail("decoded assignment does not satisfy the formula");
    return a;
}

HarnessVerdict equivalence_harness(const ReductionOutput& red) {
    HarnessVerdict v;
    std::string why;
    if (!check_reduction_shape(red, &why)) {
        v.detail = "reduction shape breach: " + why;
        return v;
    }
    auto truth = sat_search(red.phi);
    v.satisfiable = truth.has_value();
    HClass k4 = builtin_hclass("complete_K4_only");
    std::optional<PlanarModulator> found = brute_force_planar_modulator(red.g, k4);
    v.modulator_found = found.has_value();
    if (v.modulator_found != v.satisfiable) {
        v.detail = v.satisfiable ? "satisfiable formula but no modulator found"
                                 : "modulator found for an unsatisfiable formula";
        return v;
    }
    if (found) {
        v.decoded = decode_assignment(red, found->x, &why);
        if (!v.decoded) {
            v.detail = "decoding failed: " + why;
            return v;
        }
    }
    if (truth) {
        VertexSet x = constructive_modulator(red, *truth);
        if (!verify_planar_modulator(red.g, k4, x, &why)) {
            v.detail = "constructive modulator rejected: " + why;
            return v;
        }
    }
    v.pass = true;
    v.detail = v.satisfiable ? "satisfiable; modulator found and decoded"
                             : "unsatisfiable; modulator certified absent";
    return v;
}

HarnessVerdict equivalence_harness(const PlanarCnf& phi) { return equivalence_harness(reduce(phi)); }

PlanarCnf random_planar_cnf(Rng& rng, int num_variables, int num_clauses) {
    if (num_variables < 1 || num_clauses < 0)
        throw std::invalid_argument("random_planar_cnf: need at least one variable");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        PlanarCnf phi;
        phi.num_variables = num_variables;
        std::vector<int> pos(num_variables, 2), neg(num_variables, 2);
        bool stuck = false;
        for (int j = 0; j < num_clauses && !stuck; ++j) {
            int size = num_variables >= 2 && rng.chance(1, 2) ? 3 : 2;
            std::vector<int> clause;
            for (int t = 0; t < size; ++t) {
                // repeated literals are admissible (they just burn budget), and
                // they are what makes tiny unsatisfiable formulas possible
                std::vector<int> pool;
                for (int i = 0; i < num_variables; ++i) {
                    if (pos[i] > 0) pool.push_back(i + 1);
                    if (neg[i] > 0) pool.push_back(-(i + 1));
                }
                if (pool.empty()) {
                    stuck = true;
                    break;
                }
                int lit = pool[rng.below(pool.size())];
                clause.push_back(lit);
                --(lit > 0 ? pos : neg)[std::abs(lit) - 1];
            }
            if (!stuck) phi.clauses.push_back(clause);
        }
        if (stuck || int(phi.clauses.size()) != num_clauses) continue;
        if (!planar_cnf_violation(phi)) return phi;
    }
    throw std::runtime_error("random_planar_cnf: rejection sampling failed to find an admissible formula");
}

}  // namespace hplanar
