#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hplanar/hclass.hpp"
#include "hplanar/matching.hpp"
#include "hplanar/planarity.hpp"
#include "hplanar/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hplanar;

namespace {

// Random member of a builtin class, for spot-checking flags and solvers.
Graph random_member(const std::string& name, Rng& rng, int n) {
    if (name == "edgeless") return Graph(n);
    if (name == "forests") {
        Graph g(n);
        for (int v = 1; v < n; ++v)
            if (rng.chance(2, 3)) g.add_edge(v, int(rng.range(0, uint64_t(v - 1))));
        return g;
    }
    if (name == "bipartite") {
        Graph g(n);
        int split = n / 2;
        for (int u = 0; u < split; ++u)
            for (int v = split; v < n; ++v)
                if (rng.chance(1, 2)) g.add_edge(u, v);
        return g;
    }
    if (name == "planar") {
        Graph grid = generate_grid(std::max(1, n / 2), 2);
        Graph g(grid.num_vertices());
        for (auto [u, v] : grid.edges())
            if (rng.chance(3, 4)) g.add_edge(u, v);
        return g;
    }
    if (name == "chordal") {
        // interval graph: n random intervals
        std::vector<std::pair<int, int>> iv(n);
        for (auto& [lo, hi] : iv) {
            lo = int(rng.range(0, 20));
            hi = lo + int(rng.range(0, 6));
        }
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) g.add_edge(u, v);
        return g;
    }
    if (name == "cluster") {
        Graph g(n);
        std::vector<int> label(n);
        for (int v = 0; v < n; ++v) label[v] = int(rng.range(0, 2));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (label[u] == label[v]) g.add_edge(u, v);
        return g;
    }
    if (name == "complete_K4_only") return complete_graph(4);
    if (name == "perfect") {
        // bipartite graphs are perfect
        return random_member("bipartite", rng, std::min(n, 10));
    }
    return testutil::random_graph(rng, n, 1, 2);  // all_graphs
}

}  // namespace

TEST_CASE("builtin membership basics") {
    HClass bip = builtin_hclass("bipartite");
    CHECK(bip.membership(cycle_graph(4)));
    CHECK(!bip.membership(cycle_graph(5)));
    CHECK(bip.membership(complete_bipartite(3, 4)));
    CHECK(!bip.membership(complete_graph(3)));

    HClass forests = builtin_hclass("forests");
    CHECK(forests.membership(path_graph(6)));
    CHECK(forests.membership(Graph(4)));
    CHECK(!forests.membership(cycle_graph(3)));
    Graph two_trees(6);
    two_trees.add_edge(0, 1);
    two_trees.add_edge(1, 2);
    two_trees.add_edge(3, 4);
    CHECK(forests.membership(two_trees));

    HClass k4 = builtin_hclass("complete_K4_only");
    CHECK(k4.membership(complete_graph(4)));
    CHECK(!k4.membership(complete_graph(3)));
    CHECK(!k4.membership(complete_graph(5)));
    Graph k4_minus(4);
    k4_minus.add_edge(0, 1);
    k4_minus.add_edge(0, 2);
    k4_minus.add_edge(0, 3);
    k4_minus.add_edge(1, 2);
    k4_minus.add_edge(1, 3);
    CHECK(!k4.membership(k4_minus));
    CHECK(!k4.hereditary);

    HClass chordal = builtin_hclass("chordal");
    CHECK(chordal.membership(complete_graph(5)));
    CHECK(chordal.membership(path_graph(5)));
    CHECK(!chordal.membership(cycle_graph(4)));
    CHECK(!chordal.membership(cycle_graph(6)));
    Graph fan(5);  // triangulated: chordal
    for (int i = 1; i < 5; ++i) fan.add_edge(0, i);
    for (int i = 1; i < 4; ++i) fan.add_edge(i, i + 1);
    CHECK(chordal.membership(fan));

    HClass cluster = builtin_hclass("cluster");
    CHECK(cluster.membership(disjoint_union(complete_graph(3), complete_graph(4))));
    CHECK(!cluster.membership(path_graph(3)));
    CHECK(cluster.membership(Graph(5)));

    HClass planar = builtin_hclass("planar");
    CHECK(planar.membership(generate_grid(5, 5)));
    CHECK(!planar.membership(complete_graph(5)));

    HClass all = builtin_hclass("all_graphs");
    CHECK(all.membership(complete_graph(6)));

    CHECK(builtin_hclass("edgeless").membership(Graph(7)));
    CHECK(!builtin_hclass("edgeless").membership(path_graph(2)));

    CHECK_THROWS_AS(builtin_hclass("interval"), std::invalid_argument);
    CHECK(builtin_hclass_names().size() == 9);
}

TEST_CASE("perfect graph membership by hole and antihole search") {
    HClass perfect = builtin_hclass("perfect");
    CHECK(perfect.membership(complete_bipartite(3, 3)));
    CHECK(perfect.membership(complete_graph(6)));
    CHECK(perfect.membership(cycle_graph(4)));
    CHECK(perfect.membership(cycle_graph(6)));
    CHECK(!perfect.membership(cycle_graph(5)));  // C5 is self-complementary
    CHECK(!perfect.membership(cycle_graph(7)));
    CHECK(!perfect.membership(complement_graph(cycle_graph(7))));  // odd antihole
    CHECK(perfect.membership(path_graph(9)));
    CHECK_THROWS_AS(perfect.membership(Graph(19)), std::length_error);

    // odd cycle plus an apex still contains the hole
    Graph c5_apex(6);
    for (int i = 0; i < 5; ++i) {
        c5_apex.add_edge(i, (i + 1) % 5);
        c5_apex.add_edge(i, 5);
    }
    CHECK(!perfect.membership(c5_apex));
}

TEST_CASE("heredity spot-check on random members") {
    Rng rng(31337);
    int pairs = 0;
    for (const std::string& name : builtin_hclass_names()) {
        HClass h = builtin_hclass(name);
        if (!h.hereditary) continue;
        for (int trial = 0; trial < 125; ++trial) {
            Graph g = random_member(name, rng, int(rng.range(1, 10)));
            REQUIRE(h.membership(g));
            VertexSet keep(g.num_vertices());
            for (int v = 0; v < g.num_vertices(); ++v)
                if (rng.chance(2, 3)) keep.add(v);
            CHECK(h.membership(g.induced(keep)));
            ++pairs;
        }
    }
    CHECK(pairs == 1000);
}

TEST_CASE("union-closure spot-check on random members") {
    Rng rng(41414);
    for (const std::string& name : builtin_hclass_names()) {
        HClass h = builtin_hclass(name);
        if (!h.union_closed) continue;
        for (int trial = 0; trial < 30; ++trial) {
            Graph a = random_member(name, rng, int(rng.range(1, 8)));
            Graph b = random_member(name, rng, int(rng.range(1, 8)));
            CHECK(h.membership(disjoint_union(a, b)));
        }
    }
}

TEST_CASE("sub-solvers agree with brute force on members") {
    Rng rng(616);
    for (const std::string& name : builtin_hclass_names()) {
        HClass h = builtin_hclass(name);
        for (int trial = 0; trial < 25; ++trial) {
            Graph g = random_member(name, rng, int(rng.range(1, 8)));
            if (g.num_vertices() > 10) continue;
            if (h.chromatic_solver) CHECK(h.chromatic_solver(g) == oracle::chromatic_number(g));
            if (h.independent_set_solver) {
                VertexSet s = h.independent_set_solver(g);
                bool independent = true;
                s.for_each([&](int u) {
                    if ((g.neighbors(u) & s).count() > 0) independent = false;
                });
                CHECK(independent);
                CHECK(s.count() == oracle::independence_number(g));
            }
            if (h.pmm_solver) CHECK(h.pmm_solver(g) == oracle::pmm_by_enumeration(g));
        }
    }
    // the planar class uses FKT, check it on a weighted member
    HClass planar = builtin_hclass("planar");
    Graph w = cycle_graph(6);
    Graph weighted(6);
    for (auto [u, v] : w.edges()) weighted.add_edge(u, v, Rational(long(u + 2)));
    CHECK(planar.pmm_solver(weighted) == oracle::pmm_by_enumeration(weighted));
}

TEST_CASE("size restriction") {
    HClass all4 = restrict_to_size(builtin_hclass("all_graphs"), 4);
    CHECK(all4.membership(complete_graph(4)));
    CHECK(!all4.membership(complete_graph(5)));
    CHECK(all4.size_cap == 4);
    CHECK(all4.hereditary);
    CHECK(!all4.union_closed);

    HClass bip3 = restrict_to_size(builtin_hclass("bipartite"), 3);
    CHECK(bip3.membership(path_graph(3)));
    CHECK(!bip3.membership(cycle_graph(4)));  // bipartite but too big
    CHECK(!bip3.membership(complete_graph(3)));

    HClass zero = restrict_to_size(builtin_hclass("all_graphs"), 0);
    CHECK(zero.membership(Graph(0)));
    CHECK(!zero.membership(Graph(1)));

    CHECK_THROWS_AS(restrict_to_size(builtin_hclass("all_graphs"), -1), std::invalid_argument);
}

TEST_CASE("minimum forbidden subgraphs") {
    auto f_edgeless = min_forbidden_subgraph(builtin_hclass("edgeless"));
    REQUIRE(f_edgeless);
    CHECK(*f_edgeless == path_graph(2));

    auto f_forests = min_forbidden_subgraph(builtin_hclass("forests"));
    REQUIRE(f_forests);
    CHECK(*f_forests == complete_graph(3));

    auto f_bip = min_forbidden_subgraph(builtin_hclass("bipartite"));
    REQUIRE(f_bip);
    CHECK(*f_bip == complete_graph(3));

    auto f_cluster = min_forbidden_subgraph(builtin_hclass("cluster"));
    REQUIRE(f_cluster);  // P3 in some labeling
    CHECK(f_cluster->num_vertices() == 3);
    CHECK(f_cluster->num_edges() == 2);

    auto f_chordal = min_forbidden_subgraph(builtin_hclass("chordal"));
    REQUIRE(f_chordal);  // C4 in some labeling
    CHECK(f_chordal->num_vertices() == 4);
    CHECK(f_chordal->num_edges() == 4);
    for (int v = 0; v < 4; ++v) CHECK(f_chordal->degree(v) == 2);
    CHECK(is_connected(*f_chordal));

    auto f_planar = min_forbidden_subgraph(builtin_hclass("planar"), 5);
    REQUIRE(f_planar);
    CHECK(*f_planar == complete_graph(5));

    auto f_perfect = min_forbidden_subgraph(builtin_hclass("perfect"), 5);
    REQUIRE(f_perfect);  // C5 in some labeling
    CHECK(f_perfect->num_vertices() == 5);
    CHECK(f_perfect->num_edges() == 5);
    for (int v = 0; v < 5; ++v) CHECK(f_perfect->degree(v) == 2);
    CHECK(is_connected(*f_perfect));

    // a restricted class can have a disconnected minimum forbidden graph
    auto f_small = min_forbidden_subgraph(restrict_to_size(builtin_hclass("all_graphs"), 2));
    REQUIRE(f_small);
    CHECK(f_small->num_vertices() == 3);
    CHECK(f_small->num_edges() == 0);

    CHECK(!min_forbidden_subgraph(builtin_hclass("all_graphs"), 4));
    CHECK_THROWS_AS(min_forbidden_subgraph(builtin_hclass("complete_K4_only")), std::invalid_argument);
}

TEST_CASE("minimum forbidden subgraph is minimal under vertex deletion") {
    for (const char* name : {"edgeless", "forests", "bipartite", "cluster", "chordal"}) {
        HClass h = builtin_hclass(name);
        auto f = min_forbidden_subgraph(h);
        REQUIRE(f);
        CHECK(!h.membership(*f));
        for (int v = 0; v < f->num_vertices(); ++v) {
            VertexSet keep = VertexSet::full(f->num_vertices());
            keep.remove(v);
            CHECK(h.membership(f->induced(keep)));
        }
    }
}

TEST_CASE("disjoint union and complement helpers") {
    Graph u = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(u.num_vertices() == 5);
    CHECK(u.num_edges() == 4);
    CHECK(u.has_edge(3, 4));
    CHECK(!u.has_edge(2, 3));

    Graph wa(2), wb(2);
    wa.add_edge(0, 1, Rational(3, 2));
    wb.add_edge(0, 1, Rational(5));
    Graph wu = disjoint_union(wa, wb);
    CHECK(wu.weight(0, 1) == Rational(3, 2));
    CHECK(wu.weight(2, 3) == Rational(5));

    CHECK(complement_graph(complete_graph(4)).num_edges() == 0);
    CHECK(complement_graph(Graph(4)) == complete_graph(4));
    CHECK(complement_graph(cycle_graph(5)).num_edges() == 5);
}
