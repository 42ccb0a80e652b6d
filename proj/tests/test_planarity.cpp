#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hplanar/planarity.hpp"
#include "hplanar/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hplanar;

TEST_CASE("planarity of basic graphs") {
    auto k4 = is_planar(complete_graph(4));
    REQUIRE(k4.planar());
    CHECK(verify_rotation_system(complete_graph(4), *k4.embedding));
    CHECK(count_faces(complete_graph(4), *k4.embedding) == 4);

    auto k5 = is_planar(complete_graph(5));
    REQUIRE(!k5.planar());
    CHECK(verify_kuratowski_witness(complete_graph(5), *k5.witness));

    auto k33 = is_planar(complete_bipartite(3, 3));
    REQUIRE(!k33.planar());
    CHECK(verify_kuratowski_witness(complete_bipartite(3, 3), *k33.witness));

    CHECK(is_planar(Graph(0)).planar());
    CHECK(is_planar(Graph(5)).planar());  // edgeless
    CHECK(is_planar(generate_wall(5).graph).planar());
    CHECK(is_planar(generate_grid(6, 6)).planar());
    CHECK(!is_planar(generate_apex_grid(4)).planar());
    CHECK(!is_planar(complete_bipartite(3, 4)).planar());
}

TEST_CASE("euler count on disconnected graphs") {
    Graph g(7);  // triangle + square + isolated vertex
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 3);
    auto res = is_planar(g);
    REQUIRE(res.planar());
    CHECK(verify_rotation_system(g, *res.embedding));
}

TEST_CASE("rotation system verifier rejects corruption") {
    Graph g = cycle_graph(4);
    auto rs = *is_planar(g).embedding;
    RotationSystem bad = rs;
    bad.order[0].pop_back();
    CHECK(!verify_rotation_system(g, bad));
    RotationSystem bad2 = rs;
    bad2.order[0].push_back(2);  // non-edge in C4
    CHECK(!verify_rotation_system(g, bad2));
}

TEST_CASE("planarity agrees with forbidden minors") {
    Rng rng(555);
    int checked = 0;
    Graph k5 = complete_graph(5), k33 = complete_bipartite(3, 3);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = rng.range(1, 8);
        Graph g = testutil::random_graph(rng, n, rng.range(1, 3), 4);
        bool p = is_planar(g).planar();
        bool minor_free = !find_minor(g, k5) && !find_minor(g, k33);
        CHECK(p == minor_free);
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("planar coloring") {
    Coloring c5 = planar_color(cycle_graph(5));
    CHECK(verify_coloring(cycle_graph(5), c5));
    CHECK(c5.color_count == 3);

    Graph grid = generate_grid(4, 4);
    Coloring cg = planar_color(grid);
    CHECK(verify_coloring(grid, cg));
    CHECK(cg.color_count == 2);

    // icosahedron: 12 vertices, 30 edges, chromatic number 4
    Graph ico(12);
    int ico_edges[30][2] = {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},  {2, 3},  {3, 4},
                            {4, 5},  {5, 1},  {1, 6},  {2, 6},  {2, 7},  {3, 7},  {3, 8},  {4, 8},
                            {4, 9},  {5, 9},  {5, 10}, {1, 10}, {6, 7},  {7, 8},  {8, 9},  {9, 10},
                            {10, 6}, {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11}};
    for (auto [u, v] : ico_edges) ico.add_edge(u, v);
    REQUIRE(is_planar(ico).planar());
    Coloring ci = planar_color(ico);
    CHECK(verify_coloring(ico, ci));
    CHECK(ci.color_count == 4);
    CHECK(oracle::chromatic_number(ico) == 4);

    CHECK_THROWS(planar_color(complete_graph(5)));
}

TEST_CASE("five-coloring above the exact ceiling") {
    // force the contraction path with a tiny ceiling
    for (const Graph& g : {generate_grid(5, 5), generate_wall(5).graph, cycle_graph(9)}) {
        Coloring c = planar_color(g, /*four_color_ceiling=*/0);
        CHECK(verify_coloring(g, c));
        CHECK(c.color_count <= 5);
    }
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        // random planar graph: spanning subgraph of a grid
        Graph grid = generate_grid(4, 4);
        Graph g(grid.num_vertices());
        for (auto [u, v] : grid.edges())
            if (rng.chance(3, 4)) g.add_edge(u, v);
        Coloring c = planar_color(g, 0);
        CHECK(verify_coloring(g, c));
        CHECK(c.color_count <= 5);
    }
}

TEST_CASE("exact coloring matches the assignment-enumeration oracle") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(1, 7);
        Graph g = testutil::random_graph(rng, n, 1, 2);
        auto c = exact_color(g);
        REQUIRE(c);
        CHECK(verify_coloring(g, *c));
        CHECK(c->color_count == oracle::chromatic_number(g));
    }
    CHECK(!exact_color(complete_graph(4), 3));
}

TEST_CASE("bfs layers") {
    Graph star(6);
    for (int leaf = 1; leaf <= 5; ++leaf) star.add_edge(0, leaf);
    auto sl = bfs_layers(star, 0);
    REQUIRE(sl.layers.size() == 2);
    CHECK(sl.layers[0] == VertexSet::of(6, {0}));
    CHECK(sl.layers[1].count() == 5);
    CHECK(sl.unreachable.empty());

    auto pl = bfs_layers(path_graph(4), 0);
    REQUIRE(pl.layers.size() == 4);
    for (const auto& l : pl.layers) CHECK(l.count() == 1);

    auto cl = bfs_layers(cycle_graph(6), 2);
    REQUIRE(cl.layers.size() == 4);
    CHECK(cl.layers[0].count() == 1);
    CHECK(cl.layers[1].count() == 2);
    CHECK(cl.layers[2].count() == 2);
    CHECK(cl.layers[3].count() == 1);

    Graph disc(3);
    disc.add_edge(0, 1);
    auto dl = bfs_layers(disc, 0);
    CHECK(dl.layers.size() == 2);
    CHECK(dl.unreachable == VertexSet::of(3, {2}));

    // edge property: every edge joins same or adjacent layers
    Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.range(2, 10);
        Graph g = testutil::random_connected_graph(rng, n, 1, 4);
        auto bl = bfs_layers(g, 0);
        std::vector<int> depth(n, -1);
        for (size_t i = 0; i < bl.layers.size(); ++i)
            bl.layers[i].for_each([&](int v) { depth[v] = int(i); });
        for (auto [u, v] : g.edges()) CHECK(std::abs(depth[u] - depth[v]) <= 1);
    }
}

TEST_CASE("few layer tree decomposition") {
    // outerplanar: cycle with an ear
    Graph outer = cycle_graph(8);
    outer.add_edge(0, 2);
    outer.add_edge(0, 3);
    TreeDecomposition td = few_layer_tree_decomposition(outer, 1);
    CHECK(verify_tree_decomposition(outer, td));
    CHECK(td.width() <= 4);

    Graph grid2 = generate_grid(6, 2);
    TreeDecomposition td2 = few_layer_tree_decomposition(grid2, 2);
    CHECK(verify_tree_decomposition(grid2, td2));
    CHECK(td2.width() <= 3);  // exact treewidth of a 2xn grid is 2

    Graph single(1);
    TreeDecomposition td3 = few_layer_tree_decomposition(single, 1);
    CHECK(verify_tree_decomposition(single, td3));
    CHECK(td3.width() == 0);

    // beyond the exact-treewidth ceiling: min-fill fallback
    Graph big = generate_grid(5, 4);  // 20 vertices
    TreeDecomposition td4 = few_layer_tree_decomposition(big, 4);
    CHECK(verify_tree_decomposition(big, td4));
    CHECK(td4.width() <= 13);

    CHECK_THROWS(few_layer_tree_decomposition(complete_graph(5), 2));
}
