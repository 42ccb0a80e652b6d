#ifndef HPLANAR_GRAPH_HPP
#define HPLANAR_GRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hplanar/rational.hpp"
#include "hplanar/vertex_set.hpp"

namespace hplanar {

// Undirected simple graph on vertices 0..n-1 with optional rational edge
// weights (weight 1 when absent). Build with add_edge, then treat as
// immutable: every algorithm in the library takes graphs by const reference.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int num_vertices() const { return n_; }
    int num_edges() const {
        int d = 0;
        for (const auto& row : adj_) d += row.count();
        return d / 2;
    }

    bool has_edge(int u, int v) const { return u != v && adj_[u].contains(v); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u].add(v);
        adj_[v].add(u);
    }
    void add_edge(int u, int v, const Rational& w) {
        add_edge(u, v);
        Rational c = w;
        c.canonicalize();  // mpq_class(p, q) does not reduce on its own
        if (c < 0) throw std::invalid_argument("negative edge weight");
        weights_[key(u, v)] = c;
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    Rational weight(int u, int v) const {
        auto it = weights_.find(key(u, v));
        return it == weights_.end() ? Rational(1) : it->second;
    }
    bool has_explicit_weight(int u, int v) const { return weights_.count(key(u, v)) > 0; }
    bool is_weighted() const { return !weights_.empty(); }

    // Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    // Induced subgraph on `keep`; vertices are renumbered 0..|keep|-1 in
    // increasing original order. If map_out is given it receives new -> old.
    Graph induced(const VertexSet& keep, std::vector<int>* map_out = nullptr) const {
        std::vector<int> old_of = keep.to_vector();
        std::vector<int> new_of(n_, -1);
        for (size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = int(i);
        Graph h(int(old_of.size()));
        for (size_t i = 0; i < old_of.size(); ++i) {
            int u = old_of[i];
            (adj_[u] & keep).for_each([&](int v) {
                if (u < v) {
                    if (has_explicit_weight(u, v))
                        h.add_edge(int(i), new_of[v], weight(u, v));
                    else
                        h.add_edge(int(i), new_of[v]);
                }
            });
        }
        if (map_out) *map_out = std::move(old_of);
        return h;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_ && weights_ == o.weights_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    static std::pair<int, int> key(int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }

    int n_;
    std::vector<VertexSet> adj_;
    std::map<std::pair<int, int>, Rational> weights_;
};

struct Separation {
    VertexSet left, right;
    int order() const { return (left & right).count(); }
};

// Checks left ∪ right = V and no edge between left∖right and right∖left.
bool verify_separation(const Graph& g, const Separation& sep);

struct MinorModel {
    // branch_sets[i] hosts pattern vertex i.
    std::vector<VertexSet> branch_sets;
};

bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model);

VertexSet neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

std::vector<VertexSet> connected_components(const Graph& g);
// Components of g[region].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region);
bool is_connected(const Graph& g);

Graph torso(const Graph& g, const VertexSet& x);

// b's vertices are shifted after a's.
Graph disjoint_union(const Graph& a, const Graph& b);
// Complement graph (weights dropped).
Graph complement_graph(const Graph& g);

// All separations (A,B) with order <= max_order, g[A∖B] connected and
// 0 < |B∖A| < small_side_bound, in deterministic order. With include_trivial,
// also the separations with B∖A empty (B is then just the separator).
std::vector<Separation> enumerate_separations(const Graph& g, int max_order, int small_side_bound,
                                              bool include_trivial = false);

// A witnessing separation of order <= c with both strict sides >= s, or
// nullopt when g is (s,c)-unbreakable. Exhaustive over separators.
std::optional<Separation> find_breaking_separation(const Graph& g, int s, int c, int size_ceiling = 18);

// Brute-force minor search; returns a model or nullopt for certified absence.
std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern, int pattern_ceiling = 8);

// k columns x r rows, vertex (row,col) at index row*k + col.
Graph generate_grid(int k, int r);
// k x k grid plus a universal apex at the last index.
Graph generate_apex_grid(int k);

struct WallInfo {
    Graph graph;
    VertexSet perimeter, pegs, corners, central;
    std::vector<VertexSet> layers;  // layers[0] = perimeter
};
WallInfo generate_wall(int r);

// Convenience constructors used across tests and generators.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

}  // namespace hplanar

#endif
