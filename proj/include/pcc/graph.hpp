#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcc {

using Vertex = int;
using EdgeId = int;
using Color = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex;
    EdgeId edge;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v in
// the order they were supplied; that order defines edge ids and is the order
// used by the coloring file format.
class Graph {
public:
    explicit Graph(int n, std::vector<Edge> edges = {});

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    // Sorted by neighbor vertex.
    std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
    bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

    // Spanning subgraph keeping the given edges (in the given order).
    Graph edge_subgraph(std::span<const EdgeId> keep) const;
    Graph without_edge(EdgeId e) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

// Total map from edge ids to colors in [1, num_colors].
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(std::vector<Color> colors, int num_colors);
    // num_colors taken as the largest color present (at least 1).
    explicit EdgeColoring(std::vector<Color> colors);

    Color operator[](EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    Color at(EdgeId e) const { return colors_.at(static_cast<std::size_t>(e)); }
    std::size_t size() const noexcept { return colors_.size(); }
    int num_colors() const noexcept { return num_colors_; }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    // Number of distinct colors that actually occur.
    int distinct_colors() const;

    // Relabels colors in order of first use so they are exactly 1..distinct_colors().
    EdgeColoring canonical() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
    int num_colors_ = 1;
};

// Bijection on [n], stored 0-indexed. from_one_based accepts the usual
// 1-indexed image sequence alpha(1..n).
class Permutation {
public:
    explicit Permutation(std::vector<int> zero_based_image);
    static Permutation from_one_based(std::span<const int> image);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    Permutation inverse() const;
    const std::vector<int>& image() const noexcept { return image_; }

private:
    std::vector<int> image_;
};

// Disjoint union plus every edge between the two sides; h's vertices are
// shifted by g.num_vertices().
Graph join(const Graph& g, const Graph& h);

// Vertex (u, v) has index u * h.num_vertices() + v.
Graph cartesian_product(const Graph& g, const Graph& h);
inline Vertex product_vertex(const Graph& h, Vertex u, Vertex v) { return u * h.num_vertices() + v; }

// Two copies of g plus the matching v_i -- u_{alpha(i)}; copy vertex i has
// index g.num_vertices() + i.
Graph permutation_graph(const Graph& g, const Permutation& alpha);

}  // namespace pcc
