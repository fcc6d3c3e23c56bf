#include "pcc/graph.hpp"

#include <algorithm>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw ParameterError("graph needs at least one vertex, got n=" + std::to_string(n_));
    }
    adjacency_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) {
            throw ParameterError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range");
        }
        if (e.u == e.v) {
            throw ParameterError("self-loop at vertex " + std::to_string(e.u));
        }
        adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<EdgeId>(i)});
        adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<EdgeId>(i)});
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
        auto dup = std::adjacent_find(list.begin(), list.end(),
                                      [](const Neighbor& a, const Neighbor& b) { return a.vertex == b.vertex; });
        if (dup != list.end()) {
            const Edge& e = edges_[static_cast<std::size_t>(dup->edge)];
            throw ParameterError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
    }
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
    auto list = neighbors(a);
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
    if (it == list.end() || it->vertex != b) return std::nullopt;
    return it->edge;
}

Graph Graph::edge_subgraph(std::span<const EdgeId> keep) const {
    std::vector<Edge> kept;
    kept.reserve(keep.size());
    for (EdgeId e : keep) kept.push_back(edge(e));
    return Graph(n_, std::move(kept));
}

Graph Graph::without_edge(EdgeId e) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (static_cast<EdgeId>(i) != e) kept.push_back(edges_[i]);
    }
    return Graph(n_, std::move(kept));
}

EdgeColoring::EdgeColoring(std::vector<Color> colors, int num_colors)
    : colors_(std::move(colors)), num_colors_(num_colors) {
    if (num_colors_ < 1) throw ParameterError("coloring needs t >= 1");
    for (Color c : colors_) {
        if (c < 1 || c > num_colors_) {
            throw ParameterError("color " + std::to_string(c) + " outside [1," + std::to_string(num_colors_) + "]");
        }
    }
}

EdgeColoring::EdgeColoring(std::vector<Color> colors)
    : EdgeColoring(colors, std::max(1, colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()))) {}

int EdgeColoring::distinct_colors() const {
    std::vector<bool> seen(static_cast<std::size_t>(num_colors_) + 1, false);
    int count = 0;
    for (Color c : colors_) {
        if (!seen[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = true;
            ++count;
        }
    }
    return count;
}

EdgeColoring EdgeColoring::canonical() const {
    std::vector<Color> relabel(static_cast<std::size_t>(num_colors_) + 1, 0);
    Color next = 1;
    std::vector<Color> out;
    out.reserve(colors_.size());
    for (Color c : colors_) {
        auto& r = relabel[static_cast<std::size_t>(c)];
        if (r == 0) r = next++;
        out.push_back(r);
    }
    return EdgeColoring(std::move(out), std::max(1, next - 1));
}

Permutation::Permutation(std::vector<int> zero_based_image) : image_(std::move(zero_based_image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int x : image_) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
            throw ParameterError("not a permutation of [" + std::to_string(size()) + "]");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::from_one_based(std::span<const int> image) {
    std::vector<int> zero;
    zero.reserve(image.size());
    for (int x : image) zero.push_back(x - 1);
    return Permutation(std::move(zero));
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

namespace {

Graph sorted_graph(int n, std::vector<Edge> edges) {
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.num_vertices();
    const int nh = h.num_vertices();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
    for (Vertex a = 0; a < ng; ++a) {
        for (Vertex b = 0; b < nh; ++b) edges.push_back({a, ng + b});
    }
    return sorted_graph(ng + nh, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.num_vertices();
    const int nh = h.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(ng * h.num_edges() + nh * g.num_edges()));
    for (Vertex u = 0; u < ng; ++u) {
        for (const Edge& e : h.edges()) edges.push_back({u * nh + e.u, u * nh + e.v});
    }
    for (const Edge& e : g.edges()) {
        for (Vertex v = 0; v < nh; ++v) edges.push_back({e.u * nh + v, e.v * nh + v});
    }
    return sorted_graph(ng * nh, std::move(edges));
}

Graph permutation_graph(const Graph& g, const Permutation& alpha) {
    const int n = g.num_vertices();
    if (alpha.size() != n) {
        throw ParameterError("permutation has size " + std::to_string(alpha.size()) + " but graph has " +
                             std::to_string(n) + " vertices");
    }
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : g.edges()) edges.push_back({e.u + n, e.v + n});
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, n + alpha(i)});
    return sorted_graph(2 * n, std::move(edges));
}

}  // namespace pcc
