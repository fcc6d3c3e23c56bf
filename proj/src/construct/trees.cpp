#include <algorithm>
#include <deque>

#include "common.hpp"
#include "pcc/structure.hpp"

namespace pcc {

using detail::idx;

std::string_view theorem_name(Theorem t) {
    switch (t) {
        case Theorem::traceable: return "traceable";
        case Theorem::tree: return "tree";
        case Theorem::complete_bipartite: return "bipartite";
        case Theorem::complete_multipartite: return "multipartite";
        case Theorem::wheel: return "wheel";
        case Theorem::hypercube: return "cube";
        case Theorem::two_connected: return "2connected";
        case Theorem::join: return "join";
        case Theorem::cartesian: return "cartesian";
        case Theorem::permutation: return "permutation";
    }
    return "unknown";
}

ConstructionReport color_traceable(const Graph& g, const std::vector<Vertex>& ham_path, int ell) {
    if (ell < 1) throw ParameterError("ell must be >= 1");
    if (!is_hamiltonian_path(g, ham_path)) throw PreconditionError("color_traceable: not a Hamiltonian path");
    std::vector<Color> colors(idx(g.num_edges()), 0);
    for (std::size_t i = 0; i + 1 < ham_path.size(); ++i) {
        colors[idx(*g.edge_id(ham_path[i], ham_path[i + 1]))] = static_cast<Color>(i % idx(ell + 1)) + 1;
    }
    ConstructionReport report;
    report.graph = g;
    report.coloring = detail::finish_coloring(std::move(colors));
    report.claimed_colors = ell + 1;
    report.theorem = Theorem::traceable;
    report.notes = "hamiltonian path colored cyclically with " + std::to_string(ell + 1) + " colors";
    return report;
}

ConstructionReport color_tree(const Graph& t, int ell) {
    if (ell < 1) throw ParameterError("ell must be >= 1");
    if (!is_tree(t) || t.num_edges() == 0) throw PreconditionError("color_tree: input is not a nontrivial tree");
    const int n = t.num_vertices();
    const auto dist = all_pairs_distances(t);

    // Core of the densest subtree of diameter ell + 1: a vertex when ell + 1
    // is even, an edge when it is odd. Ties go to the smallest vertex / the
    // lexicographically first edge.
    std::vector<Vertex> core;
    int best = -1;
    if ((ell + 1) % 2 == 0) {
        const int r = (ell + 1) / 2;
        for (Vertex c = 0; c < n; ++c) {
            int size = 0;
            for (Vertex x = 0; x < n; ++x) size += dist[idx(c)][idx(x)] <= r ? 1 : 0;
            if (size > best) {
                best = size;
                core = {c};
            }
        }
    } else {
        const int r = ell / 2;
        std::vector<Edge> sorted = t.edges();
        std::sort(sorted.begin(), sorted.end());
        for (const Edge& e : sorted) {
            int size = 0;
            for (Vertex x = 0; x < n; ++x) {
                size += std::min(dist[idx(e.u)][idx(x)], dist[idx(e.v)][idx(x)]) <= r ? 1 : 0;
            }
            if (size > best) {
                best = size;
                core = {e.u, e.v};
            }
        }
    }
    const int claimed = max_subtree_size_with_diameter(t, ell + 1).size;

    // Level order: multi-source BFS from the core; the core edge goes first.
    std::vector<EdgeId> order;
    std::vector<char> seen(idx(n), 0);
    std::deque<Vertex> queue;
    for (Vertex c : core) {
        seen[idx(c)] = 1;
        queue.push_back(c);
    }
    if (core.size() == 2) order.push_back(*t.edge_id(core[0], core[1]));
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : t.neighbors(x)) {
            if (seen[idx(nb.vertex)]) continue;
            seen[idx(nb.vertex)] = 1;
            order.push_back(nb.edge);
            queue.push_back(nb.vertex);
        }
    }

    // Two edges lie on a common path with at most ell - 1 edges between them
    // iff their nearest endpoints are within distance ell - 1.
    auto gap = [&](EdgeId a, EdgeId b) {
        const Edge& x = t.edge(a);
        const Edge& y = t.edge(b);
        return std::min({dist[idx(x.u)][idx(y.u)], dist[idx(x.u)][idx(y.v)], dist[idx(x.v)][idx(y.u)],
                         dist[idx(x.v)][idx(y.v)]});
    };
    std::vector<Color> colors(idx(t.num_edges()), 0);
    std::vector<EdgeId> colored;
    int used = 0;
    for (EdgeId e : order) {
        std::vector<char> blocked(idx(t.num_edges()) + 2, 0);
        for (EdgeId f : colored) {
            if (gap(e, f) <= ell - 1) blocked[idx(colors[idx(f)])] = 1;
        }
        Color c = 1;
        while (blocked[idx(c)]) ++c;
        colors[idx(e)] = c;
        used = std::max(used, c);
        colored.push_back(e);
    }
    if (used > claimed) {
        throw InvariantError("color_tree: level greedy used " + std::to_string(used) + " colors, expected " +
                             std::to_string(claimed));
    }

    ConstructionReport report;
    report.graph = t;
    report.coloring = EdgeColoring(std::move(colors), claimed);
    report.claimed_colors = claimed;
    report.theorem = Theorem::tree;
    report.notes = core.size() == 2 ? "level 0 edge " + std::to_string(core[0]) + "-" + std::to_string(core[1])
                                    : "level 0 vertex " + std::to_string(core[0]);
    return report;
}

}  // namespace pcc
