#include "pcc/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

}  // namespace

std::vector<int> distances(const Graph& g, Vertex source) {
    std::vector<int> dist(idx(g.num_vertices()), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[idx(source)] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.neighbors(x)) {
            if (dist[idx(nb.vertex)] == kUnreachable) {
                dist[idx(nb.vertex)] = dist[idx(x)] + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(idx(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(distances(g, v));
    return d;
}

int eccentricity(const Graph& g, Vertex v) {
    const auto dist = distances(g, v);
    if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
        throw PreconditionError("eccentricity of a disconnected graph");
    }
    return *std::max_element(dist.begin(), dist.end());
}

int radius(const Graph& g) {
    int best = eccentricity(g, 0);
    for (Vertex v = 1; v < g.num_vertices(); ++v) best = std::min(best, eccentricity(g, v));
    return best;
}

int sigma2_prime(const Graph& g) {
    if (g.num_edges() == 0) throw PreconditionError("sigma2' needs at least one edge");
    int best = 0;
    for (const Edge& e : g.edges()) best = std::max(best, g.degree(e.u) + g.degree(e.v));
    return best;
}

bool is_connected(const Graph& g) {
    const auto dist = distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

bool is_tree(const Graph& g) { return g.num_edges() == g.num_vertices() - 1 && is_connected(g); }

bool is_complete(const Graph& g) {
    const long long n = g.num_vertices();
    return g.num_edges() == n * (n - 1) / 2;
}

bool is_star(const Graph& g) {
    if (!is_tree(g) || g.num_vertices() < 2) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == g.num_vertices() - 1) return true;
    }
    return false;
}

std::vector<Vertex> articulation_points(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> order(idx(n), -1);
    std::vector<int> low(idx(n), 0);
    std::vector<bool> cut(idx(n), false);
    int counter = 0;

    // Iterative lowpoint DFS: frame = (vertex, parent edge, next neighbor index).
    struct Frame {
        Vertex v;
        EdgeId via;
        std::size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (order[idx(root)] != -1) continue;
        int root_children = 0;
        std::vector<Frame> stack{{root, -1, 0}};
        order[idx(root)] = low[idx(root)] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbs = g.neighbors(f.v);
            if (f.next < nbs.size()) {
                const Neighbor nb = nbs[f.next++];
                if (nb.edge == f.via) continue;
                if (order[idx(nb.vertex)] == -1) {
                    order[idx(nb.vertex)] = low[idx(nb.vertex)] = counter++;
                    if (f.v == root) ++root_children;
                    stack.push_back({nb.vertex, nb.edge, 0});
                } else {
                    low[idx(f.v)] = std::min(low[idx(f.v)], order[idx(nb.vertex)]);
                }
                continue;
            }
            const Vertex child = f.v;
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex parent = stack.back().v;
            low[idx(parent)] = std::min(low[idx(parent)], low[idx(child)]);
            if (parent != root && low[idx(child)] >= order[idx(parent)]) cut[idx(parent)] = true;
        }
        if (root_children > 1) cut[idx(root)] = true;
    }
    std::vector<Vertex> result;
    for (Vertex v = 0; v < n; ++v) {
        if (cut[idx(v)]) result.push_back(v);
    }
    return result;
}

bool is_2_connected(const Graph& g) {
    return g.num_vertices() >= 3 && is_connected(g) && articulation_points(g).empty();
}

bool is_minimally_2connected(const Graph& g) {
    if (!is_2_connected(g)) return false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (is_2_connected(g.without_edge(e))) return false;
    }
    return true;
}

Graph minimally_2connected_spanning(const Graph& g) {
    if (!is_2_connected(g)) throw PreconditionError("minimally_2connected_spanning: input is not 2-connected");
    std::vector<EdgeId> order(idx(g.num_edges()));
    for (EdgeId e = 0; e < g.num_edges(); ++e) order[idx(e)] = e;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return g.edge(a) < g.edge(b); });

    std::vector<bool> kept(idx(g.num_edges()), true);
    auto current = [&](EdgeId skip) {
        std::vector<EdgeId> keep;
        for (EdgeId e : order) {
            if (kept[idx(e)] && e != skip) keep.push_back(e);
        }
        return g.edge_subgraph(keep);
    };
    for (EdgeId e : order) {
        if (is_2_connected(current(e))) kept[idx(e)] = false;
    }
    return current(-1);
}

EarDecomposition ear_decomposition(const Graph& h) {
    if (!is_2_connected(h)) throw PreconditionError("ear_decomposition: input is not 2-connected");
    const int n = h.num_vertices();
    std::vector<bool> covered_vertex(idx(n), false);
    std::vector<bool> covered_edge(idx(h.num_edges()), false);
    EarDecomposition d;

    // Base cycle: the first edge in (u, v) order closed by a shortest path
    // that avoids it.
    {
        EdgeId first = 0;
        for (EdgeId e = 1; e < h.num_edges(); ++e) {
            if (h.edge(e) < h.edge(first)) first = e;
        }
        const Vertex a = h.edge(first).u;
        const Vertex b = h.edge(first).v;
        std::vector<Vertex> parent(idx(n), -1);
        std::vector<bool> seen(idx(n), false);
        std::deque<Vertex> queue{a};
        seen[idx(a)] = true;
        while (!queue.empty() && !seen[idx(b)]) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (const Neighbor& nb : h.neighbors(x)) {
                if (nb.edge == first || seen[idx(nb.vertex)]) continue;
                seen[idx(nb.vertex)] = true;
                parent[idx(nb.vertex)] = x;
                queue.push_back(nb.vertex);
            }
        }
        for (Vertex x = b; x != -1; x = parent[idx(x)]) d.base_cycle.push_back(x);
        std::reverse(d.base_cycle.begin(), d.base_cycle.end());  // a ... b, closed by edge b-a
        for (std::size_t i = 0; i < d.base_cycle.size(); ++i) {
            const Vertex x = d.base_cycle[i];
            const Vertex y = d.base_cycle[(i + 1) % d.base_cycle.size()];
            covered_vertex[idx(x)] = true;
            covered_edge[idx(*h.edge_id(x, y))] = true;
        }
    }

    std::optional<bool> minimal;
    int remaining = h.num_edges() - static_cast<int>(d.base_cycle.size());
    while (remaining > 0) {
        std::vector<Vertex> best;
        for (Vertex s = 0; s < n; ++s) {
            if (!covered_vertex[idx(s)]) continue;
            // BFS from s through uncovered edges, only expanding uncovered vertices.
            std::vector<Vertex> parent(idx(n), -1);
            std::vector<bool> seen(idx(n), false);
            std::deque<Vertex> queue{s};
            seen[idx(s)] = true;
            std::vector<Vertex> found;
            while (!queue.empty() && found.empty()) {
                const Vertex x = queue.front();
                queue.pop_front();
                for (const Neighbor& nb : h.neighbors(x)) {
                    if (covered_edge[idx(nb.edge)] || nb.vertex == s) continue;
                    if (covered_vertex[idx(nb.vertex)]) {
                        found.push_back(nb.vertex);
                        for (Vertex y = x; y != -1; y = parent[idx(y)]) found.push_back(y);
                        break;
                    }
                    if (seen[idx(nb.vertex)]) continue;
                    seen[idx(nb.vertex)] = true;
                    parent[idx(nb.vertex)] = x;
                    queue.push_back(nb.vertex);
                }
            }
            if (!found.empty() && (best.empty() || found.size() < best.size())) {
                std::reverse(found.begin(), found.end());
                best = std::move(found);
                if (best.size() == 2) break;
            }
        }
        if (best.empty()) throw InvariantError("ear_decomposition: no ear found although edges remain");
        if (best.size() == 2) {
            if (!minimal) minimal = is_minimally_2connected(h);
            if (*minimal) {
                throw InvariantError("ear_decomposition: ear " + std::to_string(d.ears.size() + 1) + " (" +
                                     std::to_string(best[0]) + "-" + std::to_string(best[1]) +
                                     ") has no internal vertex on minimally 2-connected input");
            }
        }
        for (std::size_t i = 0; i + 1 < best.size(); ++i) {
            covered_edge[idx(*h.edge_id(best[i], best[i + 1]))] = true;
            covered_vertex[idx(best[i])] = true;
        }
        remaining -= static_cast<int>(best.size()) - 1;
        d.ears.push_back(std::move(best));
    }
    return d;
}

std::string check_ear_decomposition(const Graph& h, const EarDecomposition& d) {
    const int n = h.num_vertices();
    std::vector<bool> in_graph(idx(n), false);
    std::vector<bool> used(idx(h.num_edges()), false);
    auto take_edge = [&](Vertex x, Vertex y) -> std::string {
        auto e = h.edge_id(x, y);
        if (!e) return "pair " + std::to_string(x) + "-" + std::to_string(y) + " is not an edge";
        if (used[idx(*e)]) return "edge " + std::to_string(x) + "-" + std::to_string(y) + " used twice";
        used[idx(*e)] = true;
        return {};
    };
    if (d.base_cycle.size() < 3) return "base cycle shorter than 3";
    for (std::size_t i = 0; i < d.base_cycle.size(); ++i) {
        const Vertex x = d.base_cycle[i];
        if (x < 0 || x >= n || in_graph[idx(x)]) return "base cycle repeats or leaves the vertex range";
        in_graph[idx(x)] = true;
        if (auto err = take_edge(x, d.base_cycle[(i + 1) % d.base_cycle.size()]); !err.empty()) return err;
    }
    for (std::size_t k = 0; k < d.ears.size(); ++k) {
        const auto& ear = d.ears[k];
        const std::string tag = "ear " + std::to_string(k + 1) + ": ";
        if (ear.size() < 2) return tag + "fewer than two vertices";
        if (!in_graph[idx(ear.front())] || !in_graph[idx(ear.back())]) return tag + "endpoint not yet built";
        if (ear.front() == ear.back()) return tag + "closed ear";
        for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
            if (in_graph[idx(ear[i])]) return tag + "interior vertex already built";
        }
        for (std::size_t i = 1; i + 1 < ear.size(); ++i) in_graph[idx(ear[i])] = true;
        for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
            if (auto err = take_edge(ear[i], ear[i + 1]); !err.empty()) return tag + err;
        }
    }
    if (std::find(in_graph.begin(), in_graph.end(), false) != in_graph.end()) return "vertex not covered";
    if (std::find(used.begin(), used.end(), false) != used.end()) return "edge not covered";
    return {};
}

bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path) {
    if (static_cast<int>(path.size()) != g.num_vertices()) return false;
    std::vector<bool> seen(idx(g.num_vertices()), false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        if (v < 0 || v >= g.num_vertices() || seen[idx(v)]) return false;
        seen[idx(v)] = true;
        if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 1) return std::vector<Vertex>{0};
    if (!is_connected(g)) return std::nullopt;
    int leaves = 0;
    for (Vertex v = 0; v < n; ++v) leaves += g.degree(v) == 1 ? 1 : 0;
    if (leaves > 2) return std::nullopt;

    std::vector<bool> visited(idx(n), false);
    std::vector<Vertex> path;
    path.reserve(idx(n));

    // Unvisited vertices must stay reachable from the path's end through
    // unvisited vertices.
    auto remaining_connected = [&](Vertex end) {
        std::vector<bool> seen(idx(n), false);
        std::vector<Vertex> stack{end};
        seen[idx(end)] = true;
        int reached = 0;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : g.neighbors(x)) {
                if (visited[idx(nb.vertex)] || seen[idx(nb.vertex)]) continue;
                seen[idx(nb.vertex)] = true;
                ++reached;
                stack.push_back(nb.vertex);
            }
        }
        return reached == n - static_cast<int>(path.size());
    };

    std::function<bool(Vertex)> extend = [&](Vertex end) -> bool {
        if (static_cast<int>(path.size()) == n) return true;
        if (!remaining_connected(end)) return false;
        for (const Neighbor& nb : g.neighbors(end)) {
            if (visited[idx(nb.vertex)]) continue;
            visited[idx(nb.vertex)] = true;
            path.push_back(nb.vertex);
            if (extend(nb.vertex)) return true;
            path.pop_back();
            visited[idx(nb.vertex)] = false;
        }
        return false;
    };

    // A degree-1 vertex must be an endpoint; start there when one exists.
    std::vector<Vertex> starts;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1) starts.push_back(v);
    }
    if (starts.empty()) {
        for (Vertex v = 0; v < n; ++v) starts.push_back(v);
    }
    for (Vertex s : starts) {
        visited.assign(idx(n), false);
        path.assign(1, s);
        visited[idx(s)] = true;
        if (extend(s)) return path;
    }
    return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> label(idx(g.num_vertices()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) label[idx(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (label[idx(e.u)] >= 0 && label[idx(e.v)] >= 0) edges.push_back({label[idx(e.u)], label[idx(e.v)]});
    }
    return Graph(std::max(1, static_cast<int>(vertices.size())), std::move(edges));
}

SubtreeResult max_subtree_size_with_diameter(const Graph& t, int d) {
    if (!is_tree(t)) throw PreconditionError("max_subtree_size_with_diameter: input is not a tree");
    if (d < 1) throw ParameterError("max_subtree_size_with_diameter: d must be >= 1");
    const int n = t.num_vertices();
    const auto dist = all_pairs_distances(t);

    std::vector<Vertex> best;
    auto consider = [&](auto within) {
        std::vector<Vertex> ball;
        for (Vertex x = 0; x < n; ++x) {
            if (within(x)) ball.push_back(x);
        }
        if (ball.size() > best.size()) best = std::move(ball);
    };
    if (d % 2 == 0) {
        const int r = d / 2;
        for (Vertex c = 0; c < n; ++c) consider([&](Vertex x) { return dist[idx(c)][idx(x)] <= r; });
    } else {
        const int r = (d - 1) / 2;
        if (t.num_edges() == 0) consider([](Vertex) { return true; });
        for (const Edge& e : t.edges()) {
            consider([&](Vertex x) { return std::min(dist[idx(e.u)][idx(x)], dist[idx(e.v)][idx(x)]) <= r; });
        }
    }
    SubtreeResult result;
    result.size = static_cast<int>(best.size()) - 1;
    result.vertices = best;
    result.subtree = induced_subgraph(t, best);
    return result;
}

}  // namespace pcc
