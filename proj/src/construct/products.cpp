#include <algorithm>
#include <deque>
#include <set>

#include "common.hpp"
#include "pcc/structure.hpp"

namespace pcc {

using detail::idx;

ConstructionReport color_join(const Graph& g, const Graph& h) {
    if (g.num_vertices() < 2 || h.num_vertices() < 2 || !is_connected(g) || !is_connected(h)) {
        throw PreconditionError("color_join: both factors must be nontrivial and connected");
    }
    ConstructionReport report;
    report.graph = join(g, h);
    report.theorem = Theorem::join;
    const int ng = g.num_vertices();
    const int nh = h.num_vertices();
    const bool g_small = ng <= nh;
    const int m = std::min(ng, nh);
    const int n = std::max(ng, nh);
    std::string notes;
    const auto vectors = detail::bipartite_vectors(m, n, 2, report.claimed_colors, notes);
    std::vector<Color> colors(idx(report.graph.num_edges()), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vertex a = g_small ? i : j;
            const Vertex b = ng + (g_small ? j : i);
            colors[idx(*report.graph.edge_id(a, b))] = vectors[idx(j)][idx(i)];
        }
    }
    report.coloring = detail::finish_coloring(std::move(colors));
    report.notes = "spanning K_{" + std::to_string(m) + "," + std::to_string(n) + "}: " + notes;
    return report;
}

namespace {

// Rooted spanning tree: parent per vertex (-1 at the root) and the vertices
// in BFS order from the root.
struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> parent;
    std::vector<Vertex> order;

    std::vector<Vertex> root_path(Vertex x) const {
        std::vector<Vertex> path;
        for (Vertex y = x; y != -1; y = parent[idx(y)]) path.push_back(y);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

// BFS tree of g from `root`, optionally forced to contain `seed_path` first.
RootedTree bfs_tree(const Graph& g, Vertex root, const std::vector<Vertex>& seed_path = {}) {
    RootedTree t;
    t.root = root;
    t.parent.assign(idx(g.num_vertices()), -1);
    std::vector<char> seen(idx(g.num_vertices()), 0);
    std::deque<Vertex> queue;
    if (seed_path.empty()) {
        seen[idx(root)] = 1;
        queue.push_back(root);
    } else {
        for (std::size_t i = 0; i < seed_path.size(); ++i) {
            seen[idx(seed_path[i])] = 1;
            if (i > 0) t.parent[idx(seed_path[i])] = seed_path[i - 1];
            queue.push_back(seed_path[i]);
        }
    }
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.neighbors(x)) {
            if (seen[idx(nb.vertex)]) continue;
            seen[idx(nb.vertex)] = 1;
            t.parent[idx(nb.vertex)] = x;
            queue.push_back(nb.vertex);
        }
    }
    // Order by depth so parents precede children.
    std::vector<int> depth(idx(g.num_vertices()), 0);
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.num_vertices(); ++v) all.push_back(v);
    for (Vertex v : all) {
        for (Vertex y = t.parent[idx(v)]; y != -1; y = t.parent[idx(y)]) ++depth[idx(v)];
    }
    std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) { return depth[idx(a)] < depth[idx(b)]; });
    t.order = std::move(all);
    return t;
}

int tree_ecc(const RootedTree& t) {
    int worst = 0;
    for (Vertex v : t.order) worst = std::max(worst, static_cast<int>(t.root_path(v).size()) - 1);
    return worst;
}

Vertex center_vertex(const Graph& g) {
    Vertex best = 0;
    int best_ecc = eccentricity(g, 0);
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
        const int e = eccentricity(g, v);
        if (e < best_ecc) {
            best_ecc = e;
            best = v;
        }
    }
    return best;
}

// Spanning tree whose root has eccentricity exactly 2 (g connected, n >= 3,
// rad(g) <= 2).
RootedTree tree_with_root_ecc2(const Graph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (eccentricity(g, v) == 2) return bfs_tree(g, v);
    }
    // Every vertex is universal: hang everything off vertex 1 below root 0.
    RootedTree t;
    t.parent.assign(idx(g.num_vertices()), 1);
    t.parent[0] = -1;
    t.parent[1] = 0;
    t.order.push_back(0);
    t.order.push_back(1);
    for (Vertex v = 2; v < g.num_vertices(); ++v) t.order.push_back(v);
    return t;
}

// Spanning tree with a root of eccentricity >= 3 (g connected, not a star,
// n >= 4): any path on four vertices extended greedily.
std::optional<RootedTree> tree_with_root_ecc3(const Graph& g) {
    for (const Edge& mid : g.edges()) {
        for (auto [b, c] : {std::pair{mid.u, mid.v}, std::pair{mid.v, mid.u}}) {
            for (const Neighbor& na : g.neighbors(b)) {
                if (na.vertex == c) continue;
                for (const Neighbor& nd : g.neighbors(c)) {
                    if (nd.vertex == b || nd.vertex == na.vertex) continue;
                    return bfs_tree(g, na.vertex, {na.vertex, b, c, nd.vertex});
                }
            }
        }
    }
    return std::nullopt;
}

// Colors groups of product edges subject to window constraints from template
// paths: edges at most two positions apart on a template must differ. Each
// group receives one color; the search is depth first in queue order with
// colors tried lowest first, so it returns the greedy choice when that works.
class TemplateColorer {
public:
    explicit TemplateColorer(const Graph& product)
        : g_(product), colors_(idx(product.num_edges()), 0), near_(idx(product.num_edges())) {}

    void add_template(const std::vector<Vertex>& vertices, bool cyclic = false) {
        std::vector<EdgeId> edges;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) edges.push_back(edge(vertices[i], vertices[i + 1]));
        if (cyclic) edges.push_back(edge(vertices.back(), vertices.front()));
        const int len = static_cast<int>(edges.size());
        for (int i = 0; i < len; ++i) {
            for (int d = 1; d <= 2; ++d) {
                int j = i + d;
                if (cyclic) {
                    j %= len;
                } else if (j >= len) {
                    continue;
                }
                if (j == i) continue;
                near_[idx(edges[idx(i)])].insert(edges[idx(j)]);
                near_[idx(edges[idx(j)])].insert(edges[idx(i)]);
            }
        }
    }

    // Queues a group. Groups are colored in queue order by solve(): each takes
    // `forced` if given, else the lowest color in [1, palette] unused by
    // colored edges near any member, backtracking on dead ends.
    void color_group(const std::vector<EdgeId>& group, int palette, std::optional<Color> forced = std::nullopt) {
        groups_.push_back({group, palette, forced});
    }

    void solve(long long max_steps = 5'000'000) {
        const std::size_t count = groups_.size();
        std::vector<Color> choice(count, 0);
        std::size_t i = 0;
        long long steps = 0;
        while (i < count) {
            if (++steps > max_steps) throw InvariantError("color_cartesian: template search budget exhausted");
            Group& grp = groups_[i];
            for (EdgeId e : grp.edges) colors_[idx(e)] = 0;
            Color next = 0;
            if (grp.forced) {
                if (choice[i] == 0) next = *grp.forced;
            } else {
                const std::set<Color> blocked = blocked_colors(grp.edges);
                for (Color c = choice[i] + 1; c <= grp.palette; ++c) {
                    if (!blocked.contains(c)) {
                        next = c;
                        break;
                    }
                }
            }
            if (next == 0) {
                choice[i] = 0;
                if (i == 0) {
                    const Edge& e = g_.edge(grp.edges.front());
                    throw InvariantError("color_cartesian: no admissible coloring; stuck at product edge " +
                                         std::to_string(e.u) + "-" + std::to_string(e.v));
                }
                --i;
                continue;
            }
            choice[i] = next;
            for (EdgeId e : grp.edges) colors_[idx(e)] = next;
            ++i;
        }
    }

    EdgeId edge(Vertex a, Vertex b) const {
        auto e = g_.edge_id(a, b);
        if (!e) throw InvariantError("color_cartesian: template uses a non-edge");
        return *e;
    }

    std::vector<Color> take(long long max_steps = 5'000'000) {
        solve(max_steps);
        return std::move(colors_);
    }

private:
    struct Group {
        std::vector<EdgeId> edges;
        int palette;
        std::optional<Color> forced;
    };

    std::set<Color> blocked_colors(const std::vector<EdgeId>& group) const {
        std::set<Color> blocked;
        for (EdgeId e : group) {
            for (EdgeId f : near_[idx(e)]) {
                if (colors_[idx(f)] != 0 && std::find(group.begin(), group.end(), f) == group.end()) {
                    blocked.insert(colors_[idx(f)]);
                }
            }
        }
        return blocked;
    }

    const Graph& g_;
    std::vector<Color> colors_;
    std::vector<std::set<EdgeId>> near_;
    std::vector<Group> groups_;
};

template <typename F>
std::vector<Vertex> map_path(const std::vector<Vertex>& path, F&& to_product, std::size_t skip = 0) {
    std::vector<Vertex> out;
    for (std::size_t i = skip; i < path.size(); ++i) out.push_back(to_product(path[i]));
    return out;
}

void append(std::vector<Vertex>& a, const std::vector<Vertex>& b) { a.insert(a.end(), b.begin(), b.end()); }

std::vector<Vertex> reversed(std::vector<Vertex> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

constexpr long long kPrimaryBudget = 5'000'000;
constexpr long long kRetryBudget = 200'000;

// Case (i) template coloring of prod = G x H for spanning trees s of G and t
// of H; nullopt when the templates cannot be met or the result fails to
// verify.
std::optional<std::vector<Color>> case_i_coloring(const Graph& prod, const Graph& h, const RootedTree& s,
                                                  const RootedTree& t, long long budget) {
    TemplateColorer tc(prod);
    auto at = [&](Vertex x, Vertex y) { return product_vertex(h, x, y); };
    const Vertex u1 = s.root;
    const Vertex v1 = t.root;
    auto in_t = [&](Vertex us) { return [&, us](Vertex y) { return at(us, y); }; };
    auto in_s = [&](Vertex vi) { return [&, vi](Vertex x) { return at(x, vi); }; };

    for (Vertex vt : t.order) tc.add_template(map_path(t.root_path(vt), in_t(u1)));
    for (Vertex uj : s.order) {
        for (Vertex vt : t.order) {
            auto path = reversed(map_path(s.root_path(uj), in_s(v1)));
            append(path, map_path(t.root_path(vt), in_t(u1), 1));
            tc.add_template(path);
        }
    }
    for (Vertex vi : t.order) {
        if (vi == v1) continue;
        for (Vertex uj1 : s.order) {
            for (Vertex uj : s.order) {
                auto path = reversed(map_path(s.root_path(uj1), in_s(v1)));
                append(path, map_path(t.root_path(vi), in_t(u1), 1));
                append(path, map_path(s.root_path(uj), in_s(vi), 1));
                tc.add_template(path);
            }
        }
    }
    for (Vertex us : s.order) {
        if (us == u1) continue;
        for (Vertex vt1 : t.order) {
            for (Vertex vt : t.order) {
                auto path = reversed(map_path(t.root_path(vt1), in_t(u1)));
                append(path, map_path(s.root_path(us), in_s(v1), 1));
                append(path, map_path(t.root_path(vt), in_t(us), 1));
                tc.add_template(path);
            }
        }
    }

    for (Vertex y : t.order) {
        if (y != v1) tc.color_group({tc.edge(at(u1, y), at(u1, t.parent[idx(y)]))}, 3);
    }
    for (Vertex x : s.order) {
        if (x != u1) tc.color_group({tc.edge(at(x, v1), at(s.parent[idx(x)], v1))}, 3);
    }
    for (Vertex vi : t.order) {
        if (vi == v1) continue;
        for (Vertex x : s.order) {
            if (x != u1) tc.color_group({tc.edge(at(x, vi), at(s.parent[idx(x)], vi))}, 3);
        }
    }
    for (Vertex us : s.order) {
        if (us == u1) continue;
        for (Vertex y : t.order) {
            if (y != v1) tc.color_group({tc.edge(at(us, y), at(us, t.parent[idx(y)]))}, 3);
        }
    }

    std::vector<Color> colors;
    try {
        colors = tc.take(budget);
    } catch (const InvariantError&) {
        return std::nullopt;
    }
    for (Color& c : colors) {
        if (c == 0) c = 1;
    }
    ProperConnectionChecker checker(prod, 2);
    if (!checker.connected(colors)) return std::nullopt;
    return colors;
}

}  // namespace

ConstructionReport color_cartesian(const Graph& g, const Graph& h) {
    if (g.num_vertices() < 2 || h.num_vertices() < 2 || !is_connected(g) || !is_connected(h)) {
        throw PreconditionError("color_cartesian: both factors must be nontrivial and connected");
    }
    if (is_complete(g) && is_complete(h)) throw PreconditionError("color_cartesian: both factors are complete");

    ConstructionReport report;
    report.graph = cartesian_product(g, h);
    report.theorem = Theorem::cartesian;
    const Graph& prod = report.graph;
    TemplateColorer tc(prod);

    const int rad_g = radius(g);
    const int rad_h = radius(h);
    const bool case_ii_g_star = is_star(g) && rad_h >= 3;
    const bool case_ii_h_star = is_star(h) && rad_g >= 3;

    // Roles: A plays the factor whose spanning tree is S (vertices u_j), B the
    // one with tree T (vertices v_i). `at(a, b)` maps back into prod.
    auto setup = [&](bool swap) {
        const Graph& a = swap ? h : g;
        const Graph& b = swap ? g : h;
        auto at = [&, swap](Vertex x, Vertex y) { return swap ? product_vertex(h, y, x) : product_vertex(h, x, y); };
        return std::tuple<const Graph&, const Graph&, std::function<Vertex(Vertex, Vertex)>>(a, b, at);
    };

    if (case_ii_g_star || case_ii_h_star) {
        auto [a, b, at] = setup(!case_ii_g_star);
        const RootedTree s = bfs_tree(a, center_vertex(a));
        const RootedTree t0 = bfs_tree(b, center_vertex(b));
        // Re-root T at an end of a longest path: the vertex deepest below any
        // root. Rebuilding over T's own edges keeps root paths inside T.
        const RootedTree tree_t = [&] {
            std::vector<Edge> edges;
            for (Vertex v = 0; v < b.num_vertices(); ++v) {
                if (t0.parent[idx(v)] != -1) edges.push_back({v, t0.parent[idx(v)]});
            }
            return bfs_tree(Graph(b.num_vertices(), edges), t0.order.back());
        }();
        const Vertex u1 = s.root;
        const Vertex v1 = tree_t.root;
        std::vector<Vertex> leaves;
        for (Vertex x : s.order) {
            if (x != u1) leaves.push_back(x);
        }
        const Vertex u2 = leaves.front();

        for (Vertex vj : tree_t.order) tc.add_template(map_path(tree_t.root_path(vj), [&](Vertex y) { return at(u1, y); }));
        for (Vertex vj : tree_t.order) {
            for (Vertex vt : tree_t.order) {
                auto path = reversed(map_path(tree_t.root_path(vj), [&](Vertex y) { return at(u1, y); }));
                append(path, map_path(tree_t.root_path(vt), [&](Vertex y) { return at(u2, y); }));
                tc.add_template(path);
            }
        }
        for (Vertex vr : tree_t.order) {
            if (vr == v1) continue;
            for (Vertex ui : leaves) {
                auto cycle = reversed(map_path(tree_t.root_path(vr), [&](Vertex y) { return at(u1, y); }));
                append(cycle, map_path(tree_t.root_path(vr), [&](Vertex y) { return at(ui, y); }));
                tc.add_template(cycle, true);
            }
        }
        // T_1 with colors 1..3.
        for (Vertex vj : tree_t.order) {
            if (vj != v1) tc.color_group({tc.edge(at(u1, vj), at(u1, tree_t.parent[idx(vj)]))}, 3);
        }
        // S_1 all color 4.
        std::vector<EdgeId> s1;
        for (Vertex ui : leaves) s1.push_back(tc.edge(at(u1, v1), at(ui, v1)));
        tc.color_group(s1, 4, 4);
        // T_2, copied to every other leaf copy.
        for (Vertex vj : tree_t.order) {
            if (vj == v1) continue;
            std::vector<EdgeId> group;
            for (Vertex ui : leaves) group.push_back(tc.edge(at(ui, vj), at(ui, tree_t.parent[idx(vj)])));
            tc.color_group(group, 3);
        }
        // Each S_r shares one color.
        for (Vertex vr : tree_t.order) {
            if (vr == v1) continue;
            std::vector<EdgeId> group;
            for (Vertex ui : leaves) group.push_back(tc.edge(at(u1, vr), at(ui, vr)));
            tc.color_group(group, 4);
        }
        report.claimed_colors = 4;
        report.notes = "case (ii): star factor with radius>=3 partner";
    } else if ((is_complete(g) && g.num_vertices() == 3) || (is_complete(h) && h.num_vertices() == 3)) {
        // B = K_3 with t_1, t_2, t_3 = 0, 1, 2; A has tree S.
        const bool swap = is_complete(g) && g.num_vertices() == 3;
        auto [a, b, at] = setup(swap);
        (void)b;
        const RootedTree s = bfs_tree(a, center_vertex(a));
        const Vertex u1 = s.root;
        auto in_copy = [&](Vertex ti) { return [&, ti](Vertex x) { return at(x, ti); }; };

        for (Vertex ui : s.order) tc.add_template(map_path(s.root_path(ui), in_copy(1)));
        for (Vertex ti : {0, 2}) {
            for (Vertex uj : s.order) {
                for (Vertex uk : s.order) {
                    auto path = reversed(map_path(s.root_path(uj), in_copy(ti)));
                    append(path, map_path(s.root_path(uk), in_copy(1)));
                    tc.add_template(path);
                }
            }
        }
        for (Vertex ui : s.order) {
            if (ui == u1) continue;
            auto p1 = map_path(s.root_path(ui), in_copy(1));
            p1.push_back(at(ui, 0));
            tc.add_template(p1);
            auto p3 = map_path(s.root_path(ui), in_copy(2));
            p3.push_back(at(ui, 1));
            tc.add_template(p3);
            std::vector<Vertex> p5{at(u1, 2)};
            append(p5, map_path(s.root_path(ui), in_copy(1)));
            p5.push_back(at(ui, 0));
            p5.push_back(at(ui, 2));
            tc.add_template(p5);
        }
        for (Vertex uj : s.order) {
            auto p4 = reversed(map_path(s.root_path(uj), in_copy(0)));
            p4.push_back(at(u1, 2));
            tc.add_template(p4);
        }

        auto tree_edges = [&](Vertex ti) {
            for (Vertex x : s.order) {
                if (x != u1) tc.color_group({tc.edge(at(x, ti), at(s.parent[idx(x)], ti))}, 3);
            }
        };
        tree_edges(1);
        tc.color_group({tc.edge(at(u1, 0), at(u1, 1))}, 3);
        tc.color_group({tc.edge(at(u1, 2), at(u1, 1))}, 3);
        tree_edges(0);
        tree_edges(2);
        for (Vertex x : s.order) {
            if (x != u1) tc.color_group({tc.edge(at(x, 0), at(x, 1))}, 3);
        }
        for (Vertex x : s.order) {
            if (x != u1) tc.color_group({tc.edge(at(x, 1), at(x, 2))}, 3);
        }
        tc.color_group({tc.edge(at(u1, 0), at(u1, 2))}, 3);
        for (Vertex x : s.order) {
            if (x != u1) tc.color_group({tc.edge(at(x, 0), at(x, 2))}, 3);
        }
        report.claimed_colors = 3;
        report.notes = "case (i): K_3 factor construction";
    } else {
        // Case (i) with roots chosen so that (a) both eccentricities are at
        // most 2 and one is exactly 2, or (b) both are at least 3.
        RootedTree s;
        RootedTree t;
        std::string sub;
        if (rad_g >= 3 && rad_h >= 3) {
            s = bfs_tree(g, center_vertex(g));
            t = bfs_tree(h, center_vertex(h));
            sub = "(b)";
        } else if (rad_g <= 2 && rad_h <= 2) {
            // Depth 2 on both sides whenever a factor has room for it.
            s = g.num_vertices() >= 3 ? tree_with_root_ecc2(g) : bfs_tree(g, 0);
            t = h.num_vertices() >= 3 ? tree_with_root_ecc2(h) : bfs_tree(h, 0);
            sub = "(a)";
        } else {
            const Graph& small = rad_g <= 2 ? g : h;
            const Graph& large = rad_g <= 2 ? h : g;
            auto deep = tree_with_root_ecc3(small);
            if (!deep) throw InvariantError("color_cartesian: no spanning tree with root eccentricity >= 3");
            const RootedTree other = bfs_tree(large, center_vertex(large));
            if (rad_g <= 2) {
                s = *deep;
                t = other;
            } else {
                s = other;
                t = *deep;
            }
            sub = "(b)";
        }
        auto colors = case_i_coloring(prod, h, s, t, kPrimaryBudget);
        int attempts = 1;
        if (!colors) {
            // The eccentricity-based roots are not always enough (a K_2 factor
            // has no depth-2 root path); retry BFS trees from every root pair,
            // pairs meeting (a) or (b) first.
            std::vector<std::pair<RootedTree, RootedTree>> candidates;
            std::vector<std::pair<RootedTree, RootedTree>> others;
            for (Vertex x = 0; x < g.num_vertices() && !colors; ++x) {
                for (Vertex y = 0; y < h.num_vertices(); ++y) {
                    RootedTree cs = bfs_tree(g, x);
                    RootedTree ct = bfs_tree(h, y);
                    const int es = tree_ecc(cs);
                    const int et = tree_ecc(ct);
                    const bool meets = (es >= 3 && et >= 3) || (es <= 2 && et <= 2 && std::max(es, et) == 2);
                    (meets ? candidates : others).emplace_back(std::move(cs), std::move(ct));
                }
            }
            candidates.insert(candidates.end(), std::make_move_iterator(others.begin()),
                              std::make_move_iterator(others.end()));
            for (auto& [cs, ct] : candidates) {
                ++attempts;
                colors = case_i_coloring(prod, h, cs, ct, kRetryBudget);
                if (colors) {
                    s = std::move(cs);
                    t = std::move(ct);
                    break;
                }
            }
        }
        if (!colors) throw InvariantError("color_cartesian: no verified case (i) coloring from any root pair");
        report.coloring = detail::finish_coloring(std::move(*colors));
        report.claimed_colors = 3;
        report.notes = "case (i)" + sub + ": ecc_S(root)=" + std::to_string(tree_ecc(s)) +
                       ", ecc_T(root)=" + std::to_string(tree_ecc(t)) + ", roots tried " + std::to_string(attempts);
    }

    if (report.coloring.size() == 0) report.coloring = detail::finish_coloring(tc.take());
    detail::require_verified(prod, report.coloring, 2, "color_cartesian");
    return report;
}

ConstructionReport color_permutation_graph(const Graph& g, const std::vector<Vertex>& ham_path,
                                           const Permutation& alpha, int ell) {
    if (ell < 1) throw ParameterError("ell must be >= 1");
    const int n = g.num_vertices();
    if (n < 2) throw PreconditionError("color_permutation_graph: graph must be nontrivial");
    if (!is_hamiltonian_path(g, ham_path)) throw PreconditionError("color_permutation_graph: not a Hamiltonian path");
    if (alpha.size() != n) throw PreconditionError("color_permutation_graph: permutation size mismatch");

    const Graph pg = permutation_graph(g, alpha);
    // Path labels: v_k = ham_path[k - 1], u_k its copy. In these labels the
    // matching sends v_k to u_{beta(k)}.
    std::vector<int> pos(idx(n));
    for (int k = 0; k < n; ++k) pos[idx(ham_path[idx(k)])] = k;
    auto v_at = [&](int k) { return ham_path[idx(k - 1)]; };
    auto u_at = [&](int k) { return n + ham_path[idx(k - 1)]; };
    auto beta = [&](int k) { return pos[idx(alpha(ham_path[idx(k - 1)]))] + 1; };

    if (beta(n) == 1 || beta(n) == n) {
        // v_1 P v_n u_{beta(n)} P' ... is a Hamiltonian path of the whole graph.
        std::vector<Vertex> path;
        for (int k = 1; k <= n; ++k) path.push_back(v_at(k));
        if (beta(n) == n) {
            for (int k = n; k >= 1; --k) path.push_back(u_at(k));
        } else {
            for (int k = 1; k <= n; ++k) path.push_back(u_at(k));
        }
        auto report = color_traceable(pg, path, ell);
        report.theorem = Theorem::permutation;
        report.notes = "alpha(n) in {1,n}: traceable";
        return report;
    }

    const int i = beta(n);
    const int period = ell + 1;
    auto cyc = [&](int position) { return (position - 1) % period + 1; };  // position >= 1
    std::vector<Color> colors(idx(pg.num_edges()), 0);
    auto set = [&](Vertex a, Vertex b, Color c) { colors[idx(*pg.edge_id(a, b))] = c; };
    for (int k = 1; k < n; ++k) set(v_at(k), v_at(k + 1), cyc(k));
    // v_1 P v_n u_i P'^{-1} u_1 and v_1 P v_n u_i P' u_n continue the sequence.
    set(v_at(n), u_at(i), cyc(n));
    for (int k = i; k > 1; --k) set(u_at(k), u_at(k - 1), cyc(n + (i - k) + 1));
    for (int k = i; k < n; ++k) set(u_at(k), u_at(k + 1), cyc(n + (k - i) + 1));
    // u_{beta(1)} v_1 P v_n: the edge before v_1 v_2 takes the color preceding 1.
    set(u_at(beta(1)), v_at(1), period);
    for (int k = 2; k <= n - 1; ++k) set(v_at(k), u_at(beta(k)), cyc(k - 1));

    ConstructionReport report;
    report.graph = pg;
    report.coloring = detail::finish_coloring(std::move(colors));
    report.claimed_colors = ell + 1;
    report.theorem = Theorem::permutation;
    report.notes = "alpha(n)=" + std::to_string(i) + ": interior construction";
    detail::require_verified(pg, report.coloring, ell, "color_permutation_graph");
    return report;
}

}  // namespace pcc
