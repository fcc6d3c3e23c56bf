#include <algorithm>
#include <functional>
#include <set>

#include "common.hpp"
#include "pcc/structure.hpp"

namespace pcc {

using detail::idx;

namespace {

constexpr int kPalette = 5;

// Ear-by-ear coloring state over the minimally 2-connected spanning graph.
class EarColorer {
public:
    explicit EarColorer(const Graph& h)
        : h_(h),
          colors_(idx(h.num_edges()), 0),
          built_(idx(h.num_vertices()), 0),
          anchors_(idx(h.num_vertices())) {}

    void color_base_cycle(const std::vector<Vertex>& cycle) {
        const int r = static_cast<int>(cycle.size());
        const int full = r - r % 3;
        for (int j = 0; j < r; ++j) {
            const Vertex a = cycle[idx(j)];
            const Vertex b = cycle[idx((j + 1) % r)];
            // 1,2,3 repeated; a remainder of one edge gets 4, of two edges 4 and 5.
            colors_[idx(edge(a, b))] = j < full ? j % 3 + 1 : 4 + (j - full);
            built_[idx(a)] = 1;
        }
        for (int j = 0; j < r; ++j) {
            AnchorSet set;
            set.x = cycle[idx(j)];
            set.paths.push_back({cycle[idx((j + 1) % r)], cycle[idx((j + 2) % r)]});
            set.paths.push_back({cycle[idx((j - 1 + r) % r)], cycle[idx((j - 2 + 2 * r) % r)]});
            anchors_[idx(set.x)] = std::move(set);
        }
    }

    // Tries to color `ear` (endpoint, interior..., endpoint) in the given
    // orientation. On failure the state is left unchanged and the reason is
    // returned; on success the returned string is empty.
    std::string add_ear(const std::vector<Vertex>& ear, std::string& case_tag) {
        const auto saved_colors = colors_;
        const auto saved_built = built_;
        const auto saved_anchors = anchors_;
        std::string err = try_add_ear(ear, case_tag);
        if (err.empty()) err = check_properties();
        if (!err.empty()) {
            colors_ = saved_colors;
            built_ = saved_built;
            anchors_ = saved_anchors;
        }
        return err;
    }

    int max_anchor_colors() const {
        int worst = 0;
        for (Vertex x = 0; x < h_.num_vertices(); ++x) {
            if (built_[idx(x)]) worst = std::max(worst, static_cast<int>(anchor_colors(x).size()));
        }
        return worst;
    }

    // Property 2: every pair of built vertices has a distance-2-proper path
    // that starts inside the first vertex's anchor set and ends inside the
    // second's. Property 3: every anchor set spans at most 4 colors.
    std::string check_properties() const {
        for (Vertex x = 0; x < h_.num_vertices(); ++x) {
            if (!built_[idx(x)]) continue;
            const auto& set = anchors_[idx(x)];
            if (set.paths.size() < 2 || set.paths.size() > 3) {
                return "anchor set of " + std::to_string(x) + " has " + std::to_string(set.paths.size()) + " paths";
            }
            if (anchor_colors(x).size() > 4) {
                return "anchor set of " + std::to_string(x) + " uses more than 4 colors";
            }
        }
        for (Vertex x = 0; x < h_.num_vertices(); ++x) {
            for (Vertex y = x + 1; y < h_.num_vertices(); ++y) {
                if (built_[idx(x)] && built_[idx(y)] && !anchored_path(x, y)) {
                    return "no anchored proper path between " + std::to_string(x) + " and " + std::to_string(y);
                }
            }
        }
        return {};
    }

    const std::vector<Color>& colors() const noexcept { return colors_; }
    const std::vector<AnchorSet>& anchors() const noexcept { return anchors_; }

private:
    EdgeId edge(Vertex a, Vertex b) const {
        auto e = h_.edge_id(a, b);
        if (!e) throw InvariantError("color_2connected: missing edge " + std::to_string(a) + "-" + std::to_string(b));
        return *e;
    }
    Color color(Vertex a, Vertex b) const { return colors_[idx(edge(a, b))]; }
    bool edge_built(Vertex a, Vertex b) const { return colors_[idx(edge(a, b))] != 0; }

    std::set<Color> anchor_colors(Vertex x) const {
        std::set<Color> out;
        for (const AnchorPath& p : anchors_[idx(x)].paths) {
            out.insert(color(x, p.mid));
            out.insert(color(p.mid, p.far));
        }
        return out;
    }

    bool is_anchor(Vertex x, Vertex mid, Vertex far) const {
        const auto& paths = anchors_[idx(x)].paths;
        return std::find(paths.begin(), paths.end(), AnchorPath{mid, far}) != paths.end();
    }

    // First distance-2-proper x-y path over built edges, of length >= 2,
    // whose first two edges form an anchor path of x and whose last two
    // edges (read from y) form an anchor path of y.
    std::optional<std::vector<Vertex>> anchored_path(Vertex x, Vertex y) const {
        std::vector<char> on_path(idx(h_.num_vertices()), 0);
        std::vector<Vertex> path;
        std::vector<Color> path_colors;
        std::function<bool(Vertex)> dfs = [&](Vertex cur) -> bool {
            for (const Neighbor& nb : h_.neighbors(cur)) {
                const Color c = colors_[idx(nb.edge)];
                if (c == 0 || on_path[idx(nb.vertex)]) continue;
                const std::size_t len = path_colors.size();
                if (len >= 1 && path_colors[len - 1] == c) continue;
                if (len >= 2 && path_colors[len - 2] == c) continue;
                if (len < 2) {
                    const Vertex mid = len == 0 ? nb.vertex : path[1];
                    const Vertex far = len == 0 ? -1 : nb.vertex;
                    if (len == 0) {
                        bool any = false;
                        for (const AnchorPath& p : anchors_[idx(x)].paths) any = any || p.mid == mid;
                        if (!any) continue;
                    } else if (!is_anchor(x, mid, far)) {
                        continue;
                    }
                }
                path.push_back(nb.vertex);
                path_colors.push_back(c);
                if (nb.vertex == y) {
                    const std::size_t k = path.size();
                    if (k >= 3 && is_anchor(y, path[k - 2], path[k - 3])) return true;
                } else {
                    on_path[idx(nb.vertex)] = 1;
                    if (dfs(nb.vertex)) return true;
                    on_path[idx(nb.vertex)] = 0;
                }
                path.pop_back();
                path_colors.pop_back();
            }
            return false;
        };
        path.push_back(x);
        on_path[idx(x)] = 1;
        if (dfs(x)) return path;
        return std::nullopt;
    }

    static std::optional<Color> lowest(const std::function<bool(Color)>& allowed) {
        for (Color c = 1; c <= kPalette; ++c) {
            if (allowed(c)) return c;
        }
        return std::nullopt;
    }

    std::string try_add_ear(const std::vector<Vertex>& ear, std::string& case_tag) {
        const int p = static_cast<int>(ear.size()) - 2;  // internal vertices
        if (p < 1) return "ear has no internal vertex";
        const Vertex u = ear.front();
        const Vertex v = ear.back();
        const auto puv = anchored_path(u, v);
        if (!puv) return "no anchored path between the ear's endpoints";
        const Vertex w1 = (*puv)[1];
        const Vertex w2 = (*puv)[2];

        std::vector<Vertex> v_mids;
        for (const AnchorPath& ap : anchors_[idx(v)].paths) {
            if (std::find(v_mids.begin(), v_mids.end(), ap.mid) == v_mids.end()) v_mids.push_back(ap.mid);
        }
        if (v_mids.size() != 2) return "anchor set of the far endpoint does not use exactly two edges";
        const Vertex v1 = v_mids[0];
        const Vertex v2 = v_mids[1];
        const Color fv1 = color(v, v1);
        const Color fv2 = color(v, v2);
        const bool equal = fv1 == fv2;
        const auto anchor_v = anchor_colors(v);
        const Color fuw1 = color(u, w1);
        const Color fw1w2 = color(w1, w2);

        // seq = w2 w1 u u_2 ... u_{p+1} v; edge k of seq joins seq[k], seq[k+1].
        // Ear edge eps_j (u_j u_{j+1}, j = 1..p+1) is seq edge j + 1.
        std::vector<Vertex> seq{w2, w1};
        seq.insert(seq.end(), ear.begin(), ear.end());
        std::vector<Color> seq_colors(seq.size() - 1, 0);
        seq_colors[0] = fw1w2;
        seq_colors[1] = fuw1;
        auto eps = [&](int j) -> Color& { return seq_colors[idx(j + 1)]; };

        auto fail = [&](const std::string& what) { return "case " + case_tag + ": " + what; };
        case_tag = std::string(p == 1 ? "p=1" : (p == 2 ? "p=2" : "p>=3")) + (equal ? ",equal" : ",distinct");

        const auto last = lowest([&](Color c) { return !anchor_v.contains(c); });
        if (!last) return fail("no color outside f(P_v)");
        eps(p + 1) = *last;

        if (p == 1) {
            const auto first = lowest([&](Color c) {
                if (c == fw1w2 || c == fuw1) return false;
                return equal || c == eps(2) || c == fv1 || c == fv2;
            });
            if (!first) return fail("no color for u u_2");
            eps(1) = *first;
        } else {
            if (equal) {
                const auto c = lowest([&](Color x) { return x != eps(p + 1) && x != fv1 && x != fv2; });
                if (!c) return fail("no color for u_p u_{p+1}");
                eps(p) = *c;
            } else {
                if (p == 2) {
                    const auto c = lowest([&](Color x) {
                        return x != fuw1 && x != fw1w2 && (x == eps(3) || x == fv1 || x == fv2);
                    });
                    if (!c) return fail("no color for u u_2");
                    eps(1) = *c;
                } else {
                    const auto c = lowest([&](Color x) { return x != fuw1 && (x == fv1 || x == fv2); });
                    if (!c) return fail("no color for u_{p-1} u_p");
                    eps(p - 1) = *c;
                }
                // eps(p - 2) is u w1 when p = 2 and may still be uncolored (0) when p = 3.
                const Color before2 = seq_colors[idx(p - 1)];
                const auto c = lowest([&](Color x) {
                    return x != eps(p + 1) && x != fv1 && x != fv2 && x != eps(p - 1) && x != before2;
                });
                if (!c) return fail("no color for u_p u_{p+1}");
                eps(p) = *c;
            }
            // Remaining ear edges avoid their colored neighbors within two
            // positions along w2 w1 u P v.
            for (int j = 1; j <= p + 1; ++j) {
                if (eps(j) != 0) continue;
                const int k = j + 1;
                const auto c = lowest([&](Color x) {
                    for (int d = -2; d <= 2; ++d) {
                        const int o = k + d;
                        if (d == 0 || o < 0 || o >= static_cast<int>(seq_colors.size())) continue;
                        if (seq_colors[idx(o)] == x) return false;
                    }
                    return true;
                });
                if (!c) return fail("no color for ear edge " + std::to_string(j));
                eps(j) = *c;
            }
        }

        for (int j = 1; j <= p + 1; ++j) colors_[idx(edge(ear[idx(j - 1)], ear[idx(j)]))] = eps(j);
        for (int i = 1; i <= p; ++i) built_[idx(ear[idx(i)])] = 1;

        // Anchor sets; ear[i - 1] is u_i, ear[p + 1] is v.
        auto at = [&](int i) { return ear[idx(i - 1)]; };
        for (int i = 3; i <= p; ++i) {
            anchors_[idx(at(i))] = AnchorSet{at(i), {{at(i - 1), at(i - 2)}, {at(i + 1), at(i + 2)}}};
        }
        if (p == 1) {
            anchors_[idx(at(2))] = AnchorSet{at(2), {{u, w1}, {v, v1}, {v, v2}}};
        } else {
            anchors_[idx(at(2))] = AnchorSet{at(2), {{u, w1}, {at(3), at(4)}}};
            anchors_[idx(at(p + 1))] = AnchorSet{at(p + 1), {{at(p), at(p - 1)}, {v, v1}, {v, v2}}};
        }
        return {};
    }

    const Graph& h_;
    std::vector<Color> colors_;
    std::vector<char> built_;
    std::vector<AnchorSet> anchors_;
};

}  // namespace

ConstructionReport color_2connected(const Graph& g, TwoConnectedTrace* trace) {
    if (!is_2_connected(g)) throw PreconditionError("color_2connected: input is not 2-connected");
    const Graph h = minimally_2connected_spanning(g);
    const EarDecomposition d = ear_decomposition(h);

    EarColorer colorer(h);
    colorer.color_base_cycle(d.base_cycle);
    if (auto err = colorer.check_properties(); !err.empty()) {
        throw InvariantError("color_2connected: base cycle: " + err);
    }
    TwoConnectedTrace local;
    local.base_max_anchor_colors = colorer.max_anchor_colors();

    for (std::size_t k = 0; k < d.ears.size(); ++k) {
        const auto& ear = d.ears[k];
        EarRecord record;
        record.ear_index = static_cast<int>(k) + 1;
        record.internal_vertices = static_cast<int>(ear.size()) - 2;
        std::string first_err;
        std::string err;
        for (bool reversed : {false, true}) {
            std::vector<Vertex> oriented = ear;
            if (reversed) std::reverse(oriented.begin(), oriented.end());
            std::string tag;
            err = colorer.add_ear(oriented, tag);
            if (err.empty()) {
                record.reversed = reversed;
                record.case_tag = tag;
                break;
            }
            if (first_err.empty()) first_err = err;
        }
        if (!err.empty()) {
            throw InvariantError("color_2connected: ear " + std::to_string(k + 1) + " failed in both orientations (" +
                                 first_err + "; reversed: " + err + ")");
        }
        record.max_anchor_colors = colorer.max_anchor_colors();
        local.ears.push_back(std::move(record));
    }

    // Edges of g outside h take color 1.
    std::vector<Color> colors(idx(g.num_edges()), 1);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        colors[idx(*g.edge_id(h.edge(e).u, h.edge(e).v))] = colorer.colors()[idx(e)];
    }
    ConstructionReport report;
    report.graph = g;
    report.coloring = EdgeColoring(std::move(colors));
    report.claimed_colors = kPalette;
    report.theorem = Theorem::two_connected;
    report.notes = "base cycle " + std::to_string(d.base_cycle.size()) + ", " + std::to_string(d.ears.size()) +
                   " ears, " + std::to_string(g.num_edges() - h.num_edges()) + " edges outside H";
    detail::require_verified(g, report.coloring, 2, "color_2connected");

    if (trace) {
        local.spanning = h;
        local.decomposition = d;
        local.anchors = colorer.anchors();
        *trace = std::move(local);
    }
    return report;
}

}  // namespace pcc
