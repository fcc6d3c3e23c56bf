#include "pcc/verify.hpp"

#include <algorithm>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

void require_ell(int ell) {
    if (ell < 1) throw ParameterError("ell must be >= 1, got " + std::to_string(ell));
}

void require_total(const Graph& g, const EdgeColoring& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.num_edges())) {
        throw InputError("coloring covers " + std::to_string(coloring.size()) + " edges but the graph has " +
                         std::to_string(g.num_edges()));
    }
}

// Internally disjoint selection of k paths out of `paths`.
bool choose_disjoint(const std::vector<std::vector<Vertex>>& paths, std::size_t start, int k, int n,
                     std::vector<char>& used, std::vector<std::size_t>& chosen) {
    if (k == 0) return true;
    for (std::size_t i = start; i < paths.size(); ++i) {
        const auto& p = paths[i];
        bool clash = false;
        for (std::size_t j = 1; j + 1 < p.size() && !clash; ++j) clash = used[idx(p[j])] != 0;
        if (clash) continue;
        for (std::size_t j = 1; j + 1 < p.size(); ++j) used[idx(p[j])] = 1;
        chosen.push_back(i);
        if (choose_disjoint(paths, i + 1, k - 1, n, used, chosen)) return true;
        chosen.pop_back();
        for (std::size_t j = 1; j + 1 < p.size(); ++j) used[idx(p[j])] = 0;
    }
    return false;
}

}  // namespace

bool is_distance_proper_sequence(std::span<const Color> colors, int ell) {
    require_ell(ell);
    for (std::size_t j = 1; j < colors.size(); ++j) {
        const std::size_t lo = j > static_cast<std::size_t>(ell) ? j - static_cast<std::size_t>(ell) : 0;
        for (std::size_t i = lo; i < j; ++i) {
            if (colors[i] == colors[j]) return false;
        }
    }
    return true;
}

bool is_distance_proper_path(const Graph& g, const EdgeColoring& coloring, std::span<const Vertex> path, int ell) {
    require_total(g, coloring);
    if (path.size() < 2) throw InputError("a path needs at least one edge");
    std::vector<char> seen(idx(g.num_vertices()), 0);
    std::vector<Color> colors;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex x = path[i];
        if (x < 0 || x >= g.num_vertices()) throw InputError("vertex " + std::to_string(x) + " out of range");
        if (seen[idx(x)]) throw InputError("vertex " + std::to_string(x) + " repeats; not a simple path");
        seen[idx(x)] = 1;
        if (i > 0) {
            auto e = g.edge_id(path[i - 1], x);
            if (!e) {
                throw InputError(std::to_string(path[i - 1]) + "-" + std::to_string(x) + " is not an edge");
            }
            colors.push_back(coloring[*e]);
        }
    }
    return is_distance_proper_sequence(colors, ell);
}

ProperPathSearch::ProperPathSearch(const Graph& g, int ell)
    : g_(&g), ell_(ell), visited_(idx(g.num_vertices()), 0) {
    require_ell(ell);
    path_.reserve(idx(g.num_vertices()));
    path_colors_.reserve(idx(g.num_vertices()));
}

bool ProperPathSearch::window_admits(Color c) const {
    const std::size_t len = path_colors_.size();
    const std::size_t lo = len > static_cast<std::size_t>(ell_) ? len - static_cast<std::size_t>(ell_) : 0;
    for (std::size_t i = lo; i < len; ++i) {
        if (path_colors_[i] == c) return false;
    }
    return true;
}

bool ProperPathSearch::out_of_time() {
    if (!deadline_) return false;
    if ((++ticks_ & 0xFFF) != 0) return timed_out_;
    if (Clock::now() >= *deadline_) timed_out_ = true;
    return timed_out_;
}

bool ProperPathSearch::dfs(Vertex x) {
    if (out_of_time()) return true;
    for (const Neighbor& nb : g_->neighbors(x)) {
        if (visited_[idx(nb.vertex)]) continue;
        const Color c = colors_[idx(nb.edge)];
        if (!window_admits(c)) continue;
        path_.push_back(nb.vertex);
        path_colors_.push_back(c);
        if (nb.vertex == target_) {
            if (!collect_all_) return true;
            all_->push_back(path_);
        } else {
            visited_[idx(nb.vertex)] = 1;
            const bool stop = dfs(nb.vertex);
            visited_[idx(nb.vertex)] = 0;
            if (stop) return true;
        }
        path_.pop_back();
        path_colors_.pop_back();
    }
    return false;
}

SearchOutcome ProperPathSearch::find(std::span<const Color> colors, Vertex u, Vertex v,
                                     std::vector<Vertex>* path_out, std::optional<Clock::time_point> deadline) {
    colors_ = colors;
    target_ = v;
    collect_all_ = false;
    deadline_ = deadline;
    timed_out_ = false;
    std::fill(visited_.begin(), visited_.end(), 0);
    path_.assign(1, u);
    path_colors_.clear();
    visited_[idx(u)] = 1;
    const bool stopped = dfs(u);
    if (timed_out_) return SearchOutcome::timed_out;
    if (!stopped) return SearchOutcome::none;
    if (path_out) *path_out = path_;
    return SearchOutcome::found;
}

SearchOutcome ProperPathSearch::find_all(std::span<const Color> colors, Vertex u, Vertex v,
                                         std::vector<std::vector<Vertex>>& out,
                                         std::optional<Clock::time_point> deadline) {
    colors_ = colors;
    target_ = v;
    collect_all_ = true;
    all_ = &out;
    deadline_ = deadline;
    timed_out_ = false;
    std::fill(visited_.begin(), visited_.end(), 0);
    path_.assign(1, u);
    path_colors_.clear();
    visited_[idx(u)] = 1;
    dfs(u);
    collect_all_ = false;
    all_ = nullptr;
    return timed_out_ ? SearchOutcome::timed_out : (out.empty() ? SearchOutcome::none : SearchOutcome::found);
}

std::optional<std::vector<Vertex>> find_distance_proper_path(const Graph& g, const EdgeColoring& coloring, Vertex u,
                                                             Vertex v, int ell) {
    require_total(g, coloring);
    if (u == v) throw InputError("find_distance_proper_path needs u != v");
    ProperPathSearch search(g, ell);
    std::vector<Vertex> path;
    if (search.find(coloring.colors(), u, v, &path) == SearchOutcome::found) return path;
    return std::nullopt;
}

ProperConnectionChecker::ProperConnectionChecker(const Graph& g, int ell) : search_(g, ell) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
            if (!g.has_edge(u, v)) pairs_.emplace_back(u, v);
        }
    }
}

std::optional<VertexPair> ProperConnectionChecker::failure(std::span<const Color> colors) {
    // Adjacent pairs are always joined by their edge, so only non-adjacent
    // pairs are probed.
    const std::size_t count = pairs_.size();
    for (std::size_t step = 0; step < count; ++step) {
        const std::size_t i = (hint_ + step) % count;
        const auto [u, v] = pairs_[i];
        if (search_.find(colors, u, v) != SearchOutcome::found) {
            hint_ = i;
            return pairs_[i];
        }
    }
    return std::nullopt;
}

VerificationCertificate verify_coloring(const Graph& g, const EdgeColoring& coloring, int ell,
                                        const VerifyOptions& options) {
    require_total(g, coloring);
    require_ell(ell);
    if (options.k < 1) throw ParameterError("k must be >= 1");

    std::optional<Clock::time_point> deadline;
    if (options.time_limit) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options.time_limit);
    }
    VerificationCertificate cert;
    ProperPathSearch search(g, ell);
    const int n = g.num_vertices();
    std::vector<char> used(idx(n), 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            PairWitness witness{u, v, {}};
            if (options.k == 1) {
                std::vector<Vertex> path;
                const auto outcome = search.find(coloring.colors(), u, v, &path, deadline);
                if (outcome == SearchOutcome::timed_out) {
                    cert.status = VerifyStatus::inconclusive;
                    cert.timed_out_pair = VertexPair{u, v};
                    return cert;
                }
                if (outcome == SearchOutcome::none) {
                    cert.status = VerifyStatus::failed;
                    cert.failing_pair = VertexPair{u, v};
                    return cert;
                }
                witness.paths.push_back(std::move(path));
            } else {
                std::vector<std::vector<Vertex>> all;
                if (search.find_all(coloring.colors(), u, v, all, deadline) == SearchOutcome::timed_out) {
                    cert.status = VerifyStatus::inconclusive;
                    cert.timed_out_pair = VertexPair{u, v};
                    return cert;
                }
                std::fill(used.begin(), used.end(), 0);
                std::vector<std::size_t> chosen;
                if (!choose_disjoint(all, 0, options.k, n, used, chosen)) {
                    cert.status = VerifyStatus::failed;
                    cert.failing_pair = VertexPair{u, v};
                    return cert;
                }
                for (std::size_t i : chosen) witness.paths.push_back(all[i]);
            }
            if (options.keep_witnesses) cert.witnesses.push_back(std::move(witness));
        }
    }
    return cert;
}

}  // namespace pcc
