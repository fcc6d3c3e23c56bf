#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

using Clock = std::chrono::steady_clock;
using VertexPair = std::pair<Vertex, Vertex>;

// Equal colors at edge positions i < j are forbidden iff j - i <= ell, i.e.
// every ell + 1 consecutive edges are rainbow. ell = 1 is ordinary proper
// coloring along the path.
bool is_distance_proper_sequence(std::span<const Color> colors, int ell);

// Throws InputError if `path` is not a simple path of g with at least one edge.
bool is_distance_proper_path(const Graph& g, const EdgeColoring& coloring, std::span<const Vertex> path, int ell);

// Exhaustive DFS over simple paths from u, neighbors in ascending order,
// pruning a branch only when its newest edge breaks the window. Returns the
// first distance-ell-proper u-v path found.
std::optional<std::vector<Vertex>> find_distance_proper_path(const Graph& g, const EdgeColoring& coloring, Vertex u,
                                                             Vertex v, int ell);

enum class SearchOutcome { found, none, timed_out };

// Reusable search state for one graph and window. Not thread safe; make one
// per worker.
class ProperPathSearch {
public:
    ProperPathSearch(const Graph& g, int ell);

    // Colors indexed by edge id. `path_out` receives the witness when found.
    SearchOutcome find(std::span<const Color> colors, Vertex u, Vertex v, std::vector<Vertex>* path_out = nullptr,
                       std::optional<Clock::time_point> deadline = std::nullopt);

    // Every distance-proper simple u-v path, in DFS order.
    SearchOutcome find_all(std::span<const Color> colors, Vertex u, Vertex v, std::vector<std::vector<Vertex>>& out,
                           std::optional<Clock::time_point> deadline = std::nullopt);

    const Graph& graph() const noexcept { return *g_; }
    int ell() const noexcept { return ell_; }

private:
    bool dfs(Vertex x);
    bool window_admits(Color c) const;
    bool out_of_time();

    const Graph* g_;
    int ell_;
    std::span<const Color> colors_;
    Vertex target_ = 0;
    bool collect_all_ = false;
    std::vector<std::vector<Vertex>>* all_ = nullptr;
    std::vector<char> visited_;
    std::vector<Vertex> path_;
    std::vector<Color> path_colors_;
    std::optional<Clock::time_point> deadline_;
    std::uint32_t ticks_ = 0;
    bool timed_out_ = false;
};

// Boolean (1, ell)-proper connectivity check tuned for repeated calls on many
// colorings of one graph: it retries the most recent failing pair first.
class ProperConnectionChecker {
public:
    ProperConnectionChecker(const Graph& g, int ell);

    // First failing pair in this checker's current probe order, or nullopt
    // when every pair is connected.
    std::optional<VertexPair> failure(std::span<const Color> colors);
    bool connected(std::span<const Color> colors) { return !failure(colors).has_value(); }

private:
    ProperPathSearch search_;
    std::vector<VertexPair> pairs_;
    std::size_t hint_ = 0;
};

enum class VerifyStatus { verified, failed, inconclusive };

struct PairWitness {
    Vertex u;
    Vertex v;
    std::vector<std::vector<Vertex>> paths;  // k internally disjoint paths
};

struct VerificationCertificate {
    VerifyStatus status = VerifyStatus::verified;
    std::vector<PairWitness> witnesses;     // lexicographic pair order
    std::optional<VertexPair> failing_pair;  // set when failed
    std::optional<VertexPair> timed_out_pair;  // set when inconclusive

    bool ok() const noexcept { return status == VerifyStatus::verified; }
};

struct VerifyOptions {
    int k = 1;
    std::optional<std::chrono::duration<double>> time_limit;  // whole call
    bool keep_witnesses = true;
};

// Checks that every pair of distinct vertices is joined by k pairwise
// internally vertex-disjoint distance-ell-proper paths. Pairs are examined in
// lexicographic order. k >= 2 enumerates all proper paths per pair and is
// meant for small graphs.
VerificationCertificate verify_coloring(const Graph& g, const EdgeColoring& coloring, int ell,
                                        const VerifyOptions& options = {});

}  // namespace pcc
