#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

struct SearchBudget {
    int max_colors = 8;
    std::optional<std::chrono::duration<double>> time_limit = std::chrono::seconds(60);
    int max_edges = 40;
    // Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct ExactResult {
    int min_colors = 0;
    EdgeColoring witness;
    std::uint64_t colorings_examined = 0;
    std::vector<int> exhausted_levels;  // every t < min_colors
};

struct Inconclusive {
    std::vector<int> exhausted_levels;  // t values proven to admit no valid coloring
    std::uint64_t colorings_examined = 0;
    std::string reason;
};

using ExactOutcome = std::variant<ExactResult, Inconclusive>;

/// Smallest t for which some t-coloring makes g (1, ell)-proper connected.
/// Levels t = 1, 2, ... are searched in turn; each enumerates colorings in
/// canonical form (color c + 1 first appears after color c in edge order)
/// that use exactly t colors, so the first hit is minimal.
ExactOutcome min_colors_exact(const Graph& g, int ell, const SearchBudget& budget = {});

enum class BoundStatus { proven, refuted, inconclusive };

struct LowerBoundResult {
    BoundStatus status = BoundStatus::inconclusive;
    std::optional<EdgeColoring> counterexample;  // set when refuted
    std::uint64_t colorings_examined = 0;
};

/// proven: no valid coloring with at most t colors exists.
LowerBoundResult prove_lower_bound(const Graph& g, int ell, int t, const SearchBudget& budget = {});

/// Visits every canonical coloring of m edges with at most t colors (exactly
/// t when `exactly` is set), in lexicographic order. The visitor returns
/// false to stop. Returns the number of colorings visited.
std::uint64_t for_each_canonical_coloring(int m, int t, bool exactly,
                                          const std::function<bool(std::span<const Color>)>& visit);

}  // namespace pcc
