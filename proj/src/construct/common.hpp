#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pcc/construct.hpp"
#include "pcc/errors.hpp"
#include "pcc/verify.hpp"

namespace pcc::detail {

inline std::size_t idx(int x) { return static_cast<std::size_t>(x); }

// Colors the graph's edges from a per-edge vector, filling unset (0) entries
// with color 1.
inline EdgeColoring finish_coloring(std::vector<Color> colors) {
    for (Color& c : colors) {
        if (c == 0) c = 1;
    }
    return EdgeColoring(std::move(colors));
}

// Throws InvariantError naming the first failing pair unless the coloring is
// (1, ell)-proper connected.
inline void require_verified(const Graph& g, const EdgeColoring& coloring, int ell, const std::string& who) {
    VerifyOptions options;
    options.keep_witnesses = false;
    const auto cert = verify_coloring(g, coloring, ell, options);
    if (!cert.ok()) {
        const auto [u, v] = *cert.failing_pair;
        throw InvariantError(who + ": coloring is not (1," + std::to_string(ell) + ")-proper connected; pair " +
                             std::to_string(u) + " " + std::to_string(v) + " has no proper path");
    }
}

// Vectors for the large side of K_{m,n}: n vectors of length m with entries
// as colors. Sets `claimed` to the color count for the dispatched case.
std::vector<std::vector<Color>> bipartite_vectors(int m, int n, int ell, int& claimed, std::string& notes);

}  // namespace pcc::detail
