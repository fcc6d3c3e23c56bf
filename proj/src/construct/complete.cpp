#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "common.hpp"
#include "pcc/families.hpp"

namespace pcc {

using detail::idx;

namespace {

// base^exp, saturating at `cap` so callers can compare against n safely.
long long capped_pow(long long base, int exp, long long cap) {
    long long result = 1;
    for (int i = 0; i < exp; ++i) {
        result *= base;
        if (result > cap) return cap + 1;
    }
    return result;
}

// All vectors over {1..q}^m in lexicographic order.
std::vector<std::vector<Color>> all_vectors(int m, int q) {
    std::vector<std::vector<Color>> out;
    std::vector<Color> cur(idx(m), 1);
    for (;;) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[idx(i)] == q) cur[idx(i--)] = 1;
        if (i < 0) break;
        ++cur[idx(i)];
    }
    return out;
}

std::vector<std::vector<Color>> unit_vectors(int m) {
    std::vector<std::vector<Color>> out;
    for (int i = 0; i < m; ++i) {
        std::vector<Color> v(idx(m), 1);
        v[idx(i)] = 2;
        out.push_back(std::move(v));
    }
    return out;
}

// Appends vectors from `pool` not already present until `out` has n entries.
void fill_distinct(std::vector<std::vector<Color>>& out, const std::vector<std::vector<Color>>& pool, int n) {
    std::set<std::vector<Color>> have(out.begin(), out.end());
    for (const auto& v : pool) {
        if (static_cast<int>(out.size()) >= n) return;
        if (have.insert(v).second) out.push_back(v);
    }
}

// Two-colorings of W_4, W_5, W_6 (rim 0..n-1, center n), edge order as in
// wheel_graph(). Produced by min_colors_exact(wheel_graph(n), 2); a test
// re-derives them.
const std::array<std::vector<Color>, 3> kSmallWheelColorings{{
    {1, 1, 1, 1, 1, 1, 2, 2},
    {1, 1, 1, 1, 1, 1, 2, 2, 2, 2},
    {1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 1, 1},
}};

}  // namespace

const std::vector<Color>& small_wheel_coloring(int n) {
    if (n < 4 || n > 6) throw ParameterError("small_wheel_coloring covers n = 4..6");
    return kSmallWheelColorings[idx(n - 4)];
}

namespace detail {

std::vector<std::vector<Color>> bipartite_vectors(int m, int n, int ell, int& claimed, std::string& notes) {
    std::vector<std::vector<Color>> vectors;
    if (m == 1) {
        for (int j = 0; j < n; ++j) vectors.push_back({j + 1});
        claimed = n;
        notes = "m=1: all edges distinct";
        return vectors;
    }
    const long long two_m = capped_pow(2, m, n);
    const long long three_m = capped_pow(3, m, n);
    vectors = unit_vectors(m);
    if (n <= two_m) {
        fill_distinct(vectors, all_vectors(m, 2), n);
        claimed = 2;
        notes = "m<=n<=2^m: distinct binary vectors";
    } else if (ell == 2) {
        fill_distinct(vectors, all_vectors(m, 2), static_cast<int>(two_m));
        vectors.resize(idx(n), std::vector<Color>(idx(m), 3));
        claimed = 3;
        notes = "ell=2, n>2^m: binary vectors plus all-3 vectors";
    } else if (n <= three_m) {
        fill_distinct(vectors, all_vectors(m, 2), static_cast<int>(two_m));
        fill_distinct(vectors, all_vectors(m, 3), n);
        claimed = 3;
        notes = "ell>=3, 2^m<n<=3^m: distinct ternary vectors";
    } else {
        fill_distinct(vectors, all_vectors(m, 2), static_cast<int>(two_m));
        std::vector<Color> tail(idx(m), 4);
        tail[0] = 3;
        vectors.resize(idx(n), tail);
        claimed = 4;
        notes = "ell>=3, n>3^m: binary vectors plus (3,4,...,4)";
    }
    return vectors;
}

}  // namespace detail

ConstructionReport color_complete_bipartite(int m, int n, int ell) {
    if (m < 1 || m > n) throw ParameterError("color_complete_bipartite needs 1 <= m <= n");
    if (ell < 2) throw ParameterError("color_complete_bipartite needs ell >= 2");
    ConstructionReport report;
    report.graph = complete_bipartite_graph(m, n);
    const auto vectors = detail::bipartite_vectors(m, n, ell, report.claimed_colors, report.notes);
    std::vector<Color> colors(idx(report.graph.num_edges()), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            colors[idx(*report.graph.edge_id(i, m + j))] = vectors[idx(j)][idx(i)];
        }
    }
    report.coloring = EdgeColoring(std::move(colors));
    report.theorem = Theorem::complete_bipartite;
    return report;
}

std::optional<int> balanced_split(const std::vector<int>& parts) {
    if (parts.size() < 3) throw ParameterError("balanced_split needs at least three parts");
    if (!std::is_sorted(parts.begin(), parts.end())) throw ParameterError("balanced_split needs sorted parts");
    const long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    long long prefix = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        prefix += parts[i - 1];
        const long long small = std::min(prefix, total - prefix);
        const long long large = std::max(prefix, total - prefix);
        if (large <= capped_pow(2, static_cast<int>(std::min<long long>(small, 62)), large)) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

ConstructionReport color_complete_multipartite(const std::vector<int>& parts, int ell) {
    if (parts.size() < 3) throw ParameterError("color_complete_multipartite needs t >= 3 parts");
    if (!std::is_sorted(parts.begin(), parts.end()) || parts.front() < 1) {
        throw ParameterError("color_complete_multipartite needs sorted parts >= 1");
    }
    if (ell < 1) throw ParameterError("ell must be >= 1");
    ConstructionReport report;
    report.graph = complete_multipartite_graph(parts);
    report.theorem = Theorem::complete_multipartite;
    const Graph& g = report.graph;
    const int n_last = parts.back();
    const int m = std::accumulate(parts.begin(), parts.end() - 1, 0);
    const int total = m + n_last;
    std::vector<Color> colors(idx(g.num_edges()), 0);

    // Colors the complete bipartite graph between vertex blocks [0, a) and
    // [a, total) (either side may be the smaller) with the 2-color vectors.
    auto color_split = [&](int a) {
        const bool prefix_small = a <= total - a;
        const int small = prefix_small ? a : total - a;
        const int large = total - small;
        int claimed = 0;
        std::string notes;
        const auto vectors = detail::bipartite_vectors(small, large, 2, claimed, notes);
        if (claimed > 2) throw InvariantError("color_complete_multipartite: split is not 2-colorable");
        for (int i = 0; i < small; ++i) {
            for (int j = 0; j < large; ++j) {
                const Vertex u = prefix_small ? i : a + i;
                const Vertex v = prefix_small ? a + j : j;
                colors[idx(*g.edge_id(u, v))] = vectors[idx(j)][idx(i)];
            }
        }
    };

    if (n_last == 1) {
        report.claimed_colors = 1;
        report.notes = "n=1: complete graph";
    } else if (n_last <= capped_pow(2, m, n_last)) {
        report.claimed_colors = 2;
        if (m <= n_last) {
            color_split(m);
            report.notes = "2<=n<=2^m, m<=n: spanning K_{m,n}";
        } else {
            const auto split = balanced_split(parts);
            if (!split) throw InvariantError("color_complete_multipartite: no balanced split for n < m");
            color_split(std::accumulate(parts.begin(), parts.begin() + *split, 0));
            report.notes = "2<=n<m: balanced split after part " + std::to_string(*split);
        }
    } else {
        report.claimed_colors = 3;
        report.notes = "n>2^m: binary vectors, (1,2,...,2) on the rest, color 3 inside U";
        const auto binary = all_vectors(m, 2);
        std::vector<Color> tail(idx(m), 2);
        tail[0] = 1;
        for (int j = 0; j < n_last; ++j) {
            const auto& vec = j < static_cast<int>(binary.size()) ? binary[idx(j)] : tail;
            for (int i = 0; i < m; ++i) colors[idx(*g.edge_id(i, m + j))] = vec[idx(i)];
        }
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (g.edge(e).v < m) colors[idx(e)] = 3;
        }
    }
    report.coloring = detail::finish_coloring(std::move(colors));
    return report;
}

ConstructionReport color_wheel(int n, int ell) {
    if (n < 3) throw ParameterError("color_wheel needs n >= 3");
    if (ell < 2) throw ParameterError("color_wheel needs ell >= 2");
    ConstructionReport report;
    report.graph = wheel_graph(n);
    report.theorem = Theorem::wheel;
    const Graph& g = report.graph;
    if (n == 3) {
        report.coloring = EdgeColoring(std::vector<Color>(idx(g.num_edges()), 1));
        report.claimed_colors = 1;
        report.notes = "W_3 = K_4";
        return report;
    }
    if (n <= 6) {
        report.coloring = EdgeColoring(small_wheel_coloring(n));
        report.claimed_colors = 2;
        report.notes = "stored 2-coloring";
        return report;
    }
    // Rim vertex u_i is i - 1; rim edge u_i u_{i+1} gets a = i mod 3 in [3];
    // spoke u_i v gets the color outside {a, a - 1}; spoke u_1 v gets 3.
    const Vertex center = n;
    auto cyc3 = [](int x) { return ((x - 1) % 3 + 3) % 3 + 1; };
    std::vector<Color> colors(idx(g.num_edges()), 0);
    for (int i = 1; i <= n; ++i) {
        const Vertex u = i - 1;
        const Vertex w = i % n;
        const Color a = cyc3(i);
        colors[idx(*g.edge_id(u, w))] = a;
        Color spoke = 3;
        if (i != 1) {
            const Color b = cyc3(a - 1);
            spoke = 6 - a - b;
        }
        colors[idx(*g.edge_id(u, center))] = spoke;
    }
    report.coloring = EdgeColoring(std::move(colors));
    report.claimed_colors = 3;
    report.notes = "n>=7: rim i mod 3";
    return report;
}

ConstructionReport color_hypercube(int t, int ell) {
    if (t < 1) throw ParameterError("color_hypercube needs t >= 1");
    if (ell < 2) throw ParameterError("color_hypercube needs ell >= 2");
    ConstructionReport report;
    report.graph = hypercube_graph(t);
    report.theorem = Theorem::hypercube;
    const Graph& g = report.graph;
    const bool by_dimension = t <= 2 || ell >= t;
    std::vector<Color> colors;
    colors.reserve(idx(g.num_edges()));
    for (const Edge& e : g.edges()) {
        int dim = 1;
        while (((e.u ^ e.v) >> (dim - 1)) != 1) ++dim;
        colors.push_back(by_dimension ? dim : (dim - 1) % (ell + 1) + 1);
    }
    report.coloring = EdgeColoring(std::move(colors));
    if (t == 1) {
        report.claimed_colors = 1;
        report.notes = "Q_1 = K_2";
    } else if (t == 2) {
        report.claimed_colors = 2;
        report.notes = "Q_2 = C_4";
    } else if (ell >= t) {
        report.claimed_colors = t;
        report.notes = "ell>=t: color = dimension";
    } else {
        report.claimed_colors = ell + 1;
        report.notes = "ell<t: dimension mod ell+1";
    }
    return report;
}

}  // namespace pcc
