#include "pcc/families.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::wheel, "wheel"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::hypercube, "hypercube"},
    {Family::double_star, "double_star"},
    {Family::random_tree, "random_tree"},
    {Family::random_2connected, "random_2connected"},
}};

void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

Graph sorted(int n, std::vector<Edge> edges) {
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
}

// Uniform integer in [lo, hi] with a fixed mapping so seeded output does not
// depend on the standard library's distribution implementation.
int uniform(std::mt19937_64& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& [fam, name] : kFamilyNames) {
        if (fam == f) return name;
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [fam, fam_name] : kFamilyNames) {
        if (fam_name == name) return fam;
    }
    return std::nullopt;
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return sorted(n, std::move(edges));
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs n >= 1 leaves");
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph wheel_graph(int rim) {
    require(rim >= 3, "wheel needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < rim; ++i) {
        edges.push_back({i, (i + 1) % rim});
        edges.push_back({i, rim});
    }
    return sorted(rim + 1, std::move(edges));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int m, int n) {
    require(m >= 1 && n >= 1, "complete_bipartite needs m >= 1 and n >= 1");
    require(m <= n, "complete_bipartite needs m <= n");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i) {
        for (Vertex j = 0; j < n; ++j) edges.push_back({i, m + j});
    }
    return Graph(m + n, std::move(edges));
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
    require(parts.size() >= 2, "complete_multipartite needs at least two parts");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require(parts[p] >= 1, "complete_multipartite part sizes must be >= 1");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

Graph hypercube_graph(int t) {
    require(t >= 1, "hypercube needs t >= 1");
    require(t <= 20, "hypercube dimension too large");
    const int n = 1 << t;
    std::vector<Edge> edges;
    for (Vertex x = 0; x < n; ++x) {
        for (int bit = 0; bit < t; ++bit) {
            const Vertex y = x ^ (1 << bit);
            if (x < y) edges.push_back({x, y});
        }
    }
    return sorted(n, std::move(edges));
}

Graph double_star_graph(int a, int b) {
    require(a >= 1 && b >= 1, "double_star needs a >= 1 and b >= 1");
    std::vector<Edge> edges{{0, 1}};
    Vertex next = 2;
    for (int i = 0; i < a - 1; ++i) edges.push_back({0, next++});
    for (int i = 0; i < b - 1; ++i) edges.push_back({1, next++});
    return Graph(next, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree needs n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph(2, {{0, 1}});
    // Decode a random Pruefer sequence.
    std::mt19937_64 rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& x : code) x = uniform(rng, 0, n - 1);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : code) ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    for (int x : code) {
        Vertex leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
        edges.push_back({leaf, x});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
    }
    Vertex last_a = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (last_a < 0) {
                last_a = v;
            } else {
                edges.push_back({last_a, v});
                break;
            }
        }
    }
    return sorted(n, std::move(edges));
}

Graph random_2connected(int n, int target_edges, std::uint64_t seed) {
    require(n >= 3, "random_2connected needs n >= 3");
    const int max_edges = n * (n - 1) / 2;
    if (target_edges == 0) target_edges = n + n / 2;
    require(target_edges >= n, "random_2connected needs m >= n");
    target_edges = std::min(target_edges, max_edges);

    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(uniform(rng, 0, i))]);
    }
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        present[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
        edges.push_back({a, b});
    };
    for (int i = 0; i < n; ++i) {
        add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]);
    }
    std::vector<Edge> chords;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!present[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) chords.push_back({a, b});
        }
    }
    for (int i = static_cast<int>(chords.size()) - 1; i > 0; --i) {
        std::swap(chords[static_cast<std::size_t>(i)], chords[static_cast<std::size_t>(uniform(rng, 0, i))]);
    }
    for (std::size_t i = 0; static_cast<int>(edges.size()) < target_edges && i < chords.size(); ++i) {
        add(chords[i].u, chords[i].v);
    }
    return sorted(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return sorted(10, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return path_graph(spec.n);
        case Family::cycle: return cycle_graph(spec.n);
        case Family::star: return star_graph(spec.n);
        case Family::wheel: return wheel_graph(spec.n);
        case Family::complete: return complete_graph(spec.n);
        case Family::complete_bipartite: return complete_bipartite_graph(spec.m, spec.n);
        case Family::complete_multipartite: {
            require(std::is_sorted(spec.parts.begin(), spec.parts.end()),
                    "complete_multipartite parts must be sorted ascending");
            return complete_multipartite_graph(spec.parts);
        }
        case Family::hypercube: return hypercube_graph(spec.t);
        case Family::double_star: return double_star_graph(spec.a, spec.b);
        case Family::random_tree: return random_tree(spec.n, spec.seed);
        case Family::random_2connected: return random_2connected(spec.n, spec.m, spec.seed);
    }
    throw ParameterError("unknown family");
}

}  // namespace pcc
