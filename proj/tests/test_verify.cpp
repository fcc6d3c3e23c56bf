#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pcc/construct.hpp"
#include "pcc/errors.hpp"
#include "pcc/families.hpp"
#include "pcc/verify.hpp"

using namespace pcc;

namespace {

bool seq(std::vector<Color> c, int ell) { return is_distance_proper_sequence(c, ell); }

// k internally disjoint proper paths between u and v, by trying every
// k-subset of proper simple paths.
bool oracle_k_connected_pair(const Graph& g, const std::vector<Color>& c, Vertex u, Vertex v, int ell, int k) {
    std::vector<std::vector<Vertex>> proper;
    for (const auto& p : oracle::all_simple_paths(g, u, v)) {
        if (oracle::proper_sequence(oracle::path_colors(g, c, p), ell)) proper.push_back(p);
    }
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == k) return true;
        for (std::size_t i = from; i < proper.size(); ++i) {
            std::set<Vertex> used;
            for (std::size_t j : pick) used.insert(proper[j].begin() + 1, proper[j].end() - 1);
            bool disjoint = true;
            for (std::size_t x = 1; x + 1 < proper[i].size(); ++x) disjoint = disjoint && !used.contains(proper[i][x]);
            // Only one path may be the direct edge.
            if (proper[i].size() == 2) {
                for (std::size_t j : pick) disjoint = disjoint && proper[j].size() != 2;
            }
            if (!disjoint) continue;
            pick.push_back(i);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

bool oracle_k_connected(const Graph& g, const std::vector<Color>& c, int ell, int k) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
            if (!oracle_k_connected_pair(g, c, u, v, ell, k)) return false;
        }
    }
    return true;
}

std::vector<Vertex> cube_dimension_path(int u, int v, int t) {
    std::vector<Vertex> p{u};
    int x = u;
    for (int i = 0; i < t; ++i) {
        if (((x ^ v) >> i) & 1) {
            x ^= 1 << i;
            p.push_back(x);
        }
    }
    return p;
}

}  // namespace

TEST_CASE("window semantics on color sequences") {
    CHECK(seq({1, 2, 1}, 1));
    CHECK_FALSE(seq({1, 2, 1}, 2));
    CHECK(seq({1, 2, 3, 1}, 2));
    CHECK_FALSE(seq({1, 2, 3, 1}, 3));
    for (int ell = 1; ell <= 6; ++ell) CHECK(seq({1}, ell));
    CHECK_FALSE(seq({2, 2}, 1));
    CHECK(seq({}, 1));
    CHECK_THROWS_AS(seq({1, 2}, 0), ParameterError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const int len = 1 + static_cast<int>(rng() % 8);
        const auto c = oracle::random_colors(len, 1 + static_cast<int>(rng() % 4), rng);
        for (int ell = 1; ell <= 4; ++ell) CHECK(seq(c, ell) == oracle::proper_sequence(c, ell));
    }
}

TEST_CASE("is_distance_proper_path checks the path") {
    const Graph p4 = path_graph(4);
    const EdgeColoring c({1, 2, 1});
    CHECK(is_distance_proper_path(p4, c, std::vector<Vertex>{0, 1, 2, 3}, 1));
    CHECK_FALSE(is_distance_proper_path(p4, c, std::vector<Vertex>{0, 1, 2, 3}, 2));
    CHECK(is_distance_proper_path(p4, c, std::vector<Vertex>{3, 2}, 5));
    CHECK_THROWS_AS(is_distance_proper_path(p4, c, std::vector<Vertex>{0, 2}, 1), InputError);
    CHECK_THROWS_AS(is_distance_proper_path(p4, c, std::vector<Vertex>{0, 1, 0}, 1), InputError);
    CHECK_THROWS_AS(is_distance_proper_path(p4, c, std::vector<Vertex>{0}, 1), InputError);
    CHECK_THROWS_AS(is_distance_proper_path(p4, c, std::vector<Vertex>{0, 9}, 1), InputError);
    CHECK_THROWS_AS(is_distance_proper_path(p4, EdgeColoring({1, 2}), std::vector<Vertex>{0, 1}, 1), InputError);
}

TEST_CASE("find_distance_proper_path examples") {
    const Graph k4 = complete_graph(4);
    const EdgeColoring mono(std::vector<Color>(6, 1));
    for (Vertex u = 0; u < 4; ++u) {
        for (Vertex v = 0; v < 4; ++v) {
            if (u == v) continue;
            const auto p = find_distance_proper_path(k4, mono, u, v, 2);
            REQUIRE(p);
            CHECK(*p == std::vector<Vertex>{u, v});
        }
    }
    CHECK_FALSE(find_distance_proper_path(path_graph(4), EdgeColoring({1, 2, 1}), 0, 3, 2));
    CHECK_THROWS_AS(find_distance_proper_path(k4, mono, 1, 1, 2), InputError);

    const auto w7 = color_wheel(7, 2);
    const auto p = find_distance_proper_path(w7.graph, w7.coloring, 0, 3, 2);
    REQUIRE(p);
    CHECK(p->front() == 0);
    CHECK(p->back() == 3);
    CHECK(is_distance_proper_path(w7.graph, w7.coloring, *p, 2));
}

TEST_CASE("verify_coloring examples") {
    for (int n = 2; n <= 7; ++n) {
        const Graph k = complete_graph(n);
        const EdgeColoring ones(std::vector<Color>(oracle::ix(k.num_edges()), 1));
        for (int ell = 1; ell <= 4; ++ell) CHECK(verify_coloring(k, ones, ell).ok());
    }

    const auto bad = verify_coloring(path_graph(4), EdgeColoring({1, 2, 1}), 2);
    CHECK(bad.status == VerifyStatus::failed);
    REQUIRE(bad.failing_pair);
    CHECK(*bad.failing_pair == VertexPair{0, 3});

    const Graph q3 = hypercube_graph(3);
    std::vector<Color> dims;
    for (const Edge& e : q3.edges()) dims.push_back(std::countr_zero(static_cast<unsigned>(e.u ^ e.v)) + 1);
    CHECK(verify_coloring(q3, EdgeColoring(dims), 3).ok());
    // Rainbow shortest paths follow dimension order.
    for (int t = 1; t <= 4; ++t) {
        const Graph q = hypercube_graph(t);
        std::vector<Color> cd;
        for (const Edge& e : q.edges()) cd.push_back(std::countr_zero(static_cast<unsigned>(e.u ^ e.v)) + 1);
        const EdgeColoring col(cd);
        for (Vertex u = 0; u < q.num_vertices(); ++u) {
            for (Vertex v = u + 1; v < q.num_vertices(); ++v) {
                CHECK(is_distance_proper_path(q, col, cube_dimension_path(u, v, t), t));
            }
        }
    }

    CHECK_THROWS_AS(verify_coloring(path_graph(4), EdgeColoring({1, 2}), 2), InputError);
    CHECK_THROWS_AS(verify_coloring(path_graph(4), EdgeColoring({1, 2, 1}), 2, {.k = 0, .time_limit = std::nullopt}), ParameterError);
}

TEST_CASE("certificate witnesses re-verify") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_connected(n, 0.5, rng);
        const auto c = oracle::random_colors(g.num_edges(), 3, rng);
        const int ell = 1 + static_cast<int>(rng() % 3);
        const auto cert = verify_coloring(g, EdgeColoring(c, 3), ell);
        if (cert.ok()) {
            CHECK(cert.witnesses.size() == oracle::ix(n * (n - 1) / 2));
            std::size_t idx = 0;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    const auto& w = cert.witnesses[idx++];
                    CHECK(w.u == u);
                    CHECK(w.v == v);
                    REQUIRE(w.paths.size() == 1);
                    CHECK(w.paths[0].front() == u);
                    CHECK(w.paths[0].back() == v);
                    CHECK(is_distance_proper_path(g, EdgeColoring(c, 3), w.paths[0], ell));
                }
            }
        } else {
            REQUIRE(cert.failing_pair);
            const auto [u, v] = *cert.failing_pair;
            CHECK_FALSE(oracle::has_proper_path(g, c, u, v, ell));
            // Every lexicographically earlier pair is connected.
            for (Vertex a = 0; a < n; ++a) {
                for (Vertex b = a + 1; b < n; ++b) {
                    if (VertexPair{a, b} < VertexPair{u, v}) CHECK(oracle::has_proper_path(g, c, a, b, ell));
                }
            }
        }
    }
}

TEST_CASE("path search agrees with exhaustive path enumeration") {
    std::mt19937_64 rng(7);
    std::vector<Graph> graphs;
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : oracle::all_connected_graphs(n)) graphs.push_back(g);
    }
    for (int i = 0; i < 120; ++i) {
        const int n = 5 + static_cast<int>(rng() % 3);
        graphs.push_back(oracle::random_connected(n, 0.15 + 0.1 * static_cast<double>(rng() % 5), rng));
    }
    for (const Graph& g : graphs) {
        for (int rep = 0; rep < 3; ++rep) {
            const int t = 1 + static_cast<int>(rng() % 3);
            const auto c = oracle::random_colors(g.num_edges(), t, rng);
            const EdgeColoring col(c, t);
            for (int ell = 1; ell <= 3; ++ell) {
                for (Vertex u = 0; u < g.num_vertices(); ++u) {
                    for (Vertex v = 0; v < g.num_vertices(); ++v) {
                        if (u == v) continue;
                        const auto p = find_distance_proper_path(g, col, u, v, ell);
                        CHECK(p.has_value() == oracle::has_proper_path(g, c, u, v, ell));
                        if (p) CHECK(oracle::proper_sequence(oracle::path_colors(g, c, *p), ell));
                    }
                }
                CHECK(verify_coloring(g, col, ell).ok() == oracle::proper_connected(g, c, ell));
            }
        }
    }
}

TEST_CASE("find_all lists every proper path") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_connected(6, 0.4, rng);
        const auto c = oracle::random_colors(g.num_edges(), 3, rng);
        ProperPathSearch search(g, 2);
        std::vector<std::vector<Vertex>> got;
        CHECK(search.find_all(c, 0, 5, got) != SearchOutcome::timed_out);
        std::set<std::vector<Vertex>> expected;
        for (const auto& p : oracle::all_simple_paths(g, 0, 5)) {
            if (oracle::proper_sequence(oracle::path_colors(g, c, p), 2)) expected.insert(p);
        }
        CHECK(std::set<std::vector<Vertex>>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}

TEST_CASE("k >= 2 agrees with exhaustive disjoint-path search") {
    std::mt19937_64 rng(31);
    int positives = 0;
    for (int i = 0; i < 80; ++i) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Graph g = oracle::random_connected(n, 0.7, rng);
        const auto c = oracle::random_colors(g.num_edges(), 1 + static_cast<int>(rng() % 3), rng);
        for (int ell = 1; ell <= 2; ++ell) {
            const auto cert = verify_coloring(g, EdgeColoring(c), ell, {.k = 2, .time_limit = std::nullopt});
            const bool expected = oracle_k_connected(g, c, ell, 2);
            CHECK(cert.ok() == expected);
            positives += expected ? 1 : 0;
            if (!cert.ok()) continue;
            for (const auto& w : cert.witnesses) {
                REQUIRE(w.paths.size() == 2);
                std::set<Vertex> inner(w.paths[0].begin() + 1, w.paths[0].end() - 1);
                for (std::size_t x = 1; x + 1 < w.paths[1].size(); ++x) CHECK_FALSE(inner.contains(w.paths[1][x]));
                for (const auto& p : w.paths) CHECK(is_distance_proper_path(g, EdgeColoring(c), p, ell));
            }
        }
    }
    CHECK(positives > 0);
    const Graph k4 = complete_graph(4);
    CHECK(verify_coloring(k4, EdgeColoring(std::vector<Color>(6, 1)), 2, {.k = 2, .time_limit = std::nullopt}).status == VerifyStatus::failed);
    // Three perfect matchings of K_4 in distinct colors.
    std::vector<Color> matchings;
    for (const Edge& e : k4.edges()) matchings.push_back(e.u == 0 ? e.v : 6 - e.u - e.v);
    CHECK(oracle_k_connected(k4, matchings, 1, 3));
    CHECK(verify_coloring(k4, EdgeColoring(matchings), 1, {.k = 3, .time_limit = std::nullopt}).ok());
}

TEST_CASE("monotone in ell") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 150; ++i) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_connected(n, 0.4, rng);
        const auto c = oracle::random_colors(g.num_edges(), 2 + static_cast<int>(rng() % 3), rng);
        for (int ell = 2; ell <= 4; ++ell) {
            if (verify_coloring(g, EdgeColoring(c), ell).ok()) CHECK(verify_coloring(g, EdgeColoring(c), ell - 1).ok());
        }
    }
}

TEST_CASE("invariant under recoloring by a bijection") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_connected(n, 0.4, rng);
        const int t = 2 + static_cast<int>(rng() % 3);
        const auto c = oracle::random_colors(g.num_edges(), t, rng);
        std::vector<Color> perm(oracle::ix(t));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Color> d;
        for (Color x : c) d.push_back(perm[oracle::ix(x - 1)]);
        const int ell = 1 + static_cast<int>(rng() % 3);
        const auto a = verify_coloring(g, EdgeColoring(c, t), ell);
        const auto b = verify_coloring(g, EdgeColoring(d, t), ell);
        CHECK(a.status == b.status);
        CHECK(a.failing_pair == b.failing_pair);
    }
}

TEST_CASE("extending a valid coloring of a spanning subgraph stays valid") {
    std::mt19937_64 rng(47);
    int tested = 0;
    for (int i = 0; i < 400 && tested < 60; ++i) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Graph g = oracle::random_connected(n, 0.5, rng);
        const Graph h = oracle::random_spanning_subgraph(g, rng);
        const int ell = 1 + static_cast<int>(rng() % 2);
        const auto hc = oracle::random_colors(h.num_edges(), 3, rng);
        if (!verify_coloring(h, EdgeColoring(hc), ell).ok()) continue;
        ++tested;
        std::set<Color> used(hc.begin(), hc.end());
        const std::vector<Color> palette(used.begin(), used.end());
        std::vector<Color> gc;
        for (const Edge& e : g.edges()) {
            const auto id = h.edge_id(e.u, e.v);
            gc.push_back(id ? hc[oracle::ix(*id)] : palette[rng() % palette.size()]);
        }
        CHECK(verify_coloring(g, EdgeColoring(gc), ell).ok());
    }
    CHECK(tested >= 30);
}

TEST_CASE("time limit yields inconclusive, not a verdict") {
    // K_14 with every edge at vertex 0 sharing color 1, all other edges
    // distinct, plus a pendant 0-14 of color 1. No proper path reaches 14
    // from 1, and proving that walks every simple path of K_13.
    std::vector<Edge> edges;
    std::vector<Color> colors;
    Color next = 2;
    for (Vertex u = 0; u < 14; ++u) {
        for (Vertex v = u + 1; v < 14; ++v) {
            edges.push_back({u, v});
            colors.push_back(u == 0 ? 1 : next++);
        }
    }
    edges.push_back({0, 14});
    colors.push_back(1);
    const Graph g(15, edges);
    const auto cert = verify_coloring(g, EdgeColoring(colors), 20,
                                      {.k = 1, .time_limit = std::chrono::duration<double>(0.2)});
    CHECK(cert.status == VerifyStatus::inconclusive);
    REQUIRE(cert.timed_out_pair);
    // The search from 0 tries neighbor 1 first and exhausts K_13 before
    // reaching the direct edge to 14.
    CHECK(*cert.timed_out_pair == VertexPair{0, 14});
    CHECK_FALSE(cert.failing_pair);
}
