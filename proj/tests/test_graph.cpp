#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "pcc/errors.hpp"
#include "pcc/families.hpp"
#include "pcc/graph.hpp"
#include "pcc/io.hpp"
#include "pcc/structure.hpp"

using namespace pcc;

TEST_CASE("graph normalizes endpoints and keeps insertion order") {
    const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.edge(0) == Edge{1, 2});
    CHECK(g.edge(1) == Edge{0, 3});
    CHECK(g.edge(2) == Edge{0, 1});
    CHECK(g.edge_id(2, 1) == 0);
    CHECK(g.edge_id(1, 2) == 0);
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.degree(0) == 2);
    REQUIRE(g.neighbors(0).size() == 2);
    CHECK(g.neighbors(0)[0].vertex == 1);
    CHECK(g.neighbors(0)[1].vertex == 3);
}

TEST_CASE("graph rejects malformed input") {
    CHECK_THROWS_AS(Graph(0), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
}

TEST_CASE("edge subgraph and edge removal") {
    const Graph c4 = cycle_graph(4);
    const Graph p4 = c4.without_edge(*c4.edge_id(0, 3));
    CHECK(p4.num_edges() == 3);
    CHECK(is_tree(p4));
    const std::vector<EdgeId> keep{0, 1};
    CHECK(c4.edge_subgraph(keep).num_edges() == 2);
}

TEST_CASE("edge coloring validation and canonical form") {
    CHECK_THROWS_AS(EdgeColoring({1, 0}, 2), ParameterError);
    CHECK_THROWS_AS(EdgeColoring({1, 3}, 2), ParameterError);
    const EdgeColoring c({3, 3, 1, 5}, 5);
    CHECK(c.num_colors() == 5);
    CHECK(c.distinct_colors() == 3);
    const EdgeColoring canon = c.canonical();
    CHECK(canon.colors() == std::vector<Color>{1, 1, 2, 3});
    CHECK(canon.num_colors() == 3);
    CHECK(EdgeColoring(std::vector<Color>{2, 4}).num_colors() == 4);
}

TEST_CASE("permutations") {
    const std::vector<int> one_based{2, 4, 1, 3};
    const Permutation p = Permutation::from_one_based(one_based);
    CHECK(p.size() == 4);
    CHECK(p(0) == 1);
    CHECK(p(3) == 2);
    const Permutation inv = p.inverse();
    for (int i = 0; i < 4; ++i) CHECK(inv(p(i)) == i);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), ParameterError);
    CHECK_THROWS_AS(Permutation::from_one_based(std::vector<int>{0, 1}), ParameterError);
    CHECK(Permutation::identity(3).image() == std::vector<int>{0, 1, 2});
}

TEST_CASE("family generators: sizes") {
    CHECK(hypercube_graph(3).num_vertices() == 8);
    CHECK(hypercube_graph(3).num_edges() == 12);
    CHECK(wheel_graph(5).num_vertices() == 6);
    CHECK(wheel_graph(5).num_edges() == 10);
    CHECK(complete_bipartite_graph(2, 3).num_vertices() == 5);
    CHECK(complete_bipartite_graph(2, 3).num_edges() == 6);
    CHECK(complete_multipartite_graph({1, 2, 3}).num_edges() == 2 + 3 + 6);
    CHECK(double_star_graph(3, 4).num_vertices() == 7);
    CHECK(petersen_graph().num_edges() == 15);
    CHECK(star_graph(4).num_edges() == 4);
    CHECK(complete_graph(5).num_edges() == 10);
}

TEST_CASE("family generators: documented labelings") {
    const Graph w = wheel_graph(5);
    for (Vertex i = 0; i < 5; ++i) {
        CHECK(w.has_edge(i, (i + 1) % 5));
        CHECK(w.has_edge(i, 5));
    }
    const Graph q = hypercube_graph(3);
    for (const Edge& e : q.edges()) CHECK(std::popcount(static_cast<unsigned>(e.u ^ e.v)) == 1);
    const Graph ds = double_star_graph(3, 2);
    CHECK(ds.has_edge(0, 1));
    CHECK(ds.degree(0) == 3);
    CHECK(ds.degree(1) == 2);
    const Graph kb = complete_bipartite_graph(2, 3);
    for (Vertex u = 0; u < 2; ++u) {
        for (Vertex v = 2; v < 5; ++v) CHECK(kb.has_edge(u, v));
    }
}

TEST_CASE("family generators reject bad parameters") {
    CHECK_THROWS_AS(wheel_graph(2), ParameterError);
    CHECK_THROWS_AS(hypercube_graph(0), ParameterError);
    CHECK_THROWS_AS(double_star_graph(0, 1), ParameterError);
    CHECK_THROWS_AS(complete_bipartite_graph(3, 2), ParameterError);
    CHECK_THROWS_AS(complete_multipartite_graph({2, 0}), ParameterError);
    CHECK_THROWS_AS(cycle_graph(2), ParameterError);
    FamilySpec spec;
    spec.family = Family::wheel;
    spec.n = 1;
    CHECK_THROWS_AS(generate(spec), ParameterError);
    spec.family = Family::complete_multipartite;
    spec.parts = {3, 1, 2};
    CHECK_THROWS_AS(generate(spec), ParameterError);
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::path, Family::cycle, Family::star, Family::wheel, Family::complete,
                     Family::complete_bipartite, Family::complete_multipartite, Family::hypercube,
                     Family::double_star, Family::random_tree, Family::random_2connected}) {
        CHECK(parse_family(family_name(f)) == f);
    }
    CHECK_FALSE(parse_family("petersen_prism").has_value());
}

TEST_CASE("generated graphs are connected and seeded generators are deterministic") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_tree(9, seed);
        CHECK(is_tree(t));
        CHECK(t == random_tree(9, seed));
        const Graph g = random_2connected(8, 12, seed);
        CHECK(is_2_connected(g));
        CHECK(g.num_edges() == 12);
        CHECK(g == random_2connected(8, 12, seed));
    }
    for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(3), wheel_graph(4), complete_graph(4),
                           complete_bipartite_graph(2, 5), complete_multipartite_graph({1, 2, 2}),
                           hypercube_graph(4), double_star_graph(2, 3)}) {
        CHECK(is_connected(g));
    }
}

TEST_CASE("join") {
    const Graph k4 = join(path_graph(2), path_graph(2));
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    CHECK(is_complete(k4));
    CHECK(join(path_graph(3), path_graph(3)).num_edges() == 13);
    // K_1 joined with C_4 is the wheel W_4 with the hub first.
    const Graph w = join(Graph(1), cycle_graph(4));
    CHECK(w.num_edges() == wheel_graph(4).num_edges());
    CHECK(w.degree(0) == 4);
    for (Vertex v = 1; v <= 4; ++v) CHECK(w.degree(v) == 3);
}

TEST_CASE("cartesian product") {
    const Graph c4 = cartesian_product(path_graph(2), path_graph(2));
    CHECK(c4.num_edges() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(cartesian_product(path_graph(2), path_graph(3)).num_edges() == 7);
    const Graph k33 = cartesian_product(complete_graph(3), complete_graph(3));
    CHECK(k33.num_vertices() == 9);
    CHECK(k33.num_edges() == 18);
}

TEST_CASE("permutation graph") {
    const Graph c4 = permutation_graph(path_graph(2), Permutation::identity(2));
    CHECK(c4.num_edges() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    const std::vector<int> alpha{2, 4, 1, 3};
    const Graph p = permutation_graph(path_graph(4), Permutation::from_one_based(alpha));
    CHECK(p.num_vertices() == 8);
    CHECK(p.num_edges() == 10);
    CHECK(p.has_edge(0, 4 + 1));
    CHECK(p.has_edge(3, 4 + 2));
    const Graph prism = permutation_graph(cycle_graph(5), Permutation::identity(5));
    CHECK(prism.num_vertices() == 10);
    CHECK(prism.num_edges() == 15);
    CHECK_THROWS_AS(permutation_graph(path_graph(3), Permutation::identity(4)), ParameterError);
}

TEST_CASE("operation edge-count formulas on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_connected(1 + static_cast<int>(rng() % 6), 0.4, rng);
        const Graph h = oracle::random_connected(1 + static_cast<int>(rng() % 6), 0.4, rng);
        const int ng = g.num_vertices();
        const int nh = h.num_vertices();
        CHECK(join(g, h).num_edges() == g.num_edges() + h.num_edges() + ng * nh);
        CHECK(cartesian_product(g, h).num_edges() == ng * h.num_edges() + nh * g.num_edges());
        std::vector<int> image(oracle::ix(ng));
        for (int i = 0; i < ng; ++i) image[oracle::ix(i)] = i;
        std::shuffle(image.begin(), image.end(), rng);
        CHECK(permutation_graph(g, Permutation(image)).num_edges() == 2 * g.num_edges() + ng);
    }
}

TEST_CASE("edge-list text format") {
    const Graph p3 = read_graph("3 2\n0 1\n1 2");
    CHECK(p3 == path_graph(3));
    CHECK(write_graph(path_graph(3)) == "3 2\n0 1\n1 2");
    CHECK(read_graph("3 2\n0 1\n1 2\n") == p3);
    CHECK(read_graph("3 2\r\n0 1\r\n1 2\r\n") == p3);
    CHECK(read_graph("1 0") == Graph(1));
}

TEST_CASE("edge-list parse errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            read_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("x 1\n0 1") == 1);
    CHECK(line_of("3 2\n0 1") == 3);
    CHECK(line_of("3 1\n0 5") == 2);
    CHECK(line_of("3 2\n0 1\n0 1") == 3);
    CHECK(line_of("3 1\n1 0") == 2);
    CHECK(line_of("3 1\n0 1 7") == 2);
    CHECK(line_of("3 1\n0 1\n1 2") == 3);
}

TEST_CASE("coloring text format") {
    const Graph p3 = path_graph(3);
    const EdgeColoring c = read_coloring("0 1 1\n1 2 2", p3);
    CHECK(c.num_colors() == 2);
    CHECK(c.colors() == std::vector<Color>{1, 2});
    CHECK(write_coloring(p3, c) == "0 1 1\n1 2 2");

    auto line_of = [&](const char* text) -> std::size_t {
        try {
            read_coloring(text, p3);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1 1") == 2);          // uncolored edge
    CHECK(line_of("0 1 1\n0 2 1") == 2);   // not the graph's edge
    CHECK(line_of("0 1 0\n1 2 1") == 1);   // color below 1
    CHECK(line_of("0 1 1\n1 2 1\n0 2 1") == 3);
}

TEST_CASE("round trip on random graphs and colorings") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 50);
        const Graph g = oracle::random_connected(n, 0.1, rng);
        CHECK(read_graph(write_graph(g)) == g);
        if (g.num_edges() == 0) continue;
        const EdgeColoring c(oracle::random_colors(g.num_edges(), 6, rng));
        CHECK(read_coloring(write_coloring(g, c), g).colors() == c.colors());
    }
}
