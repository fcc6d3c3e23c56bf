#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

inline constexpr int kUnreachable = -1;

/// BFS distances from `source`; unreachable vertices get kUnreachable.
std::vector<int> distances(const Graph& g, Vertex source);

/// Both throw PreconditionError on disconnected graphs.
int eccentricity(const Graph& g, Vertex v);
int radius(const Graph& g);

/// Largest deg(x) + deg(y) over edges xy. Throws on an edgeless graph.
int sigma2_prime(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_star(const Graph& g);
std::vector<Vertex> articulation_points(const Graph& g);
/// n >= 3, connected, no cut vertex.
bool is_2_connected(const Graph& g);

/// Spanning 2-connected subgraph in which every edge is critical. Edges are
/// tried in ascending (u, v) order and dropped whenever 2-connectivity
/// survives; one pass suffices because dropping edges never makes a
/// previously critical edge removable.
Graph minimally_2connected_spanning(const Graph& g);
bool is_minimally_2connected(const Graph& g);

struct EarDecomposition {
    std::vector<Vertex> base_cycle;         // closing edge back to base_cycle.front() is implied
    std::vector<std::vector<Vertex>> ears;  // each: endpoint, interior..., endpoint
};

/// Ear decomposition built by repeatedly taking a shortest path between two
/// covered vertices through uncovered edges and vertices. Single-edge ears
/// only appear when the input is not minimally 2-connected; if one shows up
/// on minimally 2-connected input an InvariantError is thrown.
EarDecomposition ear_decomposition(const Graph& h);

/// Checks the decomposition rebuilds `h` exactly with open ears. Returns an
/// empty string when valid, else a description of the first problem.
std::string check_ear_decomposition(const Graph& h, const EarDecomposition& d);

/// Backtracking search with a connectivity prune. Intended for n up to ~20.
std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g);
bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path);

struct SubtreeResult {
    int size = 0;                  // edge count
    std::vector<Vertex> vertices;  // ascending, original labels
    Graph subtree{1};              // induced on `vertices`, relabeled in ascending order
};

/// Largest subtree (by edges) of tree `t` whose diameter is at most `d`.
SubtreeResult max_subtree_size_with_diameter(const Graph& t, int d);

/// Distance matrix by repeated BFS.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Graph induced on `vertices`, relabeled to 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace pcc
