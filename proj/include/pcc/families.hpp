#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

enum class Family {
    path,
    cycle,
    star,
    wheel,
    complete,
    complete_bipartite,
    complete_multipartite,
    hypercube,
    double_star,
    random_tree,
    random_2connected,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Parameters used per family:
//   path, cycle, complete, random_tree: n (vertex count)
//   star: n leaves (K_{1,n})
//   wheel: n rim vertices
//   complete_bipartite: m <= n part sizes
//   complete_multipartite: parts
//   hypercube: t dimensions
//   double_star: a, b center degrees
//   random_2connected: n vertices, m target edge count (0 picks n + n/2)
struct FamilySpec {
    Family family = Family::path;
    int n = 0;
    int m = 0;
    int t = 0;
    int a = 0;
    int b = 0;
    std::vector<int> parts;
    std::uint64_t seed = 0;
};

// Labelings are fixed so colorings reproduce byte for byte:
//   path/cycle: 0-1-...-(n-1) (cycle closes n-1 -- 0)
//   star: center 0, leaves 1..n
//   wheel: rim 0..n-1 in cyclic order, center n
//   complete_bipartite: small side 0..m-1, large side m..m+n-1
//   complete_multipartite: parts laid out consecutively
//   hypercube: vertex index is the bit tuple, coordinate i is bit i-1
//   double_star: centers 0 and 1, then a-1 leaves of 0, then b-1 leaves of 1
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph hypercube_graph(int t);
Graph double_star_graph(int a, int b);
Graph random_tree(int n, std::uint64_t seed);
Graph random_2connected(int n, int target_edges, std::uint64_t seed);
Graph petersen_graph();

}  // namespace pcc
