#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcc/graph.hpp"
#include "pcc/structure.hpp"

namespace pcc {

enum class Theorem {
    traceable,
    tree,
    complete_bipartite,
    complete_multipartite,
    wheel,
    hypercube,
    two_connected,
    join,
    cartesian,
    permutation,
};

std::string_view theorem_name(Theorem t);

// Output of a constructor. `graph` is the graph the coloring belongs to
// (built by the constructor for the family-based ones). `claimed_colors` is
// the value or bound the underlying result states for these parameters.
struct ConstructionReport {
    Graph graph{1};
    EdgeColoring coloring;
    int claimed_colors = 0;
    Theorem theorem = Theorem::traceable;
    std::string notes;
};

// Hamiltonian path edges colored 1, 2, ..., ell + 1 cyclically; all other
// edges get color 1. Claimed ell + 1.
ConstructionReport color_traceable(const Graph& g, const std::vector<Vertex>& ham_path, int ell);

// Tree coloring with max_subtree_size_with_diameter(t, ell + 1) colors, which
// equals sigma2'(t) - 1 for ell = 2. Edges are processed by level outward
// from a central edge (ell even) or vertex (ell odd) and take the lowest color
// absent from every colored edge sharing a path of at most ell + 1 edges.
ConstructionReport color_tree(const Graph& t, int ell);

// K_{m,n} with the small side labeled 0..m-1. Vertex j of the large side gets
// a vector; edge (u_i, v_j) takes coordinate i.
ConstructionReport color_complete_bipartite(int m, int n, int ell);

// Smallest i in [1, t-1] whose prefix/suffix split of the sorted parts has
// smaller side m_i and larger side M_i with m_i <= M_i <= 2^{m_i}. Returned
// 1-based, as the split after part i.
std::optional<int> balanced_split(const std::vector<int>& parts);

ConstructionReport color_complete_multipartite(const std::vector<int>& parts, int ell);

// W_n with rim 0..n-1 and center n.
ConstructionReport color_wheel(int n, int ell);

// The stored 2-colorings used by color_wheel for 4 <= n <= 6, in
// wheel_graph(n) edge order.
const std::vector<Color>& small_wheel_coloring(int n);

// Q_t; coordinate i (1-based) is bit i-1 of the vertex index.
ConstructionReport color_hypercube(int t, int ell);

// Two or three length-2 paths x - mid - far sharing the end x.
struct AnchorPath {
    Vertex mid;
    Vertex far;

    friend bool operator==(const AnchorPath&, const AnchorPath&) = default;
};

struct AnchorSet {
    Vertex x = 0;
    std::vector<AnchorPath> paths;
};

struct EarRecord {
    int ear_index = 0;      // 1-based
    bool reversed = false;  // orientation used relative to the decomposition
    int internal_vertices = 0;
    std::string case_tag;   // e.g. "p=1,equal" or "p>=3,distinct"
    int max_anchor_colors = 0;  // max |f(P_x)| over all built vertices after this ear
};

struct TwoConnectedTrace {
    Graph spanning{1};  // the minimally 2-connected spanning subgraph H
    EarDecomposition decomposition;
    std::vector<EarRecord> ears;
    std::vector<AnchorSet> anchors;  // final anchor set per vertex
    int base_max_anchor_colors = 0;
};

// (1,2)-proper connected coloring with at most 5 colors for a 2-connected
// graph, built ear by ear on a minimally 2-connected spanning subgraph.
ConstructionReport color_2connected(const Graph& g, TwoConnectedTrace* trace = nullptr);

// Colors the join: cross edges per color_complete_bipartite, internal edges 1.
ConstructionReport color_join(const Graph& g, const Graph& h);

// Colors the Cartesian product (ell = 2).
ConstructionReport color_cartesian(const Graph& g, const Graph& h);

// Colors the permutation graph of g. `alpha` maps g's vertex i to copy
// vertex alpha(i), as in permutation_graph().
ConstructionReport color_permutation_graph(const Graph& g, const std::vector<Vertex>& ham_path,
                                           const Permutation& alpha, int ell);

}  // namespace pcc
