#pragma once

#include <vector>

namespace gmot {

struct Edge {
    int tail = 0;
    int head = 0;
};

// Multigraph with dense vertex ids [0, n) and edge ids [0, m) given by list
// position. Loops and parallel edges are allowed. The edge list order is
// canonical: edge e corresponds to the polynomial variable x_e everywhere.
struct Multigraph {
    int vertex_count = 0;
    std::vector<Edge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].tail == edges[e].head; }

    // Throws std::invalid_argument if an endpoint is out of range.
    void validate() const;
};

// Edge subset as a strictly increasing list of edge ids.
using EdgeSubset = std::vector<int>;

// Partition of the vertex set; parts are sorted, ordered by smallest member.
// Loops do not affect connectivity.
std::vector<std::vector<int>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

// All spanning trees as edge subsets, in lexicographic order by edge id.
// Loops are never tree edges. Throws if g is disconnected.
std::vector<EdgeSubset> enumerate_spanning_trees(const Multigraph& g);

// All spanning forests X with |X| = n - |roots| such that every component of
// (V, X) contains exactly one root. Deterministic lexicographic order.
// Throws on an empty or invalid root set.
std::vector<EdgeSubset> enumerate_rooted_forests(const Multigraph& g,
                                                 const std::vector<int>& roots);

// Signed vertex-edge incidence: entry (v, e) is +1 at the head of e and -1 at
// the tail; loops contribute zero.
std::vector<std::vector<int>> incidence_matrix(const Multigraph& g);

// Integral basis of the cycle lattice ker(incidence) in Z^E.
// cols[j][e] is the coefficient of edge e in basis cycle j.
struct CycleBasis {
    int edge_count = 0;
    std::vector<std::vector<int>> cols;

    int dimension() const { return static_cast<int>(cols.size()); }
};

// Fundamental cycle basis for a maximal spanning forest chosen greedily by
// edge id. Each non-forest edge e gives one column: +1 on e plus the signed
// forest path closing the cycle; a loop gives a single +1.
CycleBasis fundamental_cycle_basis(const Multigraph& g);

// Same, but for a caller-supplied maximal spanning forest.
CycleBasis fundamental_cycle_basis(const Multigraph& g, const EdgeSubset& forest);

// Greedy maximal spanning forest (lowest edge ids).
EdgeSubset greedy_spanning_forest(const Multigraph& g);

}  // namespace gmot
