#pragma once

#include <gmpxx.h>

#include <vector>

#include "gmot/mpoly.hpp"
#include "gmot/multigraph.hpp"
#include "gmot/qmatrix.hpp"

namespace gmot {

// Vertex weights are carried as beta_v with alpha_v = beta_v^2, so the
// sqrt(alpha_u alpha_v) entries of the symmetrized Laplacian stay rational.
// Edge weights default to 1 when the vector is empty.
struct WeightBundle {
    std::vector<mpq_class> beta;
    std::vector<mpq_class> edge_weights;
};

// beta = 1 everywhere, edge weights 1.
WeightBundle unit_weights(const Multigraph& g);

// Throws unless beta has one positive entry per vertex and edge_weights is
// empty or has one nonnegative entry per edge. Returns a copy with
// edge_weights filled in.
WeightBundle resolved_weights(const Multigraph& g, const WeightBundle& wb);

// The Laplacian family of one weighted graph:
//   l_plain  unweighted combinatorial Laplacian D - A
//   l_sym    symmetric weighted Laplacian, l_sym = b t b^T
//   l_bb     similar form l_bb(u,v) = l_sym(u,v) beta_v / beta_u,
//            with zero row sums on loopless graphs
//   w        diag(alpha_v), b: n x m with entries +-beta of the opposite
//            endpoint, t: diag(edge weights)
struct LaplacianSuite {
    QMat l_plain;
    QMat l_bb;
    QMat l_sym;
    QMat w;
    QMat b;
    QMat t;
};

LaplacianSuite laplacian_suite(const Multigraph& g, const WeightBundle& wb);

// ---- graph polynomial, three routes --------------------------------------

// Sum over spanning trees of the product of the non-tree variables.
MPoly psi_tree_sum(const Multigraph& g);

// det(C^T diag(x) C) for a cycle basis C; basis-independent.
MPoly psi_config_det(const Multigraph& g);
MPoly psi_config_det(const Multigraph& g, const CycleBasis& basis);

// (prod_e x_e) times a principal cofactor of the Laplacian with edge weight
// 1/x_e. Loop-blind, so loops are rejected.
MPoly psi_laplacian(const Multigraph& g);

// Number of spanning trees via one cofactor of the plain Laplacian; loops
// ignored, zero when disconnected.
mpz_class matrix_tree_count(const Multigraph& g);

// ---- rooted tree and forest weights ---------------------------------------

// w(T_v) = prod over tree edges of (edge weight) * alpha(parent endpoint),
// edges oriented toward the root v.
struct RootedTreeWeights {
    std::vector<mpq_class> k_per_root;
    mpq_class k_total;
};

RootedTreeWeights rooted_tree_weights(const Multigraph& g, const WeightBundle& wb);

struct IdentityReport {
    mpq_class lhs;
    mpq_class rhs;
    bool equal = false;
};

// Signed cofactor (-1)^{u+v} det(l_sym minus row u, column v) against
// beta_u beta_v (sum_z alpha_z)^{-1} k(G).
IdentityReport cofactor_tree_identity(const Multigraph& g, const WeightBundle& wb, int u,
                                      int v);
IdentityReport cofactor_tree_identity(const Multigraph& g, const WeightBundle& wb, int u,
                                      int v, const RootedTreeWeights& precomputed);

// One row per root count s: the coefficient of lambda^s in charpoly(l_sym)
// against the exhaustive rooted-forest weight sum, with the expected sign
// (-1)^{n-s}.
struct ForestCheckRow {
    int s = 0;
    mpq_class coefficient;
    mpq_class forest_sum;
    int sign = 1;
    bool equal = false;
};

std::vector<ForestCheckRow> forest_charpoly_check(const Multigraph& g,
                                                  const WeightBundle& wb);

// (prod_e x_e) times the principal cofactor at vertex 0 of the
// vertex-weighted Laplacian with edge weight 1/x_e; equals
// sum over trees of w(T_0) * prod of non-tree variables.
MPoly weighted_psi(const Multigraph& g, const WeightBundle& wb);

// ---- point counting over F_q ----------------------------------------------

struct PointCountProfile {
    long q = 0;
    long hypersurface_count = 0;
    long complement_count = 0;
    long ambient = 0;
};

// Brute-force count of projective points of the hypersurface psi = 0 in
// P^{m-1}(F_q). Guard: q^m <= 10^7 by default; the overload lets callers
// raise the cap knowingly.
PointCountProfile count_points(const Multigraph& g, long q);
PointCountProfile count_points(const Multigraph& g, long q, long max_points);

// ---- deletion / contraction ------------------------------------------------

Multigraph delete_edge(const Multigraph& g, int e);
// Identifies the endpoints of e (loops formed by parallel edges survive).
Multigraph contract_edge(const Multigraph& g, int e);
bool is_bridge(const Multigraph& g, int e);

struct DeletionContractionReport {
    MPoly lhs;
    MPoly rhs;
    bool equal = false;
};

// psi(g) ?= psi(g/e) + x_e * psi(g minus e), variables aligned to g's edges.
DeletionContractionReport deletion_contraction_check(const Multigraph& g, int e);

}  // namespace gmot
