#pragma once

#include <string>
#include <vector>

#include "gmot/qmatrix.hpp"

namespace gmot {

// Bounded first-quadrant double complex of rational vector spaces, given by
// dimensions and exact differential matrices. Anticommuting convention:
// d_h d_v + d_v d_h = 0, so d_h + d_v squares to zero on the total complex.
//
// dims[p][q] is the dimension at horizontal position p, vertical position q.
// d_h[p][q]: (p,q) -> (p+1,q), a dims[p+1][q] x dims[p][q] matrix.
// d_v[p][q]: (p,q) -> (p,q+1), a dims[p][q+1] x dims[p][q] matrix.
// Missing trailing differentials are treated as zero maps.
struct DoubleComplex {
    std::vector<std::vector<int>> dims;
    std::vector<std::vector<QMat>> d_h;
    std::vector<std::vector<QMat>> d_v;

    int width() const { return static_cast<int>(dims.size()); }
    int height() const { return dims.empty() ? 0 : static_cast<int>(dims[0].size()); }
    int dim_at(int p, int q) const;
    QMat horizontal(int p, int q) const;  // zero-filled when absent
    QMat vertical(int p, int q) const;

    // Rectangular shape, matrix sizes, d_h^2 = d_v^2 = 0, anticommuting.
    // Violations name the offending (p,q).
    void validate() const;
};

// Cohomology dimensions of the total complex (antidiagonal sums, d_h + d_v),
// one entry per total degree 0 .. width+height-2.
std::vector<int> total_cohomology(const DoubleComplex& dc);

// Which filtration drives the pages: by_columns is F^p (horizontal index),
// by_rows is the transposed run.
enum class Filtration { by_columns, by_rows };

struct SpectralPages {
    Filtration filtration = Filtration::by_columns;
    std::vector<std::vector<int>> e0, e1, e2;  // dims per (p,q)
    std::vector<int> e2_totals;                // antidiagonal sums of e2
    std::vector<int> total;                    // total_cohomology
    bool degenerates_at_e2 = false;            // e2_totals == total
    std::vector<int> mismatch_degrees;         // where the two disagree
};

SpectralPages spectral_sequence(const DoubleComplex& dc,
                                Filtration f = Filtration::by_columns);

// Betti data of the strata of a normal crossing divisor: betti[k-1][q] is
// b_q of the k-fold intersection locus D^(k), and d1[k-1][q] is the
// alternating restriction map H^q(D^(k)) -> H^q(D^(k+1)).
struct StrataData {
    std::vector<std::vector<int>> betti;
    std::vector<std::vector<QMat>> d1;

    void validate() const;  // shapes match betti, consecutive d1 compose to zero
};

// The strata spread out as a double complex: column p carries H^q(D^(p+1))
// with d_h = d1 and no vertical differentials.
DoubleComplex strata_to_double_complex(const StrataData& sd);

// H^n(D) with its weight split: weight w of H^n is the E2 term at
// (p,q) = (n-w, w) of the strata spectral sequence.
struct NcdBetti {
    std::vector<int> h;
    std::vector<std::vector<int>> weight;  // weight[n][w]
};

NcdBetti ncd_betti(const StrataData& sd);

// One summand of the Steenbrink E1 entry: b_{q-r-2k}(D^(2k+r+1)) carrying
// Tate twist -r-k.
struct SteenbrinkTerm {
    int k = 0;
    int betti_degree = 0;
    int stratum = 0;  // the (2k+r+1)-fold intersections
    int dim = 0;
    int twist = 0;
};

struct SteenbrinkEntry {
    int r = 0;
    int q = 0;
    int dim = 0;
    std::vector<SteenbrinkTerm> terms;
};

// dim E1^{-r, q+r} = sum over k >= max(0,-r) of b_{q-r-2k}(D^(2k+r+1)),
// out-of-range Betti numbers read as zero.
SteenbrinkEntry steenbrink_e1(const StrataData& sd, int r, int q);

// A finite run of composable linear maps; spaces are dims[0..n], maps[i]
// sends space i to space i+1.
struct SequenceWindow {
    std::vector<int> dims;
    std::vector<QMat> maps;

    void validate() const;
};

struct ExactnessNode {
    int index = 0;  // position in the window, 1..n-1
    std::string label;
    int dim = 0;
    int rank_in = 0;
    int rank_out = 0;
    bool composite_zero = false;
    bool exact = false;
};

struct ExactnessReport {
    std::vector<ExactnessNode> nodes;
    bool all_exact = false;
};

// Exactness (im = ker, by rank) at every inner node.
ExactnessReport check_exactness(const SequenceWindow& w,
                                const std::vector<std::string>& labels = {});

// Per cohomological degree m: the spaces and maps of the segment
//   H_{2n+2-m}(J0) --alpha--> H^m(J0) --i*--> H^m(Jt) --N--> H^m(Jt) --beta-->
// with beta landing in the next segment's homology space H_{2n-m}(J0).
struct ClemensSchmidDegree {
    int dim_homology = 0;  // H_{2n+2-m}(J0)
    int dim_h_j0 = 0;      // H^m(J0)
    int dim_h_jt = 0;      // H^m(Jt)
    QMat alpha;
    QMat i_star;
    QMat n_map;
    QMat beta;  // rows = next segment's dim_homology, or 0 at the end
};

struct ClemensSchmidData {
    std::vector<ClemensSchmidDegree> degrees;  // index = m

    void validate() const;
};

// Chains the segments of each parity (m, m+2, ...) into one window and
// checks exactness at every inner node.
ExactnessReport clemens_schmid_check(const ClemensSchmidData& cs);

// The monodromy weight gradeds of H^m(Jt) from the gradeds of K = ker N.
// The source formula's printed index list is internally inconsistent; this
// operation implements the literal descending-by-2 reading
//   Gr_k^W = sum_{i >= 0} Gr_{k-2i} K   (k <= m),
// and the stated reflection Gr_k^W = Gr_{2m-k}^W for k > m. gr_k[j] supplies
// Gr_j K for 0 <= j <= m. Output is indexed k = 0..2m.
std::vector<int> monodromy_weight_gradeds(const std::vector<int>& gr_k, int m);

// 0 -> V0 -> V1 -> V2 -> V3 -> 0 exactness at all four positions.
struct FourTermData {
    int dim0 = 0, dim1 = 0, dim2 = 0, dim3 = 0;
    QMat f01, f12, f23;
};

struct FourTermReport {
    bool exact_at[4] = {false, false, false, false};
    bool all_exact = false;
};

FourTermReport graded_four_term_check(const FourTermData& data);

// Bijectivity by rank (used for the induced Gr H^m(J0) -> Gr K comparison).
bool is_isomorphism(const QMat& m);

// rank P = b_{g-1}(Theta) - b_{g-3}(J) under the splitting
// H^{g-1}(Theta) = P + Theta . H^{g-3}(J).
int theta_primitive_rank(int b_theta, int b_j_lower);

}  // namespace gmot
