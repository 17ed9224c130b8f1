#pragma once

#include <vector>

#include "gmot/mpoly.hpp"

namespace gmot {

// Rectangular matrix of polynomials sharing one variable count. Rational
// scalars are degree-0 entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars);
    static PolyMatrix identity(int n, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    MPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const MPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const PolyMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int nvars_ = 0;
    std::vector<MPoly> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination with full
// pivoting; every intermediate division is exact. Throws on non-square
// input.
MPoly det_fraction_free(const PolyMatrix& m);

// Determinant by Laplace cofactor expansion. Test oracle only; dimension is
// capped at 6 because of the factorial cost.
MPoly det_cofactor_oracle(const PolyMatrix& m);

// Coefficients c_0..c_n of det(lambda*I - M) = sum c_s lambda^s, each an
// MPoly in the matrix's own variables. Computed by the fraction-free
// determinant over the ring with lambda adjoined.
std::vector<MPoly> charpoly(const PolyMatrix& m);

}  // namespace gmot
