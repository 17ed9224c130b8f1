#pragma once

#include <gmpxx.h>

#include <vector>

namespace gmot {

// Dense matrix over exact rationals. Everything here is plain Gaussian
// elimination; no floating point.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols);  // zero-filled

    static QMat identity(int n);
    static QMat diagonal(const std::vector<mpq_class>& d);
    static QMat from_rows(const std::vector<std::vector<mpq_class>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpq_class& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const mpq_class& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    QMat transpose() const;
    QMat operator*(const QMat& rhs) const;
    QMat operator+(const QMat& rhs) const;
    QMat operator-() const;
    bool operator==(const QMat& rhs) const;

    bool is_zero() const;

    int rank() const;
    // Determinant by exact Gaussian elimination; square matrices only.
    mpq_class det() const;
    // Columns form a basis of the kernel (cols() x nullity).
    QMat kernel_basis() const;

    // Exact inverse; throws on non-square or singular input.
    QMat inverse() const;

    // Copy with row r and column c removed.
    QMat minor_matrix(int r, int c) const;

    // [this | rhs] side by side; row counts must agree.
    static QMat hconcat(const QMat& a, const QMat& b);

private:
    int rows_, cols_;
    std::vector<mpq_class> a_;
};

}  // namespace gmot
