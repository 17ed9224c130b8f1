#include "gmot/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace gmot {

QMat::QMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("QMat: negative dimensions");
    a_.resize(static_cast<size_t>(rows) * cols, mpq_class(0));
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMat QMat::diagonal(const std::vector<mpq_class>& d) {
    QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        m.at(i, i) = d[i];
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("QMat::from_rows: ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("QMat: dimension mismatch in product");
    QMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& aik = at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

QMat QMat::operator+(const QMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("QMat: dimension mismatch in sum");
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

QMat QMat::operator-() const {
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = -a_[i];
    return out;
}

bool QMat::operator==(const QMat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

namespace {

// Row echelon pass; returns pivot columns. Mutates `m` in place.
std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0)
                continue;
            mpq_class f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int QMat::rank() const {
    QMat m(*this);
    return static_cast<int>(echelon(m).size());
}

mpq_class QMat::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("QMat::det: matrix is not square");
    QMat m(*this);
    mpq_class acc = 1;
    for (int k = 0; k < rows_; ++k) {
        int pivot = -1;
        for (int i = k; i < rows_; ++i)
            if (m.at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != k) {
            for (int j = k; j < cols_; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            acc = -acc;
        }
        acc *= m.at(k, k);
        mpq_class inv = 1 / m.at(k, k);
        for (int i = k + 1; i < rows_; ++i) {
            mpq_class f = m.at(i, k) * inv;
            if (f == 0)
                continue;
            for (int j = k; j < cols_; ++j)
                m.at(i, j) -= f * m.at(k, j);
        }
    }
    return acc;
}

QMat QMat::inverse() const {
    if (rows_ != cols_)
        throw std::invalid_argument("QMat::inverse: matrix is not square");
    QMat work = hconcat(*this, identity(rows_));
    std::vector<int> pivots = echelon(work);
    if (static_cast<int>(pivots.size()) != rows_)
        throw std::invalid_argument("QMat::inverse: matrix is singular");
    for (int r = rows_ - 1; r >= 0; --r) {
        mpq_class inv = 1 / work.at(r, r);
        for (int j = r; j < work.cols(); ++j)
            work.at(r, j) *= inv;
        for (int i = 0; i < r; ++i) {
            mpq_class f = work.at(i, r);
            if (f == 0)
                continue;
            for (int j = r; j < work.cols(); ++j)
                work.at(i, j) -= f * work.at(r, j);
        }
    }
    QMat out(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j)
            out.at(i, j) = work.at(i, cols_ + j);
    return out;
}

QMat QMat::minor_matrix(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::invalid_argument("QMat::minor_matrix: index out of range");
    QMat out(rows_ - 1, cols_ - 1);
    for (int i = 0; i < rows_ - 1; ++i)
        for (int j = 0; j < cols_ - 1; ++j)
            out.at(i, j) = at(i < r ? i : i + 1, j < c ? j : j + 1);
    return out;
}

QMat QMat::kernel_basis() const {
    QMat m(*this);
    std::vector<int> pivots = echelon(m);
    // Back-substitute to reduced echelon form.
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        int c = pivots[r];
        mpq_class inv = 1 / m.at(r, c);
        for (int j = c; j < cols_; ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < r; ++i) {
            mpq_class f = m.at(i, c);
            if (f == 0)
                continue;
            for (int j = c; j < cols_; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots)
        is_pivot[c] = true;
    int nullity = cols_ - static_cast<int>(pivots.size());
    QMat basis(cols_, nullity);
    int col = 0;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        basis.at(free, col) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], col) = -m.at(static_cast<int>(r), free);
        ++col;
    }
    return basis;
}

QMat QMat::hconcat(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("QMat::hconcat: row mismatch");
    QMat out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j)
            out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

}  // namespace gmot
