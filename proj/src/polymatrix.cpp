#include "gmot/polymatrix.hpp"

#include <stdexcept>
#include <utility>

namespace gmot {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      a_(static_cast<size_t>(rows) * cols, MPoly(nvars)) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("PolyMatrix: negative dimension");
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = MPoly::constant(nvars, 1);
    return m;
}

MPoly det_fraction_free(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_fraction_free: matrix is not square");
    int n = m.rows();
    if (n == 0)
        return MPoly::constant(m.nvars(), 1);
    PolyMatrix w = m;
    int sign = 1;
    MPoly prev = MPoly::constant(m.nvars(), 1);
    for (int k = 0; k < n - 1; ++k) {
        // Full pivoting on the sparsest nonzero entry keeps the Bareiss
        // products small on the near-monomial matrices this engine sees.
        int pi = -1, pj = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                const MPoly& e = w.at(i, j);
                if (e.is_zero())
                    continue;
                if (pi < 0 || e.term_count() < w.at(pi, pj).term_count()) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            return MPoly(m.nvars());
        if (pi != k) {
            for (int j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(pi, j));
            sign = -sign;
        }
        if (pj != k) {
            for (int i = k; i < n; ++i)
                std::swap(w.at(i, k), w.at(i, pj));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = divide_exact(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j),
                                          prev);
        prev = w.at(k, k);
    }
    MPoly det = w.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

namespace {

MPoly det_cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (row == n)
        return MPoly::constant(m.nvars(), 1);
    MPoly acc(m.nvars());
    for (size_t k = 0; k < cols.size(); ++k) {
        const MPoly& e = m.at(row, cols[k]);
        if (e.is_zero())
            continue;
        int c = cols[k];
        cols.erase(cols.begin() + k);
        MPoly sub = e * det_cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + k, c);
        if (k % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

}  // namespace

MPoly det_cofactor_oracle(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_cofactor_oracle: matrix is not square");
    if (m.rows() > 6)
        throw std::invalid_argument("det_cofactor_oracle: dimension capped at 6");
    std::vector<int> cols(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        cols[j] = j;
    return det_cofactor_rec(m, cols, 0);
}

std::vector<MPoly> charpoly(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("charpoly: matrix is not square");
    int n = m.rows();
    int v = m.nvars();
    // lambda is adjoined as the last variable, index v.
    PolyMatrix lifted(n, n, v + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lifted.at(i, j) = -insert_variable(m.at(i, j), v);
    MPoly lambda = MPoly::variable(v + 1, v);
    for (int i = 0; i < n; ++i)
        lifted.at(i, i) += lambda;
    MPoly det = det_fraction_free(lifted);
    std::vector<MPoly> coeffs(n + 1, MPoly(v));
    for (const Term& t : det.terms()) {
        int s = t.exps[v];
        std::vector<int> e(t.exps.begin(), t.exps.begin() + v);
        coeffs[s] += MPoly::monomial(v, t.coeff, std::move(e));
    }
    return coeffs;
}

}  // namespace gmot
