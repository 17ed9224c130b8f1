#include "gmot/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmot {

namespace {

std::string at_pq(int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

int DoubleComplex::dim_at(int p, int q) const {
    if (p < 0 || q < 0 || p >= width() || q >= height())
        return 0;
    return dims[p][q];
}

namespace {

QMat stored_or_zero(const std::vector<std::vector<QMat>>& grid, int p, int q, int rows,
                    int cols) {
    if (p >= 0 && p < static_cast<int>(grid.size()) && q >= 0 &&
        q < static_cast<int>(grid[p].size())) {
        const QMat& m = grid[p][q];
        if (m.rows() != 0 || m.cols() != 0)
            return m;
    }
    return QMat(rows, cols);
}

}  // namespace

QMat DoubleComplex::horizontal(int p, int q) const {
    return stored_or_zero(d_h, p, q, dim_at(p + 1, q), dim_at(p, q));
}

QMat DoubleComplex::vertical(int p, int q) const {
    return stored_or_zero(d_v, p, q, dim_at(p, q + 1), dim_at(p, q));
}

void DoubleComplex::validate() const {
    int w = width(), h = height();
    for (int p = 0; p < w; ++p) {
        if (static_cast<int>(dims[p].size()) != h)
            throw std::invalid_argument("DoubleComplex: dims grid is not rectangular");
        for (int q = 0; q < h; ++q)
            if (dims[p][q] < 0)
                throw std::invalid_argument("DoubleComplex: negative dimension at " +
                                            at_pq(p, q));
    }
    if (static_cast<int>(d_h.size()) > w || static_cast<int>(d_v.size()) > w)
        throw std::invalid_argument("DoubleComplex: differential grid wider than dims");
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < h; ++q) {
            QMat dh = horizontal(p, q);
            if (dh.rows() != dim_at(p + 1, q) || dh.cols() != dim_at(p, q))
                throw std::invalid_argument("DoubleComplex: horizontal shape at " +
                                            at_pq(p, q));
            QMat dv = vertical(p, q);
            if (dv.rows() != dim_at(p, q + 1) || dv.cols() != dim_at(p, q))
                throw std::invalid_argument("DoubleComplex: vertical shape at " + at_pq(p, q));
        }
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < h; ++q) {
            if (!(horizontal(p + 1, q) * horizontal(p, q)).is_zero())
                throw std::invalid_argument("DoubleComplex: d_h^2 != 0 at " + at_pq(p, q));
            if (!(vertical(p, q + 1) * vertical(p, q)).is_zero())
                throw std::invalid_argument("DoubleComplex: d_v^2 != 0 at " + at_pq(p, q));
            QMat anti = vertical(p + 1, q) * horizontal(p, q) +
                        horizontal(p, q + 1) * vertical(p, q);
            if (!anti.is_zero())
                throw std::invalid_argument("DoubleComplex: d_h d_v + d_v d_h != 0 at " +
                                            at_pq(p, q));
        }
}

std::vector<int> total_cohomology(const DoubleComplex& dc) {
    dc.validate();
    int w = dc.width(), h = dc.height();
    int top = std::max(w + h - 2, 0);
    auto total_dim = [&](int k) {
        int d = 0;
        for (int p = 0; p <= k; ++p)
            d += dc.dim_at(p, k - p);
        return d;
    };
    // Block matrix of d_h + d_v from antidiagonal k to k+1, blocks ordered
    // by increasing p on both sides.
    auto differential = [&](int k) {
        std::vector<int> src_off(k + 2, 0), tgt_off(k + 3, 0);
        for (int p = 0; p <= k; ++p)
            src_off[p + 1] = src_off[p] + dc.dim_at(p, k - p);
        for (int p = 0; p <= k + 1; ++p)
            tgt_off[p + 1] = tgt_off[p] + dc.dim_at(p, k + 1 - p);
        QMat d(tgt_off[k + 2], src_off[k + 1]);
        for (int p = 0; p <= k; ++p) {
            int q = k - p;
            QMat dh = dc.horizontal(p, q);
            for (int i = 0; i < dh.rows(); ++i)
                for (int j = 0; j < dh.cols(); ++j)
                    d.at(tgt_off[p + 1] + i, src_off[p] + j) = dh.at(i, j);
            QMat dv = dc.vertical(p, q);
            for (int i = 0; i < dv.rows(); ++i)
                for (int j = 0; j < dv.cols(); ++j)
                    d.at(tgt_off[p] + i, src_off[p] + j) = dv.at(i, j);
        }
        return d;
    };
    std::vector<int> out(top + 1, 0);
    int prev_rank = 0;
    for (int k = 0; k <= top; ++k) {
        int rank_k = k < top ? differential(k).rank() : 0;
        out[k] = total_dim(k) - rank_k - prev_rank;
        prev_rank = rank_k;
    }
    return out;
}

namespace {

DoubleComplex transposed(const DoubleComplex& dc) {
    DoubleComplex t;
    int w = dc.width(), h = dc.height();
    t.dims.assign(h, std::vector<int>(w, 0));
    t.d_h.assign(h, std::vector<QMat>(w));
    t.d_v.assign(h, std::vector<QMat>(w));
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < h; ++q) {
            t.dims[q][p] = dc.dims[p][q];
            t.d_h[q][p] = dc.vertical(p, q);
            t.d_v[q][p] = dc.horizontal(p, q);
        }
    return t;
}

// Rank of the map induced on vertical-cohomology subquotients by d_h:
// rank([d_h K | B_target]) - rank(B_target), K spanning ker d_v at the
// source, B_target spanning im d_v at the target.
int induced_rank(const QMat& dh, const QMat& kernel, const QMat& b_target) {
    QMat image = dh * kernel;
    QMat stacked = QMat::hconcat(image, b_target);
    return stacked.rank() - b_target.rank();
}

}  // namespace

SpectralPages spectral_sequence(const DoubleComplex& input, Filtration f) {
    DoubleComplex dc = f == Filtration::by_columns ? input : transposed(input);
    dc.validate();
    int w = dc.width(), h = dc.height();

    SpectralPages pages;
    pages.filtration = f;
    pages.e0 = dc.dims;
    pages.e1.assign(w, std::vector<int>(h, 0));
    pages.e2.assign(w, std::vector<int>(h, 0));

    std::vector<std::vector<QMat>> kernels(w, std::vector<QMat>(h));
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < h; ++q) {
            kernels[p][q] = dc.vertical(p, q).kernel_basis();
            pages.e1[p][q] = dc.dim_at(p, q) - dc.vertical(p, q).rank() -
                             dc.vertical(p, q - 1).rank();
        }
    std::vector<std::vector<int>> d1_rank(w, std::vector<int>(h, 0));
    for (int p = 0; p + 1 < w; ++p)
        for (int q = 0; q < h; ++q)
            d1_rank[p][q] =
                induced_rank(dc.horizontal(p, q), kernels[p][q], dc.vertical(p + 1, q - 1));
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < h; ++q) {
            int incoming = p > 0 ? d1_rank[p - 1][q] : 0;
            pages.e2[p][q] = pages.e1[p][q] - d1_rank[p][q] - incoming;
        }

    int top = std::max(w + h - 2, 0);
    pages.e2_totals.assign(top + 1, 0);
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < h; ++q)
            pages.e2_totals[p + q] += pages.e2[p][q];
    pages.total = total_cohomology(input);
    for (int k = 0; k <= top; ++k)
        if (pages.e2_totals[k] != pages.total[k])
            pages.mismatch_degrees.push_back(k);
    pages.degenerates_at_e2 = pages.mismatch_degrees.empty();
    return pages;
}

void StrataData::validate() const {
    for (const auto& row : betti)
        for (int b : row)
            if (b < 0)
                throw std::invalid_argument("StrataData: negative Betti number");
    int strata = static_cast<int>(betti.size());
    if (static_cast<int>(d1.size()) + 1 > strata && !d1.empty())
        throw std::invalid_argument("StrataData: more d1 blocks than strata transitions");
    auto b_of = [&](int k, int q) -> int {  // k is 0-based stratum index
        if (k < 0 || k >= strata || q < 0 || q >= static_cast<int>(betti[k].size()))
            return 0;
        return betti[k][q];
    };
    auto map_of = [&](int k, int q) -> QMat {
        if (k >= 0 && k < static_cast<int>(d1.size()) && q >= 0 &&
            q < static_cast<int>(d1[k].size())) {
            const QMat& m = d1[k][q];
            if (m.rows() != 0 || m.cols() != 0)
                return m;
        }
        return QMat(b_of(k + 1, q), b_of(k, q));
    };
    for (int k = 0; k + 1 < strata; ++k) {
        int qmax = static_cast<int>(betti[k].size());
        for (int q = 0; q < qmax; ++q) {
            QMat m = map_of(k, q);
            if (m.rows() != b_of(k + 1, q) || m.cols() != b_of(k, q))
                throw std::invalid_argument("StrataData: d1 shape mismatch at stratum " +
                                            std::to_string(k + 1) + ", degree " +
                                            std::to_string(q));
            if (!(map_of(k + 1, q) * m).is_zero())
                throw std::invalid_argument("StrataData: d1 d1 != 0 at stratum " +
                                            std::to_string(k + 1) + ", degree " +
                                            std::to_string(q));
        }
    }
}

DoubleComplex strata_to_double_complex(const StrataData& sd) {
    sd.validate();
    int w = static_cast<int>(sd.betti.size());
    int h = 0;
    for (const auto& row : sd.betti)
        h = std::max(h, static_cast<int>(row.size()));
    if (w == 0 || h == 0)
        return DoubleComplex{};
    DoubleComplex dc;
    dc.dims.assign(w, std::vector<int>(h, 0));
    dc.d_h.assign(w, std::vector<QMat>(h));
    dc.d_v.assign(w, std::vector<QMat>(h));
    for (int p = 0; p < w; ++p)
        for (int q = 0; q < static_cast<int>(sd.betti[p].size()); ++q)
            dc.dims[p][q] = sd.betti[p][q];
    for (int p = 0; p + 1 < w; ++p)
        for (int q = 0; q < h; ++q) {
            if (p < static_cast<int>(sd.d1.size()) && q < static_cast<int>(sd.d1[p].size()) &&
                (sd.d1[p][q].rows() != 0 || sd.d1[p][q].cols() != 0))
                dc.d_h[p][q] = sd.d1[p][q];
            else
                dc.d_h[p][q] = QMat(dc.dim_at(p + 1, q), dc.dim_at(p, q));
        }
    dc.validate();
    return dc;
}

NcdBetti ncd_betti(const StrataData& sd) {
    DoubleComplex dc = strata_to_double_complex(sd);
    SpectralPages pages = spectral_sequence(dc, Filtration::by_columns);
    if (!pages.degenerates_at_e2)
        throw std::logic_error("ncd_betti: strata spectral sequence must degenerate");
    NcdBetti out;
    int top = static_cast<int>(pages.e2_totals.size()) - 1;
    out.h = pages.e2_totals;
    out.weight.assign(top + 1, {});
    for (int n = 0; n <= top; ++n) {
        out.weight[n].assign(n + 1, 0);
        for (int wgt = 0; wgt <= n; ++wgt) {
            int p = n - wgt, q = wgt;
            if (p < dc.width() && q < dc.height())
                out.weight[n][wgt] = pages.e2[p][q];
        }
    }
    return out;
}

SteenbrinkEntry steenbrink_e1(const StrataData& sd, int r, int q) {
    sd.validate();
    auto b_of = [&](int stratum, int degree) -> int {  // stratum is 1-based
        int k = stratum - 1;
        if (k < 0 || k >= static_cast<int>(sd.betti.size()) || degree < 0 ||
            degree >= static_cast<int>(sd.betti[k].size()))
            return 0;
        return sd.betti[k][degree];
    };
    SteenbrinkEntry out;
    out.r = r;
    out.q = q;
    int k_top = (q - r) / 2 + 1;  // betti degree q-r-2k < 0 beyond this
    for (int k = std::max(0, -r); k <= std::max(k_top, 0); ++k) {
        SteenbrinkTerm term;
        term.k = k;
        term.betti_degree = q - r - 2 * k;
        term.stratum = 2 * k + r + 1;
        term.dim = b_of(term.stratum, term.betti_degree);
        term.twist = -r - k;
        if (term.betti_degree < 0 || term.stratum < 1)
            continue;
        out.terms.push_back(term);
        out.dim += term.dim;
    }
    return out;
}

void SequenceWindow::validate() const {
    if (dims.size() != maps.size() + 1)
        throw std::invalid_argument("SequenceWindow: need one more space than maps");
    for (int d : dims)
        if (d < 0)
            throw std::invalid_argument("SequenceWindow: negative dimension");
    for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].rows() != dims[i + 1] || maps[i].cols() != dims[i])
            throw std::invalid_argument("SequenceWindow: map " + std::to_string(i) +
                                        " has the wrong shape");
}

ExactnessReport check_exactness(const SequenceWindow& w,
                                const std::vector<std::string>& labels) {
    w.validate();
    ExactnessReport report;
    report.all_exact = true;
    for (size_t i = 1; i + 1 <= w.maps.size(); ++i) {
        ExactnessNode node;
        node.index = static_cast<int>(i);
        if (i < labels.size())
            node.label = labels[i];
        node.dim = w.dims[i];
        node.rank_in = w.maps[i - 1].rank();
        node.rank_out = w.maps[i].rank();
        node.composite_zero = (w.maps[i] * w.maps[i - 1]).is_zero();
        node.exact = node.composite_zero && node.rank_in == node.dim - node.rank_out;
        report.all_exact = report.all_exact && node.exact;
        report.nodes.push_back(node);
    }
    return report;
}

void ClemensSchmidData::validate() const {
    int top = static_cast<int>(degrees.size());
    for (int m = 0; m < top; ++m) {
        const ClemensSchmidDegree& d = degrees[m];
        if (d.dim_homology < 0 || d.dim_h_j0 < 0 || d.dim_h_jt < 0)
            throw std::invalid_argument("ClemensSchmidData: negative dimension at m = " +
                                        std::to_string(m));
        auto shape = [&](const QMat& mat, int rows, int cols, const char* name) {
            if (mat.rows() != rows || mat.cols() != cols)
                throw std::invalid_argument(std::string("ClemensSchmidData: ") + name +
                                            " shape mismatch at m = " + std::to_string(m));
        };
        shape(d.alpha, d.dim_h_j0, d.dim_homology, "alpha");
        shape(d.i_star, d.dim_h_jt, d.dim_h_j0, "i_star");
        shape(d.n_map, d.dim_h_jt, d.dim_h_jt, "N");
        int next_hom = m + 2 < top ? degrees[m + 2].dim_homology : 0;
        shape(d.beta, next_hom, d.dim_h_jt, "beta");
    }
}

ExactnessReport clemens_schmid_check(const ClemensSchmidData& cs) {
    cs.validate();
    ExactnessReport combined;
    combined.all_exact = true;
    int top = static_cast<int>(cs.degrees.size());
    for (int parity = 0; parity < 2 && parity < top; ++parity) {
        SequenceWindow w;
        std::vector<std::string> labels;
        w.dims.push_back(cs.degrees[parity].dim_homology);
        labels.push_back("m=" + std::to_string(parity) + ":H_*(J0)");
        for (int m = parity; m < top; m += 2) {
            const ClemensSchmidDegree& d = cs.degrees[m];
            std::string tag = "m=" + std::to_string(m);
            w.dims.push_back(d.dim_h_j0);
            w.maps.push_back(d.alpha);
            labels.push_back(tag + ":H^m(J0)");
            w.dims.push_back(d.dim_h_jt);
            w.maps.push_back(d.i_star);
            labels.push_back(tag + ":H^m(Jt)");
            w.dims.push_back(d.dim_h_jt);
            w.maps.push_back(d.n_map);
            labels.push_back(tag + ":H^m(Jt) after N");
            int next_hom = m + 2 < top ? cs.degrees[m + 2].dim_homology : 0;
            w.dims.push_back(next_hom);
            w.maps.push_back(d.beta);
            labels.push_back("m=" + std::to_string(m + 2) + ":H_*(J0)");
        }
        ExactnessReport part = check_exactness(w, labels);
        combined.all_exact = combined.all_exact && part.all_exact;
        combined.nodes.insert(combined.nodes.end(), part.nodes.begin(), part.nodes.end());
    }
    return combined;
}

std::vector<int> monodromy_weight_gradeds(const std::vector<int>& gr_k, int m) {
    if (m < 0)
        throw std::invalid_argument("monodromy_weight_gradeds: m must be >= 0");
    if (static_cast<int>(gr_k.size()) != m + 1)
        throw std::invalid_argument(
            "monodromy_weight_gradeds: need Gr_j K for exactly j = 0..m");
    for (int d : gr_k)
        if (d < 0)
            throw std::invalid_argument("monodromy_weight_gradeds: negative dimension");
    std::vector<int> out(2 * m + 1, 0);
    for (int k = 0; k <= m; ++k)
        for (int j = k; j >= 0; j -= 2)
            out[k] += gr_k[j];
    for (int k = m + 1; k <= 2 * m; ++k)
        out[k] = out[2 * m - k];
    return out;
}

FourTermReport graded_four_term_check(const FourTermData& data) {
    if (data.dim0 < 0 || data.dim1 < 0 || data.dim2 < 0 || data.dim3 < 0)
        throw std::invalid_argument("graded_four_term_check: negative dimension");
    if (data.f01.rows() != data.dim1 || data.f01.cols() != data.dim0 ||
        data.f12.rows() != data.dim2 || data.f12.cols() != data.dim1 ||
        data.f23.rows() != data.dim3 || data.f23.cols() != data.dim2)
        throw std::invalid_argument("graded_four_term_check: map shape mismatch");
    FourTermReport rep;
    int r01 = data.f01.rank(), r12 = data.f12.rank(), r23 = data.f23.rank();
    rep.exact_at[0] = r01 == data.dim0;
    rep.exact_at[1] = (data.f12 * data.f01).is_zero() && r01 == data.dim1 - r12;
    rep.exact_at[2] = (data.f23 * data.f12).is_zero() && r12 == data.dim2 - r23;
    rep.exact_at[3] = r23 == data.dim3;
    rep.all_exact = rep.exact_at[0] && rep.exact_at[1] && rep.exact_at[2] && rep.exact_at[3];
    return rep;
}

bool is_isomorphism(const QMat& m) {
    return m.rows() == m.cols() && m.rank() == m.rows();
}

int theta_primitive_rank(int b_theta, int b_j_lower) {
    if (b_theta < 0 || b_j_lower < 0)
        throw std::invalid_argument("theta_primitive_rank: Betti numbers must be >= 0");
    if (b_theta < b_j_lower)
        throw std::invalid_argument(
            "theta_primitive_rank: splitting needs b_{g-1}(Theta) >= b_{g-3}(J)");
    return b_theta - b_j_lower;
}

}  // namespace gmot
