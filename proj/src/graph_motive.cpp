#include "gmot/graph_motive.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "gmot/polymatrix.hpp"

namespace gmot {

WeightBundle unit_weights(const Multigraph& g) {
    WeightBundle wb;
    wb.beta.assign(g.vertex_count, mpq_class(1));
    wb.edge_weights.assign(g.edge_count(), mpq_class(1));
    return wb;
}

WeightBundle resolved_weights(const Multigraph& g, const WeightBundle& wb) {
    WeightBundle out = wb;
    if (static_cast<int>(out.beta.size()) != g.vertex_count)
        throw std::invalid_argument("WeightBundle: need one beta per vertex");
    for (const mpq_class& b : out.beta)
        if (b <= 0)
            throw std::invalid_argument("WeightBundle: beta must be positive");
    if (out.edge_weights.empty())
        out.edge_weights.assign(g.edge_count(), mpq_class(1));
    if (static_cast<int>(out.edge_weights.size()) != g.edge_count())
        throw std::invalid_argument("WeightBundle: need one weight per edge");
    for (const mpq_class& w : out.edge_weights)
        if (w < 0)
            throw std::invalid_argument("WeightBundle: edge weights must be nonnegative");
    return out;
}

namespace {

void require_loopless(const Multigraph& g, const char* who) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e))
            throw std::invalid_argument(std::string(who) + ": graph has loops");
}

void require_connected(const Multigraph& g, const char* who) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) + ": graph is disconnected");
}

std::vector<mpq_class> alphas(const WeightBundle& wb) {
    std::vector<mpq_class> a(wb.beta.size());
    for (size_t v = 0; v < wb.beta.size(); ++v)
        a[v] = wb.beta[v] * wb.beta[v];
    return a;
}

}  // namespace

LaplacianSuite laplacian_suite(const Multigraph& g, const WeightBundle& raw) {
    g.validate();
    require_loopless(g, "laplacian_suite");
    WeightBundle wb = resolved_weights(g, raw);
    int n = g.vertex_count, m = g.edge_count();
    std::vector<mpq_class> alpha = alphas(wb);

    LaplacianSuite s;
    s.w = QMat::diagonal(alpha);
    s.t = QMat::diagonal(wb.edge_weights);
    s.b = QMat(n, m);
    s.l_plain = QMat(n, n);
    s.l_sym = QMat(n, n);
    for (int e = 0; e < m; ++e) {
        int u = g.edges[e].tail, v = g.edges[e].head;
        s.b.at(u, e) = wb.beta[v];
        s.b.at(v, e) = -wb.beta[u];
        s.l_plain.at(u, u) += 1;
        s.l_plain.at(v, v) += 1;
        s.l_plain.at(u, v) -= 1;
        s.l_plain.at(v, u) -= 1;
        mpq_class cross = wb.beta[u] * wb.beta[v] * wb.edge_weights[e];
        s.l_sym.at(u, v) -= cross;
        s.l_sym.at(v, u) -= cross;
        s.l_sym.at(u, u) += alpha[v] * wb.edge_weights[e];
        s.l_sym.at(v, v) += alpha[u] * wb.edge_weights[e];
    }
    s.l_bb = QMat(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            s.l_bb.at(u, v) = s.l_sym.at(u, v) * wb.beta[v] / wb.beta[u];

    // Internal consistency: the factorization and the similarity must hold
    // exactly, and the similar form must have zero row sums.
    if (!(s.l_sym == s.b * s.t * s.b.transpose()))
        throw std::logic_error("laplacian_suite: l_sym != B T B^T");
    for (int u = 0; u < n; ++u) {
        mpq_class row = 0;
        for (int v = 0; v < n; ++v)
            row += s.l_bb.at(u, v);
        if (row != 0)
            throw std::logic_error("laplacian_suite: row sum of similar form is nonzero");
    }
    return s;
}

MPoly psi_tree_sum(const Multigraph& g) {
    g.validate();
    require_connected(g, "psi_tree_sum");
    int m = g.edge_count();
    std::vector<Term> terms;
    for (const EdgeSubset& tree : enumerate_spanning_trees(g)) {
        std::vector<int> exps(m, 1);
        for (int e : tree)
            exps[e] = 0;
        terms.push_back({mpq_class(1), std::move(exps)});
    }
    return MPoly::from_terms(m, std::move(terms));
}

MPoly psi_config_det(const Multigraph& g) {
    g.validate();
    require_connected(g, "psi_config_det");
    return psi_config_det(g, fundamental_cycle_basis(g));
}

MPoly psi_config_det(const Multigraph& g, const CycleBasis& basis) {
    g.validate();
    require_connected(g, "psi_config_det");
    int m = g.edge_count();
    if (basis.edge_count != m)
        throw std::invalid_argument("psi_config_det: basis belongs to a different graph");
    int h = basis.dimension();
    PolyMatrix q(h, h, m);
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            std::vector<Term> terms;
            for (int e = 0; e < m; ++e) {
                int c = basis.cols[i][e] * basis.cols[j][e];
                if (c == 0)
                    continue;
                std::vector<int> exps(m, 0);
                exps[e] = 1;
                terms.push_back({mpq_class(c), std::move(exps)});
            }
            q.at(i, j) = MPoly::from_terms(m, std::move(terms));
            if (j != i)
                q.at(j, i) = q.at(i, j);
        }
    return det_fraction_free(q);
}

namespace {

// (prod_e x_e) * principal cofactor at vertex 0 of the Laplacian with edge
// weight 1/x_e, scaled per vertex by alpha on the diagonal. Row v is cleared
// of denominators by the monomial prod of variables at v, and the surplus is
// divided back out exactly at the end.
MPoly laplacian_cofactor_psi(const Multigraph& g, const std::vector<mpq_class>& alpha,
                             const std::vector<mpq_class>& beta) {
    int n = g.vertex_count, m = g.edge_count();
    std::vector<std::vector<int>> clear_exp(n, std::vector<int>(m, 0));
    for (int e = 0; e < m; ++e) {
        clear_exp[g.edges[e].tail][e] += 1;
        clear_exp[g.edges[e].head][e] += 1;
    }
    std::vector<std::vector<std::vector<Term>>> raw(
        n - 1, std::vector<std::vector<Term>>(n - 1));
    auto deposit = [&](int row, int col, const mpq_class& coeff, int edge) {
        if (row == 0 || col == 0 || coeff == 0)
            return;
        std::vector<int> exps = clear_exp[row];
        exps[edge] -= 1;  // the 1/x_e of this edge's weight
        raw[row - 1][col - 1].push_back({coeff, std::move(exps)});
    };
    for (int e = 0; e < m; ++e) {
        int u = g.edges[e].tail, v = g.edges[e].head;
        deposit(u, u, alpha[v], e);
        deposit(v, v, alpha[u], e);
        deposit(u, v, -beta[u] * beta[v], e);
        deposit(v, u, -beta[u] * beta[v], e);
    }
    PolyMatrix a(n - 1, n - 1, m);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j)
            a.at(i, j) = MPoly::from_terms(m, std::move(raw[i][j]));
    MPoly det = det_fraction_free(a);
    std::vector<int> surplus(m, 0);
    for (int v = 1; v < n; ++v)
        for (int e = 0; e < m; ++e)
            surplus[e] += clear_exp[v][e];
    MPoly all_vars = MPoly::monomial(m, 1, std::vector<int>(m, 1));
    return divide_exact(det * all_vars, MPoly::monomial(m, 1, std::move(surplus)));
}

}  // namespace

MPoly psi_laplacian(const Multigraph& g) {
    g.validate();
    require_connected(g, "psi_laplacian");
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e))
            throw std::invalid_argument(
                "psi_laplacian: graph has loops; use the tree-sum or configuration route");
    std::vector<mpq_class> ones(g.vertex_count, mpq_class(1));
    return laplacian_cofactor_psi(g, ones, ones);
}

mpz_class matrix_tree_count(const Multigraph& g) {
    g.validate();
    if (g.vertex_count == 0)
        return 0;
    QMat l(g.vertex_count, g.vertex_count);
    for (const Edge& e : g.edges) {
        if (e.tail == e.head)
            continue;
        l.at(e.tail, e.tail) += 1;
        l.at(e.head, e.head) += 1;
        l.at(e.tail, e.head) -= 1;
        l.at(e.head, e.tail) -= 1;
    }
    mpq_class d = l.minor_matrix(0, 0).det();
    return d.get_num();  // integer matrix, integer cofactor
}

namespace {

struct TreeAdjacency {
    // neighbor vertex and edge id per tree edge at each vertex
    std::vector<std::vector<std::pair<int, int>>> at;
    explicit TreeAdjacency(int n) : at(n) {}
};

TreeAdjacency adjacency_of(const Multigraph& g, const EdgeSubset& edges) {
    TreeAdjacency adj(g.vertex_count);
    for (int e : edges) {
        adj.at[g.edges[e].tail].push_back({g.edges[e].head, e});
        adj.at[g.edges[e].head].push_back({g.edges[e].tail, e});
    }
    return adj;
}

// Product over the forest edges, oriented toward the component roots, of
// (edge weight) * alpha(parent endpoint).
mpq_class oriented_weight(const Multigraph& g, const TreeAdjacency& adj,
                          const std::vector<int>& roots, const std::vector<mpq_class>& alpha,
                          const std::vector<mpq_class>& edge_weights) {
    mpq_class w = 1;
    std::vector<bool> seen(g.vertex_count, false);
    std::queue<int> bfs;
    for (int r : roots) {
        seen[r] = true;
        bfs.push(r);
    }
    while (!bfs.empty()) {
        int parent = bfs.front();
        bfs.pop();
        for (auto [child, e] : adj.at[parent]) {
            if (seen[child])
                continue;
            seen[child] = true;
            w *= edge_weights[e] * alpha[parent];
            bfs.push(child);
        }
    }
    return w;
}

}  // namespace

RootedTreeWeights rooted_tree_weights(const Multigraph& g, const WeightBundle& raw) {
    g.validate();
    require_connected(g, "rooted_tree_weights");
    require_loopless(g, "rooted_tree_weights");
    WeightBundle wb = resolved_weights(g, raw);
    std::vector<mpq_class> alpha = alphas(wb);
    RootedTreeWeights out;
    out.k_per_root.assign(g.vertex_count, mpq_class(0));
    out.k_total = 0;
    for (const EdgeSubset& tree : enumerate_spanning_trees(g)) {
        TreeAdjacency adj = adjacency_of(g, tree);
        for (int v = 0; v < g.vertex_count; ++v)
            out.k_per_root[v] += oriented_weight(g, adj, {v}, alpha, wb.edge_weights);
    }
    for (const mpq_class& k : out.k_per_root)
        out.k_total += k;
    return out;
}

IdentityReport cofactor_tree_identity(const Multigraph& g, const WeightBundle& wb, int u,
                                      int v) {
    return cofactor_tree_identity(g, wb, u, v, rooted_tree_weights(g, wb));
}

IdentityReport cofactor_tree_identity(const Multigraph& g, const WeightBundle& raw, int u,
                                      int v, const RootedTreeWeights& precomputed) {
    g.validate();
    require_connected(g, "cofactor_tree_identity");
    require_loopless(g, "cofactor_tree_identity");
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
        throw std::invalid_argument("cofactor_tree_identity: vertex out of range");
    WeightBundle wb = resolved_weights(g, raw);
    LaplacianSuite s = laplacian_suite(g, wb);
    IdentityReport rep;
    rep.lhs = s.l_sym.minor_matrix(u, v).det();
    if ((u + v) % 2 != 0)
        rep.lhs = -rep.lhs;
    mpq_class alpha_sum = 0;
    for (const mpq_class& b : wb.beta)
        alpha_sum += b * b;
    rep.rhs = wb.beta[u] * wb.beta[v] / alpha_sum * precomputed.k_total;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

std::vector<ForestCheckRow> forest_charpoly_check(const Multigraph& g,
                                                  const WeightBundle& raw) {
    g.validate();
    require_connected(g, "forest_charpoly_check");
    require_loopless(g, "forest_charpoly_check");
    int n = g.vertex_count;
    if (n > 7)
        throw std::invalid_argument(
            "forest_charpoly_check: exhaustive forest enumeration capped at 7 vertices");
    WeightBundle wb = resolved_weights(g, raw);
    std::vector<mpq_class> alpha = alphas(wb);
    LaplacianSuite suite = laplacian_suite(g, wb);

    PolyMatrix l(n, n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            l.at(i, j) = MPoly::constant(0, suite.l_sym.at(i, j));
    std::vector<MPoly> coeffs = charpoly(l);

    std::vector<mpq_class> forest_sums(n + 1, mpq_class(0));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> roots;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                roots.push_back(v);
        int s = static_cast<int>(roots.size());
        for (const EdgeSubset& forest : enumerate_rooted_forests(g, roots)) {
            TreeAdjacency adj = adjacency_of(g, forest);
            forest_sums[s] += oriented_weight(g, adj, roots, alpha, wb.edge_weights);
        }
    }

    std::vector<ForestCheckRow> rows;
    for (int s = 0; s <= n; ++s) {
        ForestCheckRow row;
        row.s = s;
        row.coefficient = coeffs[s].constant_value();
        row.forest_sum = forest_sums[s];
        row.sign = (n - s) % 2 == 0 ? 1 : -1;
        row.equal = row.coefficient == row.sign * row.forest_sum;
        rows.push_back(row);
    }
    return rows;
}

MPoly weighted_psi(const Multigraph& g, const WeightBundle& raw) {
    g.validate();
    require_connected(g, "weighted_psi");
    require_loopless(g, "weighted_psi");
    WeightBundle wb = resolved_weights(g, raw);
    return laplacian_cofactor_psi(g, alphas(wb), wb.beta);
}

namespace {

bool feasible_power(long q, int m, long cap) {
    long acc = 1;
    for (int i = 0; i < m; ++i) {
        if (acc > cap / q)
            return false;
        acc *= q;
    }
    return acc <= cap;
}

bool prime_long(long q) {
    if (q < 2)
        return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

// Coefficients reduced mod q once, exponents flattened; avoids per-point
// bignum work in the enumeration loop.
struct ReducedTerm {
    long coeff;
    std::vector<std::pair<int, int>> powers;  // (variable, exponent > 0)
};

std::vector<ReducedTerm> reduce_terms(const MPoly& p, long q) {
    std::vector<ReducedTerm> out;
    for (const Term& t : p.terms()) {
        mpz_class den_r = t.coeff.get_den() % q;
        if (den_r == 0)
            throw std::domain_error("count_points: coefficient denominator divisible by q");
        ReducedTerm rt;
        mpz_class num_r = t.coeff.get_num() % q;
        long num = num_r.get_si();
        if (num < 0)
            num += q;
        long den = den_r.get_si();
        if (den < 0)
            den += q;
        long inv = 1;
        for (long ex = q - 2, base = den; ex > 0; ex >>= 1) {
            if (ex & 1)
                inv = inv * base % q;
            base = base * base % q;
        }
        rt.coeff = num * inv % q;
        for (int k = 0; k < p.nvars(); ++k)
            if (t.exps[k] > 0)
                rt.powers.push_back({k, t.exps[k]});
        if (rt.coeff != 0)
            out.push_back(std::move(rt));
    }
    return out;
}

long eval_reduced(const std::vector<ReducedTerm>& terms, const std::vector<long>& point,
                  long q) {
    long acc = 0;
    for (const ReducedTerm& t : terms) {
        long v = t.coeff;
        for (auto [var, exp] : t.powers) {
            long x = point[var];
            if (x == 0) {
                v = 0;
                break;
            }
            for (int r = 0; r < exp; ++r)
                v = v * x % q;
        }
        acc = (acc + v) % q;
    }
    return acc;
}

}  // namespace

PointCountProfile count_points(const Multigraph& g, long q) {
    return count_points(g, q, 10'000'000);
}

PointCountProfile count_points(const Multigraph& g, long q, long max_points) {
    g.validate();
    require_connected(g, "count_points");
    MPoly psi = psi_tree_sum(g);
    int m = g.edge_count();
    if (!prime_long(q))
        throw std::invalid_argument("count_points: q must be a prime");
    if (max_points < 1)
        throw std::invalid_argument("count_points: the enumeration guard must be positive");
    if (!feasible_power(q, m, max_points)) {
        mpz_class cost;
        mpz_ui_pow_ui(cost.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(m));
        throw std::invalid_argument("count_points: q^m = " + cost.get_str() +
                                    " exceeds the enumeration guard of " +
                                    std::to_string(max_points));
    }

    PointCountProfile out;
    out.q = q;
    long qm = 1;
    for (int i = 0; i < m; ++i)
        qm *= q;
    out.ambient = (qm - 1) / (q - 1);

    std::vector<ReducedTerm> terms = reduce_terms(psi, q);
    // Normalized representatives: first nonzero coordinate is 1.
    std::vector<long> point(m, 0);
    for (int first = 0; first < m; ++first) {
        std::fill(point.begin(), point.end(), 0L);
        point[first] = 1;
        for (;;) {
            if (eval_reduced(terms, point, q) == 0)
                out.hypersurface_count += 1;
            int k = m - 1;
            while (k > first && point[k] == q - 1)
                point[k--] = 0;
            if (k == first)
                break;
            point[k] += 1;
        }
    }
    out.complement_count = out.ambient - out.hypersurface_count;
    return out;
}

Multigraph delete_edge(const Multigraph& g, int e) {
    g.validate();
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("delete_edge: edge out of range");
    Multigraph out = g;
    out.edges.erase(out.edges.begin() + e);
    return out;
}

Multigraph contract_edge(const Multigraph& g, int e) {
    g.validate();
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("contract_edge: edge out of range");
    Multigraph out;
    int lo = std::min(g.edges[e].tail, g.edges[e].head);
    int hi = std::max(g.edges[e].tail, g.edges[e].head);
    if (lo == hi) {
        // contracting a loop is deleting it
        return delete_edge(g, e);
    }
    out.vertex_count = g.vertex_count - 1;
    auto remap = [&](int v) { return v == hi ? lo : (v > hi ? v - 1 : v); };
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e)
            continue;
        out.edges.push_back({remap(g.edges[i].tail), remap(g.edges[i].head)});
    }
    return out;
}

bool is_bridge(const Multigraph& g, int e) {
    g.validate();
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("is_bridge: edge out of range");
    if (g.is_loop(e))
        return false;
    return connected_components(delete_edge(g, e)).size() > connected_components(g).size();
}

DeletionContractionReport deletion_contraction_check(const Multigraph& g, int e) {
    g.validate();
    require_connected(g, "deletion_contraction_check");
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("deletion_contraction_check: edge out of range");
    if (g.is_loop(e))
        throw std::invalid_argument("deletion_contraction_check: edge is a loop");
    if (is_bridge(g, e))
        throw std::invalid_argument("deletion_contraction_check: edge is a bridge");
    DeletionContractionReport rep;
    rep.lhs = psi_tree_sum(g);
    MPoly contracted = insert_variable(psi_tree_sum(contract_edge(g, e)), e);
    MPoly deleted = insert_variable(psi_tree_sum(delete_edge(g, e)), e);
    rep.rhs = contracted + MPoly::variable(g.edge_count(), e) * deleted;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace gmot
