#pragma once

// Shared fixtures: small named graphs, exhaustive and random multigraph
// corpora, and integer-lattice helpers used by cycle-basis checks.

#include <gmpxx.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "gmot/multigraph.hpp"

namespace gmot::testing {

inline Multigraph make_graph(int n, std::vector<std::pair<int, int>> pairs) {
    Multigraph g;
    g.vertex_count = n;
    for (auto [a, b] : pairs)
        g.edges.push_back({a, b});
    g.validate();
    return g;
}

inline Multigraph triangle() {
    return make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
}

inline Multigraph k4() {
    return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Two vertices joined by k parallel edges.
inline Multigraph banana(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        pairs.push_back({0, 1});
    return make_graph(2, pairs);
}

inline Multigraph path(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i)
        pairs.push_back({i, i + 1});
    return make_graph(n, pairs);
}

inline Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        pairs.push_back({i, (i + 1) % n});
    return make_graph(n, pairs);
}

// Every connected multigraph (labeled, loops and parallel edges allowed)
// with at most max_edges edges: edge multisets over unordered vertex pairs,
// one graph per multiset, vertices 0..n-1 for each feasible n.
inline std::vector<Multigraph> connected_multigraph_corpus(int max_edges) {
    std::vector<Multigraph> out;
    for (int m = 0; m <= max_edges; ++m) {
        for (int n = 1; n <= m + 1; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b)
                    pairs.push_back({a, b});
            std::vector<int> pick;  // nondecreasing pair indices
            auto rec = [&](auto&& self, int start, int left) -> void {
                if (left == 0) {
                    Multigraph g;
                    g.vertex_count = n;
                    for (int idx : pick)
                        g.edges.push_back({pairs[idx].first, pairs[idx].second});
                    if (is_connected(g))
                        out.push_back(std::move(g));
                    return;
                }
                for (int idx = start; idx < static_cast<int>(pairs.size()); ++idx) {
                    pick.push_back(idx);
                    self(self, idx, left - 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0, m);
        }
    }
    return out;
}

inline Multigraph random_connected_multigraph(std::mt19937& rng, int max_vertices,
                                              int max_edges) {
    for (;;) {
        int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        int lo = std::max(0, n - 1);
        if (lo > max_edges)
            continue;
        int m = std::uniform_int_distribution<int>(lo, max_edges)(rng);
        Multigraph g;
        g.vertex_count = n;
        std::uniform_int_distribution<int> v(0, n - 1);
        for (int e = 0; e < m; ++e)
            g.edges.push_back({v(rng), v(rng)});
        if (is_connected(g))
            return g;
    }
}

inline mpq_class random_rational(std::mt19937& rng, int num_abs, int den_max) {
    std::uniform_int_distribution<int> num(-num_abs, num_abs);
    std::uniform_int_distribution<int> den(1, den_max);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline mpq_class random_nonzero_rational(std::mt19937& rng, int num_abs, int den_max) {
    for (;;) {
        mpq_class q = random_rational(rng, num_abs, den_max);
        if (q != 0)
            return q;
    }
}

// ---- integer matrix helpers -------------------------------------------

using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    ZMat out(r, std::vector<mpz_class>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < c; ++j)
                    out[i][j] += a[i][t] * b[t][j];
    return out;
}

inline bool zmat_is_zero(const ZMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

inline mpz_class zmat_det(const ZMat& a) {
    size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    mpz_class acc = 0;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        ZMat minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<mpz_class> row;
            for (size_t t = 0; t < n; ++t)
                if (t != j)
                    row.push_back(a[i][t]);
            minor.push_back(std::move(row));
        }
        mpz_class sub = a[0][j] * zmat_det(minor);
        if (j % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

// The product of all Smith invariant factors of an integer matrix with full
// column rank k equals the gcd of its k x k minors; it is 1 exactly when
// every invariant factor is 1, i.e. the columns span a primitive sublattice.
inline bool columns_are_primitive_lattice_basis(const ZMat& c) {
    size_t rows = c.size();
    size_t k = rows == 0 ? 0 : c[0].size();
    if (k == 0)
        return true;
    if (rows < k)
        return false;
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    mpz_class g = 0;
    // iterate over all k-subsets of rows
    for (;;) {
        ZMat minor(k, std::vector<mpz_class>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                minor[i][j] = c[idx[i]][j];
        mpz_class d = zmat_det(minor);
        g = gcd(g, d);
        if (g == 1)
            return true;
        // next combination
        size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + rows - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return g == 1;
        }
    }
}

inline ZMat to_zmat(const std::vector<std::vector<int>>& a) {
    ZMat out;
    for (const auto& row : a) {
        std::vector<mpz_class> r;
        for (int x : row)
            r.emplace_back(x);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace gmot::testing
