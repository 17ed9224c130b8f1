#include "gmot/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace gmot {

namespace {

// Union-find without path compression so that unions can be rolled back.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i)
            parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x)
            x = parent_[x];
        return x;
    }

    // Merge the components of a and b; returns false (and records nothing)
    // if they already coincide.
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        if (size_[ra] < size_[rb])
            std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        history_.push_back(rb);
        return true;
    }

    size_t checkpoint() const { return history_.size(); }

    void rollback(size_t mark) {
        while (history_.size() > mark) {
            int rb = history_.back();
            history_.pop_back();
            int ra = parent_[rb];
            size_[ra] -= size_[rb];
            parent_[rb] = rb;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

}  // namespace

void Multigraph::validate() const {
    if (vertex_count < 0)
        throw std::invalid_argument("multigraph: negative vertex count");
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges[e];
        if (ed.tail < 0 || ed.tail >= vertex_count || ed.head < 0 || ed.head >= vertex_count)
            throw std::invalid_argument("multigraph: edge " + std::to_string(e) +
                                        " has an endpoint outside [0, n)");
    }
}

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
    g.validate();
    Dsu dsu(g.vertex_count);
    for (const Edge& e : g.edges)
        if (e.tail != e.head)
            dsu.unite(e.tail, e.head);
    std::vector<std::vector<int>> by_root(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v)
        by_root[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> parts;
    for (auto& part : by_root)
        if (!part.empty())
            parts.push_back(std::move(part));
    return parts;
}

bool is_connected(const Multigraph& g) {
    return connected_components(g).size() == 1;
}

namespace {

void enumerate_acyclic_subsets(const Multigraph& g, int need, Dsu& dsu, bool respect_roots,
                               std::vector<bool>& has_root, EdgeSubset& chosen,
                               int start, std::vector<EdgeSubset>& out) {
    if (static_cast<int>(chosen.size()) == need) {
        out.push_back(chosen);
        return;
    }
    int missing = need - static_cast<int>(chosen.size());
    for (int e = start; e <= g.edge_count() - missing; ++e) {
        if (g.is_loop(e))
            continue;
        int ra = dsu.find(g.edges[e].tail);
        int rb = dsu.find(g.edges[e].head);
        if (ra == rb)
            continue;
        if (respect_roots && has_root[ra] && has_root[rb])
            continue;  // would join two rooted components
        size_t mark = dsu.checkpoint();
        bool a_root = has_root[ra], b_root = has_root[rb];
        dsu.unite(ra, rb);
        has_root[dsu.find(ra)] = a_root || b_root;
        chosen.push_back(e);
        enumerate_acyclic_subsets(g, need, dsu, respect_roots, has_root, chosen, e + 1, out);
        chosen.pop_back();
        has_root[ra] = a_root;
        has_root[rb] = b_root;
        dsu.rollback(mark);
    }
}

}  // namespace

std::vector<EdgeSubset> enumerate_spanning_trees(const Multigraph& g) {
    g.validate();
    if (!is_connected(g))
        throw std::invalid_argument("enumerate_spanning_trees: graph is disconnected");
    Dsu dsu(g.vertex_count);
    std::vector<bool> has_root(g.vertex_count, false);
    EdgeSubset chosen;
    std::vector<EdgeSubset> out;
    enumerate_acyclic_subsets(g, g.vertex_count - 1, dsu, false, has_root, chosen, 0, out);
    return out;
}

std::vector<EdgeSubset> enumerate_rooted_forests(const Multigraph& g,
                                                 const std::vector<int>& roots) {
    g.validate();
    if (roots.empty())
        throw std::invalid_argument("enumerate_rooted_forests: empty root set");
    std::set<int> root_set(roots.begin(), roots.end());
    if (root_set.size() != roots.size())
        throw std::invalid_argument("enumerate_rooted_forests: duplicate roots");
    for (int r : roots)
        if (r < 0 || r >= g.vertex_count)
            throw std::invalid_argument("enumerate_rooted_forests: root out of range");
    int s = static_cast<int>(roots.size());
    Dsu dsu(g.vertex_count);
    std::vector<bool> has_root(g.vertex_count, false);
    for (int r : roots)
        has_root[r] = true;
    EdgeSubset chosen;
    std::vector<EdgeSubset> out;
    enumerate_acyclic_subsets(g, g.vertex_count - s, dsu, true, has_root, chosen, 0, out);
    return out;
}

std::vector<std::vector<int>> incidence_matrix(const Multigraph& g) {
    std::vector<std::vector<int>> d(g.vertex_count, std::vector<int>(g.edge_count(), 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e))
            continue;
        d[g.edges[e].head][e] += 1;
        d[g.edges[e].tail][e] -= 1;
    }
    return d;
}

EdgeSubset greedy_spanning_forest(const Multigraph& g) {
    Dsu dsu(g.vertex_count);
    EdgeSubset forest;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.is_loop(e) && dsu.unite(g.edges[e].tail, g.edges[e].head))
            forest.push_back(e);
    return forest;
}

CycleBasis fundamental_cycle_basis(const Multigraph& g) {
    return fundamental_cycle_basis(g, greedy_spanning_forest(g));
}

CycleBasis fundamental_cycle_basis(const Multigraph& g, const EdgeSubset& forest) {
    g.validate();
    std::vector<bool> in_forest(g.edge_count(), false);
    Dsu dsu(g.vertex_count);
    for (int e : forest) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("cycle basis: forest edge id out of range");
        if (in_forest[e])
            throw std::invalid_argument("cycle basis: repeated forest edge");
        if (g.is_loop(e) || !dsu.unite(g.edges[e].tail, g.edges[e].head))
            throw std::invalid_argument("cycle basis: forest contains a cycle or loop");
        in_forest[e] = true;
    }
    size_t components = connected_components(g).size();
    if (forest.size() != static_cast<size_t>(g.vertex_count) - components)
        throw std::invalid_argument("cycle basis: forest is not maximal");

    // Forest adjacency: vertex -> (neighbor, edge id).
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e : forest) {
        adj[g.edges[e].tail].push_back({g.edges[e].head, e});
        adj[g.edges[e].head].push_back({g.edges[e].tail, e});
    }

    CycleBasis basis;
    basis.edge_count = g.edge_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_forest[e])
            continue;
        std::vector<int> col(g.edge_count(), 0);
        col[e] = 1;
        if (!g.is_loop(e)) {
            // Close the cycle: walk the unique forest path head -> tail.
            int from = g.edges[e].head, to = g.edges[e].tail;
            std::vector<int> prev_vertex(g.vertex_count, -1), prev_edge(g.vertex_count, -1);
            std::queue<int> bfs;
            bfs.push(from);
            prev_vertex[from] = from;
            while (!bfs.empty() && prev_vertex[to] == -1) {
                int v = bfs.front();
                bfs.pop();
                for (auto [w, f] : adj[v])
                    if (prev_vertex[w] == -1) {
                        prev_vertex[w] = v;
                        prev_edge[w] = f;
                        bfs.push(w);
                    }
            }
            for (int v = to; v != from; v = prev_vertex[v]) {
                int f = prev_edge[v];
                // Traversal direction prev_vertex[v] -> v along f.
                col[f] += (g.edges[f].tail == prev_vertex[v]) ? 1 : -1;
            }
        }
        basis.cols.push_back(std::move(col));
    }
    return basis;
}

}  // namespace gmot
