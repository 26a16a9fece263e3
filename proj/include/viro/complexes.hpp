#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace viro {

using Facet = std::vector<int>;  // vertex labels, ascending

// Pure abstract simplicial complex given by its facets. Vertices are labeled
// 1..n; every facet has dim+1 distinct labels; the facet list is kept sorted
// lexicographically with no duplicates.
struct SimplicialComplex {
    int n = 0;
    int dim = 0;
    std::vector<Facet> facets;

    bool operator==(const SimplicialComplex& o) const {
        return n == o.n && dim == o.dim && facets == o.facets;
    }
};

inline SimplicialComplex make_complex(int n, int dim, std::vector<Facet> facets) {
    if (n <= 0 || dim < 0 || dim + 1 > n) throw std::invalid_argument("bad complex parameters");
    if (facets.empty()) throw std::invalid_argument("complex needs at least one facet");
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (static_cast<int>(f.size()) != dim + 1)
            throw std::invalid_argument("facet size differs from dim+1");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 1 || f[i] > n) throw std::invalid_argument("vertex label out of range");
            if (i > 0 && f[i] == f[i - 1]) throw std::invalid_argument("repeated vertex in facet");
        }
    }
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
        throw std::invalid_argument("duplicate facet");
    return SimplicialComplex{n, dim, std::move(facets)};
}

inline Facet facet_complement(int n, const Facet& f) {
    Facet g;
    g.reserve(static_cast<std::size_t>(n) - f.size());
    std::size_t k = 0;
    for (int v = 1; v <= n; ++v) {
        if (k < f.size() && f[k] == v) {
            ++k;
            continue;
        }
        g.push_back(v);
    }
    return g;
}

// Facet-wise set complement within [n]; an involution on pure complexes.
// Note: the resulting facet list is re-sorted, so facet order is not
// preserved; use facet_complement for a positional correspondence.
inline SimplicialComplex complement(const SimplicialComplex& c) {
    const int cdim = c.n - c.dim - 2;
    if (cdim < 0)
        throw std::domain_error("complement undefined: n - dim - 2 = " + std::to_string(cdim));
    std::vector<Facet> out;
    out.reserve(c.facets.size());
    for (const auto& f : c.facets) out.push_back(facet_complement(c.n, f));
    return make_complex(c.n, cdim, std::move(out));
}

// Facets are adjacent when they share exactly dim vertices.
struct FacetGraph {
    int num = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor indices
};

inline int shared_count(const Facet& a, const Facet& b) {
    int cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++cnt;
            ++i;
            ++j;
        } else if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return cnt;
}

inline FacetGraph adjacency_graph(const SimplicialComplex& c) {
    FacetGraph g;
    g.num = static_cast<int>(c.facets.size());
    g.adj.assign(g.num, {});
    for (int i = 0; i < g.num; ++i)
        for (int j = i + 1; j < g.num; ++j)
            if (shared_count(c.facets[i], c.facets[j]) == c.dim) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
    return g;
}

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> side;       // 0/1 per facet when bipartite
    std::vector<int> odd_cycle;  // facet indices of a witness cycle otherwise
};

// BFS layering, components and neighbors scanned in lexicographic facet
// order; a same-layer edge yields the odd-cycle witness via parent chains.
inline BipartiteResult is_bipartite(const FacetGraph& g) {
    BipartiteResult res;
    res.side.assign(g.num, -1);
    std::vector<int> parent(g.num, -1);
    for (int start = 0; start < g.num; ++start) {
        if (res.side[start] != -1) continue;
        res.side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u]) {
                if (res.side[v] == -1) {
                    res.side[v] = 1 - res.side[u];
                    parent[v] = u;
                    q.push(v);
                } else if (res.side[v] == res.side[u]) {
                    std::vector<int> up_u, up_v;
                    for (int x = u; x != -1; x = parent[x]) up_u.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) up_v.push_back(x);
                    std::set<int> anc(up_u.begin(), up_u.end());
                    int lca = -1;
                    for (int x : up_v)
                        if (anc.count(x)) {
                            lca = x;
                            break;
                        }
                    std::vector<int> cycle;
                    for (int x = u; x != lca; x = parent[x]) cycle.push_back(x);
                    cycle.push_back(lca);
                    std::vector<int> tail;
                    for (int x = v; x != lca; x = parent[x]) tail.push_back(x);
                    std::reverse(tail.begin(), tail.end());
                    cycle.insert(cycle.end(), tail.begin(), tail.end());
                    res.bipartite = false;
                    res.odd_cycle = std::move(cycle);
                    res.side.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

using Coloring = std::vector<int>;  // color 1..dim+1 per vertex label 1..n (index v-1)

inline bool coloring_is_proper(const SimplicialComplex& c, const Coloring& col) {
    if (static_cast<int>(col.size()) != c.n) return false;
    for (int v = 0; v < c.n; ++v)
        if (col[v] < 1 || col[v] > c.dim + 1) return false;
    for (const auto& f : c.facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (col[f[i] - 1] == col[f[j] - 1]) return false;
    return true;
}

// Proper (dim+1)-coloring of the 1-skeleton by exhaustive backtracking.
// Palette symmetry is broken by pinning colors 1..dim+1 on the first facet,
// so an empty result certifies that no proper coloring exists.
inline std::optional<Coloring> find_coloring(const SimplicialComplex& c) {
    const int ncolors = c.dim + 1;
    std::vector<std::vector<bool>> adj(c.n + 1, std::vector<bool>(c.n + 1, false));
    for (const auto& f : c.facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                adj[f[i]][f[j]] = adj[f[j]][f[i]] = true;

    Coloring col(c.n, 0);
    const Facet& first = c.facets.front();
    for (int i = 0; i <= c.dim; ++i) col[first[i] - 1] = i + 1;

    std::vector<int> todo;
    for (int v = 1; v <= c.n; ++v)
        if (col[v - 1] == 0) todo.push_back(v);

    auto ok_at = [&](int v) {
        for (int u = 1; u <= c.n; ++u)
            if (adj[v][u] && col[u - 1] == col[v - 1]) return false;
        return true;
    };

    std::size_t pos = 0;
    while (true) {
        if (pos == todo.size()) return col;
        int v = todo[pos];
        int start = col[v - 1] + 1;
        bool advanced = false;
        for (int cc = start; cc <= ncolors; ++cc) {
            col[v - 1] = cc;
            if (ok_at(v)) {
                advanced = true;
                break;
            }
        }
        if (advanced) {
            ++pos;
        } else {
            col[v - 1] = 0;
            if (pos == 0) return std::nullopt;
            --pos;
        }
    }
}

inline std::string facet_to_string(const Facet& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    s += "}";
    return s;
}

}  // namespace viro
