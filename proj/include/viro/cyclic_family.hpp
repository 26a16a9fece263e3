#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "viro/complexes.hpp"

namespace viro {

// A facet of an even-dimensional cyclic polytope boundary, encoded by the
// left endpoints i_1 < ... < i_k of its vertex pairs {i_j, i_j + 1 mod n}.
using PairSequence = std::vector<int>;

inline Facet facet_from_pairs(const PairSequence& seq, int n) {
    Facet f;
    for (int i : seq) {
        if (i < n) {
            f.push_back(i);
            f.push_back(i + 1);
        } else {
            f.push_back(n);
            f.push_back(1);
        }
    }
    std::sort(f.begin(), f.end());
    return f;
}

namespace detail {

// All stable pair sequences: gaps of at least 2, and the wraparound pair
// (n,1) forbids i_1 = 1. The wraparound constraint is applied last.
inline std::vector<PairSequence> stable_pair_sequences(int n, int k) {
    std::vector<PairSequence> out;
    PairSequence cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            if (!(cur.back() == n && cur.front() == 1)) out.push_back(cur);
            return;
        }
        const int remaining = k - static_cast<int>(cur.size());
        for (int i = next; i + 2 * (remaining - 1) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 2);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace detail

inline std::vector<PairSequence> cyclic_pair_sequences(int n, int k) {
    if (k < 1 || n <= 2 * k) throw std::domain_error("cyclic boundary needs n > 2k >= 2");
    return detail::stable_pair_sequences(n, k);
}

// Boundary complex of the cyclic polytope C(n, 2k): dimension 2k-1, and
// binom(n-k-1, k-1) + binom(n-k, k) facets.
inline SimplicialComplex cyclic_boundary_facets(int n, int k) {
    auto seqs = cyclic_pair_sequences(n, k);
    std::vector<Facet> facets;
    facets.reserve(seqs.size());
    for (const auto& s : seqs) facets.push_back(facet_from_pairs(s, n));
    return make_complex(n, 2 * k - 1, std::move(facets));
}

// Pair sequences selected from the boundary of C(2m, 2k): consecutive pairs
// are allowed only at odd left endpoints, including across the wraparound.
inline bool s_sequence_admissible(const PairSequence& s, int m) {
    const int k = static_cast<int>(s.size());
    for (int j = 0; j + 1 < k; ++j)
        if (s[j] % 2 == 0 && s[j + 1] - s[j] <= 2) return false;
    if (k >= 1 && s.front() == 2 && s.back() == 2 * m) return false;
    return true;
}

inline std::vector<PairSequence> s_pair_sequences(int m, int k) {
    if (k < 1 || k >= m) throw std::domain_error("s_complex needs 1 <= k < m");
    std::vector<PairSequence> out;
    for (auto& s : cyclic_pair_sequences(2 * m, k))
        if (s_sequence_admissible(s, m)) out.push_back(std::move(s));
    return out;
}

// The subcomplex S of the boundary of C(2m, 2k); it has corona_count(m-k, k)
// facets and a bipartite adjacency graph split by the parity of sum(i_j).
inline SimplicialComplex s_complex(int m, int k) {
    std::vector<Facet> facets;
    for (const auto& s : s_pair_sequences(m, k)) facets.push_back(facet_from_pairs(s, 2 * m));
    return make_complex(2 * m, 2 * k - 1, std::move(facets));
}

// Deletion of vertex 2m: facets avoiding it, on labels 1..2m-1.
inline SimplicialComplex s_deletion(int m, int k) {
    auto s = s_complex(m, k);
    std::vector<Facet> kept;
    for (const auto& f : s.facets)
        if (!std::binary_search(f.begin(), f.end(), 2 * m)) kept.push_back(f);
    if (kept.empty()) throw std::domain_error("empty deletion");
    return make_complex(2 * m - 1, s.dim, std::move(kept));
}

// Link of vertex 2m: facets through it with the vertex removed.
inline SimplicialComplex s_link(int m, int k) {
    auto s = s_complex(m, k);
    std::vector<Facet> kept;
    for (const auto& f : s.facets)
        if (std::binary_search(f.begin(), f.end(), 2 * m)) {
            Facet g;
            for (int v : f)
                if (v != 2 * m) g.push_back(v);
            kept.push_back(std::move(g));
        }
    if (kept.empty()) throw std::domain_error("empty link");
    return make_complex(2 * m - 1, s.dim - 1, std::move(kept));
}

// Vertex relabeling swapping 2i-1 and 2i for every i.
inline SimplicialComplex relabel_swap(const SimplicialComplex& c) {
    if (c.n % 2 != 0) throw std::domain_error("relabel_swap needs an even vertex count");
    auto sigma = [](int v) { return (v % 2 == 1) ? v + 1 : v - 1; };
    std::vector<Facet> facets;
    facets.reserve(c.facets.size());
    for (const auto& f : c.facets) {
        Facet g;
        g.reserve(f.size());
        for (int v : f) g.push_back(sigma(v));
        facets.push_back(std::move(g));
    }
    return make_complex(c.n, c.dim, std::move(facets));
}

// Graphs whose k-edge matchings are counted by Delannoy and corona numbers.
// Spine vertices carry odd labels 1,3,...,2M-1 (M = h+k); the spike at spine
// position r is the edge {2r-1, 2r}. The corona closes the spine into a cycle.
struct MatchGraph {
    int nverts = 0;
    std::vector<std::pair<int, int>> edges;
};

inline MatchGraph comb_graph(int h, int k) {
    if (h < 0 || k < 0) throw std::domain_error("comb_graph needs h, k >= 0");
    const int M = h + k;
    MatchGraph g;
    g.nverts = 2 * M;
    for (int r = 1; r <= M; ++r) g.edges.emplace_back(2 * r - 1, 2 * r);
    for (int r = 1; r + 1 <= M; ++r) g.edges.emplace_back(2 * r - 1, 2 * r + 1);
    return g;
}

// The corona keeps one spine arc per position r = 1..M, so for M = 2 the two
// arcs between the spine vertices are parallel edges and both count.
inline MatchGraph corona_graph(int h, int k) {
    if (h < 0 || k < 0) throw std::domain_error("corona_graph needs h, k >= 0");
    const int M = h + k;
    MatchGraph g;
    g.nverts = 2 * M;
    for (int r = 1; r <= M; ++r) g.edges.emplace_back(2 * r - 1, 2 * r);
    for (int r = 1; r <= M && M >= 2; ++r) {
        const int next = (r % M) + 1;
        g.edges.emplace_back(2 * r - 1, 2 * next - 1);
    }
    return g;
}

// The S facets of a pair (m, k) correspond to k-edge matchings of the corona
// on m spine vertices: odd left endpoint 2r-1 is the spike at r, even left
// endpoint 2r is the spine arc from r to r+1 (mod m). Edges are returned as
// (tag, r) with tag 0 for spikes and 1 for spine arcs, so parallel arcs of
// the m = 2 corona stay distinct.
inline std::vector<std::pair<int, int>> matching_from_sequence(const PairSequence& s) {
    std::vector<std::pair<int, int>> edges;
    for (int i : s) {
        if (i % 2 == 1)
            edges.emplace_back(0, (i + 1) / 2);
        else
            edges.emplace_back(1, i / 2);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::pair<int, int> arc_endpoints(std::pair<int, int> tagged, int m) {
    const auto [tag, r] = tagged;
    if (tag == 0) return {2 * r - 1, 2 * r};
    const int next = (r % m) + 1;
    return {std::min(2 * r - 1, 2 * next - 1), std::max(2 * r - 1, 2 * next - 1)};
}

}  // namespace viro
