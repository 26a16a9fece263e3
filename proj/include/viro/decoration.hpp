#pragma once

// Positively spanning matrices, positive decorations of simplicial complexes,
// the complement/kernel duality that produces decorations from polytope
// realizations, and the orientation test for adjacent decorated facets.

#include <algorithm>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/point_config.hpp"
#include "viro/rational.hpp"

namespace viro {

struct SpanCheck {
    bool positively_spanning = false;
    std::string reason;
};

// A d x (d+1) matrix positively spans R^d iff its columns span R^d and some
// strictly positive combination of them vanishes.  Two independent routes are
// evaluated and must agree:
//   (a) the signed minors (-1)^i * minor(M, i) are all nonzero of equal sign;
//   (b) the kernel is one-dimensional with a strictly one-signed generator.
inline SpanCheck is_positively_spanning(const RatMatrix& M) {
    if (M.cols != M.rows + 1)
        throw std::invalid_argument("is_positively_spanning expects a d x (d+1) matrix");

    // Route (a): alternating signed minors.
    RatVec sm = signed_minors(M);
    bool minors_ok = true;
    std::string minors_reason;
    int sign = 0;
    for (std::size_t i = 0; i < sm.size(); ++i) {
        int s = sm[i] > 0 ? 1 : (sm[i] < 0 ? -1 : 0);
        if (s == 0) {
            minors_ok = false;
            minors_reason = "signed minor " + std::to_string(i + 1) + " vanishes";
            break;
        }
        if (sign == 0) sign = s;
        else if (s != sign) {
            minors_ok = false;
            minors_reason = "signed minors change sign at column " + std::to_string(i + 1);
            break;
        }
    }

    // Route (b): positive kernel generator.
    auto ker = kernel_basis(M);
    bool kernel_ok = false;
    std::string kernel_reason;
    if (ker.size() != 1) {
        kernel_reason = "kernel has dimension " + std::to_string(ker.size()) + ", matrix is rank-deficient";
    } else {
        const RatVec& g = ker[0];
        bool all_pos = std::all_of(g.begin(), g.end(), [](const Rat& x) { return x > 0; });
        bool all_neg = std::all_of(g.begin(), g.end(), [](const Rat& x) { return x < 0; });
        if (all_pos || all_neg) kernel_ok = true;
        else kernel_reason = "kernel generator changes sign";
    }

    if (minors_ok != kernel_ok)
        throw std::logic_error("positive-spanning routes disagree: minors say " +
                               std::string(minors_ok ? "yes" : "no") + ", kernel says " +
                               std::string(kernel_ok ? "yes" : "no"));

    SpanCheck r;
    r.positively_spanning = minors_ok;
    if (!r.positively_spanning)
        r.reason = minors_reason + (kernel_reason.empty() ? "" : "; " + kernel_reason);
    return r;
}

// Strictly positive primitive kernel generator of a positively spanning
// d x (d+1) matrix.  Throws std::domain_error when the matrix does not
// positively span.
inline RatVec positive_kernel_vector(const RatMatrix& M) {
    auto check = is_positively_spanning(M);
    if (!check.positively_spanning)
        throw std::domain_error("matrix is not positively spanning: " + check.reason);
    RatVec g = kernel_basis(M)[0];
    if (g[0] < 0)
        for (auto& x : g) x = -x;
    return g;
}

inline RatMatrix facet_submatrix(const RatMatrix& C, const Facet& tau) {
    std::vector<int> cols;
    cols.reserve(tau.size());
    for (int v : tau) cols.push_back(v - 1);
    return select_columns(C, cols);
}

struct DecorationCheck {
    bool decorates = false;
    std::vector<char> facet_ok;  // parallel to K.facets
    std::string reason;          // first failure, empty when decorates
};

// C (d x n) positively decorates K iff every facet's column submatrix is
// positively spanning.  K must be an (n, d)-complex for a d x n matrix.
inline DecorationCheck positively_decorates(const RatMatrix& C, const SimplicialComplex& K) {
    if (C.cols != K.n)
        throw std::invalid_argument("matrix has " + std::to_string(C.cols) +
                                    " columns but complex has " + std::to_string(K.n) + " vertices");
    if (C.rows != K.dim)
        throw std::invalid_argument("matrix has " + std::to_string(C.rows) +
                                    " rows but facets have " + std::to_string(K.dim + 1) +
                                    " vertices; facet blocks must be d x (d+1)");
    DecorationCheck out;
    out.decorates = true;
    out.facet_ok.assign(K.facets.size(), 1);
    for (std::size_t i = 0; i < K.facets.size(); ++i) {
        auto check = is_positively_spanning(facet_submatrix(C, K.facets[i]));
        if (!check.positively_spanning) {
            out.facet_ok[i] = 0;
            if (out.decorates) {
                out.decorates = false;
                out.reason = "facet " + facet_to_string(K.facets[i]) + ": " + check.reason;
            }
        }
    }
    return out;
}

inline int decorated_facet_count(const RatMatrix& C, const SimplicialComplex& K) {
    if (C.cols != K.n || C.rows != K.dim)
        throw std::invalid_argument("matrix shape does not match complex");
    int count = 0;
    for (const auto& f : K.facets)
        if (is_positively_spanning(facet_submatrix(C, f)).positively_spanning) ++count;
    return count;
}

// Decoration of a balanced complex from a proper (d+1)-coloring: column v is
// e_{gamma(v)} for colors 1..d and (-1,...,-1) for color d+1.
inline RatMatrix decoration_from_coloring(const SimplicialComplex& K, const Coloring& gamma) {
    if (!coloring_is_proper(K, gamma))
        throw std::domain_error("coloring is not a proper (dim+1)-coloring of the complex");
    const long d = K.dim;
    RatMatrix C(d, K.n);
    for (int v = 1; v <= K.n; ++v) {
        int c = gamma[static_cast<std::size_t>(v - 1)];
        if (c <= d) {
            C(c - 1, v - 1) = 1;
        } else {
            for (long r = 0; r < d; ++r) C(r, v - 1) = -1;
        }
    }
    return C;
}

// Gale transform of a point configuration affinely spanning Q^a: rows of the
// result form a basis of the kernel of the (a+1) x n matrix [1; coords].
// The result is (n-a-1) x n.  Throws when the points do not affinely span.
inline RatMatrix gale_transform(const PointConfig& P) {
    const long n = P.size();
    std::vector<RatVec> rows;
    rows.push_back(RatVec(static_cast<std::size_t>(n), Rat(1)));
    for (long r = 0; r < P.dim; ++r) {
        RatVec row(static_cast<std::size_t>(n));
        for (long j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = P.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
        rows.push_back(std::move(row));
    }
    RatMatrix At = from_rows(rows);
    if (rank(At) != P.dim + 1)
        throw std::domain_error("points do not affinely span the ambient space");
    auto ker = kernel_basis(At);
    std::vector<RatVec> crows(ker.begin(), ker.end());
    return from_rows(crows);
}

// Supporting-functional witness that the point set {w_i : i in phi} is the
// vertex set of a facet of conv(P): returns u with u_i = l(w_i) for an affine
// functional l that vanishes exactly on phi and is strictly positive on the
// rest.  Returns nullopt when phi is not a facet of the hull.
inline std::optional<RatVec> facet_support_check(const PointConfig& P, const Facet& phi) {
    if (static_cast<long>(phi.size()) != P.dim) return std::nullopt;
    auto f = hyperplane_through(P, phi);
    if (!f) return std::nullopt;
    RatVec u(static_cast<std::size_t>(P.size()));
    int pos = 0, neg = 0;
    for (int v = 1; v <= P.size(); ++v) {
        Rat val = f->eval(P.point(v));
        if (val > 0) ++pos;
        else if (val < 0) ++neg;
        else if (!std::binary_search(phi.begin(), phi.end(), v)) return std::nullopt;
        u[static_cast<std::size_t>(v - 1)] = val;
    }
    if (pos > 0 && neg > 0) return std::nullopt;
    if (neg > 0)
        for (auto& x : u) x = -x;
    return u;
}

struct ComplementDecoration {
    RatMatrix C;                   // (n - a - 1) x n, positively decorates K
    std::vector<RatVec> support;   // per facet of K: supporting functional values for the complement facet
};

// Build a positive decoration of K from a realization of its complement
// complex as a subcomplex of the boundary of a simplicial polytope.
// Q holds n points in Q^a where a = n - dim(K) - 2; facet tau of K is
// positively decorated by the kernel matrix of [1; Q] exactly when the
// complement of tau is a facet of conv(Q).  Both sides of the equivalence are
// checked facet by facet; any mismatch is an internal error.
inline ComplementDecoration decorate_via_complement(const SimplicialComplex& K, const PointConfig& Q) {
    if (Q.size() != K.n)
        throw std::invalid_argument("realization must have one point per vertex of the complex");
    if (Q.dim != K.n - K.dim - 1)
        throw std::invalid_argument("realization lives in dimension " + std::to_string(Q.dim) +
                                    " but complement facets have " + std::to_string(K.n - K.dim - 1) +
                                    " vertices, so the polytope must have that dimension");
    RatMatrix C = gale_transform(Q);
    ComplementDecoration out{std::move(C), {}};
    for (std::size_t i = 0; i < K.facets.size(); ++i) {
        auto u = facet_support_check(Q, facet_complement(K.n, K.facets[i]));
        bool spanning = is_positively_spanning(facet_submatrix(out.C, K.facets[i])).positively_spanning;
        if (!u)
            throw std::domain_error("complement of facet " + facet_to_string(K.facets[i]) +
                                    " is not a facet of the realization's convex hull");
        if (!spanning)
            throw std::logic_error("duality violation: complement facet supported but submatrix not positively spanning");
        out.support.push_back(std::move(*u));
    }
    return out;
}

// Canonical-orientation comparison for all adjacent facet pairs of a
// positively decorated complex: with common columns first and the odd vertex
// last, the (d+1) x (d+1) determinants (columns extended by a row of ones)
// must have the same sign for every adjacent pair.  Returns true when they
// all do.
inline bool orientation_inconsistency(const RatMatrix& C, const SimplicialComplex& K) {
    auto dec = positively_decorates(C, K);
    if (!dec.decorates)
        throw std::domain_error("orientation test needs a positive decoration: " + dec.reason);
    const long d = C.rows;
    FacetGraph G = adjacency_graph(K);
    auto oriented_det = [&](const Facet& tau, const Facet& other) {
        std::vector<int> common, odd;
        std::set_intersection(tau.begin(), tau.end(), other.begin(), other.end(), std::back_inserter(common));
        std::set_difference(tau.begin(), tau.end(), other.begin(), other.end(), std::back_inserter(odd));
        std::vector<int> order = common;
        order.insert(order.end(), odd.begin(), odd.end());
        RatMatrix M(d + 1, d + 1);
        for (long j = 0; j <= d; ++j) {
            for (long r = 0; r < d; ++r) M(r, j) = C(r, order[static_cast<std::size_t>(j)] - 1);
            M(d, j) = 1;
        }
        return determinant(M);
    };
    for (int i = 0; i < G.num; ++i) {
        for (int j : G.adj[static_cast<std::size_t>(i)]) {
            if (j <= i) continue;
            Rat a = oriented_det(K.facets[static_cast<std::size_t>(i)], K.facets[static_cast<std::size_t>(j)]);
            Rat b = oriented_det(K.facets[static_cast<std::size_t>(j)], K.facets[static_cast<std::size_t>(i)]);
            if (a == 0 || b == 0)
                throw std::logic_error("decorated facet has degenerate orientation determinant");
            if ((a > 0) != (b > 0)) return false;
        }
    }
    return true;
}

}  // namespace viro
