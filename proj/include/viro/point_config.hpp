#pragma once

// Point configurations in Q^d with exact predicates: moment-curve families,
// normalized simplex volumes, affine spans, and brute-force convex hull
// facet enumeration for simplicial configurations.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/rational.hpp"

namespace viro {

// n points in Q^dim.  Point with label i (1-based, matching facet labels)
// lives at points[i-1].
struct PointConfig {
    long dim = 0;
    std::vector<RatVec> points;

    long size() const { return static_cast<long>(points.size()); }
    const RatVec& point(int label) const { return points.at(static_cast<std::size_t>(label - 1)); }
};

inline PointConfig make_point_config(long dim, std::vector<RatVec> pts) {
    if (dim < 1) throw std::invalid_argument("point configuration needs dim >= 1");
    for (const auto& p : pts) {
        if (static_cast<long>(p.size()) != dim)
            throw std::invalid_argument("point has wrong dimension");
    }
    if (pts.empty()) throw std::invalid_argument("point configuration needs at least one point");
    return PointConfig{dim, std::move(pts)};
}

inline bool is_integral(const PointConfig& P) {
    for (const auto& p : P.points)
        for (const auto& x : p)
            if (den(x) != 1) return false;
    return true;
}

// Points (a_i, a_i^2, ..., a_i^dim) on the moment curve, a_i = i by default.
inline PointConfig moment_points(long n, long dim, const std::vector<Rat>& params = {}) {
    if (n < 1 || dim < 1) throw std::invalid_argument("moment_points needs n >= 1, dim >= 1");
    std::vector<Rat> a = params;
    if (a.empty()) {
        a.resize(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = Rat(i + 1);
    }
    if (static_cast<long>(a.size()) != n)
        throw std::invalid_argument("moment_points: parameter list has wrong length");
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (!(a[i] < a[i + 1]))
            throw std::invalid_argument("moment_points: parameters must be strictly increasing");
    std::vector<RatVec> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        RatVec p(static_cast<std::size_t>(dim));
        Rat pw = 1;
        for (long c = 0; c < dim; ++c) {
            pw *= a[static_cast<std::size_t>(i)];
            p[static_cast<std::size_t>(c)] = pw;
        }
        pts.push_back(std::move(p));
    }
    return PointConfig{dim, std::move(pts)};
}

// Edge matrix of a (dim+1)-subset: rows w_{i2}-w_{i1}, ..., w_{i_{dim+1}}-w_{i1}.
inline RatMatrix edge_matrix(const PointConfig& P, const Facet& simplex) {
    if (static_cast<long>(simplex.size()) != P.dim + 1)
        throw std::invalid_argument("simplex must have dim+1 vertices");
    std::vector<RatVec> rows;
    const RatVec& base = P.point(simplex[0]);
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        RatVec r(static_cast<std::size_t>(P.dim));
        const RatVec& w = P.point(simplex[i]);
        for (long c = 0; c < P.dim; ++c)
            r[static_cast<std::size_t>(c)] = w[static_cast<std::size_t>(c)] - base[static_cast<std::size_t>(c)];
        rows.push_back(std::move(r));
    }
    return from_rows(rows);
}

// Normalized volume dim! * vol of the simplex spanned by a (dim+1)-subset.
inline Rat normalized_volume(const PointConfig& P, const Facet& simplex) {
    Rat d = determinant(edge_matrix(P, simplex));
    return d < 0 ? Rat(-d) : d;
}

inline Rat total_normalized_volume(const PointConfig& P, const SimplicialComplex& K) {
    Rat s = 0;
    for (const auto& f : K.facets) s += normalized_volume(P, f);
    return s;
}

inline bool is_unimodular(const PointConfig& P, const SimplicialComplex& K) {
    for (const auto& f : K.facets)
        if (normalized_volume(P, f) != 1) return false;
    return true;
}

inline bool affinely_independent(const PointConfig& P, const Facet& simplex) {
    return determinant(edge_matrix(P, simplex)) != 0;
}

// Affine functional l(x) = <alpha, x> + beta vanishing on dim affinely
// independent points.  Returns nullopt when the points do not span a
// hyperplane.  The scale/sign of (alpha, beta) is the primitive normalization
// of the kernel generator.
struct AffineFunctional {
    RatVec alpha;
    Rat beta;

    Rat eval(const RatVec& x) const {
        Rat s = beta;
        for (std::size_t i = 0; i < alpha.size(); ++i) s += alpha[i] * x[i];
        return s;
    }
};

inline std::optional<AffineFunctional> hyperplane_through(const PointConfig& P,
                                                          const std::vector<int>& labels) {
    if (static_cast<long>(labels.size()) != P.dim)
        throw std::invalid_argument("hyperplane_through needs exactly dim points");
    // Kernel of the labels x (dim+1) matrix with rows (w_i, 1).
    std::vector<RatVec> rows;
    for (int v : labels) {
        RatVec r = P.point(v);
        r.push_back(Rat(1));
        rows.push_back(std::move(r));
    }
    auto ker = kernel_basis(from_rows(rows));
    if (ker.size() != 1) return std::nullopt;
    RatVec g = ker[0];
    AffineFunctional f;
    f.beta = g.back();
    g.pop_back();
    f.alpha = std::move(g);
    return f;
}

// All facets of conv(points) for a configuration whose hull is simplicial:
// every subset of dim points whose affine span has all remaining points
// strictly on one side.  A supporting hyperplane containing more than dim
// points makes the hull non-simplicial and is reported as an error.
inline std::vector<Facet> hull_facets(const PointConfig& P) {
    const long n = P.size();
    const long d = P.dim;
    if (n < d + 1) throw std::invalid_argument("hull_facets needs at least dim+1 points");
    std::vector<Facet> result;
    // Enumerate d-subsets of {1..n} in lex order.
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
    while (true) {
        auto f = hyperplane_through(P, idx);
        if (f) {
            int pos = 0, neg = 0;
            std::vector<int> extra;
            for (int v = 1; v <= n; ++v) {
                if (std::binary_search(idx.begin(), idx.end(), v)) continue;
                Rat val = f->eval(P.point(v));
                if (val > 0) ++pos;
                else if (val < 0) ++neg;
                else extra.push_back(v);
            }
            bool supporting = (pos == 0 || neg == 0);
            if (supporting && !extra.empty()) {
                std::string msg = "hull is not simplicial: points {";
                for (std::size_t i = 0; i < idx.size(); ++i)
                    msg += (i ? "," : "") + std::to_string(idx[i]);
                for (int v : extra) msg += "," + std::to_string(v);
                msg += "} lie on a common supporting hyperplane";
                throw std::domain_error(msg);
            }
            if (supporting && pos + neg == n - d) result.push_back(idx);
        }
        // next subset
        long i = d - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(n - d + 1 + i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(i)] + static_cast<int>(j - i);
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Boundary complex of a simplicial polytope given by its points.
inline SimplicialComplex hull_complex(const PointConfig& P) {
    return make_complex(static_cast<int>(P.size()), static_cast<int>(P.dim - 1), hull_facets(P));
}

// Barycentric coordinates of x with respect to the dim+1 vertices of an
// affinely independent simplex: solve sum b_l w_{i_l} = x, sum b_l = 1.
inline RatVec barycentric_coordinates(const PointConfig& P, const Facet& simplex, const RatVec& x) {
    const long d = P.dim;
    if (static_cast<long>(simplex.size()) != d + 1)
        throw std::invalid_argument("barycentric_coordinates needs a full simplex");
    std::vector<RatVec> rows;
    for (long r = 0; r < d; ++r) {
        RatVec row(simplex.size());
        for (std::size_t j = 0; j < simplex.size(); ++j)
            row[j] = P.point(simplex[j])[static_cast<std::size_t>(r)];
        rows.push_back(std::move(row));
    }
    rows.push_back(RatVec(simplex.size(), Rat(1)));
    RatVec rhs = x;
    rhs.push_back(Rat(1));
    return solve_unique(from_rows(rows), rhs);
}

inline RatVec barycenter(const PointConfig& P, const Facet& face) {
    RatVec c(static_cast<std::size_t>(P.dim), Rat(0));
    for (int v : face)
        for (long i = 0; i < P.dim; ++i) c[static_cast<std::size_t>(i)] += P.point(v)[static_cast<std::size_t>(i)];
    for (auto& x : c) x /= Rat(static_cast<long>(face.size()));
    return c;
}

}  // namespace viro
