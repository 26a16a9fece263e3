#pragma once

// Sparse polynomial systems f_i(X) = sum_j C_ij t^{nu_j} X^{w_j} built from a
// support, a coefficient matrix, a lifting, and a deformation parameter t.
// For small t > 0 the number of positive solutions is bounded below by the
// number of facets of the lower-hull triangulation of nu that the coefficient
// matrix positively decorates.

#include <stdexcept>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/decoration.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/point_config.hpp"
#include "viro/rational.hpp"
#include "viro/regularity.hpp"

namespace viro {

struct ViroSystem {
    PointConfig support;  // n exponent vectors w_j in Q^d (rows: one point per monomial)
    RatMatrix coeffs;     // d x n matrix C
    Lifting nu;           // n lifting heights
    Rat t;                // deformation parameter, 0 < t

    long dim() const { return support.dim; }
    long monomials() const { return support.size(); }
};

inline ViroSystem build_viro_system(PointConfig support, RatMatrix coeffs, Lifting nu, Rat t) {
    const long d = support.dim;
    const long n = support.size();
    if (coeffs.rows != d)
        throw std::invalid_argument("coefficient matrix needs one row per variable (" +
                                    std::to_string(d) + ")");
    if (coeffs.cols != n)
        throw std::invalid_argument("coefficient matrix needs one column per support point (" +
                                    std::to_string(n) + ")");
    if (static_cast<long>(nu.size()) != n)
        throw std::invalid_argument("lifting needs one height per support point");
    if (!(t > 0)) throw std::invalid_argument("deformation parameter t must be positive");
    if (n < d + 1) throw std::invalid_argument("need at least dim+1 support points");
    return ViroSystem{std::move(support), std::move(coeffs), std::move(nu), std::move(t)};
}

// The triangulation certified by the system's lifting.
inline SimplicialComplex system_triangulation(const ViroSystem& S) {
    return lower_hull_triangulation(S.support, S.nu);
}

// Number of lower-hull facets whose coefficient submatrix positively spans:
// the guaranteed count of positive solutions for small t.
inline int certified_positive_count(const ViroSystem& S) {
    return decorated_facet_count(S.coeffs, system_triangulation(S));
}

// Exact coefficient of monomial j in equation i, defined when nu_j is an
// integer (t^nu_j is then rational).
inline Rat exact_coefficient(const ViroSystem& S, long i, long j) {
    const Rat& h = S.nu[static_cast<std::size_t>(j)];
    if (den(h) != 1)
        throw std::domain_error("coefficient is not rational: nu_" + std::to_string(j + 1) +
                                " is not an integer");
    Int e = num(h);
    Rat tpow = 1;
    Rat base = S.t;
    bool neg = e < 0;
    Int k = neg ? Int(-e) : e;
    for (Int b = 0; b < k; ++b) tpow *= base;
    if (neg) tpow = Rat(1) / tpow;
    return S.coeffs(i, j) * tpow;
}

}  // namespace viro
