#pragma once

// Regular triangulations: exact lower-hull computation for a lifting vector,
// certificate checking, and synthesis of an integral lifting for a candidate
// triangulation via exact linear programming.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/exact_lp.hpp"
#include "viro/point_config.hpp"
#include "viro/rational.hpp"

namespace viro {

using Lifting = RatVec;  // one height per point label

// Affine functional interpolating the lifted points (w_i, nu_i) for i in a
// full-dimensional simplex: l(w_i) = nu_i.
inline AffineFunctional interpolating_functional(const PointConfig& P, const Lifting& nu,
                                                 const Facet& simplex) {
    const long d = P.dim;
    std::vector<RatVec> rows;
    RatVec rhs;
    for (int v : simplex) {
        RatVec r = P.point(v);
        r.push_back(Rat(1));
        rows.push_back(std::move(r));
        rhs.push_back(nu[static_cast<std::size_t>(v - 1)]);
    }
    RatVec sol = solve_unique(from_rows(rows), rhs);  // (alpha, beta), d+1 unknowns
    AffineFunctional f;
    f.beta = sol.back();
    sol.pop_back();
    f.alpha = std::move(sol);
    return f;
}

// All facets of the lower convex hull of the lifted points (w_i, nu_i):
// (d+1)-subsets whose interpolating hyperplane lies strictly below every
// other lifted point.  A supporting hyperplane that touches extra lifted
// points means the lifting is not generic; this raises std::domain_error
// naming the flat subset.
inline SimplicialComplex lower_hull_triangulation(const PointConfig& P, const Lifting& nu) {
    const long n = P.size();
    const long d = P.dim;
    if (static_cast<long>(nu.size()) != n)
        throw std::invalid_argument("lifting needs one height per point");
    if (n < d + 1) throw std::invalid_argument("need at least dim+1 points");

    std::vector<Facet> facets;
    std::vector<int> idx(static_cast<std::size_t>(d + 1));
    for (long i = 0; i <= d; ++i) idx[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
    while (true) {
        if (affinely_independent(P, idx)) {
            AffineFunctional f = interpolating_functional(P, nu, idx);
            bool below = true;
            std::vector<int> touching;
            for (int v = 1; v <= n; ++v) {
                if (std::binary_search(idx.begin(), idx.end(), v)) continue;
                Rat slack = nu[static_cast<std::size_t>(v - 1)] - f.eval(P.point(v));
                if (slack < 0) {
                    below = false;
                    break;
                }
                if (slack == 0) touching.push_back(v);
            }
            if (below && !touching.empty()) {
                std::string msg = "lifting is not generic: lifted points {";
                std::vector<int> flat = idx;
                flat.insert(flat.end(), touching.begin(), touching.end());
                std::sort(flat.begin(), flat.end());
                for (std::size_t i = 0; i < flat.size(); ++i)
                    msg += (i ? "," : "") + std::to_string(flat[i]);
                msg += "} lie on a common lower supporting hyperplane";
                throw std::domain_error(msg);
            }
            if (below) facets.push_back(idx);
        }
        long i = d;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(n - d + i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (long j = i + 1; j <= d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(i)] + static_cast<int>(j - i);
    }
    if (facets.empty())
        throw std::domain_error("no lower hull facets: points do not affinely span");
    return make_complex(static_cast<int>(n), static_cast<int>(d), std::move(facets));
}

struct RegularityCheck {
    bool regular = false;
    std::string reason;
};

// Does nu induce exactly the triangulation K as its lower hull?
inline RegularityCheck check_regularity_certificate(const PointConfig& P, const SimplicialComplex& K,
                                                    const Lifting& nu) {
    RegularityCheck out;
    SimplicialComplex hull = [&] {
        try {
            return lower_hull_triangulation(P, nu);
        } catch (const std::domain_error& e) {
            out.reason = e.what();
            return SimplicialComplex{};
        }
    }();
    if (!out.reason.empty()) return out;
    if (hull.facets == K.facets) {
        out.regular = true;
        return out;
    }
    for (const auto& f : K.facets)
        if (!std::binary_search(hull.facets.begin(), hull.facets.end(), f)) {
            out.reason = "facet " + facet_to_string(f) + " is not a lower hull facet";
            return out;
        }
    for (const auto& f : hull.facets)
        if (!std::binary_search(K.facets.begin(), K.facets.end(), f)) {
            out.reason = "lower hull has extra facet " + facet_to_string(f);
            return out;
        }
    out.reason = "lower hull differs";
    return out;
}

struct LiftingResult {
    std::optional<Lifting> nu;  // integral, componentwise minimum 0
    std::string reason;         // set when nu is empty
};

// Find an integral lifting realizing K as a lower hull.  For every facet tau
// and every point j outside tau the lifted point must clear the facet's
// hyperplane by at least 1:  nu_j - sum_l b_l nu_{i_l} >= 1 with b the
// barycentric coordinates of w_j in tau.  Feasibility of this program makes
// every facet of K a strict lower-hull facet; the result is re-verified and
// scaled to integers.
inline LiftingResult find_lifting(const PointConfig& P, const SimplicialComplex& K) {
    const long n = P.size();
    if (K.n != n) throw std::invalid_argument("complex and configuration disagree on n");
    if (K.dim != P.dim)
        throw std::invalid_argument("complex dimension must match configuration dimension");
    std::vector<LinearConstraint> cons;
    for (const auto& tau : K.facets) {
        if (!affinely_independent(P, tau))
            throw std::domain_error("facet " + facet_to_string(tau) +
                                    " is affinely degenerate in this configuration");
        for (int j = 1; j <= n; ++j) {
            if (std::binary_search(tau.begin(), tau.end(), j)) continue;
            RatVec b = barycentric_coordinates(P, tau, P.point(j));
            LinearConstraint c;
            c.a.assign(static_cast<std::size_t>(n), Rat(0));
            c.a[static_cast<std::size_t>(j - 1)] = 1;
            for (std::size_t l = 0; l < tau.size(); ++l)
                c.a[static_cast<std::size_t>(tau[l] - 1)] -= b[l];
            c.b = 1;
            cons.push_back(std::move(c));
        }
    }
    LpResult lp = lp_feasible(cons, n);
    LiftingResult out;
    if (!lp.feasible) {
        out.reason = "margin program is infeasible: the complex is not a regular triangulation of the configuration";
        return out;
    }
    Lifting nu = lp.point;
    Int scale = 1;
    for (const auto& x : nu) scale = boost::multiprecision::lcm(scale, den(x));
    Rat mn = 0;
    bool first = true;
    for (auto& x : nu) {
        x *= Rat(scale);
        if (first || x < mn) mn = x;
        first = false;
    }
    for (auto& x : nu) x -= mn;
    auto check = check_regularity_certificate(P, K, nu);
    if (!check.regular) {
        out.reason = "lifting found but lower hull disagrees (" + check.reason +
                     "): the complex does not triangulate the configuration";
        return out;
    }
    out.nu = std::move(nu);
    return out;
}

}  // namespace viro
