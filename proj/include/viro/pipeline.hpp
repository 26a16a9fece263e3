#pragma once

// End-to-end construction of a sparse system in dimension 2k-1 with 2m
// monomials whose number of positive solutions for small t equals the size
// of the cyclic-family subcomplex on 2m vertices: realize the complex on the
// cyclic polytope, project through a facet outside it, certify regularity of
// the projected triangulation with an integral lifting, and decorate via the
// complement realization on the dual moment curve.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/counting_bounds.hpp"
#include "viro/cyclic_family.hpp"
#include "viro/decoration.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/point_config.hpp"
#include "viro/regularity.hpp"
#include "viro/schlegel.hpp"
#include "viro/viro_system.hpp"

namespace viro {

// Map a point configuration by coordinatewise positive scaling and
// translation to nonnegative primitive integer coordinates.  These maps are
// monomial substitutions on the positive orthant, so they change neither the
// triangulation combinatorics nor the number of positive solutions.
inline PointConfig normalize_support(const PointConfig& P) {
    const long n = P.size();
    std::vector<RatVec> pts = P.points;
    for (long c = 0; c < P.dim; ++c) {
        Int l = 1;
        for (long i = 0; i < n; ++i)
            l = boost::multiprecision::lcm(l, den(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]));
        Rat mn = pts[0][static_cast<std::size_t>(c)] * Rat(l);
        for (long i = 0; i < n; ++i) {
            auto& x = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            x *= Rat(l);
            if (x < mn) mn = x;
        }
        Int g = 0;
        for (long i = 0; i < n; ++i) {
            auto& x = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            x -= mn;
            g = boost::multiprecision::gcd(g, num(x));
        }
        if (g > 1)
            for (long i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /= Rat(g);
    }
    return make_point_config(P.dim, std::move(pts));
}

// Rescale-and-round an exact lifting to small integer heights.  Scaling a
// lifting by a positive constant keeps its lower hull unchanged, so rounding
// nu * scale / max(nu) only perturbs heights within the combinatorial margin
// once the scale is large enough; the first scale whose certificate verifies
// exactly wins.  Falls back to the input when no scale works.
inline Lifting shrink_lifting(const PointConfig& P, const SimplicialComplex& K, const Lifting& nu) {
    double top = 0;
    for (const auto& h : nu) top = std::max(top, to_double(h));
    if (top <= 0) return nu;
    for (long scale = 8; scale <= (1L << 30); scale *= 2) {
        Lifting cand(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i)
            cand[i] = Rat(std::llround(to_double(nu[i]) * static_cast<double>(scale) / top));
        if (!check_regularity_certificate(P, K, cand).regular) continue;
        Int g = 0;
        for (const auto& h : cand) g = boost::multiprecision::gcd(g, num(h));
        if (g > 1)
            for (auto& h : cand) h /= Rat(g);
        return cand;
    }
    return nu;
}

struct PipelineResult {
    int m = 0, k = 0;
    SimplicialComplex s;              // the target subcomplex on 2m vertices, dimension 2k-1
    Facet window;                     // cyclic-polytope facet projected through (not in s)
    SimplicialComplex triangulation;  // Schlegel image: all cyclic facets except the window
    PointConfig support;              // 2m integral exponent vectors in Z^{2k-1}
    Lifting nu;                       // integral lifting realizing the triangulation
    RatMatrix coeffs;                 // (2k-1) x 2m decoration from the complement realization
    int decorated_count = 0;          // facets of the triangulation positively decorated
    Int expected_count = 0;           // corona matching count, the size of s
};

inline ViroSystem pipeline_system(const PipelineResult& r, const Rat& t) {
    return build_viro_system(r.support, r.coeffs, r.nu, t);
}

inline PipelineResult s_pipeline(int m, int k) {
    if (!(2 <= k && k < m))
        throw std::domain_error("pipeline needs 2 <= k < m (for k < 2 the subcomplex fills the whole boundary)");
    const int n = 2 * m;
    PipelineResult out;
    out.m = m;
    out.k = k;

    // Realize the cyclic polytope C(2m, 2k) and locate the subcomplex in its
    // boundary; project through the lexicographically smallest facet outside.
    PointConfig pts = moment_points(n, 2 * k);
    out.s = s_complex(m, k);
    SimplicialComplex hull = hull_complex(pts);
    const Facet* window = nullptr;
    for (const auto& f : hull.facets)
        if (!std::binary_search(out.s.facets.begin(), out.s.facets.end(), f)) {
            window = &f;
            break;
        }
    if (!window) throw std::logic_error("no cyclic facet outside the subcomplex");
    out.window = *window;

    SchlegelProjection proj = schlegel_project(pts, out.window);
    out.triangulation = proj.triangulation;
    for (const auto& f : out.s.facets)
        if (!std::binary_search(out.triangulation.facets.begin(), out.triangulation.facets.end(), f))
            throw std::logic_error("subcomplex facet missing from the projected triangulation");

    // The chart coordinates carry barycentric denominators far beyond what
    // the Newton verification can absorb, so snap the image to a coarse grid
    // before certifying.  Snapping is sound because the regularity
    // certificate is re-verified exactly on the snapped support; the grid is
    // refined until it holds.  The image lives in the unit window simplex,
    // so a grid of denominator q gives integer exponents of size at most q.
    bool placed = false;
    for (long q = 32; q <= (1L << 20) && !placed; q *= 2) {
        std::vector<RatVec> snapped(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            RatVec p(static_cast<std::size_t>(proj.image.dim));
            for (long c = 0; c < proj.image.dim; ++c)
                p[static_cast<std::size_t>(c)] =
                    Rat(std::llround(to_double(proj.image.points[static_cast<std::size_t>(i)]
                                                                [static_cast<std::size_t>(c)]) *
                                     static_cast<double>(q)),
                        q);
            snapped[static_cast<std::size_t>(i)] = std::move(p);
        }
        PointConfig cand = normalize_support(make_point_config(proj.image.dim, std::move(snapped)));
        bool degenerate = false;
        for (const auto& f : out.triangulation.facets)
            if (!affinely_independent(cand, f)) {
                degenerate = true;
                break;
            }
        if (degenerate) continue;
        LiftingResult lift = find_lifting(cand, out.triangulation);
        if (!lift.nu) continue;
        out.support = std::move(cand);
        out.nu = shrink_lifting(out.support, out.triangulation, *lift.nu);
        placed = true;
    }
    if (!placed)
        throw std::logic_error("no grid refinement realizes the projected triangulation");

    // Decoration via the complement realization: vertex i of the complex goes
    // to moment point sigma(i) on the dual curve, where sigma swaps 2j-1 and 2j.
    PointConfig dual = moment_points(n, n - 2 * k);
    std::vector<RatVec> realization(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int s = (i % 2 == 1) ? i + 1 : i - 1;
        realization[static_cast<std::size_t>(i - 1)] = dual.point(s);
    }
    ComplementDecoration dec = decorate_via_complement(out.s, make_point_config(n - 2 * k, std::move(realization)));
    out.coeffs = std::move(dec.C);

    out.decorated_count = decorated_facet_count(out.coeffs, out.triangulation);
    out.expected_count = corona_count(m - k, k);
    return out;
}

}  // namespace viro
