#pragma once

// Exact Schlegel projection of a simplicial polytope through one of its
// facets: project the remaining boundary facets onto the window facet from a
// viewpoint slightly beyond it, then chart the window's affine hull to
// Q^{d-1} with barycentric coordinates.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/decoration.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/point_config.hpp"
#include "viro/rational.hpp"

namespace viro {

struct SchlegelProjection {
    Facet window;                // the facet projected through
    RatVec viewpoint;            // point beyond the window, beneath all other facets
    PointConfig image;           // n points in Q^{d-1}
    SimplicialComplex triangulation;  // all boundary facets except the window
};

inline SchlegelProjection schlegel_project(const PointConfig& P, const Facet& window) {
    const long d = P.dim;
    const long n = P.size();
    std::vector<Facet> hull = hull_facets(P);
    if (!std::binary_search(hull.begin(), hull.end(), window))
        throw std::domain_error("window " + facet_to_string(window) + " is not a hull facet");
    if (hull.size() < 2)
        throw std::domain_error("polytope has too few facets for a projection");

    // Normalize each facet functional to be positive on the interior,
    // witnessed by the vertex barycenter.
    Facet all(static_cast<std::size_t>(n));
    for (long v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = static_cast<int>(v + 1);
    RatVec inner = barycenter(P, all);
    auto inward = [&](const Facet& f) {
        auto h = hyperplane_through(P, f);
        if (!h) throw std::logic_error("hull facet without a hyperplane");
        Rat at_inner = h->eval(inner);
        if (at_inner == 0) throw std::logic_error("barycenter lies on a facet hyperplane");
        if (at_inner < 0) {
            for (auto& x : h->alpha) x = -x;
            h->beta = -h->beta;
        }
        return *h;
    };

    AffineFunctional lw = inward(window);
    std::vector<AffineFunctional> others;
    for (const auto& f : hull)
        if (f != window) others.push_back(inward(f));

    // Viewpoint o = barycenter(window) - eps * alpha_w: beyond the window
    // (lw(o) < 0) and beneath every other facet (lg(o) > 0) for small eps.
    RatVec wbary = barycenter(P, window);
    Rat eps = 1;
    RatVec o;
    for (int tries = 0; tries < 512; ++tries) {
        o = wbary;
        for (std::size_t i = 0; i < o.size(); ++i) o[i] -= eps * lw.alpha[i];
        bool ok = lw.eval(o) < 0;
        for (const auto& g : others) {
            if (!ok) break;
            ok = g.eval(o) > 0;
        }
        if (ok) break;
        eps /= 2;
        o.clear();
    }
    if (o.empty()) throw std::logic_error("failed to place a viewpoint beyond the window facet");

    // Central projection from o onto the window hyperplane:
    // x = o + t (w - o) with t = lw(o) / (lw(o) - lw(w)).
    Rat lo = lw.eval(o);
    std::vector<RatVec> flat;
    flat.reserve(static_cast<std::size_t>(n));
    for (long v = 1; v <= n; ++v) {
        Rat lv = lw.eval(P.point(static_cast<int>(v)));
        Rat t = lo / (lo - lv);
        RatVec x(static_cast<std::size_t>(d));
        for (long c = 0; c < d; ++c) {
            const Rat& ov = o[static_cast<std::size_t>(c)];
            x[static_cast<std::size_t>(c)] = ov + t * (P.point(static_cast<int>(v))[static_cast<std::size_t>(c)] - ov);
        }
        flat.push_back(std::move(x));
    }

    // Chart: barycentric coordinates with respect to the window's d vertices,
    // dropping the last coordinate (they sum to 1).
    std::vector<RatVec> rows;
    for (long r = 0; r < d; ++r) {
        RatVec row(window.size());
        for (std::size_t j = 0; j < window.size(); ++j)
            row[j] = P.point(window[j])[static_cast<std::size_t>(r)];
        rows.push_back(std::move(row));
    }
    rows.push_back(RatVec(window.size(), Rat(1)));
    RatMatrix chart = from_rows(rows);

    std::vector<RatVec> img;
    img.reserve(static_cast<std::size_t>(n));
    for (long v = 0; v < n; ++v) {
        RatVec rhs = flat[static_cast<std::size_t>(v)];
        rhs.push_back(Rat(1));
        RatVec b = solve_unique(chart, rhs);  // d barycentric coordinates
        b.pop_back();
        img.push_back(std::move(b));
    }

    std::vector<Facet> tri;
    for (const auto& f : hull)
        if (f != window) tri.push_back(f);

    SchlegelProjection out;
    out.window = window;
    out.viewpoint = std::move(o);
    out.image = make_point_config(d - 1, std::move(img));
    out.triangulation = make_complex(static_cast<int>(n), static_cast<int>(d - 1), std::move(tri));
    return out;
}

}  // namespace viro
