#pragma once

#include <stdexcept>
#include <vector>

#include "viro/exact_linalg.hpp"
#include "viro/rational.hpp"

namespace viro {

// One constraint <a, x> >= b over free rational variables.
struct LinearConstraint {
    RatVec a;
    Rat b;
};

struct LpResult {
    bool feasible = false;
    RatVec point;   // satisfies every constraint exactly when feasible
    RatVec farkas;  // otherwise: y >= 0 with y^T A = 0 and y^T b > 0
};

// Exact phase-1 simplex with Bland's rule. Free variables are split into
// positive parts, each constraint gets a surplus variable, and rows are
// sign-normalized so the artificial basis starts feasible.
inline LpResult lp_feasible(const std::vector<LinearConstraint>& cons, long nvars) {
    const long m = static_cast<long>(cons.size());
    for (const auto& c : cons)
        if (static_cast<long>(c.a.size()) != nvars)
            throw std::invalid_argument("constraint arity mismatch");
    LpResult res;
    if (m == 0) {
        res.feasible = true;
        res.point.assign(nvars, Rat(0));
        return res;
    }

    const long xp0 = 0, xn0 = nvars, s0 = 2 * nvars, z0 = 2 * nvars + m;
    const long ncols = 2 * nvars + 2 * m;

    std::vector<RatVec> t(m, RatVec(ncols + 1, Rat(0)));
    std::vector<int> sigma(m, 1);
    for (long i = 0; i < m; ++i) {
        sigma[i] = cons[i].b < 0 ? -1 : 1;
        for (long j = 0; j < nvars; ++j) {
            Rat v = cons[i].a[j] * sigma[i];
            t[i][xp0 + j] = v;
            t[i][xn0 + j] = -v;
        }
        t[i][s0 + i] = Rat(-sigma[i]);
        t[i][z0 + i] = 1;
        t[i][ncols] = cons[i].b * sigma[i];
    }

    std::vector<long> basis(m);
    for (long i = 0; i < m; ++i) basis[i] = z0 + i;

    // Reduced-cost row for min sum(z): start from c and price out the basis.
    RatVec red(ncols + 1, Rat(0));
    for (long j = z0; j < z0 + m; ++j) red[j] = 1;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= ncols; ++j) red[j] -= t[i][j];

    while (true) {
        long enter = -1;
        for (long j = 0; j < ncols; ++j)
            if (red[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        long leave = -1;
        Rat best;
        for (long i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][ncols] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw std::logic_error("phase-1 objective unbounded");

        const Rat piv = t[leave][enter];
        for (long j = 0; j <= ncols; ++j) t[leave][j] /= piv;
        for (long i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (long j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (red[enter] != 0) {
            const Rat f = red[enter];
            for (long j = 0; j <= ncols; ++j) red[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (long i = 0; i < m; ++i)
        if (basis[i] >= z0) objective += t[i][ncols];

    if (objective != 0) {
        res.feasible = false;
        res.farkas.assign(m, Rat(0));
        for (long i = 0; i < m; ++i) {
            Rat pi = Rat(1) - red[z0 + i];
            res.farkas[i] = pi * sigma[i];
        }
        return res;
    }

    res.feasible = true;
    res.point.assign(nvars, Rat(0));
    for (long i = 0; i < m; ++i) {
        if (basis[i] < xn0)
            res.point[basis[i]] += t[i][ncols];
        else if (basis[i] < s0)
            res.point[basis[i] - xn0] -= t[i][ncols];
    }
    return res;
}

}  // namespace viro
