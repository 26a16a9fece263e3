#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "viro/cyclic_family.hpp"
#include "viro/rational.hpp"

namespace viro {

// ---------------------------------------------------------------- counting

// D(h, k) by the three-term recurrence; negative indices count as zero.
inline Int delannoy(long h, long k) {
    if (h < 0 || k < 0) return 0;
    std::vector<Int> row(k + 1, 1);
    for (long i = 1; i <= h; ++i) {
        Int diag = row[0];  // D(i-1, j-1) while sweeping j
        for (long j = 1; j <= k; ++j) {
            Int up = row[j];
            row[j] = row[j] + row[j - 1] + diag;
            diag = up;
        }
    }
    return row[k];
}

// Independent closed form: sum over l of 2^l * binom(h,l) * binom(k,l).
inline Int delannoy_closed(long h, long k) {
    if (h < 0 || k < 0) return 0;
    Int acc = 0;
    for (long l = 0; l <= std::min(h, k); ++l)
        acc += int_pow(2, static_cast<unsigned long>(l)) * binomial(h, l) * binomial(k, l);
    return acc;
}

inline Int corona_count(long h, long k) {
    if (h < 0 || k < 0) return 0;
    return delannoy(h, k) + delannoy(h - 1, k - 1);
}

// Number of k-edge matchings of a small (multi)graph, by exhaustive
// branching on edges. Self-loops can never enter a matching.
inline Int count_matchings(const MatchGraph& g, int k) {
    if (k < 0) return 0;
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges)
        if (e.first != e.second) edges.push_back(e);
    std::vector<bool> used(g.nverts + 1, false);
    Int total = 0;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            ++total;
            return;
        }
        if (edges.size() - from < static_cast<std::size_t>(left)) return;
        for (std::size_t e = from; e < edges.size(); ++e) {
            const auto [u, v] = edges[e];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = true;
            self(self, e + 1, left - 1);
            used[u] = used[v] = false;
        }
    };
    rec(rec, 0, k);
    return total;
}

// ------------------------------------------------------------ lower bounds

// A lower or upper bound on the maximal number of nondegenerate positive
// solutions of a d-variate system supported on d + k + 1 monomials.
struct BoundRecord {
    long d = 0;
    long k = 0;
    Int value;
    std::string provenance;
};

// Parity-split lower bounds from the S family. The two cases that would lean
// on a non-proper subcomplex (the whole even cycle) fall back to the value
// with one facet removed, which keeps every reported bound valid.
inline BoundRecord xi_parity_lower_bound(long d, long k) {
    if (d < 1 || k < 1) throw std::domain_error("xi_parity_lower_bound needs d, k >= 1");
    BoundRecord rec{d, k, 0, "parity-formula"};
    if (d % 2 == 1 && k % 2 == 0) {
        const long i = (d + 1) / 2, j = k / 2;
        rec.value = i >= 2 ? corona_count(i, j) : corona_count(1, j) - 1;
    } else if (d % 2 == 1 && k % 2 == 1) {
        const long i = (d + 1) / 2, j = (k + 1) / 2;
        const Int f = corona_count(i, j) * j;
        if (f % (i + j) != 0) throw std::logic_error("parity bound not integral");
        rec.value = f / (i + j);
    } else if (d % 2 == 0 && k % 2 == 0) {
        const long i = d / 2, j = k / 2;
        const Int f = corona_count(i + 1, j) * (i + 1);
        if (f % (i + j + 1) != 0) throw std::logic_error("parity bound not integral");
        rec.value = f / (i + j + 1);
    } else {
        const long i = d / 2, j = (k + 1) / 2;
        Int inner = corona_count(i, j - 1);
        if (i < 2 && j - 1 > 0) inner = corona_count(1, j - 1) - 1;
        rec.value = 2 * inner;
    }
    return rec;
}

// Best bound derivable from the seeds (1,k) -> k+1, (d,1) -> d+1 and
// (2,2) -> 7 under products and coordinatewise monotonicity, by dynamic
// programming that peels one seed at a time.
struct XiProductTable {
    long dmax = 0;
    long kmax = 0;
    std::vector<std::vector<Int>> best;  // [d][k], 1 on the axes

    const Int& at(long d, long k) const { return best[d][k]; }
};

inline XiProductTable xi_product_table(long dmax, long kmax, long cap = 512) {
    if (dmax < 1 || kmax < 1) throw std::domain_error("xi_product_table needs d, k >= 1");
    if (dmax > cap || kmax > cap)
        throw std::domain_error("xi_product_table grid exceeds cap " + std::to_string(cap));
    XiProductTable t;
    t.dmax = dmax;
    t.kmax = kmax;
    t.best.assign(dmax + 1, std::vector<Int>(kmax + 1, 1));
    for (long d = 1; d <= dmax; ++d) {
        for (long k = 1; k <= kmax; ++k) {
            Int v = t.best[d - 1][k];
            if (t.best[d][k - 1] > v) v = t.best[d][k - 1];
            for (long kk = 1; kk <= k; ++kk) {
                Int c = (kk + 1) * t.best[d - 1][k - kk];
                if (c > v) v = std::move(c);
            }
            for (long dd = 1; dd <= d; ++dd) {
                Int c = (dd + 1) * t.best[d - dd][k - 1];
                if (c > v) v = std::move(c);
            }
            if (d >= 2 && k >= 2) {
                Int c = 7 * t.best[d - 2][k - 2];
                if (c > v) v = std::move(c);
            }
            t.best[d][k] = std::move(v);
        }
    }
    return t;
}

inline BoundRecord xi_product_lower_bound(long d, long k, long cap = 512) {
    auto t = xi_product_table(d, k, cap);
    BoundRecord rec{d, k, t.at(d, k), "product-DP"};
    if ((d == 1 && rec.value == k + 1) || (k == 1 && rec.value == d + 1) ||
        (d == 2 && k == 2 && rec.value == 7))
        rec.provenance = "seed";
    return rec;
}

// Best lower bound this module knows for one cell, parity vs product DP.
inline BoundRecord xi_best_lower_bound(long d, long k, const XiProductTable& t) {
    BoundRecord parity = xi_parity_lower_bound(d, k);
    BoundRecord product{d, k, t.at(d, k), "product-DP"};
    return parity.value > product.value ? parity : product;
}

// ------------------------------------------------------------ upper bound

// log10 of ((e^2+3)/4) * 2^(k(k-1)/2) * d^k.
inline double khovanskii_upper_log10(long d, long k) {
    if (d < 1 || k < 1) throw std::domain_error("khovanskii bound needs d, k >= 1");
    const double e2 = std::exp(2.0);
    return std::log10((e2 + 3.0) / 4.0) +
           (static_cast<double>(k) * (k - 1) / 2.0) * std::log10(2.0) +
           static_cast<double>(k) * std::log10(static_cast<double>(d));
}

// -------------------------------------------------------------- the curves

struct CurveSample {
    double alpha = 0;
    double value = 0;
};

// Lower bound for the base of exponential growth along direction
// (alpha, 1 - alpha), normalized by the (d + k)-th root.
inline double xi_asymptotic_bound(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must be in (0,1)");
    const double beta = 1.0 - alpha;
    const double s = std::sqrt(alpha * alpha + beta * beta);
    return std::exp(0.5 * (alpha * std::log((s + beta) / alpha) +
                           beta * std::log((s + alpha) / beta)));
}

// Sample points from the exactly known cases: (d, 1) and (1, d) give
// (d+1)^(1/(d+1)) at alpha = d/(d+1) and 1/(d+1); (2, 2) gives 7^(1/4).
inline std::vector<CurveSample> classical_curve_points(int max_q = 40) {
    if (max_q < 1) throw std::domain_error("classical_curve_points needs max_q >= 1");
    std::vector<CurveSample> pts;
    pts.push_back({0.5, std::pow(7.0, 0.25)});
    for (int q = 1; q <= max_q; ++q) {
        const double v = std::pow(static_cast<double>(q + 1), 1.0 / (q + 1));
        pts.push_back({static_cast<double>(q) / (q + 1), v});
        pts.push_back({1.0 / (q + 1), v});
    }
    std::sort(pts.begin(), pts.end(),
              [](const CurveSample& a, const CurveSample& b) { return a.alpha < b.alpha; });
    return pts;
}

// Upper concave envelope of (alpha, log value), evaluated on the same grid
// of alphas that the input samples use. Inputs need not be sorted.
inline std::vector<CurveSample> log_concave_envelope(std::vector<CurveSample> samples) {
    if (samples.empty()) return {};
    std::sort(samples.begin(), samples.end(), [](const CurveSample& a, const CurveSample& b) {
        return a.alpha < b.alpha || (a.alpha == b.alpha && a.value < b.value);
    });
    // keep the max value per distinct alpha
    std::vector<CurveSample> pts;
    for (const auto& s : samples) {
        if (s.value <= 0) throw std::domain_error("envelope needs positive values");
        if (!pts.empty() && pts.back().alpha == s.alpha)
            pts.back().value = s.value;
        else
            pts.push_back(s);
    }
    struct P {
        double x, y;
    };
    std::vector<P> hull;
    for (const auto& s : pts) {
        P p{s.alpha, std::log(s.value)};
        while (hull.size() >= 2) {
            const P& a = hull[hull.size() - 2];
            const P& b = hull[hull.size() - 1];
            if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    auto hull_at = [&](double x) {
        if (hull.size() == 1) return hull[0].y;
        std::size_t i = 1;
        while (i + 1 < hull.size() && hull[i].x < x) ++i;
        const P& a = hull[i - 1];
        const P& b = hull[i];
        if (b.x == a.x) return std::max(a.y, b.y);
        const double t = (x - a.x) / (b.x - a.x);
        return a.y + t * (b.y - a.y);
    };
    std::vector<CurveSample> out;
    out.reserve(pts.size());
    for (const auto& s : pts) out.push_back({s.alpha, std::exp(hull_at(s.alpha))});
    return out;
}

// -------------------------------------------------------------- R numbers

// Exact small values of the largest regular complex size with a regular
// complement, symmetric in (d, k).
inline std::optional<Int> r_exact_small(long d, long k) {
    if (d < 1 || k < 1) throw std::domain_error("r bounds need d, k >= 1");
    if (d > k) std::swap(d, k);
    if (d == 1) return Int(1);
    if (d == 2) return Int(k == 1 ? 1 : k + 1);
    if (d == 3) {
        if (k == 1) return Int(1);
        if (k == 2) return Int(4);
        if (k == 4) return Int(8);
        return Int(2 * k + 1);
    }
    return std::nullopt;
}

struct RBounds {
    long d = 0;
    long k = 0;
    std::optional<BoundRecord> lower;
    std::optional<BoundRecord> upper;
};

inline RBounds r_bounds(long d, long k) {
    RBounds rb;
    rb.d = d;
    rb.k = k;
    if (auto exact = r_exact_small(d, k)) {
        rb.lower = BoundRecord{d, k, *exact, "exact-small"};
        rb.upper = BoundRecord{d, k, *exact, "exact-small"};
        return rb;
    }
    if (d % 2 == 0 && k % 2 == 0) {
        rb.lower = BoundRecord{d, k, corona_count(d / 2, k / 2), "parity-formula"};
        auto cyclic_upper = [](long dim, long verts) {
            // facet count of the cyclic polytope of even dimension dim
            const long half = dim / 2;
            return binomial(verts - half - 1, half - 1) + binomial(verts - half, half);
        };
        Int up = cyclic_upper(d, d + k);
        Int u2 = cyclic_upper(k, d + k);
        if (u2 < up) up = u2;
        rb.upper = BoundRecord{d, k, up, "cyclic-upper"};
    }
    return rb;
}

// Upper bound curve for the same (d + k)-th root normalization as the
// asymptotic lower bound curve.
inline double r_upper_curve(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must be in (0,1)");
    const double beta = 1.0 - alpha;
    return std::pow((alpha + 2 * beta) / (2 * beta), beta) *
           std::pow((alpha + 2 * beta) / alpha, alpha / 2);
}

}  // namespace viro
