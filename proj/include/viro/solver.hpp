#pragma once

// Numerical verification of the certified positive solutions: binomial seeds
// from the decorated facets, Newton iteration in logarithmic coordinates with
// per-equation magnitude rescaling, conditioning checks, and deduplication.

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "viro/complexes.hpp"
#include "viro/decoration.hpp"
#include "viro/rational.hpp"
#include "viro/viro_system.hpp"

namespace viro {

struct SolverOptions {
    int max_iterations = 100;
    double residual_tol = 1e-10;   // scaled (relative) residual, sup norm
    double step_tol = 1e-12;       // Newton step, sup norm
    double cond_limit = 1e12;      // condition number of the final Jacobian
    double dedup_distance = 1e-6;  // minimum log-coordinate distance between solutions
};

namespace soldetail {

struct DoubleSystem {
    long d = 0, n = 0;
    std::vector<std::vector<double>> w;  // n x d exponents
    std::vector<std::vector<double>> logc;  // d x n: log |C_ij| (-inf for zero)
    std::vector<std::vector<double>> sgn;   // d x n: sign of C_ij
    std::vector<double> nu_logt;            // n: nu_j * ln t
};

inline DoubleSystem lower(const ViroSystem& S) {
    DoubleSystem D;
    D.d = S.dim();
    D.n = S.monomials();
    const double lt = log_rat(S.t);
    D.w.assign(static_cast<std::size_t>(D.n), std::vector<double>(static_cast<std::size_t>(D.d)));
    for (long j = 0; j < D.n; ++j)
        for (long c = 0; c < D.d; ++c)
            D.w[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] =
                to_double(S.support.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
    D.logc.assign(static_cast<std::size_t>(D.d), std::vector<double>(static_cast<std::size_t>(D.n)));
    D.sgn.assign(static_cast<std::size_t>(D.d), std::vector<double>(static_cast<std::size_t>(D.n)));
    for (long i = 0; i < D.d; ++i)
        for (long j = 0; j < D.n; ++j) {
            const Rat& c = S.coeffs(i, j);
            if (c == 0) {
                D.logc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -std::numeric_limits<double>::infinity();
                D.sgn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0.0;
            } else {
                D.logc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = log_rat(c < 0 ? Rat(-c) : c);
                D.sgn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c < 0 ? -1.0 : 1.0;
            }
        }
    D.nu_logt.resize(static_cast<std::size_t>(D.n));
    for (long j = 0; j < D.n; ++j) D.nu_logt[static_cast<std::size_t>(j)] = to_double(S.nu[static_cast<std::size_t>(j)]) * lt;
    return D;
}

}  // namespace soldetail

// Scaled residual and Jacobian at log-coordinates u: row i is divided by its
// largest term magnitude, making the residual relative and keeping huge
// powers of t representable.
inline void scaled_residual_jacobian(const soldetail::DoubleSystem& D, const Eigen::VectorXd& u,
                                     Eigen::VectorXd& F, Eigen::MatrixXd& J) {
    const long d = D.d, n = D.n;
    std::vector<double> expo(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
        double e = D.nu_logt[static_cast<std::size_t>(j)];
        for (long c = 0; c < d; ++c) e += D.w[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] * u[c];
        expo[static_cast<std::size_t>(j)] = e;
    }
    F.setZero(d);
    J.setZero(d, d);
    for (long i = 0; i < d; ++i) {
        double m = -std::numeric_limits<double>::infinity();
        for (long j = 0; j < n; ++j) {
            double l = D.logc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (l == -std::numeric_limits<double>::infinity()) continue;
            m = std::max(m, l + expo[static_cast<std::size_t>(j)]);
        }
        for (long j = 0; j < n; ++j) {
            double s = D.sgn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (s == 0.0) continue;
            double term = s * std::exp(D.logc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                                       expo[static_cast<std::size_t>(j)] - m);
            F[i] += term;
            for (long c = 0; c < d; ++c)
                J(i, c) += term * D.w[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        }
    }
}

inline void scaled_residual_jacobian(const ViroSystem& S, const Eigen::VectorXd& u,
                                     Eigen::VectorXd& F, Eigen::MatrixXd& J) {
    scaled_residual_jacobian(soldetail::lower(S), u, F, J);
}

// Starting point for the facet tau: solve the binomial system obtained by
// restricting each equation to the monomials of tau, whose positive solution
// satisfies <w_j, u> + nu_j ln t = log(s * lambda_j) with lambda the positive
// kernel vector of the facet's coefficient block.
inline Eigen::VectorXd binomial_seed(const ViroSystem& S, const Facet& tau) {
    const long d = S.dim();
    if (static_cast<long>(tau.size()) != d + 1)
        throw std::invalid_argument("seed facet needs dim+1 vertices");
    RatVec lambda = positive_kernel_vector(facet_submatrix(S.coeffs, tau));
    const double lt = log_rat(S.t);
    Eigen::MatrixXd A(d, d);
    Eigen::VectorXd b(d);
    const int last = tau.back();
    const double llast = log_rat(lambda.back());
    for (long r = 0; r < d; ++r) {
        const int v = tau[static_cast<std::size_t>(r)];
        for (long c = 0; c < d; ++c)
            A(r, c) = to_double(S.support.point(v)[static_cast<std::size_t>(c)]) -
                      to_double(S.support.point(last)[static_cast<std::size_t>(c)]);
        double dnu = to_double(S.nu[static_cast<std::size_t>(v - 1)]) - to_double(S.nu[static_cast<std::size_t>(last - 1)]);
        b(r) = log_rat(lambda[static_cast<std::size_t>(r)]) - llast - dnu * lt;
    }
    return A.partialPivLu().solve(b);
}

struct SolutionEntry {
    Facet facet;
    bool converged = false;
    int iterations = 0;
    double residual = 0;
    double step = 0;
    double cond = 0;
    std::vector<double> u;  // log coordinates
    std::vector<double> x;  // exp(u)
    int duplicate_of = -1;  // index of the earlier entry this one collided with
    std::string note;
};

struct SolveReport {
    std::vector<SolutionEntry> entries;
    int verified = 0;  // converged, well-conditioned, distinct
};

inline SolutionEntry newton_refine(const soldetail::DoubleSystem& D, const Facet& tau,
                                   Eigen::VectorXd u, const SolverOptions& opt) {
    SolutionEntry e;
    e.facet = tau;
    Eigen::VectorXd F;
    Eigen::MatrixXd J;
    double step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opt.max_iterations; ++it) {
        scaled_residual_jacobian(D, u, F, J);
        e.iterations = it + 1;
        e.residual = F.lpNorm<Eigen::Infinity>();
        if (!std::isfinite(e.residual)) {
            e.note = "residual overflow";
            break;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
        Eigen::VectorXd delta = lu.solve(-F);
        step = delta.lpNorm<Eigen::Infinity>();
        if (!std::isfinite(step)) {
            e.note = "singular Jacobian";
            break;
        }
        u += delta;
        e.step = step;
        // Step test is relative to |u|: the coordinates grow like |log t|, so
        // an absolute threshold would sit below the rounding floor of u.
        if (e.residual < opt.residual_tol &&
            step < opt.step_tol * std::max(1.0, u.lpNorm<Eigen::Infinity>())) {
            e.converged = true;
            break;
        }
        if (u.lpNorm<Eigen::Infinity>() > 1e12) {
            e.note = "divergence";
            break;
        }
    }
    scaled_residual_jacobian(D, u, F, J);
    e.residual = F.lpNorm<Eigen::Infinity>();
    if (e.converged) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
        double smin = svd.singularValues()(svd.singularValues().size() - 1);
        double smax = svd.singularValues()(0);
        e.cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
        if (!(e.cond < opt.cond_limit)) {
            e.converged = false;
            e.note = "ill-conditioned Jacobian";
        }
    }
    e.u.assign(u.data(), u.data() + u.size());
    e.x.resize(e.u.size());
    for (std::size_t i = 0; i < e.u.size(); ++i) e.x[i] = std::exp(e.u[i]);
    return e;
}

// Seed and refine one solution per positively decorated facet of the
// triangulation induced by the system's lifting; solutions closer than the
// deduplication distance in log coordinates count once.
inline SolveReport count_positive_solutions(const ViroSystem& S, const SolverOptions& opt = {}) {
    SimplicialComplex tri = system_triangulation(S);
    soldetail::DoubleSystem D = soldetail::lower(S);
    SolveReport rep;
    for (const auto& tau : tri.facets) {
        if (!is_positively_spanning(facet_submatrix(S.coeffs, tau)).positively_spanning) continue;
        SolutionEntry e = newton_refine(D, tau, binomial_seed(S, tau), opt);
        if (e.converged) {
            for (std::size_t k = 0; k < rep.entries.size(); ++k) {
                const auto& other = rep.entries[k];
                if (!other.converged || other.duplicate_of >= 0) continue;
                double dist2 = 0;
                for (std::size_t c = 0; c < e.u.size(); ++c) {
                    double dd = e.u[c] - other.u[c];
                    dist2 += dd * dd;
                }
                if (std::sqrt(dist2) <= opt.dedup_distance) {
                    e.duplicate_of = static_cast<int>(k);
                    e.note = "duplicate of facet " + facet_to_string(other.facet);
                    break;
                }
            }
        }
        rep.entries.push_back(std::move(e));
    }
    for (const auto& e : rep.entries)
        if (e.converged && e.duplicate_of < 0) ++rep.verified;
    return rep;
}

struct TSearchResult {
    Rat t;
    SolveReport report;
    bool reached_target = false;
};

// Walk t = 10^-1, 10^-2, ... until the verified count reaches the target;
// keep the best count seen otherwise.  The ladder goes deep because thin
// lifting margins can push the binomial regime far below machine-scale t;
// in log coordinates small t costs nothing numerically.
inline TSearchResult t_search(const PointConfig& support, const RatMatrix& coeffs, const Lifting& nu,
                              int target, int max_exponent = 40, const SolverOptions& opt = {}) {
    TSearchResult best;
    best.t = 0;
    for (int e = 1; e <= max_exponent; ++e) {
        Rat t(1, int_pow(Int(10), static_cast<unsigned>(e)));
        ViroSystem S = build_viro_system(support, coeffs, nu, t);
        SolveReport rep = count_positive_solutions(S, opt);
        if (best.t == 0 || rep.verified > best.report.verified) {
            best.t = t;
            best.report = rep;
        }
        if (rep.verified >= target) {
            best.t = t;
            best.report = std::move(rep);
            best.reached_target = true;
            break;
        }
    }
    return best;
}

}  // namespace viro
