// viro: construct sparse polynomial systems with many certified positive
// solutions from triangulations and positive decorations, verify the exact
// certificates, count solutions numerically, and tabulate lower bounds.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "viro/counting_bounds.hpp"
#include "viro/io_json.hpp"
#include "viro/pipeline.hpp"
#include "viro/solver.hpp"

using namespace viro;

namespace {

std::string fmtg(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void emit(const Json& j, const std::string& path) {
    if (path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(path, j);
}

Json entry_json(const SolutionEntry& e) {
    Json j;
    j["facet"] = e.facet;
    j["converged"] = e.converged;
    j["iterations"] = e.iterations;
    j["residual"] = e.residual;
    j["cond"] = e.cond;
    j["x"] = e.x;
    if (e.duplicate_of >= 0) j["duplicate_of"] = e.duplicate_of;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

Json report_json(const SolveReport& rep) {
    Json j;
    j["verified"] = rep.verified;
    Json entries = Json::array();
    for (const auto& e : rep.entries) entries.push_back(entry_json(e));
    j["entries"] = std::move(entries);
    return j;
}

void cmd_delannoy(long hmax, long kmax, bool corona) {
    std::cout << "h\\k";
    for (long k = 0; k <= kmax; ++k) std::cout << std::setw(10) << k;
    std::cout << "\n";
    for (long h = 0; h <= hmax; ++h) {
        std::cout << std::left << std::setw(3) << h << std::right;
        for (long k = 0; k <= kmax; ++k)
            std::cout << std::setw(10) << (corona ? corona_count(h, k) : delannoy(h, k)).str();
        std::cout << "\n";
    }
}

void cmd_scomplex(int m, int k, const std::string& out) { emit(complex_to_json(s_complex(m, k)), out); }

int cmd_duality(int m, int k) {
    auto s = s_complex(m, k);
    Int expected = corona_count(m - k, k);
    bool count_ok = Int(s.facets.size()) == expected;
    bool swap_ok = relabel_swap(s) == complement(s_complex(m, m - k));
    Json j;
    j["m"] = m;
    j["k"] = k;
    j["facets"] = s.facets.size();
    j["expected"] = expected.str();
    j["count_matches"] = count_ok;
    j["swap_complement_matches"] = swap_ok;
    std::cout << j.dump(2) << "\n";
    return count_ok && swap_ok ? 0 : 1;
}

void cmd_decorate(const std::string& complex_path, const std::string& points_path, const std::string& out) {
    auto K = complex_from_json(read_json_file(complex_path));
    auto Q = points_from_json(read_json_file(points_path));
    auto dec = decorate_via_complement(K, Q);
    Json j;
    j["decorates"] = true;
    j["orientation_inconsistency"] = orientation_inconsistency(dec.C, K);
    j["coeffs"] = matrix_to_json(dec.C);
    Json sup = Json::array();
    for (const auto& u : dec.support) sup.push_back(rat_vector_to_json(u));
    j["support_functionals"] = std::move(sup);
    emit(j, out);
}

void cmd_check_decoration(const std::string& complex_path, const std::string& coeffs_path) {
    auto K = complex_from_json(read_json_file(complex_path));
    auto C = matrix_from_json(read_json_file(coeffs_path));
    auto chk = positively_decorates(C, K);
    Json j;
    j["decorates"] = chk.decorates;
    Json per = Json::array();
    for (std::size_t i = 0; i < K.facets.size(); ++i) {
        Json f;
        f["facet"] = K.facets[i];
        f["decorated"] = static_cast<bool>(chk.facet_ok[i]);
        per.push_back(std::move(f));
    }
    j["facets"] = std::move(per);
    if (!chk.decorates) j["reason"] = chk.reason;
    if (chk.decorates) j["orientation_inconsistency"] = orientation_inconsistency(C, K);
    std::cout << j.dump(2) << "\n";
}

void cmd_build(const std::string& support_path, const std::string& coeffs_path, const std::string& nu_path,
               const std::string& t_str, const std::string& out) {
    auto support = points_from_json(read_json_file(support_path));
    auto coeffs = matrix_from_json(read_json_file(coeffs_path));
    auto nu = rat_vector_from_json(read_json_file(nu_path));
    ViroSystem S = build_viro_system(std::move(support), std::move(coeffs), std::move(nu),
                                     parse_rational(t_str));
    Json j = system_to_json(S);
    j["triangulation"] = complex_to_json(system_triangulation(S));
    j["certified_positive_count"] = certified_positive_count(S);
    emit(j, out);
}

int cmd_verify(const std::string& system_path, int target, bool tsearch, int max_exponent) {
    ViroSystem S = system_from_json(read_json_file(system_path));
    Json j;
    if (tsearch) {
        if (target < 0) throw std::domain_error("--tsearch needs --target");
        TSearchResult r = t_search(S.support, S.coeffs, S.nu, target, max_exponent);
        j["t"] = to_string(r.t);
        j["reached_target"] = r.reached_target;
        j.update(report_json(r.report));
        std::cout << j.dump(2) << "\n";
        return r.reached_target ? 0 : 1;
    }
    j["t"] = to_string(S.t);
    j["certified_positive_count"] = certified_positive_count(S);
    SolveReport rep = count_positive_solutions(S);
    j.update(report_json(rep));
    std::cout << j.dump(2) << "\n";
    return target < 0 || rep.verified >= target ? 0 : 1;
}

int cmd_pipeline(int m, int k, const std::string& t_str, bool solve, const std::string& out) {
    PipelineResult r = s_pipeline(m, k);
    Json j;
    j["m"] = m;
    j["k"] = k;
    j["window"] = r.window;
    j["subcomplex"] = complex_to_json(r.s);
    j["triangulation"] = complex_to_json(r.triangulation);
    j["support"] = points_to_json(r.support);
    j["nu"] = rat_vector_to_json(r.nu);
    j["coeffs"] = matrix_to_json(r.coeffs);
    j["decorated_count"] = r.decorated_count;
    j["expected_count"] = r.expected_count.str();
    int code = 0;
    if (!t_str.empty()) j["system"] = system_to_json(pipeline_system(r, parse_rational(t_str)));
    if (solve) {
        int target = static_cast<int>(r.expected_count.convert_to<long>());
        TSearchResult ts = t_search(r.support, r.coeffs, r.nu, target);
        j["t"] = to_string(ts.t);
        j["reached_target"] = ts.reached_target;
        j["verified"] = ts.report.verified;
        code = ts.reached_target ? 0 : 1;
    }
    emit(j, out);
    return code;
}

int cmd_example(bool solve, const std::string& out) {
    auto P = make_point_config(2, {{Rat(1), Rat(-1)},
                                   {Rat(-4), Rat(-6)},
                                   {Rat(-4), Rat(4)},
                                   {Rat(6), Rat(0)},
                                   {Rat(3), Rat(6)},
                                   {Rat(10), Rat(5)},
                                   {Rat(6), Rat(-6)}});
    Lifting nu{Rat(0), Rat(0), Rat(0), Rat(3), Rat(5), Rat(10), Rat(2)};
    auto tri = lower_hull_triangulation(P, nu);
    auto balanced = make_complex(7, 2, {{1, 2, 3}, {1, 2, 7}, {1, 3, 4}, {1, 4, 7}, {3, 4, 5}, {4, 5, 6}});
    Coloring gamma{1, 2, 3, 2, 1, 3, 3};
    RatMatrix C = decoration_from_coloring(balanced, gamma);

    Json j;
    j["points"] = points_to_json(P);
    j["nu"] = rat_vector_to_json(nu);
    j["triangulation"] = complex_to_json(tri);
    j["balanced_subcomplex"] = complex_to_json(balanced);
    j["coloring"] = gamma;
    j["coeffs"] = matrix_to_json(C);
    j["decorated_count"] = decorated_facet_count(C, tri);
    j["orientation_inconsistency"] = orientation_inconsistency(C, balanced);
    int code = 0;
    if (solve) {
        TSearchResult ts = t_search(P, C, nu, static_cast<int>(balanced.facets.size()));
        j["t"] = to_string(ts.t);
        j["reached_target"] = ts.reached_target;
        j.update(report_json(ts.report));
        code = ts.reached_target ? 0 : 1;
    }
    emit(j, out);
    return code;
}

void cmd_bounds(long dmax, long kmax, bool curve, long step) {
    if (curve) {
        if (step < 2) throw std::domain_error("--step must be at least 2");
        auto classical = classical_curve_points();
        auto env = log_concave_envelope(classical);
        std::sort(env.begin(), env.end(),
                  [](const CurveSample& a, const CurveSample& b) { return a.alpha < b.alpha; });
        std::cout << "alpha,new_lower,classical_lower,envelope,r_upper\n";
        for (long i = 1; i < step; ++i) {
            const double alpha = static_cast<double>(i) / static_cast<double>(step);
            std::cout << fmtg(alpha) << "," << fmtg(xi_asymptotic_bound(alpha)) << ",";
            // Several classical samples can share an abscissa; report the best.
            double best_classical = 0.0;
            for (const auto& s : classical)
                if (std::abs(s.alpha - alpha) < 1e-9) best_classical = std::max(best_classical, s.value);
            if (best_classical > 0.0) std::cout << fmtg(best_classical);
            std::cout << ",";
            if (alpha >= env.front().alpha && alpha <= env.back().alpha) {
                std::size_t hi = 1;
                while (env[hi].alpha < alpha) ++hi;
                const auto& a = env[hi - 1];
                const auto& b = env[hi];
                const double w = b.alpha > a.alpha ? (alpha - a.alpha) / (b.alpha - a.alpha) : 0.0;
                std::cout << fmtg(std::exp((1 - w) * std::log(a.value) + w * std::log(b.value)));
            }
            std::cout << "," << fmtg(r_upper_curve(alpha)) << "\n";
        }
        return;
    }
    auto table = xi_product_table(dmax, kmax);
    std::cout << "d,k,value,provenance\n";
    for (long d = 1; d <= dmax; ++d)
        for (long k = 1; k <= kmax; ++k) {
            BoundRecord rec = xi_best_lower_bound(d, k, table);
            std::cout << d << "," << k << "," << rec.value.str() << "," << rec.provenance << "\n";
        }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse polynomial systems with many positive solutions"};
    app.require_subcommand(1);

    long hmax = 6, kmax_d = 6;
    bool corona = false;
    auto* cd = app.add_subcommand("delannoy", "print the lattice-path count table");
    cd->add_option("--hmax", hmax, "largest row index");
    cd->add_option("--kmax", kmax_d, "largest column index");
    cd->add_flag("--corona", corona, "print the corona matching counts instead");

    int sm = 0, sk = 0;
    std::string sout;
    auto* cs = app.add_subcommand("scomplex", "emit the cyclic-family subcomplex as JSON");
    cs->add_option("-m,--m", sm, "half the vertex count")->required();
    cs->add_option("-k,--k", sk, "half of facet dimension plus one")->required();
    cs->add_option("-o,--output", sout, "write JSON here instead of stdout");

    int dm = 0, dk = 0;
    auto* cdu = app.add_subcommand("duality-check", "verify size and complement identities of the subcomplex");
    cdu->add_option("-m,--m", dm, "half the vertex count")->required();
    cdu->add_option("-k,--k", dk, "half of facet dimension plus one")->required();

    std::string dec_complex, dec_points, dec_out;
    auto* cde = app.add_subcommand("decorate", "decorate a complex from a realization of its complement");
    cde->add_option("--complex", dec_complex, "complex JSON file")->required();
    cde->add_option("--points", dec_points, "realization points JSON file")->required();
    cde->add_option("-o,--output", dec_out, "write JSON here instead of stdout");

    std::string chk_complex, chk_coeffs;
    auto* cch = app.add_subcommand("check-decoration", "test whether a matrix positively decorates a complex");
    cch->add_option("--complex", chk_complex, "complex JSON file")->required();
    cch->add_option("--coeffs", chk_coeffs, "coefficient matrix JSON file")->required();

    std::string b_support, b_coeffs, b_nu, b_t = "1/10", b_out;
    auto* cb = app.add_subcommand("viro-build", "assemble a system from support, coefficients, and lifting");
    cb->add_option("--support", b_support, "support points JSON file")->required();
    cb->add_option("--coeffs", b_coeffs, "coefficient matrix JSON file")->required();
    cb->add_option("--nu", b_nu, "lifting JSON file (array of rationals)")->required();
    cb->add_option("--t", b_t, "deformation parameter (rational)");
    cb->add_option("-o,--output", b_out, "write JSON here instead of stdout");

    std::string v_system;
    int v_target = -1, v_maxexp = 12;
    bool v_tsearch = false;
    auto* cv = app.add_subcommand("viro-verify", "count verified positive solutions of a system");
    cv->add_option("--system", v_system, "system JSON file")->required();
    cv->add_option("--target", v_target, "required number of verified solutions");
    cv->add_flag("--tsearch", v_tsearch, "search over t = 10^-1, 10^-2, ... for the target");
    cv->add_option("--max-exponent", v_maxexp, "largest exponent tried by the search");

    int pm = 0, pk = 0;
    std::string p_t, p_out;
    bool p_solve = false;
    auto* cp = app.add_subcommand("viro-pipeline", "run the full construction for the cyclic family");
    cp->add_option("-m,--m", pm, "half the number of monomials")->required();
    cp->add_option("-k,--k", pk, "half of dimension plus one")->required();
    cp->add_option("--t", p_t, "also emit the system at this t (rational)");
    cp->add_flag("--solve", p_solve, "numerically verify the expected count");
    cp->add_option("-o,--output", p_out, "write JSON here instead of stdout");

    bool e_solve = false;
    std::string e_out;
    auto* ce = app.add_subcommand("example-simcomp6", "the planar seven-point worked example");
    ce->add_flag("--solve", e_solve, "numerically verify the six solutions");
    ce->add_option("-o,--output", e_out, "write JSON here instead of stdout");

    long bd = 8, bk = 8, bstep = 64;
    bool bcurve = false;
    auto* cbo = app.add_subcommand("bounds", "tabulate lower bounds or the asymptotic curves as CSV");
    cbo->add_option("--dmax", bd, "largest dimension");
    cbo->add_option("--kmax", bk, "largest codimension parameter");
    cbo->add_flag("--curve", bcurve, "emit the asymptotic curves instead of the table");
    cbo->add_option("--step", bstep, "grid denominator for the curve");

    try {
        app.parse(argc, argv);
        if (cd->parsed()) cmd_delannoy(hmax, kmax_d, corona);
        if (cs->parsed()) cmd_scomplex(sm, sk, sout);
        if (cdu->parsed()) return cmd_duality(dm, dk);
        if (cde->parsed()) cmd_decorate(dec_complex, dec_points, dec_out);
        if (cch->parsed()) cmd_check_decoration(chk_complex, chk_coeffs);
        if (cb->parsed()) cmd_build(b_support, b_coeffs, b_nu, b_t, b_out);
        if (cv->parsed()) return cmd_verify(v_system, v_target, v_tsearch, v_maxexp);
        if (cp->parsed()) return cmd_pipeline(pm, pk, p_t, p_solve, p_out);
        if (ce->parsed()) return cmd_example(e_solve, e_out);
        if (cbo->parsed()) cmd_bounds(bd, bk, bcurve, bstep);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
