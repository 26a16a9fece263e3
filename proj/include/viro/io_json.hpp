#pragma once

// JSON serialization for the core objects.  Rationals travel as "p" or "p/q"
// strings; supports are integer matrices; key order is fixed for
// reproducible output.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "viro/complexes.hpp"
#include "viro/exact_linalg.hpp"
#include "viro/point_config.hpp"
#include "viro/rational.hpp"
#include "viro/viro_system.hpp"

namespace viro {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["n"] = c.n;
    j["dim"] = c.dim;
    j["facets"] = c.facets;
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("dim") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON needs keys n, dim, facets");
    return make_complex(j.at("n").get<int>(), j.at("dim").get<int>(),
                        j.at("facets").get<std::vector<Facet>>());
}

inline Json matrix_to_json(const RatMatrix& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    std::vector<std::vector<std::string>> entries;
    entries.reserve(static_cast<std::size_t>(m.rows));
    for (long r = 0; r < m.rows; ++r) {
        std::vector<std::string> row;
        row.reserve(static_cast<std::size_t>(m.cols));
        for (long c = 0; c < m.cols; ++c) row.push_back(to_string(m(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline RatMatrix matrix_from_json(const Json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs keys rows, cols, entries");
    const long rows = j.at("rows").get<long>();
    const long cols = j.at("cols").get<long>();
    auto entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
    if (static_cast<long>(entries.size()) != rows)
        throw std::invalid_argument("matrix JSON: row count mismatch");
    RatMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        if (static_cast<long>(entries[static_cast<std::size_t>(r)].size()) != cols)
            throw std::invalid_argument("matrix JSON: column count mismatch in row " + std::to_string(r));
        for (long c = 0; c < cols; ++c)
            m(r, c) = parse_rational(entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

inline Json rat_vector_to_json(const RatVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return Json(out);
}

inline RatVec rat_vector_from_json(const Json& j) {
    RatVec v;
    for (const auto& s : j) v.push_back(parse_rational(s.get<std::string>()));
    return v;
}

inline Json points_to_json(const PointConfig& P) {
    Json j;
    j["dim"] = P.dim;
    Json pts = Json::array();
    for (const auto& p : P.points) pts.push_back(rat_vector_to_json(p));
    j["points"] = std::move(pts);
    return j;
}

inline PointConfig points_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("points"))
        throw std::invalid_argument("points JSON needs keys dim, points");
    std::vector<RatVec> pts;
    for (const auto& p : j.at("points")) pts.push_back(rat_vector_from_json(p));
    return make_point_config(j.at("dim").get<long>(), std::move(pts));
}

// Systems carry their support as plain integer vectors.
inline Json system_to_json(const ViroSystem& S) {
    if (!is_integral(S.support))
        throw std::domain_error("system support must be integral for serialization");
    Json j;
    j["d"] = S.dim();
    std::vector<std::vector<long long>> supp;
    supp.reserve(static_cast<std::size_t>(S.monomials()));
    for (const auto& p : S.support.points) {
        std::vector<long long> row;
        row.reserve(p.size());
        for (const auto& x : p) row.push_back(num(x).convert_to<long long>());
        supp.push_back(std::move(row));
    }
    j["support"] = std::move(supp);
    Json coeffs = Json::array();
    for (long r = 0; r < S.coeffs.rows; ++r) {
        std::vector<std::string> row;
        for (long c = 0; c < S.coeffs.cols; ++c) row.push_back(to_string(S.coeffs(r, c)));
        coeffs.push_back(std::move(row));
    }
    j["coeffs"] = std::move(coeffs);
    j["nu"] = rat_vector_to_json(S.nu);
    j["t"] = to_string(S.t);
    return j;
}

inline ViroSystem system_from_json(const Json& j) {
    for (const char* key : {"d", "support", "coeffs", "nu", "t"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("system JSON needs key ") + key);
    const long d = j.at("d").get<long>();
    std::vector<RatVec> pts;
    for (const auto& row : j.at("support")) {
        RatVec p;
        for (const auto& x : row) p.push_back(Rat(x.get<long long>()));
        pts.push_back(std::move(p));
    }
    PointConfig support = make_point_config(d, std::move(pts));
    auto centries = j.at("coeffs").get<std::vector<std::vector<std::string>>>();
    RatMatrix C(static_cast<long>(centries.size()),
                centries.empty() ? 0 : static_cast<long>(centries[0].size()));
    for (long r = 0; r < C.rows; ++r) {
        if (static_cast<long>(centries[static_cast<std::size_t>(r)].size()) != C.cols)
            throw std::invalid_argument("system JSON: ragged coefficient rows");
        for (long c = 0; c < C.cols; ++c)
            C(r, c) = parse_rational(centries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    RatVec nu = rat_vector_from_json(j.at("nu"));
    Rat t = parse_rational(j.at("t").get<std::string>());
    return build_viro_system(std::move(support), std::move(C), std::move(nu), std::move(t));
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace viro
