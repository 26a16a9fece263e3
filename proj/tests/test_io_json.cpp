#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "viro/io_json.hpp"

using namespace viro;

TEST_CASE("complexes round-trip through JSON", "[io]") {
    auto c = make_complex(6, 2, {{1, 2, 3}, {2, 3, 5}, {4, 5, 6}});
    Json j = complex_to_json(c);
    CHECK(j.at("n") == 6);
    CHECK(j.at("dim") == 2);
    auto back = complex_from_json(j);
    CHECK(back.n == c.n);
    CHECK(back.dim == c.dim);
    CHECK(back.facets == c.facets);

    Json broken = j;
    broken.erase("facets");
    CHECK_THROWS_AS(complex_from_json(broken), std::invalid_argument);
}

TEST_CASE("matrices round-trip through JSON", "[io]") {
    auto m = from_rows({{Rat(1, 3), Rat(-5, 7)}, {Rat(0), Rat(12)}});
    Json j = matrix_to_json(m);
    CHECK(j.at("entries")[0][1] == "-5/7");
    auto back = matrix_from_json(j);
    REQUIRE(back.rows == 2);
    REQUIRE(back.cols == 2);
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c) CHECK(back(r, c) == m(r, c));

    Json short_rows = j;
    short_rows["rows"] = 3;
    CHECK_THROWS_WITH(matrix_from_json(short_rows), Catch::Matchers::ContainsSubstring("row count"));
    Json ragged = j;
    ragged["entries"][1] = std::vector<std::string>{"1"};
    CHECK_THROWS_WITH(matrix_from_json(ragged), Catch::Matchers::ContainsSubstring("column count"));
}

TEST_CASE("rational vectors and points round-trip through JSON", "[io]") {
    RatVec v{Rat(2), Rat(-7, 3), Rat(0)};
    CHECK(rat_vector_from_json(rat_vector_to_json(v)) == v);
    CHECK_THROWS_AS(rat_vector_from_json(Json::array({"1/0"})), std::invalid_argument);
    CHECK_THROWS_AS(rat_vector_from_json(Json::array({"nope"})), std::invalid_argument);

    auto P = make_point_config(2, {{Rat(0), Rat(1, 2)}, {Rat(3), Rat(-1)}});
    auto Q = points_from_json(points_to_json(P));
    CHECK(Q.dim == P.dim);
    CHECK(Q.points == P.points);
}

TEST_CASE("systems round-trip through JSON", "[io]") {
    auto support = make_point_config(1, {{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(3)}});
    auto coeffs = from_rows({{Rat(1), Rat(-1), Rat(1), Rat(-1)}});
    Lifting nu{Rat(0), Rat(0), Rat(1), Rat(3)};
    ViroSystem S = build_viro_system(support, coeffs, nu, Rat(1, 10));

    Json j = system_to_json(S);
    CHECK(j.at("t") == "1/10");
    ViroSystem back = system_from_json(j);
    CHECK(back.support.points == S.support.points);
    CHECK(back.nu == S.nu);
    CHECK(back.t == S.t);
    for (long c = 0; c < 4; ++c) CHECK(back.coeffs(0, c) == S.coeffs(0, c));

    Json missing = j;
    missing.erase("nu");
    CHECK_THROWS_WITH(system_from_json(missing), Catch::Matchers::ContainsSubstring("nu"));
    Json ragged = j;
    ragged["coeffs"] = std::vector<std::vector<std::string>>{{"1", "-1", "1", "-1"}, {"1", "2"}};
    CHECK_THROWS_WITH(system_from_json(ragged), Catch::Matchers::ContainsSubstring("ragged"));

    // fractional supports have no integer serialization
    ViroSystem frac = build_viro_system(make_point_config(1, {{Rat(0)}, {Rat(1, 2)}}),
                                        from_rows({{Rat(1), Rat(-1)}}), Lifting{Rat(0), Rat(0)}, Rat(1, 2));
    CHECK_THROWS_AS(system_to_json(frac), std::domain_error);
}

TEST_CASE("JSON files round-trip on disk", "[io]") {
    const std::string path = "io_roundtrip_tmp.json";
    auto c = make_complex(4, 1, {{1, 2}, {3, 4}});
    write_json_file(path, complex_to_json(c));
    auto back = complex_from_json(read_json_file(path));
    CHECK(back.facets == c.facets);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("definitely_not_here_479213.json"), std::runtime_error);
}
