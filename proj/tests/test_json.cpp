#include <doctest.h>

#include "gradstar/json_io.hpp"
#include "test_util.hpp"

using namespace gradstar;
using testutil::Rng;

TEST_CASE("scalar encoding") {
    CHECK(scalar_to_json(Scalar(Rational(3, 4))).dump() == R"({"im":"0","re":"3/4"})");
    CHECK(rational_str(Rational(0)) == "0");
    CHECK(rational_str(parse_rational("-6/8")) == "-3/4");
    Scalar s = scalar_from_json(Json::parse(R"({"re":"-2/6","im":"5"})"));
    CHECK(s.re() == Rational(-1, 3));
    CHECK(s.im() == Rational(5));
    CHECK(scalar_from_json(Json::parse(R"("7/2")")) == Scalar(Rational(7, 2)));
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"re":"1/0"})")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"re":"x"})")), std::invalid_argument);
}

TEST_CASE("polynomial schema") {
    Json j = Json::parse(
        R"({"vars":["x0","x1"],"terms":[{"coeff":{"re":"3/4","im":"0"},"exp":[2,1]}]})");
    Poly p = poly_from_json(j);
    CHECK(p.field() == Field::Real);
    CHECK(p.vars() == std::vector<std::string>{"x0", "x1"});
    CHECK(p.coefficient({2, 1}) == Scalar(Rational(3, 4)));

    // inference: a nonzero imaginary part flips the mode
    Json jc = Json::parse(
        R"({"vars":["x"],"terms":[{"coeff":{"re":"0","im":"1"},"exp":[1]}]})");
    CHECK(poly_from_json(jc).field() == Field::Complex);

    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        Poly q = rng.poly({"a", "b", "c"}, Field::Complex, 4, 5);
        CHECK(poly_from_json(poly_to_json(q), Field::Complex) == q);
    }
}

TEST_CASE("mu-vector schema") {
    Rng rng(3);
    std::vector<Poly> coeffs;
    for (int i = 0; i < 3; ++i) coeffs.push_back(rng.poly({"x", "y"}, Field::Real, 3, 3));
    MuPoly v{coeffs};
    Json j = mupoly_to_json(v);
    CHECK(j.at("m") == 3);
    CHECK(mupoly_from_json(j, Field::Real) == v);
    j["m"] = 4;
    CHECK_THROWS_AS(mupoly_from_json(j, Field::Real), std::invalid_argument);
}

TEST_CASE("system schema") {
    Json j = Json::parse(R"({
        "X": [[{"re":"0","im":"0"},{"re":"-1","im":"0"}],
              [{"re":"1","im":"0"},{"re":"0","im":"0"}]],
        "Z": ["1","0"],
        "vars": ["x","y"]
    })");
    StarSystem sys = system_from_json(j);
    CHECK(sys.modulus.degree() == 2);
    CHECK(sys.vars == std::vector<std::string>{"x", "y"});
    CHECK(sys.field == Field::Real);
    StarSystem back = system_from_json(system_to_json(sys));
    CHECK(back.pencil_base == sys.pencil_base);
    CHECK(back.modulus == sys.modulus);
    CHECK(back.vars == sys.vars);
}

TEST_CASE("jordan spec schemas") {
    Json jc = Json::parse(R"({
        "field":"complex",
        "eigenvalues":[
            {"lambda":{"re":"2","im":"0"},"blocks":[2]},
            {"lambda":{"re":"0","im":"1"},"blocks":[2,1]}
        ]
    })");
    CHECK_FALSE(spec_is_real(jc));
    JordanSpecC spec = spec_c_from_json(jc);
    CHECK(spec.eigenvalues.size() == 2);
    CHECK(spec.eigenvalues[1].lambda == Scalar(Rational(0), Rational(1)));
    CHECK(spec.eigenvalues[1].block_sizes == std::vector<size_t>{2, 1});
    JordanSpecC back = spec_c_from_json(spec_c_to_json(spec));
    CHECK(back.eigenvalues[0].lambda == spec.eigenvalues[0].lambda);

    Json jr = Json::parse(R"({"field":"real","alpha":"0","beta":"1","blocks":[2,1]})");
    CHECK(spec_is_real(jr));
    JordanSpecR rspec = spec_r_from_json(jr);
    CHECK(rspec.half_sizes == std::vector<size_t>{2, 1});
    CHECK(rspec.is_normalized());
    CHECK(spec_r_from_json(spec_r_to_json(rspec)).beta == rspec.beta);
}

TEST_CASE("coefficient tables") {
    Json j = Json::parse(R"({"0,2":{"re":"1","im":"0"},"1,1":{"re":"0","im":"-1/2"}})");
    auto table = coeff_table_from_json(j);
    CHECK(table.size() == 2);
    CHECK(table[{0, 2}] == Scalar(1));
    CHECK(table[{1, 1}] == Scalar(Rational(0), Rational(-1, 2)));
    CHECK_THROWS_AS(coeff_table_from_json(Json::parse(R"({"nokey":"1"})")),
                    std::invalid_argument);
}

TEST_CASE("serialization is canonical") {
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
        Poly p = rng.poly({"x", "y", "z"}, Field::Real, 4, 6);
        CHECK(poly_to_json(p).dump() == poly_to_json(p).dump());
        Poly q = poly_from_json(poly_to_json(p), Field::Real);
        CHECK(poly_to_json(q).dump() == poly_to_json(p).dump());
    }
}
