#include <doctest.h>

#include "gradstar/poly.hpp"
#include "test_util.hpp"

using namespace gradstar;
using testutil::Rng;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> X3 = {"x0", "x1", "x2"};

Poly var(const std::string& name, const std::vector<std::string>& vars,
         Field field = Field::Real) {
    return Poly::variable(name, vars, field);
}

}  // namespace

TEST_CASE("arithmetic basics") {
    Poly x = var("x", XY), y = var("y", XY);
    CHECK((x + y) * (x - y) == x * x - y * y);

    Poly zero(XY, Field::Real);
    CHECK((x + y) * zero == zero);

    // (x + iy)^2 = x^2 - y^2 + 2ixy
    Scalar i(Rational(0), Rational(1));
    Poly zc = var("x", XY, Field::Complex) + i * var("y", XY, Field::Complex);
    Poly sq = zc * zc;
    Poly expect = var("x", XY, Field::Complex).pow(2) - var("y", XY, Field::Complex).pow(2) +
                  (Scalar(2) * i) * (var("x", XY, Field::Complex) * var("y", XY, Field::Complex));
    CHECK(sq == expect);
}

TEST_CASE("arithmetic guards") {
    Poly x = var("x", XY);
    Poly other = var("x0", X3);
    CHECK_THROWS_AS(x + other, std::invalid_argument);
    Poly xc = var("x", XY, Field::Complex);
    CHECK_THROWS_AS(x * xc, std::invalid_argument);
    CHECK_THROWS_AS(Poly::constant(Scalar(Rational(1), Rational(1)), XY, Field::Real),
                    std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    Poly x0 = var("x0", X3), x1 = var("x1", X3);
    CHECK(partial_derivative(x0.pow(3), "x0") == Scalar(3) * x0.pow(2));
    CHECK(partial_derivative(Scalar(2) * x0 * x1, "x1") == Scalar(2) * x0);
    CHECK(partial_derivative(Poly::constant(Scalar(7), X3), "x0").is_zero());
    CHECK_THROWS_AS(partial_derivative(x0, "nope"), std::invalid_argument);

    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Poly p = rng.poly(X3, Field::Real, 5, 6);
        CHECK(partial_derivative(partial_derivative(p, "x0"), "x1") ==
              partial_derivative(partial_derivative(p, "x1"), "x0"));
    }
}

TEST_CASE("gradient") {
    Poly x0 = var("x0", X3), x1 = var("x1", X3), x2 = var("x2", X3);
    OneForm w = gradient(x0.pow(2));
    CHECK(w.components[0] == Scalar(2) * x0);
    CHECK(w.components[1].is_zero());
    CHECK(w.components[2].is_zero());

    OneForm w2 = gradient(Scalar(4) * x0 * x2 + Scalar(2) * x1.pow(2));
    CHECK(w2.components[0] == Scalar(4) * x2);
    CHECK(w2.components[1] == Scalar(4) * x1);
    CHECK(w2.components[2] == Scalar(4) * x0);

    CHECK(gradient(Poly(X3, Field::Real)).is_zero());
}

TEST_CASE("substitute") {
    std::vector<std::string> s = {"s"};
    std::vector<std::string> tgt = {"x0", "x1", "mu"};
    Poly p = var("s", s).pow(2);
    Poly image = var("x0", tgt) + var("x1", tgt) * var("mu", tgt);
    Poly r = substitute(p, {{"s", image}});
    CHECK(r == image * image);

    Poly q0 = var("x0", X3) * var("x1", X3) + var("x2", X3);
    std::map<std::string, Poly> identity;
    for (const auto& v : X3) identity.emplace(v, var(v, X3));
    CHECK(substitute(q0, identity) == q0);

    std::vector<std::string> ss = {"s1", "s2"};
    std::vector<std::string> ys = {"y1", "y2"};
    Poly prod = var("s1", ss) * var("s2", ss);
    Poly renamed = substitute(prod, {{"s1", var("y1", ys)}, {"s2", var("y2", ys)}});
    CHECK(renamed == var("y1", ys) * var("y2", ys));

    CHECK_THROWS_AS(substitute(prod, {{"s1", var("y1", ys)}}), std::invalid_argument);
    CHECK_THROWS_AS(substitute(prod, {{"s1", var("y1", ys)}, {"s2", var("x", XY)}}),
                    std::invalid_argument);
}

TEST_CASE("closedness") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) CHECK(is_closed(gradient(rng.poly(X3, Field::Real, 5, 5))));

    OneForm bad{{var("x1", X3), Poly(X3, Field::Real), Poly(X3, Field::Real)}};
    CHECK_FALSE(is_closed(bad));

    OneForm zero{{Poly(X3, Field::Real), Poly(X3, Field::Real), Poly(X3, Field::Real)}};
    CHECK(is_closed(zero));
}

TEST_CASE("integration") {
    Poly x0 = var("x0", X3), x1 = var("x1", X3), x2 = var("x2", X3);
    OneForm w{{Scalar(2) * x0, Poly(X3, Field::Real), Poly(X3, Field::Real)}};
    CHECK(integrate_exact(w) == x0.pow(2));

    OneForm w2{{Scalar(4) * x2, Scalar(4) * x1, Scalar(4) * x0}};
    Poly p2 = integrate_exact(w2);
    CHECK(p2 == Scalar(4) * x0 * x2 + Scalar(2) * x1.pow(2));
    CHECK(gradient(p2) == w2);

    OneForm bad{{var("x1", X3), Poly(X3, Field::Real), Poly(X3, Field::Real)}};
    CHECK_THROWS_AS(integrate_exact(bad), std::domain_error);

    Rng rng(23);
    std::vector<std::string> six = {"u0", "u1", "u2", "u3", "u4", "u5"};
    for (int t = 0; t < 50; ++t) {
        Poly p = rng.poly(six, Field::Real, 6, 8);
        Poly back = integrate_exact(gradient(p));
        CHECK(back == p - Poly::constant(p.constant_term(), six, Field::Real));
    }
}

TEST_CASE("conjugation") {
    Scalar i(Rational(0), Rational(1));
    Poly z = var("x", XY, Field::Complex) + i * var("y", XY, Field::Complex);
    Poly zbar = var("x", XY, Field::Complex) - i * var("y", XY, Field::Complex);
    CHECK(conjugate(z) == zbar);
    CHECK(conjugate(conjugate(z)) == z);

    std::vector<std::string> v = {"x0", "y1"};
    Poly p = Scalar(Rational(2), Rational(3)) *
             (var("x0", v, Field::Complex) * var("y1", v, Field::Complex));
    Poly q = Scalar(Rational(2), Rational(-3)) *
             (var("x0", v, Field::Complex) * var("y1", v, Field::Complex));
    CHECK(conjugate(p) == q);

    CHECK_THROWS_AS(conjugate(var("x", XY)), std::invalid_argument);

    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        Poly a = rng.poly(XY, Field::Complex, 4, 5);
        Poly b = rng.poly(XY, Field::Complex, 4, 5);
        CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        Poly a = rng.poly(X3, Field::Complex, 4, 4);
        Poly b = rng.poly(X3, Field::Complex, 4, 4);
        Poly c = rng.poly(X3, Field::Complex, 4, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("constants with no variables") {
    Poly c = Poly::constant(Scalar(Rational(3, 4)), {}, Field::Real);
    CHECK(c.total_degree() == 0);
    CHECK(c * c == Poly::constant(Scalar(Rational(9, 16)), {}, Field::Real));
    CHECK(gradient(c).components.empty());
    CHECK(is_closed(gradient(c)));
}
