#include <doctest.h>

#include "gradstar/jordan_complex.hpp"
#include "test_util.hpp"

using namespace gradstar;
using testutil::Rng;

namespace {

Poly var(const std::string& name, const std::vector<std::string>& vars,
         Field field = Field::Real) {
    return Poly::variable(name, vars, field);
}

// The worked 5x5 two-eigenvalue spec: lambda1 with one block of size 2,
// lambda2 with blocks of sizes 2 and 1.
JordanSpecC five_spec(const Scalar& l1, const Scalar& l2, Field field = Field::Real) {
    return JordanSpecC{field, {EigenBlocks{l1, {2}}, EigenBlocks{l2, {2, 1}}}};
}

struct FiveData {
    JordanSpecC spec;
    std::vector<std::string> vars;
    Poly f, g, f1, g1, f2, g2;
};

FiveData five_data(const Scalar& l1, const Scalar& l2, Field field = Field::Real) {
    FiveData d;
    d.spec = five_spec(l1, l2, field);
    d.vars = d.spec.var_names();
    Poly x0 = var("x1_1_0", d.vars, field), x1 = var("x1_1_1", d.vars, field);
    Poly y0 = var("x2_1_0", d.vars, field), y1 = var("x2_1_1", d.vars, field);
    Poly z0 = var("x2_2_0", d.vars, field);
    d.g1 = Scalar(2) * (x0 * x1) + x0.pow(3);
    d.f1 = l1 * d.g1 + x0.pow(2);
    d.g2 = y0 * z0.pow(2) + y1;
    d.f2 = l2 * d.g2 + y0;
    d.f = d.f1 + d.f2;
    d.g = d.g1 + d.g2;
    return d;
}

}  // namespace

TEST_CASE("jordan matrices") {
    JordanSpecC one{Field::Real, {EigenBlocks{Scalar(0), {3}}}};
    BuiltSystem built = build_matrices(one);
    CHECK(built.vars == std::vector<std::string>{"x1_1_0", "x1_1_1", "x1_1_2"});
    Matrix u2(3, 3);
    u2.at(0, 1) = Scalar(1);
    u2.at(1, 2) = Scalar(1);
    CHECK(built.u == u2);
    CHECK(built.m == u2);

    FiveData d = five_data(Scalar(2), Scalar(3));
    BuiltSystem five = build_matrices(d.spec);
    REQUIRE(five.m.rows() == 5);
    Matrix expected(5, 5);
    expected.at(0, 0) = Scalar(2);
    expected.at(0, 1) = Scalar(1);
    expected.at(1, 1) = Scalar(2);
    expected.at(2, 2) = Scalar(3);
    expected.at(2, 3) = Scalar(1);
    expected.at(3, 3) = Scalar(3);
    expected.at(4, 4) = Scalar(3);
    CHECK(five.m == expected);

    JordanSpecC single{Field::Real, {EigenBlocks{Scalar(5), {1}}}};
    BuiltSystem tiny = build_matrices(single);
    CHECK(tiny.u == Matrix(1, 1));

    JordanSpecC bad{Field::Real, {EigenBlocks{Scalar(0), {1, 2}}}};
    CHECK_THROWS_AS(build_matrices(bad), std::invalid_argument);
}

TEST_CASE("eigenvalue shift") {
    Rng rng(5);
    std::vector<std::string> vars = {"a", "b"};
    for (int t = 0; t < 10; ++t) {
        Poly g = rng.poly(vars, Field::Real, 4, 4);
        Poly h = rng.poly(vars, Field::Real, 4, 4);
        Scalar lambda = rng.scalar(Field::Real);
        Poly f = lambda * g + h;
        SolutionPair fwd = eigen_shift(f, g, lambda, ShiftDirection::Forward);
        CHECK(fwd.f == h);
        SolutionPair back = eigen_shift(fwd.f, fwd.g, lambda, ShiftDirection::Inverse);
        CHECK(back.f == f);
        CHECK(back.g == g);
        CHECK(eigen_shift(f, g, Scalar(0), ShiftDirection::Forward).f == f);
    }
}

TEST_CASE("nilpotent extension") {
    std::vector<std::string> tri = {"x1_1_0", "x1_1_1", "x1_1_2"};
    Matrix u2(3, 3);
    u2.at(0, 1) = Scalar(1);
    u2.at(1, 2) = Scalar(1);
    Poly x0 = var("x1_1_0", tri), x1 = var("x1_1_1", tri), x2 = var("x1_1_2", tri);

    Poly f = Scalar(4) * (x0 * x1);
    Poly g = Scalar(4) * (x0 * x2) + Scalar(2) * x1.pow(2);
    MuPoly v = extend_nilpotent(u2, f, g);
    REQUIRE(v.length() == 3);
    CHECK(v[0] == Scalar(2) * x0.pow(2));
    CHECK(v[1] == f);
    CHECK(v[2] == g);
    StarSystem sys(-u2, Modulus::mu_power(3), tri, Field::Real);
    CHECK(check_solution(sys, v).is_solution);

    // 1x1 zero block: degenerate length-1 extension (f must be constant)
    std::vector<std::string> one = {"z"};
    Matrix u0(1, 1);
    Poly fz = Poly::constant(Scalar(3), one, Field::Real);
    Poly gz = var("z", one).pow(4);
    MuPoly w = extend_nilpotent(u0, fz, gz);
    CHECK(w.length() == 1);
    CHECK(w[0] == gz);

    // constants extend to constants
    Poly cf = Poly::constant(Scalar(Rational(1, 2)), tri, Field::Real);
    Poly cg = Poly::constant(Scalar(Rational(-2, 3)), tri, Field::Real);
    MuPoly cv = extend_nilpotent(u2, cf, cg);
    CHECK(cv[0].is_zero());
    CHECK(cv[1] == cf);
    CHECK(cv[2] == cg);

    CHECK_THROWS_AS(extend_nilpotent(u2, x0, g), std::invalid_argument);
    Matrix not_nil = Matrix::identity(2);
    CHECK_THROWS_AS(extend_nilpotent(not_nil, var("a", {"a", "b"}), var("b", {"a", "b"})),
                    std::invalid_argument);
}

TEST_CASE("power coefficients") {
    std::vector<std::string> b3 = {"x0", "x1", "x2"};
    Poly x0 = var("x0", b3), x1 = var("x1", b3), x2 = var("x2", b3);

    for (long i = 0; i <= 5; ++i)
        CHECK(power_coefficient(i, 0, b3, b3, Field::Real) == x0.pow(i));
    CHECK(power_coefficient(2, 1, b3, b3, Field::Real) == Scalar(2) * (x0 * x1));
    CHECK(power_coefficient(3, 2, b3, b3, Field::Real) ==
          Scalar(3) * (x0.pow(2) * x2) + Scalar(3) * (x0 * x1.pow(2)));

    for (long n = 0; n <= 4; ++n) {
        std::vector<std::string> block;
        for (long j = 0; j <= n; ++j) block.push_back("x" + std::to_string(j));
        for (long i = 0; i <= 6; ++i)
            for (long j = 0; j <= n; ++j)
                CHECK(power_coefficient(i, j, block, block, Field::Real) ==
                      power_coefficient_bell(i, j, block, block, Field::Real));
    }

    // multi-index convolution against the direct per-block products
    JordanSpecC spec{Field::Real, {EigenBlocks{Scalar(0), {3, 2}}}};
    std::vector<std::string> ambient = spec.var_names();
    for (long i1 = 0; i1 <= 3; ++i1)
        for (long i2 = 0; i2 <= 3; ++i2)
            for (long j = 0; j <= 1; ++j) {
                Poly direct(ambient, Field::Real);
                for (long j1 = 0; j1 <= j; ++j1) {
                    Poly a = power_coefficient(i1, j1, {"x1_1_0", "x1_1_1", "x1_1_2"}, ambient,
                                               Field::Real);
                    Poly b = power_coefficient(i2, j - j1, {"x1_2_0", "x1_2_1"}, ambient,
                                               Field::Real);
                    direct += a * b;
                }
                CHECK(power_coefficient_multi({i1, i2}, j, spec) == direct);
            }

    CHECK_THROWS_AS(power_coefficient_multi({1, 1}, 2, spec), std::invalid_argument);
}

TEST_CASE("general solution, one block of size 2") {
    Scalar lambda(Rational(5, 2));
    JordanSpecC spec{Field::Real, {EigenBlocks{lambda, {2}}}};
    std::vector<std::string> vars = spec.var_names();
    Poly x0 = var("x1_1_0", vars), x1 = var("x1_1_1", vars);

    // phi_0 = s^3, phi_1 = s^2:  g = x1 phi_1'(x0) + phi_0(x0), f = lambda g + phi_1(x0)
    GenFuncSet phis = {var("s1", gen_func_vars(1)).pow(3), var("s1", gen_func_vars(1)).pow(2)};
    SolutionPair p = general_solution(spec, phis);
    Poly expect_g = Scalar(2) * (x1 * x0) + x0.pow(3);
    CHECK(p.g == expect_g);
    CHECK(p.f == lambda * expect_g + x0.pow(2));
}

TEST_CASE("general solution, one block of size 3") {
    JordanSpecC spec{Field::Real, {EigenBlocks{Scalar(0), {3}}}};
    std::vector<std::string> vars = spec.var_names();
    Poly x0 = var("x1_1_0", vars), x1 = var("x1_1_1", vars), x2 = var("x1_1_2", vars);

    GenFuncSet phis = {Poly(gen_func_vars(1), Field::Real), Poly(gen_func_vars(1), Field::Real),
                       var("s1", gen_func_vars(1)).pow(2)};
    SolutionPair p = general_solution(spec, phis);
    CHECK(p.f == Scalar(4) * (x0 * x1));  // lambda = 0, so f = h
    CHECK(p.g == Scalar(4) * (x0 * x2) + Scalar(2) * x1.pow(2));
}

TEST_CASE("general solution, two blocks") {
    Scalar lambda(3);
    JordanSpecC spec{Field::Real, {EigenBlocks{lambda, {2, 1}}}};
    std::vector<std::string> vars = spec.var_names();
    Poly y0 = var("x1_1_0", vars), y1 = var("x1_1_1", vars), z0 = var("x1_2_0", vars);

    // phi_0(s1, s2) = s1 s2^2, phi_1(s1) = s1:
    // g = phi_0(y0, z0) + y1 phi_1'(y0), f = lambda g + phi_1(y0)
    GenFuncSet phis = {var("s1", gen_func_vars(2)) * var("s2", gen_func_vars(2)).pow(2),
                       var("s1", gen_func_vars(1))};
    SolutionPair p = general_solution(spec, phis);
    CHECK(p.g == y0 * z0.pow(2) + y1);
    CHECK(p.f == lambda * p.g + y0);
}

TEST_CASE("generating-function arity is enforced") {
    JordanSpecC spec{Field::Real, {EigenBlocks{Scalar(0), {2, 1}}}};
    // phi_0 must use two variables here, phi_1 one
    GenFuncSet wrong = {var("s1", gen_func_vars(1)), var("s1", gen_func_vars(1))};
    CHECK_THROWS_AS(general_solution(spec, wrong), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_star_series(spec, wrong), std::invalid_argument);
    GenFuncSet too_few = {var("s1", gen_func_vars(2))};
    CHECK_THROWS_AS(general_solution(spec, too_few), std::invalid_argument);

    std::vector<std::string> xy = {"x", "y"};
    CHECK_THROWS_AS(verify_gradient(Matrix(3, 3), var("x", xy), var("y", xy)),
                    std::invalid_argument);
}

TEST_CASE("general solution passes the gradient equation on random inputs") {
    Rng rng(77);
    std::vector<JordanSpecC> specs = {
        JordanSpecC{Field::Real, {EigenBlocks{Scalar(Rational(1, 2)), {4}}}},
        JordanSpecC{Field::Real, {EigenBlocks{Scalar(-1), {3, 2, 1}}}},
        JordanSpecC{Field::Complex, {EigenBlocks{Scalar(Rational(0), Rational(1)), {3, 3, 2}}}},
    };
    for (const auto& spec : specs) {
        size_t n1 = spec.eigenvalues[0].block_sizes[0] - 1;
        for (int t = 0; t < 6; ++t) {
            GenFuncSet phis;
            for (size_t k = 0; k <= n1; ++k)
                phis.push_back(rng.poly(gen_func_vars(spec.nu(0, k)), spec.field, 5, 3));
            general_solution(spec, phis);  // throws on failure
        }
    }
}

TEST_CASE("star series reconstruction, one block") {
    JordanSpecC spec{Field::Real, {EigenBlocks{Scalar(0), {3}}}};
    std::vector<std::string> vars = spec.var_names();
    Poly x0 = var("x1_1_0", vars), x1 = var("x1_1_1", vars), x2 = var("x1_1_2", vars);

    GenFuncSet phis = {Poly(gen_func_vars(1), Field::Real), Poly(gen_func_vars(1), Field::Real),
                       var("s1", gen_func_vars(1)).pow(2)};
    MuPoly series = reconstruct_star_series(spec, phis);
    CHECK(series[0] == Scalar(2) * x0.pow(2));
    CHECK(series[1] == Scalar(4) * (x0 * x1));
    CHECK(series[2] == Scalar(4) * (x0 * x2) + Scalar(2) * x1.pow(2));

    GenFuncSet zeros(3, Poly(gen_func_vars(1), Field::Real));
    CHECK(reconstruct_star_series(spec, zeros).is_zero());
}

TEST_CASE("star series reconstruction, embedded trailing block") {
    JordanSpecC spec{Field::Real, {EigenBlocks{Scalar(0), {2, 1}}}};
    std::vector<std::string> vars = spec.var_names();
    Poly x0 = var("x1_1_0", vars), z0 = var("x1_2_0", vars);

    GenFuncSet phis = {var("s1", gen_func_vars(2)).pow(2) * var("s2", gen_func_vars(2)).pow(3),
                       Poly(gen_func_vars(1), Field::Real)};
    MuPoly series = reconstruct_star_series(spec, phis);
    CHECK(series[1] == x0.pow(2) * z0.pow(3));
    CHECK(series[0].is_zero());
}

TEST_CASE("reconstruction agrees with the general solution and the extension") {
    Rng rng(91);
    std::vector<JordanSpecC> specs = {
        JordanSpecC{Field::Real, {EigenBlocks{Scalar(0), {3}}}},
        JordanSpecC{Field::Real, {EigenBlocks{Scalar(0), {4}}}},
        JordanSpecC{Field::Real, {EigenBlocks{Scalar(0), {2, 1}}}},
        JordanSpecC{Field::Real, {EigenBlocks{Scalar(0), {3, 2, 1}}}},
        JordanSpecC{Field::Complex, {EigenBlocks{Scalar(0), {3, 2}}}},
    };
    for (const auto& spec : specs) {
        size_t n1 = spec.eigenvalues[0].block_sizes[0] - 1;
        StarSystem sys = nilpotent_system(spec);
        for (int t = 0; t < 8; ++t) {
            GenFuncSet phis;
            for (size_t k = 0; k <= n1; ++k)
                phis.push_back(rng.poly(gen_func_vars(spec.nu(0, k)), spec.field, 4, 3));
            SolutionPair p = general_solution(spec, phis);
            MuPoly series = reconstruct_star_series(spec, phis);
            CHECK(check_solution(sys, series).is_solution);
            CHECK(series[n1] == p.g);
            if (n1 >= 1) CHECK(series[n1 - 1] == p.f);  // lambda = 0
            MuPoly ext = extend_nilpotent(build_matrices(spec).u, p.f, p.g);
            CHECK(series.drop_constants() == ext.drop_constants());
        }
    }
}

TEST_CASE("gradient verification") {
    FiveData d = five_data(Scalar(2), Scalar(3));
    Matrix m = build_matrices(d.spec).m;
    CHECK(verify_gradient(m, d.f, d.g));

    Poly c1 = Poly::constant(Scalar(9), d.vars, Field::Real);
    Poly c2 = Poly::constant(Scalar(-4), d.vars, Field::Real);
    CHECK(verify_gradient(m, c1, c2));

    std::vector<std::string> xy = {"x", "y"};
    Matrix rot(2, 2);
    rot.at(0, 1) = Scalar(1);
    rot.at(1, 0) = Scalar(-1);
    CHECK_FALSE(verify_gradient(rot, var("y", xy), Poly(xy, Field::Real)));
}

TEST_CASE("decomposition by eigenvalue") {
    std::vector<std::pair<Scalar, Scalar>> eigen_pairs = {
        {Scalar(2), Scalar(3)},
        {Scalar(Rational(0), Rational(1)), Scalar(Rational(1), Rational(1))}};
    for (const auto& pair : eigen_pairs) {
        Field field = pair.first.is_real() && pair.second.is_real() ? Field::Real : Field::Complex;
        FiveData d = five_data(pair.first, pair.second, field);
        auto parts = decompose_by_eigenvalue(d.spec, d.f, d.g);
        REQUIRE(parts.size() == 2);
        std::vector<std::string> sub1 = {"x1_1_0", "x1_1_1"};
        std::vector<std::string> sub2 = {"x2_1_0", "x2_1_1", "x2_2_0"};
        CHECK(parts[0].f == d.f1.with_vars(sub1));
        CHECK(parts[0].g == d.g1.with_vars(sub1));
        CHECK(parts[1].f == d.f2.with_vars(sub2));
        CHECK(parts[1].g == d.g2.with_vars(sub2));

        // components sum back to (f, g)
        CHECK(parts[0].f.with_vars(d.vars) + parts[1].f.with_vars(d.vars) == d.f);
        CHECK(parts[0].g.with_vars(d.vars) + parts[1].g.with_vars(d.vars) == d.g);
    }

    // single eigenvalue: singleton list
    JordanSpecC single{Field::Real, {EigenBlocks{Scalar(0), {3}}}};
    std::vector<std::string> vars = single.var_names();
    Poly x0 = var("x1_1_0", vars), x1 = var("x1_1_1", vars), x2 = var("x1_1_2", vars);
    Poly f = Scalar(4) * (x0 * x1);
    Poly g = Scalar(4) * (x0 * x2) + Scalar(2) * x1.pow(2);
    auto onepart = decompose_by_eigenvalue(single, f, g);
    CHECK(onepart.size() == 1);
    CHECK(onepart[0].f == f);

    // zero solution
    FiveData d = five_data(Scalar(2), Scalar(3));
    auto zero_parts =
        decompose_by_eigenvalue(d.spec, Poly(d.vars, Field::Real), Poly(d.vars, Field::Real));
    CHECK(zero_parts.size() == 2);
    CHECK(zero_parts[0].f.is_zero());
    CHECK(zero_parts[1].g.is_zero());

    // corrupted input: a monomial mixing variables of the two eigenvalues
    Poly mixed = var("x1_1_0", d.vars) * var("x2_1_0", d.vars);
    CHECK_THROWS_AS(decompose_by_eigenvalue(d.spec, mixed, Poly(d.vars, Field::Real)),
                    std::invalid_argument);
}

TEST_CASE("worked five-variable example end to end") {
    FiveData d = five_data(Scalar(2), Scalar(3));

    // lambda1 part: h1 + mu g1 = mu * (x0 + mu x1)^3 + (x0 + mu x1)^2
    std::vector<std::string> sub1 = {"x1_1_0", "x1_1_1"};
    Modulus z2 = Modulus::mu_power(2);
    MuPoly lin1({var("x1_1_0", sub1), var("x1_1_1", sub1)});
    MuPoly cube = star_power(lin1, 3, z2);
    MuPoly mu_times_cube = reduce_mod(mu_shift(cube, 1).coeffs(), z2);
    MuPoly part1 = mu_times_cube + star_power(lin1, 2, z2);
    CHECK(part1[0] == d.f1.with_vars(sub1) - Scalar(2) * d.g1.with_vars(sub1));  // h1
    CHECK(part1[1] == d.g1.with_vars(sub1));

    // lambda2 part: (mu (y0_2)^2) * (y0_1 + mu y1_1) + (y0_1 + mu y1_1)
    std::vector<std::string> sub2 = {"x2_1_0", "x2_1_1", "x2_2_0"};
    Matrix u(3, 3);
    u.at(0, 1) = Scalar(1);
    StarSystem target(-u, z2, sub2, Field::Real);
    MuPoly zsq({var("x2_2_0", std::vector<std::string>{"x2_2_0"}).pow(2)});
    MuPoly embedded = embed(zsq, 1, target);
    MuPoly lin2({var("x2_1_0", sub2), var("x2_1_1", sub2)});
    MuPoly part2 = star_product(embedded, lin2, z2) + lin2;
    CHECK(part2[0] == d.f2.with_vars(sub2) - Scalar(3) * d.g2.with_vars(sub2));  // h2
    CHECK(part2[1] == d.g2.with_vars(sub2));
}
