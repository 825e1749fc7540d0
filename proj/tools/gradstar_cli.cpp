// Command-line surface for the gradient-equation star algebra: exact JSON in,
// exact JSON out.  Exit codes: 0 success / property true, 1 semantic false,
// 2 parse or contract error (machine-readable JSON error on stderr).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gradstar/json_io.hpp"

using namespace gradstar;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

[[noreturn]] void fail(const std::string& message) {
    std::cerr << Json{{"error", message}}.dump() << "\n";
    std::exit(2);
}

bool json_has_complex(const Json& poly) {
    for (const auto& t : poly.at("terms"))
        if (!scalar_from_json(t.at("coeff")).is_real()) return true;
    return false;
}

bool mupoly_has_complex(const Json& v) {
    for (const auto& c : v.at("coeffs"))
        if (json_has_complex(c)) return true;
    return false;
}

StarSystem with_field(const StarSystem& sys, Field field) {
    return StarSystem(sys.pencil_base, sys.modulus, sys.vars, field);
}

struct systemInputs {
    StarSystem sys;
    std::vector<MuPoly> vectors;
};

systemInputs load_system_inputs(const std::string& system_path,
                                const std::vector<std::string>& vector_paths) {
    Json sys_json = load_json(system_path);
    StarSystem sys = system_from_json(sys_json);
    Field field = sys.field;
    std::vector<Json> vecs;
    for (const auto& p : vector_paths) {
        vecs.push_back(load_json(p));
        if (mupoly_has_complex(vecs.back())) field = Field::Complex;
    }
    systemInputs out{with_field(sys, field), {}};
    for (const auto& j : vecs) out.vectors.push_back(mupoly_from_json(j, field));
    for (const auto& v : out.vectors)
        if (v.vars() != out.sys.vars)
            throw std::invalid_argument("mu-vector variables do not match the system");
    return out;
}

// ---------------------------------------------------------------------------
// verify: randomized invariant suites with a fixed seed
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    long pick(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rational rational(long max_abs = 4) {
        Rational r(pick(-max_abs, max_abs), pick(1, 3));
        r.canonicalize();
        return r;
    }
    Scalar scalar(Field field) {
        if (field == Field::Real) return Scalar(rational());
        return Scalar(rational(), rational());
    }
    Poly poly(const std::vector<std::string>& vars, Field field, long max_degree,
              long num_terms) {
        Poly p(vars, field);
        for (long t = 0; t < num_terms; ++t) {
            Poly::Exponents e(vars.size(), 0);
            long budget = pick(0, max_degree);
            for (long d = 0; d < budget && !vars.empty(); ++d)
                e[static_cast<size_t>(pick(0, static_cast<long>(vars.size()) - 1))] += 1;
            p.add_term(e, scalar(field));
        }
        return p;
    }

private:
    std::mt19937_64 eng_;
};

struct SuiteResult {
    Json properties = Json::array();
    bool all_pass = true;

    void record(const std::string& name, bool pass, const std::string& note = "") {
        Json entry{{"property", name}, {"pass", pass}};
        if (!note.empty()) entry["note"] = note;
        properties.push_back(entry);
        all_pass = all_pass && pass;
    }
};

MuPoly holomorphic_power(long k) {
    std::vector<std::string> xy = {"x", "y"};
    Scalar i(Rational(0), Rational(1));
    Poly z = Poly::variable("x", xy, Field::Complex) +
             i * Poly::variable("y", xy, Field::Complex);
    Poly zk = z.pow(k);
    return MuPoly({real_part(zk), imag_part(zk)});
}

StarSystem cr_system() {
    std::vector<std::string> xy = {"x", "y"};
    Matrix x(2, 2);
    x.at(0, 1) = Scalar(-1);
    x.at(1, 0) = Scalar(1);
    return StarSystem(x, Modulus(std::vector<Scalar>{Scalar(1), Scalar(0)}), xy, Field::Real);
}

SuiteResult run_cr_suite(uint64_t seed, long trials) {
    SuiteResult out;
    Rng rng(seed);
    std::vector<std::string> xy = {"x", "y"};
    Modulus z(std::vector<Scalar>{Scalar(1), Scalar(0)});
    StarSystem sys = cr_system();

    auto random_solution = [&] {
        Scalar i(Rational(0), Rational(1));
        Poly hol = rng.poly({"s1"}, Field::Real, 4, 3);
        Poly zc = Poly::variable("x", xy, Field::Complex) +
                  i * Poly::variable("y", xy, Field::Complex);
        Poly val = substitute(hol.with_field(Field::Complex), {{"s1", zc}});
        return MuPoly({real_part(val), imag_part(val)});
    };

    bool mult_ok = true, closure_ok = true;
    for (long t = 0; t < trials; ++t) {
        MuPoly a = random_solution(), b = random_solution();
        MuPoly prod = star_product(a, b, z);
        mult_ok = mult_ok && prod[0] == a[0] * b[0] - a[1] * b[1];
        mult_ok = mult_ok && prod[1] == a[0] * b[1] + a[1] * b[0];
        closure_ok = closure_ok && check_solution(sys, prod).is_solution;
    }
    out.record("holomorphic-multiplication-formula", mult_ok);
    out.record("closure-under-star-products", closure_ok);

    bool powers_ok = true;
    MuPoly v({Poly::variable("x", xy, Field::Real), Poly::variable("y", xy, Field::Real)});
    for (long k = 0; k <= 8; ++k)
        powers_ok = powers_ok && star_power(v, k, z) == holomorphic_power(k);
    out.record("powers-match-complex-powers", powers_ok);
    return out;
}

SuiteResult run_complex_suite(uint64_t seed, long trials) {
    SuiteResult out;
    Rng rng(seed);
    std::vector<std::string> vars = {"x0", "x1", "x2"};

    bool ring_ok = true;
    for (long t = 0; t < trials; ++t) {
        Poly a = rng.poly(vars, Field::Complex, 4, 4);
        Poly b = rng.poly(vars, Field::Complex, 4, 4);
        Poly c = rng.poly(vars, Field::Complex, 4, 4);
        ring_ok = ring_ok && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    }
    out.record("ring-axioms", ring_ok);

    bool integ_ok = true;
    for (long t = 0; t < trials; ++t) {
        Poly p = rng.poly(vars, Field::Real, 6, 6);
        integ_ok = integ_ok &&
                   integrate_exact(gradient(p)) ==
                       p - Poly::constant(p.constant_term(), vars, Field::Real);
    }
    out.record("poincare-integration-roundtrip", integ_ok);

    bool psi_ok = true;
    for (long n = 0; n <= 4 && psi_ok; ++n) {
        std::vector<std::string> block;
        for (long j = 0; j <= n; ++j) block.push_back("x" + std::to_string(j));
        for (long i = 0; i <= 6 && psi_ok; ++i)
            for (long j = 0; j <= n && psi_ok; ++j)
                psi_ok = power_coefficient(i, j, block, block, Field::Real) ==
                         power_coefficient_bell(i, j, block, block, Field::Real);
    }
    out.record("power-coefficients-multinomial-vs-bell", psi_ok);

    JordanSpecC one_block{Field::Real, {EigenBlocks{Scalar(0), {3}}}};
    bool series_ok = true;
    for (long t = 0; t < trials; ++t) {
        GenFuncSet phis = {rng.poly(gen_func_vars(1), Field::Real, 4, 3),
                           rng.poly(gen_func_vars(1), Field::Real, 4, 3),
                           rng.poly(gen_func_vars(1), Field::Real, 4, 3)};
        SolutionPair p = general_solution(one_block, phis);
        MuPoly series = reconstruct_star_series(one_block, phis);
        series_ok = series_ok && series[2] == p.g && series[1] == p.f;  // lambda = 0: h = f
        MuPoly ext = extend_nilpotent(build_matrices(one_block).u, p.f, p.g);
        series_ok = series_ok && series.drop_constants() == ext.drop_constants();
    }
    out.record("one-block-star-series", series_ok);

    JordanSpecC two_blocks{Field::Real, {EigenBlocks{Scalar(0), {2, 1}}}};
    bool multi_ok = true;
    for (long t = 0; t < trials; ++t) {
        GenFuncSet phis = {rng.poly(gen_func_vars(2), Field::Real, 3, 3),
                           rng.poly(gen_func_vars(1), Field::Real, 3, 3)};
        SolutionPair p = general_solution(two_blocks, phis);
        MuPoly series = reconstruct_star_series(two_blocks, phis);
        multi_ok = multi_ok && series[1] == p.g && series[0] == p.f;
    }
    out.record("multi-block-star-series", multi_ok);

    StarSystem nil = nilpotent_system(two_blocks);
    bool closure_ok = true, roundtrip_ok = true;
    for (long t = 0; t < trials; ++t) {
        auto rand_sol = [&] {
            GenFuncSet phis = {rng.poly(gen_func_vars(2), Field::Real, 3, 3),
                               rng.poly(gen_func_vars(1), Field::Real, 3, 3)};
            SolutionPair p = general_solution(two_blocks, phis);
            return extend_nilpotent(build_matrices(two_blocks).u, p.f, p.g);
        };
        MuPoly a = rand_sol(), b = rand_sol();
        closure_ok = closure_ok && check_solution(nil, star_product(a, b, nil.modulus)).is_solution;
        roundtrip_ok = roundtrip_ok && check_solution(nil, a).is_solution;
    }
    out.record("nilpotent-closure", closure_ok);
    out.record("nilpotent-extension-roundtrip", roundtrip_ok);

    bool embe_ok = true;
    {
        // embed powers of the trailing-block variable into blocks [2,1]
        std::vector<std::string> sub = {"x1_2_0"};
        StarSystem target = nilpotent_system(two_blocks);
        for (long k = 1; k <= 4; ++k) {
            MuPoly v({Poly::variable("x1_2_0", sub, Field::Real).pow(k)});
            embe_ok = embe_ok && check_solution(target, embed(v, 1, target)).is_solution;
        }
    }
    out.record("embedding-preserves-solutions", embe_ok);
    return out;
}

SuiteResult run_real_suite(uint64_t seed, long trials) {
    SuiteResult out;
    Rng rng(seed);

    bool basis_ok = true;
    std::string basis_note;
    for (size_t n = 0; n <= 3; ++n) {
        try {
            basis_matrix(n);
        } catch (const std::exception& e) {
            basis_ok = false;
            basis_note = e.what();
        }
    }
    out.record("basis-conjugation-and-power-formula", basis_ok, basis_note);

    bool recon_ok = true;
    for (size_t n = 0; n <= 2 && recon_ok; ++n) {
        JordanSpecR spec{Rational(0), Rational(1), {n + 1}};
        Matrix b = basis_matrix(n).b;
        std::vector<std::string> xv = spec.var_names();
        std::vector<std::string> sv = s_var_names(spec);
        std::map<std::string, Poly> to_s;
        for (size_t i = 0; i < xv.size(); ++i) {
            Poly image(sv, Field::Real);
            for (size_t j = 0; j < sv.size(); ++j)
                if (!b.at(i, j).is_zero())
                    image += b.at(i, j) * Poly::variable(sv[j], sv, Field::Real);
            to_s.emplace(xv[i], image);
        }
        for (size_t k = 0; k <= n && recon_ok; ++k)
            for (size_t deg = 0; deg <= 3 && recon_ok; ++deg) {
                std::map<std::pair<size_t, size_t>, Scalar> table{{{k, deg}, Scalar(1)}};
                MuPoly series = reconstruct_real(table, n, deg);
                Poly phi(gen_func_vars(1), Field::Complex);
                phi.add_term({static_cast<int>(deg)}, Scalar(1));
                RealComponent comp = real_component(phi, k, spec);
                recon_ok = recon_ok && series[0] == substitute(comp.f, to_s) &&
                           series[2 * n + 1] == substitute(comp.g, to_s);
            }
    }
    out.record("single-block-series-vs-direct", recon_ok);

    JordanSpecR spec1{Rational(0), Rational(1), {2}};
    StarSystem ext = real_extended_system(spec1);
    bool closure_ok = true, roundtrip_ok = true;
    for (long t = 0; t < trials; ++t) {
        auto rand_sol = [&] {
            std::vector<Poly> phis = {rng.poly(gen_func_vars(1), Field::Complex, 3, 3),
                                      rng.poly(gen_func_vars(1), Field::Complex, 3, 3)};
            SolutionPair p = real_general_solution(phis, spec1);
            return extend_real(spec1, p.f, p.g);
        };
        MuPoly a = rand_sol(), b = rand_sol();
        MuPoly prod = star_product(a, b, ext.modulus);
        closure_ok = closure_ok && check_solution(ext, prod).is_solution;
        roundtrip_ok = roundtrip_ok && check_solution(ext, a).is_solution;
    }
    out.record("real-closure", closure_ok);
    out.record("real-extension-roundtrip", roundtrip_ok);

    bool degen_ok = true;
    {
        JordanSpecR cr{Rational(0), Rational(1), {1}};
        Modulus z = Modulus::circle_power(1);
        for (long t = 0; t < trials; ++t) {
            std::vector<Poly> pa = {rng.poly(gen_func_vars(1), Field::Complex, 3, 3)};
            std::vector<Poly> pb = {rng.poly(gen_func_vars(1), Field::Complex, 3, 3)};
            SolutionPair a = real_general_solution(pa, cr);
            SolutionPair b = real_general_solution(pb, cr);
            MuPoly prod = star_product(extend_real(cr, a.f, a.g), extend_real(cr, b.f, b.g), z);
            degen_ok = degen_ok && prod[0] == a.f * b.f - a.g * b.g &&
                       prod[1] == a.f * b.g + a.g * b.f;
        }
    }
    out.record("plane-case-degeneration", degen_ok);

    bool hyp_ok = true;
    std::string hyp_note;
    {
        JordanSpecR multi{Rational(0), Rational(1), {2, 1}};
        std::vector<Poly> phis = {rng.poly(gen_func_vars(2), Field::Complex, 2, 3),
                                  rng.poly(gen_func_vars(1), Field::Complex, 2, 2)};
        HypothesisReport r1 = hypothesis_check(multi, phis, 3);
        HypothesisReport r2 = hypothesis_check(multi, phis, 3);
        hyp_ok = r1.agree == r2.agree && r1.detail == r2.detail;
        hyp_note = r1.detail;
    }
    out.record("hypothesis-harness-deterministic", hyp_ok, hyp_note);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact star-algebra toolkit for gradient equations"};
    app.require_subcommand(1);

    std::string system_path, a_path, b_path, v_path, matrix_path, f_path, g_path, spec_path,
        phis_path, coeffs_path, target_path, suite;
    long k_power = 0;
    size_t truncation = 8;
    uint64_t seed = 1;
    long trials = 25;

    auto* star_mul = app.add_subcommand("star-mul", "star product of two mu-vectors");
    star_mul->add_option("--system", system_path)->required();
    star_mul->add_option("--a", a_path)->required();
    star_mul->add_option("--b", b_path)->required();

    auto* star_pow = app.add_subcommand("star-pow", "star power of a mu-vector");
    star_pow->add_option("--system", system_path)->required();
    star_pow->add_option("--v", v_path)->required();
    star_pow->add_option("--k", k_power)->required();

    auto* check = app.add_subcommand("check", "test whether a mu-vector solves the system");
    check->add_option("--system", system_path)->required();
    check->add_option("--v", v_path)->required();

    auto* check_grad = app.add_subcommand("check-grad", "test grad f = M grad g");
    check_grad->add_option("--matrix", matrix_path)->required();
    check_grad->add_option("--f", f_path)->required();
    check_grad->add_option("--g", g_path)->required();

    auto* extend = app.add_subcommand("extend", "extend a solution pair to a full mu-vector");
    extend->add_option("--spec", spec_path)->required();
    extend->add_option("--f", f_path)->required();
    extend->add_option("--g", g_path)->required();

    auto* embed_cmd = app.add_subcommand("embed", "embed a subsystem solution");
    embed_cmd->add_option("--v", v_path)->required();
    embed_cmd->add_option("--target", target_path)->required();

    auto* gensol = app.add_subcommand("gensol", "general solution from generating functions");
    gensol->add_option("--spec", spec_path)->required();
    gensol->add_option("--phis", phis_path)->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "star-power-series form of a solution");
    reconstruct->add_option("--spec", spec_path)->required();
    reconstruct->add_option("--phis", phis_path);
    reconstruct->add_option("--coeffs", coeffs_path);
    reconstruct->add_option("--truncation", truncation);

    auto* real_basis = app.add_subcommand("real-basis", "basis matrix of the s coordinates");
    size_t basis_n = 0;
    real_basis->add_option("--n", basis_n)->required();

    auto* decompose = app.add_subcommand("decompose", "split a solution by eigenvalue");
    decompose->add_option("--spec", spec_path)->required();
    decompose->add_option("--f", f_path)->required();
    decompose->add_option("--g", g_path)->required();

    auto* hypothesis = app.add_subcommand("hypothesis", "multi-block real series harness");
    hypothesis->add_option("--spec", spec_path)->required();
    hypothesis->add_option("--phis", phis_path)->required();
    hypothesis->add_option("--truncation", truncation);

    auto* verify = app.add_subcommand("verify", "randomized invariant suites");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"cr", "complex", "real"}));
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials);

    CLI11_PARSE(app, argc, argv);

    try {
        if (star_mul->parsed()) {
            systemInputs in = load_system_inputs(system_path, {a_path, b_path});
            print_json(mupoly_to_json(star_product(in.vectors[0], in.vectors[1], in.sys.modulus)));
            return 0;
        }
        if (star_pow->parsed()) {
            systemInputs in = load_system_inputs(system_path, {v_path});
            print_json(mupoly_to_json(star_power(in.vectors[0], k_power, in.sys.modulus)));
            return 0;
        }
        if (check->parsed()) {
            systemInputs in = load_system_inputs(system_path, {v_path});
            SolutionCheck result = check_solution(in.sys, in.vectors[0]);
            Json quotient = Json::array();
            for (const auto& q : result.quotient) quotient.push_back(oneform_to_json(q));
            print_json(Json{{"is_solution", result.is_solution}, {"quotient", quotient}});
            return result.is_solution ? 0 : 1;
        }
        if (check_grad->parsed()) {
            Matrix m = matrix_from_json(load_json(matrix_path));
            Json fj = load_json(f_path), gj = load_json(g_path);
            Field field = (!m.is_real() || json_has_complex(fj) || json_has_complex(gj))
                              ? Field::Complex
                              : Field::Real;
            bool ok = verify_gradient(m, poly_from_json(fj, field), poly_from_json(gj, field));
            print_json(Json{{"ok", ok}});
            return ok ? 0 : 1;
        }
        if (extend->parsed()) {
            Json spec_json = load_json(spec_path);
            if (spec_is_real(spec_json)) {
                JordanSpecR spec = spec_r_from_json(spec_json);
                if (!spec.is_normalized())
                    throw std::invalid_argument("extend: real spec must have alpha 0, beta 1");
                Poly f = poly_from_json(load_json(f_path), Field::Real);
                Poly g = poly_from_json(load_json(g_path), Field::Real);
                MuPoly v = extend_real(spec, f, g);
                print_json(Json{{"system", system_to_json(real_extended_system(spec))},
                                {"V", mupoly_to_json(v)}});
                return 0;
            }
            JordanSpecC spec = spec_c_from_json(spec_json);
            if (spec.eigenvalues.size() != 1)
                throw std::invalid_argument("extend: complex spec must have one eigenvalue");
            Poly f = poly_from_json(load_json(f_path), spec.field);
            Poly g = poly_from_json(load_json(g_path), spec.field);
            BuiltSystem built = build_matrices(spec);
            SolutionPair shifted = eigen_shift(f, g, spec.eigenvalues[0].lambda,
                                               ShiftDirection::Forward);
            MuPoly v = extend_nilpotent(built.u, shifted.f, shifted.g);
            print_json(Json{{"system", system_to_json(nilpotent_system(spec))},
                            {"V", mupoly_to_json(v)}});
            return 0;
        }
        if (embed_cmd->parsed()) {
            StarSystem target = system_from_json(load_json(target_path));
            Json vj = load_json(v_path);
            Field field = mupoly_has_complex(vj) ? Field::Complex : target.field;
            if (field == Field::Complex) target = with_field(target, field);
            MuPoly v = mupoly_from_json(vj, field);
            size_t s = target.modulus.degree() - v.length();
            print_json(mupoly_to_json(embed(v, s, target)));
            return 0;
        }
        if (gensol->parsed()) {
            Json spec_json = load_json(spec_path);
            Json phis_json = load_json(phis_path);
            if (spec_is_real(spec_json)) {
                JordanSpecR spec = spec_r_from_json(spec_json);
                std::vector<Poly> phis;
                for (const auto& p : phis_json) phis.push_back(poly_from_json(p, Field::Complex));
                print_json(solution_pair_to_json(real_general_solution(phis, spec)));
                return 0;
            }
            JordanSpecC spec = spec_c_from_json(spec_json);
            if (spec.eigenvalues.size() == 1) {
                GenFuncSet phis;
                for (const auto& p : phis_json) phis.push_back(poly_from_json(p, spec.field));
                print_json(solution_pair_to_json(general_solution(spec, phis)));
                return 0;
            }
            std::vector<GenFuncSet> sets;
            for (const auto& s : phis_json) {
                GenFuncSet phis;
                for (const auto& p : s) phis.push_back(poly_from_json(p, spec.field));
                sets.push_back(std::move(phis));
            }
            print_json(solution_pair_to_json(general_solution_multi(spec, sets)));
            return 0;
        }
        if (reconstruct->parsed()) {
            Json spec_json = load_json(spec_path);
            if (spec_is_real(spec_json)) {
                JordanSpecR spec = spec_r_from_json(spec_json);
                if (spec.half_sizes.size() != 1)
                    throw std::invalid_argument(
                        "reconstruct: real spec must have a single block (see hypothesis)");
                if (coeffs_path.empty())
                    throw std::invalid_argument("reconstruct: real spec needs --coeffs");
                auto table = coeff_table_from_json(load_json(coeffs_path));
                size_t n = spec.half_sizes[0] - 1;
                MuPoly v = reconstruct_real(table, n, truncation);
                print_json(Json{{"system", system_to_json(s_system(n))}, {"V", mupoly_to_json(v)}});
                return 0;
            }
            JordanSpecC spec = spec_c_from_json(spec_json);
            if (phis_path.empty())
                throw std::invalid_argument("reconstruct: complex spec needs --phis");
            GenFuncSet phis;
            for (const auto& p : load_json(phis_path))
                phis.push_back(poly_from_json(p, spec.field));
            MuPoly v = reconstruct_star_series(spec, phis);
            print_json(Json{{"system", system_to_json(nilpotent_system(spec))},
                            {"V", mupoly_to_json(v)}});
            return 0;
        }
        if (real_basis->parsed()) {
            RealBasis basis = basis_matrix(basis_n);
            print_json(Json{{"n", basis.n}, {"B", matrix_to_json(basis.b)}});
            return 0;
        }
        if (decompose->parsed()) {
            JordanSpecC spec = spec_c_from_json(load_json(spec_path));
            Poly f = poly_from_json(load_json(f_path), spec.field);
            Poly g = poly_from_json(load_json(g_path), spec.field);
            Json parts = Json::array();
            auto components = decompose_by_eigenvalue(spec, f, g);
            for (size_t k = 0; k < components.size(); ++k)
                parts.push_back(Json{{"lambda", scalar_to_json(spec.eigenvalues[k].lambda)},
                                     {"f", poly_to_json(components[k].f)},
                                     {"g", poly_to_json(components[k].g)}});
            print_json(parts);
            return 0;
        }
        if (hypothesis->parsed()) {
            JordanSpecR spec = spec_r_from_json(load_json(spec_path));
            std::vector<Poly> phis;
            for (const auto& p : load_json(phis_path))
                phis.push_back(poly_from_json(p, Field::Complex));
            HypothesisReport report = hypothesis_check(spec, phis, truncation);
            print_json(Json{{"agree", report.agree},
                            {"unknowns", report.unknowns},
                            {"equations", report.equations},
                            {"detail", report.detail}});
            return 0;
        }
        if (verify->parsed()) {
            SuiteResult result;
            if (suite == "cr") result = run_cr_suite(seed, trials);
            if (suite == "complex") result = run_complex_suite(seed, trials);
            if (suite == "real") result = run_real_suite(seed, trials);
            print_json(Json{{"suite", suite},
                            {"seed", seed},
                            {"trials", trials},
                            {"properties", result.properties},
                            {"all_pass", result.all_pass}});
            return result.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        fail(e.what());
    }
    return 2;
}
