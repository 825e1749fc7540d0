#include "gradstar/jordan_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gradstar {

void JordanSpecC::validate() const {
    if (eigenvalues.empty()) throw std::invalid_argument("spec has no eigenvalues");
    for (size_t a = 0; a < eigenvalues.size(); ++a) {
        const auto& e = eigenvalues[a];
        if (field == Field::Real && !e.lambda.is_real())
            throw std::invalid_argument("complex eigenvalue in real-mode spec");
        if (e.block_sizes.empty()) throw std::invalid_argument("eigenvalue with no blocks");
        for (size_t i = 0; i < e.block_sizes.size(); ++i) {
            if (e.block_sizes[i] == 0) throw std::invalid_argument("block size must be positive");
            if (i > 0 && e.block_sizes[i] > e.block_sizes[i - 1])
                throw std::invalid_argument("block sizes must be weakly decreasing");
        }
        for (size_t b = a + 1; b < eigenvalues.size(); ++b)
            if (eigenvalues[b].lambda == e.lambda)
                throw std::invalid_argument("eigenvalues must be pairwise distinct");
    }
}

size_t JordanSpecC::dimension() const {
    size_t n = 0;
    for (const auto& e : eigenvalues)
        for (size_t s : e.block_sizes) n += s;
    return n;
}

std::vector<std::string> JordanSpecC::var_names() const {
    std::vector<std::string> names;
    names.reserve(dimension());
    for (size_t k = 0; k < eigenvalues.size(); ++k)
        for (size_t b = 0; b < eigenvalues[k].block_sizes.size(); ++b)
            for (size_t j = 0; j < eigenvalues[k].block_sizes[b]; ++j)
                names.push_back("x" + std::to_string(k + 1) + "_" + std::to_string(b + 1) + "_" +
                                std::to_string(j));
    return names;
}

size_t JordanSpecC::nu(size_t eigen_index, size_t k) const {
    const auto& sizes = eigenvalues.at(eigen_index).block_sizes;
    size_t count = 0;
    for (size_t s : sizes)
        if (s >= k + 1) ++count;
    return count;
}

BuiltSystem build_matrices(const JordanSpecC& spec) {
    spec.validate();
    size_t n = spec.dimension();
    BuiltSystem out{Matrix(n, n), Matrix(n, n), spec.var_names()};
    size_t off = 0;
    for (const auto& e : spec.eigenvalues) {
        for (size_t size : e.block_sizes) {
            for (size_t j = 0; j < size; ++j) {
                out.m.at(off + j, off + j) = e.lambda;
                if (j + 1 < size) {
                    out.m.at(off + j, off + j + 1) = Scalar(1);
                    out.u.at(off + j, off + j + 1) = Scalar(1);
                }
            }
            off += size;
        }
    }
    return out;
}

SolutionPair eigen_shift(const Poly& f, const Poly& g, const Scalar& lambda,
                         ShiftDirection direction) {
    if (direction == ShiftDirection::Forward) return {f - lambda * g, g};
    return {f + lambda * g, g};
}

bool verify_gradient(const Matrix& m, const Poly& f, const Poly& g) {
    if (f.vars() != g.vars() || f.field() != g.field())
        throw std::invalid_argument("verify_gradient: incompatible polynomials");
    if (m.rows() != f.vars().size() || !m.is_square())
        throw std::invalid_argument("verify_gradient: matrix size does not match variables");
    return gradient(f) == apply(m, gradient(g));
}

namespace {

size_t nilpotency_index(const Matrix& u) {
    if (!u.is_square()) throw std::invalid_argument("nilpotency index of a non-square matrix");
    Matrix p = u;
    Matrix zero(u.rows(), u.cols());
    if (p == zero) return 1;
    for (size_t r = 2; r <= u.rows(); ++r) {
        p = p * u;
        if (p == zero) return r;
    }
    throw std::invalid_argument("matrix is not nilpotent");
}

}  // namespace

MuPoly extend_nilpotent(const Matrix& u, const Poly& f, const Poly& g) {
    size_t r = nilpotency_index(u);
    if (!verify_gradient(u, f, g))
        throw std::invalid_argument("extend_nilpotent: (f, g) does not solve grad f = U grad g");
    std::vector<Poly> coeffs(r, Poly(f.vars(), f.field()));
    coeffs[r - 1] = g;
    if (r >= 2) coeffs[r - 2] = f;
    OneForm w = gradient(g);
    for (size_t step = 1; step + 1 <= r; ++step) {
        w = apply(u, w);  // now grad V_i for i = r - 1 - step
        size_t i = r - 1 - step;
        if (i == r - 2) continue;  // slot holds the given f verbatim
        coeffs[i] = integrate_exact(w);
    }
    return MuPoly(std::move(coeffs));
}

std::vector<std::string> gen_func_vars(size_t arity) {
    std::vector<std::string> v;
    v.reserve(arity);
    for (size_t t = 1; t <= arity; ++t) v.push_back("s" + std::to_string(t));
    return v;
}

std::vector<Poly> mu_expand(const Poly& p, const std::vector<std::vector<Poly>>& images) {
    if (images.size() != p.vars().size())
        throw std::invalid_argument("mu_expand: image count does not match variables");
    for (const auto& img : images)
        if (img.empty()) throw std::invalid_argument("mu_expand: empty image");
    const auto& tvars = images.empty() ? std::vector<std::string>{} : images[0][0].vars();
    Field field = images.empty() ? p.field() : images[0][0].field();

    auto mul = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
        std::vector<Poly> prod(a.size() + b.size() - 1, Poly(tvars, field));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                prod[i + j] += a[i] * b[j];
            }
        }
        return prod;
    };

    std::vector<Poly> acc(1, Poly(tvars, field));
    for (const auto& [e, c] : p.terms()) {
        std::vector<Poly> term(1, Poly::constant(c, tvars, field));
        for (size_t t = 0; t < e.size(); ++t)
            for (int rep = 0; rep < e[t]; ++rep) term = mul(term, images[t]);
        if (term.size() > acc.size()) acc.resize(term.size(), Poly(tvars, field));
        for (size_t d = 0; d < term.size(); ++d) acc[d] += term[d];
    }
    return acc;
}

namespace {

// mu-coefficient list of the block linear form x_0 + x_1 mu + ... + x_n mu^n.
std::vector<Poly> block_linear_form(const std::vector<std::string>& block_vars,
                                    const std::vector<std::string>& ambient, Field field) {
    std::vector<Poly> v;
    v.reserve(block_vars.size());
    for (const auto& name : block_vars) v.push_back(Poly::variable(name, ambient, field));
    return v;
}

// Variable names of block b (0-based) of eigenvalue k (0-based).
std::vector<std::string> block_var_names(const JordanSpecC& spec, size_t k, size_t b) {
    std::vector<std::string> names;
    size_t size = spec.eigenvalues[k].block_sizes[b];
    names.reserve(size);
    for (size_t j = 0; j < size; ++j)
        names.push_back("x" + std::to_string(k + 1) + "_" + std::to_string(b + 1) + "_" +
                        std::to_string(j));
    return names;
}

void require_single_eigenvalue(const JordanSpecC& spec) {
    spec.validate();
    if (spec.eigenvalues.size() != 1)
        throw std::invalid_argument("operation requires a single-eigenvalue spec");
}

// k-th mu-derivative at 0, as k! times the mu^k coefficient.
Poly mu_derivative_at_zero(const std::vector<Poly>& coeffs, long k,
                           const std::vector<std::string>& vars, Field field) {
    if (k < 0 || static_cast<size_t>(k) >= coeffs.size()) return Poly(vars, field);
    return Scalar(factorial(k)) * coeffs[static_cast<size_t>(k)];
}

SolutionPair general_solution_single(const JordanSpecC& spec, const GenFuncSet& phis,
                                     const std::vector<std::string>& ambient) {
    const auto& eig = spec.eigenvalues[0];
    size_t n1 = eig.block_sizes[0] - 1;
    if (phis.size() != n1 + 1)
        throw std::invalid_argument("general_solution: need exactly n1 + 1 generating functions");

    Poly f(ambient, spec.field), g(ambient, spec.field);
    for (size_t k = 0; k <= n1; ++k) {
        size_t arity = spec.nu(0, k);
        if (phis[k].vars() != gen_func_vars(arity))
            throw std::invalid_argument("general_solution: phi_" + std::to_string(k) +
                                        " must use variables s1..s" + std::to_string(arity));
        if (phis[k].field() != spec.field)
            throw std::invalid_argument("general_solution: phi field-mode mismatch");
        std::vector<std::vector<Poly>> images;
        images.reserve(arity);
        for (size_t t = 0; t < arity; ++t)
            images.push_back(block_linear_form(block_var_names(spec, 0, t), ambient, spec.field));
        std::vector<Poly> coeffs = mu_expand(phis[k], images);
        Poly gk = mu_derivative_at_zero(coeffs, static_cast<long>(k), ambient, spec.field);
        Poly hk = Scalar(Rational(static_cast<long>(k))) *
                  mu_derivative_at_zero(coeffs, static_cast<long>(k) - 1, ambient, spec.field);
        g += gk;
        f += eig.lambda * gk + hk;
    }
    return {f, g};
}

}  // namespace

SolutionPair general_solution(const JordanSpecC& spec, const GenFuncSet& phis) {
    require_single_eigenvalue(spec);
    std::vector<std::string> ambient = spec.var_names();
    SolutionPair p = general_solution_single(spec, phis, ambient);
    if (!verify_gradient(build_matrices(spec).m, p.f, p.g))
        throw std::logic_error("general_solution: output failed the gradient equation");
    return p;
}

SolutionPair general_solution_multi(const JordanSpecC& spec,
                                    const std::vector<GenFuncSet>& phis) {
    spec.validate();
    if (phis.size() != spec.eigenvalues.size())
        throw std::invalid_argument("general_solution_multi: one phi set per eigenvalue required");
    std::vector<std::string> ambient = spec.var_names();
    Poly f(ambient, spec.field), g(ambient, spec.field);
    for (size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        JordanSpecC sub{spec.field, {spec.eigenvalues[k]}};
        // Component solutions depend only on this eigenvalue's variables, so
        // they can be built in the subspace and lifted.
        std::vector<std::string> sub_vars;
        for (size_t b = 0; b < spec.eigenvalues[k].block_sizes.size(); ++b) {
            auto bv = block_var_names(spec, k, b);
            sub_vars.insert(sub_vars.end(), bv.begin(), bv.end());
        }
        SolutionPair sub_pair = general_solution_single(sub, phis[k], sub_vars);
        f += sub_pair.f.with_vars(ambient);
        g += sub_pair.g.with_vars(ambient);
    }
    if (!verify_gradient(build_matrices(spec).m, f, g))
        throw std::logic_error("general_solution_multi: output failed the gradient equation");
    return {f, g};
}

Poly power_coefficient(long i, long j, const std::vector<std::string>& block_vars,
                       const std::vector<std::string>& ambient_vars, Field field) {
    if (i < 0 || j < 0) throw std::invalid_argument("power_coefficient: negative index");
    long n = static_cast<long>(block_vars.size()) - 1;
    if (n < 0) throw std::invalid_argument("power_coefficient: empty block");
    Poly out(ambient_vars, field);
    // Sum over a_0..a_n with sum a = i and sum t*a_t = j of the multinomial
    // i!/(a_0! ... a_n!) x^a.
    std::vector<long> a(static_cast<size_t>(n) + 1, 0);
    auto emit = [&](long a0) {
        a[0] = a0;
        Rational coef = factorial(i);
        for (long t = 0; t <= n; ++t) coef /= factorial(a[static_cast<size_t>(t)]);
        Poly::Exponents e(ambient_vars.size(), 0);
        for (long t = 0; t <= n; ++t) {
            if (a[static_cast<size_t>(t)] == 0) continue;
            auto it = std::find(ambient_vars.begin(), ambient_vars.end(),
                                block_vars[static_cast<size_t>(t)]);
            if (it == ambient_vars.end())
                throw std::invalid_argument("power_coefficient: block variable not in ambient list");
            e[static_cast<size_t>(it - ambient_vars.begin())] =
                static_cast<int>(a[static_cast<size_t>(t)]);
        }
        out.add_term(e, Scalar(coef));
    };
    // Enumerate minor multiplicities a_1..a_n with weight sum j, count <= i.
    std::function<void(long, long, long)> rec = [&](long t, long weight_left, long count_left) {
        if (t > n || weight_left == 0) {
            if (weight_left == 0) emit(count_left);
            return;
        }
        long max_mult = std::min(weight_left / t, count_left);
        for (long m = 0; m <= max_mult; ++m) {
            a[static_cast<size_t>(t)] = m;
            rec(t + 1, weight_left - m * t, count_left - m);
        }
        a[static_cast<size_t>(t)] = 0;
    };
    if (j == 0) {
        emit(i);
        return out;
    }
    rec(1, j, i);
    return out;
}

Poly power_coefficient_bell(long i, long j, const std::vector<std::string>& block_vars,
                            const std::vector<std::string>& ambient_vars, Field field) {
    if (i < 0 || j < 0) throw std::invalid_argument("power_coefficient: negative index");
    long n = static_cast<long>(block_vars.size()) - 1;
    if (n < 0) throw std::invalid_argument("power_coefficient: empty block");
    auto var_poly = [&](long t) {
        return Poly::variable(block_vars[static_cast<size_t>(t)], ambient_vars, field);
    };
    Poly out(ambient_vars, field);
    for (long s = 0; s <= j; ++s) {
        // Partial Bell polynomial B_{j,s} evaluated at (1! x_1, 2! x_2, ...):
        // sum over partitions of j into s parts of sizes <= j-s+1 of
        // s!/(prod a_l!) prod x_l^{a_l}.
        Poly bell(ambient_vars, field);
        long maxpart = j - s + 1;
        std::vector<long> a(static_cast<size_t>(maxpart) + 1, 0);
        std::function<void(long, long, long)> rec = [&](long l, long weight_left, long parts_left) {
            if (weight_left == 0 && parts_left == 0) {
                Rational coef = factorial(s);
                Poly::Exponents e(ambient_vars.size(), 0);
                bool ok = true;
                for (long t = 1; t <= maxpart; ++t) {
                    coef /= factorial(a[static_cast<size_t>(t)]);
                    if (a[static_cast<size_t>(t)] == 0) continue;
                    if (t > n) {
                        ok = false;
                        break;
                    }
                    auto it = std::find(ambient_vars.begin(), ambient_vars.end(),
                                        block_vars[static_cast<size_t>(t)]);
                    e[static_cast<size_t>(it - ambient_vars.begin())] =
                        static_cast<int>(a[static_cast<size_t>(t)]);
                }
                if (ok) bell.add_term(e, Scalar(coef));
                return;
            }
            if (l > maxpart || weight_left <= 0 || parts_left <= 0) return;
            long max_mult = std::min(weight_left / l, parts_left);
            for (long m = 0; m <= max_mult; ++m) {
                a[static_cast<size_t>(l)] = m;
                rec(l + 1, weight_left - m * l, parts_left - m);
            }
            a[static_cast<size_t>(l)] = 0;
        };
        if (j == 0 && s == 0) {
            bell = Poly::constant(Scalar(1), ambient_vars, field);
        } else {
            rec(1, j, s);
        }
        if (bell.is_zero()) continue;
        Poly head = (s > i) ? Poly(ambient_vars, field)
                            : Poly::constant(Scalar(binomial(i, s)), ambient_vars, field) *
                                  var_poly(0).pow(i - s);
        out += head * bell;
    }
    return out;
}

Poly power_coefficient_multi(const std::vector<long>& index, long j, const JordanSpecC& spec) {
    require_single_eigenvalue(spec);
    size_t r = index.size();
    const auto& sizes = spec.eigenvalues[0].block_sizes;
    if (r == 0 || r > sizes.size())
        throw std::invalid_argument("power_coefficient_multi: bad multi-index length");
    long nr = static_cast<long>(sizes[r - 1]) - 1;
    if (j < 0 || j > nr)
        throw std::invalid_argument("power_coefficient_multi: j out of range");
    std::vector<std::string> ambient = spec.var_names();
    // Convolution over j_1 + ... + j_r = j of per-block coefficients.
    std::vector<Poly> acc{Poly::constant(Scalar(1), ambient, spec.field)};
    for (size_t t = 0; t < r; ++t) {
        std::vector<Poly> next(static_cast<size_t>(j) + 1, Poly(ambient, spec.field));
        for (size_t jt = 0; jt <= static_cast<size_t>(j); ++jt) {
            Poly p = power_coefficient(index[t], static_cast<long>(jt),
                                       block_var_names(spec, 0, t), ambient, spec.field);
            if (p.is_zero()) continue;
            for (size_t prev = 0; prev + jt <= static_cast<size_t>(j) && prev < acc.size(); ++prev) {
                if (acc[prev].is_zero()) continue;
                next[prev + jt] += acc[prev] * p;
            }
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(j)];
}

MuPoly nested_star_power(const JordanSpecC& spec, const std::vector<long>& index) {
    require_single_eigenvalue(spec);
    const auto& sizes = spec.eigenvalues[0].block_sizes;
    size_t r = index.size();
    if (r == 0 || r > sizes.size())
        throw std::invalid_argument("nested_star_power: bad multi-index length");
    std::vector<std::string> ambient = spec.var_names();

    auto block_power = [&](size_t t) {
        Modulus z = Modulus::mu_power(sizes[t]);
        MuPoly lin(block_linear_form(block_var_names(spec, 0, t), ambient, spec.field));
        return star_power(lin, index[t], z);
    };

    MuPoly w = block_power(r - 1);
    for (size_t t = r - 1; t-- > 0;) {
        w = mu_shift(w, sizes[t] - sizes[t + 1]);
        Modulus z = Modulus::mu_power(sizes[t]);
        w = reduce_mod(mu_multiply(block_power(t), w), z);
    }
    return w;
}

MuPoly reconstruct_star_series(const JordanSpecC& spec, const GenFuncSet& phis) {
    require_single_eigenvalue(spec);
    const auto& eig = spec.eigenvalues[0];
    const auto& sizes = eig.block_sizes;
    size_t n1 = sizes[0] - 1;
    if (phis.size() != n1 + 1)
        throw std::invalid_argument("reconstruct_star_series: need exactly n1 + 1 phis");
    std::vector<std::string> ambient = spec.var_names();

    // Group the monomial coefficients c_{I,j} by multi-index I; for each I of
    // length r, j runs over the window where exactly r blocks are active.
    std::map<std::vector<long>, std::vector<Scalar>> series_constants;
    for (size_t j = 0; j <= n1; ++j) {
        size_t r = spec.nu(0, j);
        const Poly& phi = phis[j];
        if (phi.vars() != gen_func_vars(r))
            throw std::invalid_argument("reconstruct_star_series: phi_" + std::to_string(j) +
                                        " must use variables s1..s" + std::to_string(r));
        if (phi.field() != spec.field)
            throw std::invalid_argument("reconstruct_star_series: phi field-mode mismatch");
        long nr = static_cast<long>(sizes[r - 1]) - 1;
        for (const auto& [e, c] : phi.terms()) {
            std::vector<long> index(e.begin(), e.end());
            auto it = series_constants
                          .try_emplace(index, std::vector<Scalar>(n1 + 1, Scalar(0)))
                          .first;
            // The constant solution carries j! c_{I,j} at slot n_r - j.
            it->second[static_cast<size_t>(nr) - j] += Scalar(factorial(static_cast<long>(j))) * c;
        }
    }

    Modulus z = Modulus::mu_power(n1 + 1);
    MuPoly total = MuPoly::zero(n1 + 1, ambient, spec.field);
    for (const auto& [index, consts] : series_constants) {
        MuPoly b = MuPoly::constants(consts, ambient, spec.field);
        total += star_product(b, nested_star_power(spec, index), z);
    }
    return total;
}

std::vector<SolutionPair> decompose_by_eigenvalue(const JordanSpecC& spec, const Poly& f,
                                                  const Poly& g) {
    spec.validate();
    std::vector<std::string> ambient = spec.var_names();
    if (f.vars() != ambient || g.vars() != ambient)
        throw std::invalid_argument("decompose_by_eigenvalue: variables must match the spec");
    BuiltSystem built = build_matrices(spec);

    // Which eigenvalue each variable position belongs to.
    std::vector<size_t> owner(ambient.size());
    {
        size_t pos = 0;
        for (size_t k = 0; k < spec.eigenvalues.size(); ++k)
            for (size_t s : spec.eigenvalues[k].block_sizes)
                for (size_t j = 0; j < s; ++j) owner[pos++] = k;
    }

    // A monomial of a genuine solution never mixes variables of distinct
    // eigenvalues: for M = diag(l1, l2) and f containing x y, the two mixed
    // second partials of g would have to be both (1/l1) and (1/l2).
    auto split = [&](const Poly& p) {
        std::vector<Poly> parts(spec.eigenvalues.size(), Poly(ambient, spec.field));
        for (const auto& [e, c] : p.terms()) {
            std::set<size_t> owners;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) owners.insert(owner[i]);
            if (owners.size() > 1)
                throw std::invalid_argument(
                    "decompose_by_eigenvalue: monomial mixes variables of distinct eigenvalues");
            size_t k = owners.empty() ? 0 : *owners.begin();
            parts[k].add_term(e, c);
        }
        return parts;
    };

    std::vector<Poly> fparts = split(f), gparts = split(g);
    if (!verify_gradient(built.m, f, g))
        throw std::invalid_argument("decompose_by_eigenvalue: input is not a solution");
    std::vector<SolutionPair> out;
    out.reserve(spec.eigenvalues.size());
    size_t pos = 0;
    for (size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        size_t dim = 0;
        for (size_t s : spec.eigenvalues[k].block_sizes) dim += s;
        std::vector<size_t> idx(dim);
        for (size_t i = 0; i < dim; ++i) idx[i] = pos + i;
        Matrix sub = built.m.select(idx, idx);
        std::vector<std::string> sub_vars(ambient.begin() + static_cast<long>(pos),
                                          ambient.begin() + static_cast<long>(pos + dim));
        SolutionPair pair{fparts[k].with_vars(sub_vars), gparts[k].with_vars(sub_vars)};
        if (!verify_gradient(sub, pair.f, pair.g))
            throw std::logic_error("decompose_by_eigenvalue: component failed its subsystem");
        out.push_back(std::move(pair));
        pos += dim;
    }
    return out;
}

StarSystem nilpotent_system(const JordanSpecC& spec) {
    require_single_eigenvalue(spec);
    BuiltSystem built = build_matrices(spec);
    size_t n1 = spec.eigenvalues[0].block_sizes[0] - 1;
    return StarSystem(-built.u, Modulus::mu_power(n1 + 1), built.vars, spec.field);
}

}  // namespace gradstar
