#include "gradstar/jordan_real.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gradstar {

namespace {

Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("negative power of zero");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational r(1);
    for (long k = 0; k < e; ++k) r *= base;
    return r;
}

Rational pow2(long e) { return rational_pow(Rational(2), e); }

Matrix rotation_block(const Rational& alpha, const Rational& beta) {
    Matrix r(2, 2);
    r.at(0, 0) = Scalar(alpha);
    r.at(0, 1) = Scalar(beta);
    r.at(1, 0) = Scalar(-beta);
    r.at(1, 1) = Scalar(alpha);
    return r;
}

}  // namespace

void JordanSpecR::validate() const {
    if (beta == 0) throw std::invalid_argument("beta must be nonzero");
    if (half_sizes.empty()) throw std::invalid_argument("spec has no blocks");
    for (size_t i = 0; i < half_sizes.size(); ++i) {
        if (half_sizes[i] == 0) throw std::invalid_argument("block half size must be positive");
        if (i > 0 && half_sizes[i] > half_sizes[i - 1])
            throw std::invalid_argument("block half sizes must be weakly decreasing");
    }
}

size_t JordanSpecR::dimension() const {
    size_t n = 0;
    for (size_t h : half_sizes) n += 2 * h;
    return n;
}

std::vector<std::string> JordanSpecR::var_names() const {
    std::vector<std::string> names;
    names.reserve(dimension());
    for (size_t b = 0; b < half_sizes.size(); ++b)
        for (size_t j = 0; j < half_sizes[b]; ++j) {
            names.push_back("x" + std::to_string(b + 1) + "_" + std::to_string(j));
            names.push_back("y" + std::to_string(b + 1) + "_" + std::to_string(j));
        }
    return names;
}

size_t JordanSpecR::total_parameter() const {
    size_t t = 0;
    for (size_t h : half_sizes) t += h;
    return t - 1;
}

size_t JordanSpecR::nu(size_t k) const {
    size_t count = 0;
    for (size_t h : half_sizes)
        if (h >= k + 1) ++count;
    return count;
}

Matrix real_jordan_matrix(const JordanSpecR& spec) {
    spec.validate();
    size_t dim = spec.dimension();
    Matrix m(dim, dim);
    Matrix rot = rotation_block(spec.alpha, spec.beta);
    size_t off = 0;
    for (size_t h : spec.half_sizes) {
        for (size_t p = 0; p < h; ++p) {
            for (size_t a = 0; a < 2; ++a)
                for (size_t b = 0; b < 2; ++b) m.at(off + 2 * p + a, off + 2 * p + b) = rot.at(a, b);
            if (p + 1 < h) {
                m.at(off + 2 * p, off + 2 * p + 2) = Scalar(1);
                m.at(off + 2 * p + 1, off + 2 * p + 3) = Scalar(1);
            }
        }
        off += 2 * h;
    }
    return m;
}

NormalizedSolution normalize_real(const JordanSpecR& spec, const Poly& f, const Poly& g) {
    spec.validate();
    std::vector<std::string> vars = spec.var_names();
    if (f.vars() != vars || g.vars() != vars)
        throw std::invalid_argument("normalize_real: variables must match the spec");
    if (!verify_gradient(real_jordan_matrix(spec), f, g))
        throw std::invalid_argument("normalize_real: input is not a solution");

    std::map<std::string, Poly> assignment;
    for (size_t b = 0; b < spec.half_sizes.size(); ++b) {
        long nb = static_cast<long>(spec.half_sizes[b]) - 1;
        for (long j = 0; j <= nb; ++j) {
            Scalar scale(rational_pow(spec.beta, nb - j));
            for (const char* prefix : {"x", "y"}) {
                std::string name =
                    std::string(prefix) + std::to_string(b + 1) + "_" + std::to_string(j);
                assignment.emplace(name, scale * Poly::variable(name, vars, f.field()));
            }
        }
    }
    NormalizedSolution out{JordanSpecR{Rational(0), Rational(1), spec.half_sizes},
                           substitute(f - Scalar(spec.alpha) * g, assignment),
                           substitute(Scalar(spec.beta) * g, assignment)};
    if (!verify_gradient(real_jordan_matrix(out.spec), out.f, out.g))
        throw std::logic_error("normalize_real: normalized pair failed the gradient equation");
    return out;
}

StarSystem real_extended_system(const JordanSpecR& spec) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("real_extended_system: spec must be normalized");
    Matrix m = real_jordan_matrix(spec);
    return StarSystem(m.inverse(), Modulus::circle_power(spec.total_parameter() + 1),
                      spec.var_names(), Field::Real);
}

MuPoly extend_solution(const Matrix& m, const std::vector<std::string>& vars, const Poly& f,
                       const Poly& g) {
    if (vars.size() % 2 != 0 || vars.empty())
        throw std::invalid_argument("extend_solution: even dimension required");
    if (f.vars() != vars || g.vars() != vars)
        throw std::invalid_argument("extend_solution: variables must match");
    if (!verify_gradient(m, f, g))
        throw std::invalid_argument("extend_solution: (f, g) is not a solution");

    size_t len = vars.size();  // 2n + 2
    Modulus z = Modulus::circle_power(len / 2);
    Matrix x = m.inverse();

    std::vector<Poly> coeffs(len, Poly(vars, f.field()));
    coeffs[0] = f;
    coeffs[len - 1] = g;
    OneForm grad_g = gradient(g);
    OneForm cur = grad_g;
    for (size_t j = len - 1; j >= 1; --j) {
        OneForm w = z.coeffs()[j] * grad_g - apply(x, cur);
        if (j - 1 == 0) {
            // Consistency: the bottom slot must reproduce grad f.
            if (w != gradient(f))
                throw std::domain_error("extend_solution: recursion did not recover grad f");
        } else {
            coeffs[j - 1] = integrate_exact(w);  // throws if not closed
        }
        cur = std::move(w);
    }
    return MuPoly(std::move(coeffs));
}

MuPoly extend_real(const JordanSpecR& spec, const Poly& f, const Poly& g) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("extend_real: spec must be normalized");
    return extend_solution(real_jordan_matrix(spec), spec.var_names(), f, g);
}

Matrix neg_inv_transpose_power_formula(size_t n, long a) {
    if (a < 0) throw std::invalid_argument("negative power");
    size_t half = n + 1;
    Matrix lam = rotation_block(Rational(0), Rational(1));
    Matrix out(2 * half, 2 * half);
    for (size_t i = 1; i <= half; ++i)
        for (size_t j = 1; j <= i; ++j) {
            long d = static_cast<long>(i) - static_cast<long>(j);
            Rational c = binomial(a - 1 + d, d);
            if (c == 0) continue;
            Matrix blk = Scalar(c) * (-lam).pow(a + d);
            for (size_t p = 0; p < 2; ++p)
                for (size_t q = 0; q < 2; ++q)
                    out.at(2 * (i - 1) + p, 2 * (j - 1) + q) = blk.at(p, q);
        }
    return out;
}

std::vector<std::string> s_var_names(const JordanSpecR& spec) {
    std::vector<std::string> names;
    names.reserve(spec.dimension());
    for (size_t b = 0; b < spec.half_sizes.size(); ++b)
        for (size_t j = 0; j < 2 * spec.half_sizes[b]; ++j)
            names.push_back("s" + std::to_string(b + 1) + "_" + std::to_string(j));
    return names;
}

StarSystem s_system_multi(const JordanSpecR& spec) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("s_system_multi: spec must be normalized");
    std::vector<Matrix> blocks;
    blocks.reserve(spec.half_sizes.size());
    for (size_t h : spec.half_sizes)
        blocks.push_back(-companion_matrix(Modulus::circle_power(h)).transpose());
    return StarSystem(Matrix::block_diag(blocks),
                      Modulus::circle_power(spec.total_parameter() + 1), s_var_names(spec),
                      Field::Real);
}

StarSystem s_system(size_t n) {
    return s_system_multi(JordanSpecR{Rational(0), Rational(1), {n + 1}});
}

MuPoly s_linear_form(const JordanSpecR& spec, size_t block,
                     const std::vector<std::string>& ambient) {
    std::vector<Poly> coeffs;
    size_t h = spec.half_sizes.at(block - 1);
    coeffs.reserve(2 * h);
    for (size_t j = 0; j < 2 * h; ++j)
        coeffs.push_back(
            Poly::variable("s" + std::to_string(block) + "_" + std::to_string(j), ambient,
                           Field::Real));
    return MuPoly(std::move(coeffs));
}

RealBasis basis_matrix(size_t n) {
    size_t half = n + 1;
    Matrix lam = rotation_block(Rational(0), Rational(1));
    Matrix b(2 * half, 2 * half);
    for (size_t i = 1; i <= half; ++i)
        for (size_t j = 1; j <= 2 * half; ++j) {
            long upper = static_cast<long>(i) + static_cast<long>(j) - 3;
            Rational c = binomial(upper, static_cast<long>(i) - 1);
            if (c == 0) continue;
            Matrix blk = Scalar(c) * (-lam).pow(static_cast<long>(i + j) - 2);
            b.at(2 * (i - 1), j - 1) = blk.at(0, 0);
            b.at(2 * (i - 1) + 1, j - 1) = blk.at(1, 0);
        }

    Matrix m = real_jordan_matrix(JordanSpecR{Rational(0), Rational(1), {half}});
    Matrix neg_inv_t = -m.inverse().transpose();
    Matrix companion = companion_matrix(Modulus::circle_power(half));
    if (neg_inv_t * b != b * companion)
        throw std::logic_error("basis_matrix: conjugation identity failed");
    for (long a = 0; a <= static_cast<long>(2 * half); ++a)
        if (neg_inv_transpose_power_formula(n, a) != neg_inv_t.pow(a))
            throw std::logic_error("basis_matrix: power formula failed");
    JordanSpecR single{Rational(0), Rational(1), {half}};
    StarSystem sys = s_system(n);
    if (!check_solution(sys, s_linear_form(single, 1, sys.vars)).is_solution)
        throw std::logic_error("basis_matrix: plain linear form is not a solution");
    return RealBasis{std::move(b), n};
}

RealComponent real_component(const Poly& phi_k, size_t k, const JordanSpecR& spec) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("real_component: spec must be normalized");
    size_t n1 = spec.half_sizes[0] - 1;
    if (k > n1) throw std::invalid_argument("real_component: k exceeds n_1");
    size_t arity = spec.nu(k);
    if (phi_k.vars() != gen_func_vars(arity))
        throw std::invalid_argument("real_component: phi_" + std::to_string(k) +
                                    " must use variables s1..s" + std::to_string(arity));
    if (phi_k.field() != Field::Complex)
        throw std::invalid_argument("real_component: phi must be complex");

    std::vector<std::string> ambient = spec.var_names();
    std::vector<std::vector<Poly>> images;
    images.reserve(arity);
    Scalar iunit(Rational(0), Rational(1));
    for (size_t t = 1; t <= arity; ++t) {
        std::vector<Poly> img;
        size_t nt = spec.half_sizes[t - 1] - 1;
        img.reserve(nt + 1);
        for (size_t j = 0; j <= nt; ++j) {
            Poly zj =
                Poly::variable("x" + std::to_string(t) + "_" + std::to_string(j), ambient,
                               Field::Complex) +
                iunit * Poly::variable("y" + std::to_string(t) + "_" + std::to_string(j), ambient,
                                       Field::Complex);
            img.push_back(std::move(zj));
        }
        images.push_back(std::move(img));
    }
    std::vector<Poly> coeffs = mu_expand(phi_k, images);
    auto deriv = [&](long p) {
        if (p < 0 || static_cast<size_t>(p) >= coeffs.size())
            return Poly(ambient, Field::Complex);
        return Scalar(factorial(p)) * coeffs[static_cast<size_t>(p)];
    };

    Poly f_part = deriv(static_cast<long>(k));
    Scalar weight(Rational(1));
    Scalar half_neg_i(Rational(0), Rational(-1, 2));
    for (long l = 1; l <= static_cast<long>(k); ++l) {
        weight *= half_neg_i;
        Scalar w = weight * Scalar(factorial(static_cast<long>(k)) /
                                   factorial(static_cast<long>(k) - l));
        f_part -= w * conjugate(deriv(static_cast<long>(k) - l));
    }
    return RealComponent{f_part, real_part(f_part), imag_part(f_part)};
}

SolutionPair real_general_solution(const std::vector<Poly>& phis, const JordanSpecR& spec) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("real_general_solution: spec must be normalized");
    size_t n1 = spec.half_sizes[0] - 1;
    if (phis.size() != n1 + 1)
        throw std::invalid_argument("real_general_solution: need exactly n_1 + 1 phis");
    std::vector<std::string> ambient = spec.var_names();
    Poly f(ambient, Field::Real), g(ambient, Field::Real);
    for (size_t k = 0; k <= n1; ++k) {
        RealComponent comp = real_component(phis[k], k, spec);
        f += comp.f;
        g += comp.g;
    }
    if (!verify_gradient(real_jordan_matrix(spec), f, g))
        throw std::logic_error("real_general_solution: output failed the gradient equation");
    return {f, g};
}

std::vector<MuPoly> reconstruction_constants(size_t n) {
    JordanSpecR single{Rational(0), Rational(1), {n + 1}};
    std::vector<std::string> svars = s_var_names(single);
    std::vector<MuPoly> out;
    out.reserve(n + 1);
    for (size_t m = 0; m <= n; ++m) {
        std::vector<Scalar> a(2 * n + 2, Scalar(0));
        size_t offset = (m % 2 == 1) ? 1 : 0;
        Rational sign = (m % 2 == 0) ? ((m / 2) % 2 == 0 ? 1 : -1)
                                     : (((m - 1) / 2) % 2 == 0 ? 1 : -1);
        for (size_t j = 0; j <= m; ++j) {
            Rational s(0);
            for (size_t k = 0; k <= j; ++k)
                for (size_t i = 0; i <= m; ++i) {
                    Rational b = (m % 2 == 0)
                                     ? binomial(static_cast<long>(i + 2 * k), static_cast<long>(i))
                                     : binomial(static_cast<long>(i + 2 * k) - 1,
                                                static_cast<long>(i));
                    if (b == 0) continue;
                    Rational term = pow2(static_cast<long>(i) - static_cast<long>(m)) *
                                    binomial(static_cast<long>(j), static_cast<long>(k)) * b;
                    if (k % 2 == 1) term = -term;
                    s += term;
                }
            s *= factorial(static_cast<long>(m)) * sign;
            if (s == 0) continue;
            // times (1 + mu^2)^(n-j), shifted by one slot when m is odd
            for (size_t t = 0; t + j <= n; ++t)
                a[2 * t + offset] +=
                    Scalar(s * binomial(static_cast<long>(n - j), static_cast<long>(t)));
        }
        out.push_back(MuPoly::constants(a, svars, Field::Real));
    }
    return out;
}

MuPoly imaginary_unit_vector(size_t n) {
    JordanSpecR single{Rational(0), Rational(1), {n + 1}};
    std::vector<Scalar> c(2 * n + 2, Scalar(0));
    for (size_t k = 0; k <= n; ++k) {
        // central binomial series for (1 - t)^(-1/2), t = 1 + mu^2
        Rational ck = binomial(static_cast<long>(2 * k), static_cast<long>(k)) /
                      rational_pow(Rational(4), static_cast<long>(k));
        for (size_t t = 0; t <= k; ++t)
            c[2 * t + 1] += Scalar(ck * binomial(static_cast<long>(k), static_cast<long>(t)));
    }
    return MuPoly::constants(c, s_var_names(single), Field::Real);
}

MuPoly reconstruct_real(const std::map<std::pair<size_t, size_t>, Scalar>& coeffs, size_t n,
                        size_t truncation) {
    JordanSpecR single{Rational(0), Rational(1), {n + 1}};
    std::vector<std::string> svars = s_var_names(single);
    Modulus z = Modulus::circle_power(n + 1);
    std::vector<MuPoly> a = reconstruction_constants(n);
    MuPoly j_unit = imaginary_unit_vector(n);
    MuPoly s_mu = s_linear_form(single, 1, svars);

    size_t max_pow = 0;
    for (const auto& [key, c] : coeffs) {
        if (key.first > n)
            throw std::invalid_argument("reconstruct_real: component index exceeds n");
        if (key.second <= truncation && !c.is_zero()) max_pow = std::max(max_pow, key.second);
    }
    std::vector<MuPoly> powers{MuPoly::one(2 * n + 2, svars, Field::Real)};
    for (size_t j = 1; j <= max_pow; ++j) powers.push_back(star_product(powers.back(), s_mu, z));

    MuPoly total = MuPoly::zero(2 * n + 2, svars, Field::Real);
    for (const auto& [key, c] : coeffs) {
        auto [k, j] = key;
        if (j > truncation || c.is_zero()) continue;
        MuPoly base = star_product(a[k], powers[j], z);
        if (c.re() != 0) total += Scalar(c.re()) * base;
        if (c.im() != 0) total += Scalar(c.im()) * star_product(j_unit, base, z);
    }
    return total;
}

MuPoly nested_real_star_power(const JordanSpecR& spec, const std::vector<long>& index) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("nested_real_star_power: spec must be normalized");
    size_t r = index.size();
    if (r == 0 || r > spec.half_sizes.size())
        throw std::invalid_argument("nested_real_star_power: bad multi-index length");
    std::vector<std::string> ambient = s_var_names(spec);

    auto block_power = [&](size_t t) {  // t is 1-based
        Modulus z = Modulus::circle_power(spec.half_sizes[t - 1]);
        return star_power(s_linear_form(spec, t, ambient), index[t - 1], z);
    };

    MuPoly w = block_power(r);
    size_t cum = spec.half_sizes[r - 1];  // sum of half sizes of blocks t..r
    for (size_t t = r - 1; t >= 1; --t) {
        w = circle_shift(w, spec.half_sizes[t - 1]);
        cum += spec.half_sizes[t - 1];
        w = reduce_mod(mu_multiply(block_power(t), w), Modulus::circle_power(cum));
        if (t == 1) break;
    }
    size_t rest = 0;
    for (size_t u = r; u < spec.half_sizes.size(); ++u) rest += spec.half_sizes[u];
    if (rest > 0) w = circle_shift(w, rest);
    return w;
}

HypothesisReport hypothesis_check(const JordanSpecR& spec, const std::vector<Poly>& phis,
                                  size_t truncation) {
    spec.validate();
    if (!spec.is_normalized())
        throw std::invalid_argument("hypothesis_check: spec must be normalized");
    size_t total = spec.total_parameter();
    size_t len = 2 * total + 2;
    std::vector<std::string> svars = s_var_names(spec);
    Modulus z_full = Modulus::circle_power(total + 1);

    // Direct side: general solution in the x coordinates, moved to the s
    // coordinates through the block-diagonal basis change, then extended.
    SolutionPair direct = real_general_solution(phis, spec);
    std::vector<Matrix> basis_blocks;
    basis_blocks.reserve(spec.half_sizes.size());
    for (size_t h : spec.half_sizes) basis_blocks.push_back(basis_matrix(h - 1).b);
    Matrix big_b = Matrix::block_diag(basis_blocks);
    std::vector<std::string> xvars = spec.var_names();
    std::map<std::string, Poly> to_s;
    for (size_t i = 0; i < xvars.size(); ++i) {
        Poly image(svars, Field::Real);
        for (size_t j = 0; j < svars.size(); ++j) {
            if (big_b.at(i, j).is_zero()) continue;
            image += big_b.at(i, j) * Poly::variable(svars[j], svars, Field::Real);
        }
        to_s.emplace(xvars[i], std::move(image));
    }
    Poly f_s = substitute(direct.f, to_s);
    Poly g_s = substitute(direct.g, to_s);
    StarSystem sys = s_system_multi(spec);
    Matrix m_s = sys.pencil_base.inverse();
    MuPoly v_direct = extend_solution(m_s, svars, f_s, g_s);

    // Star-series side: one unknown constant mu-vector per multi-index I
    // with |I| <= truncation; each coefficient is a separate unknown.
    std::vector<std::vector<long>> indices;
    for (size_t r = 1; r <= spec.half_sizes.size(); ++r) {
        std::vector<long> cur(r, 0);
        std::function<void(size_t, long)> gen = [&](size_t pos, long left) {
            if (pos == r) {
                indices.push_back(cur);
                return;
            }
            for (long v = 0; v <= left; ++v) {
                cur[pos] = v;
                gen(pos + 1, left - v);
            }
        };
        gen(0, static_cast<long>(truncation));
    }

    // Column basis: reduce(mu^d * T_I) for d = 0..len-1.
    std::vector<MuPoly> columns;
    columns.reserve(indices.size() * len);
    for (const auto& index : indices) {
        MuPoly t_i = nested_real_star_power(spec, index);
        for (size_t d = 0; d < len; ++d)
            columns.push_back(reduce_mod(mu_shift(t_i, d).coeffs(), z_full));
    }

    // Assemble the exact linear system row by (slot, monomial).  Extensions
    // are unique only up to additive constants in the middle slots, so the
    // constant-monomial equations are kept for the f and g slots only.
    Poly::Exponents const_exp(svars.size(), 0);
    auto constrained = [&](size_t slot, const Poly::Exponents& e) {
        return e != const_exp || slot == 0 || slot + 1 == len;
    };
    std::map<std::pair<size_t, Poly::Exponents>, size_t> row_of;
    auto row_index = [&](size_t slot, const Poly::Exponents& e) {
        return row_of.try_emplace({slot, e}, row_of.size()).first->second;
    };
    for (size_t col = 0; col < columns.size(); ++col)
        for (size_t slot = 0; slot < len; ++slot)
            for (const auto& [e, c] : columns[col][slot].terms())
                if (constrained(slot, e)) row_index(slot, e);
    for (size_t slot = 0; slot < len; ++slot)
        for (const auto& [e, c] : v_direct[slot].terms())
            if (constrained(slot, e)) row_index(slot, e);

    size_t rows = row_of.size(), cols = columns.size();
    std::vector<std::vector<Rational>> mat(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (size_t col = 0; col < cols; ++col)
        for (size_t slot = 0; slot < len; ++slot)
            for (const auto& [e, c] : columns[col][slot].terms())
                if (constrained(slot, e)) mat[row_of[{slot, e}]][col] = c.re();
    for (size_t slot = 0; slot < len; ++slot)
        for (const auto& [e, c] : v_direct[slot].terms())
            if (constrained(slot, e)) mat[row_of[{slot, e}]][cols] = c.re();

    // Exact Gaussian elimination.
    std::vector<long> pivot_col_of_row(rows, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && mat[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(mat[p], mat[rank]);
        Rational inv = Rational(1) / mat[rank][col];
        for (size_t j = col; j <= cols; ++j) mat[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || mat[i][col] == 0) continue;
            Rational fct = mat[i][col];
            for (size_t j = col; j <= cols; ++j) mat[i][j] -= fct * mat[rank][j];
        }
        pivot_col_of_row[rank] = static_cast<long>(col);
        ++rank;
    }

    HypothesisReport report;
    report.unknowns = cols;
    report.equations = rows;
    report.agree = true;
    for (size_t i = rank; i < rows; ++i) {
        if (mat[i][cols] == 0) continue;
        report.agree = false;
        break;
    }
    if (report.agree) {
        report.detail = "residual zero: constant solutions exist at this truncation";
    } else {
        // Counterexample certificate: solve the consistent part (free
        // unknowns zero), evaluate the series against the direct solution,
        // and report the first slot/monomial mismatch.
        std::vector<Rational> sol(cols, Rational(0));
        for (size_t i = 0; i < rank; ++i)
            sol[static_cast<size_t>(pivot_col_of_row[i])] = mat[i][cols];
        std::map<std::pair<size_t, Poly::Exponents>, Rational> residual;
        for (const auto& [key, row] : row_of) residual[key] = Rational(0);
        for (size_t col = 0; col < cols; ++col) {
            if (sol[col] == 0) continue;
            for (size_t slot = 0; slot < len; ++slot)
                for (const auto& [e, c] : columns[col][slot].terms())
                    if (constrained(slot, e)) residual[{slot, e}] += sol[col] * c.re();
        }
        for (size_t slot = 0; slot < len; ++slot)
            for (const auto& [e, c] : v_direct[slot].terms())
                if (constrained(slot, e)) residual[{slot, e}] -= c.re();
        for (const auto& [key, value] : residual) {
            if (value == 0) continue;
            std::string mono = "[";
            for (size_t i = 0; i < key.second.size(); ++i)
                mono += (i ? "," : "") + std::to_string(key.second[i]);
            mono += "]";
            report.detail = "counterexample: slot " + std::to_string(key.first) + ", monomial " +
                            mono + ", residual " + rational_str(value);
            break;
        }
        if (report.detail.empty()) report.detail = "inconsistent system";
    }
    return report;
}

}  // namespace gradstar
