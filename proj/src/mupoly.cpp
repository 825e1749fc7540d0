#include "gradstar/mupoly.hpp"

#include <stdexcept>

namespace gradstar {

Modulus::Modulus(std::vector<Scalar> z) : z_(std::move(z)) {
    if (z_.empty()) throw std::invalid_argument("modulus degree must be at least 1");
}

Modulus Modulus::mu_power(size_t m) { return Modulus(std::vector<Scalar>(m, Scalar(0))); }

Modulus Modulus::circle_power(size_t k) {
    if (k == 0) throw std::invalid_argument("circle_power requires k >= 1");
    std::vector<Scalar> z(2 * k, Scalar(0));
    for (size_t j = 0; j < k; ++j) z[2 * j] = Scalar(binomial(static_cast<long>(k), static_cast<long>(j)));
    return Modulus(std::move(z));
}

bool Modulus::is_circle_power() const {
    if (z_.size() % 2 != 0) return false;
    return *this == circle_power(z_.size() / 2);
}

MuPoly::MuPoly(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("mu-vector must have length >= 1");
    for (const auto& c : coeffs_) {
        if (c.vars() != coeffs_[0].vars())
            throw std::invalid_argument("mu-vector coefficients use inconsistent variables");
        if (c.field() != coeffs_[0].field())
            throw std::invalid_argument("mu-vector coefficients use inconsistent field modes");
    }
}

MuPoly MuPoly::zero(size_t m, const std::vector<std::string>& vars, Field field) {
    return MuPoly(std::vector<Poly>(m, Poly(vars, field)));
}

MuPoly MuPoly::one(size_t m, const std::vector<std::string>& vars, Field field) {
    MuPoly v = zero(m, vars, field);
    v.coeffs_[0] = Poly::constant(Scalar(1), vars, field);
    return v;
}

MuPoly MuPoly::constants(const std::vector<Scalar>& c, const std::vector<std::string>& vars,
                         Field field) {
    std::vector<Poly> coeffs;
    coeffs.reserve(c.size());
    for (const auto& s : c) coeffs.push_back(Poly::constant(s, vars, field));
    return MuPoly(std::move(coeffs));
}

const std::vector<std::string>& MuPoly::vars() const { return coeffs_.at(0).vars(); }
Field MuPoly::field() const { return coeffs_.at(0).field(); }

bool MuPoly::is_constant() const {
    for (const auto& c : coeffs_)
        if (c.total_degree() > 0) return false;
    return true;
}

bool MuPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

MuPoly& MuPoly::operator+=(const MuPoly& o) {
    if (length() != o.length()) throw std::invalid_argument("mu-vector length mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

MuPoly& MuPoly::operator-=(const MuPoly& o) {
    if (length() != o.length()) throw std::invalid_argument("mu-vector length mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

MuPoly operator*(const Scalar& c, const MuPoly& v) {
    MuPoly r = v;
    for (auto& p : r.coeffs_) p = c * p;
    return r;
}

MuPoly MuPoly::with_vars(const std::vector<std::string>& vars) const {
    std::vector<Poly> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) coeffs.push_back(c.with_vars(vars));
    return MuPoly(std::move(coeffs));
}

MuPoly MuPoly::drop_constants() const {
    MuPoly r = *this;
    for (auto& c : r.coeffs_) {
        Scalar v = c.constant_term();
        if (!v.is_zero()) c -= Poly::constant(v, c.vars(), c.field());
    }
    return r;
}

StarSystem::StarSystem(Matrix x, Modulus z, std::vector<std::string> v, Field f)
    : pencil_base(std::move(x)), modulus(std::move(z)), vars(std::move(v)), field(f) {
    if (!pencil_base.is_square() || pencil_base.rows() != vars.size())
        throw std::invalid_argument("pencil size does not match variable list");
    if (field == Field::Real) {
        if (!pencil_base.is_real())
            throw std::invalid_argument("complex pencil entries in a real-mode system");
        for (const auto& c : modulus.coeffs())
            if (!c.is_real())
                throw std::invalid_argument("complex modulus coefficients in a real-mode system");
    }
}

Matrix companion_matrix(const Modulus& z) {
    size_t m = z.degree();
    Matrix c(m, m);
    for (size_t i = 0; i + 1 < m; ++i) c.at(i + 1, i) = Scalar(1);
    for (size_t i = 0; i < m; ++i) c.at(i, m - 1) = -z.coeffs()[i];
    return c;
}

MuPoly reduce_mod(const std::vector<Poly>& v, const Modulus& z) {
    if (v.empty()) throw std::invalid_argument("reduce_mod of an empty coefficient list");
    size_t m = z.degree();
    std::vector<Poly> r = v;
    for (size_t k = r.size(); k-- > m;) {
        if (r[k].is_zero()) continue;
        for (size_t j = 0; j < m; ++j) {
            if (z.coeffs()[j].is_zero()) continue;
            r[k - m + j] -= z.coeffs()[j] * r[k];
        }
        r[k] = Poly(r[k].vars(), r[k].field());
    }
    r.resize(std::min(r.size(), m));
    while (r.size() < m) r.push_back(Poly(r[0].vars(), r[0].field()));
    return MuPoly(std::move(r));
}

std::vector<Poly> mu_multiply(const MuPoly& a, const MuPoly& b) {
    if (a.vars() != b.vars() || a.field() != b.field())
        throw std::invalid_argument("mu-vector operand mismatch in product");
    std::vector<Poly> prod(a.length() + b.length() - 1, Poly(a.vars(), a.field()));
    for (size_t i = 0; i < a.length(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.length(); ++j) {
            if (b[j].is_zero()) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return prod;
}

MuPoly star_product(const MuPoly& v, const MuPoly& w, const Modulus& z) {
    if (v.length() != z.degree() || w.length() != z.degree())
        throw std::invalid_argument("star_product: operand length does not match modulus degree");
    return reduce_mod(mu_multiply(v, w), z);
}

MuPoly star_product_companion(const MuPoly& v, const MuPoly& w, const Modulus& z) {
    if (v.length() != z.degree() || w.length() != z.degree())
        throw std::invalid_argument("star_product: operand length does not match modulus degree");
    size_t m = z.degree();
    Matrix c = companion_matrix(z);
    std::vector<Matrix> cpow;
    cpow.reserve(m);
    cpow.push_back(Matrix::identity(m));
    for (size_t i = 1; i < m; ++i) cpow.push_back(cpow.back() * c);

    // (sum W_i C^i) e_1 is the first column of the W companion form.
    std::vector<Poly> wcol(m, Poly(v.vars(), v.field()));
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i < m; ++i) {
            if (cpow[i].at(r, 0).is_zero()) continue;
            wcol[r] += cpow[i].at(r, 0) * w[i];
        }

    std::vector<Poly> out(m, Poly(v.vars(), v.field()));
    for (size_t r = 0; r < m; ++r)
        for (size_t col = 0; col < m; ++col) {
            // (V_C)_{r,col} = sum_i V_i (C^i)_{r,col}
            Poly entry(v.vars(), v.field());
            for (size_t i = 0; i < m; ++i) {
                if (cpow[i].at(r, col).is_zero()) continue;
                entry += cpow[i].at(r, col) * v[i];
            }
            if (!entry.is_zero() && !wcol[col].is_zero()) out[r] += entry * wcol[col];
        }
    return MuPoly(std::move(out));
}

MuPoly star_power(const MuPoly& v, long k, const Modulus& z) {
    if (k < 0) throw std::invalid_argument("negative star power");
    MuPoly r = MuPoly::one(z.degree(), v.vars(), v.field());
    MuPoly base = v;
    while (k > 0) {
        if (k & 1) r = star_product(r, base, z);
        base = star_product(base, base, z);
        k >>= 1;
    }
    return r;
}

MuPoly star_series(const std::vector<MuPoly>& a, const MuPoly& base, const Modulus& z) {
    MuPoly acc = MuPoly::zero(z.degree(), base.vars(), base.field());
    MuPoly pow = MuPoly::one(z.degree(), base.vars(), base.field());
    for (size_t r = 0; r < a.size(); ++r) {
        if (r > 0) pow = star_product(pow, base, z);
        if (!a[r].is_zero()) acc += star_product(a[r], pow, z);
    }
    return acc;
}

MuPoly mu_shift(const MuPoly& v, size_t s) {
    std::vector<Poly> out(v.length() + s, Poly(v.vars(), v.field()));
    for (size_t i = 0; i < v.length(); ++i) out[i + s] = v[i];
    return MuPoly(std::move(out));
}

MuPoly circle_shift(const MuPoly& v, size_t t) {
    MuPoly factor = MuPoly::constants(
        [&] {
            std::vector<Scalar> c(2 * t + 1, Scalar(0));
            for (size_t j = 0; j <= t; ++j)
                c[2 * j] = Scalar(binomial(static_cast<long>(t), static_cast<long>(j)));
            return c;
        }(),
        v.vars(), v.field());
    return MuPoly(mu_multiply(factor, v));
}

namespace {

// Division of a 1-form-coefficient mu-polynomial by the monic scalar Z.
struct FormDivision {
    std::vector<OneForm> quotient;
    std::vector<OneForm> remainder;
};

FormDivision divide_forms(std::vector<OneForm> w, const Modulus& z) {
    size_t m = z.degree();
    FormDivision d;
    if (w.size() > m) d.quotient.resize(w.size() - m);
    for (size_t k = w.size(); k-- > m;) {
        d.quotient[k - m] = w[k];
        if (w[k].is_zero()) continue;
        for (size_t j = 0; j < m; ++j) {
            if (z.coeffs()[j].is_zero()) continue;
            w[k - m + j] -= z.coeffs()[j] * w[k];
        }
    }
    w.resize(std::min(w.size(), m));
    d.remainder = std::move(w);
    return d;
}

}  // namespace

SolutionCheck check_solution(const StarSystem& sys, const MuPoly& v) {
    if (v.vars() != sys.vars)
        throw std::invalid_argument("check_solution: variable list does not match system");
    if (v.field() != sys.field)
        throw std::invalid_argument("check_solution: field-mode mismatch with system");
    if (v.length() != sys.modulus.degree())
        throw std::invalid_argument("check_solution: mu-vector length does not match modulus");

    size_t m = v.length();
    std::vector<OneForm> grads;
    grads.reserve(m);
    for (size_t j = 0; j < m; ++j) grads.push_back(gradient(v[j]));

    // (X + mu I) grad V: coefficient at mu^j is X grad V_j + grad V_{j-1}.
    std::vector<OneForm> w(m + 1);
    for (size_t j = 0; j <= m; ++j) {
        OneForm acc = j < m ? apply(sys.pencil_base, grads[j])
                            : OneForm{std::vector<Poly>(sys.vars.size(), Poly(sys.vars, sys.field))};
        if (j > 0) acc += grads[j - 1];
        w[j] = std::move(acc);
    }

    FormDivision d = divide_forms(std::move(w), sys.modulus);
    SolutionCheck out;
    out.is_solution = true;
    for (const auto& r : d.remainder)
        if (!r.is_zero()) out.is_solution = false;
    if (out.is_solution) out.quotient = std::move(d.quotient);
    return out;
}

MuPoly embed(const MuPoly& v, size_t s, const StarSystem& target) {
    if (v.length() + s != target.modulus.degree())
        throw std::invalid_argument("embed: target modulus degree must equal length + s");
    const auto& tv = target.vars;
    const auto& sv = v.vars();
    if (sv.size() > tv.size() || !std::equal(sv.begin(), sv.end(), tv.end() - sv.size()))
        throw std::invalid_argument("embed: source variables must be a trailing block of the target's");
    size_t lead = tv.size() - sv.size();
    for (size_t i = 0; i < lead; ++i)
        for (size_t j = lead; j < tv.size(); ++j)
            if (!target.pencil_base.at(i, j).is_zero() || !target.pencil_base.at(j, i).is_zero())
                throw std::invalid_argument("embed: target pencil couples the subsystem block");

    MuPoly lifted = v.with_vars(tv);
    if (target.modulus.is_circle_power()) {
        if (s % 2 != 0)
            throw std::invalid_argument("embed: circle-power target needs an even degree gap");
        return circle_shift(lifted, s / 2);
    }
    if (target.modulus != Modulus::mu_power(target.modulus.degree()))
        throw std::invalid_argument("embed: unsupported target modulus shape");
    return mu_shift(lifted, s);
}

}  // namespace gradstar
