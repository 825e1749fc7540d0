#include "gradstar/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gradstar {

Poly Poly::constant(const Scalar& c, std::vector<std::string> vars, Field field) {
    Poly p(std::move(vars), field);
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(const std::string& name, const std::vector<std::string>& vars,
                    Field field) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw std::invalid_argument("variable '" + name + "' not in variable list");
    Poly p(vars, field);
    Exponents e(vars.size(), 0);
    e[static_cast<size_t>(it - vars.begin())] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

long Poly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (int k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

void Poly::add_term(const Exponents& exp, const Scalar& c) {
    if (exp.size() != vars_.size())
        throw std::invalid_argument("exponent vector length does not match variable list");
    for (int k : exp)
        if (k < 0) throw std::invalid_argument("negative exponent");
    if (field_ == Field::Real && !c.is_real())
        throw std::invalid_argument("complex coefficient in real-mode polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Poly::coefficient(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::check_compatible(const Poly& o, const char* op) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument(std::string("variable-list mismatch in ") + op);
    if (field_ != o.field_)
        throw std::invalid_argument(std::string("field-mode mismatch in ") + op);
}

Poly Poly::operator-() const {
    Poly r(vars_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o, "addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o, "subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b, "multiplication");
    Poly r(a.vars_, a.field_);
    Poly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
    Poly r(p.vars_, p.field_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.add_term(e, c * pc);
    return r;
}

Poly Poly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(Scalar(1), vars_, field_);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
    std::vector<long> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            // Dropping a variable is fine only if it is unused.
            bool used = false;
            for (const auto& [e, c] : terms_) used = used || e[i] != 0;
            if (used)
                throw std::invalid_argument("with_vars: target list misses used variable '" +
                                            vars_[i] + "'");
            pos[i] = -1;
        } else {
            pos[i] = it - vars.begin();
        }
    }
    Poly r(vars, field_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (pos[i] >= 0) ne[static_cast<size_t>(pos[i])] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

Poly Poly::with_field(Field field) const {
    Poly r(vars_, field);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

OneForm& OneForm::operator+=(const OneForm& o) {
    if (components.size() != o.components.size())
        throw std::invalid_argument("1-form component count mismatch");
    for (size_t i = 0; i < components.size(); ++i) components[i] += o.components[i];
    return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
    if (components.size() != o.components.size())
        throw std::invalid_argument("1-form component count mismatch");
    for (size_t i = 0; i < components.size(); ++i) components[i] -= o.components[i];
    return *this;
}

OneForm operator*(const Scalar& c, const OneForm& w) {
    OneForm r = w;
    for (auto& comp : r.components) comp = c * comp;
    return r;
}

Poly partial_derivative(const Poly& p, const std::string& var) {
    auto it = std::find(p.vars().begin(), p.vars().end(), var);
    if (it == p.vars().end())
        throw std::invalid_argument("unknown variable '" + var + "' in partial derivative");
    size_t idx = static_cast<size_t>(it - p.vars().begin());
    Poly r(p.vars(), p.field());
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] == 0) continue;
        Poly::Exponents ne = e;
        ne[idx] -= 1;
        r.add_term(ne, Scalar(Rational(e[idx])) * c);
    }
    return r;
}

OneForm gradient(const Poly& p) {
    OneForm w;
    w.components.reserve(p.vars().size());
    for (const auto& v : p.vars()) w.components.push_back(partial_derivative(p, v));
    return w;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment) {
    if (p.vars().empty()) {
        if (assignment.empty())
            throw std::invalid_argument("substitute: empty assignment for constant polynomial");
        const Poly& model = assignment.begin()->second;
        Poly r(model.vars(), p.field());
        for (const auto& [e, c] : p.terms()) r.add_term(Poly::Exponents(model.vars().size(), 0), c);
        return r;
    }
    std::vector<const Poly*> images;
    images.reserve(p.vars().size());
    for (const auto& v : p.vars()) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("substitute: missing image for variable '" + v + "'");
        images.push_back(&it->second);
    }
    const auto& tvars = images[0]->vars();
    for (const Poly* img : images) {
        if (img->vars() != tvars)
            throw std::invalid_argument("substitute: images use inconsistent target variables");
        if (img->field() != p.field())
            throw std::invalid_argument("substitute: field-mode mismatch between p and images");
    }

    // Per-variable power cache; exponents in practice stay small.
    std::vector<std::vector<Poly>> pows(images.size());
    auto power_of = [&](size_t i, int k) -> const Poly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Poly::constant(Scalar(1), tvars, p.field()));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *images[i]);
        return cache[static_cast<size_t>(k)];
    };

    Poly r(tvars, p.field());
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(c, tvars, p.field());
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * power_of(i, e[i]);
        r += term;
    }
    return r;
}

bool is_closed(const OneForm& w) {
    if (w.components.empty()) return true;
    const auto& vars = w.components[0].vars();
    if (w.components.size() != vars.size())
        throw std::invalid_argument("1-form component count does not match variable count");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (partial_derivative(w.components[i], vars[j]) !=
                partial_derivative(w.components[j], vars[i]))
                return false;
    return true;
}

Poly integrate_exact(const OneForm& w) {
    if (!is_closed(w)) throw std::domain_error("integrate_exact: 1-form is not closed");
    const auto& vars = w.components.empty() ? std::vector<std::string>{} : w.components[0].vars();
    Poly r(vars, w.components.empty() ? Field::Real : w.components[0].field());
    for (size_t i = 0; i < w.components.size(); ++i) {
        for (const auto& [e, c] : w.components[i].terms()) {
            Poly::Exponents ne = e;
            ne[i] += 1;
            long deg = 0;
            for (int k : ne) deg += k;
            r.add_term(ne, Scalar(Rational(1, deg)) * c);
        }
    }
    return r;
}

Poly conjugate(const Poly& p) {
    if (p.field() != Field::Complex)
        throw std::invalid_argument("conjugate requires a complex-mode polynomial");
    Poly r(p.vars(), Field::Complex);
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
    return r;
}

Poly real_part(const Poly& p) {
    Poly r(p.vars(), Field::Real);
    for (const auto& [e, c] : p.terms()) r.add_term(e, Scalar(c.re()));
    return r;
}

Poly imag_part(const Poly& p) {
    Poly r(p.vars(), Field::Real);
    for (const auto& [e, c] : p.terms()) r.add_term(e, Scalar(c.im()));
    return r;
}

Poly to_complex(const Poly& p) { return p.with_field(Field::Complex); }

}  // namespace gradstar
