#ifndef GRADSTAR_POLY_HPP
#define GRADSTAR_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "gradstar/scalar.hpp"

namespace gradstar {

// Exact multivariate polynomial: finitely supported map from exponent
// vectors (over an ordered variable list) to nonzero scalars.  The term map
// is kept canonical, so structural equality is semantic equality.
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Scalar>;

    Poly() : field_(Field::Real) {}
    explicit Poly(std::vector<std::string> vars, Field field = Field::Real)
        : vars_(std::move(vars)), field_(field) {}

    static Poly constant(const Scalar& c, std::vector<std::string> vars,
                         Field field = Field::Real);
    static Poly variable(const std::string& name, const std::vector<std::string>& vars,
                         Field field = Field::Real);

    const std::vector<std::string>& vars() const { return vars_; }
    Field field() const { return field_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long total_degree() const;

    /// Adds c * x^exp, dropping the term if the sum cancels.
    void add_term(const Exponents& exp, const Scalar& c);

    Scalar coefficient(const Exponents& exp) const;
    Scalar constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);

    Poly pow(long k) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Same term data over a different variable list / field tag.  The new
    /// list must contain every variable this polynomial actually uses.
    Poly with_vars(const std::vector<std::string>& vars) const;
    Poly with_field(Field field) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    Field field_;
    TermMap terms_;

    void check_compatible(const Poly& o, const char* op) const;
};

// Exact 1-form: one polynomial component per variable, in variable order.
struct OneForm {
    std::vector<Poly> components;

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const OneForm& a, const OneForm& b) {
        return a.components == b.components;
    }
    friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }

    OneForm& operator+=(const OneForm& o);
    OneForm& operator-=(const OneForm& o);
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
    friend OneForm operator*(const Scalar& c, const OneForm& w);
};

Poly partial_derivative(const Poly& p, const std::string& var);
OneForm gradient(const Poly& p);

/// Exact composition.  Every variable of p must have an image, and all
/// images must share one target variable list.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment);

/// dw == 0, i.e. all mixed partials of the components agree exactly.
bool is_closed(const OneForm& w);

/// The unique P with grad(P) = w and P(0) = 0, via the homotopy formula
/// P = sum_i int_0^1 w_i(t x) x_i dt, which is exact monomial by monomial.
/// Throws std::domain_error when w is not closed.
Poly integrate_exact(const OneForm& w);

/// Coefficientwise conjugation; the variables denote real quantities and are
/// fixed.  Requires complex mode.
Poly conjugate(const Poly& p);

Poly real_part(const Poly& p);
Poly imag_part(const Poly& p);
Poly to_complex(const Poly& p);

}  // namespace gradstar

#endif
