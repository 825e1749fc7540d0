#ifndef GRADSTAR_MUPOLY_HPP
#define GRADSTAR_MUPOLY_HPP

#include <string>
#include <vector>

#include "gradstar/matrix.hpp"
#include "gradstar/poly.hpp"

namespace gradstar {

// Monic modulus Z = Z_0 + Z_1 mu + ... + Z_{m-1} mu^{m-1} + mu^m with
// constant coefficients; only the non-leading coefficients are stored.
class Modulus {
public:
    explicit Modulus(std::vector<Scalar> z);

    /// mu^m (all stored coefficients zero).
    static Modulus mu_power(size_t m);
    /// (1 + mu^2)^k, expanded.
    static Modulus circle_power(size_t k);

    size_t degree() const { return z_.size(); }
    const std::vector<Scalar>& coeffs() const { return z_; }

    /// True when the modulus is exactly (1 + mu^2)^(degree/2).
    bool is_circle_power() const;

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.z_ == b.z_; }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }

private:
    std::vector<Scalar> z_;
};

// mu-vector V = V_0 + V_1 mu + ... + V_{m-1} mu^{m-1} with polynomial
// coefficients over one shared variable list.
class MuPoly {
public:
    MuPoly() = default;
    explicit MuPoly(std::vector<Poly> coeffs);

    static MuPoly zero(size_t m, const std::vector<std::string>& vars, Field field);
    /// (1, 0, ..., 0), the unit of the quotient ring.
    static MuPoly one(size_t m, const std::vector<std::string>& vars, Field field);
    /// Constant mu-vector from scalar coefficients.
    static MuPoly constants(const std::vector<Scalar>& c, const std::vector<std::string>& vars,
                            Field field);

    size_t length() const { return coeffs_.size(); }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& operator[](size_t i) const { return coeffs_[i]; }
    Poly& operator[](size_t i) { return coeffs_[i]; }

    const std::vector<std::string>& vars() const;
    Field field() const;
    bool is_constant() const;
    bool is_zero() const;

    MuPoly& operator+=(const MuPoly& o);
    MuPoly& operator-=(const MuPoly& o);
    friend MuPoly operator+(MuPoly a, const MuPoly& b) { return a += b; }
    friend MuPoly operator-(MuPoly a, const MuPoly& b) { return a -= b; }
    friend MuPoly operator*(const Scalar& c, const MuPoly& v);

    friend bool operator==(const MuPoly& a, const MuPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const MuPoly& a, const MuPoly& b) { return !(a == b); }

    /// Re-expresses every coefficient over a containing variable list.
    MuPoly with_vars(const std::vector<std::string>& vars) const;
    /// Subtracts each coefficient's value at the origin.
    MuPoly drop_constants() const;

private:
    std::vector<Poly> coeffs_;
};

// The pair (pencil A = X + mu I, modulus Z) together with the ambient
// variable list; the data of the parameter-dependent equation
// (X + mu I) grad V == 0 (mod Z).
struct StarSystem {
    Matrix pencil_base;  // X, constant n x n
    Modulus modulus;
    std::vector<std::string> vars;
    Field field = Field::Real;

    StarSystem(Matrix x, Modulus z, std::vector<std::string> v, Field f);
};

/// Companion matrix of the modulus: subdiagonal ones, last column -Z_i.
Matrix companion_matrix(const Modulus& z);

/// Remainder of V (any length) after division by the monic Z, padded to
/// length Z.degree().
MuPoly reduce_mod(const std::vector<Poly>& v, const Modulus& z);

/// Plain product of mu-polynomials (no reduction); lengths add.
std::vector<Poly> mu_multiply(const MuPoly& a, const MuPoly& b);

/// Remainder of the ordinary product V W modulo Z.
MuPoly star_product(const MuPoly& v, const MuPoly& w, const Modulus& z);

/// Same product through the companion-matrix form (sum V_i C^i)(sum W_i C^i) e_1.
MuPoly star_product_companion(const MuPoly& v, const MuPoly& w, const Modulus& z);

/// k-fold star product; k = 0 gives the unit.
MuPoly star_power(const MuPoly& v, long k, const Modulus& z);

/// sum_r a_r * base^r with constant mu-vector coefficients a_r.
MuPoly star_series(const std::vector<MuPoly>& a, const MuPoly& base, const Modulus& z);

/// Prepends s zero coefficients (multiplication by mu^s, no reduction).
MuPoly mu_shift(const MuPoly& v, size_t s);

/// Multiplies by (1 + mu^2)^t (no reduction).
MuPoly circle_shift(const MuPoly& v, size_t t);

struct SolutionCheck {
    bool is_solution = false;
    std::vector<OneForm> quotient;  // u with (X + mu I) grad V = Z u
};

/// Forms (X + mu I) grad V as a mu-polynomial of 1-forms, divides by Z, and
/// reports whether the remainder vanishes identically.
SolutionCheck check_solution(const StarSystem& sys, const MuPoly& v);

/// Embedding of a solution of a trailing-subsystem into a larger system:
/// mu^s V for a mu-power modulus, (1+mu^2)^(s/2) V for a circle-power
/// modulus.  s is the degree difference; the source variables must be a
/// trailing block of the target's, uncoupled in the target pencil.
MuPoly embed(const MuPoly& v, size_t s, const StarSystem& target);

}  // namespace gradstar

#endif
