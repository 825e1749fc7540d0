#ifndef GRADSTAR_SCALAR_HPP
#define GRADSTAR_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gradstar {

using Rational = mpq_class;

enum class Field { Real, Complex };

inline const char* field_name(Field f) {
    return f == Field::Real ? "real" : "complex";
}

/// Parses "p/q" or "p" into a canonical rational (q > 0, gcd(p,q) = 1).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Renders without "/q" when the denominator is 1.
inline std::string rational_str(const Rational& q) {
    return q.get_str();
}

// Complex rational p + iq with exact arithmetic. Real-mode data simply keeps
// im == 0; the mode itself is tracked by Poly and the surrounding structures.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar from_strings(const std::string& re, const std::string& im) {
        return Scalar(parse_rational(re), parse_rational(im));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar inverse() const {
        Rational n = re_ * re_ + im_ * im_;
        if (n == 0) throw std::domain_error("division by zero scalar");
        return Scalar(re_ / n, -im_ / n);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order for use as a map key; not a numeric order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    std::string str() const {
        if (im_ == 0) return rational_str(re_);
        return rational_str(re_) + (sgn(im_) < 0 ? "" : "+") + rational_str(im_) + "i";
    }

private:
    Rational re_, im_;
};

/// Binomial with a possibly negative upper index: 0 for b < 0, otherwise the
/// falling factorial a(a-1)...(a-b+1)/b!.  C(-1,0) = 1 and C(0,1) = 0.
inline Rational binomial(long a, long b) {
    if (b < 0) return Rational(0);
    Rational num(1), den(1);
    for (long k = 0; k < b; ++k) {
        num *= Rational(a - k);
        den *= Rational(k + 1);
    }
    Rational r = num / den;
    r.canonicalize();
    return r;
}

inline Rational factorial(long n) {
    Rational r(1);
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace gradstar

#endif
