#pragma once

#include <map>
#include <string>
#include <string_view>

#include "wzpi/rational.hpp"

namespace wzpi {

/// Exponent pair of a monomial n^dn * k^dk.
struct Monomial {
    long dn = 0;
    long dk = 0;
    long total() const { return dn + dk; }
    bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic order with n > k, largest monomial first.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total())
            return a.total() > b.total();
        return a.dn > b.dn;
    }
};

/// Bivariate polynomial over the rationals in variables n and k.
/// Zero coefficients are never stored; the zero polynomial has an
/// empty term map. Immutable-by-convention value type.
class Poly2 {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    Poly2() = default;
    Poly2(long c) : Poly2(Rational(c)) {} // NOLINT: implicit by design
    Poly2(const Rational& c);             // NOLINT: implicit by design

    static Poly2 var_n();
    static Poly2 var_k();
    static Poly2 monomial(const Rational& coeff, long dn, long dk);
    /// Parses the expression grammar of str(); accepts +, -, *, /, ^ and
    /// parentheses but requires the result to be polynomial.
    static Poly2 parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value when is_constant()).
    Rational constant_value() const;

    long degree_n() const;
    long degree_k() const;
    long total_degree() const; // -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    /// Leading coefficient under graded-lex order with n > k.
    const Rational& leading_coeff() const;
    /// Coefficient of n^dn * k^dk (zero if absent).
    Rational coeff(long dn, long dk) const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 operator*(const Rational& c) const;

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& n, const Rational& k) const;
    /// Substitutes n := value, leaving a polynomial in k alone.
    Poly2 substitute_n(const Rational& value) const;
    Poly2 substitute_k(const Rational& value) const;
    /// Substitutes n := n + dn, k := k + dk.
    Poly2 shift(long dn, long dk) const;
    Poly2 pow(long e) const; // e >= 0

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial has content 0.
    Rational content() const;

    /// Expanded human-readable form, e.g. "4*k^2 + 4*k + 1".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
    friend class RatFunc;
};

/// GCD over Q[n,k], canonicalized to coprime integer coefficients with a
/// positive leading coefficient. gcd(0,0) = 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Exact quotient a/b; throws DomainError if b does not divide a.
Poly2 div_exact(const Poly2& a, const Poly2& b);

} // namespace wzpi
