#pragma once

#include <string>
#include <string_view>

#include "wzpi/poly2.hpp"

namespace wzpi {

/// Rational function in n and k over Q, kept in canonical form:
/// numerator and denominator coprime, denominator with coprime integer
/// coefficients and positive leading coefficient under graded lex.
/// Two rational functions are equal iff their fields are identical.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}           // NOLINT: implicit by design
    RatFunc(const Rational& c) : num_(c), den_(1) {} // NOLINT: implicit by design
    RatFunc(Poly2 p) : num_(std::move(p)), den_(1) {} // NOLINT: implicit by design
    RatFunc(Poly2 num, Poly2 den);

    static RatFunc parse(std::string_view text);

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc pow(long e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Exact value; throws PoleError when the denominator vanishes at (n,k).
    Rational eval(const Rational& n, const Rational& k) const;
    /// Substitutes n := n + dn, k := k + dk.
    RatFunc shift(long dn, long dk) const;
    /// Specializes n := value, leaving a rational function of k.
    RatFunc substitute_n(const Rational& value) const;

    /// "num" or "(num)/(den)" in expanded polynomial form.
    std::string str() const;

private:
    void normalize();

    Poly2 num_;
    Poly2 den_;
};

} // namespace wzpi
