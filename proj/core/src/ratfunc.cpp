#include "wzpi/ratfunc.hpp"

#include <utility>

namespace wzpi {

RatFunc::RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZeroError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly2(1);
        return;
    }
    const Poly2 g = gcd(num_, den_);
    if (g.total_degree() > 0 || !(g.constant_value() == Rational(1))) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    // Scale so the denominator has coprime integer coefficients and a
    // positive graded-lex leading coefficient.
    Rational scale = den_.content().reciprocal();
    if (den_.leading_coeff().sign() < 0)
        scale = -scale;
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero())
        throw DivisionByZeroError("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0)
        return RatFunc(1);
    if (e < 0)
        return (RatFunc(1) / *this).pow(-e);
    RatFunc r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    r.normalize(); // powers stay coprime; rescales integer content only
    return r;
}

Rational RatFunc::eval(const Rational& n, const Rational& k) const {
    const Rational d = den_.eval(n, k);
    if (d.is_zero())
        throw PoleError("rational function evaluated at a pole");
    return num_.eval(n, k) / d;
}

RatFunc RatFunc::shift(long dn, long dk) const {
    return RatFunc(num_.shift(dn, dk), den_.shift(dn, dk));
}

RatFunc RatFunc::substitute_n(const Rational& value) const {
    Poly2 d = den_.substitute_n(value);
    if (d.is_zero())
        throw PoleError("denominator vanishes identically at n substitution");
    return RatFunc(num_.substitute_n(value), std::move(d));
}

std::string RatFunc::str() const {
    if (den_ == Poly2(1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace wzpi
