#include "wzpi/poly2.hpp"

#include <sstream>

namespace wzpi {

Poly2::Poly2(const Rational& c) {
    if (!c.is_zero())
        terms_[{0, 0}] = c;
}

Poly2 Poly2::var_n() { return monomial(1, 1, 0); }
Poly2 Poly2::var_k() { return monomial(1, 0, 1); }

Poly2 Poly2::monomial(const Rational& coeff, long dn, long dk) {
    Poly2 p;
    if (!coeff.is_zero())
        p.terms_[{dn, dk}] = coeff;
    return p;
}

bool Poly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational Poly2::constant_value() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

long Poly2::degree_n() const {
    long d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.dn);
    return d;
}

long Poly2::degree_k() const {
    long d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.dk);
    return d;
}

long Poly2::total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

const Rational& Poly2::leading_coeff() const {
    if (terms_.empty())
        throw DomainError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational Poly2::coeff(long dn, long dk) const {
    auto it = terms_.find({dn, dk});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.dn + mb.dn, ma.dk + mb.dk}, ca * cb);
    return r;
}

Poly2& Poly2::operator*=(const Poly2& o) {
    *this = *this * o;
    return *this;
}

Poly2 Poly2::operator*(const Rational& c) const {
    Poly2 r;
    if (c.is_zero())
        return r;
    for (const auto& [m, coeff] : terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

Rational Poly2::eval(const Rational& n, const Rational& k) const {
    // Few terms and small degrees throughout; direct powers are fine.
    Rational acc(0);
    for (const auto& [m, c] : terms_)
        acc += c * n.pow(m.dn) * k.pow(m.dk);
    return acc;
}

Poly2 Poly2::substitute_n(const Rational& value) const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        r.add_term({0, m.dk}, c * value.pow(m.dn));
    return r;
}

Poly2 Poly2::substitute_k(const Rational& value) const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        r.add_term({m.dn, 0}, c * value.pow(m.dk));
    return r;
}

Poly2 Poly2::shift(long dn, long dk) const {
    const Poly2 n_shifted = Poly2::var_n() + Poly2(dn);
    const Poly2 k_shifted = Poly2::var_k() + Poly2(dk);
    Poly2 r;
    for (const auto& [m, c] : terms_)
        r += n_shifted.pow(m.dn) * k_shifted.pow(m.dk) * Poly2(c);
    return r;
}

Poly2 Poly2::pow(long e) const {
    if (e < 0)
        throw DomainError("negative polynomial power");
    Poly2 r(1);
    Poly2 base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            r *= base;
        if (e > 1)
            base *= base;
    }
    return r;
}

Rational Poly2::content() const {
    if (terms_.empty())
        return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(num_gcd, den_lcm); // num_gcd > 0 since some coeff != 0
}

std::string Poly2::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg)
                out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool has_vars = m.dn > 0 || m.dk > 0;
        const bool unit = (mag == Rational(1));
        if (!unit || !has_vars)
            out << mag.str();
        bool need_star = !unit || !has_vars;
        auto emit_var = [&](char v, long d) {
            if (d == 0)
                return;
            if (need_star)
                out << '*';
            out << v;
            if (d > 1)
                out << '^' << d;
            need_star = true;
        };
        emit_var('n', m.dn);
        emit_var('k', m.dk);
    }
    return out.str();
}

} // namespace wzpi
