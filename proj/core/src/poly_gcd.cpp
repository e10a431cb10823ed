// Bivariate GCD over Q[n,k] by content/primitive-part reduction in
// (Q[k])[n] with a primitive pseudo-remainder sequence, plus exact
// division. Certificate denominators are small products of linear
// factors, so no sparse or modular tricks are needed.

#include "upoly.hpp"
#include "wzpi/poly2.hpp"

namespace wzpi {
namespace {

using detail::UPoly;

// Polynomial in n whose coefficients are polynomials in k.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && detail::uis_zero(p.back()))
        p.pop_back();
}

long bdeg(const BPoly& p) { return static_cast<long>(p.size()) - 1; }

BPoly to_bpoly(const Poly2& p) {
    BPoly r(static_cast<size_t>(p.degree_n()) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& coeff = r[static_cast<size_t>(m.dn)];
        if (coeff.size() <= static_cast<size_t>(m.dk))
            coeff.resize(static_cast<size_t>(m.dk) + 1, Rational(0));
        coeff[static_cast<size_t>(m.dk)] = c;
    }
    btrim(r);
    return r;
}

Poly2 from_bpoly(const BPoly& p) {
    Poly2 r;
    for (size_t dn = 0; dn < p.size(); ++dn)
        for (size_t dk = 0; dk < p[dn].size(); ++dk)
            if (!p[dn][dk].is_zero())
                r += Poly2::monomial(p[dn][dk], static_cast<long>(dn), static_cast<long>(dk));
    return r;
}

BPoly bmul_upoly(const BPoly& p, const UPoly& c) {
    BPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = detail::umul(p[i], c);
    btrim(r);
    return r;
}

BPoly bdiv_upoly(const BPoly& p, const UPoly& c) {
    BPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = detail::uis_zero(p[i]) ? UPoly{} : detail::udiv_exact(p[i], c);
    btrim(r);
    return r;
}

BPoly bsub(const BPoly& a, const BPoly& b) {
    BPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        const UPoly& x = i < a.size() ? a[i] : UPoly{};
        const UPoly& y = i < b.size() ? b[i] : UPoly{};
        r[i] = detail::usub(x, y);
    }
    btrim(r);
    return r;
}

// GCD in Q[k] of all n-coefficients.
UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& c : p)
        g = detail::ugcd(g, c);
    return g;
}

// Pseudo-remainder of a by b in (Q[k])[n]: repeatedly kill the leading
// term via lc(b)*a - lc(a)*n^d*b. No coefficient division is needed.
BPoly bprem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && bdeg(a) >= bdeg(b)) {
        const size_t shift = static_cast<size_t>(bdeg(a) - bdeg(b));
        const UPoly la = a.back();
        BPoly scaled_b(shift, UPoly{});
        for (const auto& c : b)
            scaled_b.push_back(detail::umul(c, la));
        a = bsub(bmul_upoly(a, lb), scaled_b);
    }
    return a;
}

BPoly bprimitive(const BPoly& p) {
    if (p.empty())
        return p;
    return bdiv_upoly(p, bcontent(p));
}

BPoly bgcd(BPoly a, BPoly b) {
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    const UPoly cont = detail::ugcd(bcontent(a), bcontent(b));
    a = bprimitive(a);
    b = bprimitive(b);
    if (bdeg(a) < bdeg(b))
        std::swap(a, b);
    // Primitive PRS; degrees here are tiny so coefficient growth is moot.
    while (bdeg(b) > 0) {
        BPoly r = bprem(a, b);
        a = std::move(b);
        if (r.empty()) {
            return bmul_upoly(bprimitive(a), cont);
        }
        b = bprimitive(r);
    }
    // b is a nonzero element of Q[k]: primitive parts are coprime in n.
    return {cont};
}

// Canonical form for a public GCD: coprime integer coefficients,
// positive leading coefficient under graded lex.
Poly2 canonical_primitive(const Poly2& p) {
    if (p.is_zero())
        return p;
    Poly2 r = p * p.content().reciprocal();
    if (r.leading_coeff().sign() < 0)
        r = -r;
    return r;
}

} // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero())
        return canonical_primitive(b);
    if (b.is_zero())
        return canonical_primitive(a);
    return canonical_primitive(from_bpoly(bgcd(to_bpoly(a), to_bpoly(b))));
}

Poly2 div_exact(const Poly2& a, const Poly2& b) {
    if (b.is_zero())
        throw DivisionByZeroError("polynomial division by zero");
    if (a.is_zero())
        return {};
    BPoly rem = to_bpoly(a);
    const BPoly den = to_bpoly(b);
    BPoly quot(rem.size(), UPoly{});
    while (!rem.empty() && bdeg(rem) >= bdeg(den)) {
        const size_t shift = static_cast<size_t>(bdeg(rem) - bdeg(den));
        UPoly c = detail::udiv_exact(rem.back(), den.back());
        quot[shift] = detail::uadd(quot[shift], c);
        BPoly scaled(shift, UPoly{});
        for (const auto& dc : den)
            scaled.push_back(detail::umul(dc, c));
        rem = bsub(rem, scaled);
        if (!rem.empty() && bdeg(rem) >= bdeg(den) + static_cast<long>(shift))
            throw DomainError("inexact polynomial division"); // degree must drop
    }
    if (!rem.empty())
        throw DomainError("inexact polynomial division");
    btrim(quot);
    return from_bpoly(quot);
}

} // namespace wzpi
