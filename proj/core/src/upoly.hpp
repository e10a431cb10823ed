#pragma once

// Internal dense univariate polynomials over Rational, used by the
// bivariate GCD and by the series ratio-bound certificates. Zero is the
// empty vector; otherwise the top coefficient is nonzero.

#include <vector>

#include "wzpi/rational.hpp"

namespace wzpi::detail {

using UPoly = std::vector<Rational>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

inline long udeg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }
inline bool uis_zero(const UPoly& p) { return p.empty(); }

inline UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] += b[i];
    }
    utrim(r);
    return r;
}

inline UPoly uneg(UPoly a) {
    for (auto& c : a)
        c = -c;
    return a;
}

inline UPoly usub(const UPoly& a, const UPoly& b) { return uadd(a, uneg(b)); }

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

inline UPoly uscale(UPoly a, const Rational& c) {
    if (c.is_zero())
        return {};
    for (auto& x : a)
        x *= c;
    return a;
}

/// Division with remainder over Q; b must be nonzero.
inline void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (uis_zero(b))
        throw DivisionByZeroError("univariate division by zero polynomial");
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    r = a;
    const Rational lead_inv = b.back().reciprocal();
    while (!uis_zero(r) && r.size() >= b.size()) {
        const size_t shift = r.size() - b.size();
        const Rational c = r.back() * lead_inv;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= c * b[i];
        utrim(r); // top coefficient cancels exactly
    }
    utrim(q);
}

inline UPoly udiv_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    udivmod(a, b, q, r);
    if (!uis_zero(r))
        throw DomainError("inexact univariate division");
    return q;
}

/// Monic GCD over Q; ugcd(0,0) = 0.
inline UPoly ugcd(UPoly a, UPoly b) {
    while (!uis_zero(b)) {
        UPoly q, r;
        udivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!uis_zero(a) && !(a.back() == Rational(1)))
        a = uscale(a, a.back().reciprocal());
    return a;
}

inline Rational ueval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

/// Coefficients of p(shift + x) as a polynomial in x.
inline UPoly ushift(const UPoly& p, const Rational& shift) {
    UPoly r;
    const UPoly lin = {shift, Rational(1)};
    for (size_t i = p.size(); i-- > 0;) {
        r = umul(r, lin);
        if (!p[i].is_zero())
            r = uadd(r, UPoly{p[i]});
    }
    return r;
}

} // namespace wzpi::detail
