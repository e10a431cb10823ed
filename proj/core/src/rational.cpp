#include "wzpi/rational.hpp"

#include <utility>

namespace wzpi {

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0)
        throw DivisionByZeroError("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw DivisionByZeroError();
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // a/b <=> c/d  iff  a*d <=> c*b, since b,d > 0
    int c = cmp(num_ * o.den_, o.num_ * den_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
    if (num_ == 0)
        throw DivisionByZeroError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(r.num_.get_mpz_t(), base.num_.get_mpz_t(), n);
    mpz_pow_ui(r.den_.get_mpz_t(), base.den_.get_mpz_t(), n);
    return r; // powers of a reduced fraction stay reduced
}

std::string Rational::str() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
        s += '/';
        s += den_.get_str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return ParseError("bad rational: '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    auto check_int = [&](std::string_view s, bool allow_sign) {
        if (s.empty())
            throw bad();
        size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            throw bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw bad();
    };
    check_int(num_part, true);
    mpz_class num(std::string(num_part), 10);
    if (slash == std::string_view::npos)
        return Rational(std::move(num));
    const std::string_view den_part = text.substr(slash + 1);
    check_int(den_part, false);
    mpz_class den(std::string(den_part), 10);
    if (den == 0)
        throw DivisionByZeroError("rational with zero denominator");
    return Rational(std::move(num), std::move(den));
}

} // namespace wzpi
