#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "wzpi/errors.hpp"

namespace wzpi {

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator. Zero is uniquely 0/1. Immutable value semantics; all
/// operations are pure, so concurrent use needs no coordination.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}       // NOLINT: implicit by design
    Rational(mpz_class n) : num_(std::move(n)), den_(1) {}
    Rational(mpz_class num, mpz_class den);

    /// Parses "p" or "p/q" with optional leading '-'.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;
    Rational pow(long e) const;

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const;
    double approx() const { return mpq_class(num_, den_).get_d(); }

private:
    void reduce();

    mpz_class num_;
    mpz_class den_; // > 0
};

} // namespace wzpi
