#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zinbiel/errors.hpp"

namespace zinbiel {

/// Arbitrary-precision rational, always kept in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(mpq_class q);

    /// Parses "p" or "p/q" with optional sign. Throws ParseError.
    static Rational from_string(std::string_view s);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    /// Multiplicative inverse; throws DomainError on zero.
    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Canonical text: "p/q", with "/q" omitted when q = 1.
    std::string str() const;

    /// Nearest double, for diagnostics only.
    double to_double() const { return q_.get_d(); }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(a, b) with the summation convention: 0 when b < 0 or b > a.
/// Throws DomainError when a < 0.
Rational binomial(long a, long b);

/// gcd of two integers as a positive mpz.
mpz_class gcd_z(const mpz_class& a, const mpz_class& b);

} // namespace zinbiel
