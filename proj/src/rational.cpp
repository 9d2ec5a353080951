#include "zinbiel/rational.hpp"

#include <cctype>
#include <ostream>

namespace zinbiel {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw DomainError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0)
        throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    // strict grammar: [+-]?digits(/digits)?
    std::string t(s);
    if (t.empty())
        throw ParseError("empty rational literal");
    std::size_t pos = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = pos; i < t.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            seen_digit = true;
        } else if (t[i] == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw ParseError("malformed rational literal: " + t);
        }
    }
    if (!seen_digit)
        throw ParseError("malformed rational literal: " + t);
    mpq_class q;
    if (q.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
        throw ParseError("malformed rational literal: " + t);
    if (q.get_den() == 0)
        throw ParseError("zero denominator in rational literal: " + t);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero())
        throw DomainError("division by zero");
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

std::string Rational::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(long a, long b) {
    if (a < 0)
        throw DomainError("binomial with negative upper index");
    if (b < 0 || b > a)
        return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(z);
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace zinbiel
