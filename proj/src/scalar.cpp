#include "zinbiel/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace zinbiel {

Scalar::Scalar(const Poly& p) {
    *this = make(p, Poly(Rational(1)));
}

Scalar::Scalar(const Poly& num, const Poly& den) {
    *this = make(num, den);
}

Scalar Scalar::parameter(std::string_view name) {
    int idx = var_index(name);
    if (idx < 0)
        throw ParseError("unknown parameter name: " + std::string(name));
    return Scalar(Poly::variable(idx));
}

Scalar Scalar::make(Poly num, Poly den) {
    if (den.is_zero())
        throw DomainError("scalar with zero denominator");
    Scalar s;
    if (num.is_zero()) {
        s.r_ = Rational(0);
        return s;
    }
    if (num.is_constant() && den.is_constant()) {
        s.r_ = num.constant_value() / den.constant_value();
        return s;
    }
    Poly g = Poly::gcd(num, den);
    if (!g.is_constant()) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    // monic denominator
    Rational lc = den.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num = num.mul(inv);
        den = den.mul(inv);
    }
    if (num.is_constant() && den.is_constant()) {
        s.r_ = num.constant_value() / den.constant_value();
        return s;
    }
    s.f_ = Frac{std::move(num), std::move(den)};
    return s;
}

bool Scalar::is_zero() const {
    return !f_ && r_.is_zero();
}

bool Scalar::is_one() const {
    return !f_ && r_.is_one();
}

const Rational& Scalar::rational() const {
    if (f_)
        throw DomainError("scalar is symbolic, not rational");
    return r_;
}

Poly Scalar::numerator_poly() const {
    return f_ ? f_->num : Poly(r_);
}

Poly Scalar::denominator_poly() const {
    return f_ ? f_->den : Poly(Rational(1));
}

Scalar Scalar::operator-() const {
    if (!f_)
        return Scalar(-r_);
    return make(-f_->num, f_->den);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!f_ && !o.f_)
        return Scalar(r_ + o.r_);
    const Poly n1 = f_ ? f_->num : Poly(r_);
    const Poly d1 = f_ ? f_->den : Poly(Rational(1));
    const Poly n2 = o.f_ ? o.f_->num : Poly(o.r_);
    const Poly d2 = o.f_ ? o.f_->den : Poly(Rational(1));
    return make(n1 * d2 + n2 * d1, d1 * d2);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (!f_ && !o.f_)
        return Scalar(r_ * o.r_);
    if (is_zero() || o.is_zero())
        return Scalar(Rational(0));
    const Poly n1 = f_ ? f_->num : Poly(r_);
    const Poly d1 = f_ ? f_->den : Poly(Rational(1));
    const Poly n2 = o.f_ ? o.f_->num : Poly(o.r_);
    const Poly d2 = o.f_ ? o.f_->den : Poly(Rational(1));
    return make(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (!f_) {
        if (r_.is_zero())
            throw DomainError("inverse of zero scalar");
        return Scalar(r_.inverse());
    }
    return make(f_->den, f_->num);
}

bool Scalar::operator==(const Scalar& o) const {
    if (static_cast<bool>(f_) != static_cast<bool>(o.f_))
        return false;
    if (!f_)
        return r_ == o.r_;
    return f_->num == o.f_->num && f_->den == o.f_->den;
}

std::vector<int> Scalar::used_params() const {
    std::vector<int> out;
    if (!f_)
        return out;
    for (int v = 0; v < kNumVars; ++v)
        if (f_->num.uses_var(v) || f_->den.uses_var(v))
            out.push_back(v);
    return out;
}

Rational Scalar::eval(const std::map<std::string, Rational>& assignment) const {
    if (!f_)
        return r_;
    std::array<std::optional<Rational>, kNumVars> a;
    for (const auto& [name, value] : assignment) {
        int idx = var_index(name);
        if (idx < 0)
            throw DomainError("unknown parameter in assignment: " + name);
        a[static_cast<std::size_t>(idx)] = value;
    }
    Rational den = f_->den.eval(a);
    if (den.is_zero())
        throw DomainError("denominator vanishes at the given assignment");
    return f_->num.eval(a) / den;
}

Rational eval_params(const Scalar& s, const std::map<std::string, Rational>& assignment) {
    return s.eval(assignment);
}

std::string Scalar::str() const {
    if (!f_)
        return r_.str();
    std::ostringstream os;
    bool den_one = f_->den.is_constant() && f_->den.constant_value().is_one();
    if (den_one) {
        os << f_->num.str();
    } else {
        os << "(" << f_->num.str() << ")/(" << f_->den.str() << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

// ---------------------------------------------------------------------------
// expression parser: + - * / ^ ( ) integer-literals parameter-names
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("scalar parse error at position " + std::to_string(pos) + ": " + what +
                         " in \"" + std::string(s) + "\"");
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (accept('+'))
                v += parse_term();
            else if (accept('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_unary();
        while (true) {
            if (accept('*'))
                v *= parse_unary();
            else if (accept('/')) {
                Scalar d = parse_unary();
                if (d.is_zero())
                    fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }

    Scalar parse_unary() {
        if (accept('-'))
            return -parse_unary();
        if (accept('+'))
            return parse_unary();
        return parse_power();
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (start == pos)
                fail("expected nonnegative integer exponent");
            long e = std::stol(std::string(s.substr(start, pos - start)));
            Scalar r(1);
            for (long k = 0; k < e; ++k)
                r *= base;
            return r;
        }
        return base;
    }

    Scalar parse_atom() {
        skip_ws();
        if (accept('(')) {
            Scalar v = parse_expr();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            mpz_class z(std::string(s.substr(start, pos - start)), 10);
            return Scalar(Rational(z));
        }
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name(s.substr(start, pos - start));
            int idx = var_index(name);
            if (idx < 0)
                fail("unknown parameter \"" + name + "\"");
            return Scalar(Poly::variable(idx));
        }
        fail("expected atom");
    }
};

} // namespace

Scalar Scalar::parse(std::string_view text) {
    Parser p{text};
    if (p.eof())
        throw ParseError("empty scalar text");
    Scalar v = p.parse_expr();
    if (!p.eof())
        p.fail("trailing input");
    return v;
}

} // namespace zinbiel
