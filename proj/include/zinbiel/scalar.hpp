#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zinbiel/poly.hpp"

namespace zinbiel {

/// Element of Q or of the rational-function field Q(parameters).
///
/// Canonical form is maintained eagerly: the fraction num/den is reduced
/// (no common polynomial factor), the denominator is monic, and a value
/// that is actually rational is stored on the rational fast path.
class Scalar {
  public:
    Scalar() : r_(0) {}
    Scalar(Rational r) : r_(std::move(r)) {}
    Scalar(long n) : r_(n) {}
    Scalar(int n) : r_(n) {}
    explicit Scalar(const Poly& p);
    Scalar(const Poly& num, const Poly& den); // reduces; throws on zero den

    /// The scalar consisting of the named parameter. Throws ParseError for
    /// names outside the declared universe.
    static Scalar parameter(std::string_view name);

    /// Parses the textual encoding (sums/products/powers/fractions of
    /// rationals and parameter names).
    static Scalar parse(std::string_view text);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return !f_; }
    /// Rational value; throws DomainError when symbolic.
    const Rational& rational() const;

    Poly numerator_poly() const;
    Poly denominator_poly() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True when the scalar involves at least one parameter.
    bool symbolic() const { return static_cast<bool>(f_); }
    /// Parameter indices used (into kVarNames).
    std::vector<int> used_params() const;

    /// Exact substitution. Every parameter occurring must be assigned and the
    /// denominator must not vanish at the assignment.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    /// Canonical text; round-trips bit-exactly through parse().
    std::string str() const;

  private:
    struct Frac {
        Poly num;
        Poly den;
    };
    Rational r_;                   // value when !f_
    std::optional<Frac> f_;        // reduced, monic denominator, non-constant content

    static Scalar make(Poly num, Poly den);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// eval_params over a whole assignment given by parameter name.
Rational eval_params(const Scalar& s, const std::map<std::string, Rational>& assignment);

} // namespace zinbiel
