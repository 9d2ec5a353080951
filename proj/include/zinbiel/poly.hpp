#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// The closed variable universe: the four base-change unknowns plus the four
/// classification parameters. Name-sorted, so lexicographic comparison of
/// exponent vectors matches lexicographic comparison of names.
inline constexpr int kNumVars = 8;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "A", "B", "C", "D", "beta1", "delta1", "delta_pm1", "gamma1"};

/// Index of `name` in kVarNames, or -1.
int var_index(std::string_view name);

struct Monomial {
    std::array<std::uint8_t, kNumVars> e{};

    static Monomial one() { return {}; }
    static Monomial var(int idx, int exp = 1);

    int total_degree() const;
    bool is_one() const { return total_degree() == 0; }
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial divide(const Monomial& m) const; // requires m.divides(*this)

    /// Graded-lex order: higher total degree first, ties by exponent vector.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& m) const { return e == m.e; }
};

/// Sparse multivariate polynomial with Rational coefficients.
/// Terms are kept sorted with the leading monomial first.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational c);
    explicit Poly(long c) : Poly(Rational(c)) {}
    static Poly variable(int idx);
    static Poly term(const Monomial& m, Rational c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    /// Constant term value (zero polynomial gives 0).
    Rational constant_value() const;
    int total_degree() const;
    int degree_in(int var) const;
    bool uses_var(int var) const;
    /// Lowest variable index occurring, or -1 for constants.
    int lowest_var() const;

    const std::vector<std::pair<Monomial, Rational>>& terms() const { return t_; }
    const Rational& leading_coeff() const;
    const Monomial& leading_mono() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly mul(const Rational& c) const;
    Poly pow(int k) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(t_ == o.t_); }

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Poly> try_divide(const Poly& g) const;
    /// Exact division; throws DomainError when not divisible.
    Poly divexact(const Poly& g) const;

    /// Polynomial gcd, normalized monic in the leading coefficient.
    /// gcd(0, 0) = 0; gcd with a nonzero constant is 1.
    static Poly gcd(const Poly& a, const Poly& b);

    /// Replaces `var` by `value` everywhere.
    Poly substitute(int var, const Poly& value) const;

    /// Evaluates at a full assignment of every variable the poly uses.
    /// Unassigned used variable -> DomainError naming it.
    Rational eval(const std::array<std::optional<Rational>, kNumVars>& assignment) const;

    /// Monic associate (leading coefficient 1); zero stays zero.
    Poly monic() const;

    /// Canonical text, leading term first, e.g. "beta1^2 - 1/2*beta1 + 3".
    std::string str() const;

  private:
    // invariant: sorted descending by Monomial::cmp, no zero coefficients
    std::vector<std::pair<Monomial, Rational>> t_;
    void normalize();
    friend class PolyBuilder;
};

/// Accumulates terms out of order, then produces a canonical Poly.
class PolyBuilder {
  public:
    void add(const Monomial& m, const Rational& c);
    Poly build();

  private:
    std::vector<std::pair<Monomial, Rational>> acc_;
};

} // namespace zinbiel
