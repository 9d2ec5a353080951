#pragma once

#include <string>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

using RatMat = std::vector<std::vector<Rational>>;
using RatVec = std::vector<Rational>;

/// sum_{k=0}^{n} (-1)^k C(a,k) C(a+n-k-1, n-k); zero for all n, a >= 1.
Rational lemma_alternating_sum(long n, long a);

/// (p+1)x(p+1) matrix with entry [r][c] = C(p+r-c, r) (0-based): first row
/// all ones, last column all ones.
RatMat binomial_matrix(int p);

/// One simultaneous pass of "subtract the previous row from each row"
/// (top row kept); iterated p times this reaches the anti-triangular
/// reduced shape with entries C(p-c, r).
RatMat subtract_previous_rows(const RatMat& m);

/// Homogeneous linear system over unknowns beta_0..beta_p.
struct LinearSystem {
    RatMat matrix; // rows i = 1..i_max, columns k = 0..p
    RatVec rhs;

    enum class Kind { Unique, Affine, Infeasible };
    struct Descriptor {
        Kind kind;
        int rank;
        int solution_dim; // affine dimension of the solution set (-1 when infeasible)
    };
    Descriptor descriptor() const;

    /// Row residuals at a candidate solution.
    RatVec residuals(const RatVec& beta) const;

    /// New system with variable `idx` pinned to `value` (moved to the rhs).
    LinearSystem pin_variable(int idx, const Rational& value) const;

    /// When infeasible: multipliers y with y^T A = 0 and y^T b = 1.
    /// Empty when the system is consistent.
    RatVec farkas_certificate() const;
};

/// Rows i = 1..i_max of sum_{k=0}^{p} C(p+i-1-k, i-1) beta_k = 0.
LinearSystem eq9_system(int p, int i_max);

struct NonexistenceReport {
    int p;
    Rational det;                 // determinant of binomial_matrix(p)
    int rank;                     // rank of eq9_system(p, p+1)
    bool infeasible;              // with beta_0 pinned to 1
    RatVec farkas;                // 1 = 0 combination over the pinned system
    std::string statement;
};

/// Certificate that the p+1 leading rows force beta_0 = 0 while beta_0 = 1:
/// determinant, exact rank, and a constructive infeasibility combination.
NonexistenceReport nonexistence_certificate(int p);

/// Independent check of a certificate's Farkas combination.
bool check_nonexistence_certificate(const NonexistenceReport& report);

} // namespace zinbiel
