#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

/// One term c * e_k of a sparse product vector. Indices are 1-based.
struct Term {
    int k;
    Scalar c;
    bool operator==(const Term& o) const { return k == o.k && c == o.c; }
};
using SparseVec = std::vector<Term>; // sorted by k, nonzero coefficients

Vec densify(const SparseVec& sv, int n);
SparseVec sparsify(const Vec& v);

/// Structure-constant algebra: e_i o e_j = sum_k c_{ij}^k e_k.
/// Absent (i, j) entries are zero products.
struct Algebra {
    int dim = 0;
    std::vector<std::string> labels;          // size dim
    std::vector<std::string> params;          // declared parameter names
    std::map<std::pair<int, int>, SparseVec> products;

    const SparseVec* product(int i, int j) const;
    void set_product(int i, int j, SparseVec terms);
    void add_term(int i, int j, int k, const Scalar& c);

    /// Bilinear extension of the basis products.
    Vec multiply(const Vec& u, const Vec& v) const;

    /// Index of the given basis label, 1-based; 0 when absent.
    int label_index(const std::string& label) const;

    bool operator==(const Algebra& o) const;
};

/// Abelian algebra of dimension n with labels e1..en.
Algebra abelian_algebra(int n);

struct Defect {
    int i, j, k;
    SparseVec value;
};

/// Defects of (ei o ej) o ek - ei o (ej o ek) - ei o (ek o ej) over all basis
/// triples; empty iff the algebra is Zinbiel.
std::vector<Defect> zinbiel_defects(const Algebra& a);

/// Defects of the derived identity (a o b) o c = (a o c) o b on basis triples;
/// empty for every Zinbiel algebra.
std::vector<Defect> derived_identity_defects(const Algebra& a);

/// Lower series A^1 >= A^2 >= ... listed until the zero space (inclusive) or
/// until stabilization at a nonzero space (non-nilpotent input; the repeated
/// term is kept once so callers can detect it).
std::vector<Subspace> lower_series(const Algebra& a);

std::vector<int> lower_series_dims(const Algebra& a);

/// Minimal s with A^s = 0; throws NotNilpotentError when the series
/// stabilizes above zero.
int nilindex(const Algebra& a);

bool is_nilpotent(const Algebra& a);

/// dim A^i = (n+1) - i for all i, i.e. maximal nilindex.
bool is_null_filiform(const Algebra& a);

/// The same algebra expressed in the basis given by the columns of P
/// (column i = coordinates of the new basis vector b'_i). P must be
/// invertible.
Algebra change_basis(const Algebra& a, const Mat& p);

} // namespace zinbiel
