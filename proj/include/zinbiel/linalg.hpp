#pragma once

#include <vector>

#include "zinbiel/scalar.hpp"

namespace zinbiel {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

bool is_zero_vec(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i); // 1-based position
Vec add_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Vec& v, const Scalar& c);

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);

struct RrefInfo {
    int rank = 0;
    std::vector<int> pivots;          // 0-based pivot columns, increasing
    std::vector<Poly> side_conditions; // parametric pivots assumed nonzero
};

/// In-place reduced row echelon form over the scalar fraction field.
/// Pivot selection prefers non-parametric entries; dividing by a parametric
/// pivot records its numerator as a nonvanishing side condition.
RrefInfo rref(Mat& m);

int rank_of(Mat m);

/// Kernel basis of m (as row vectors of coordinates in the column space).
Mat kernel_basis(const Mat& m, std::vector<Poly>* side_conditions = nullptr);

/// Row space of a set of vectors, held in RREF.
class Subspace {
  public:
    Subspace() = default;
    /// Builds the span of the given vectors (each of length `ambient`).
    static Subspace span(const Mat& vectors, int ambient);

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const Mat& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<Poly>& side_conditions() const { return conds_; }

    /// Residual of v after reduction by the rows; zero iff v is a member.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool operator==(const Subspace& o) const { return rows_ == o.rows_; }

  private:
    int ambient_ = 0;
    Mat rows_;
    std::vector<int> pivots_;
    std::vector<Poly> conds_;
};

/// Exact determinant of a square rational matrix (fraction-free Bareiss).
Rational det_rational(const std::vector<std::vector<Rational>>& m);

} // namespace zinbiel
