#include "zinbiel/linalg.hpp"

#include <algorithm>

namespace zinbiel {

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec zero_vec(int n) {
    return Vec(static_cast<std::size_t>(n), Scalar(0));
}

Vec unit_vec(int n, int i) {
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(i - 1)] = Scalar(1);
    return v;
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionError("vector size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec scale_vec(const Vec& v, const Scalar& c) {
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

Mat identity_mat(int n) {
    Mat m(static_cast<std::size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty())
        return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k)
        throw DimensionError("matrix product size mismatch");
    Mat r(n, Vec(m, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero())
                    continue;
                r[i][j] += a[i][t] * b[t][j];
            }
        }
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.empty())
        return {};
    if (m[0].size() != v.size())
        throw DimensionError("matrix-vector size mismatch");
    Vec r(m.size(), Scalar(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero())
                r[i] += m[i][j] * v[j];
    return r;
}

RrefInfo rref(Mat& m) {
    RrefInfo info;
    if (m.empty())
        return info;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // prefer a rational pivot; otherwise take a symbolic one and record it
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero())
                continue;
            if (!m[i][c].symbolic()) {
                piv = i;
                break;
            }
            if (piv == rows)
                piv = i;
        }
        if (piv == rows)
            continue;
        if (m[piv][c].symbolic()) {
            Poly num = m[piv][c].numerator_poly();
            if (std::find(info.side_conditions.begin(), info.side_conditions.end(), num) ==
                info.side_conditions.end())
                info.side_conditions.push_back(num);
        }
        std::swap(m[piv], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        info.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    info.rank = static_cast<int>(r);
    return info;
}

int rank_of(Mat m) {
    return rref(m).rank;
}

Mat kernel_basis(const Mat& m, std::vector<Poly>* side_conditions) {
    if (m.empty())
        return {};
    Mat work = m;
    RrefInfo info = rref(work);
    if (side_conditions)
        *side_conditions = info.side_conditions;
    std::size_t cols = m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int p : info.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    Mat result;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (int ri = 0; ri < info.rank; ++ri) {
            std::size_t pc = static_cast<std::size_t>(info.pivots[static_cast<std::size_t>(ri)]);
            v[pc] = -work[static_cast<std::size_t>(ri)][free];
        }
        result.push_back(std::move(v));
    }
    return result;
}

Subspace Subspace::span(const Mat& vectors, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    Mat work;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw DimensionError("subspace vector of wrong length");
        if (!is_zero_vec(v))
            work.push_back(v);
    }
    RrefInfo info = rref(work);
    work.resize(static_cast<std::size_t>(info.rank));
    s.rows_ = std::move(work);
    s.pivots_ = info.pivots;
    s.conds_ = info.side_conditions;
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw DimensionError("reduce: vector of wrong length");
    Vec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t pc = static_cast<std::size_t>(pivots_[i]);
        if (r[pc].is_zero())
            continue;
        Scalar f = r[pc]; // pivot entries are 1
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] -= f * rows_[i][j];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

Rational det_rational(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw DimensionError("determinant of non-square matrix");
    if (n == 0)
        return Rational(1);
    auto a = m;
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!a[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n)
            return Rational(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        Rational inv = a[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero())
                continue;
            Rational f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

} // namespace zinbiel
