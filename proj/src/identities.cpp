#include "zinbiel/identities.hpp"

#include <algorithm>

#include "zinbiel/linalg.hpp"

namespace zinbiel {

Rational lemma_alternating_sum(long n, long a) {
    if (n < 1 || a < 1)
        throw DomainError("lemma_alternating_sum requires n, a >= 1");
    Rational sum(0);
    for (long k = 0; k <= n; ++k) {
        Rational term = binomial(a, k) * binomial(a + n - k - 1, n - k);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

RatMat binomial_matrix(int p) {
    if (p < 2)
        throw DomainError("binomial_matrix requires p >= 2");
    RatMat m(static_cast<std::size_t>(p) + 1, RatVec(static_cast<std::size_t>(p) + 1));
    for (int r = 0; r <= p; ++r)
        for (int c = 0; c <= p; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = binomial(p + r - c, r);
    return m;
}

RatMat subtract_previous_rows(const RatMat& m) {
    RatMat out = m;
    for (std::size_t r = m.size(); r-- > 1;)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            out[r][c] = m[r][c] - m[r - 1][c];
    return out;
}

namespace {

// row reduction of [A | b] with multiplier tracking; returns (rank of A,
// first inconsistent row's multipliers scaled so that y^T b = 1, or empty)
struct Reduction {
    int rank_a = 0;
    RatVec farkas;
};

Reduction reduce_with_multipliers(const RatMat& a, const RatVec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    RatMat work = a;
    RatVec rhs = b;
    RatMat mult(rows, RatVec(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        mult[i][i] = Rational(1);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!work[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        std::swap(work[piv], work[r]);
        std::swap(rhs[piv], rhs[r]);
        std::swap(mult[piv], mult[r]);
        Rational inv = work[r][c].inverse();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || work[i][c].is_zero())
                continue;
            Rational f = work[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                work[i][j] -= f * work[r][j];
            rhs[i] -= f * rhs[r];
            for (std::size_t j = 0; j < rows; ++j)
                mult[i][j] -= f * mult[r][j];
        }
        ++r;
    }
    Reduction red;
    red.rank_a = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) {
            Rational scale = rhs[i].inverse();
            for (auto& y : mult[i])
                y *= scale;
            red.farkas = mult[i];
            break;
        }
    return red;
}

} // namespace

LinearSystem::Descriptor LinearSystem::descriptor() const {
    Reduction red = reduce_with_multipliers(matrix, rhs);
    int vars = matrix.empty() ? 0 : static_cast<int>(matrix[0].size());
    if (!red.farkas.empty())
        return {Kind::Infeasible, red.rank_a, -1};
    int dim = vars - red.rank_a;
    return {dim == 0 ? Kind::Unique : Kind::Affine, red.rank_a, dim};
}

RatVec LinearSystem::residuals(const RatVec& beta) const {
    if (!matrix.empty() && beta.size() != matrix[0].size())
        throw DimensionError("residuals: wrong number of variables");
    RatVec out;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < beta.size(); ++j)
            acc += matrix[i][j] * beta[j];
        out.push_back(acc - rhs[i]);
    }
    return out;
}

LinearSystem LinearSystem::pin_variable(int idx, const Rational& value) const {
    LinearSystem out;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        RatVec row;
        for (std::size_t j = 0; j < matrix[i].size(); ++j)
            if (static_cast<int>(j) != idx)
                row.push_back(matrix[i][j]);
        out.matrix.push_back(std::move(row));
        out.rhs.push_back(rhs[i] - matrix[i][static_cast<std::size_t>(idx)] * value);
    }
    return out;
}

RatVec LinearSystem::farkas_certificate() const {
    return reduce_with_multipliers(matrix, rhs).farkas;
}

LinearSystem eq9_system(int p, int i_max) {
    if (p < 3 || i_max < 1)
        throw DomainError("eq9_system requires p >= 3 and i_max >= 1");
    LinearSystem sys;
    for (int i = 1; i <= i_max; ++i) {
        RatVec row;
        for (int k = 0; k <= p; ++k)
            row.push_back(binomial(p + i - 1 - k, i - 1));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(Rational(0));
    }
    return sys;
}

NonexistenceReport nonexistence_certificate(int p) {
    NonexistenceReport rep;
    rep.p = p;
    RatMat m = binomial_matrix(p);
    rep.det = det_rational(m);

    LinearSystem sys = eq9_system(p, p + 1);
    rep.rank = sys.descriptor().rank;
    LinearSystem pinned = sys.pin_variable(0, Rational(1));
    auto desc = pinned.descriptor();
    rep.infeasible = desc.kind == LinearSystem::Kind::Infeasible;
    if (rep.infeasible)
        rep.farkas = pinned.farkas_certificate();
    rep.statement = "rows i = 1.." + std::to_string(p + 1) +
                    " force beta_0 = 0, contradicting beta_0 = 1";
    return rep;
}

bool check_nonexistence_certificate(const NonexistenceReport& rep) {
    if (!rep.infeasible || rep.farkas.empty())
        return false;
    LinearSystem pinned = eq9_system(rep.p, rep.p + 1).pin_variable(0, Rational(1));
    if (rep.farkas.size() != pinned.matrix.size())
        return false;
    std::size_t vars = pinned.matrix[0].size();
    for (std::size_t j = 0; j < vars; ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i < pinned.matrix.size(); ++i)
            acc += rep.farkas[i] * pinned.matrix[i][j];
        if (!acc.is_zero())
            return false; // y^T A must vanish
    }
    Rational acc(0);
    for (std::size_t i = 0; i < pinned.matrix.size(); ++i)
        acc += rep.farkas[i] * pinned.rhs[i];
    return acc.is_one(); // y^T b = 1, the "1 = 0" combination
}

} // namespace zinbiel
