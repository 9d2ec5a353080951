#include "zinbiel/algebra.hpp"

#include <algorithm>

namespace zinbiel {

Vec densify(const SparseVec& sv, int n) {
    Vec v = zero_vec(n);
    for (const auto& t : sv)
        v[static_cast<std::size_t>(t.k - 1)] = t.c;
    return v;
}

SparseVec sparsify(const Vec& v) {
    SparseVec sv;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            sv.push_back({static_cast<int>(i) + 1, v[i]});
    return sv;
}

const SparseVec* Algebra::product(int i, int j) const {
    auto it = products.find({i, j});
    return it == products.end() ? nullptr : &it->second;
}

void Algebra::set_product(int i, int j, SparseVec terms) {
    std::erase_if(terms, [](const Term& t) { return t.c.is_zero(); });
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    if (terms.empty())
        products.erase({i, j});
    else
        products[{i, j}] = std::move(terms);
}

void Algebra::add_term(int i, int j, int k, const Scalar& c) {
    if (c.is_zero())
        return;
    SparseVec sv = product(i, j) ? *product(i, j) : SparseVec{};
    bool merged = false;
    for (auto& t : sv)
        if (t.k == k) {
            t.c += c;
            merged = true;
            break;
        }
    if (!merged)
        sv.push_back({k, c});
    set_product(i, j, std::move(sv));
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
    if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
        throw DimensionError("multiply: vector length differs from algebra dimension");
    Vec out = zero_vec(dim);
    for (int i = 1; i <= dim; ++i) {
        const Scalar& ui = u[static_cast<std::size_t>(i - 1)];
        if (ui.is_zero())
            continue;
        for (int j = 1; j <= dim; ++j) {
            const Scalar& vj = v[static_cast<std::size_t>(j - 1)];
            if (vj.is_zero())
                continue;
            const SparseVec* p = product(i, j);
            if (!p)
                continue;
            Scalar f = ui * vj;
            for (const auto& t : *p)
                out[static_cast<std::size_t>(t.k - 1)] += f * t.c;
        }
    }
    return out;
}

int Algebra::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return static_cast<int>(i) + 1;
    return 0;
}

bool Algebra::operator==(const Algebra& o) const {
    return dim == o.dim && labels == o.labels && params == o.params && products == o.products;
}

Algebra abelian_algebra(int n) {
    Algebra a;
    a.dim = n;
    for (int i = 1; i <= n; ++i)
        a.labels.push_back("e" + std::to_string(i));
    return a;
}

namespace {

// sparse left multiplication by basis vector: e_i o (sparse vector)
SparseVec mult_basis_sparse(const Algebra& a, int i, const SparseVec& v) {
    std::map<int, Scalar> acc;
    for (const auto& t : v) {
        const SparseVec* p = a.product(i, t.k);
        if (!p)
            continue;
        for (const auto& u : *p) {
            auto [it, fresh] = acc.try_emplace(u.k, t.c * u.c);
            if (!fresh)
                it->second += t.c * u.c;
        }
    }
    SparseVec out;
    for (auto& [k, c] : acc)
        if (!c.is_zero())
            out.push_back({k, c});
    return out;
}

// sparse right multiplication: (sparse vector) o e_j
SparseVec mult_sparse_basis(const Algebra& a, const SparseVec& v, int j) {
    std::map<int, Scalar> acc;
    for (const auto& t : v) {
        const SparseVec* p = a.product(t.k, j);
        if (!p)
            continue;
        for (const auto& u : *p) {
            auto [it, fresh] = acc.try_emplace(u.k, t.c * u.c);
            if (!fresh)
                it->second += t.c * u.c;
        }
    }
    SparseVec out;
    for (auto& [k, c] : acc)
        if (!c.is_zero())
            out.push_back({k, c});
    return out;
}

SparseVec sparse_sub(const SparseVec& a, const SparseVec& b) {
    std::map<int, Scalar> acc;
    for (const auto& t : a)
        acc[t.k] += t.c;
    for (const auto& t : b)
        acc[t.k] -= t.c;
    SparseVec out;
    for (auto& [k, c] : acc)
        if (!c.is_zero())
            out.push_back({k, c});
    return out;
}

} // namespace

std::vector<Defect> zinbiel_defects(const Algebra& a) {
    std::vector<Defect> out;
    static const SparseVec kEmpty;
    for (int i = 1; i <= a.dim; ++i)
        for (int j = 1; j <= a.dim; ++j) {
            const SparseVec* ij = a.product(i, j);
            for (int k = 1; k <= a.dim; ++k) {
                const SparseVec* jk = a.product(j, k);
                const SparseVec* kj = a.product(k, j);
                if (!ij && !jk && !kj)
                    continue;
                SparseVec lhs = mult_sparse_basis(a, ij ? *ij : kEmpty, k);
                SparseVec r1 = mult_basis_sparse(a, i, jk ? *jk : kEmpty);
                SparseVec r2 = mult_basis_sparse(a, i, kj ? *kj : kEmpty);
                SparseVec d = sparse_sub(sparse_sub(lhs, r1), r2);
                if (!d.empty())
                    out.push_back({i, j, k, std::move(d)});
            }
        }
    return out;
}

std::vector<Defect> derived_identity_defects(const Algebra& a) {
    std::vector<Defect> out;
    static const SparseVec kEmpty;
    for (int i = 1; i <= a.dim; ++i)
        for (int j = 1; j <= a.dim; ++j) {
            const SparseVec* ij = a.product(i, j);
            for (int k = 1; k <= a.dim; ++k) {
                const SparseVec* ik = a.product(i, k);
                if (!ij && !ik)
                    continue;
                SparseVec lhs = mult_sparse_basis(a, ij ? *ij : kEmpty, k);
                SparseVec rhs = mult_sparse_basis(a, ik ? *ik : kEmpty, j);
                SparseVec d = sparse_sub(lhs, rhs);
                if (!d.empty())
                    out.push_back({i, j, k, std::move(d)});
            }
        }
    return out;
}

std::vector<Subspace> lower_series(const Algebra& a) {
    std::vector<Subspace> series;
    Mat full;
    for (int i = 1; i <= a.dim; ++i)
        full.push_back(unit_vec(a.dim, i));
    series.push_back(Subspace::span(full, a.dim));
    while (true) {
        const Subspace& cur = series.back();
        if (cur.dim() == 0)
            break;
        Mat next_gens;
        for (int b = 1; b <= a.dim; ++b)
            for (const auto& w : cur.rows()) {
                SparseVec prod = mult_basis_sparse(a, b, sparsify(w));
                if (!prod.empty())
                    next_gens.push_back(densify(prod, a.dim));
            }
        Subspace next = Subspace::span(next_gens, a.dim);
        if (next.dim() == cur.dim()) {
            series.push_back(std::move(next)); // stabilized above zero
            break;
        }
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<int> lower_series_dims(const Algebra& a) {
    std::vector<int> dims;
    for (const auto& s : lower_series(a))
        dims.push_back(s.dim());
    return dims;
}

int nilindex(const Algebra& a) {
    auto series = lower_series(a);
    if (series.back().dim() != 0)
        throw NotNilpotentError("lower series stabilizes at dimension " +
                                std::to_string(series.back().dim()));
    return static_cast<int>(series.size());
}

bool is_nilpotent(const Algebra& a) {
    return lower_series(a).back().dim() == 0;
}

bool is_null_filiform(const Algebra& a) {
    auto dims = lower_series_dims(a);
    if (dims.back() != 0)
        return false;
    if (static_cast<int>(dims.size()) != a.dim + 1)
        return false;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] != a.dim - static_cast<int>(i))
            return false;
    return true;
}

Algebra change_basis(const Algebra& a, const Mat& p) {
    if (static_cast<int>(p.size()) != a.dim)
        throw DimensionError("change_basis: matrix size mismatch");
    // solve P x = w for each product of new basis vectors
    Mat aug = p;
    for (int i = 0; i < a.dim; ++i) {
        Vec ext = unit_vec(a.dim, i + 1);
        aug[static_cast<std::size_t>(i)].insert(aug[static_cast<std::size_t>(i)].end(), ext.begin(),
                                                ext.end());
    }
    RrefInfo info = rref(aug);
    if (info.rank != a.dim)
        throw DomainError("change_basis: matrix is singular");
    Mat pinv(static_cast<std::size_t>(a.dim), zero_vec(a.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            pinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.dim + j)];

    auto col = [&](int i) {
        Vec v = zero_vec(a.dim);
        for (int r = 0; r < a.dim; ++r)
            v[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)];
        return v;
    };
    Algebra b;
    b.dim = a.dim;
    b.labels = a.labels;
    b.params = a.params;
    for (int i = 1; i <= a.dim; ++i)
        for (int j = 1; j <= a.dim; ++j) {
            Vec w = a.multiply(col(i), col(j));
            if (is_zero_vec(w))
                continue;
            Vec coords = mat_vec(pinv, w);
            b.set_product(i, j, sparsify(coords));
        }
    return b;
}

} // namespace zinbiel
