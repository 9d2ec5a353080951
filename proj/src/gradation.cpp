#include "zinbiel/gradation.hpp"

#include <algorithm>

#include "zinbiel/isomorphism.hpp"

namespace zinbiel {

GradedAlgebra natural_grading(const Algebra& a) {
    auto series = lower_series(a);
    if (series.back().dim() != 0)
        throw NotNilpotentError("natural_grading requires a nilpotent algebra");
    int s = static_cast<int>(series.size()) - 1; // series[0..s], series[s] = 0

    GradedAlgebra g;
    g.degrees.assign(static_cast<std::size_t>(a.dim) + 1, 0);
    for (const auto& sub : series)
        for (const auto& c : sub.side_conditions())
            if (std::find(g.side_conditions.begin(), g.side_conditions.end(), c) ==
                g.side_conditions.end())
                g.side_conditions.push_back(c);

    // section basis per degree: rows of A^d whose pivot is not a pivot of A^{d+1}
    Mat lift(static_cast<std::size_t>(a.dim)); // row per pivot index (0-based)
    for (int d = 1; d <= s; ++d) {
        const Subspace& hi = series[static_cast<std::size_t>(d - 1)];
        const Subspace& lo = series[static_cast<std::size_t>(d)];
        Mat section;
        for (std::size_t r = 0; r < hi.rows().size(); ++r) {
            int piv = hi.pivots()[r];
            bool in_lo = std::find(lo.pivots().begin(), lo.pivots().end(), piv) != lo.pivots().end();
            if (in_lo)
                continue;
            section.push_back(hi.rows()[r]);
            lift[static_cast<std::size_t>(piv)] = hi.rows()[r];
            g.degrees[static_cast<std::size_t>(piv) + 1] = d;
        }
        g.component_dims.push_back(static_cast<int>(section.size()));
        g.sections.push_back(std::move(section));
    }

    // inverse of the lift matrix, for exact coordinate extraction
    Mat aug = lift;
    for (int i = 0; i < a.dim; ++i) {
        Vec ext = unit_vec(a.dim, i + 1);
        aug[static_cast<std::size_t>(i)].insert(aug[static_cast<std::size_t>(i)].end(), ext.begin(),
                                                ext.end());
    }
    if (rref(aug).rank != a.dim)
        throw DomainError("natural_grading: degenerate section stack");

    auto coords_of = [&](const Vec& w) {
        // coordinates x with sum_m x_m * lift_m = w, i.e. x = w * lift^{-1}
        Vec out = zero_vec(a.dim);
        for (int i = 0; i < a.dim; ++i) {
            Scalar acc(0);
            for (int j = 0; j < a.dim; ++j)
                acc += w[static_cast<std::size_t>(j)] *
                       aug[static_cast<std::size_t>(j)][static_cast<std::size_t>(a.dim + i)];
            out[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    };

    g.algebra.dim = a.dim;
    g.algebra.labels = a.labels;
    g.algebra.params = a.params;
    for (int i = 1; i <= a.dim; ++i)
        for (int j = 1; j <= a.dim; ++j) {
            const Vec& u = lift[static_cast<std::size_t>(i - 1)];
            const Vec& v = lift[static_cast<std::size_t>(j - 1)];
            Vec w = a.multiply(u, v);
            if (is_zero_vec(w))
                continue;
            int target = g.degrees[static_cast<std::size_t>(i)] + g.degrees[static_cast<std::size_t>(j)];
            Vec coords = coords_of(w);
            SparseVec graded;
            for (int m = 1; m <= a.dim; ++m) {
                const Scalar& c = coords[static_cast<std::size_t>(m - 1)];
                if (c.is_zero())
                    continue;
                int dm = g.degrees[static_cast<std::size_t>(m)];
                if (dm < target)
                    throw DomainError("natural_grading: product of degrees " +
                                      std::to_string(g.degrees[static_cast<std::size_t>(i)]) + "+" +
                                      std::to_string(g.degrees[static_cast<std::size_t>(j)]) +
                                      " has a component in lower degree " + std::to_string(dm));
                if (dm == target)
                    graded.push_back({m, c});
            }
            if (!graded.empty())
                g.algebra.set_product(i, j, std::move(graded));
        }
    return g;
}

std::vector<int> grading_dims(const Algebra& a) {
    auto dims = lower_series_dims(a);
    if (dims.back() != 0)
        throw NotNilpotentError("grading_dims requires a nilpotent algebra");
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
        out.push_back(dims[i] - dims[i + 1]);
    return out;
}

NaturallyGradedResult is_naturally_graded(const Algebra& a) {
    GradedAlgebra g = natural_grading(a);
    if (!g.component_dims.empty() && g.component_dims[0] > 2)
        throw UnsupportedError("is_naturally_graded: more than 2 degree-1 generators");
    if (g.algebra.products == a.products) {
        return {NaturallyGradedResult::Status::Yes, identity_mat(a.dim), "already graded (identity)"};
    }
    IsoResult r = iso_search(a, g.algebra, IsoBounds{});
    switch (r.status) {
    case IsoResult::Status::Yes:
        return {NaturallyGradedResult::Status::Yes, r.map, "graded isomorphism found"};
    case IsoResult::Status::No:
        return {NaturallyGradedResult::Status::No, {}, r.detail};
    case IsoResult::Status::Exhausted:
    default:
        return {NaturallyGradedResult::Status::Exhausted, {}, r.detail};
    }
}

} // namespace zinbiel
