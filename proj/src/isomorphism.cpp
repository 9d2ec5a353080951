#include "zinbiel/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "zinbiel/gradation.hpp"

namespace zinbiel {

AdaptedShape adapted_shape(const Algebra& a) {
    AdaptedShape s;
    int i = 0;
    while (i < a.dim && a.labels[static_cast<std::size_t>(i)] == "e" + std::to_string(i + 1))
        ++i;
    s.e_len = i;
    int j = 0;
    while (i + j < a.dim && a.labels[static_cast<std::size_t>(i + j)] == "f" + std::to_string(j + 1))
        ++j;
    s.f_len = j;
    if (s.e_len == 0 || s.e_len + s.f_len != a.dim)
        throw UnsupportedError("basis labels are not in adapted e1..e_m, f1..f_k form");
    return s;
}

ExtendResult extend_base_change(const Algebra& src, const Algebra& dst, const BaseChange& bc) {
    ExtendResult res;
    if (src.dim != dst.dim) {
        res.detail = "dimension mismatch";
        return res;
    }
    AdaptedShape ss = adapted_shape(src);
    AdaptedShape ds = adapted_shape(dst);
    int n = src.dim;

    if (ds.f_len == 0 && (!bc.b.is_zero() || !bc.c.is_zero())) {
        res.detail = "destination has a single generator; b and c must be zero";
        return res;
    }

    // chain images
    std::vector<Vec> img(static_cast<std::size_t>(n) + 1);
    Vec e1 = scale_vec(unit_vec(n, 1), bc.a);
    if (ds.f_len > 0)
        e1 = add_vec(e1, scale_vec(unit_vec(n, ds.e_len + 1), bc.b));
    img[1] = e1;
    for (int i = 1; i < ss.e_len; ++i)
        img[static_cast<std::size_t>(i + 1)] = dst.multiply(e1, img[static_cast<std::size_t>(i)]);
    if (ss.f_len > 0) {
        Vec f1 = scale_vec(unit_vec(n, 1), bc.c);
        if (ds.f_len > 0)
            f1 = add_vec(f1, scale_vec(unit_vec(n, ds.e_len + 1), bc.d));
        img[static_cast<std::size_t>(ss.e_len + 1)] = f1;
        for (int i = 1; i < ss.f_len; ++i)
            img[static_cast<std::size_t>(ss.e_len + i + 1)] =
                dst.multiply(e1, img[static_cast<std::size_t>(ss.e_len + i)]);
    }

    // homomorphism check on every basis pair
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vec lhs = dst.multiply(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
            Vec rhs = zero_vec(n);
            if (const SparseVec* p = src.product(i, j))
                for (const auto& t : *p)
                    rhs = add_vec(rhs, scale_vec(img[static_cast<std::size_t>(t.k)], t.c));
            for (int m = 0; m < n; ++m)
                if (!(lhs[static_cast<std::size_t>(m)] - rhs[static_cast<std::size_t>(m)]).is_zero()) {
                    res.fail_i = i;
                    res.fail_j = j;
                    res.detail = "product (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") not reproduced";
                    return res;
                }
        }

    // bijectivity (symbolic entries contribute side conditions)
    Mat t(static_cast<std::size_t>(n), zero_vec(n));
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < n; ++r)
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)] =
                img[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    Mat copy = t;
    RrefInfo info = rref(copy);
    if (info.rank != n) {
        res.detail = "images fail to span (rank " + std::to_string(info.rank) + ")";
        return res;
    }
    res.ok = true;
    res.map = std::move(t);
    res.side_conditions = info.side_conditions;
    Scalar det = bc.det();
    if (det.is_zero()) {
        res.ok = false;
        res.detail = "singular base change";
        return res;
    }
    if (det.symbolic()) {
        Poly num = det.numerator_poly();
        if (std::find(res.side_conditions.begin(), res.side_conditions.end(), num) ==
            res.side_conditions.end())
            res.side_conditions.push_back(num);
    }
    return res;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "series=[";
    for (std::size_t i = 0; i < series_dims.size(); ++i)
        os << (i ? "," : "") << series_dims[i];
    os << "] charseq=(";
    for (std::size_t i = 0; i < char_partition.size(); ++i)
        os << (i ? "," : "") << char_partition[i];
    os << ") chain=" << witness_chain << " sq1rank=" << deg1_sq_rank
       << " ann=" << annihilator_dim << " sqzeros=" << sq_zero_points;
    return os.str();
}

// ---------------------------------------------------------------------------
// constraint solving over the base-change unknowns A, B, C, D (vars 0..3)
// ---------------------------------------------------------------------------

namespace {

using PolyVec = std::vector<Poly>;

// canonical rationals of height <= h in a deterministic order: 0, 1, -1, 2,
// -2, 1/2, -1/2, 3, ... (sorted by max(|num|, den), then den, then num)
std::vector<Rational> grid_rationals(int h) {
    std::vector<std::pair<std::pair<long, long>, Rational>> keyed;
    for (long den = 1; den <= h; ++den)
        for (long num = -h; num <= h; ++num) {
            if (std::gcd(std::abs(num), den) != 1 && !(num == 0 && den == 1))
                continue;
            if (num == 0 && den != 1)
                continue;
            long height = std::max(std::abs(num), den);
            keyed.push_back({{height, den * 1000000 - num}, Rational(num, den)});
        }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first)
            return a.first.first < b.first.first;
        return a.first.second < b.first.second;
    });
    std::vector<Rational> out;
    for (auto& [k, r] : keyed)
        out.push_back(r);
    return out;
}

std::vector<mpz_class> small_divisors(const mpz_class& z, std::size_t cap = 512) {
    std::vector<mpz_class> out;
    mpz_class a = abs(z);
    if (a == 0)
        return out;
    for (mpz_class d = 1; d * d <= a && out.size() < cap; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            mpz_class q = a / d;
            if (q != d)
                out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// rational roots of a univariate (in var v) polynomial
std::vector<Rational> rational_roots(const Poly& p, int v) {
    // clear denominators, strip powers of v
    mpz_class lcm_den = 1;
    for (const auto& [m, c] : p.terms())
        lcm_den = lcm_den / gcd_z(lcm_den, c.denominator()) * c.denominator();
    int min_deg = 1 << 20, max_deg = 0;
    for (const auto& [m, c] : p.terms()) {
        min_deg = std::min(min_deg, static_cast<int>(m.e[v]));
        max_deg = std::max(max_deg, static_cast<int>(m.e[v]));
    }
    std::vector<Rational> roots;
    if (min_deg > 0)
        roots.push_back(Rational(0));
    mpz_class lead, tail;
    for (const auto& [m, c] : p.terms()) {
        mpz_class ic = c.numerator() * (lcm_den / c.denominator());
        if (static_cast<int>(m.e[v]) == max_deg)
            lead = ic;
        if (static_cast<int>(m.e[v]) == min_deg)
            tail = ic;
    }
    std::array<std::optional<Rational>, kNumVars> assign;
    for (const auto& pz : small_divisors(tail))
        for (const auto& qz : small_divisors(lead))
            for (int sign = 1; sign >= -1; sign -= 2) {
                Rational cand = Rational(pz) * Rational(sign) / Rational(qz);
                assign.fill(std::nullopt);
                assign[static_cast<std::size_t>(v)] = cand;
                if (p.eval(assign).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

struct Solver {
    IsoBounds bounds;
    std::vector<Rational> grid;
    long assignments = 0;
    bool budget_hit = false;
    std::optional<std::array<Rational, 4>> solution;

    explicit Solver(const IsoBounds& b) : bounds(b), grid(grid_rationals(b.height)) {}

    struct Subst {
        int var;
        Poly value;
    };

    // returns true when a solution has been found (stored in `solution`)
    bool solve(std::vector<Poly> eqs, Poly nondeg, std::array<bool, 4> assigned,
               std::vector<Subst> chain, int depth) {
        if (depth > bounds.max_depth || budget_hit)
            return false;
        // normalize
        while (true) {
            std::vector<Poly> clean;
            for (auto& e : eqs) {
                if (e.is_zero())
                    continue;
                if (e.is_constant())
                    return false; // inconsistent branch
                clean.push_back(e.monic());
            }
            std::sort(clean.begin(), clean.end(), [](const Poly& a, const Poly& b) {
                if (a.total_degree() != b.total_degree())
                    return a.total_degree() < b.total_degree();
                return a.str() < b.str();
            });
            clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
            eqs = std::move(clean);

            // linear extraction
            bool progressed = false;
            for (std::size_t idx = 0; idx < eqs.size(); ++idx) {
                if (eqs[idx].total_degree() != 1)
                    continue;
                int v = eqs[idx].lowest_var();
                // value = -(eq - coeff*v) / coeff
                Rational coeff;
                Poly rest;
                for (const auto& [m, c] : eqs[idx].terms()) {
                    if (m.e[v] == 1 && m.total_degree() == 1)
                        coeff = c;
                    else
                        rest += Poly::term(m, c);
                }
                if (coeff.is_zero())
                    continue;
                Poly value = rest.mul(-(coeff.inverse()));
                assigned[static_cast<std::size_t>(v)] = true;
                chain.push_back({v, value});
                std::vector<Poly> next;
                for (std::size_t j2 = 0; j2 < eqs.size(); ++j2)
                    if (j2 != idx)
                        next.push_back(eqs[j2].substitute(v, value));
                eqs = std::move(next);
                nondeg = nondeg.substitute(v, value);
                progressed = true;
                break;
            }
            if (!progressed)
                break;
        }

        if (eqs.empty())
            return finish(assigned, chain, nondeg);

        // univariate rational roots
        for (const auto& e : eqs) {
            int v = e.lowest_var();
            bool univar = true;
            for (int w = v + 1; w < kNumVars; ++w)
                if (e.uses_var(w))
                    univar = false;
            if (!univar || v < 0)
                continue;
            for (const auto& root : rational_roots(e, v)) {
                auto a2 = assigned;
                a2[static_cast<std::size_t>(v)] = true;
                auto c2 = chain;
                c2.push_back({v, Poly(root)});
                std::vector<Poly> next;
                for (const auto& e2 : e == eqs.back() ? eqs : eqs) // keep all others
                    if (&e2 != &e)
                        next.push_back(e2.substitute(v, Poly(root)));
                if (solve(std::move(next), nondeg.substitute(v, Poly(root)), a2, std::move(c2),
                          depth + 1))
                    return true;
                if (budget_hit)
                    return false;
            }
            return false; // univariate with no rational root: branch infeasible
        }

        // grid over the lowest unknown still present
        int v = -1;
        for (const auto& e : eqs)
            if (e.lowest_var() >= 0) {
                v = e.lowest_var();
                break;
            }
        if (v < 0)
            return false;
        for (const auto& val : grid) {
            if (++assignments > bounds.max_assignments) {
                budget_hit = true;
                return false;
            }
            auto a2 = assigned;
            a2[static_cast<std::size_t>(v)] = true;
            auto c2 = chain;
            c2.push_back({v, Poly(val)});
            std::vector<Poly> next;
            for (const auto& e : eqs)
                next.push_back(e.substitute(v, Poly(val)));
            if (solve(std::move(next), nondeg.substitute(v, Poly(val)), a2, std::move(c2), depth + 1))
                return true;
            if (budget_hit)
                return false;
        }
        return false;
    }

    bool finish(std::array<bool, 4> assigned, std::vector<Subst> chain, const Poly& nondeg) {
        // assign remaining free vars from the grid so that nondeg != 0
        std::vector<int> free;
        for (int v = 0; v < 4; ++v)
            if (!assigned[static_cast<std::size_t>(v)])
                free.push_back(v);
        std::array<std::optional<Rational>, kNumVars> value;
        std::function<bool(std::size_t, Poly)> rec = [&](std::size_t idx, Poly nd) {
            if (idx == free.size()) {
                if (nd.is_zero())
                    return false;
                if (!nd.is_constant())
                    return false;
                if (nd.constant_value().is_zero())
                    return false;
                return true;
            }
            for (const auto& val : grid) {
                if (++assignments > bounds.max_assignments) {
                    budget_hit = true;
                    return false;
                }
                value[static_cast<std::size_t>(free[idx])] = val;
                if (rec(idx + 1, nd.substitute(free[idx], Poly(val))))
                    return true;
                if (budget_hit)
                    return false;
            }
            value[static_cast<std::size_t>(free[idx])] = std::nullopt;
            return false;
        };
        Poly nd = nondeg;
        if (!rec(0, nd))
            return false;
        // evaluate the substitution chain backwards
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            value[static_cast<std::size_t>(it->var)] = it->value.eval(value);
        std::array<Rational, 4> out;
        for (int v = 0; v < 4; ++v)
            out[static_cast<std::size_t>(v)] = value[static_cast<std::size_t>(v)].value_or(Rational(0));
        solution = out;
        return true;
    }
};

} // namespace

Fingerprint fingerprint(const Algebra& a) {
    Fingerprint fp;
    fp.series_dims = lower_series_dims(a);
    CharSequence cs = char_sequence(a);
    fp.char_partition = cs.partition;
    fp.witness_chain = chain_length(a, cs.witness);

    GradedAlgebra g = natural_grading(a);
    std::vector<int> d1, d2;
    for (int i = 1; i <= a.dim; ++i) {
        if (g.degrees[static_cast<std::size_t>(i)] == 1)
            d1.push_back(i);
        else if (g.degrees[static_cast<std::size_t>(i)] == 2)
            d2.push_back(i);
    }
    // rank of gr_1 -> Hom(gr_1, gr_2), u |-> (v |-> u o v)
    if (!d1.empty() && !d2.empty()) {
        Mat rows;
        for (int u : d1) {
            Vec row;
            for (int v : d1)
                for (int w : d2) {
                    Scalar c(0);
                    if (const SparseVec* p = g.algebra.product(u, v))
                        for (const auto& t : *p)
                            if (t.k == w)
                                c = t.c;
                    row.push_back(c);
                }
            rows.push_back(std::move(row));
        }
        fp.deg1_sq_rank = rank_of(rows);
    }

    // projective rational zeros of the squaring map on gr_1 (when it is a
    // line or a plane and the structure constants are rational)
    bool rational_gr = a.params.empty();
    if (rational_gr && (d1.size() == 1 || d1.size() == 2)) {
        // q(A, B) = (A g1 + B g2) o (A g1 + B g2), coordinatewise binary forms
        auto form = [&](int u, int v, const Poly& f) {
            std::vector<Poly> coords(static_cast<std::size_t>(a.dim));
            if (const SparseVec* p = g.algebra.product(u, v))
                for (const auto& t : *p)
                    coords[static_cast<std::size_t>(t.k - 1)] = f.mul(t.c.rational());
            return coords;
        };
        Poly va = Poly::variable(0), vb = Poly::variable(1);
        std::vector<Poly> q(static_cast<std::size_t>(a.dim));
        auto acc = [&](const std::vector<Poly>& part) {
            for (std::size_t k = 0; k < q.size(); ++k)
                q[k] += part[k];
        };
        int g1 = d1[0];
        acc(form(g1, g1, va * va));
        if (d1.size() == 2) {
            int g2 = d1[1];
            acc(form(g1, g2, va * vb));
            acc(form(g2, g1, va * vb));
            acc(form(g2, g2, vb * vb));
        }
        Poly gcd_forms;
        bool any = false;
        for (const auto& f : q)
            if (!f.is_zero()) {
                any = true;
                gcd_forms = Poly::gcd(gcd_forms, f);
            }
        if (!any) {
            fp.sq_zero_points = -1; // squaring vanishes identically on gr_1
        } else if (d1.size() == 1) {
            fp.sq_zero_points = 0; // single projective point, q nonzero there
        } else if (gcd_forms.is_constant()) {
            fp.sq_zero_points = 0;
        } else {
            int count = 0;
            if (gcd_forms.substitute(1, Poly()).is_zero())
                ++count; // the point at infinity (1 : 0)
            Poly dehom = gcd_forms.substitute(1, Poly(Rational(1)));
            if (dehom.is_zero())
                throw DomainError("squaring form collapsed unexpectedly");
            if (!dehom.is_constant())
                count += static_cast<int>(rational_roots(dehom, 0).size());
            fp.sq_zero_points = count;
        }
    }

    // two-sided annihilator: x with x o e_j = 0 and e_j o x = 0 for all j
    Mat constraints;
    for (int j = 1; j <= a.dim; ++j) {
        for (int m = 1; m <= a.dim; ++m) {
            Vec row1 = zero_vec(a.dim), row2 = zero_vec(a.dim);
            bool nz1 = false, nz2 = false;
            for (int i = 1; i <= a.dim; ++i) {
                if (const SparseVec* p = a.product(i, j))
                    for (const auto& t : *p)
                        if (t.k == m) {
                            row1[static_cast<std::size_t>(i - 1)] = t.c;
                            nz1 = true;
                        }
                if (const SparseVec* p = a.product(j, i))
                    for (const auto& t : *p)
                        if (t.k == m) {
                            row2[static_cast<std::size_t>(i - 1)] = t.c;
                            nz2 = true;
                        }
            }
            if (nz1)
                constraints.push_back(std::move(row1));
            if (nz2)
                constraints.push_back(std::move(row2));
        }
    }
    fp.annihilator_dim = a.dim - (constraints.empty() ? 0 : rank_of(constraints));
    return fp;
}

IsoResult iso_search(const Algebra& a1, const Algebra& a2, const IsoBounds& bounds) {
    IsoResult res;
    if (!a1.params.empty() || !a2.params.empty())
        throw UnsupportedError("iso_search requires parameter-free algebras (specialize first)");
    AdaptedShape s1 = adapted_shape(a1);
    (void)adapted_shape(a2);

    if (a1.dim == a2.dim) {
        ExtendResult ident = extend_base_change(a1, a2, BaseChange::identity());
        if (ident.ok) {
            res.status = IsoResult::Status::Yes;
            res.change = BaseChange::identity();
            res.map = ident.map;
            res.detail = "identity base change";
            return res;
        }
    }

    Fingerprint f1 = fingerprint(a1);
    Fingerprint f2 = fingerprint(a2);
    if (!(f1 == f2)) {
        res.status = IsoResult::Status::No;
        res.detail = "fingerprint mismatch: [" + f1.str() + "] vs [" + f2.str() + "]";
        return res;
    }

    // symbolic chain images over unknowns A, B, C, D  (vars 0..3)
    int n = a1.dim;
    AdaptedShape ds = adapted_shape(a2);
    auto mult_pv = [&](const PolyVec& x, const PolyVec& y) {
        PolyVec out(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            if (x[static_cast<std::size_t>(i - 1)].is_zero())
                continue;
            for (int j = 1; j <= n; ++j) {
                if (y[static_cast<std::size_t>(j - 1)].is_zero())
                    continue;
                const SparseVec* p = a2.product(i, j);
                if (!p)
                    continue;
                Poly f = x[static_cast<std::size_t>(i - 1)] * y[static_cast<std::size_t>(j - 1)];
                for (const auto& t : *p)
                    out[static_cast<std::size_t>(t.k - 1)] += f.mul(t.c.rational());
            }
        }
        return out;
    };

    std::vector<PolyVec> img(static_cast<std::size_t>(n) + 1);
    bool two_gen = s1.f_len > 0 && ds.f_len > 0;
    PolyVec e1(static_cast<std::size_t>(n));
    e1[0] = Poly::variable(0); // A
    if (ds.f_len > 0)
        e1[static_cast<std::size_t>(ds.e_len)] = Poly::variable(1); // B
    img[1] = e1;
    for (int i = 1; i < s1.e_len; ++i)
        img[static_cast<std::size_t>(i + 1)] = mult_pv(e1, img[static_cast<std::size_t>(i)]);
    if (s1.f_len > 0) {
        PolyVec f1v(static_cast<std::size_t>(n));
        f1v[0] = Poly::variable(2); // C
        if (ds.f_len > 0)
            f1v[static_cast<std::size_t>(ds.e_len)] = Poly::variable(3); // D
        img[static_cast<std::size_t>(s1.e_len + 1)] = f1v;
        for (int i = 1; i < s1.f_len; ++i)
            img[static_cast<std::size_t>(s1.e_len + i + 1)] =
                mult_pv(e1, img[static_cast<std::size_t>(s1.e_len + i)]);
    }

    std::vector<Poly> eqs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            PolyVec lhs = mult_pv(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
            if (const SparseVec* p = a1.product(i, j))
                for (const auto& t : *p)
                    for (int m = 0; m < n; ++m)
                        lhs[static_cast<std::size_t>(m)] -=
                            img[static_cast<std::size_t>(t.k)][static_cast<std::size_t>(m)].mul(
                                t.c.rational());
            for (const auto& e : lhs)
                if (!e.is_zero())
                    eqs.push_back(e);
        }

    Poly nondeg = two_gen
                      ? Poly::variable(0) * Poly::variable(3) - Poly::variable(1) * Poly::variable(2)
                      : Poly::variable(0);
    if (!two_gen) {
        // pin the unused unknowns
        eqs.push_back(Poly::variable(1));
        eqs.push_back(Poly::variable(2));
        eqs.push_back(Poly::variable(3) - Poly(Rational(1)));
    }

    Solver solver(bounds);
    bool found = solver.solve(eqs, nondeg, {false, false, false, false}, {}, 0);
    if (found && solver.solution) {
        BaseChange bc;
        bc.a = Scalar((*solver.solution)[0]);
        bc.b = Scalar((*solver.solution)[1]);
        bc.c = Scalar((*solver.solution)[2]);
        bc.d = Scalar((*solver.solution)[3]);
        ExtendResult ver = extend_base_change(a1, a2, bc);
        if (ver.ok) {
            res.status = IsoResult::Status::Yes;
            res.change = bc;
            res.map = ver.map;
            res.detail = "base change (" + bc.a.str() + ", " + bc.b.str() + "; " + bc.c.str() +
                         ", " + bc.d.str() + "), re-verified by full homomorphism check";
            return res;
        }
        res.status = IsoResult::Status::Exhausted;
        res.detail = "candidate solution failed independent verification: " + ver.detail;
        return res;
    }

    std::ostringstream os;
    os << (solver.budget_hit ? "search budget exhausted" : "no rational solution within bounds")
       << "; residual system of " << eqs.size() << " constraint(s) in (A,B,C,D):";
    std::size_t shown = 0;
    std::set<std::string> seen;
    for (const auto& e : eqs) {
        std::string s = e.monic().str();
        if (seen.insert(s).second && shown < 8) {
            os << " [" << s << " = 0]";
            ++shown;
        }
    }
    if (seen.size() > shown)
        os << " ...";
    res.status = IsoResult::Status::Exhausted;
    res.detail = os.str();
    return res;
}

} // namespace zinbiel
