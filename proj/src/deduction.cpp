#include "zinbiel/deduction.hpp"

#include <algorithm>

namespace zinbiel {

void PartialTable::validate() const {
    if (dim < 1)
        throw DimensionError("partial table must have positive dimension");
    auto check_pair = [&](int i, int j) {
        if (i < 1 || i > dim || j < 1 || j > dim)
            throw DimensionError("partial table product index out of range");
    };
    for (const auto& [ij, sv] : known) {
        check_pair(ij.first, ij.second);
        if (unknown.count(ij))
            throw DomainError("product marked both known and unknown");
        for (const auto& t : sv)
            if (t.k < 1 || t.k > dim)
                throw DimensionError("known product has coordinate out of range");
    }
    for (const auto& ij : unknown)
        check_pair(ij.first, ij.second);
}

namespace {

using Unknown = LinearConstraint::Unknown;

// linear expression over unknowns, with a constant part
struct Lin {
    std::map<Unknown, Scalar> coeffs;
    Scalar constant;

    bool has_unknowns() const { return !coeffs.empty(); }
    bool is_zero() const { return coeffs.empty() && constant.is_zero(); }
    void add(const Lin& o, const Scalar& f) {
        constant += o.constant * f;
        for (const auto& [u, c] : o.coeffs) {
            Scalar& slot = coeffs[u];
            slot += c * f;
            if (slot.is_zero())
                coeffs.erase(u);
        }
    }
};

using LinVec = std::vector<Lin>; // one Lin per coordinate

struct Expander {
    const PartialTable& t;

    // value of e_i o e_j as a vector of linear expressions
    LinVec product(int i, int j) const {
        LinVec v(static_cast<std::size_t>(t.dim));
        auto it = t.known.find({i, j});
        if (it != t.known.end()) {
            for (const auto& term : it->second)
                v[static_cast<std::size_t>(term.k - 1)].constant += term.c;
            return v;
        }
        if (t.unknown.count({i, j})) {
            for (int m = 1; m <= t.dim; ++m)
                v[static_cast<std::size_t>(m - 1)].coeffs[{i, j, m}] = Scalar(1);
        }
        // products absent from both maps are zero
        return v;
    }

    // (vector expression) o e_k ; nullopt when it would multiply two unknowns
    std::optional<LinVec> mult_right(const LinVec& x, int k) const {
        LinVec out(static_cast<std::size_t>(t.dim));
        for (int m = 1; m <= t.dim; ++m) {
            const Lin& xm = x[static_cast<std::size_t>(m - 1)];
            if (xm.is_zero())
                continue;
            LinVec pm = product(m, k);
            bool pm_unknown = t.unknown.count({m, k}) > 0;
            if (pm_unknown && xm.has_unknowns())
                return std::nullopt;
            if (pm_unknown) {
                // constant times unknown vector
                for (int r = 1; r <= t.dim; ++r)
                    out[static_cast<std::size_t>(r - 1)].add(pm[static_cast<std::size_t>(r - 1)],
                                                             xm.constant);
            } else {
                for (int r = 1; r <= t.dim; ++r) {
                    const Scalar& c = pm[static_cast<std::size_t>(r - 1)].constant;
                    if (!c.is_zero())
                        out[static_cast<std::size_t>(r - 1)].add(xm, c);
                }
            }
        }
        return out;
    }

    // e_i o (vector expression)
    std::optional<LinVec> mult_left(int i, const LinVec& y) const {
        LinVec out(static_cast<std::size_t>(t.dim));
        for (int m = 1; m <= t.dim; ++m) {
            const Lin& ym = y[static_cast<std::size_t>(m - 1)];
            if (ym.is_zero())
                continue;
            LinVec pm = product(i, m);
            bool pm_unknown = t.unknown.count({i, m}) > 0;
            if (pm_unknown && ym.has_unknowns())
                return std::nullopt;
            if (pm_unknown) {
                for (int r = 1; r <= t.dim; ++r)
                    out[static_cast<std::size_t>(r - 1)].add(pm[static_cast<std::size_t>(r - 1)],
                                                             ym.constant);
            } else {
                for (int r = 1; r <= t.dim; ++r) {
                    const Scalar& c = pm[static_cast<std::size_t>(r - 1)].constant;
                    if (!c.is_zero())
                        out[static_cast<std::size_t>(r - 1)].add(ym, c);
                }
            }
        }
        return out;
    }
};

struct Origin {
    int i, j, k;
    int coord;
    bool identity_derived;
    bool had_constant;
};

struct Row {
    std::map<Unknown, Scalar> coeffs;
    Scalar constant;
    std::vector<Origin> origins;
};

struct Eliminator {
    std::map<Unknown, Row> rows; // leading unknown -> row

    // reduce r against the current rows; returns the reduced row
    Row reduce(Row r) const {
        bool changed = true;
        while (changed && !r.coeffs.empty()) {
            changed = false;
            auto lead = r.coeffs.begin()->first;
            auto it = rows.find(lead);
            if (it == rows.end())
                break;
            Scalar f = r.coeffs.begin()->second; // pivot rows are monic
            r.constant -= it->second.constant * f;
            for (const auto& [u, c] : it->second.coeffs) {
                Scalar& slot = r.coeffs[u];
                slot -= c * f;
                if (slot.is_zero())
                    r.coeffs.erase(u);
            }
            r.coeffs.erase(lead);
            for (const auto& o : it->second.origins)
                r.origins.push_back(o);
            changed = true;
        }
        return r;
    }

    // returns false on contradiction (row reduced to 0 = c, c != 0)
    bool insert(Row r, Row* contradiction_out) {
        r = reduce(std::move(r));
        if (r.coeffs.empty()) {
            if (r.constant.is_zero())
                return true;
            *contradiction_out = std::move(r);
            return false;
        }
        // make monic in the leading unknown
        Scalar inv = r.coeffs.begin()->second.inverse();
        r.constant *= inv;
        for (auto& [u, c] : r.coeffs)
            c *= inv;
        Unknown lead = r.coeffs.begin()->first;
        Scalar lead_c = r.coeffs.begin()->second;
        r.coeffs.erase(r.coeffs.begin());
        Row stored;
        stored.constant = r.constant;
        stored.coeffs = std::move(r.coeffs);
        stored.origins = std::move(r.origins);
        (void)lead_c;
        rows.emplace(lead, std::move(stored));
        return true;
    }

    void back_substitute() {
        // rows map is ordered by leading unknown; substitute from the back
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            for (auto jt = rows.begin(); jt != rows.end(); ++jt) {
                if (jt->first == it->first)
                    continue;
                auto found = jt->second.coeffs.find(it->first);
                if (found == jt->second.coeffs.end())
                    continue;
                Scalar f = found->second;
                jt->second.coeffs.erase(found);
                jt->second.constant -= it->second.constant * f;
                for (const auto& [u, c] : it->second.coeffs) {
                    Scalar& slot = jt->second.coeffs[u];
                    slot -= c * f;
                    if (slot.is_zero())
                        jt->second.coeffs.erase(u);
                }
            }
        }
    }
};

} // namespace

PropagateResult propagate(const PartialTable& t, long budget) {
    t.validate();
    PropagateResult res;
    Expander ex{t};
    Eliminator elim;

    auto process = [&](const LinVec& defect, int i, int j, int k, bool derived) -> bool {
        for (int coord = 1; coord <= t.dim; ++coord) {
            const Lin& l = defect[static_cast<std::size_t>(coord - 1)];
            if (l.is_zero())
                continue;
            Row r;
            r.coeffs = l.coeffs;
            r.constant = l.constant;
            r.origins.push_back({i, j, k, coord, derived, !l.constant.is_zero()});
            Row contradiction;
            if (!elim.insert(std::move(r), &contradiction)) {
                // the inconsistent combination pins a known chain vector to zero;
                // report the coordinate of the constant-bearing origin
                int basis = coord;
                for (const auto& o : contradiction.origins)
                    if (o.had_constant)
                        basis = o.coord;
                res.contradiction =
                    PropagateResult::Contradiction{basis, i, j, k, derived ? "derived" : "zinbiel"};
                return false;
            }
        }
        return true;
    };

    for (int i = 1; i <= t.dim && !res.contradiction; ++i)
        for (int j = 1; j <= t.dim && !res.contradiction; ++j)
            for (int k = 1; k <= t.dim && !res.contradiction; ++k) {
                // derived identity (ei o ej) o ek - (ei o ek) o ej
                for (int which = 0; which < 2 && !res.contradiction; ++which) {
                    if (res.instances_expanded >= budget) {
                        res.complete = false;
                        goto done;
                    }
                    ++res.instances_expanded;
                    std::optional<LinVec> defect;
                    if (which == 0) {
                        auto l = ex.mult_right(ex.product(i, j), k);
                        auto r = ex.mult_right(ex.product(i, k), j);
                        if (!l || !r) {
                            ++res.quadratic_skips;
                            continue;
                        }
                        defect = std::move(l);
                        for (int m = 0; m < t.dim; ++m)
                            (*defect)[static_cast<std::size_t>(m)].add(
                                (*r)[static_cast<std::size_t>(m)], Scalar(-1));
                    } else {
                        auto l = ex.mult_right(ex.product(i, j), k);
                        auto r1 = ex.mult_left(i, ex.product(j, k));
                        auto r2 = ex.mult_left(i, ex.product(k, j));
                        if (!l || !r1 || !r2) {
                            ++res.quadratic_skips;
                            continue;
                        }
                        defect = std::move(l);
                        for (int m = 0; m < t.dim; ++m) {
                            (*defect)[static_cast<std::size_t>(m)].add(
                                (*r1)[static_cast<std::size_t>(m)], Scalar(-1));
                            (*defect)[static_cast<std::size_t>(m)].add(
                                (*r2)[static_cast<std::size_t>(m)], Scalar(-1));
                        }
                    }
                    process(*defect, i, j, k, which == 0);
                }
            }
done:
    elim.back_substitute();
    for (const auto& [lead, row] : elim.rows) {
        LinearConstraint c;
        c.coeffs[lead] = Scalar(1);
        for (const auto& [u, s] : row.coeffs)
            c.coeffs[u] = s;
        c.constant = row.constant;
        res.constraints.push_back(std::move(c));
    }
    return res;
}

bool PropagateResult::forces_zero(int i, int j, int coord) const {
    LinearConstraint::Unknown u{i, j, coord};
    for (const auto& c : constraints) {
        auto it = c.coeffs.find(u);
        if (it == c.coeffs.end())
            continue;
        if (c.coeffs.size() == 1 && c.constant.is_zero())
            return true;
    }
    return false;
}

PartialTable prop31_table() {
    PartialTable t;
    t.dim = 5;
    t.known[{1, 1}] = {};
    for (int i = 2; i <= 4; ++i)
        t.known[{1, i}] = {{i + 1, Scalar(1)}};
    t.known[{1, 5}] = {};
    for (int i = 2; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            t.unknown.insert({i, j});
    return t;
}

} // namespace zinbiel
