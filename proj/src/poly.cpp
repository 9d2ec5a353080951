#include "zinbiel/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zinbiel {

int var_index(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name)
            return i;
    return -1;
}

Monomial Monomial::var(int idx, int exp) {
    Monomial m;
    m.e[idx] = static_cast<std::uint8_t>(exp);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto x : e)
        d += x;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (int i = 0; i < kNumVars; ++i)
        if (e[i] > m.e[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(e[i] + m.e[i]);
    return r;
}

Monomial Monomial::divide(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(e[i] - m.e[i]);
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db ? -1 : 1;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

namespace {
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};
} // namespace

Poly::Poly(Rational c) {
    if (!c.is_zero())
        t_.emplace_back(Monomial::one(), std::move(c));
}

Poly Poly::variable(int idx) {
    Poly p;
    p.t_.emplace_back(Monomial::var(idx), Rational(1));
    return p;
}

Poly Poly::term(const Monomial& m, Rational c) {
    Poly p;
    if (!c.is_zero())
        p.t_.emplace_back(m, std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].first.is_one());
}

Rational Poly::constant_value() const {
    for (const auto& [m, c] : t_)
        if (m.is_one())
            return c;
    return Rational(0);
}

int Poly::total_degree() const {
    return t_.empty() ? 0 : t_[0].first.total_degree();
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : t_)
        d = std::max(d, static_cast<int>(m.e[var]));
    return d;
}

bool Poly::uses_var(int var) const {
    for (const auto& [m, c] : t_)
        if (m.e[var] > 0)
            return true;
    return false;
}

int Poly::lowest_var() const {
    for (int v = 0; v < kNumVars; ++v)
        if (uses_var(v))
            return v;
    return -1;
}

const Rational& Poly::leading_coeff() const {
    if (t_.empty())
        throw DomainError("leading coefficient of zero polynomial");
    return t_[0].second;
}

const Monomial& Poly::leading_mono() const {
    if (t_.empty())
        throw DomainError("leading monomial of zero polynomial");
    return t_[0].first;
}

void Poly::normalize() {
    std::sort(t_.begin(), t_.end(), [](const auto& a, const auto& b) {
        return Monomial::cmp(a.first, b.first) > 0;
    });
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(t_.size());
    for (auto& [m, c] : t_) {
        if (!out.empty() && out.back().first == m)
            out.back().second += c;
        else
            out.emplace_back(m, c);
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    t_ = std::move(out);
}

Poly Poly::operator-() const {
    Poly r;
    r.t_.reserve(t_.size());
    for (const auto& [m, c] : t_)
        r.t_.emplace_back(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    // merge two sorted term lists
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = Monomial::cmp(t_[i].first, o.t_[j].first);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Rational s = t_[i].second + o.t_[j].second;
            if (!s.is_zero())
                r.t_.emplace_back(t_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i)
        r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j)
        r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::map<Monomial, Rational, MonoGreater> acc;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) {
            Monomial m = ma * mb;
            auto [it, fresh] = acc.try_emplace(m, ca * cb);
            if (!fresh)
                it->second += ca * cb;
        }
    Poly r;
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            r.t_.emplace_back(m, std::move(c));
    return r;
}

Poly Poly::mul(const Rational& c) const {
    if (c.is_zero())
        return {};
    Poly r;
    r.t_.reserve(t_.size());
    for (const auto& [m, cc] : t_)
        r.t_.emplace_back(m, cc * c);
    return r;
}

Poly Poly::pow(int k) const {
    Poly r(Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1)
            r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::optional<Poly> Poly::try_divide(const Poly& g) const {
    if (g.is_zero())
        return std::nullopt;
    Poly rem = *this;
    Poly quo;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.t_[0];
        if (!g.leading_mono().divides(lm))
            return std::nullopt;
        Poly qt = Poly::term(lm.divide(g.leading_mono()), lc / g.leading_coeff());
        quo += qt;
        rem -= qt * g;
    }
    return quo;
}

Poly Poly::divexact(const Poly& g) const {
    auto q = try_divide(g);
    if (!q)
        throw DomainError("inexact polynomial division");
    return *q;
}

namespace {

// univariate view in main variable `x`: coefficient polys by ascending x-degree
std::vector<Poly> to_univar(const Poly& p, int x) {
    std::vector<Poly> coeffs(static_cast<std::size_t>(p.degree_in(x)) + 1);
    std::vector<PolyBuilder> builders(coeffs.size());
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        int d = rest.e[x];
        rest.e[x] = 0;
        builders[static_cast<std::size_t>(d)].add(rest, c);
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = builders[i].build();
    return coeffs;
}

Poly from_univar(const std::vector<Poly>& coeffs, int x) {
    Poly r;
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        r += coeffs[d] * Poly::term(Monomial::var(x, static_cast<int>(d)), Rational(1));
    return r;
}

int deg_u(const std::vector<Poly>& u) {
    for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
        if (!u[static_cast<std::size_t>(d)].is_zero())
            return d;
    return -1;
}

// pseudo-remainder of univariate views: lc(b)^(da-db+1) * a  mod b
std::vector<Poly> prem_u(std::vector<Poly> a, const std::vector<Poly>& b) {
    int da = deg_u(a), db = deg_u(b);
    const Poly& lb = b[static_cast<std::size_t>(db)];
    while (da >= db) {
        Poly la = a[static_cast<std::size_t>(da)];
        for (int i = 0; i <= da; ++i)
            a[static_cast<std::size_t>(i)] *= lb;
        int shift = da - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        int nd = deg_u(a);
        if (nd == da)
            throw DomainError("pseudo-division failed to reduce degree");
        da = nd;
    }
    a.resize(static_cast<std::size_t>(std::max(da, -1) + 1));
    return a;
}

// content of a univariate view = gcd of the coefficient polys
Poly content_u(const std::vector<Poly>& u) {
    Poly g;
    for (const auto& c : u)
        if (!c.is_zero())
            g = Poly::gcd(g, c);
    return g;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(Rational(1));
    int x = std::min(a.lowest_var(), b.lowest_var());

    auto ua = to_univar(a, x);
    auto ub = to_univar(b, x);
    Poly ca = content_u(ua);
    Poly cb = content_u(ub);
    Poly g0 = Poly::gcd(ca, cb);
    Poly pa = a.divexact(ca);
    Poly pb = b.divexact(cb);

    // primitive PRS in x; r0 and r1 stay primitive w.r.t. x throughout
    auto r0 = to_univar(pa, x);
    auto r1 = to_univar(pb, x);
    if (deg_u(r0) < deg_u(r1))
        std::swap(r0, r1);
    while (deg_u(r1) > 0) {
        auto r = prem_u(r0, r1);
        if (deg_u(r) < 0)
            return (g0 * from_univar(r1, x)).monic();
        r0 = std::move(r1);
        Poly cr = content_u(r);
        r1.assign(r.size(), Poly());
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero())
                r1[i] = r[i].divexact(cr);
    }
    // x-free primitive remainder is a unit: the x-parts are coprime
    return g0.monic();
}

Poly Poly::substitute(int var, const Poly& value) const {
    if (!uses_var(var))
        return *this;
    int maxd = degree_in(var);
    std::vector<Poly> powers(static_cast<std::size_t>(maxd) + 1);
    powers[0] = Poly(Rational(1));
    for (int d = 1; d <= maxd; ++d)
        powers[static_cast<std::size_t>(d)] = powers[static_cast<std::size_t>(d - 1)] * value;
    Poly r;
    for (const auto& [m, c] : t_) {
        Monomial rest = m;
        int d = rest.e[var];
        rest.e[var] = 0;
        r += Poly::term(rest, c) * powers[static_cast<std::size_t>(d)];
    }
    return r;
}

Rational Poly::eval(const std::array<std::optional<Rational>, kNumVars>& assignment) const {
    Rational acc(0);
    for (const auto& [m, c] : t_) {
        Rational term = c;
        for (int v = 0; v < kNumVars; ++v) {
            for (int k = 0; k < m.e[v]; ++k) {
                if (!assignment[static_cast<std::size_t>(v)])
                    throw DomainError(std::string("unassigned parameter: ") + std::string(kVarNames[static_cast<std::size_t>(v)]));
                term *= *assignment[static_cast<std::size_t>(v)];
            }
        }
        acc += term;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero())
        return {};
    return mul(leading_coeff().inverse());
}

std::string Poly::str() const {
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_coeff = !mag.is_one() || m.is_one();
        if (need_coeff)
            os << mag.str();
        bool need_star = need_coeff;
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0)
                continue;
            if (need_star)
                os << "*";
            os << kVarNames[static_cast<std::size_t>(v)];
            if (m.e[v] > 1)
                os << "^" << static_cast<int>(m.e[v]);
            need_star = true;
        }
    }
    return os.str();
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
    if (!c.is_zero())
        acc_.emplace_back(m, c);
}

Poly PolyBuilder::build() {
    Poly p;
    p.t_ = std::move(acc_);
    p.normalize();
    acc_.clear();
    return p;
}

} // namespace zinbiel
