#include "zinbiel/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace zinbiel {

Mat left_mult_matrix(const Algebra& a, const Vec& x) {
    if (static_cast<int>(x.size()) != a.dim)
        throw DimensionError("left_mult_matrix: vector length mismatch");
    Mat m(static_cast<std::size_t>(a.dim), zero_vec(a.dim));
    for (int j = 1; j <= a.dim; ++j) {
        Vec col = a.multiply(x, unit_vec(a.dim, j));
        for (int i = 0; i < a.dim; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] =
                col[static_cast<std::size_t>(i)];
    }
    return m;
}

std::vector<int> jordan_type_nilpotent(const Mat& m) {
    int n = static_cast<int>(m.size());
    if (n == 0)
        return {};
    std::vector<int> ranks{n};
    Mat power = m;
    while (true) {
        int r = rank_of(power);
        ranks.push_back(r);
        if (r == 0)
            break;
        if (static_cast<int>(ranks.size()) > n + 1)
            throw DomainError("jordan_type_nilpotent: matrix is not nilpotent");
        power = mat_mul(power, m);
    }
    // ge[s] = number of blocks of size >= s, s = 1..S
    std::vector<int> ge;
    for (std::size_t s = 1; s < ranks.size(); ++s)
        ge.push_back(ranks[s - 1] - ranks[s]);
    std::vector<int> part;
    for (int s = static_cast<int>(ge.size()); s >= 1; --s) {
        int count = ge[static_cast<std::size_t>(s - 1)] -
                    (s < static_cast<int>(ge.size()) ? ge[static_cast<std::size_t>(s)] : 0);
        for (int c = 0; c < count; ++c)
            part.push_back(s);
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

std::optional<std::vector<int>> jordan_layout(const Algebra& a, const Vec& x) {
    Mat m = left_mult_matrix(a, x);
    int n = a.dim;
    // next[i] = j if L x maps e_i to exactly 1 * e_j, 0 if to zero
    std::vector<int> next(static_cast<std::size_t>(n) + 1, -1);
    for (int col = 1; col <= n; ++col) {
        int target = 0;
        int nonzero = 0;
        for (int row = 1; row <= n; ++row) {
            const Scalar& c = m[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
            if (!c.is_zero()) {
                ++nonzero;
                if (!c.is_one() || row == col)
                    return std::nullopt;
                target = row;
            }
        }
        if (nonzero > 1)
            return std::nullopt;
        next[static_cast<std::size_t>(col)] = target;
    }
    // blocks must be consecutive runs e_i -> e_{i+1} -> ... -> 0
    std::vector<int> sizes;
    int i = 1;
    while (i <= n) {
        int len = 1;
        int cur = i;
        while (next[static_cast<std::size_t>(cur)] == cur + 1) {
            ++len;
            ++cur;
        }
        if (next[static_cast<std::size_t>(cur)] != 0)
            return std::nullopt;
        sizes.push_back(len);
        i = cur + 1;
    }
    return sizes;
}

int chain_length(const Algebra& a, const Vec& x) {
    if (is_zero_vec(x))
        throw DomainError("chain_length of the zero vector");
    Vec y = a.multiply(x, x);
    int len = 1;
    while (!is_zero_vec(y)) {
        ++len;
        if (len > a.dim)
            throw DomainError("chain_length: L_x is not nilpotent");
        y = a.multiply(x, y);
    }
    return len;
}

namespace {

// deterministic candidate directions on a complement of A^2:
// unit tuples first, then canonical integer tuples by increasing height
std::vector<std::vector<long>> grid_tuples(int k, int height, std::size_t cap) {
    std::vector<std::vector<long>> out;
    for (int i = 0; i < k; ++i) {
        std::vector<long> t(static_cast<std::size_t>(k), 0);
        t[static_cast<std::size_t>(i)] = 1;
        out.push_back(std::move(t));
    }
    auto canonical = [](const std::vector<long>& t) {
        long g = 0;
        for (long v : t)
            g = std::gcd(g, std::abs(v));
        if (g != 1)
            return false;
        for (long v : t) {
            if (v > 0)
                return true;
            if (v < 0)
                return false;
        }
        return false; // zero tuple
    };
    auto is_unit = [](const std::vector<long>& t) {
        int nz = 0;
        for (long v : t)
            if (v != 0) {
                if (v != 1)
                    return false;
                ++nz;
            }
        return nz == 1;
    };
    for (int h = 1; h <= height && out.size() < cap; ++h) {
        std::vector<long> t(static_cast<std::size_t>(k), -h);
        while (true) {
            long mx = 0;
            for (long v : t)
                mx = std::max(mx, std::abs(v));
            if (mx == h && canonical(t) && !is_unit(t)) {
                out.push_back(t);
                if (out.size() >= cap)
                    break;
            }
            int pos = k - 1;
            while (pos >= 0 && t[static_cast<std::size_t>(pos)] == h) {
                t[static_cast<std::size_t>(pos)] = -h;
                --pos;
            }
            if (pos < 0)
                break;
            ++t[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return a.size() > b.size();
}

} // namespace

CharSequence char_sequence(const Algebra& a, const CharSeqStrategy& strategy) {
    if (a.dim == 0)
        throw DomainError("char_sequence of the zero algebra");
    // A^2 and a complement spanned by unit vectors at non-pivot positions
    Mat prods;
    for (const auto& [ij, sv] : a.products) {
        (void)ij;
        prods.push_back(densify(sv, a.dim));
    }
    Subspace a2 = Subspace::span(prods, a.dim);
    if (a2.dim() == a.dim)
        throw DomainError("char_sequence: A equals A^2, no element outside A^2");
    std::vector<int> comp;
    {
        std::vector<bool> pivot(static_cast<std::size_t>(a.dim), false);
        for (int p : a2.pivots())
            pivot[static_cast<std::size_t>(p)] = true;
        for (int i = 0; i < a.dim; ++i)
            if (!pivot[static_cast<std::size_t>(i)])
                comp.push_back(i);
    }
    int k = static_cast<int>(comp.size());

    std::optional<CharSequence> best;
    auto consider = [&](const Vec& x) {
        std::vector<int> part = jordan_type_nilpotent(left_mult_matrix(a, x));
        if (!best || lex_greater(part, best->partition))
            best = CharSequence{std::move(part), x};
    };

    for (const auto& t : grid_tuples(k, strategy.grid_height, strategy.max_candidates)) {
        Vec x = zero_vec(a.dim);
        for (int i = 0; i < k; ++i)
            if (t[static_cast<std::size_t>(i)] != 0)
                x[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] =
                    Scalar(t[static_cast<std::size_t>(i)]);
        consider(x);
    }

    if (strategy.samples > 0) {
        std::mt19937_64 rng(strategy.seed);
        std::uniform_int_distribution<long> num(-strategy.sample_height, strategy.sample_height);
        std::uniform_int_distribution<long> den(1, strategy.sample_height);
        int found = 0;
        int attempts = 0;
        while (found < strategy.samples && attempts < strategy.samples * 20) {
            ++attempts;
            Vec x = zero_vec(a.dim);
            for (int i = 0; i < a.dim; ++i)
                x[static_cast<std::size_t>(i)] = Scalar(Rational(num(rng), den(rng)));
            if (is_zero_vec(x) || a2.contains(x))
                continue;
            ++found;
            consider(x);
        }
    }
    return *best;
}

AlgebraType detect_type(const Algebra& a, const CharSequence& cs) {
    if (cs.partition.size() != 2)
        throw UnsupportedError("detect_type requires a two-part characteristic sequence");
    int n1 = cs.partition[0];
    int n2 = cs.partition[1];
    int chain = chain_length(a, cs.witness);
    if (chain == n1)
        return AlgebraType::I; // covers n1 == n2 as well
    if (chain == n2)
        return AlgebraType::II;
    throw DomainError("detect_type: basis not adapted / sequence mismatch (chain " +
                      std::to_string(chain) + " matches neither part)");
}

} // namespace zinbiel
