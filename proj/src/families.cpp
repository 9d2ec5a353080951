#include "zinbiel/families.hpp"

#include <algorithm>

namespace zinbiel {

namespace {

const char* kNames[] = {"A1", "A2", "A3", "A4",  "A5",  "A6",  "A7",   "A8", "A9",
                        "A10", "A11", "A12", "T1", "T2",  "T3",  "T4",  "T5",   "T6", "T7",
                        "T8",  "T9",  "T10", "EX31", "NF", "W31"};

bool is_type_I(FamilyId id) {
    return id >= FamilyId::A1 && id <= FamilyId::A12;
}

[[noreturn]] void bad(FamilyId id, const std::string& what) {
    throw ParameterError(family_name(id) + ": " + what);
}

int require_p(FamilyId id, const FamilyParams& params) {
    if (!params.p)
        bad(id, "parameter p is required");
    if (*params.p < 3)
        bad(id, "p must be at least 3");
    return *params.p;
}

// n constraints per family; derives n when it is determined by p (and t)
int resolve_n(FamilyId id, const FamilyParams& params, int p) {
    auto fixed = [&](int expect, const std::string& formula) {
        if (params.n && *params.n != expect)
            bad(id, "n must equal " + formula + " = " + std::to_string(expect));
        return expect;
    };
    switch (id) {
    case FamilyId::A1:
    case FamilyId::A2:
    case FamilyId::A3:
        if (!params.n)
            bad(id, "n is required (any n >= 2p+2)");
        if (*params.n < 2 * p + 2)
            bad(id, "n must be at least 2p+2 = " + std::to_string(2 * p + 2));
        return *params.n;
    case FamilyId::A4:
    case FamilyId::A5:
    case FamilyId::A6:
    case FamilyId::A7:
        return fixed(2 * p + 1, "2p+1");
    case FamilyId::A8:
    case FamilyId::A9:
    case FamilyId::A10:
    case FamilyId::A11:
    case FamilyId::A12:
        return fixed(2 * p, "2p");
    case FamilyId::T1:
    case FamilyId::T2:
    case FamilyId::T3:
    case FamilyId::T4:
    case FamilyId::T5:
        return fixed(2 * p + 1, "2p+1");
    case FamilyId::T6:
    case FamilyId::T7:
    case FamilyId::T8:
        return fixed(2 * p + 2, "2p+2");
    case FamilyId::T9:
    case FamilyId::T10: {
        int t;
        if (params.t)
            t = *params.t;
        else if (params.n)
            t = *params.n - 2 * p;
        else
            bad(id, "t (or n = 2p+t) is required");
        if (t < 3 || t > p + 1)
            bad(id, "t must satisfy 3 <= t <= p+1");
        return fixed(2 * p + t, "2p+t");
    }
    case FamilyId::W31:
        return fixed(3 * p + 1, "3p+1");
    default:
        bad(id, "internal: resolve_n");
    }
}

// beta1 is fixed for most families and must match when supplied
std::optional<Rational> fixed_beta1(FamilyId id, int p) {
    switch (id) {
    case FamilyId::A2:
    case FamilyId::A6:
    case FamilyId::A9:
    case FamilyId::A10:
    case FamilyId::T2:
    case FamilyId::T7:
    case FamilyId::T10:
        return Rational(2 - p);
    case FamilyId::A3:
    case FamilyId::A7:
    case FamilyId::A11:
    case FamilyId::A12:
    case FamilyId::T4:
    case FamilyId::T5:
        return Rational(1);
    case FamilyId::A4:
    case FamilyId::T3:
        return Rational(1 - p);
    case FamilyId::T8:
    case FamilyId::W31:
        return Rational(-p);
    default:
        return std::nullopt;
    }
}

} // namespace

std::string family_name(FamilyId id) {
    return kNames[static_cast<int>(id)];
}

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i)
        if (name == kNames[i])
            return static_cast<FamilyId>(i);
    return std::nullopt;
}

std::vector<FamilyId> all_families() {
    std::vector<FamilyId> out;
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i)
        out.push_back(static_cast<FamilyId>(i));
    return out;
}

std::vector<Scalar> beta_sequence(int p, const Scalar& beta1, int length) {
    if (p < 0)
        throw DomainError("beta_sequence: negative p");
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(std::max(length, 0)));
    if (length <= 0)
        return out;
    out.push_back(Scalar(1));
    Scalar prod(1);
    for (int j = 1; j < length; ++j) {
        // beta_j = prod_{k=0}^{j-1} (k + beta1) / (k + 1)
        prod = prod * (Scalar(j - 1) + beta1) / Scalar(j);
        out.push_back(prod);
    }
    return out;
}

Algebra build_family(FamilyId id, const FamilyParams& params) {
    // the two fixtures outside the (n-p, p) families
    if (id == FamilyId::EX31) {
        if (params.n && *params.n != 4)
            bad(id, "the example is four-dimensional");
        Algebra a;
        a.dim = 4;
        a.labels = {"e1", "e2", "e3", "e4"};
        a.add_term(1, 2, 3, Scalar(1));
        a.add_term(1, 3, 4, Scalar(1));
        a.add_term(2, 1, 3, Scalar(-1));
        return a;
    }
    if (id == FamilyId::NF) {
        if (!params.n || *params.n < 1)
            bad(id, "n >= 1 is required");
        int n = *params.n;
        Algebra a;
        a.dim = n;
        for (int i = 1; i <= n; ++i)
            a.labels.push_back("e" + std::to_string(i));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i + j <= n)
                    a.add_term(i, j, i + j, Scalar(binomial(i + j - 1, j)));
        return a;
    }

    int p = require_p(id, params);
    int n = resolve_n(id, params, p);

    // beta1: fixed, constrained to a finite set, or free (symbolic default)
    Scalar beta1;
    if (auto fixed = fixed_beta1(id, p)) {
        if (params.beta1 && *params.beta1 != Scalar(*fixed))
            bad(id, "beta1 is fixed to " + fixed->str() + " for this family");
        beta1 = Scalar(*fixed);
    } else if (id == FamilyId::T1 || id == FamilyId::T6 || id == FamilyId::T9) {
        if (!params.beta1)
            bad(id, "beta1 is required");
        if (!params.beta1->is_rational() || !params.beta1->rational().is_integer())
            bad(id, "beta1 must be a negative integer from the family's range");
        Rational b = params.beta1->rational();
        int lo = -p;
        int hi = (id == FamilyId::T9) ? -(n - 2 * p - 1) : -1;
        if (b < Rational(lo) || b > Rational(hi))
            bad(id, "beta1 must lie in {" + std::to_string(lo) + ", ..., " + std::to_string(hi) + "}");
        beta1 = *params.beta1;
    } else {
        // A1, A5, A8: free; symbolic when unset
        beta1 = params.beta1 ? *params.beta1 : Scalar::parameter("beta1");
    }
    if ((params.gamma1 || params.delta1) && id != FamilyId::A7)
        bad(id, "gamma1/delta1 apply to A7 only");
    if (params.delta_pm1 && id != FamilyId::A10)
        bad(id, "delta_pm1 applies to A10 only");
    if (params.t && id != FamilyId::T9 && id != FamilyId::T10)
        bad(id, "t applies to T9/T10 only");

    bool type_I = is_type_I(id);
    int ne = type_I ? n - p : p;     // e-chain length
    int nf = n - ne;                 // f-chain length
    int mix_hi = type_I ? p : n - p; // mixed sums live on 2 <= i+j <= mix_hi

    Algebra a;
    a.dim = n;
    for (int i = 1; i <= ne; ++i)
        a.labels.push_back("e" + std::to_string(i));
    for (int i = 1; i <= nf; ++i)
        a.labels.push_back("f" + std::to_string(i));

    auto beta = beta_sequence(p, beta1, (type_I ? p : p + 1) + 1);
    auto fi = [&](int i) { return ne + i; }; // index of f_i

    // e_i o e_j = C(i+j-1, j) e_{i+j}
    for (int i = 1; i <= ne; ++i)
        for (int j = 1; j <= ne; ++j)
            if (i + j <= ne)
                a.add_term(i, j, i + j, Scalar(binomial(i + j - 1, j)));

    // e_i o f_j = sum_{k=0}^{i-1} C(i+j-2-k, j-1) beta_k f_{i+j}
    for (int i = 1; i <= ne; ++i)
        for (int j = 1; j <= nf; ++j) {
            if (i + j < 2 || i + j > mix_hi || i + j > nf)
                continue;
            Scalar coeff(0);
            for (int k = 0; k <= i - 1; ++k)
                coeff += beta[static_cast<std::size_t>(k)] * Scalar(binomial(i + j - 2 - k, j - 1));
            a.add_term(i, fi(j), fi(i + j), coeff);
        }

    // f_i o e_j: the displayed sum for i >= 2; f1 o e_j = beta_j f_{j+1}
    for (int i = 1; i <= nf; ++i)
        for (int j = 1; j <= ne; ++j) {
            if (i + j < 2 || i + j > mix_hi || i + j > nf)
                continue;
            Scalar coeff(0);
            if (i == 1) {
                coeff = beta[static_cast<std::size_t>(j)];
            } else {
                for (int k = 0; k <= j; ++k)
                    coeff += beta[static_cast<std::size_t>(k)] * Scalar(binomial(i + j - 2 - k, i - 2));
            }
            a.add_term(fi(i), j, fi(i + j), coeff);
        }

    // family-specific extra products
    Scalar gamma1 = params.gamma1 ? *params.gamma1
                    : (id == FamilyId::A7 ? Scalar::parameter("gamma1") : Scalar(0));
    Scalar delta1 = params.delta1 ? *params.delta1
                    : (id == FamilyId::A7 ? Scalar::parameter("delta1") : Scalar(0));
    Scalar delta_pm1 = params.delta_pm1
                           ? *params.delta_pm1
                           : (id == FamilyId::A10 ? Scalar::parameter("delta_pm1") : Scalar(0));

    switch (id) {
    case FamilyId::A2:
    case FamilyId::A6:
    case FamilyId::A9:
        a.add_term(fi(1), fi(p - 1), fi(p), Scalar(1));
        break;
    case FamilyId::A4:
        a.add_term(fi(1), fi(p), p + 1, Scalar(1));
        break;
    case FamilyId::A10:
        a.add_term(fi(1), fi(p - 1), p, Scalar(1));
        a.add_term(fi(1), fi(p - 1), fi(p), delta_pm1);
        break;
    case FamilyId::A3:
    case FamilyId::A12:
        for (int i = 1; i <= nf; ++i)
            for (int j = 1; j <= nf; ++j)
                if (i + j <= p)
                    a.add_term(fi(i), fi(j), fi(i + j), Scalar(binomial(i + j - 1, j)));
        break;
    case FamilyId::A7:
        for (int i = 1; i <= nf; ++i)
            for (int j = 1; j <= nf; ++j) {
                if (i + j <= p) {
                    Scalar c(binomial(i + j - 1, j));
                    a.add_term(fi(i), fi(j), i + j, gamma1 * c);
                    a.add_term(fi(i), fi(j), fi(i + j), delta1 * c);
                } else if (i + j == p + 1) {
                    a.add_term(fi(i), fi(j), p + 1, gamma1 * Scalar(binomial(i + j - 1, j)));
                }
            }
        break;
    case FamilyId::T2:
    case FamilyId::T7:
    case FamilyId::T10:
        a.add_term(fi(1), fi(p - 1), p, Scalar(1));
        break;
    case FamilyId::T3:
        a.add_term(fi(1), fi(p), fi(p + 1), Scalar(1));
        break;
    case FamilyId::T8:
        a.add_term(fi(1), fi(p + 1), fi(p + 2), Scalar(1));
        break;
    case FamilyId::T5:
        for (int i = 1; i <= nf; ++i)
            for (int j = 1; j <= nf; ++j)
                if (i + j <= p + 1)
                    a.add_term(fi(i), fi(j), fi(i + j), Scalar(binomial(i + j - 1, j)));
        break;
    default:
        break;
    }

    // declared parameters = parameters actually appearing
    std::vector<bool> used(kNumVars, false);
    for (const auto& [ij, sv] : a.products) {
        (void)ij;
        for (const auto& t : sv)
            for (int v : t.c.used_params())
                used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < kNumVars; ++v)
        if (used[static_cast<std::size_t>(v)])
            a.params.push_back(std::string(kVarNames[static_cast<std::size_t>(v)]));
    return a;
}

namespace {

Scalar coeff_of(const Algebra& a, int i, int j, int k) {
    if (const SparseVec* p = a.product(i, j))
        for (const auto& t : *p)
            if (t.k == k)
                return t.c;
    return Scalar(0);
}

} // namespace

std::vector<std::pair<std::string, Scalar>> restriction_residuals(FamilyId id,
                                                                  const FamilyParams& params) {
    std::vector<std::pair<std::string, Scalar>> out;
    if (id == FamilyId::EX31 || id == FamilyId::NF)
        return out; // no (n-p, p) restriction system applies

    Algebra a = build_family(id, params);
    int p = *params.p;
    int n = a.dim;
    bool type_I = is_type_I(id);
    int ne = type_I ? n - p : p;
    auto fi = [&](int i) { return ne + i; };

    // structure constants in the notation of the restriction propositions
    auto alpha = [&](int i) { return coeff_of(a, fi(1), i, i + 1); };
    auto beta = [&](int i) {
        if (i == 0)
            return Scalar(1);
        return coeff_of(a, fi(1), i, fi(i + 1));
    };
    auto gamma = [&](int i) { return coeff_of(a, fi(1), fi(i), i + 1); };
    auto delta = [&](int i) { return coeff_of(a, fi(1), fi(i), fi(i + 1)); };

    Scalar beta1 = beta(1);
    auto emit = [&](const std::string& name, const Scalar& value) { out.emplace_back(name, value); };

    if (type_I) {
        for (int i = 1; i <= n - p - 2; ++i)
            emit("alpha" + std::to_string(i + 1), alpha(i + 1));
        for (int i = 1; i <= p - 2; ++i) {
            Scalar prod(1);
            for (int k = 0; k <= i; ++k)
                prod = prod * (Scalar(k) + beta1) / Scalar(k + 1);
            emit("beta_rec" + std::to_string(i + 1), beta(i + 1) - prod);
        }
        int gmax = std::min(p, n - p - 2); // gamma_i exists for i <= p
        for (int i = 1; i <= gmax; ++i) {
            Scalar sum = Scalar(2) * gamma(1);
            for (int k = 2; k <= i; ++k)
                sum += gamma(k);
            emit("gamma_sum" + std::to_string(i), Scalar(i + 1) * gamma(i) - beta1 * sum);
        }
        for (int i = 1; i <= p - 2; ++i) {
            Scalar sum = Scalar(2) * delta(1);
            for (int k = 2; k <= i; ++k)
                sum += delta(k);
            emit("delta_sum" + std::to_string(i), (Scalar(i) + beta1) * delta(i) - beta1 * sum);
        }
        if (n >= 2 * p + 1) {
            for (int i = 1; i <= p - 1; ++i)
                emit("gamma_step" + std::to_string(i),
                     Scalar(i + 1) * gamma(i) - (Scalar(i) + beta1) * gamma(i + 1));
            for (int i = 1; i <= p - 2; ++i)
                emit("delta_step" + std::to_string(i),
                     (Scalar(i) + beta1) * (delta(i) - delta(i + 1)));
        }
        if (beta1 == Scalar(1)) {
            for (int i = 1; i <= p - 1; ++i)
                emit("beta_one" + std::to_string(i), beta(i) - Scalar(1));
            int gend = (n >= 2 * p + 1) ? p : p - 1;
            for (int i = 1; i <= gend; ++i)
                emit("gamma_one" + std::to_string(i), gamma(i) - gamma(1));
            for (int i = 1; i <= p - 1; ++i)
                emit("delta_one" + std::to_string(i), delta(i) - delta(1));
        } else if (n >= 2 * p + 1) {
            for (int i = 1; i <= p - 1; ++i)
                emit("gamma_zero" + std::to_string(i), gamma(i));
            for (int i = 1; i <= p - 2; ++i)
                emit("delta_zero" + std::to_string(i), delta(i));
            emit("gamma_edge", (Scalar(p - 1) + beta1) * gamma(p));
            emit("delta_edge", (Scalar(p - 2) + beta1) * delta(p - 1));
        } else { // n == 2p
            for (int i = 1; i <= p - 2; ++i)
                emit("gamma_zero" + std::to_string(i), gamma(i));
            for (int i = 1; i <= p - 2; ++i)
                emit("delta_zero" + std::to_string(i), delta(i));
            emit("gamma_edge", (Scalar(p - 2) + beta1) * gamma(p - 1));
            emit("delta_edge", (Scalar(p - 2) + beta1) * delta(p - 1));
        }
    } else {
        for (int i = 1; i <= p - 2; ++i)
            emit("alpha" + std::to_string(i + 1), alpha(i + 1));
        for (int i = 1; i <= p - 1; ++i) {
            Scalar prod(1);
            for (int k = 0; k <= i; ++k)
                prod = prod * (Scalar(k) + beta1) / Scalar(k + 1);
            emit("beta_rec" + std::to_string(i + 1), beta(i + 1) - prod);
        }
        for (int i = 1; i <= p - 2; ++i) {
            Scalar sum = Scalar(2) * gamma(1);
            for (int k = 2; k <= i; ++k)
                sum += gamma(k);
            emit("gamma_sum" + std::to_string(i), Scalar(i + 1) * gamma(i) - beta1 * sum);
        }
        for (int i = 1; i <= n - p - 2; ++i) {
            Scalar sum = Scalar(2) * delta(1);
            for (int k = 2; k <= i; ++k)
                sum += delta(k);
            emit("delta_sum" + std::to_string(i), (Scalar(i) + beta1) * delta(i) - beta1 * sum);
        }
        if (beta1 == Scalar(1)) {
            for (int i = 1; i <= p; ++i)
                emit("beta_one" + std::to_string(i), beta(i) - Scalar(1));
            for (int i = 1; i <= p - 1; ++i)
                emit("gamma_one" + std::to_string(i), gamma(i) - gamma(1));
            for (int i = 1; i <= n - p - 1; ++i)
                emit("delta_one" + std::to_string(i), delta(i) - delta(1));
        } else {
            for (int i = 1; i <= p - 2; ++i)
                emit("gamma_zero" + std::to_string(i), gamma(i));
            for (int i = 1; i <= n - p - 2; ++i)
                emit("delta_zero" + std::to_string(i), delta(i));
            emit("gamma_edge", (Scalar(p - 2) + beta1) * gamma(p - 1));
            emit("delta_edge", (Scalar(n - p - 2) + beta1) * delta(n - p - 1));
        }
    }
    return out;
}

} // namespace zinbiel
