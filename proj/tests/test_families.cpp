#include <doctest.h>

#include "zinbiel/families.hpp"
#include "zinbiel/spectra.hpp"

using namespace zinbiel;

TEST_SUITE_BEGIN("families");

namespace {

FamilyParams np(int n, int p) {
    FamilyParams params;
    params.n = n;
    params.p = p;
    return params;
}

Scalar coeff(const Algebra& a, const std::string& x, const std::string& y, const std::string& z) {
    const SparseVec* p = a.product(a.label_index(x), a.label_index(y));
    if (!p)
        return Scalar(0);
    int k = a.label_index(z);
    for (const auto& t : *p)
        if (t.k == k)
            return t.c;
    return Scalar(0);
}

} // namespace

TEST_CASE("beta_sequence: frozen example values") {
    // p = 4, beta1 = -2: (1, -2, 1, 0) — the closed form (-1)^i C_{p-2}^i
    auto b = beta_sequence(4, Scalar(-2), 4);
    CHECK(b == std::vector<Scalar>{Scalar(1), Scalar(-2), Scalar(1), Scalar(0)});
    // beta1 = 1 gives the all-ones sequence
    for (const auto& s : beta_sequence(5, Scalar(1), 6))
        CHECK(s == Scalar(1));
    // p = 3, beta1 = -3: (1, -3, 3, -1) — the closed form (-1)^i C_p^i
    auto w = beta_sequence(3, Scalar(-3), 4);
    CHECK(w == std::vector<Scalar>{Scalar(1), Scalar(-3), Scalar(3), Scalar(-1)});
}

TEST_CASE("beta_sequence at beta1 = 2-p matches (-1)^i C_{p-2}^i for p <= 8") {
    for (int p = 3; p <= 8; ++p) {
        auto b = beta_sequence(p, Scalar(2 - p), p);
        for (int i = 0; i < p; ++i) {
            Rational expect = binomial(p - 2, i);
            if (i % 2 == 1)
                expect = -expect;
            CHECK(b[static_cast<std::size_t>(i)] == Scalar(expect));
        }
    }
}

TEST_CASE("beta_sequence stays polynomial in a symbolic beta1") {
    auto b = beta_sequence(4, Scalar::parameter("beta1"), 4);
    // beta_2 = beta1 (beta1 + 1) / 2
    Scalar b1 = Scalar::parameter("beta1");
    CHECK(b[2] == b1 * (b1 + Scalar(1)) / Scalar(2));
    CHECK(eval_params(b[2], {{"beta1", Rational(-2)}}) == Rational(1));
}

TEST_CASE("EX31 is exactly the published four-dimensional table") {
    Algebra ex = build_family(FamilyId::EX31, {});
    CHECK(ex.dim == 4);
    CHECK(ex.products.size() == 3);
    CHECK(coeff(ex, "e1", "e2", "e3") == Scalar(1));
    CHECK(coeff(ex, "e1", "e3", "e4") == Scalar(1));
    CHECK(coeff(ex, "e2", "e1", "e3") == Scalar(-1));
}

TEST_CASE("A3 at (8,3): f1 o f2 = 2 f3") {
    Algebra a = build_family(FamilyId::A3, np(8, 3));
    CHECK(coeff(a, "f1", "f2", "f3") == Scalar(2));
    CHECK(coeff(a, "e1", "f1", "f2") == Scalar(1));
}

TEST_CASE("W31 at p=3: f1 o e1 = -3 f2") {
    FamilyParams params;
    params.p = 3;
    Algebra w = build_family(FamilyId::W31, params);
    CHECK(w.dim == 10);
    CHECK(coeff(w, "f1", "e1", "f2") == Scalar(-3));
    CHECK(zinbiel_defects(w).empty());
}

TEST_CASE("every family output at p=3 sample points passes the defect scan") {
    std::vector<std::pair<FamilyId, FamilyParams>> instances;
    for (long b1 : {0L, 1L, -1L}) {
        FamilyParams a1 = np(8, 3);
        a1.beta1 = Scalar(b1);
        instances.push_back({FamilyId::A1, a1});
        FamilyParams a5 = np(7, 3);
        a5.beta1 = Scalar(b1);
        instances.push_back({FamilyId::A5, a5});
        FamilyParams a8 = np(6, 3);
        a8.beta1 = Scalar(b1);
        instances.push_back({FamilyId::A8, a8});
    }
    instances.push_back({FamilyId::A2, np(8, 3)});
    instances.push_back({FamilyId::A4, np(7, 3)});
    instances.push_back({FamilyId::A6, np(7, 3)});
    instances.push_back({FamilyId::A9, np(6, 3)});
    instances.push_back({FamilyId::A11, np(6, 3)});
    instances.push_back({FamilyId::A12, np(6, 3)});
    for (long b1 : {-1L, -2L, -3L}) {
        FamilyParams t1 = np(7, 3);
        t1.beta1 = Scalar(b1);
        instances.push_back({FamilyId::T1, t1});
        FamilyParams t6 = np(8, 3);
        t6.beta1 = Scalar(b1);
        instances.push_back({FamilyId::T6, t6});
    }
    instances.push_back({FamilyId::T2, np(7, 3)});
    instances.push_back({FamilyId::T3, np(7, 3)});
    instances.push_back({FamilyId::T4, np(7, 3)});
    instances.push_back({FamilyId::T5, np(7, 3)});
    instances.push_back({FamilyId::T8, np(8, 3)});
    {
        FamilyParams t9 = np(9, 3);
        t9.beta1 = Scalar(-3);
        instances.push_back({FamilyId::T9, t9});
    }
    for (const auto& [id, params] : instances) {
        CAPTURE(family_name(id));
        CHECK(zinbiel_defects(build_family(id, params)).empty());
    }
}

TEST_CASE("symbolic instances verify for all parameter values at once") {
    // A1 with symbolic beta1, A7 with symbolic gamma1/delta1, A10 with
    // symbolic delta_{p-1}: empty defect lists are polynomial identities
    FamilyParams a1 = np(8, 3);
    Algebra a = build_family(FamilyId::A1, a1);
    CHECK(a.params == std::vector<std::string>{"beta1"});
    CHECK(zinbiel_defects(a).empty());

    Algebra a7 = build_family(FamilyId::A7, np(7, 3));
    CHECK(a7.params == std::vector<std::string>{"delta1", "gamma1"});
    CHECK(zinbiel_defects(a7).empty());

    Algebra a10 = build_family(FamilyId::A10, np(6, 3));
    CHECK(a10.params == std::vector<std::string>{"delta_pm1"});
    CHECK(zinbiel_defects(a10).empty());
}

TEST_CASE("the T7 table fails the identity at p=3 and holds from p=4 on") {
    auto defects3 = zinbiel_defects(build_family(FamilyId::T7, np(8, 3)));
    REQUIRE(defects3.size() == 1);
    // (f1 o f2) o f2 = e3 o f2 = f5 while both right-hand products vanish
    CHECK(defects3[0].i == 4);
    CHECK(defects3[0].j == 5);
    CHECK(defects3[0].k == 5);
    CHECK(zinbiel_defects(build_family(FamilyId::T7, np(10, 4))).empty());
    CHECK(zinbiel_defects(build_family(FamilyId::T7, np(12, 5))).empty());
}

TEST_CASE("the T10 table holds exactly when t <= p-2") {
    FamilyParams ok = np(13, 5);
    ok.t = 3;
    CHECK(zinbiel_defects(build_family(FamilyId::T10, ok)).empty());
    FamilyParams bad = np(9, 3);
    bad.t = 3;
    CHECK_FALSE(zinbiel_defects(build_family(FamilyId::T10, bad)).empty());
    FamilyParams bad2 = np(14, 5);
    bad2.t = 4;
    CHECK_FALSE(zinbiel_defects(build_family(FamilyId::T10, bad2)).empty());
}

TEST_CASE("restriction residuals vanish on sample instances") {
    // A2: (p-2+beta1) delta_{p-1} with beta1 = 2-p
    for (auto& [name, value] : restriction_residuals(FamilyId::A2, np(8, 3))) {
        CAPTURE(name);
        CHECK(value.is_zero());
    }
    // A3: beta_i - 1 residuals all zero
    bool saw_beta_one = false;
    for (auto& [name, value] : restriction_residuals(FamilyId::A3, np(8, 3))) {
        CAPTURE(name);
        if (name.rfind("beta_one", 0) == 0)
            saw_beta_one = true;
        CHECK(value.is_zero());
    }
    CHECK(saw_beta_one);
    // A4: (p-1+beta1) gamma_p with beta1 = 1-p, gamma_p = 1
    bool saw_edge = false;
    for (auto& [name, value] : restriction_residuals(FamilyId::A4, np(7, 3))) {
        CAPTURE(name);
        if (name == "gamma_edge")
            saw_edge = true;
        CHECK(value.is_zero());
    }
    CHECK(saw_edge);
    // symbolic instances: residuals vanish identically in the parameters
    for (auto& [name, value] : restriction_residuals(FamilyId::A7, np(7, 3))) {
        CAPTURE(name);
        CHECK(value.is_zero());
    }
    for (auto& [name, value] : restriction_residuals(FamilyId::A10, np(6, 3))) {
        CAPTURE(name);
        CHECK(value.is_zero());
    }
    for (auto& [name, value] : restriction_residuals(FamilyId::A1, np(9, 3))) {
        CAPTURE(name);
        CHECK(value.is_zero());
    }
    FamilyParams w;
    w.p = 4;
    for (auto& [name, value] : restriction_residuals(FamilyId::W31, w)) {
        CAPTURE(name);
        CHECK(value.is_zero());
    }
}

TEST_CASE("parameter validation rejects out-of-range inputs") {
    CHECK_THROWS_AS(build_family(FamilyId::A1, np(7, 3)), ParameterError);  // n < 2p+2
    CHECK_THROWS_AS(build_family(FamilyId::A4, np(8, 3)), ParameterError);  // n != 2p+1
    FamilyParams t1 = np(7, 3);
    t1.beta1 = Scalar(0);
    CHECK_THROWS_AS(build_family(FamilyId::T1, t1), ParameterError); // beta1 not in {-p..-1}
    FamilyParams t9 = np(0, 3);
    t9.n.reset();
    t9.t = 2;
    CHECK_THROWS_AS(build_family(FamilyId::T9, t9), ParameterError); // t < 3
    FamilyParams a2 = np(8, 3);
    a2.beta1 = Scalar(0);
    CHECK_THROWS_AS(build_family(FamilyId::A2, a2), ParameterError); // beta1 fixed to 2-p
    FamilyParams ex;
    ex.n = 5;
    CHECK_THROWS_AS(build_family(FamilyId::EX31, ex), ParameterError);
    FamilyParams low;
    low.n = 6;
    low.p = 2;
    CHECK_THROWS_AS(build_family(FamilyId::A8, low), ParameterError); // p >= 3
    FamilyParams g = np(8, 3);
    g.gamma1 = Scalar(1);
    CHECK_THROWS_AS(build_family(FamilyId::A2, g), ParameterError); // gamma1 is A7-only
}

TEST_SUITE_END();
