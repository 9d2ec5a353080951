#include <doctest.h>

#include "zinbiel/algebra.hpp"
#include "zinbiel/families.hpp"

using namespace zinbiel;

TEST_SUITE_BEGIN("algebra");

namespace {

Algebra toy_non_zinbiel() {
    // e1 o e1 = e2, e2 o e1 = e2: (e1 o e1) o e1 = e2 != 0 = e1 o (e1 o e1) * 2
    Algebra a;
    a.dim = 2;
    a.labels = {"e1", "e2"};
    a.add_term(1, 1, 2, Scalar(1));
    a.add_term(2, 1, 2, Scalar(1));
    return a;
}

} // namespace

TEST_CASE("multiply: null-filiform e2 o e2 = 3 e4") {
    FamilyParams params;
    params.n = 4;
    Algebra nf = build_family(FamilyId::NF, params);
    Vec prod = nf.multiply(unit_vec(4, 2), unit_vec(4, 2));
    CHECK(prod == scale_vec(unit_vec(4, 4), Scalar(3)));
}

TEST_CASE("multiply: bilinearity sends zero to zero") {
    FamilyParams params;
    params.n = 4;
    Algebra nf = build_family(FamilyId::NF, params);
    CHECK(is_zero_vec(nf.multiply(zero_vec(4), unit_vec(4, 1))));
    CHECK_THROWS_AS(nf.multiply(zero_vec(3), unit_vec(4, 1)), DimensionError);
}

TEST_CASE("multiply: the (3,1) example has e2 o e1 = -e3") {
    Algebra ex = build_family(FamilyId::EX31, {});
    CHECK(ex.multiply(unit_vec(4, 2), unit_vec(4, 1)) == scale_vec(unit_vec(4, 3), Scalar(-1)));
    CHECK(ex.multiply(unit_vec(4, 1), unit_vec(4, 2)) == unit_vec(4, 3));
}

TEST_CASE("zinbiel_defects: A3 at (n=8, p=3) has none") {
    FamilyParams params;
    params.n = 8;
    params.p = 3;
    CHECK(zinbiel_defects(build_family(FamilyId::A3, params)).empty());
}

TEST_CASE("zinbiel_defects: abelian has none") {
    CHECK(zinbiel_defects(abelian_algebra(5)).empty());
}

TEST_CASE("zinbiel_defects: the two-dimensional toy fails at (1,1,1)") {
    auto defects = zinbiel_defects(toy_non_zinbiel());
    REQUIRE_FALSE(defects.empty());
    CHECK(defects[0].i == 1);
    CHECK(defects[0].j == 1);
    CHECK(defects[0].k == 1);
    // defect value is e2
    CHECK(defects[0].value == SparseVec{{2, Scalar(1)}});
}

TEST_CASE("lower series dims of the null-filiform algebra") {
    for (int n : {4, 6}) {
        FamilyParams params;
        params.n = n;
        auto dims = lower_series_dims(build_family(FamilyId::NF, params));
        std::vector<int> expect;
        for (int d = n; d >= 0; --d)
            expect.push_back(d);
        CHECK(dims == expect);
    }
}

TEST_CASE("lower series dims: abelian and A1(9,3,beta1=0)") {
    CHECK(lower_series_dims(abelian_algebra(5)) == std::vector<int>{5, 0});
    FamilyParams params;
    params.n = 9;
    params.p = 3;
    params.beta1 = Scalar(0);
    CHECK(lower_series_dims(build_family(FamilyId::A1, params)) ==
          std::vector<int>{9, 7, 5, 3, 2, 1, 0});
}

TEST_CASE("nilindex values and the non-nilpotent error") {
    FamilyParams nf4;
    nf4.n = 4;
    CHECK(nilindex(build_family(FamilyId::NF, nf4)) == 5);
    CHECK(nilindex(abelian_algebra(7)) == 2);
    FamilyParams a1;
    a1.n = 9;
    a1.p = 3;
    a1.beta1 = Scalar(0);
    CHECK(nilindex(build_family(FamilyId::A1, a1)) == 7);

    Algebra idem;
    idem.dim = 1;
    idem.labels = {"e1"};
    idem.add_term(1, 1, 1, Scalar(1));
    CHECK_THROWS_AS(nilindex(idem), NotNilpotentError);
    CHECK_FALSE(is_nilpotent(idem));
}

TEST_CASE("lower series is strictly decreasing until zero on nilpotent instances") {
    FamilyParams params;
    params.n = 8;
    params.p = 3;
    for (FamilyId id : {FamilyId::A1, FamilyId::A2, FamilyId::A3}) {
        FamilyParams p2 = params;
        if (id == FamilyId::A1)
            p2.beta1 = Scalar(Rational(1, 2));
        auto dims = lower_series_dims(build_family(id, p2));
        for (std::size_t i = 0; i + 1 < dims.size(); ++i)
            CHECK(dims[i] > dims[i + 1]);
        CHECK(dims.back() == 0);
    }
}

TEST_CASE("null-filiform iff nilindex n+1") {
    FamilyParams nf5;
    nf5.n = 5;
    Algebra nf = build_family(FamilyId::NF, nf5);
    CHECK(is_null_filiform(nf));
    CHECK(nilindex(nf) == nf.dim + 1);

    FamilyParams a3;
    a3.n = 8;
    a3.p = 3;
    Algebra a = build_family(FamilyId::A3, a3);
    CHECK_FALSE(is_null_filiform(a));
    CHECK(nilindex(a) != a.dim + 1);
}

TEST_CASE("derived identity holds on all basis triples of Zinbiel instances") {
    FamilyParams a3;
    a3.n = 8;
    a3.p = 3;
    CHECK(derived_identity_defects(build_family(FamilyId::A3, a3)).empty());
    CHECK(derived_identity_defects(build_family(FamilyId::EX31, {})).empty());

    // right-commutativity fails at (1,1,3): (e1 o e1) o e3 = e4, (e1 o e3) o e1 = 0
    Algebra bad;
    bad.dim = 4;
    bad.labels = {"e1", "e2", "e3", "e4"};
    bad.add_term(1, 1, 2, Scalar(1));
    bad.add_term(1, 3, 2, Scalar(1));
    bad.add_term(2, 3, 4, Scalar(1));
    auto defects = derived_identity_defects(bad);
    REQUIRE_FALSE(defects.empty());
    CHECK(defects[0].i == 1);
    CHECK(defects[0].j == 1);
    CHECK(defects[0].k == 3);
}

TEST_CASE("change_basis round-trips through inverse transvections") {
    FamilyParams a3;
    a3.n = 8;
    a3.p = 3;
    Algebra a = build_family(FamilyId::A3, a3);
    Mat p = identity_mat(8);
    p[2][5] = Scalar(2); // transvection
    Algebra b = change_basis(a, p);
    CHECK_FALSE(b == a);
    Mat pinv = identity_mat(8);
    pinv[2][5] = Scalar(-2);
    CHECK(change_basis(b, pinv) == a);
    // an isomorphic copy stays Zinbiel
    CHECK(zinbiel_defects(b).empty());
}

TEST_SUITE_END();
