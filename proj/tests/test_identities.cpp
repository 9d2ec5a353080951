#include <doctest.h>

#include "zinbiel/identities.hpp"
#include "zinbiel/linalg.hpp"

using namespace zinbiel;

TEST_SUITE_BEGIN("identities");

TEST_CASE("alternating sum: hand-computed small cases") {
    CHECK(lemma_alternating_sum(1, 1) == Rational(0));  // 1*1 - 1*1
    CHECK(lemma_alternating_sum(3, 2) == Rational(0));  // 4 - 6 + 2 - 0
    CHECK(lemma_alternating_sum(12, 12) == Rational(0));
    CHECK_THROWS_AS(lemma_alternating_sum(0, 1), DomainError);
}

TEST_CASE("alternating sum vanishes for all 1 <= n, a <= 12") {
    for (long n = 1; n <= 12; ++n)
        for (long a = 1; a <= 12; ++a)
            CHECK(lemma_alternating_sum(n, a) == Rational(0));
}

TEST_CASE("binomial matrix: p = 2 is ((1,1,1),(3,2,1),(6,3,1)) with det -1") {
    RatMat m = binomial_matrix(2);
    RatMat expect = {{Rational(1), Rational(1), Rational(1)},
                     {Rational(3), Rational(2), Rational(1)},
                     {Rational(6), Rational(3), Rational(1)}};
    CHECK(m == expect);
    CHECK(det_rational(m) == Rational(-1));
}

TEST_CASE("binomial matrix determinant is the reversal sign (-1)^(p(p+1)/2)") {
    // the nonexistence argument needs det != 0; the actual sign alternates
    for (int p = 2; p <= 8; ++p) {
        Rational d = det_rational(binomial_matrix(p));
        Rational expect = (p * (p + 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
        CHECK(d == expect);
        CHECK(d.abs() == Rational(1));
    }
}

TEST_CASE("one subtraction pass turns the last column into a unit vector") {
    for (int p = 2; p <= 5; ++p) {
        RatMat r = subtract_previous_rows(binomial_matrix(p));
        CHECK(r[0][static_cast<std::size_t>(p)] == Rational(1));
        for (int row = 1; row <= p; ++row)
            CHECK(r[static_cast<std::size_t>(row)][static_cast<std::size_t>(p)] == Rational(0));
    }
}

TEST_CASE("iterating the subtraction reaches the anti-triangular reduced shape") {
    for (int p = 2; p <= 5; ++p) {
        RatMat r = binomial_matrix(p);
        for (int pass = 0; pass < p; ++pass)
            r = subtract_previous_rows(r);
        // entry [row][c] = C(p-c, row): first row all ones, last row (1,0,...,0)
        for (int row = 0; row <= p; ++row)
            for (int c = 0; c <= p; ++c)
                CHECK(r[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] ==
                      binomial(p - c, row));
        for (int c = 0; c <= p; ++c)
            CHECK(r[0][static_cast<std::size_t>(c)] == Rational(1));
        CHECK(r[static_cast<std::size_t>(p)][0] == Rational(1));
        for (int c = 1; c <= p; ++c)
            CHECK(r[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == Rational(0));
    }
}

namespace {

RatVec alternating_binomials(int p) {
    RatVec beta;
    for (int k = 0; k <= p; ++k) {
        Rational b = binomial(p, k);
        beta.push_back(k % 2 == 0 ? b : -b);
    }
    return beta;
}

} // namespace

TEST_CASE("eq9: p=3 rows through i=2 vanish at beta = (1,-3,3,-1)") {
    LinearSystem sys = eq9_system(3, 2);
    RatVec res = sys.residuals(alternating_binomials(3));
    REQUIRE(res.size() == 2);
    CHECK(res[0] == Rational(0)); // 1 - 3 + 3 - 1
    CHECK(res[1] == Rational(0)); // 4 - 9 + 6 - 1
}

TEST_CASE("eq9 residual at row i equals C(i-1, p): zero through i = p, then not") {
    for (int p : {3, 4, 6}) {
        LinearSystem sys = eq9_system(p, 2 * p);
        RatVec res = sys.residuals(alternating_binomials(p));
        for (int i = 1; i <= 2 * p; ++i) {
            CHECK(res[static_cast<std::size_t>(i - 1)] == binomial(i - 1, p));
            if (i <= p)
                CHECK(res[static_cast<std::size_t>(i - 1)] == Rational(0));
        }
        CHECK(res[static_cast<std::size_t>(p)] == Rational(1)); // row p+1: the contradiction row
    }
}

TEST_CASE("eq9: p=3 with four rows has only the trivial solution; pinning beta0 = 1 is infeasible") {
    LinearSystem sys = eq9_system(3, 4);
    auto desc = sys.descriptor();
    CHECK(desc.kind == LinearSystem::Kind::Unique);
    CHECK(desc.rank == 4);
    LinearSystem pinned = sys.pin_variable(0, Rational(1));
    CHECK(pinned.descriptor().kind == LinearSystem::Kind::Infeasible);
    CHECK_FALSE(pinned.farkas_certificate().empty());
}

TEST_CASE("eq9: p rows leave an affine line containing the alternating binomials") {
    for (int p : {4, 5}) {
        LinearSystem sys = eq9_system(p, p);
        auto desc = sys.descriptor();
        CHECK(desc.kind == LinearSystem::Kind::Affine);
        CHECK(desc.rank == p);
        CHECK(desc.solution_dim == 1);
        for (const auto& r : sys.residuals(alternating_binomials(p)))
            CHECK(r == Rational(0));
    }
}

TEST_CASE("eq9 rank with p+1 rows is full for 2 <= p <= 8") {
    for (int p = 3; p <= 8; ++p)
        CHECK(eq9_system(p, p + 1).descriptor().rank == p + 1);
}

TEST_CASE("nonexistence certificates for p = 3..6 carry a checkable 1 = 0 combination") {
    for (int p = 3; p <= 6; ++p) {
        NonexistenceReport rep = nonexistence_certificate(p);
        CHECK(rep.infeasible);
        CHECK(rep.rank == p + 1);
        CHECK(rep.det.abs() == Rational(1));
        CHECK(check_nonexistence_certificate(rep));
    }
}

TEST_CASE("a tampered certificate fails the independent check") {
    NonexistenceReport rep = nonexistence_certificate(3);
    REQUIRE(!rep.farkas.empty());
    rep.farkas[0] += Rational(1);
    CHECK_FALSE(check_nonexistence_certificate(rep));
}

TEST_SUITE_END();
