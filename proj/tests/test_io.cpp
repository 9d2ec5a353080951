#include <doctest.h>

#include "zinbiel/families.hpp"
#include "zinbiel/io.hpp"

using namespace zinbiel;

TEST_SUITE_BEGIN("io");

namespace {

FamilyParams np(int n, int p) {
    FamilyParams params;
    params.n = n;
    params.p = p;
    return params;
}

} // namespace

TEST_CASE("algebra JSON round-trips bit-exactly, including symbolic coefficients") {
    Algebra a7 = build_family(FamilyId::A7, np(7, 3)); // symbolic gamma1, delta1
    std::string text = algebra_to_json(a7);
    Algebra back = algebra_from_json(text);
    CHECK(back == a7);
    CHECK(algebra_to_json(back) == text);

    Algebra ex = build_family(FamilyId::EX31, {});
    CHECK(algebra_from_json(algebra_to_json(ex)) == ex);
}

TEST_CASE("malformed coefficient 1/0 is a schema error") {
    std::string text = R"({
      "format": "zinbiel-algebra", "version": 1, "dim": 2,
      "labels": ["e1", "e2"], "params": [],
      "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "1/0"}]}]
    })";
    CHECK_THROWS_AS(algebra_from_json(text), SchemaError);
}

TEST_CASE("version mismatch is an explicit version error") {
    std::string text = R"({
      "format": "zinbiel-algebra", "version": 2, "dim": 1,
      "labels": ["e1"], "params": [], "products": []
    })";
    CHECK_THROWS_WITH_AS(algebra_from_json(text),
                         doctest::Contains("version"), SchemaError);
}

TEST_CASE("schema violations carry a field path") {
    std::string text = R"({
      "format": "zinbiel-algebra", "version": 1, "dim": 2,
      "labels": ["e1", "e2"], "params": [],
      "products": [{"i": 1, "j": 5, "terms": []}]
    })";
    CHECK_THROWS_WITH_AS(algebra_from_json(text), doctest::Contains("products[0]"), SchemaError);

    std::string undeclared = R"({
      "format": "zinbiel-algebra", "version": 1, "dim": 2,
      "labels": ["e1", "e2"], "params": [],
      "products": [{"i": 1, "j": 1, "terms": [{"k": 2, "coeff": "beta1"}]}]
    })";
    CHECK_THROWS_WITH_AS(algebra_from_json(undeclared), doctest::Contains("undeclared"),
                         SchemaError);

    std::string duplicate = R"({
      "format": "zinbiel-algebra", "version": 1, "dim": 2,
      "labels": ["e1", "e1"], "params": [], "products": []
    })";
    CHECK_THROWS_AS(algebra_from_json(duplicate), SchemaError);
}

TEST_CASE("partial table JSON round-trips") {
    PartialTable t = prop31_table();
    std::string text = partial_table_to_json(t);
    PartialTable back = partial_table_from_json(text);
    CHECK(back.dim == t.dim);
    CHECK(back.known == t.known);
    CHECK(back.unknown == t.unknown);
    CHECK(partial_table_to_json(back) == text);
}

TEST_CASE("certificate JSON carries the checkable combination") {
    NonexistenceReport rep = nonexistence_certificate(3);
    std::string text = certificate_to_json(rep, true);
    CHECK(text.find("\"infeasible\": true") != std::string::npos);
    CHECK(text.find("farkas") != std::string::npos);
}

TEST_CASE("save and load round-trip through a file") {
    Algebra a = build_family(FamilyId::A10, np(6, 3)); // symbolic delta_pm1
    std::string path = "io_roundtrip_tmp.json";
    save_algebra(path, a);
    Algebra back = load_algebra(path);
    CHECK(back == a);
    std::remove(path.c_str());
}

TEST_SUITE_END();
