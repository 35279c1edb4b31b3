#include <doctest.h>

#include "weil/document.hpp"
#include "weil/ring_ops.hpp"
#include "weil/suite.hpp"

using namespace weil;

TEST_SUITE("document") {
  TEST_CASE("algebra references") {
    CHECK(builtin_algebra("D(2)").dimension() == 3);
    CHECK(builtin_algebra("D^3").dimension() == 8);
    CHECK(builtin_algebra("R^2 x D").to_string() == "k[Z1,Z2,X]/(X^2)");
    CHECK(builtin_algebra("D (x) D").dimension() == 4);
    CHECK(builtin_algebra("k").is_ground());
    CHECK_THROWS_AS(builtin_algebra("Q"), unknown_name);
  }

  TEST_CASE("named objects") {
    const document doc = document::parse(R"({
      "version": 1,
      "algebras": {"A": {"generators": ["X", "Y"], "relations": [{"X": 2}, "X*Y", "Y^2"]},
                   "B": "A (x) D"},
      "homs": {"h": {"source": "D", "target": "A", "images": {"X": "X - Y"}}},
      "smooth_maps": {"f": {"dim": 2, "components": ["u*v"], "variables": ["u", "v"]}},
      "points": {"p": {"algebra": "A", "coords": ["1 + X", "Y"]}},
      "fields": {"w": {"degree": 2, "dim": 3, "coefficients": {"2,1": "z"}}},
      "forms": {"q": {"degree": 1, "dim": 1, "components": ["c0_x*c1_x"]}}
    })");
    CHECK(doc.algebra_named("A").dimension() == 3);
    CHECK(doc.algebra_named("B").dimension() == 6);
    CHECK(doc.hom("h").images()[0] == parse_element(doc.algebra_named("A"), "X - Y"));
    CHECK(doc.smooth("f")({2, 3}) == std::vector<rational>{6});
    CHECK(doc.point("p").dim() == 2);
    CHECK(doc.field("w").to_string() == "(-z) dx^dy");
    CHECK(doc.form("q").n == 1);
    CHECK(doc.names("homs") == std::vector<std::string>{"h"});
  }

  TEST_CASE("positioned diagnostics") {
    try {
      document::parse("{\n  \"version\": 1,\n  \"homs\": [\n}");
      FAIL("parsed");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("line 4, column 1") != std::string::npos);
    }
    try {
      document::parse(R"({"version": 1, "fields": {"w": {"degree": 1, "dim": 2, "coefficients": {"1": "x +* y"}}}})").field("w");
      FAIL("parsed");
    } catch (const document_error& e) {
      CHECK(e.path() == "/fields/w/coefficients/1");
      CHECK(std::string(e.what()).find("column 4") != std::string::npos);
    }
    CHECK_THROWS_AS(document::parse(R"({"version": 2})"), document_error);
    CHECK_THROWS_AS(document::parse(R"({"version": 1, "algebras": {"A": {"generators": ["X"]}}})"), document_error);
  }

  TEST_CASE("an invalid hom loads and fails on use") {
    const document doc = document::parse(R"({"version": 1, "homs": {"bad": {"source": "D", "target": "D", "images": ["X + 1"]}}})");
    CHECK_THROWS_AS(doc.hom("bad"), relation_violated);
    const report r = suite::document_checks(doc, 1, 5);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->id == "hom.bad.relations");
    CHECK(r.first_failure()->witness->find("X^2") != std::string::npos);
  }

  TEST_CASE("the built-in document passes its checks") {
    const report r = suite::document_checks(suite::default_document(), 3, 10);
    CHECK(r.all_passed());
    CHECK(r.entries().size() > 10);
  }
}
