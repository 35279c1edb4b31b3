#include <doctest.h>

#include <json.hpp>

#include "weil/report.hpp"

using namespace weil;

TEST_SUITE("report") {
  TEST_CASE("json schema") {
    report r("demo", 42);
    r.add("a", "law/one", "instance 1", true);
    r.add("b", "law/two", "instance 2", false, "x = 3");
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["suite"] == "demo");
    CHECK(j["seed"] == 42);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["id"] == "a");
    CHECK(j["entries"][0]["pass"] == true);
    CHECK_FALSE(j["entries"][0].contains("witness"));
    CHECK(j["entries"][1]["anchor"] == "law/two");
    CHECK(j["entries"][1]["witness"] == "x = 3");
    CHECK(j["passed"] == 1);
    CHECK(j["failed"] == 1);
  }

  TEST_CASE("merge prefixes ids and keeps order") {
    report a("outer", 1), b("inner", 2);
    b.add("x", "l", "i", true);
    b.add("y", "l", "i", false, "w");
    a.add("first", "l", "i", true);
    a.merge(b, "g.");
    CHECK(a.entries()[1].id == "g.x");
    CHECK(a.entries()[2].id == "g.y");
    CHECK(a.first_failure()->id == "g.y");
    CHECK(a.to_json() == a.to_json());
  }

  TEST_CASE("law keeps the first witness") {
    report r("s", 0);
    {
      law l(r, "id", "anchor", "instance");
      l.expect(true, [] { return std::string("never"); });
      l.expect(false, [] { return std::string("first"); });
      l.expect(false, [] { return std::string("second"); });
      CHECK_FALSE(l.ok());
    }
    CHECK(r.entries().size() == 1);
    CHECK(*r.entries()[0].witness == "first");
    CHECK(r.to_text().find("FAIL  id") != std::string::npos);
  }
}
