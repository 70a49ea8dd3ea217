#include <doctest.h>

#include "splitcycle/errors.hpp"
#include "splitcycle/witness.hpp"

using namespace splitcycle;

TEST_CASE("every built-in case passes") {
    const auto& names = builtin_witness_names();
    CHECK(names.size() == 7);
    for (const auto& n : names) {
        CAPTURE(n);
        const auto report = verify_witness(builtin_witness(n));
        CHECK(report.pass);
        CHECK_FALSE(report.results.empty());
        for (const auto& r : report.results) {
            CAPTURE(r.label);
            CAPTURE(r.detail);
            CHECK(r.pass);
        }
        CHECK(report_json(report)["status"] == "pass");
    }
    CHECK_THROWS_AS(builtin_witness("no_such_case"), Error);
}

TEST_CASE("a wrong expectation fails") {
    const auto w = parse_witness(R"({
      "name": "wrong",
      "method": "split_cycle",
      "profiles": {"Q": "candidates: a b c\n4: a > b > c\n2: b > c > a\n3: c > a > b\n"},
      "expectations": [
        {"kind": "defeats", "profile": "Q", "from": "a", "to": "b"},
        {"kind": "defeats", "profile": "Q", "from": "c", "to": "a"},
        {"kind": "undefeated", "profile": "Q", "expect": ["a"]},
        {"kind": "scores", "method": "hare", "profile": "Q", "expect": {"a": 1, "b": 0, "c": 2}}
      ]})");
    const auto report = verify_witness(w);
    CHECK_FALSE(report.pass);
    REQUIRE(report.results.size() == 4);
    CHECK(report.results[0].pass);
    CHECK_FALSE(report.results[1].pass);
    CHECK(report.results[2].pass);
    CHECK(report.results[3].pass);
    CHECK(report_json(report)["status"] == "fail");
}

TEST_CASE("malformed witness files are rejected") {
    CHECK_THROWS_AS(parse_witness("{"), Error);
    CHECK_THROWS_AS(parse_witness(R"({"name": "x", "profiles": {}, "expectations": [{"kind": "nope"}]})"), Error);
    CHECK_THROWS_AS(parse_witness(R"({"name": "x", "profiles": {"P": "candidates: a\n0: a"}, "expectations": []})"),
                    Error);
    const auto w = parse_witness(R"({"name": "x", "method": "split_cycle", "profiles": {},
                                     "expectations": [{"kind": "undefeated", "profile": "missing", "expect": []}]})");
    const auto report = verify_witness(w);
    CHECK_FALSE(report.pass);
}
