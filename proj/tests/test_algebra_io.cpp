#include "doctest.h"

#include <stdexcept>

#include "g2flat/algebra_io.hpp"
#include "g2flat/catalog.hpp"
#include "g2flat/rng.hpp"

using namespace g2flat;

TEST_CASE("rational text parsing") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-7/2") == Rat(-7) / 2);
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("4/6") == Rat(2) / 3);
    CHECK(parse_rational("007") == Rat(7));

    for (const char* bad : {"", "1/0", "1/-2", "1.5", "a", "--3", "3/", "/2", " 3",
                            "3 ", "1e2", "+3", "2/-1/3"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("rational text rendering round-trips") {
    CHECK(rational_text(Rat(3)) == "3");
    CHECK(rational_text(Rat(-7) / 2) == "-7/2");
    CHECK(rational_text(Rat(4) / 6) == "2/3");
    CHECK(rational_text(Rat(0)) == "0");

    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        Rat x = Rat(rng.uniform(-40, 40), rng.uniform(1, 23));
        CHECK(parse_rational(rational_text(x)) == x);
    }
}

TEST_CASE("catalog candidates round-trip through the document format") {
    for (const auto& entry : seven_dim_candidates()) {
        std::string doc = serialize_algebra(entry.name, entry.value);
        CatalogEntry back = parse_algebra_file(doc);
        CHECK(back.name == entry.name);
        CHECK(back.value.algebra() == entry.value.algebra());
        CHECK(back.value.form() == entry.value.form());
        // canonical form: a second serialization is byte-identical
        CHECK(serialize_algebra(back.name, back.value) == doc);
    }
}

TEST_CASE("base six-dimensional algebra survives a round-trip") {
    MetricLieAlgebra m = make_nII();
    CatalogEntry back = parse_algebra_file(serialize_algebra("base", m));
    CHECK(back.value.algebra() == m.algebra());
    CHECK(back.value.form() == m.form());
}

TEST_CASE("hand-written abelian document") {
    const char* doc = R"({
      "name": "flat3",
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "brackets": [],
      "metric": [
        {"x": "e1", "y": "e1", "value": "1"},
        {"x": "e2", "y": "e2", "value": "1"},
        {"x": "e3", "y": "e3", "value": "-1"}
      ]
    })";
    CatalogEntry entry = parse_algebra_file(doc);
    CHECK(entry.name == "flat3");
    CHECK(entry.value.algebra().is_abelian());
    CHECK(entry.value.form_signature() == Signature{2, 1, 0});
}

TEST_CASE("reversed bracket listings are normalized with a sign") {
    const char* doc = R"({
      "name": "so3",
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "brackets": [
        {"x": "e2", "y": "e1", "value": {"e3": "-1"}},
        {"x": "e1", "y": "e3", "value": {"e2": "-1"}},
        {"x": "e2", "y": "e3", "value": {"e1": "1"}}
      ],
      "metric": [
        {"x": "e1", "y": "e1", "value": "1"},
        {"x": "e2", "y": "e2", "value": "1"},
        {"x": "e3", "y": "e3", "value": "1"}
      ]
    })";
    CatalogEntry entry = parse_algebra_file(doc);
    // [e2,e1] = -e3 was listed, so [e1,e2] = e3
    Vec expected(3);
    expected[2] = 1;
    CHECK(entry.value.algebra().basis_bracket(0, 1) == expected);
}

TEST_CASE("metric entries are symmetric-completed") {
    const char* doc = R"({
      "name": "hyperbolic",
      "dim": 2,
      "basis": ["e1", "e2"],
      "brackets": [],
      "metric": [{"x": "e2", "y": "e1", "value": "1"}]
    })";
    CatalogEntry entry = parse_algebra_file(doc);
    CHECK(entry.value.form()(0, 1) == 1);
    CHECK(entry.value.form()(1, 0) == 1);
    CHECK(entry.value.form_signature() == Signature{1, 1, 0});
}

TEST_CASE("validation failures name the offending data") {
    // invariance cannot hold: <[a1,a2],z3> = 1 but the identity form makes
    // every bracket-compatible pairing vanish
    const char* bad_metric = R"({
      "name": "bad",
      "dim": 3,
      "basis": ["a1", "a2", "z3"],
      "brackets": [{"x": "a1", "y": "a2", "value": {"z3": "1"}}],
      "metric": [
        {"x": "a1", "y": "a1", "value": "1"},
        {"x": "a2", "y": "a2", "value": "1"},
        {"x": "z3", "y": "z3", "value": "1"}
      ]
    })";
    try {
        parse_algebra_file(bad_metric);
        FAIL("expected a validation error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("a1") != std::string::npos);
        CHECK(msg.find("z3") != std::string::npos);
    }
}

TEST_CASE("malformed documents are rejected with a reason") {
    CHECK_THROWS_AS(parse_algebra_file("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_file("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra_file(R"({"name":"x"})"), std::invalid_argument);

    // basis size mismatch
    CHECK_THROWS_AS(
        parse_algebra_file(R"({"name":"x","dim":2,"basis":["e1"],"metric":[]})"),
        std::invalid_argument);
    // duplicate basis label
    CHECK_THROWS_AS(
        parse_algebra_file(R"({"name":"x","dim":2,"basis":["e1","e1"],"metric":[]})"),
        std::invalid_argument);

    auto with_bracket = [](const char* bracket) {
        return std::string(R"({"name":"x","dim":2,"basis":["e1","e2"],"brackets":[)") +
               bracket +
               R"(],"metric":[{"x":"e1","y":"e1","value":"1"},
                              {"x":"e2","y":"e2","value":"1"}]})";
    };
    // unknown label
    CHECK_THROWS_AS(
        parse_algebra_file(with_bracket(R"({"x":"e1","y":"zz","value":{}})")),
        std::invalid_argument);
    // self-bracket
    CHECK_THROWS_AS(
        parse_algebra_file(with_bracket(R"({"x":"e1","y":"e1","value":{}})")),
        std::invalid_argument);
    // duplicate pair
    CHECK_THROWS_AS(parse_algebra_file(with_bracket(
                        R"({"x":"e1","y":"e2","value":{}},
                            {"x":"e2","y":"e1","value":{}})")),
                    std::invalid_argument);
}
