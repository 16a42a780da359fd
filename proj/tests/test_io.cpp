#include <doctest.h>

#include "hmcat/io.hpp"
#include "hmcat/verify.hpp"

using namespace hmcat;

TEST_SUITE("io") {
  TEST_CASE("documents round trip") {
    for (const Fixture& fx : standard_fixtures()) {
      CAPTURE(fx.name);
      const Document d{fx.action.cat, fx.action.group, fx.action, std::nullopt, {}};
      const json j = document_to_json(d);
      const Document back = document_from_json(json::parse(j.dump()));
      CHECK(same_structure(*back.cat, *fx.action.cat));
      REQUIRE(back.action.has_value());
      CHECK(back.action->objects == fx.action.objects);
      CHECK(back.action->images == fx.action.images);
      CHECK(document_to_json(back) == j);
    }
  }

  TEST_CASE("gradings round trip") {
    const SkewResult s = skew_category(fix_sign().action);
    const Document d{s.cat, s.grading.group, std::nullopt, s.grading, {}};
    const Document back = document_from_json(document_to_json(d));
    REQUIRE(back.grading.has_value());
    CHECK(back.grading->degree == s.grading.degree);
  }

  TEST_CASE("coefficients survive a change of field") {
    // -1 is written as an integer, so the sign action still means t ↦ -t over F3.
    const Fixture sign = fix_sign();
    const json j = document_to_json({sign.action.cat, sign.action.group, sign.action, std::nullopt, {}});
    const Document d3 = document_from_json(j, Field::prime(3));
    CHECK(validate_action(*d3.action).empty());
    CHECK(d3.action->image(1, 1) == LinComb{{1, Scalar::from_int(Field::prime(3), -1)}});
  }

  TEST_CASE("rational coefficients") {
    const json j = json::parse(R"({
      "category": {"field": "Q", "objects": ["*"],
        "hom": [{"source": "*", "target": "*", "basis": ["1", "t"]}],
        "comp": [{"g": "1", "f": "1", "value": [["1", 1]]},
                 {"g": "1", "f": "t", "value": [["t", 1]]},
                 {"g": "t", "f": "1", "value": [["t", 1]]},
                 {"g": "t", "f": "t", "value": [["1", "1/4"]]}],
        "identities": {"*": [["1", 1]]}}})");
    const Document d = document_from_json(j);
    CHECK(d.cat->field().is_rational());
    CHECK(validate_category(*d.cat).empty());
    CHECK(document_to_json(d)["category"] == document_to_json(document_from_json(document_to_json(d)))["category"]);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(document_from_json(json::parse(R"({"category": {"field": 5}})")), InvalidInput);
    CHECK_THROWS_AS(document_from_json(json::parse(R"({"category": {"field": 6, "objects": [], "hom": []}})")),
                    InvalidInput);
    const json unknown = json::parse(R"({
      "category": {"field": 5, "objects": ["*"],
        "hom": [{"source": "*", "target": "*", "basis": ["1"]}],
        "comp": [{"g": "1", "f": "u", "value": [["1", 1]]}],
        "identities": {"*": [["1", 1]]}}})");
    CHECK_THROWS_AS(document_from_json(unknown), StructuralError);
    CHECK_THROWS_AS(load_document("/nonexistent/file.json"), InvalidInput);
  }

  TEST_CASE("cochains round trip") {
    const Fixture swap = fix_swap();
    const CochainComplex cc = cochain_complex(swap.action.cat, 2);
    const Field f = swap.action.cat->field();
    for (std::size_t n = 0; n <= 2; ++n) {
      SparseVector v;
      for (std::size_t i = 0; i < cc.cx.dims[n]; i += 2) v.emplace_back(i, Scalar::from_int(f, i + 1));
      normalize(v);
      const auto [m, back] = cochain_from_json(cc, cochain_to_json(cc, n, v));
      CHECK(m == n);
      CHECK(back == v);
    }
  }

  TEST_CASE("random instances are deterministic and valid") {
    const RandomInstance a = random_instance(11), b = random_instance(11);
    CHECK(document_to_json({a.action.cat, a.action.group, a.action, std::nullopt, {}}) ==
          document_to_json({b.action.cat, b.action.group, b.action, std::nullopt, {}}));
    CHECK(validate_category(*a.action.cat).empty());
    CHECK(validate_action(a.action).empty());
    CHECK(validate_grading(a.grading).empty());
  }
}
