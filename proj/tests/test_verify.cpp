#include <doctest.h>

#include "hmcat/verify.hpp"

using namespace hmcat;

namespace {

VerifyOptions degree(std::size_t n) {
  VerifyOptions o;
  o.max_degree = n;
  return o;
}

const ReportRow* find_row(const TheoremReport& r, const std::string& prefix) {
  for (const auto& row : r.rows)
    if (row.label.rfind(prefix, 0) == 0) return &row;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("verdict rules") {
    TheoremReport r;
    r.group_order_invertible = false;
    ReportRow plain;
    plain.label = "plain";
    plain.holds = true;
    ReportRow gated = plain;
    gated.label = "gated";
    gated.requires_exactness = true;
    gated.holds = false;
    r.rows = {plain, gated};
    r.finalize();
    CHECK(r.verdict == Verdict::hypothesis_not_met);
    CHECK(r.rows[1].skipped);

    r.group_order_invertible = true;
    r.finalize();
    CHECK(r.verdict == Verdict::failed);

    r.rows[1].holds = true;
    r.finalize();
    CHECK(r.verdict == Verdict::verified);

    r.rows[0].holds = false;
    r.group_order_invertible = false;
    r.finalize();
    CHECK(r.verdict == Verdict::failed);
    CHECK(verdict_name(Verdict::failed) == "FAILED");
  }

  TEST_CASE("every theorem verifies on every fixture over F5") {
    for (const Fixture& fx : standard_fixtures()) {
      const Document d{fx.action.cat, fx.action.group, fx.action, std::nullopt, {}};
      for (const TheoremReport& r : run_all(d, fx.name, degree(2))) {
        CAPTURE(fx.name);
        CAPTURE(r.theorem);
        CHECK(r.verdict == Verdict::verified);
      }
    }
  }

  TEST_CASE("routes and transversals are reported") {
    const TheoremReport free = verify_skew_homology(fix_swap().action, "FIX-SWAP", degree(2));
    CHECK(free.route == "direct");
    CHECK(free.transversal == std::vector<std::string>{"x"});
    const TheoremReport nonfree = verify_skew_cohomology(fix_sign().action, "FIX-SIGN", degree(2));
    CHECK(nonfree.route == "resolving");
    CHECK_FALSE(nonfree.free);
  }

  TEST_CASE("galois on the swap fixture in degree 0") {
    const TheoremReport r = verify_galois(fix_swap().action, "FIX-SWAP", degree(2));
    CHECK(r.verdict == Verdict::verified);
    CHECK_THROWS_AS(verify_galois(fix_sign().action, "FIX-SIGN", degree(2)), NonFreeAction);
  }

  TEST_CASE("skew group algebra of k under C2 and C3") {
    for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
      const AlgebraAction k = trivial_algebra_action(field_algebra(Field::prime(5)), g);
      CHECK(verify_skew_group_algebra(k, "k", degree(3)).verdict == Verdict::verified);
    }
  }

  TEST_CASE("trivial group degenerates") {
    const CatPtr c = fix_sign().action.cat;
    const GroupAction a = trivial_action(FiniteGroup::trivial(), c);
    CHECK(verify_skew_homology(a, "trivial", degree(2)).verdict == Verdict::verified);
    CHECK(verify_skew_cohomology(a, "trivial", degree(2)).verdict == Verdict::verified);
    CHECK(verify_galois(a, "trivial", degree(2)).verdict == Verdict::verified);
  }

  TEST_CASE("over F2 only exactness-conditioned rows lapse") {
    const Fixture swap = fix_swap(Field::prime(2));
    const TheoremReport r = verify_skew_homology(swap.action, "FIX-SWAP", degree(2));
    CHECK(r.verdict == Verdict::hypothesis_not_met);
    for (const auto& row : r.rows) {
      CAPTURE(row.label);
      CHECK(row.skipped == row.requires_exactness);
      if (!row.requires_exactness) CHECK(row.holds);
    }
    const ReportRow* main = find_row(r, "HH^{1}_n(C[G]) = H_n");
    REQUIRE(main != nullptr);
    CHECK(main->holds);
  }

  TEST_CASE("reports serialize") {
    const TheoremReport r = verify_skew_homology(fix_swap().action, "FIX-SWAP", degree(1));
    const json j = r.to_json();
    CHECK(j["verdict"] == "verified");
    CHECK(j["rows"].size() == r.rows.size());
    CHECK(r.to_table().find("verdict: verified") != std::string::npos);
  }

  TEST_CASE("run_theorem rejects what a document cannot support") {
    const Fixture sign = fix_sign();
    const Document bare{sign.action.cat, std::nullopt, std::nullopt, std::nullopt, {}};
    CHECK_THROWS_AS(run_theorem("skew-homology", bare, "bare"), InvalidInput);
    CHECK_THROWS_AS(run_theorem("graded-decomposition", bare, "bare"), InvalidInput);
    CHECK_THROWS_AS(run_theorem("no-such-theorem", bare, "bare"), InvalidInput);
  }

  TEST_CASE("random instances satisfy the skew theorems at low degree") {
    RandomOptions ro;
    ro.degree = 2;
    ro.budget = 20000;
    std::size_t nonfree = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const RandomInstance ri = random_instance(seed, ro);
      const std::string name = "seed " + std::to_string(seed);
      CAPTURE(seed);
      CHECK(verify_skew_homology(ri.action, name, degree(2)).verdict == Verdict::verified);
      CHECK(verify_skew_cohomology(ri.action, name, degree(2)).verdict == Verdict::verified);
      nonfree += orbits_transversal(ri.action).free ? 0 : 1;
    }
    CHECK(nonfree > 0);
    CHECK(nonfree < 25);
  }
}
