#include <algorithm>

#include <doctest.h>

#include "hmcat/fixtures.hpp"
#include "hmcat/homology.hpp"

using namespace hmcat;

namespace {

using Dims = std::vector<std::size_t>;

Dims hh(CatPtr c, std::size_t N = 3) {
  ChainComplex cc = bar_complex(std::move(c), N);
  return homology(cc.cx, N).dims;
}

std::vector<Dims> hh_classes(const Grading& gr, std::size_t N = 3) {
  ChainComplex cc = bar_complex(gr.cat, N);
  class_decomposition(cc, gr, conjugacy_classes(gr.group));
  return homology(cc.cx, N).by_class;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("bar complex of a point") {
    const CatPtr k = single_object_category(field_algebra(Field::prime(5)));
    ChainComplex cc = bar_complex(k, 3);
    CHECK(cc.cx.dims == Dims{1, 1, 1, 1, 1});
    CHECK(dd_failures(cc.cx).empty());
    CHECK(homology(cc.cx, 3).dims == Dims{1, 0, 0, 0});
  }

  TEST_CASE("swap fixture: d1 = 0 and H0 = 2") {
    ChainComplex cc = bar_complex(fix_swap().action.cat, 1);
    CHECK(cc.cx.dims[0] == 2);
    CHECK(cc.cx.dims[1] == 4);
    CHECK(cc.cx.d[1].is_zero());
    CHECK(homology(cc.cx, 1).dims[0] == 2);
    CHECK(hh(fix_swap().action.cat) == Dims{2, 1, 1, 1});
  }

  TEST_CASE("chain spaces of the sign fixture have dimension 2^(n+1)") {
    ChainComplex cc = bar_complex(fix_sign().action.cat, 2);
    CHECK(cc.cx.dims == Dims{2, 4, 8, 16});
  }

  TEST_CASE("d∘d = 0 on every fixture and derivative") {
    for (const Fixture& fx : standard_fixtures()) {
      CAPTURE(fx.name);
      const GroupAction& a = fx.action;
      std::vector<CatPtr> cats{a.cat, skew_category(a).cat, resolving_category(a).cat};
      const OrbitData o = orbits_transversal(a);
      if (o.free) cats.push_back(quotient_category(a, o).cat);
      for (const CatPtr& c : cats) CHECK(dd_failures(bar_complex(c, 3).cx).empty());
    }
  }

  TEST_CASE("group actions on chains") {
    const Fixture swap = fix_swap();
    ChainComplex cc = bar_complex(swap.action.cat, 2);
    attach_g_action(cc, swap.action);
    CHECK(equivariance_failures(cc.cx).empty());
    // b⊗a ↦ a⊗b
    const LinCat& c = *swap.action.cat;
    const std::size_t a = *c.basis_index("a"), b = *c.basis_index("b");
    const auto ba = cc.find({a, b}), ab = cc.find({b, a});
    REQUIRE(ba.has_value());
    REQUIRE(ab.has_value());
    CHECK(cc.cx.action[1][1].column(*ba) == SparseVector{{*ab, Scalar::one(c.field())}});
    CHECK(coinvariant_complex(cc.cx).cx.dims[0] == 1);
  }

  TEST_CASE("sign action flips the sign per t factor") {
    const Fixture sign = fix_sign();
    ChainComplex cc = bar_complex(sign.action.cat, 1);
    attach_g_action(cc, sign.action);
    const Field f = sign.action.cat->field();
    const std::size_t one = 0, t = 1;
    CHECK(cc.cx.action[1][1].column(*cc.find({one, one})) == SparseVector{{*cc.find({one, one}), Scalar::one(f)}});
    CHECK(cc.cx.action[1][1].column(*cc.find({t, one})) == SparseVector{{*cc.find({t, one}), -Scalar::one(f)}});
    CHECK(cc.cx.action[1][1].column(*cc.find({t, t})) == SparseVector{{*cc.find({t, t}), Scalar::one(f)}});
    CHECK(coinvariant_complex(cc.cx).cx.dims[0] == 1);
  }

  TEST_CASE("trivial action leaves the complex unchanged") {
    const CatPtr c = fix_sign().action.cat;
    ChainComplex cc = bar_complex(c, 2);
    attach_g_action(cc, trivial_action(FiniteGroup::cyclic(2), c));
    CHECK(coinvariant_complex(cc.cx).cx.dims == cc.cx.dims);
  }

  TEST_CASE("class blocks of the quotient and of kC2") {
    const Fixture swap = fix_swap();
    const QuotientResult q = quotient_category(swap.action, orbits_transversal(swap.action));
    ChainComplex cc = bar_complex(q.cat, 3);
    class_decomposition(cc, q.grading, conjugacy_classes(q.grading.group));
    CHECK(cross_class_failures(cc.cx).empty());
    std::vector<std::size_t> deg0 = cc.cx.cls[0];
    std::sort(deg0.begin(), deg0.end());
    CHECK(deg0 == std::vector<std::size_t>{0, 1});

    const Grading kc2 = skew_category(fix_triv().action).grading;
    ChainComplex t = bar_complex(kc2.cat, 2);
    class_decomposition(t, kc2, conjugacy_classes(kc2.group));
    CHECK(std::count(t.cx.cls[1].begin(), t.cx.cls[1].end(), 0u) == 2);
    CHECK(std::count(t.cx.cls[1].begin(), t.cx.cls[1].end(), 1u) == 2);
  }

  TEST_CASE("class dimensions sum to the total") {
    const Fixture swap = fix_swap();
    const Grading gr = skew_category(swap.action).grading;
    const auto by = hh_classes(gr);
    const Dims total = hh(gr.cat);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(by[0][n] + by[1][n] == total[n]);
    const Grading one = trivial_grading(FiniteGroup::trivial(), fix_sign().action.cat);
    CHECK(hh_classes(one) == std::vector<Dims>{hh(one.cat)});
  }

  TEST_CASE("class dimensions do not depend on the transversal") {
    const Fixture swap = fix_swap();
    const auto qx = quotient_category(swap.action, orbits_transversal(swap.action, {0}));
    const auto qy = quotient_category(swap.action, orbits_transversal(swap.action, {1}));
    CHECK(hh_classes(qx.grading) == hh_classes(qy.grading));
  }

  TEST_CASE("transfer maps on the swap fixture") {
    const Fixture swap = fix_swap();
    for (std::size_t t : {0u, 1u}) {
      const HomologyTransfer tr = transfer_maps_homology(swap.action, orbits_transversal(swap.action, {t}), 3);
      CHECK(tr.ok());
      CHECK(tr.source.cx.dims[0] == 1);
      CHECK(homology(tr.source.cx, 3).dims == homology(tr.target, 3).dims);
    }
  }

  TEST_CASE("transfer maps for the trivial group are identities") {
    const CatPtr c = fix_sign().action.cat;
    const GroupAction a = trivial_action(FiniteGroup::trivial(), c);
    const HomologyTransfer tr = transfer_maps_homology(a, orbits_transversal(a), 2);
    CHECK(tr.ok());
    for (std::size_t n = 0; n <= 2; ++n) CHECK(tr.A[n] == SparseMatrix::identity(c->field(), tr.A[n].rows()));
  }

  TEST_CASE("transfer needs a free action") {
    const Fixture sign = fix_sign();
    CHECK_THROWS_AS(transfer_maps_homology(sign.action, orbits_transversal(sign.action), 2), NonFreeAction);
  }

  TEST_CASE("functor chain map of L") {
    const Fixture sign = fix_sign();
    const ResolvingResult m = resolving_category(sign.action);
    ChainComplex src = bar_complex(m.cat, 3), dst = bar_complex(sign.action.cat, 3);
    const ComplexMap f = functor_chain_map(m.L, src, dst);
    CHECK(chain_map_failures(f, src.cx, dst.cx, 3).empty());
    CHECK(homology(src.cx, 3).dims == homology(dst.cx, 3).dims);
  }

  TEST_CASE("size limits are enforced") {
    BuildLimits tight;
    tight.max_dim = 10;
    CHECK_THROWS_AS(bar_complex(fix_sign().action.cat, 3, tight), ResourceError);
  }
}
