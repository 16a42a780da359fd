#include <algorithm>

#include <doctest.h>

#include "hmcat/cohomology.hpp"
#include "hmcat/fixtures.hpp"

using namespace hmcat;

namespace {

using Dims = std::vector<std::size_t>;

SparseVector basis(std::size_t i, Field f) { return {{i, Scalar::one(f)}}; }

SparseVector apply_d(const CochainComplex& cc, std::size_t n, const SparseVector& v) {
  return cc.cx.d[n].apply(v);
}

SparseVector sum(SparseVector a, const SparseVector& b, const Scalar& c) {
  axpy(a, c, b);
  return a;
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("cochains of a point") {
    CochainComplex cc = cochain_complex(single_object_category(field_algebra(Field::prime(5))), 3);
    CHECK(cc.cx.dims == Dims{1, 1, 1, 1, 1});
    CHECK(homology(cc.cx, 3).dims == Dims{1, 0, 0, 0});
  }

  TEST_CASE("cochain space dimensions") {
    CHECK(cochain_complex(fix_swap().action.cat, 1).cx.dims[0] == 2);
    CHECK(cochain_complex(fix_swap().action.cat, 1).cx.dims[1] == 4);
    CHECK(cochain_complex(fix_sign().action.cat, 1).cx.dims[0] == 2);
    CHECK(cochain_complex(fix_sign().action.cat, 1).cx.dims[1] == 4);
  }

  TEST_CASE("center") {
    // a : x -> y forces λ = μ on a family (λ 1x, μ 1y).
    CHECK(center(cochain_complex(fix_swap().action.cat, 0)).dim() == 1);
    CHECK(center(cochain_complex(fix_sign().action.cat, 0)).dim() == 2);
    const Field f = Field::prime(5);
    CHECK(center(cochain_complex(single_object_category(matrix_algebra(2, f)), 0)).dim() == 1);
    CHECK(center(cochain_complex(single_object_category(group_algebra(FiniteGroup::symmetric3(), f)), 0)).dim() == 3);
    CochainComplex swap = cochain_complex(fix_swap().action.cat, 1);
    CHECK(homology(swap.cx, 0).dims[0] == 1);
  }

  TEST_CASE("cup unit, associativity and Leibniz") {
    for (const Fixture& fx : {fix_swap(), fix_sign()}) {
      CAPTURE(fx.name);
      const Field f = fx.action.cat->field();
      CochainComplex cc = cochain_complex(fx.action.cat, 3);
      const SparseVector u = unit_cochain(cc);
      CHECK(apply_d(cc, 0, u).empty());
      for (std::size_t m = 0; m <= 1; ++m)
        for (std::size_t i = 0; i < cc.cx.dims[m]; ++i) {
          const SparseVector psi = basis(i, f);
          CHECK(cup(cc, 0, u, m, psi) == psi);
          CHECK(cup(cc, m, psi, 0, u) == psi);
          for (std::size_t n = 0; m + n <= 2; ++n)
            for (std::size_t j = 0; j < cc.cx.dims[n]; ++j) {
              const SparseVector phi = basis(j, f);
              const SparseVector lhs = apply_d(cc, m + n, cup(cc, m, psi, n, phi));
              const Scalar sign = m % 2 ? -Scalar::one(f) : Scalar::one(f);
              const SparseVector rhs =
                  sum(cup(cc, m + 1, apply_d(cc, m, psi), n, phi), cup(cc, m, psi, n + 1, apply_d(cc, n, phi)), sign);
              CHECK(lhs == rhs);
              for (std::size_t k = 0; k < cc.cx.dims[1]; k += 3) {
                const SparseVector chi = basis(k, f);
                CHECK(cup(cc, m + n, cup(cc, m, psi, n, phi), 1, chi) ==
                      cup(cc, m, psi, n + 1, cup(cc, n, phi, 1, chi)));
              }
            }
        }
    }
  }

  TEST_CASE("degree-1 cochains on a point multiply as scalars") {
    const Field f = Field::prime(5);
    CochainComplex cc = cochain_complex(single_object_category(field_algebra(f)), 2);
    const SparseVector a = {{0, Scalar::from_int(f, 2)}}, b = {{0, Scalar::from_int(f, 3)}};
    CHECK(cup(cc, 1, a, 1, b) == SparseVector{{0, Scalar::from_int(f, 6)}});
  }

  TEST_CASE("cup of blocks with mismatched endpoints vanishes") {
    const Fixture swap = fix_swap();
    const Field f = swap.action.cat->field();
    CochainComplex cc = cochain_complex(swap.action.cat, 1);
    // families concentrated at x and at y
    const std::size_t px = *cc.find_path(0, {0, {}}), py = *cc.find_path(0, {1, {}});
    const SparseVector at_x = basis(cc.element(0, px, 0), f), at_y = basis(cc.element(0, py, 1), f);
    CHECK(cup(cc, 0, at_x, 0, at_y).empty());
    CHECK(cup(cc, 0, at_x, 0, at_x) == at_x);
  }

  TEST_CASE("group actions on cochains") {
    for (const Fixture& fx : {fix_swap(), fix_sign()}) {
      CAPTURE(fx.name);
      CochainComplex cc = cochain_complex(fx.action.cat, 2);
      attach_g_action_cochains(cc, fx.action);
      CHECK(equivariance_failures(cc.cx).empty());
      CHECK(cup_equivariance_failures(cc).empty());
      const InvariantComplex inv = invariant_complex(cc.cx);
      CHECK(inv.cx.dims[0] == 1);
      CHECK(dd_failures(inv.cx).empty());
    }
    const CatPtr c = fix_sign().action.cat;
    CochainComplex cc = cochain_complex(c, 2);
    attach_g_action_cochains(cc, trivial_action(FiniteGroup::cyclic(2), c));
    CHECK(invariant_complex(cc.cx).cx.dims == cc.cx.dims);
  }

  TEST_CASE("class of a cochain type") {
    // kC2, degree 1: four type blocks, two in each class
    const Grading kc2 = skew_category(fix_triv().action).grading;
    CochainComplex cc = cochain_complex(kc2.cat, 2);
    class_decomposition_cochains(cc, kc2, conjugacy_classes(kc2.group));
    CHECK(cross_class_failures(cc.cx).empty());
    CHECK(cup_class_failures(cc).empty());
    CHECK(std::count(cc.cx.cls[1].begin(), cc.cx.cls[1].end(), 0u) == 2);

    // A degree-0 cochain valued in degree g lies in the class of g⁻¹.
    const Fixture triv3{"C3", trivial_action(FiniteGroup::cyclic(3), fix_triv().action.cat)};
    const SkewResult s = skew_category(triv3.action);
    CochainComplex c3 = cochain_complex(s.cat, 1);
    const ConjClasses cl = conjugacy_classes(s.grading.group);
    class_decomposition_cochains(c3, s.grading, cl);
    for (std::size_t h = 0; h < s.cat->dim(); ++h) {
      const std::size_t g = s.grading.degree[h];
      CHECK(c3.cx.cls[0][c3.element(0, 0, h)] == cl.class_of[s.grading.group.inverse(g)]);
    }
  }

  TEST_CASE("per-class dimensions sum to the total") {
    const Fixture swap = fix_swap();
    const QuotientResult q = quotient_category(swap.action, orbits_transversal(swap.action));
    CochainComplex cc = cochain_complex(q.cat, 3);
    class_decomposition_cochains(cc, q.grading, conjugacy_classes(q.grading.group));
    const HomologyResult h = homology(cc.cx, 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(h.by_class[0][n] + h.by_class[1][n] == h.dims[n]);
    // degree 0: the unit is in class {1}, t in class {s}
    CHECK(h.by_class[0][0] == 1);
    CHECK(h.by_class[1][0] == 1);
  }

  TEST_CASE("transport along the identity is the identity") {
    const CatPtr c = fix_swap().action.cat;
    std::vector<LinComb> images;
    for (std::size_t i = 0; i < c->dim(); ++i) images.push_back(basis(i, c->field()));
    const LinFunctor id(c, c, {0, 1}, images);
    CochainComplex a = cochain_complex(c, 2), b = cochain_complex(c, 2);
    const Transport t = transport_cochains(id, a, b);
    CHECK(t.ok());
    for (std::size_t n = 0; n <= 2; ++n) CHECK(t.map[n] == SparseMatrix::identity(c->field(), a.cx.dims[n]));
  }

  TEST_CASE("transport along L and along C_T[G] ⊂ C[G]") {
    const Fixture sign = fix_sign();
    const ResolvingResult m = resolving_category(sign.action);
    CochainComplex src = cochain_complex(m.cat, 3), dst = cochain_complex(sign.action.cat, 3);
    attach_g_action_cochains(src, m.action);
    attach_g_action_cochains(dst, sign.action);
    CHECK(transport_cochains(m.L, src, dst).ok());
    CHECK(homology(src.cx, 3).dims == homology(dst.cx, 3).dims);

    const Fixture swap = fix_swap();
    const SkewResult sk = skew_category(swap.action);
    const TransversalResult tr = transversal_subcategory(sk, swap.action, orbits_transversal(swap.action));
    CochainComplex sub = cochain_complex(tr.cat, 3), full = cochain_complex(sk.cat, 3);
    class_decomposition_cochains(sub, tr.grading, conjugacy_classes(tr.grading.group));
    class_decomposition_cochains(full, sk.grading, conjugacy_classes(sk.grading.group));
    CHECK(transport_cochains(tr.inclusion, sub, full).ok());
    CHECK(homology(sub.cx, 3).by_class == homology(full.cx, 3).by_class);
  }

  TEST_CASE("transport needs a full and faithful functor") {
    const Fixture swap = fix_swap();
    const QuotientResult q = quotient_category(swap.action, orbits_transversal(swap.action));
    CochainComplex src = cochain_complex(swap.action.cat, 1), dst = cochain_complex(q.cat, 1);
    CHECK_THROWS_AS(transport_cochains(q.projection, src, dst), InvalidInput);
  }

  TEST_CASE("cohomology transfer on the swap fixture") {
    const Fixture swap = fix_swap();
    const CohomologyTransfer tr = transfer_maps_cohomology(swap.action, orbits_transversal(swap.action), 3);
    CHECK(tr.ok());
    CHECK(tr.cup_pairs_checked > 0);
    CHECK(homology(tr.source.cx, 3).dims == homology(tr.target, 3).dims);
  }
}
