#include <doctest.h>

#include "hmcat/fixtures.hpp"

using namespace hmcat;

TEST_SUITE("lincat-group") {
  TEST_CASE("fixtures satisfy the category and action axioms") {
    for (const Fixture& fx : standard_fixtures()) {
      CAPTURE(fx.name);
      CHECK(validate_category(*fx.action.cat).empty());
      CHECK(validate_action(fx.action).empty());
    }
  }

  TEST_CASE("axiom violations are reported, not thrown") {
    LinCat c(Field::prime(5), {"*"});
    const auto one = c.add_basis("1", 0, 0), t = c.add_basis("t", 0, 0);
    const Field f = c.field();
    c.set_identity(0, {{one, Scalar::one(f)}});
    c.set_comp(one, one, {{one, Scalar::one(f)}});
    c.set_comp(one, t, {{t, Scalar::one(f)}});
    c.set_comp(t, one, {{t, Scalar::one(f)}});
    c.set_comp(t, t, {{one, Scalar::one(f)}});
    CHECK(validate_category(c).empty());
    c.set_comp(one, t, {{one, Scalar::one(f)}});
    CHECK_FALSE(validate_category(c).empty());
  }

  TEST_CASE("composition must respect sources and targets") {
    LinCat c(Field::prime(5), {"x", "y"});
    const auto a = c.add_basis("a", 0, 1);
    CHECK_THROWS_AS(c.set_comp(a, a, {{a, Scalar::one(c.field())}}), StructuralError);
  }

  TEST_CASE("conjugacy classes of S3") {
    const ConjClasses cl = conjugacy_classes(FiniteGroup::symmetric3());
    std::vector<std::size_t> sizes;
    for (const auto& k : cl.classes) sizes.push_back(k.size());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
    CHECK(cl.class_of[FiniteGroup::identity()] == 0);
    CHECK(conjugacy_classes(FiniteGroup::cyclic(3)).size() == 3);
  }

  TEST_CASE("group tables are checked") {
    CHECK_THROWS_AS(FiniteGroup({"1", "a"}, {{0, 1}, {1, 1}}), InvalidInput);
    const FiniteGroup c4 = FiniteGroup::cyclic(4);
    CHECK(c4.mul(1, 3) == 0);
    CHECK(c4.inverse(1) == 3);
  }

  TEST_CASE("orbits and transversals") {
    const Fixture swap = fix_swap();
    const OrbitData o = orbits_transversal(swap.action);
    CHECK(o.free);
    CHECK(o.orbits.size() == 1);
    CHECK(o.transversal == std::vector<std::size_t>{0});
    const OrbitData p = orbits_transversal(swap.action, {1});
    CHECK(p.transversal == std::vector<std::size_t>{1});
    CHECK(p.witness[0] == 1);
    CHECK_FALSE(orbits_transversal(fix_sign().action).free);
  }

  TEST_CASE("coinvariants and invariants of the sign representation") {
    for (std::uint32_t p : {2u, 5u}) {
      const Field f = Field::prime(p);
      const Representation sign{FiniteGroup::cyclic(2),
                                {SparseMatrix::identity(f, 1), SparseMatrix::from_dense(f, {{-1}})}};
      check_representation(sign);
      const std::size_t expected = p == 2 ? 1 : 0;
      CHECK(coinvariants(sign).dim() == expected);
      const InvariantResult inv = invariants(sign);
      CHECK(inv.space.dim() == expected);
      CHECK(inv.averaging_checked == (p != 2));
    }
  }

  TEST_CASE("non-representations are rejected") {
    const Field f = Field::prime(5);
    const Representation bad{FiniteGroup::cyclic(2),
                             {SparseMatrix::identity(f, 1), SparseMatrix::from_dense(f, {{2}})}};
    CHECK_THROWS_AS(check_representation(bad), InvalidInput);
  }

  TEST_CASE("a non-functorial action is reported") {
    GroupAction a = fix_swap().action;
    a.images[1][2] = scaled(a.images[1][2], Scalar::from_int(a.cat->field(), 2));
    CHECK_FALSE(validate_action(a).empty());
  }

  TEST_CASE("total algebra and tensor products") {
    const Fixture swap = fix_swap();
    const AlgebraView t = total_algebra(*swap.action.cat);
    CHECK(t.dim == 4);
    CHECK(t.validate().empty());
    const CatPtr sq = tensor_product(*swap.action.cat, *swap.action.cat);
    CHECK(sq->num_objects() == 4);
    CHECK(validate_category(*sq).empty());
    CHECK(validate_action(tensor_action(swap.action, swap.action, sq)).empty());
    CHECK(matrix_algebra(2, Field::prime(5)).validate().empty());
    CHECK(group_algebra(FiniteGroup::symmetric3(), Field::prime(5)).validate().empty());
  }
}

TEST_SUITE("lincat-group") {
  TEST_CASE("redefining ba as 1_x breaks the swap category") {
    const Fixture swap = fix_swap();
    const LinCat& src = *swap.action.cat;
    LinCat c(src.field(), src.objects());
    for (std::size_t i = 0; i < src.dim(); ++i) c.add_basis(src.basis(i).label, src.basis(i).source, src.basis(i).target);
    for (std::size_t g = 0; g < src.dim(); ++g)
      for (std::size_t f = 0; f < src.dim(); ++f)
        if (src.basis(g).source == src.basis(f).target) c.set_comp(g, f, src.comp(g, f));
    for (std::size_t x = 0; x < 2; ++x) c.set_identity(x, src.identity(x));
    const std::size_t a = *c.basis_index("a"), b = *c.basis_index("b"), one_x = *c.basis_index("1x");
    c.set_comp(b, a, {{one_x, Scalar::one(c.field())}});
    CHECK_FALSE(validate_category(c).empty());
  }

  TEST_CASE("t ↦ t + 1 is not an automorphism of k[t]/(t²)") {
    GroupAction a = fix_sign().action;
    const Field f = a.cat->field();
    a.images[1][1] = {{0, Scalar::one(f)}, {1, Scalar::one(f)}};
    CHECK_FALSE(validate_action(a).empty());
  }

  TEST_CASE("tensor products") {
    const Fixture sw = fix_swap();
    const LinCat& swap = *sw.action.cat;
    const CatPtr t = tensor_product(*fix_triv().action.cat, swap);
    CHECK(t->num_objects() == 2);
    CHECK(t->dim() == 4);
    CHECK(tensor_product(swap, swap)->dim() == 16);
    CHECK_THROWS_AS(tensor_product(swap, *fix_swap(Field::prime(7)).action.cat), FieldMismatch);

    // M_G(k₁) ⊗ C has the objects and hom dimensions of M_G(C).
    const Fixture sign = fix_sign();
    const GroupAction triv = trivial_action(sign.action.group, fix_triv().action.cat);
    const ResolvingResult mk = resolving_category(triv), mc = resolving_category(sign.action);
    const CatPtr p = tensor_product(*mk.cat, *sign.action.cat);
    REQUIRE(p->num_objects() == mc.cat->num_objects());
    for (std::size_t x = 0; x < p->num_objects(); ++x)
      for (std::size_t y = 0; y < p->num_objects(); ++y) CHECK(p->hom(y, x).size() == mc.cat->hom(y, x).size());
  }

  TEST_CASE("single object categories round trip") {
    const Field f = Field::prime(5);
    for (const AlgebraView& a : {dual_numbers(f), group_algebra(FiniteGroup::cyclic(2), f), matrix_algebra(2, f)}) {
      const CatPtr c = single_object_category(a);
      CHECK(c->num_objects() == 1);
      CHECK(total_algebra(*c) == a);
    }
    AlgebraView bad = dual_numbers(f);
    bad.mul[3] = {{0, Scalar::one(f)}};
    bad.mul[1] = {};
    CHECK_THROWS_AS(single_object_category(bad), InvalidInput);
  }

  TEST_CASE("total algebra unit") {
    const AlgebraView t = total_algebra(*fix_swap().action.cat);
    CHECK(t.unit.size() == 2);
    CHECK(total_algebra(*fix_triv().action.cat).dim == 1);
  }

  TEST_CASE("small group examples") {
    CHECK(conjugacy_classes(FiniteGroup::cyclic(2)).classes ==
          std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(conjugacy_classes(FiniteGroup::trivial()).size() == 1);
    CHECK_FALSE(orbits_transversal(fix_triv().action).free);
  }

  TEST_CASE("representation examples") {
    const Field f = Field::prime(5);
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const Representation swap{c2, {SparseMatrix::identity(f, 2), SparseMatrix::from_dense(f, {{0, 1}, {1, 0}})}};
    const Quotient q = coinvariants(swap);
    CHECK(q.dim() == 1);
    CHECK(q.projection.apply({{0, Scalar::one(f)}, {1, -Scalar::one(f)}}).empty());
    const InvariantResult inv = invariants(swap);
    CHECK(inv.space.dim() == 1);
    CHECK(inv.space.basis.at(0, 0) == inv.space.basis.at(1, 0));
    const Representation triv{c2, {SparseMatrix::identity(f, 3), SparseMatrix::identity(f, 3)}};
    CHECK(coinvariants(triv).projection == SparseMatrix::identity(f, 3));
    CHECK(invariants(triv).space.dim() == 3);
  }
}
