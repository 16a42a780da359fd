// Library results against the standalone dense oracle, and both against
// values frozen from the oracle.
#include <doctest.h>

#include "hmcat/cohomology.hpp"
#include "oracle/bridge.hpp"

using namespace hmcat;

namespace {

using Ints = std::vector<int>;

Ints ints(const std::vector<std::size_t>& v) { return Ints(v.begin(), v.end()); }

Ints lib_hh(CatPtr c) {
  ChainComplex cc = bar_complex(std::move(c), 3);
  return ints(homology(cc.cx, 3).dims);
}

Ints lib_hhcoh(CatPtr c) {
  CochainComplex cc = cochain_complex(std::move(c), 3);
  return ints(homology(cc.cx, 3).dims);
}

struct SkewSide {
  Ints hh_one, hhcoh_one;
};

SkewSide lib_skew(const AlgebraAction& aa) {
  const GroupAction a = algebra_action(aa.group, single_object_category(aa.lambda), aa.mats);
  const SkewResult s = skew_category(a);
  const ConjClasses cl = conjugacy_classes(s.grading.group);
  ChainComplex ch = bar_complex(s.cat, 3);
  class_decomposition(ch, s.grading, cl);
  CochainComplex co = cochain_complex(s.cat, 3);
  class_decomposition_cochains(co, s.grading, cl);
  return {ints(homology(ch.cx, 3).by_class[0]), ints(homology(co.cx, 3).by_class[0])};
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("a point and the 2x2 matrices") {
    for (std::uint32_t p : {2u, 5u}) {
      const Field f = Field::prime(p);
      for (const AlgebraView& a : {field_algebra(f), matrix_algebra(2, f)}) {
        const Ints frozen{1, 0, 0, 0};
        CHECK(oracle::homology_dims(to_oracle(a), 3) == frozen);
        CHECK(oracle::cohomology_dims(to_oracle(a), 3) == frozen);
        CHECK(lib_hh(single_object_category(a)) == frozen);
        CHECK(lib_hhcoh(single_object_category(a)) == frozen);
      }
    }
  }

  TEST_CASE("group algebra of C2 in both characteristics") {
    for (std::uint32_t p : {2u, 5u}) {
      const AlgebraView a = group_algebra(FiniteGroup::cyclic(2), Field::prime(p));
      const Ints frozen = p == 2 ? Ints{2, 2, 2, 2} : Ints{2, 0, 0, 0};
      CHECK(oracle::homology_dims(to_oracle(a), 3) == frozen);
      CHECK(lib_hh(single_object_category(a)) == frozen);
      CHECK(lib_hhcoh(single_object_category(a)) == oracle::cohomology_dims(to_oracle(a), 3));
    }
  }

  TEST_CASE("the swap category through its total algebra") {
    const CatPtr c = fix_swap().action.cat;
    const oracle::Algebra a = to_oracle(total_algebra(*c));
    CHECK(oracle::homology_dims(a, 3) == Ints{2, 1, 1, 1});
    CHECK(oracle::cohomology_dims(a, 3) == Ints{1, 1, 1, 1});
    CHECK(lib_hh(c) == Ints{2, 1, 1, 1});
    CHECK(lib_hhcoh(c) == Ints{1, 1, 1, 1});
  }

  TEST_CASE("sign fixture over F5") {
    const AlgebraAction sa = sign_algebra_action(Field::prime(5));
    const oracle::Algebra L = to_oracle(sa.lambda);
    const oracle::Group G = to_oracle(sa.group);
    const oracle::AlgebraAction A = to_oracle(sa.mats);
    const oracle::Algebra S = oracle::skew_algebra(L, G, A);

    CHECK(oracle::homology_dims(L, 3) == Ints{2, 1, 1, 1});
    CHECK(oracle::cohomology_dims(L, 3) == Ints{2, 1, 1, 1});
    CHECK(oracle::homology_coinvariant_dims(L, G, A, 3) == Ints{1, 0, 0, 0});
    CHECK(oracle::cohomology_invariant_dims(L, G, A, 3) == Ints{1, 1, 1, 1});
    CHECK(oracle::homology_dims(S, 3) == Ints{2, 1, 1, 1});
    CHECK(oracle::cohomology_dims(S, 3) == Ints{1, 1, 1, 1});
    CHECK(skew_class_one_homology(S, G, 3) == Ints{1, 0, 0, 0});
    CHECK(skew_class_one_cohomology(S, G, 3) == Ints{1, 1, 1, 1});

    const GroupAction a = fix_sign().action;
    CHECK(lib_hh(a.cat) == Ints{2, 1, 1, 1});
    CHECK(lib_hhcoh(a.cat) == Ints{2, 1, 1, 1});
    ChainComplex ch = bar_complex(a.cat, 3);
    attach_g_action(ch, a);
    CHECK(ints(homology_rep_dims(ch.cx, 3)) == Ints{1, 0, 0, 0});
    CochainComplex co = cochain_complex(a.cat, 3);
    attach_g_action_cochains(co, a);
    CHECK(ints(homology_rep_dims(co.cx, 3)) == Ints{1, 1, 1, 1});
    const SkewSide lib = lib_skew(sa);
    CHECK(lib.hh_one == Ints{1, 0, 0, 0});
    CHECK(lib.hhcoh_one == Ints{1, 1, 1, 1});
  }

  TEST_CASE("sign fixture over F2") {
    const AlgebraAction sa = sign_algebra_action(Field::prime(2));
    const oracle::Algebra L = to_oracle(sa.lambda);
    const oracle::Group G = to_oracle(sa.group);
    const oracle::Algebra S = oracle::skew_algebra(L, G, to_oracle(sa.mats));
    CHECK(oracle::homology_dims(L, 3) == Ints{2, 2, 2, 2});
    CHECK(oracle::homology_dims(S, 3) == Ints{4, 8, 12, 16});
    CHECK(skew_class_one_homology(S, G, 3) == Ints{2, 4, 6, 8});
    CHECK(skew_class_one_cohomology(S, G, 3) == Ints{2, 4, 6, 8});

    CHECK(lib_hh(fix_sign(Field::prime(2)).action.cat) == Ints{2, 2, 2, 2});
    const SkewSide lib = lib_skew(sa);
    CHECK(lib.hh_one == Ints{2, 4, 6, 8});
    CHECK(lib.hhcoh_one == Ints{2, 4, 6, 8});
  }

  TEST_CASE("skew algebras agree with the oracle on a C3 action") {
    // k[t]/(t²) with t ↦ ωt, ω = 3 a cube root of 1 mod 13
    const Field f = Field::prime(13);
    const Scalar one = Scalar::one(f), w = Scalar::from_int(f, 3);
    std::vector<SparseMatrix> mats;
    Scalar c = one;
    for (int s = 0; s < 3; ++s, c *= w) mats.push_back(SparseMatrix::from_triplets(f, 2, 2, {{0, 0, one}, {1, 1, c}}));
    const AlgebraAction aa{dual_numbers(f), FiniteGroup::cyclic(3), mats};
    const oracle::Group G = to_oracle(aa.group);
    const oracle::AlgebraAction A = to_oracle(aa.mats);
    const oracle::Algebra S = oracle::skew_algebra(to_oracle(aa.lambda), G, A);
    const SkewSide lib = lib_skew(aa);
    CHECK(lib.hh_one == skew_class_one_homology(S, G, 3));
    CHECK(lib.hhcoh_one == skew_class_one_cohomology(S, G, 3));
    CHECK(lib.hh_one == oracle::homology_coinvariant_dims(to_oracle(aa.lambda), G, A, 3));
    CHECK(lib.hhcoh_one == oracle::cohomology_invariant_dims(to_oracle(aa.lambda), G, A, 3));
  }
}
