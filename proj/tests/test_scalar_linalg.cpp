#include <doctest.h>

#include "hmcat/linalg.hpp"

using namespace hmcat;

TEST_SUITE("scalar-linalg") {
  TEST_CASE("prime field arithmetic") {
    const Field f = Field::prime(5);
    const Scalar a = Scalar::from_int(f, 3), b = Scalar::from_int(f, -1);
    CHECK((a + b) == Scalar::from_int(f, 2));
    CHECK((a * b) == Scalar::from_int(f, 2));
    CHECK((a * a.inverse()).is_one());
    CHECK((a / a).is_one());
    CHECK(b.residue() == 4);
    CHECK(Scalar::parse(f, "1/2") == Scalar::from_int(f, 3));
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), DivisionByZero);
    CHECK(f.is_unit(2));
    CHECK_FALSE(f.is_unit(10));
  }

  TEST_CASE("rationals are exact") {
    const Field q = Field::rationals();
    const Scalar x = Scalar::parse(q, "1/3");
    CHECK((x + x + x).is_one());
    CHECK((x * Scalar::from_int(q, 6)) == Scalar::from_int(q, 2));
    CHECK(Scalar::parse(q, "-4/6").to_string() == "-2/3");
    CHECK(q.is_unit(2));
  }

  TEST_CASE("mixing fields throws") {
    CHECK_THROWS_AS(Scalar::one(Field::prime(5)) + Scalar::one(Field::prime(7)), FieldMismatch);
    CHECK_THROWS_AS(Field::prime(4), InvalidInput);
  }

  TEST_CASE("rank, kernel and solve") {
    const Field f = Field::prime(5);
    const SparseMatrix m = SparseMatrix::from_dense(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank(m) == 2);
    const Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK((m * k.basis).is_zero());

    const SparseMatrix a = SparseMatrix::from_dense(f, {{1, 1}, {0, 1}});
    const SparseMatrix ai = inverse(a);
    CHECK(a * ai == SparseMatrix::identity(f, 2));
    auto x = solve(a, SparseMatrix::from_dense(f, {{2}, {3}}));
    REQUIRE(x.has_value());
    CHECK(a * *x == SparseMatrix::from_dense(f, {{2}, {3}}));
    CHECK_FALSE(solve(m, SparseMatrix::from_dense(f, {{1}, {0}, {0}})).has_value());
    CHECK_THROWS_AS(inverse(m), InvalidInput);
  }

  TEST_CASE("rank depends on the characteristic") {
    const std::vector<std::vector<std::int64_t>> rows{{1, 1}, {1, -1}};
    CHECK(rank(SparseMatrix::from_dense(Field::prime(2), rows)) == 1);
    CHECK(rank(SparseMatrix::from_dense(Field::prime(3), rows)) == 2);
    CHECK(rank(SparseMatrix::from_dense(Field::rationals(), rows)) == 2);
  }

  TEST_CASE("quotients and column spaces") {
    const Field f = Field::rationals();
    const SparseMatrix span = SparseMatrix::from_dense(f, {{1}, {-1}, {0}});
    const Quotient q = quotient_by_span(span);
    CHECK(q.dim() == 2);
    CHECK((q.projection * span).is_zero());
    CHECK(q.projection * q.section == SparseMatrix::identity(f, 2));
    const Subspace c = column_space(SparseMatrix::from_dense(f, {{1, 2}, {1, 2}, {0, 0}}));
    CHECK(c.dim() == 1);
    CHECK(c.coordinates(SparseMatrix::from_dense(f, {{3}, {3}, {0}})).rows() == 1);
    CHECK_THROWS_AS(c.coordinates(SparseMatrix::from_dense(f, {{1}, {0}, {0}})), InvalidInput);
  }

  TEST_CASE("sparse matrix algebra") {
    const Field f = Field::prime(7);
    const SparseMatrix a = SparseMatrix::from_dense(f, {{1, 2}, {3, 4}});
    CHECK(a.transpose().at(0, 1) == Scalar::from_int(f, 3));
    CHECK((a - a).is_zero());
    CHECK(a + a == a.scaled(Scalar::from_int(f, 2)));
    CHECK(a.hstack(a).cols() == 4);
    const std::vector<std::size_t> keep{1};
    CHECK(a.select_rows(keep).at(0, 0) == Scalar::from_int(f, 3));
    CHECK_THROWS_AS(a * SparseMatrix(f, 3, 1), StructuralError);
  }
}
