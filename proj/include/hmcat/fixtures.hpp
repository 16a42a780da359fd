/**
 * @file fixtures.hpp
 * @brief The standard small instances: k with a trivial C2 action, the
 * two-object swap category, and dual numbers with t ↦ −t. Default field F5.
 */
#pragma once

#include <string>
#include <vector>

#include "hmcat/constructions.hpp"

namespace hmcat {

struct Fixture {
  std::string name;
  GroupAction action;
};

/// One object, hom space k, C2 acting trivially.
Fixture fix_triv(Field f = Field::prime(5));
/// Objects x, y; basis 1x, 1y, a : x -> y, b : y -> x with ab = ba = 0;
/// C2 swaps x ↔ y and a ↔ b.
Fixture fix_swap(Field f = Field::prime(5));
/// One object with endomorphisms k[t]/(t²); C2 acts by t ↦ −t.
Fixture fix_sign(Field f = Field::prime(5));
/// Two objects with only identities, swapped by C2.
Fixture discrete_swap(Field f = Field::prime(5));

std::vector<Fixture> standard_fixtures(Field f = Field::prime(5));
/// Looks up "triv", "swap", "sign" or "discrete".
Fixture fixture_by_name(const std::string& name, Field f = Field::prime(5));

/// A finite-dimensional algebra with a group acting by automorphisms.
struct AlgebraAction {
  AlgebraView lambda;
  FiniteGroup group;
  std::vector<SparseMatrix> mats;
};

AlgebraView field_algebra(Field f);
/// k[t]/(t²) on the basis 1, t.
AlgebraView dual_numbers(Field f);
AlgebraView group_algebra(const FiniteGroup& g, Field f);
/// n×n matrices on the basis e_ij, index i*n + j.
AlgebraView matrix_algebra(std::size_t n, Field f);

/// Dual numbers with C2 acting by t ↦ −t.
AlgebraAction sign_algebra_action(Field f = Field::prime(5));
AlgebraAction trivial_algebra_action(const AlgebraView& lambda, const FiniteGroup& g);

}  // namespace hmcat
