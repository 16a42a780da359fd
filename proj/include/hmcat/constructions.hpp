/**
 * @file constructions.hpp
 * @brief Skew category C[G], quotient C/G, resolving category M_G(C),
 * transversal subcategory C_T[G] and the matrix algebra M_G(Λ).
 */
#pragma once

#include <string>
#include <vector>

#include "hmcat/group.hpp"

namespace hmcat {

/// Homogeneous basis: one group element per basis vector.
struct Grading {
  FiniteGroup group;
  CatPtr cat;
  std::vector<std::size_t> degree;
};

/// Violations of multiplicativity (deg(g∘f) = deg g · deg f on every
/// nonzero term) and identities outside degree 1.
std::vector<std::string> validate_grading(const Grading& gr);

/// Every basis vector in degree 1.
Grading trivial_grading(const FiniteGroup& g, CatPtr c);

struct SkewResult {
  CatPtr cat;
  Grading grading;
  /// origin[i] = (basis vector f of C, s): basis vector i of C[G] is f@s,
  /// a morphism x -> y with f in _yC_{sx}.
  std::vector<std::pair<std::size_t, std::size_t>> origin;
};

SkewResult skew_category(const GroupAction& a);

/// The pair a = 1_{tx}@t : x -> tx and b = 1_x@t⁻¹ : tx -> x, checked to be
/// mutually inverse in C[G]. Returns the violations found (empty if fine).
std::vector<std::string> check_orbit_isomorphisms(const GroupAction& a, const SkewResult& skew);

struct QuotientResult {
  CatPtr cat;
  Grading grading;
  LinFunctor projection;
  /// origin[i]: basis vector of C whose class is basis vector i of C/G.
  std::vector<std::size_t> origin;
};

/// Built from coinvariants of ⊕ _yC_x over orbit pairs, on the basis of
/// classes of _{u_β}C_{s u_α}. Throws NonFreeAction for non-free actions.
QuotientResult quotient_category(const GroupAction& a, const OrbitData& orbits);

struct ResolvingResult {
  CatPtr cat;
  GroupAction action;
  LinFunctor L;
};

/// Objects (s,x) in G × C₀; basis vector f(s,t) copies f : x -> y as a
/// morphism (s,x) -> (t,y).
ResolvingResult resolving_category(const GroupAction& a);

struct TransversalResult {
  CatPtr cat;
  Grading grading;
  LinFunctor inclusion;
  std::vector<std::size_t> objects;  // objects of C[G] kept, in order
};

/// Full subcategory of C[G] on T. Throws InvalidInput when T is not a
/// transversal of the action.
TransversalResult transversal_subcategory(const SkewResult& skew, const GroupAction& a,
                                          const OrbitData& orbits);

/// Structure-constant comparison of C/G and C_T[G] under f ↔ f@s and
/// [u] ↔ u, including degrees. Empty iff they agree exactly.
std::vector<std::string> compare_quotient_transversal(const QuotientResult& q,
                                                      const TransversalResult& t);

struct MatrixSkewResult {
  AlgebraView algebra;
  /// Diagonal idempotents, one per group element.
  std::vector<LinComb> idempotents;
  /// perm[r][i] = index of r·E_i in the list.
  std::vector<std::vector<std::size_t>> perm;
  bool free = false;
  /// Agrees with a(M_G(Λ₁)) on the canonical basis.
  bool matches_resolving = false;
  GroupAction action;  // on the one-object-per-element category M_G(Λ₁)
};

/// `action[s]` is the matrix of s on Λ in the basis of the table.
MatrixSkewResult matrix_skew_algebra(const AlgebraView& lambda, const FiniteGroup& g,
                                     const std::vector<SparseMatrix>& action);

/// Action on Λ₁ from per-element matrices on Λ.
GroupAction algebra_action(const FiniteGroup& g, CatPtr lambda1, const std::vector<SparseMatrix>& mats);

}  // namespace hmcat
