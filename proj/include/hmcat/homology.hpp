/**
 * @file homology.hpp
 * @brief Bar chain complexes of linear categories, group actions on them,
 * class decompositions, and the transfer maps between (C_•(C))_G and the
 * class-{1} part of C_•(C_T[G]).
 *
 * A chain of degree n is a tuple (f_n, ..., f_0) with f_i : x_i -> x_{i+1}
 * and x_{n+1} = x_0. It is stored with f_i at position i.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>

#include "hmcat/complex.hpp"
#include "hmcat/constructions.hpp"

namespace hmcat {

using Tuple = std::vector<std::size_t>;

struct ChainComplex {
  CatPtr cat;
  Complex cx;
  std::vector<std::vector<Tuple>> tuples;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;

  std::optional<std::size_t> find(const Tuple& t) const;
};

struct BuildLimits {
  /// Largest allowed dimension of a single chain or cochain space.
  std::size_t max_dim = 2'000'000;
};

/// Chains up to degree N+1, so homology is available up to N. d∘d = 0 is
/// checked before returning.
ChainComplex bar_complex(CatPtr c, std::size_t N, const BuildLimits& limits = {});

/// s·(f_n ⊗ ... ⊗ f_0) = s f_n ⊗ ... ⊗ s f_0; equivariance of d is checked.
void attach_g_action(ChainComplex& cc, const GroupAction& a);

/// Class of deg(f_n)⋯deg(f_0) for every tuple; cross-class entries of d are
/// checked to vanish.
void class_decomposition(ChainComplex& cc, const Grading& gr, const ConjClasses& classes);

/// Expands a tensor of combinations into tuple coordinates of `cc`.
/// Throws StructuralError when a term is not a basis tuple of `cc`.
SparseVector tensor_coords(const ChainComplex& cc, const std::vector<LinComb>& factors);

/// C_•(F) for a functor between the underlying categories.
ComplexMap functor_chain_map(const LinFunctor& F, const ChainComplex& src, const ChainComplex& dst);

struct HomologyTransfer {
  CoinvariantComplex source;     // (C_•(C))_G
  ChainComplex target_full;      // C_•(C_T[G]) with classes
  Complex target;                // its class-{1} part
  ComplexMap A;                  // source -> target
  ComplexMap B;                  // target -> source
  std::size_t max_degree = 0;
  /// Per degree ≤ N.
  std::vector<bool> ab_identity, ba_identity;
  std::vector<std::size_t> a_chain_failures, b_chain_failures;
  bool ok() const;
};

/// Throws NonFreeAction for non-free actions.
HomologyTransfer transfer_maps_homology(const GroupAction& a, const OrbitData& orbits, std::size_t N,
                                        const BuildLimits& limits = {});

std::uint64_t tuple_key(const Tuple& t, std::uint64_t base);
/// Calls fn(tuple, coefficient) for every term of the tensor of `factors`.
void expand_tensor(const std::vector<LinComb>& factors, Field field,
                   const std::function<void(const Tuple&, const Scalar&)>& fn);

/// Writes "f_n ⊗ ... ⊗ f_0" with basis labels.
std::string tuple_string(const LinCat& c, const Tuple& t);

}  // namespace hmcat
