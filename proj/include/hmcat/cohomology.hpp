/**
 * @file cohomology.hpp
 * @brief Cochain complexes of linear categories with cup product, group
 * actions, class types, transport along functors, and the transfer maps
 * between (C^•(C))^G and the class-{1} part of C^•(C_T[G]).
 *
 * A degree-n cochain basis element is a pair (path, h): a composable path
 * f_n, ..., f_1 from x_1 to x_{n+1} (stored with f_{i+1} at position i) and
 * a basis vector h of _{x_{n+1}}C_{x_1}. It is the cochain sending that path
 * to h and every other path to 0. Degree-0 paths are bare objects.
 *
 * Coboundary:
 *   (dφ)(f_{n+1}, ..., f_1) = f_{n+1} φ(f_n, ..., f_1)
 *       + Σ_{i=1}^{n} (-1)^{n+1-i} φ(..., f_{i+1} f_i, ...)
 *       + (-1)^{n+1} φ(f_{n+1}, ..., f_2) f_1
 */
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "hmcat/complex.hpp"
#include "hmcat/constructions.hpp"
#include "hmcat/homology.hpp"

namespace hmcat {

struct Path {
  std::size_t start;
  Tuple arrows;
};

struct CochainComplex {
  CatPtr cat;
  Complex cx;
  std::vector<std::vector<Path>> paths;
  std::vector<std::vector<std::size_t>> offset;
  /// For each basis element: its path and output basis vector.
  std::vector<std::vector<std::size_t>> basis_path;
  std::vector<std::vector<std::size_t>> basis_out;
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index;

  std::size_t end(std::size_t n, std::size_t p) const;
  std::optional<std::size_t> find_path(std::size_t n, const Path& p) const;
  /// Basis index of (path, h); h must lie in the output block of the path.
  std::size_t element(std::size_t n, std::size_t p, std::size_t h) const;
};

/// Degrees 0..N+1; d∘d = 0 is checked.
CochainComplex cochain_complex(CatPtr c, std::size_t N, const BuildLimits& limits = {});

/// Families (f_x) with g f_x = f_y g for every basis g : x -> y, solved
/// directly; coordinates are those of C^0.
Subspace center(const CochainComplex& cc);

/// ψ ⌣ φ for ψ of degree m, φ of degree n.
SparseVector cup(const CochainComplex& cc, std::size_t m, const SparseVector& psi, std::size_t n,
                 const SparseVector& phi);

/// The unit of the cup product: (1_x) in degree 0.
SparseVector unit_cochain(const CochainComplex& cc);

/// Pairs of basis cochains in degrees m + n ≤ max_total, at most
/// `max_pairs` per degree pair, for which `fails(m, i, n, j)` is true.
/// Returns human-readable witnesses.
struct PairBudget {
  std::size_t max_total = 2;
  std::size_t max_pairs = 4000;
};

/// (s·φ)(f) = s φ(s⁻¹f_n ⊗ ... ⊗ s⁻¹f_1). Commutation with d is checked.
void attach_g_action_cochains(CochainComplex& cc, const GroupAction& a);
/// s(ψ⌣φ) = sψ⌣sφ on basis pairs within the budget; returns failures.
std::vector<std::string> cup_equivariance_failures(const CochainComplex& cc, const PairBudget& b = {});

/// Type (s_n, ..., s_1, s_0) of (path, h) is (deg f_n, ..., deg f_1, deg h);
/// its class is that of s_n⋯s_1·s_0⁻¹. Cross-class entries of d are
/// checked to vanish.
void class_decomposition_cochains(CochainComplex& cc, const Grading& gr, const ConjClasses& classes);
/// Class-{1} basis pairs whose cup product leaves class {1}.
std::vector<std::string> cup_class_failures(const CochainComplex& cc, const PairBudget& b = {});

struct Transport {
  ComplexMap map;  // C^•(D) -> C^•(C)
  std::vector<std::size_t> chain_failures;
  std::vector<std::string> cup_failures;
  /// Filled when both complexes carry actions.
  std::vector<std::pair<std::size_t, std::size_t>> equivariance_failures;
  bool ok() const { return chain_failures.empty() && cup_failures.empty() && equivariance_failures.empty(); }
};

/// C^•F for F : C -> D full and faithful, with src on C and dst on D:
/// (C^•F φ)(f_n, ..., f_1) = F⁻¹(φ(F f_n, ..., F f_1)). Throws InvalidInput
/// when some F_{y,x} is not invertible.
Transport transport_cochains(const LinFunctor& F, const CochainComplex& src, const CochainComplex& dst,
                             const PairBudget& b = {});

struct CohomologyTransfer {
  InvariantComplex source;   // (C^•(C))^G
  CochainComplex target_full;
  Complex target;            // class-{1} part of C^•(C_T[G])
  ComplexMap A;              // source -> target
  ComplexMap B;              // target -> source
  std::size_t max_degree = 0;
  std::vector<bool> ab_identity, ba_identity;
  std::vector<std::size_t> a_chain_failures, b_chain_failures;
  std::vector<std::string> a_cup_failures;
  std::size_t cup_pairs_checked = 0;
  bool ok() const;
};

/// Throws NonFreeAction for non-free actions.
CohomologyTransfer transfer_maps_cohomology(const GroupAction& a, const OrbitData& orbits, std::size_t N,
                                            const BuildLimits& limits = {}, const PairBudget& b = {});

}  // namespace hmcat
