/**
 * @file complex.hpp
 * @brief Degree-indexed exact complexes shared by homology and cohomology.
 *
 * d[n] leaves degree n: C_n -> C_{n-1} for chains, C^n -> C^{n+1} for
 * cochains. Maps leaving the complex (d[0] for chains, d[top] for
 * cochains) have zero rows.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmcat/group.hpp"
#include "hmcat/linalg.hpp"

namespace hmcat {

struct Complex {
  Field field = Field::rationals();
  bool cochain = false;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> d;
  /// Optional: action[n][s] on degree n.
  std::vector<std::vector<SparseMatrix>> action;
  /// Optional: class index of each basis element, per degree.
  std::vector<std::vector<std::size_t>> cls;
  std::size_t num_classes = 0;
  /// For subcomplexes cut out of a parent basis: parent indices kept.
  std::vector<std::vector<std::size_t>> keep;

  std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
  /// Degree the differential lands in.
  std::size_t next(std::size_t n) const { return cochain ? n + 1 : n - 1; }
};

/// Degrees n where d∘d is not exactly zero.
std::vector<std::size_t> dd_failures(const Complex& c);
/// Throws InvalidInput when d∘d != 0 somewhere.
void require_dd_zero(const Complex& c, const std::string& what);
/// Pairs (degree, element) where the action fails to commute with d.
std::vector<std::pair<std::size_t, std::size_t>> equivariance_failures(const Complex& c);
/// Degrees with a nonzero cross-class entry in d.
std::vector<std::size_t> cross_class_failures(const Complex& c);

/// Subcomplex spanned by basis elements of class `k`.
Complex restrict_to_class(const Complex& c, std::size_t k);

struct HomologyResult {
  std::vector<std::size_t> dims;
  /// rank of d[n] for n = 0..top.
  std::vector<std::size_t> ranks;
  /// by_class[k][n], filled when the complex carries classes.
  std::vector<std::vector<std::size_t>> by_class;
  std::size_t max_degree = 0;
};

/// Dimensions up to N, which needs degree N+1 for chains (N+1 also for
/// cochains, where the truncation at the top would otherwise show).
/// When classes are attached, ranks are computed block by block and summed.
HomologyResult homology(const Complex& c, std::size_t N);

/// dim of (H_n)_G for chains or (H^n)^G for cochains, n ≤ N, from the
/// attached action.
std::vector<std::size_t> homology_rep_dims(const Complex& c, std::size_t N);

/// Per-degree matrices forming a map between complexes.
using ComplexMap = std::vector<SparseMatrix>;
/// Degrees n (with n and next(n) ≤ N) where map∘d != d∘map.
std::vector<std::size_t> chain_map_failures(const ComplexMap& f, const Complex& src, const Complex& dst,
                                            std::size_t N);

/// V/(s-1)V per degree, with boundaries pushed through.
struct CoinvariantComplex {
  Complex cx;
  std::vector<Quotient> q;
};
CoinvariantComplex coinvariant_complex(const Complex& c);

/// Invariant subspaces per degree with restricted differential.
struct InvariantComplex {
  Complex cx;
  std::vector<Subspace> sub;
};
InvariantComplex invariant_complex(const Complex& c);

/// Vertical stack of matrices with a common column count.
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Field f, std::size_t cols);

}  // namespace hmcat
