/**
 * @file linalg.hpp
 * @brief Exact sparse elimination: rank, kernels, quotients, solves.
 *
 * Prime fields run on native 64-bit modular arithmetic; Q runs on GMP
 * rationals. Both go through the same incremental echelon engine, which
 * inserts one sparse row at a time and reduces it against the existing
 * pivots (no dense fallback, no pivoting heuristics beyond insertion order).
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hmcat/matrix.hpp"

namespace hmcat {

std::size_t rank(const SparseMatrix& m);

/// A subspace of k^n given by a basis in reduced form: the basis restricted
/// to `coordinate_rows` is the identity. Coordinates of any vector in the
/// subspace are therefore read off at those rows.
struct Subspace {
  SparseMatrix basis;  // n x dim
  std::vector<std::size_t> coordinate_rows;

  std::size_t dim() const { return basis.cols(); }
  /// Coordinates of columns of `vectors`, which must lie in the subspace
  /// (checked: throws InvalidInput otherwise).
  SparseMatrix coordinates(const SparseMatrix& vectors) const;
};

Subspace kernel(const SparseMatrix& m);

/// k^n / span(columns of `spanning`), with n = spanning.rows().
/// projection * section = identity; ker(projection) = span(spanning).
struct Quotient {
  SparseMatrix projection;  // q x n
  SparseMatrix section;     // n x q
  std::size_t dim() const { return projection.rows(); }
};

Quotient quotient_by_span(const SparseMatrix& spanning);

/// Column space of m as a Subspace (pivot-based reduced basis).
Subspace column_space(const SparseMatrix& m);

/// X with a * X = b. Requires a to have full column rank; returns nullopt
/// when b is not in the column space of a. Throws InvalidInput when a is
/// column-rank deficient.
std::optional<SparseMatrix> solve(const SparseMatrix& a, const SparseMatrix& b);

/// Inverse of a square invertible matrix; throws InvalidInput otherwise.
SparseMatrix inverse(const SparseMatrix& a);

}  // namespace hmcat
