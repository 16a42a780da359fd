/**
 * @file matrix.hpp
 * @brief Sparse exact matrices (compressed columns) over a runtime Field.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hmcat/scalar.hpp"

namespace hmcat {

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Sorts by index, merges duplicates, drops zeros.
void normalize(SparseVector& v);
/// y += a * x, both normalized.
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Scalar& a);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

class SparseMatrix {
 public:
  SparseMatrix(Field field, std::size_t rows, std::size_t cols);

  static SparseMatrix identity(Field field, std::size_t n);
  /// Duplicate (row, col) entries are summed.
  static SparseMatrix from_triplets(Field field, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> entries);
  /// Columns need not be normalized.
  static SparseMatrix from_columns(Field field, std::size_t rows, std::vector<SparseVector> cols);
  static SparseMatrix from_dense(Field field, const std::vector<std::vector<std::int64_t>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  const SparseVector& column(std::size_t j) const { return cols_[j]; }
  Scalar at(std::size_t r, std::size_t c) const;

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& a) const;
  SparseMatrix transpose() const;

  bool is_zero() const { return nnz() == 0; }
  bool operator==(const SparseMatrix& o) const;

  /// Row i of the result is row rows[i] of this.
  SparseMatrix select_rows(std::span<const std::size_t> rows) const;
  SparseMatrix select_cols(std::span<const std::size_t> cols) const;
  /// [this | o]
  SparseMatrix hstack(const SparseMatrix& o) const;

  std::vector<std::vector<Scalar>> to_dense() const;
  std::string to_string() const;

 private:
  void require_same_shape(const SparseMatrix& o, const char* op) const;

  Field field_;
  std::size_t rows_;
  std::vector<SparseVector> cols_;
};

}  // namespace hmcat
