#include "hmcat/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hmcat {

void normalize(SparseVector& v) {
  if (v.empty()) return;
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
    if (out.back().second.is_zero()) out.pop_back();
  }
  v.swap(out);
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second + a * x[j].second;
      if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

SparseVector scaled(const SparseVector& x, const Scalar& a) {
  SparseVector out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, v * a);
  return out;
}

SparseMatrix::SparseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(Field field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Scalar::one(field));
  return m;
}

SparseMatrix SparseMatrix::from_triplets(Field field, std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
  SparseMatrix m(field, rows, cols);
  for (auto& t : entries) {
    if (t.row >= rows || t.col >= cols)
      throw StructuralError("triplet (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    if (!(t.value.field() == field)) throw FieldMismatch("triplet in field " + t.value.field().name());
    m.cols_[t.col].emplace_back(t.row, std::move(t.value));
  }
  for (auto& c : m.cols_) normalize(c);
  return m;
}

SparseMatrix SparseMatrix::from_columns(Field field, std::size_t rows,
                                        std::vector<SparseVector> cols) {
  SparseMatrix m(field, rows, 0);
  m.cols_ = std::move(cols);
  for (auto& c : m.cols_) {
    normalize(c);
    if (!c.empty() && c.back().first >= rows)
      throw StructuralError("column entry at row " + std::to_string(c.back().first) +
                            " outside " + std::to_string(rows) + " rows");
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) t.push_back({i, j, Scalar::from_int(field, rows[i][j])});
  return from_triplets(field, r, c, std::move(t));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return Scalar::zero(field_);
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) {
    if (j >= cols()) throw StructuralError("vector index outside matrix columns");
    for (const auto& [i, a] : cols_[j]) out.emplace_back(i, a * x);
  }
  normalize(out);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows_)
    throw StructuralError("product of " + std::to_string(rows_) + "x" + std::to_string(cols()) +
                          " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols()));
  if (!(field_ == o.field_)) throw FieldMismatch("matrix product across fields");
  SparseMatrix m(field_, rows_, 0);
  m.cols_.reserve(o.cols());
  for (const auto& c : o.cols_) m.cols_.push_back(apply(c));
  return m;
}

void SparseMatrix::require_same_shape(const SparseMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols() != o.cols())
    throw StructuralError(std::string("shape mismatch in matrix ") + op);
  if (!(field_ == o.field_)) throw FieldMismatch(std::string("field mismatch in matrix ") + op);
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  require_same_shape(o, "sum");
  SparseMatrix m = *this;
  const Scalar one = Scalar::one(field_);
  for (std::size_t j = 0; j < cols(); ++j) axpy(m.cols_[j], one, o.cols_[j]);
  return m;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  require_same_shape(o, "difference");
  SparseMatrix m = *this;
  const Scalar minus = -Scalar::one(field_);
  for (std::size_t j = 0; j < cols(); ++j) axpy(m.cols_[j], minus, o.cols_[j]);
  return m;
}

SparseMatrix SparseMatrix::scaled(const Scalar& a) const {
  SparseMatrix m(field_, rows_, 0);
  for (const auto& c : cols_) m.cols_.push_back(hmcat::scaled(c, a));
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) t.cols_[i].emplace_back(j, v);
  return t;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols() || !(field_ == o.field_)) return false;
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto& a = cols_[j];
    const auto& b = o.cols_[j];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].first != b[k].first || !(a[k].second == b[k].second)) return false;
  }
  return true;
}

SparseMatrix SparseMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::size_t> where(rows_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw StructuralError("row selection out of range");
    where[rows[i]] = i;
  }
  SparseMatrix m(field_, rows.size(), 0);
  m.cols_.reserve(cols());
  for (const auto& c : cols_) {
    SparseVector v;
    for (const auto& [i, x] : c)
      if (where[i] != static_cast<std::size_t>(-1)) v.emplace_back(where[i], x);
    normalize(v);
    m.cols_.push_back(std::move(v));
  }
  return m;
}

SparseMatrix SparseMatrix::select_cols(std::span<const std::size_t> cols) const {
  SparseMatrix m(field_, rows_, 0);
  m.cols_.reserve(cols.size());
  for (auto j : cols) m.cols_.push_back(cols_.at(j));
  return m;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& o) const {
  if (rows_ != o.rows_) throw StructuralError("hstack row mismatch");
  SparseMatrix m = *this;
  m.cols_.insert(m.cols_.end(), o.cols_.begin(), o.cols_.end());
  return m;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), Scalar::zero(field_)));
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) d[i][j] = v;
  return d;
}

std::string SparseMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : to_dense()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].to_string();
    os << '\n';
  }
  return os.str();
}

}  // namespace hmcat
