#include "hmcat/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace hmcat {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct ModP {
  using E = std::uint64_t;
  std::uint64_t p;

  E from(const Scalar& s) const { return s.residue(); }
  Scalar to(E e, Field f) const { return Scalar::from_int(f, static_cast<std::int64_t>(e)); }
  bool is_zero(E a) const { return a == 0; }
  E mul(E a, E b) const { return a * b % p; }
  E sub(E a, E b) const { return a >= b ? a - b : a + p - b; }
  E neg(E a) const { return a ? p - a : 0; }
  E inv(E a) const {
    E r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
};

struct Rat {
  using E = mpq_class;

  E from(const Scalar& s) const { return s.rational(); }
  Scalar to(const E& e, Field) const { return Scalar::parse(Field::rationals(), e.get_str()); }
  bool is_zero(const E& a) const { return sgn(a) == 0; }
  E mul(const E& a, const E& b) const { return a * b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const { return 1 / a; }
};

template <class K>
using Row = std::vector<std::pair<std::size_t, typename K::E>>;

template <class K>
Row<K> to_row(const K& k, const SparseVector& v, std::size_t offset = 0) {
  Row<K> r;
  r.reserve(v.size());
  for (const auto& [i, x] : v) r.emplace_back(i + offset, k.from(x));
  return r;
}

template <class K>
SparseVector from_row(const K& k, const Row<K>& r, Field f, std::size_t begin, std::size_t end) {
  SparseVector v;
  for (const auto& [i, x] : r)
    if (i >= begin && i < end) v.emplace_back(i - begin, k.to(x, f));
  return v;
}

template <class K>
class Echelon {
 public:
  Echelon(K k, std::size_t width) : k_(std::move(k)), pivot_row_(width, npos) {}

  /// Reduces r against existing pivots; stores it if independent.
  bool insert(Row<K> r) {
    while (!r.empty()) {
      const std::size_t lead = r.front().first;
      const std::size_t pr = pivot_row_[lead];
      if (pr == npos) {
        const auto scale = k_.inv(r.front().second);
        for (auto& e : r) e.second = k_.mul(e.second, scale);
        pivot_row_[lead] = rows_.size();
        pivots_.push_back(lead);
        rows_.push_back(std::move(r));
        return true;
      }
      const auto c = r.front().second;
      subtract(r, c, rows_[pr], 0);
    }
    return false;
  }

  /// Brings the stored rows to reduced row echelon form.
  void reduce_fully() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t idx : order) {
      auto& r = rows_[idx];
      std::size_t pos = 1;
      while (pos < r.size()) {
        const std::size_t col = r[pos].first;
        const std::size_t pr = pivot_row_[col];
        if (pr == npos) {
          ++pos;
          continue;
        }
        const auto c = r[pos].second;
        subtract(r, c, rows_[pr], pos);
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row<K>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t pivot_row(std::size_t col) const { return pivot_row_[col]; }

 private:
  // r -= c * p, where p's leading column equals r[from].first and p has no
  // entries left of it.
  void subtract(Row<K>& r, const typename K::E& c, const Row<K>& p, std::size_t from) {
    Row<K> out;
    out.reserve(r.size() + p.size());
    for (std::size_t i = 0; i < from; ++i) out.push_back(std::move(r[i]));
    std::size_t i = from, j = 0;
    while (i < r.size() || j < p.size()) {
      if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
        out.push_back(std::move(r[i++]));
      } else if (i == r.size() || p[j].first < r[i].first) {
        out.emplace_back(p[j].first, k_.neg(k_.mul(c, p[j].second)));
        ++j;
      } else {
        auto v = k_.sub(r[i].second, k_.mul(c, p[j].second));
        if (!k_.is_zero(v)) out.emplace_back(r[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    r.swap(out);
  }

  K k_;
  std::vector<Row<K>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

template <class F>
decltype(auto) with_ops(Field f, F&& fn) {
  if (f.is_rational()) return fn(Rat{});
  return fn(ModP{f.characteristic()});
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  return with_ops(m.field(), [&](auto k) {
    // Eliminate along the shorter side.
    const bool by_cols = m.cols() <= m.rows();
    const SparseMatrix src = by_cols ? m : m.transpose();
    Echelon<decltype(k)> e(k, src.rows());
    for (std::size_t j = 0; j < src.cols(); ++j) e.insert(to_row(k, src.column(j)));
    return e.rank();
  });
}

SparseMatrix Subspace::coordinates(const SparseMatrix& vectors) const {
  SparseMatrix c = vectors.select_rows(coordinate_rows);
  if (!(basis * c == vectors)) throw InvalidInput("vectors do not lie in the subspace");
  return c;
}

Subspace kernel(const SparseMatrix& m) {
  const Field f = m.field();
  const std::size_t n = m.cols();
  return with_ops(f, [&](auto k) {
    using K = decltype(k);
    const SparseMatrix rows = m.transpose();
    Echelon<K> e(k, n);
    for (std::size_t i = 0; i < rows.cols(); ++i) e.insert(to_row(k, rows.column(i)));
    e.reduce_fully();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots()) is_pivot[c] = true;
    std::vector<std::vector<Triplet>> dummy;
    std::vector<SparseVector> cols;
    std::vector<std::size_t> coords;
    // column index of free variable -> list of (pivot col, -R[pivot][free])
    std::vector<SparseVector> by_free(n);
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
      const auto& row = e.rows()[r];
      const std::size_t pc = e.pivots()[r];
      for (std::size_t t = 1; t < row.size(); ++t)
        by_free[row[t].first].emplace_back(pc, k.to(k.neg(row[t].second), f));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (is_pivot[c]) continue;
      SparseVector v = std::move(by_free[c]);
      v.emplace_back(c, Scalar::one(f));
      cols.push_back(std::move(v));
      coords.push_back(c);
    }
    return Subspace{SparseMatrix::from_columns(f, n, std::move(cols)), std::move(coords)};
  });
}

Subspace column_space(const SparseMatrix& m) {
  const Field f = m.field();
  return with_ops(f, [&](auto k) {
    using K = decltype(k);
    Echelon<K> e(k, m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(to_row(k, m.column(j)));
    e.reduce_fully();
    std::vector<std::size_t> order(e.rank());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return e.pivots()[a] < e.pivots()[b]; });
    std::vector<SparseVector> cols;
    std::vector<std::size_t> coords;
    for (auto r : order) {
      cols.push_back(from_row(k, e.rows()[r], f, 0, m.rows()));
      coords.push_back(e.pivots()[r]);
    }
    return Subspace{SparseMatrix::from_columns(f, m.rows(), std::move(cols)), std::move(coords)};
  });
}

Quotient quotient_by_span(const SparseMatrix& spanning) {
  const Field f = spanning.field();
  const std::size_t n = spanning.rows();
  return with_ops(f, [&](auto k) {
    using K = decltype(k);
    Echelon<K> e(k, n);
    for (std::size_t j = 0; j < spanning.cols(); ++j) e.insert(to_row(k, spanning.column(j)));
    e.reduce_fully();
    std::vector<std::size_t> qindex(n, npos);
    std::size_t q = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (e.pivot_row(c) == npos) qindex[c] = q++;
    std::vector<Triplet> proj, sec;
    for (std::size_t c = 0; c < n; ++c)
      if (qindex[c] != npos) {
        proj.push_back({qindex[c], c, Scalar::one(f)});
        sec.push_back({c, qindex[c], Scalar::one(f)});
      }
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
      const auto& row = e.rows()[r];
      const std::size_t pc = e.pivots()[r];
      for (std::size_t t = 1; t < row.size(); ++t)
        proj.push_back({qindex[row[t].first], pc, k.to(k.neg(row[t].second), f)});
    }
    return Quotient{SparseMatrix::from_triplets(f, q, n, std::move(proj)),
                    SparseMatrix::from_triplets(f, n, q, std::move(sec))};
  });
}

std::optional<SparseMatrix> solve(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("solve: row mismatch");
  const Field f = a.field();
  const std::size_t m = a.cols(), w = m + b.cols();
  return with_ops(f, [&](auto k) -> std::optional<SparseMatrix> {
    using K = decltype(k);
    const SparseMatrix at = a.transpose(), bt = b.transpose();
    Echelon<K> e(k, w);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Row<K> r = to_row(k, at.column(i));
      Row<K> rb = to_row(k, bt.column(i), m);
      r.insert(r.end(), std::make_move_iterator(rb.begin()), std::make_move_iterator(rb.end()));
      e.insert(std::move(r));
    }
    e.reduce_fully();
    std::size_t in_a = 0;
    for (auto c : e.pivots()) {
      if (c >= m) return std::nullopt;
      ++in_a;
    }
    if (in_a != m) throw InvalidInput("solve: coefficient matrix is column-rank deficient");
    std::vector<Triplet> x;
    for (std::size_t r = 0; r < e.rows().size(); ++r)
      for (const auto& [i, v] : e.rows()[r])
        if (i >= m) x.push_back({e.pivots()[r], i - m, k.to(v, f)});
    return SparseMatrix::from_triplets(f, m, b.cols(), std::move(x));
  });
}

SparseMatrix inverse(const SparseMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
  auto x = solve(a, SparseMatrix::identity(a.field(), a.rows()));
  if (!x) throw InvalidInput("matrix is not invertible");
  return *x;
}

}  // namespace hmcat
