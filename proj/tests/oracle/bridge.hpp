// Converts library algebras into the oracle's dense format.
#pragma once

#include "hmcat/fixtures.hpp"
#include "oracle/hochschild_oracle.hpp"

inline oracle::Algebra to_oracle(const hmcat::AlgebraView& a) {
  oracle::Algebra o;
  o.p = a.field.characteristic();
  o.dim = static_cast<int>(a.dim);
  o.mul.assign(a.dim, std::vector<std::vector<std::int64_t>>(a.dim, std::vector<std::int64_t>(a.dim, 0)));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (const auto& [k, c] : a.product(i, j)) o.mul[i][j][k] = c.residue();
  return o;
}

inline oracle::Group to_oracle(const hmcat::FiniteGroup& g) {
  oracle::Group o;
  for (const auto& row : g.table()) o.table.emplace_back(row.begin(), row.end());
  return o;
}

inline oracle::AlgebraAction to_oracle(const std::vector<hmcat::SparseMatrix>& mats) {
  oracle::AlgebraAction act;
  for (const auto& m : mats) {
    oracle::Dense d(m.rows(), oracle::Row(m.cols(), 0));
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.column(c)) d[r][c] = v.residue();
    act.push_back(d);
  }
  return act;
}

/// Degree of a basis element of the oracle's skew algebra is its index mod |G|.
inline std::vector<int> skew_class_one_homology(const oracle::Algebra& s, const oracle::Group& g, int N) {
  return oracle::homology_dims(s, N, [&](const std::vector<int>& t) {
    int prod = 0;
    for (int e : t) prod = g.table[prod][e % g.order()];
    return prod == 0;
  });
}

inline std::vector<int> skew_class_one_cohomology(const oracle::Algebra& s, const oracle::Group& g, int N) {
  return oracle::cohomology_dims(s, N, [&](const std::vector<int>& in, int out) {
    int prod = 0;
    for (int e : in) prod = g.table[prod][e % g.order()];
    return prod == out % g.order();
  });
}
