#include "hmcat/complex.hpp"

namespace hmcat {

namespace {

bool inside(const Complex& c, std::size_t n) {
  return c.cochain ? n + 1 <= c.top() : n >= 1;
}

SparseMatrix outer_map(Field f, std::size_t cols) { return SparseMatrix(f, 0, cols); }

}  // namespace

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Field f, std::size_t cols) {
  SparseMatrix t(f, cols, 0);
  for (const auto& b : blocks) t = t.hstack(b.transpose());
  return t.transpose();
}

std::vector<std::size_t> dd_failures(const Complex& c) {
  std::vector<std::size_t> bad;
  for (std::size_t n = 0; n <= c.top(); ++n) {
    if (!inside(c, n) || !inside(c, c.next(n))) continue;
    if (!(c.d[c.next(n)] * c.d[n]).is_zero()) bad.push_back(n);
  }
  return bad;
}

void require_dd_zero(const Complex& c, const std::string& what) {
  const auto bad = dd_failures(c);
  if (!bad.empty())
    throw InvalidInput(what + ": d∘d != 0 starting in degree " + std::to_string(bad.front()));
}

std::vector<std::pair<std::size_t, std::size_t>> equivariance_failures(const Complex& c) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  if (c.action.empty()) return bad;
  for (std::size_t n = 0; n <= c.top(); ++n) {
    if (!inside(c, n)) continue;
    for (std::size_t s = 0; s < c.action[n].size(); ++s)
      if (!(c.d[n] * c.action[n][s] == c.action[c.next(n)][s] * c.d[n])) bad.emplace_back(n, s);
  }
  return bad;
}

std::vector<std::size_t> cross_class_failures(const Complex& c) {
  std::vector<std::size_t> bad;
  if (c.cls.empty()) return bad;
  for (std::size_t n = 0; n <= c.top(); ++n) {
    if (!inside(c, n)) continue;
    const auto& from = c.cls[n];
    const auto& to = c.cls[c.next(n)];
    bool ok = true;
    for (std::size_t j = 0; j < c.d[n].cols() && ok; ++j)
      for (const auto& [i, _] : c.d[n].column(j))
        if (to[i] != from[j]) {
          ok = false;
          break;
        }
    if (!ok) bad.push_back(n);
  }
  return bad;
}

Complex restrict_to_class(const Complex& c, std::size_t k) {
  if (c.cls.size() != c.dims.size()) throw StructuralError("complex carries no class decomposition");
  Complex r;
  r.field = c.field;
  r.cochain = c.cochain;
  std::vector<std::vector<std::size_t>> idx(c.dims.size());
  for (std::size_t n = 0; n <= c.top(); ++n) {
    for (std::size_t i = 0; i < c.dims[n]; ++i)
      if (c.cls[n][i] == k) idx[n].push_back(i);
    r.dims.push_back(idx[n].size());
  }
  for (std::size_t n = 0; n <= c.top(); ++n) {
    const SparseMatrix cols = c.d[n].select_cols(idx[n]);
    r.d.push_back(inside(c, n) ? cols.select_rows(idx[c.next(n)]) : outer_map(c.field, idx[n].size()));
  }
  for (std::size_t n = 0; n <= c.top(); ++n) {
    std::vector<std::size_t> kept = idx[n];
    if (!c.keep.empty())
      for (auto& i : kept) i = c.keep[n][i];
    r.keep.push_back(std::move(kept));
  }
  return r;
}

HomologyResult homology(const Complex& c, std::size_t N) {
  if (c.top() < N + 1)
    throw StructuralError("homology up to degree " + std::to_string(N) + " needs the complex up to degree " +
                          std::to_string(N + 1));
  HomologyResult h;
  h.max_degree = N;
  const std::size_t last = N + 1;
  auto ranks_of = [&](const Complex& x) {
    std::vector<std::size_t> r(last + 1, 0);
    for (std::size_t n = 0; n <= last; ++n)
      if (inside(x, n) && (x.cochain ? n <= N : true)) r[n] = rank(x.d[n]);
    return r;
  };
  auto dims_of = [&](const Complex& x, const std::vector<std::size_t>& r) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= N; ++n) {
      const std::size_t in = x.cochain ? (n ? r[n - 1] : 0) : r[n + 1];
      out.push_back(x.dims[n] - r[n] - in);
    }
    return out;
  };
  if (c.cls.size() == c.dims.size() && c.num_classes > 0) {
    h.ranks.assign(last + 1, 0);
    for (std::size_t k = 0; k < c.num_classes; ++k) {
      const Complex sub = restrict_to_class(c, k);
      const auto r = ranks_of(sub);
      for (std::size_t n = 0; n <= last; ++n) h.ranks[n] += r[n];
      h.by_class.push_back(dims_of(sub, r));
    }
    const auto bad = cross_class_failures(c);
    if (!bad.empty())
      throw InvalidInput("differential mixes classes in degree " + std::to_string(bad.front()));
  } else {
    h.ranks = ranks_of(c);
  }
  h.dims = dims_of(c, h.ranks);
  return h;
}

std::vector<std::size_t> homology_rep_dims(const Complex& c, std::size_t N) {
  if (c.action.size() != c.dims.size()) throw StructuralError("complex carries no group action");
  if (c.top() < N + 1) throw StructuralError("complex too short for the requested degree");
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= N; ++n) {
    const Subspace z = kernel(c.d[n]);
    const SparseMatrix id = SparseMatrix::identity(c.field, c.dims[n]);
    if (!c.cochain) {
      SparseMatrix span = c.d[n + 1];
      for (std::size_t s = 1; s < c.action[n].size(); ++s) span = span.hstack((c.action[n][s] - id) * z.basis);
      out.push_back(z.dim() - rank(span));
    } else {
      SparseMatrix b = n ? c.d[n - 1] : SparseMatrix(c.field, c.dims[n], 0);
      const Quotient qb = quotient_by_span(b);
      std::vector<SparseMatrix> blocks;
      for (std::size_t s = 1; s < c.action[n].size(); ++s)
        blocks.push_back(qb.projection * (c.action[n][s] - id) * z.basis);
      const std::size_t fixed = blocks.empty() ? z.dim() : kernel(vstack(blocks, c.field, z.dim())).dim();
      out.push_back(fixed - rank(b));
    }
  }
  return out;
}

std::vector<std::size_t> chain_map_failures(const ComplexMap& f, const Complex& src, const Complex& dst,
                                            std::size_t N) {
  std::vector<std::size_t> bad;
  for (std::size_t n = 0; n <= N && n < f.size(); ++n) {
    if (!inside(src, n)) continue;
    const std::size_t m = src.next(n);
    if (m > N || m >= f.size()) continue;
    if (!(dst.d[n] * f[n] == f[m] * src.d[n])) bad.push_back(n);
  }
  return bad;
}

CoinvariantComplex coinvariant_complex(const Complex& c) {
  if (c.action.size() != c.dims.size()) throw StructuralError("complex carries no group action");
  CoinvariantComplex r;
  r.cx.field = c.field;
  r.cx.cochain = c.cochain;
  for (std::size_t n = 0; n <= c.top(); ++n) {
    const SparseMatrix id = SparseMatrix::identity(c.field, c.dims[n]);
    SparseMatrix span(c.field, c.dims[n], 0);
    for (std::size_t s = 1; s < c.action[n].size(); ++s) span = span.hstack(c.action[n][s] - id);
    r.q.push_back(quotient_by_span(span));
    r.cx.dims.push_back(r.q.back().dim());
  }
  for (std::size_t n = 0; n <= c.top(); ++n)
    r.cx.d.push_back(inside(c, n) ? r.q[c.next(n)].projection * c.d[n] * r.q[n].section
                                  : outer_map(c.field, r.cx.dims[n]));
  require_dd_zero(r.cx, "coinvariant complex");
  return r;
}

InvariantComplex invariant_complex(const Complex& c) {
  if (c.action.size() != c.dims.size()) throw StructuralError("complex carries no group action");
  InvariantComplex r;
  r.cx.field = c.field;
  r.cx.cochain = c.cochain;
  for (std::size_t n = 0; n <= c.top(); ++n) {
    const SparseMatrix id = SparseMatrix::identity(c.field, c.dims[n]);
    std::vector<SparseMatrix> blocks;
    for (std::size_t s = 1; s < c.action[n].size(); ++s) blocks.push_back(c.action[n][s] - id);
    r.sub.push_back(blocks.empty() ? kernel(SparseMatrix(c.field, 0, c.dims[n]))
                                   : kernel(vstack(blocks, c.field, c.dims[n])));
    r.cx.dims.push_back(r.sub.back().dim());
  }
  for (std::size_t n = 0; n <= c.top(); ++n)
    r.cx.d.push_back(inside(c, n) ? r.sub[c.next(n)].coordinates(c.d[n] * r.sub[n].basis)
                                  : outer_map(c.field, r.cx.dims[n]));
  require_dd_zero(r.cx, "invariant complex");
  return r;
}

}  // namespace hmcat
