#include "hmcat/homology.hpp"

#include <functional>

namespace hmcat {

namespace {

std::uint64_t key_of(const Tuple& t, std::uint64_t base) { return tuple_key(t, base); }

void expand(const std::vector<LinComb>& factors, Field field,
            const std::function<void(const Tuple&, const Scalar&)>& fn) {
  expand_tensor(factors, field, fn);
}

std::vector<std::size_t> invert_keep(const std::vector<std::size_t>& keep, std::size_t n) {
  std::vector<std::size_t> inv(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) inv[keep[i]] = i;
  return inv;
}

}  // namespace

std::uint64_t tuple_key(const Tuple& t, std::uint64_t base) {
  std::uint64_t k = 0, m = 1;
  for (auto f : t) {
    k += f * m;
    m *= base;
  }
  return k;
}

void expand_tensor(const std::vector<LinComb>& factors, Field field,
                   const std::function<void(const Tuple&, const Scalar&)>& fn) {
  Tuple t(factors.size());
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& c) {
    if (i == factors.size()) {
      fn(t, c);
      return;
    }
    for (const auto& [f, a] : factors[i]) {
      t[i] = f;
      rec(i + 1, c * a);
    }
  };
  rec(0, Scalar::one(field));
}

std::optional<std::size_t> ChainComplex::find(const Tuple& t) const {
  if (t.empty() || t.size() > index.size()) return std::nullopt;
  const auto& m = index[t.size() - 1];
  auto it = m.find(key_of(t, cat->dim()));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::string tuple_string(const LinCat& c, const Tuple& t) {
  std::string s;
  for (std::size_t i = t.size(); i-- > 0;) {
    s += c.basis(t[i]).label;
    if (i) s += " ⊗ ";
  }
  return s;
}

ChainComplex bar_complex(CatPtr c, std::size_t N, const BuildLimits& limits) {
  const std::size_t top = N + 1;
  const std::uint64_t base = std::max<std::size_t>(c->dim(), 1);
  {
    long double cap = 1;
    for (std::size_t i = 0; i <= top; ++i) cap *= static_cast<long double>(base);
    if (cap > 1.8e19L) throw ResourceError("tuple keys overflow for this category and degree");
  }
  ChainComplex cc;
  cc.cat = c;
  cc.cx.field = c->field();
  cc.cx.cochain = false;
  std::vector<std::vector<std::size_t>> out(c->num_objects());
  for (std::size_t f = 0; f < c->dim(); ++f) out[c->basis(f).source].push_back(f);

  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<Tuple> ts;
    Tuple t(n + 1);
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t cur,
                                                                          std::size_t x0) {
      if (i == n + 1) {
        if (cur == x0) {
          if (ts.size() >= limits.max_dim)
            throw ResourceError("chain space of degree " + std::to_string(n) + " exceeds " +
                                std::to_string(limits.max_dim) + " tuples");
          ts.push_back(t);
        }
        return;
      }
      for (auto f : out[cur]) {
        t[i] = f;
        rec(i + 1, c->basis(f).target, x0);
      }
    };
    for (std::size_t x = 0; x < c->num_objects(); ++x) rec(0, x, x);
    std::unordered_map<std::uint64_t, std::size_t> idx;
    idx.reserve(ts.size() * 2);
    for (std::size_t i = 0; i < ts.size(); ++i) idx.emplace(key_of(ts[i], base), i);
    cc.cx.dims.push_back(ts.size());
    cc.tuples.push_back(std::move(ts));
    cc.index.push_back(std::move(idx));
  }

  const Field fld = c->field();
  const Scalar one = Scalar::one(fld), minus = -one;
  cc.cx.d.emplace_back(fld, 0, cc.cx.dims[0]);
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<SparseVector> cols;
    cols.reserve(cc.cx.dims[n]);
    Tuple u(n);
    for (const auto& t : cc.tuples[n]) {
      SparseVector col;
      auto add = [&](const Scalar& sign, const LinComb& h, std::size_t pos) {
        for (const auto& [k, a] : h) {
          u[pos] = k;
          auto it = cc.index[n - 1].find(key_of(u, base));
          if (it == cc.index[n - 1].end()) throw StructuralError("boundary leaves the chain basis");
          col.emplace_back(it->second, sign * a);
        }
      };
      for (std::size_t i = 1; i <= n; ++i) {
        const LinComb& h = c->comp(t[i], t[i - 1]);
        if (h.empty()) continue;
        for (std::size_t j = 0; j + 1 < i; ++j) u[j] = t[j];
        for (std::size_t j = i + 1; j <= n; ++j) u[j - 1] = t[j];
        add((n - i) % 2 ? minus : one, h, i - 1);
      }
      const LinComb& h = c->comp(t[0], t[n]);
      if (!h.empty()) {
        for (std::size_t j = 0; j + 1 < n; ++j) u[j] = t[j + 1];
        add(n % 2 ? minus : one, h, n - 1);
      }
      cols.push_back(std::move(col));
    }
    cc.cx.d.push_back(SparseMatrix::from_columns(fld, cc.cx.dims[n - 1], std::move(cols)));
  }
  require_dd_zero(cc.cx, "bar complex");
  return cc;
}

SparseVector tensor_coords(const ChainComplex& cc, const std::vector<LinComb>& factors) {
  SparseVector v;
  const std::size_t n = factors.size() - 1;
  if (n >= cc.index.size()) throw StructuralError("tensor degree beyond the complex");
  const std::uint64_t base = std::max<std::size_t>(cc.cat->dim(), 1);
  expand(factors, cc.cx.field, [&](const Tuple& t, const Scalar& a) {
    auto it = cc.index[n].find(key_of(t, base));
    if (it == cc.index[n].end()) throw StructuralError("term is not a chain of the complex");
    v.emplace_back(it->second, a);
  });
  normalize(v);
  return v;
}

void attach_g_action(ChainComplex& cc, const GroupAction& a) {
  if (a.cat.get() != cc.cat.get() && !same_structure(*a.cat, *cc.cat))
    throw StructuralError("action and complex are on different categories");
  cc.cx.action.clear();
  std::vector<LinComb> fac;
  for (std::size_t n = 0; n <= cc.cx.top(); ++n) {
    std::vector<SparseMatrix> mats;
    for (std::size_t s = 0; s < a.group.size(); ++s) {
      std::vector<SparseVector> cols;
      for (const auto& t : cc.tuples[n]) {
        fac.clear();
        for (auto f : t) fac.push_back(a.image(s, f));
        cols.push_back(tensor_coords(cc, fac));
      }
      mats.push_back(SparseMatrix::from_columns(cc.cx.field, cc.cx.dims[n], std::move(cols)));
    }
    cc.cx.action.push_back(std::move(mats));
  }
  const auto bad = equivariance_failures(cc.cx);
  if (!bad.empty())
    throw InvalidInput("action does not commute with the boundary in degree " + std::to_string(bad.front().first));
}

void class_decomposition(ChainComplex& cc, const Grading& gr, const ConjClasses& classes) {
  if (gr.degree.size() != cc.cat->dim()) throw StructuralError("grading does not match the complex");
  cc.cx.cls.clear();
  for (std::size_t n = 0; n <= cc.cx.top(); ++n) {
    std::vector<std::size_t> cl;
    cl.reserve(cc.tuples[n].size());
    for (const auto& t : cc.tuples[n]) {
      std::size_t p = gr.degree[t[n]];
      for (std::size_t i = n; i-- > 0;) p = gr.group.mul(p, gr.degree[t[i]]);
      cl.push_back(classes.class_of[p]);
    }
    cc.cx.cls.push_back(std::move(cl));
  }
  cc.cx.num_classes = classes.size();
  const auto bad = cross_class_failures(cc.cx);
  if (!bad.empty())
    throw InvalidInput("boundary mixes conjugacy classes in degree " + std::to_string(bad.front()));
}

ComplexMap functor_chain_map(const LinFunctor& F, const ChainComplex& src, const ChainComplex& dst) {
  ComplexMap m;
  std::vector<LinComb> fac;
  const std::size_t top = std::min(src.cx.top(), dst.cx.top());
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<SparseVector> cols;
    for (const auto& t : src.tuples[n]) {
      fac.clear();
      for (auto f : t) fac.push_back(F.image(f));
      cols.push_back(tensor_coords(dst, fac));
    }
    m.push_back(SparseMatrix::from_columns(src.cx.field, dst.cx.dims[n], std::move(cols)));
  }
  return m;
}

bool HomologyTransfer::ok() const {
  for (bool b : ab_identity)
    if (!b) return false;
  for (bool b : ba_identity)
    if (!b) return false;
  return a_chain_failures.empty() && b_chain_failures.empty();
}

HomologyTransfer transfer_maps_homology(const GroupAction& a, const OrbitData& o, std::size_t N,
                                        const BuildLimits& limits) {
  if (!o.free) throw NonFreeAction("transfer maps need a free action; use the resolving category");
  const LinCat& c = *a.cat;
  const FiniteGroup& g = a.group;
  const Field fld = c.field();
  const std::size_t dc = c.dim();
  constexpr auto none = static_cast<std::size_t>(-1);

  ChainComplex cc = bar_complex(a.cat, N, limits);
  attach_g_action(cc, a);
  HomologyTransfer r;
  r.max_degree = N;
  r.source = coinvariant_complex(cc.cx);

  const SkewResult skew = skew_category(a);
  const TransversalResult tr = transversal_subcategory(skew, a, o);
  r.target_full = bar_complex(tr.cat, N, limits);
  class_decomposition(r.target_full, tr.grading, conjugacy_classes(g));
  r.target = restrict_to_class(r.target_full.cx, 0);

  // C_T[G] basis index of f@s, and the reverse.
  std::vector<std::size_t> t_index(dc * g.size(), none);
  std::vector<std::pair<std::size_t, std::size_t>> t_origin(tr.cat->dim());
  for (std::size_t j = 0; j < tr.cat->dim(); ++j) {
    const std::size_t sk = tr.inclusion.image(j).front().first;
    t_index[sk] = j;
    t_origin[j] = skew.origin[sk];
  }

  std::vector<LinComb> fac;
  for (std::size_t n = 0; n <= N; ++n) {
    const auto inv = invert_keep(r.target.keep[n], r.target_full.cx.dims[n]);
    // A on all of C_n, then restricted to the section of the coinvariants.
    std::vector<SparseVector> cols;
    for (const auto& t : cc.tuples[n]) {
      const std::size_t rinv = g.inverse(o.witness[c.basis(t[0]).source]);
      fac.clear();
      for (auto f : t) fac.push_back(a.image(rinv, f));
      SparseVector col;
      expand(fac, fld, [&](const Tuple& anchored, const Scalar& coef) {
        std::vector<LinComb> img(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
          const std::size_t si = o.witness[c.basis(anchored[i]).source];
          const std::size_t snext = i == n ? 0 : o.witness[c.basis(anchored[i + 1]).source];
          const std::size_t deg = g.mul(g.inverse(snext), si);
          for (const auto& [h, x] : a.image(g.inverse(snext), anchored[i])) {
            const std::size_t j = t_index[deg * dc + h];
            if (j == none) throw StructuralError("transfer A leaves the transversal subcategory");
            img[i].emplace_back(j, x);
          }
          normalize(img[i]);
        }
        for (const auto& [k, x] : tensor_coords(r.target_full, img)) {
          if (inv[k] == none) throw InvalidInput("transfer A leaves the class-{1} subcomplex");
          col.emplace_back(inv[k], coef * x);
        }
      });
      normalize(col);
      cols.push_back(std::move(col));
    }
    const SparseMatrix a_full = SparseMatrix::from_columns(fld, r.target.dims[n], std::move(cols));
    const SparseMatrix id = SparseMatrix::identity(fld, cc.cx.dims[n]);
    for (std::size_t s = 1; s < g.size(); ++s)
      if (!(a_full * (cc.cx.action[n][s] - id)).is_zero())
        throw InvalidInput("transfer A does not factor through the coinvariants in degree " + std::to_string(n));
    r.A.push_back(a_full * r.source.q[n].section);

    std::vector<SparseVector> bcols;
    for (auto k : r.target.keep[n]) {
      const Tuple& t = r.target_full.tuples[n][k];
      fac.assign(n + 1, {});
      std::size_t prefix = 0;
      for (std::size_t i = n + 1; i-- > 0;) {
        const auto [h, ti] = t_origin[t[i]];
        fac[i] = a.image(prefix, h);
        prefix = g.mul(prefix, ti);
      }
      bcols.push_back(r.source.q[n].projection.apply(tensor_coords(cc, fac)));
    }
    r.B.push_back(SparseMatrix::from_columns(fld, r.source.cx.dims[n], std::move(bcols)));

    r.ab_identity.push_back(r.A[n] * r.B[n] == SparseMatrix::identity(fld, r.target.dims[n]));
    r.ba_identity.push_back(r.B[n] * r.A[n] == SparseMatrix::identity(fld, r.source.cx.dims[n]));
  }
  r.a_chain_failures = chain_map_failures(r.A, r.source.cx, r.target, N);
  r.b_chain_failures = chain_map_failures(r.B, r.target, r.source.cx, N);
  return r;
}

}  // namespace hmcat
