#include "hmcat/cohomology.hpp"

#include <functional>
#include <map>

namespace hmcat {

namespace {

constexpr auto none = static_cast<std::size_t>(-1);

std::uint64_t path_key(const CochainComplex& cc, const Path& p) {
  if (p.arrows.empty()) return p.start;
  return tuple_key(p.arrows, std::max<std::size_t>(cc.cat->dim(), 1));
}

std::vector<std::size_t> invert_keep(const std::vector<std::size_t>& keep, std::size_t n) {
  std::vector<std::size_t> inv(n, none);
  for (std::size_t i = 0; i < keep.size(); ++i) inv[keep[i]] = i;
  return inv;
}

SparseVector embed(const SparseVector& v, const std::vector<std::size_t>& keep) {
  SparseVector out;
  for (const auto& [i, a] : v) out.emplace_back(keep[i], a);
  normalize(out);
  return out;
}

/// nullopt when some entry lies outside the kept basis.
std::optional<SparseVector> restrict_vec(const SparseVector& v, const std::vector<std::size_t>& inv) {
  SparseVector out;
  for (const auto& [i, a] : v) {
    if (inv[i] == none) return std::nullopt;
    out.emplace_back(inv[i], a);
  }
  normalize(out);
  return out;
}

bool same_vec(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

/// Visits basis pairs (m, i), (n, j) with m + n ≤ limit, capped per (m, n).
void for_pairs(const CochainComplex& cc, const PairBudget& b,
               const std::function<bool(std::size_t)>& keep_elem_m,
               const std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)>& fn,
               const std::vector<std::vector<std::size_t>>* only = nullptr) {
  const std::size_t limit = std::min(b.max_total, cc.cx.top());
  for (std::size_t m = 0; m <= limit; ++m)
    for (std::size_t n = 0; m + n <= limit; ++n) {
      std::size_t count = 0;
      const std::size_t dm = only ? (*only)[m].size() : cc.cx.dims[m];
      const std::size_t dn = only ? (*only)[n].size() : cc.cx.dims[n];
      for (std::size_t i = 0; i < dm && count < b.max_pairs; ++i) {
        const std::size_t ei = only ? (*only)[m][i] : i;
        if (!keep_elem_m(ei)) continue;
        for (std::size_t j = 0; j < dn && count < b.max_pairs; ++j, ++count)
          fn(m, ei, n, only ? (*only)[n][j] : j);
      }
    }
}

SparseVector unit_vec(Field f, std::size_t i) { return {{i, Scalar::one(f)}}; }

}  // namespace

std::size_t CochainComplex::end(std::size_t n, std::size_t p) const {
  const Path& path = paths[n][p];
  return path.arrows.empty() ? path.start : cat->basis(path.arrows.back()).target;
}

std::optional<std::size_t> CochainComplex::find_path(std::size_t n, const Path& p) const {
  if (n >= index.size()) return std::nullopt;
  auto it = index[n].find(path_key(*this, p));
  if (it == index[n].end()) return std::nullopt;
  return it->second;
}

std::size_t CochainComplex::element(std::size_t n, std::size_t p, std::size_t h) const {
  return offset[n][p] + cat->position(h);
}

CochainComplex cochain_complex(CatPtr c, std::size_t N, const BuildLimits& limits) {
  const std::size_t top = N + 1;
  {
    long double cap = 1;
    for (std::size_t i = 0; i <= top; ++i) cap *= static_cast<long double>(std::max<std::size_t>(c->dim(), 1));
    if (cap > 1.8e19L) throw ResourceError("path keys overflow for this category and degree");
  }
  CochainComplex cc;
  cc.cat = c;
  cc.cx.field = c->field();
  cc.cx.cochain = true;
  std::vector<std::vector<std::size_t>> out(c->num_objects());
  for (std::size_t f = 0; f < c->dim(); ++f) out[c->basis(f).source].push_back(f);

  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<Path> ps;
    std::vector<std::size_t> offs, bp, bo;
    std::size_t total = 0;
    auto emit = [&](std::size_t start, const Tuple& arrows, std::size_t end) {
      const auto& block = c->hom(end, start);
      if (block.empty()) return;
      offs.push_back(total);
      for (auto h : block) {
        bp.push_back(ps.size());
        bo.push_back(h);
      }
      total += block.size();
      if (total > limits.max_dim)
        throw ResourceError("cochain space of degree " + std::to_string(n) + " exceeds " +
                            std::to_string(limits.max_dim));
      ps.push_back({start, arrows});
    };
    if (n == 0) {
      for (std::size_t x = 0; x < c->num_objects(); ++x) emit(x, {}, x);
    } else {
      Tuple t(n);
      std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t cur,
                                                                            std::size_t start) {
        if (i == n) {
          emit(start, t, cur);
          return;
        }
        for (auto f : out[cur]) {
          t[i] = f;
          rec(i + 1, c->basis(f).target, start);
        }
      };
      for (std::size_t x = 0; x < c->num_objects(); ++x) rec(0, x, x);
    }
    cc.paths.push_back(std::move(ps));
    cc.offset.push_back(std::move(offs));
    cc.basis_path.push_back(std::move(bp));
    cc.basis_out.push_back(std::move(bo));
    cc.cx.dims.push_back(total);
    cc.index.emplace_back();
    auto& idx = cc.index.back();
    for (std::size_t p = 0; p < cc.paths[n].size(); ++p) idx.emplace(path_key(cc, cc.paths[n][p]), p);
  }

  const Field fld = c->field();
  const Scalar one = Scalar::one(fld), minus = -one;
  for (std::size_t n = 0; n < top; ++n) {
    std::vector<Triplet> tr;
    auto col_of = [&](const Path& p, std::size_t h) -> std::size_t {
      auto q = cc.find_path(n, p);
      if (!q) return none;
      return cc.element(n, *q, h);
    };
    for (std::size_t qi = 0; qi < cc.paths[n + 1].size(); ++qi) {
      const Path& q = cc.paths[n + 1][qi];
      const Tuple& a = q.arrows;  // a[j] = f_{j+1}
      const std::size_t x1 = q.start;
      const std::size_t x2 = c->basis(a[0]).target;
      const std::size_t xn1 = c->basis(a[n]).source;  // x_{n+1}
      const std::size_t xend = cc.end(n + 1, qi);       // x_{n+2}
      auto row = [&](std::size_t k) { return cc.element(n + 1, qi, k); };

      // f_{n+1} φ(f_n, ..., f_1)
      {
        const Path tail{x1, Tuple(a.begin(), a.begin() + n)};
        for (auto h : c->hom(xn1, x1)) {
          const std::size_t col = col_of(tail, h);
          if (col == none) throw StructuralError("coboundary: missing tail path");
          for (const auto& [k, v] : c->comp(a[n], h)) tr.push_back({row(k), col, v});
        }
      }
      // middle terms
      for (std::size_t i = 1; i <= n; ++i) {
        const LinComb& fi = c->comp(a[i], a[i - 1]);
        const Scalar sign = (n + 1 - i) % 2 ? minus : one;
        for (const auto& [k, v] : fi) {
          Path p{x1, {}};
          for (std::size_t j = 0; j + 1 < i; ++j) p.arrows.push_back(a[j]);
          p.arrows.push_back(k);
          for (std::size_t j = i + 1; j <= n; ++j) p.arrows.push_back(a[j]);
          for (auto h : c->hom(xend, x1)) {
            const std::size_t col = col_of(p, h);
            if (col == none) throw StructuralError("coboundary: missing contracted path");
            tr.push_back({row(h), col, sign * v});
          }
        }
      }
      // φ(f_{n+1}, ..., f_2) f_1
      {
        const Path head{x2, Tuple(a.begin() + 1, a.end())};
        const Scalar sign = (n + 1) % 2 ? minus : one;
        for (auto h : c->hom(xend, x2)) {
          const std::size_t col = col_of(head, h);
          if (col == none) throw StructuralError("coboundary: missing head path");
          for (const auto& [k, v] : c->comp(h, a[0])) tr.push_back({row(k), col, sign * v});
        }
      }
    }
    cc.cx.d.push_back(SparseMatrix::from_triplets(fld, cc.cx.dims[n + 1], cc.cx.dims[n], std::move(tr)));
  }
  cc.cx.d.emplace_back(fld, 0, cc.cx.dims[top]);
  require_dd_zero(cc.cx, "cochain complex");
  return cc;
}

Subspace center(const CochainComplex& cc) {
  const LinCat& c = *cc.cat;
  std::vector<Triplet> tr;
  std::size_t row0 = 0;
  const Scalar one = Scalar::one(c.field());
  for (std::size_t g = 0; g < c.dim(); ++g) {
    const std::size_t x = c.basis(g).source, y = c.basis(g).target;
    const auto& block = c.hom(y, x);
    // g ∘ f_x
    if (auto px = cc.find_path(0, Path{x, {}}))
      for (auto h : c.hom(x, x))
        for (const auto& [k, v] : c.comp(g, h)) tr.push_back({row0 + c.position(k), cc.element(0, *px, h), v});
    // - f_y ∘ g
    if (auto py = cc.find_path(0, Path{y, {}}))
      for (auto h : c.hom(y, y))
        for (const auto& [k, v] : c.comp(h, g)) tr.push_back({row0 + c.position(k), cc.element(0, *py, h), -v});
    row0 += block.size();
  }
  return kernel(SparseMatrix::from_triplets(c.field(), row0, cc.cx.dims[0], std::move(tr)));
}

SparseVector cup(const CochainComplex& cc, std::size_t m, const SparseVector& psi, std::size_t n,
                 const SparseVector& phi) {
  if (m + n > cc.cx.top()) throw StructuralError("cup product beyond the complex");
  const LinCat& c = *cc.cat;
  SparseVector out;
  for (const auto& [i, a] : psi) {
    const Path& p1 = cc.paths[m][cc.basis_path[m][i]];
    const std::size_t h1 = cc.basis_out[m][i];
    for (const auto& [j, b] : phi) {
      const std::size_t p2i = cc.basis_path[n][j];
      if (cc.end(n, p2i) != p1.start) continue;
      const Path& p2 = cc.paths[n][p2i];
      const LinComb& v = c.comp(h1, cc.basis_out[n][j]);
      if (v.empty()) continue;
      Path p{p2.start, p2.arrows};
      p.arrows.insert(p.arrows.end(), p1.arrows.begin(), p1.arrows.end());
      auto q = cc.find_path(m + n, p);
      if (!q) throw StructuralError("cup product lands outside the cochain basis");
      for (const auto& [k, x] : v) out.emplace_back(cc.element(m + n, *q, k), a * b * x);
    }
  }
  normalize(out);
  return out;
}

SparseVector unit_cochain(const CochainComplex& cc) {
  SparseVector u;
  for (std::size_t x = 0; x < cc.cat->num_objects(); ++x) {
    auto p = cc.find_path(0, Path{x, {}});
    if (!p) continue;
    for (const auto& [h, v] : cc.cat->identity(x)) u.emplace_back(cc.element(0, *p, h), v);
  }
  normalize(u);
  return u;
}

void attach_g_action_cochains(CochainComplex& cc, const GroupAction& a) {
  if (a.cat.get() != cc.cat.get() && !same_structure(*a.cat, *cc.cat))
    throw StructuralError("action and complex are on different categories");
  const Field fld = cc.cx.field;
  const FiniteGroup& g = a.group;
  cc.cx.action.clear();
  for (std::size_t n = 0; n <= cc.cx.top(); ++n) {
    std::vector<SparseMatrix> mats;
    for (std::size_t s = 0; s < g.size(); ++s) {
      const std::size_t sinv = g.inverse(s);
      std::vector<Triplet> tr;
      for (std::size_t pi = 0; pi < cc.paths[n].size(); ++pi) {
        const Path& p = cc.paths[n][pi];
        const std::size_t start = a.act(sinv, p.start);
        auto visit = [&](const Path& q, const Scalar& c) {
          auto qi = cc.find_path(n, q);
          if (!qi) return;
          for (auto h : cc.cat->hom(cc.end(n, *qi), q.start))
            for (const auto& [k, x] : a.image(s, h))
              tr.push_back({cc.element(n, pi, k), cc.element(n, *qi, h), c * x});
        };
        if (n == 0) {
          visit(Path{start, {}}, Scalar::one(fld));
        } else {
          std::vector<LinComb> fac;
          for (auto f : p.arrows) fac.push_back(a.image(sinv, f));
          expand_tensor(fac, fld, [&](const Tuple& t, const Scalar& c) { visit(Path{start, t}, c); });
        }
      }
      mats.push_back(SparseMatrix::from_triplets(fld, cc.cx.dims[n], cc.cx.dims[n], std::move(tr)));
    }
    cc.cx.action.push_back(std::move(mats));
  }
  const auto bad = equivariance_failures(cc.cx);
  if (!bad.empty())
    throw InvalidInput("action does not commute with the coboundary in degree " +
                       std::to_string(bad.front().first));
}

std::vector<std::string> cup_equivariance_failures(const CochainComplex& cc, const PairBudget& b) {
  std::vector<std::string> bad;
  if (cc.cx.action.empty()) throw StructuralError("cochain complex carries no action");
  for_pairs(cc, b, [](std::size_t) { return true; },
            [&](std::size_t m, std::size_t i, std::size_t n, std::size_t j) {
              for (std::size_t s = 1; s < cc.cx.action[0].size(); ++s) {
                const SparseVector lhs =
                    cc.cx.action[m + n][s].apply(cup(cc, m, unit_vec(cc.cx.field, i), n, unit_vec(cc.cx.field, j)));
                const SparseVector rhs = cup(cc, m, cc.cx.action[m][s].column(i), n, cc.cx.action[n][s].column(j));
                if (!same_vec(lhs, rhs))
                  bad.push_back("degrees (" + std::to_string(m) + "," + std::to_string(n) + ") elements (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
              }
            });
  return bad;
}

void class_decomposition_cochains(CochainComplex& cc, const Grading& gr, const ConjClasses& classes) {
  if (gr.degree.size() != cc.cat->dim()) throw StructuralError("grading does not match the complex");
  const FiniteGroup& g = gr.group;
  cc.cx.cls.clear();
  for (std::size_t n = 0; n <= cc.cx.top(); ++n) {
    std::vector<std::size_t> cl;
    for (std::size_t e = 0; e < cc.cx.dims[n]; ++e) {
      const Path& p = cc.paths[n][cc.basis_path[n][e]];
      std::size_t prod = 0;
      for (std::size_t j = p.arrows.size(); j-- > 0;) prod = g.mul(prod, gr.degree[p.arrows[j]]);
      prod = g.mul(prod, g.inverse(gr.degree[cc.basis_out[n][e]]));
      cl.push_back(classes.class_of[prod]);
    }
    cc.cx.cls.push_back(std::move(cl));
  }
  cc.cx.num_classes = classes.size();
  const auto bad = cross_class_failures(cc.cx);
  if (!bad.empty())
    throw InvalidInput("coboundary mixes class types in degree " + std::to_string(bad.front()));
}

std::vector<std::string> cup_class_failures(const CochainComplex& cc, const PairBudget& b) {
  if (cc.cx.cls.empty()) throw StructuralError("cochain complex carries no class decomposition");
  std::vector<std::vector<std::size_t>> ones(cc.cx.dims.size());
  for (std::size_t n = 0; n < ones.size(); ++n)
    for (std::size_t e = 0; e < cc.cx.dims[n]; ++e)
      if (cc.cx.cls[n][e] == 0) ones[n].push_back(e);
  std::vector<std::string> bad;
  for_pairs(cc, b, [](std::size_t) { return true; },
            [&](std::size_t m, std::size_t i, std::size_t n, std::size_t j) {
              for (const auto& [k, _] : cup(cc, m, unit_vec(cc.cx.field, i), n, unit_vec(cc.cx.field, j)))
                if (cc.cx.cls[m + n][k] != 0) {
                  bad.push_back("class-{1} elements " + std::to_string(i) + " (degree " + std::to_string(m) +
                                ") and " + std::to_string(j) + " (degree " + std::to_string(n) + ")");
                  return;
                }
            },
            &ones);
  return bad;
}

Transport transport_cochains(const LinFunctor& F, const CochainComplex& src, const CochainComplex& dst,
                             const PairBudget& b) {
  if (F.source().get() != src.cat.get() || F.target().get() != dst.cat.get())
    throw StructuralError("transport: complexes are not built on the functor's categories");
  const Field fld = src.cx.field;
  const LinCat& c = *src.cat;
  const LinCat& d = *dst.cat;
  std::map<std::pair<std::size_t, std::size_t>, SparseMatrix> inv;
  auto block_inverse = [&](std::size_t y, std::size_t x) -> const SparseMatrix& {
    auto it = inv.find({y, x});
    if (it != inv.end()) return it->second;
    const SparseMatrix m = F.block(y, x);
    if (m.rows() != m.cols() || rank(m) != m.rows())
      throw InvalidInput("functor is not full and faithful on " + c.object(x) + " -> " + c.object(y));
    return inv.emplace(std::make_pair(y, x), inverse(m)).first->second;
  };
  Transport t;
  const std::size_t top = std::min(src.cx.top(), dst.cx.top());
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<Triplet> tr;
    for (std::size_t qi = 0; qi < src.paths[n].size(); ++qi) {
      const Path& q = src.paths[n][qi];
      const std::size_t x = q.start, y = src.end(n, qi);
      const SparseMatrix& finv = block_inverse(y, x);
      const auto& sblock = c.hom(y, x);
      auto visit = [&](const Path& p, const Scalar& coef) {
        auto pi = dst.find_path(n, p);
        if (!pi) return;
        for (auto k : d.hom(F.object(y), F.object(x)))
          for (const auto& [r, v] : finv.column(d.position(k)))
            tr.push_back({src.element(n, qi, sblock[r]), dst.element(n, *pi, k), coef * v});
      };
      if (n == 0) {
        visit(Path{F.object(x), {}}, Scalar::one(fld));
      } else {
        std::vector<LinComb> fac;
        for (auto f : q.arrows) fac.push_back(F.image(f));
        expand_tensor(fac, fld, [&](const Tuple& tu, const Scalar& coef) { visit(Path{F.object(x), tu}, coef); });
      }
    }
    t.map.push_back(SparseMatrix::from_triplets(fld, src.cx.dims[n], dst.cx.dims[n], std::move(tr)));
  }
  t.chain_failures = chain_map_failures(t.map, dst.cx, src.cx, top);
  for_pairs(dst, PairBudget{std::min(b.max_total, top), b.max_pairs}, [](std::size_t) { return true; },
            [&](std::size_t m, std::size_t i, std::size_t n, std::size_t j) {
              const SparseVector lhs = t.map[m + n].apply(cup(dst, m, unit_vec(fld, i), n, unit_vec(fld, j)));
              const SparseVector rhs = cup(src, m, t.map[m].column(i), n, t.map[n].column(j));
              if (!same_vec(lhs, rhs))
                t.cup_failures.push_back("degrees (" + std::to_string(m) + "," + std::to_string(n) +
                                         ") elements (" + std::to_string(i) + "," + std::to_string(j) + ")");
            });
  if (!src.cx.action.empty() && !dst.cx.action.empty())
    for (std::size_t n = 0; n <= top; ++n)
      for (std::size_t s = 0; s < src.cx.action[n].size(); ++s)
        if (!(t.map[n] * dst.cx.action[n][s] == src.cx.action[n][s] * t.map[n]))
          t.equivariance_failures.emplace_back(n, s);
  return t;
}

bool CohomologyTransfer::ok() const {
  for (bool b : ab_identity)
    if (!b) return false;
  for (bool b : ba_identity)
    if (!b) return false;
  return a_chain_failures.empty() && b_chain_failures.empty() && a_cup_failures.empty();
}

CohomologyTransfer transfer_maps_cohomology(const GroupAction& a, const OrbitData& o, std::size_t N,
                                            const BuildLimits& limits, const PairBudget& budget) {
  if (!o.free) throw NonFreeAction("transfer maps need a free action; use the resolving category");
  const LinCat& c = *a.cat;
  const FiniteGroup& g = a.group;
  const Field fld = c.field();
  const std::size_t dc = c.dim();

  CochainComplex cc = cochain_complex(a.cat, N, limits);
  attach_g_action_cochains(cc, a);
  CohomologyTransfer r;
  r.max_degree = N;
  r.source = invariant_complex(cc.cx);

  const SkewResult skew = skew_category(a);
  const TransversalResult tr = transversal_subcategory(skew, a, o);
  r.target_full = cochain_complex(tr.cat, N, limits);
  class_decomposition_cochains(r.target_full, tr.grading, conjugacy_classes(g));
  r.target = restrict_to_class(r.target_full.cx, 0);
  const CochainComplex& tc = r.target_full;
  const LinCat& tcat = *tr.cat;

  std::vector<std::size_t> t_index(dc * g.size(), none);
  std::vector<std::pair<std::size_t, std::size_t>> t_origin(tcat.dim());
  for (std::size_t j = 0; j < tcat.dim(); ++j) {
    const std::size_t sk = tr.inclusion.image(j).front().first;
    t_index[sk] = j;
    t_origin[j] = skew.origin[sk];
  }
  std::vector<std::size_t> t_object(c.num_objects(), none);
  for (std::size_t al = 0; al < o.transversal.size(); ++al) t_object[o.transversal[al]] = al;

  std::vector<SparseMatrix> a_full;
  for (std::size_t n = 0; n <= N; ++n) {
    const auto inv = invert_keep(r.target.keep[n], tc.cx.dims[n]);
    // A: (Aψ)(f_n, ..., f_1) = ψ(f_n, s_n f_{n-1}, s_n s_{n-1} f_{n-2}, ...).
    std::vector<Triplet> ta;
    for (std::size_t pi = 0; pi < tc.paths[n].size(); ++pi) {
      const Path& p = tc.paths[n][pi];
      const std::size_t u1 = tr.objects[p.start];
      std::vector<LinComb> fac(n);
      std::size_t prefix = 0;
      for (std::size_t i = n; i-- > 0;) {
        const auto [h, si] = t_origin[p.arrows[i]];
        fac[i] = a.image(prefix, h);
        prefix = g.mul(prefix, si);
      }
      const std::size_t total = prefix;  // s_n ⋯ s_1
      auto visit = [&](const Path& q, const Scalar& coef) {
        auto qi = cc.find_path(n, q);
        if (!qi) return;
        for (auto h : c.hom(cc.end(n, *qi), q.start)) {
          const std::size_t j = t_index[total * dc + h];
          if (j == none) throw StructuralError("transfer A: output outside the transversal subcategory");
          const std::size_t row = inv[tc.element(n, pi, j)];
          if (row == none) throw InvalidInput("transfer A leaves the class-{1} cochains");
          ta.push_back({row, cc.element(n, *qi, h), coef});
        }
      };
      const std::size_t start = a.act(total, u1);
      if (n == 0)
        visit(Path{u1, {}}, Scalar::one(fld));
      else
        expand_tensor(fac, fld, [&](const Tuple& t, const Scalar& coef) { visit(Path{start, t}, coef); });
    }
    a_full.push_back(SparseMatrix::from_triplets(fld, r.target.dims[n], cc.cx.dims[n], std::move(ta)));
    r.A.push_back(a_full.back() * r.source.sub[n].basis);

    // B: at x_i = s_i u_i, (Bφ)(g_n, ..., g_1) = s_{n+1} φ(s_{n+1}⁻¹g_n, ..., s_2⁻¹g_1).
    std::vector<Triplet> tb;
    for (std::size_t qi = 0; qi < cc.paths[n].size(); ++qi) {
      const Path& q = cc.paths[n][qi];
      const std::size_t x1 = q.start, xl = cc.end(n, qi);
      const std::size_t s1 = o.witness[x1], sl = o.witness[xl];
      const std::size_t outdeg = g.mul(g.inverse(sl), s1);
      std::vector<LinComb> fac(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& bv = c.basis(q.arrows[i]);
        const std::size_t si = o.witness[bv.source], snext = o.witness[bv.target];
        const std::size_t deg = g.mul(g.inverse(snext), si);
        for (const auto& [h, v] : a.image(g.inverse(snext), q.arrows[i])) {
          const std::size_t j = t_index[deg * dc + h];
          if (j == none) throw StructuralError("transfer B: argument outside the transversal subcategory");
          fac[i].emplace_back(j, v);
        }
        normalize(fac[i]);
      }
      auto visit = [&](const Path& p, const Scalar& coef) {
        auto pi = tc.find_path(n, p);
        if (!pi) return;
        for (auto k : tcat.hom(tc.end(n, *pi), p.start)) {
          const auto [h, deg] = t_origin[k];
          if (deg != outdeg) continue;
          const std::size_t col = inv[tc.element(n, *pi, k)];
          if (col == none) throw InvalidInput("transfer B: product-degree output is not of class {1}");
          for (const auto& [hh, v] : a.image(sl, h)) tb.push_back({cc.element(n, qi, hh), col, coef * v});
        }
      };
      const std::size_t start = t_object[o.rep[x1]];
      if (n == 0)
        visit(Path{start, {}}, Scalar::one(fld));
      else
        expand_tensor(fac, fld, [&](const Tuple& t, const Scalar& coef) { visit(Path{start, t}, coef); });
    }
    const SparseMatrix b_full = SparseMatrix::from_triplets(fld, cc.cx.dims[n], r.target.dims[n], std::move(tb));
    r.B.push_back(r.source.sub[n].coordinates(b_full));

    r.ab_identity.push_back(r.A[n] * r.B[n] == SparseMatrix::identity(fld, r.target.dims[n]));
    r.ba_identity.push_back(r.B[n] * r.A[n] == SparseMatrix::identity(fld, r.source.cx.dims[n]));
  }
  r.a_chain_failures = chain_map_failures(r.A, r.source.cx, r.target, N);
  r.b_chain_failures = chain_map_failures(r.B, r.target, r.source.cx, N);

  // Cup multiplicativity of A on invariant basis pairs.
  const std::size_t limit = std::min(budget.max_total, N);
  for (std::size_t m = 0; m <= limit; ++m)
    for (std::size_t n = 0; m + n <= limit; ++n) {
      const auto inv = invert_keep(r.target.keep[m + n], tc.cx.dims[m + n]);
      std::size_t count = 0;
      for (std::size_t i = 0; i < r.source.cx.dims[m] && count < budget.max_pairs; ++i)
        for (std::size_t j = 0; j < r.source.cx.dims[n] && count < budget.max_pairs; ++j, ++count) {
          const SparseVector& psi = r.source.sub[m].basis.column(i);
          const SparseVector& phi = r.source.sub[n].basis.column(j);
          const SparseVector lhs = a_full[m + n].apply(cup(cc, m, psi, n, phi));
          const SparseVector apsi = embed(a_full[m].apply(psi), r.target.keep[m]);
          const SparseVector aphi = embed(a_full[n].apply(phi), r.target.keep[n]);
          const auto rhs = restrict_vec(cup(tc, m, apsi, n, aphi), inv);
          if (!rhs || !same_vec(lhs, *rhs))
            r.a_cup_failures.push_back("invariant basis pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") in degrees (" + std::to_string(m) + "," + std::to_string(n) + ")");
          ++r.cup_pairs_checked;
        }
    }
  return r;
}

}  // namespace hmcat
