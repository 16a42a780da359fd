#include "hmcat/constructions.hpp"

#include <map>
#include <memory>

namespace hmcat {

namespace {

bool same_comb(const LinComb& a, const LinComb& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

LinComb relabel(const LinComb& v, const std::vector<std::size_t>& to) {
  LinComb out;
  out.reserve(v.size());
  for (const auto& [i, a] : v) {
    if (to.at(i) == static_cast<std::size_t>(-1))
      throw StructuralError("combination leaves the target basis");
    out.emplace_back(to[i], a);
  }
  normalize(out);
  return out;
}

}  // namespace

std::vector<std::string> validate_grading(const Grading& gr) {
  const LinCat& c = *gr.cat;
  if (gr.degree.size() != c.dim()) throw StructuralError("grading does not cover the basis");
  for (auto d : gr.degree)
    if (d >= gr.group.size()) throw StructuralError("degree out of range");
  std::vector<std::string> report;
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    for (const auto& [i, _] : c.identity(x))
      if (gr.degree[i] != 0) report.push_back("identity of " + c.object(x) + " is not in degree 1");
  for (std::size_t f = 0; f < c.dim(); ++f)
    for (std::size_t g = 0; g < c.dim(); ++g) {
      if (c.basis(g).source != c.basis(f).target) continue;
      const std::size_t want = gr.group.mul(gr.degree[g], gr.degree[f]);
      for (const auto& [h, _] : c.comp(g, f))
        if (gr.degree[h] != want)
          report.push_back(c.basis(g).label + "∘" + c.basis(f).label + " has a term " +
                           c.basis(h).label + " outside degree " + gr.group.label(want));
    }
  return report;
}

Grading trivial_grading(const FiniteGroup& g, CatPtr c) {
  std::vector<std::size_t> deg(c->dim(), 0);
  return Grading{g, std::move(c), std::move(deg)};
}

SkewResult skew_category(const GroupAction& a) {
  const auto problems = validate_action(a);
  if (!problems.empty()) throw InvalidInput("invalid action: " + problems.front());
  const LinCat& c = *a.cat;
  const FiniteGroup& g = a.group;
  const std::size_t d = c.dim();
  auto sk = std::make_shared<LinCat>(c.field(), c.objects());
  SkewResult r{sk, Grading{g, sk, {}}, {}};
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t f = 0; f < d; ++f) {
      const auto& b = c.basis(f);
      const std::size_t x = a.act(g.inverse(s), b.source);
      sk->add_basis(b.label + "@" + g.label(s), x, b.target);
      r.grading.degree.push_back(s);
      r.origin.emplace_back(f, s);
    }
  auto at_degree = [&](const LinComb& v, std::size_t s) {
    LinComb out;
    for (const auto& [h, x] : v) out.emplace_back(s * d + h, x);
    return out;
  };
  for (std::size_t i1 = 0; i1 < sk->dim(); ++i1)
    for (std::size_t i2 = 0; i2 < sk->dim(); ++i2) {
      if (sk->basis(i2).source != sk->basis(i1).target) continue;
      const auto [f, s] = r.origin[i1];
      const auto [gv, t] = r.origin[i2];
      const LinComb h = c.compose(LinComb{{gv, Scalar::one(c.field())}}, a.image(t, f));
      if (!h.empty()) sk->set_comp(i2, i1, at_degree(h, g.mul(t, s)));
    }
  for (std::size_t x = 0; x < c.num_objects(); ++x) sk->set_identity(x, at_degree(c.identity(x), 0));
  return r;
}

std::vector<std::string> check_orbit_isomorphisms(const GroupAction& a, const SkewResult& skew) {
  const LinCat& c = *a.cat;
  const LinCat& sk = *skew.cat;
  const FiniteGroup& g = a.group;
  const std::size_t d = c.dim();
  std::vector<std::string> report;
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    for (std::size_t t = 0; t < g.size(); ++t) {
      const std::size_t tx = a.act(t, x);
      LinComb ma, mb;
      for (const auto& [h, v] : c.identity(tx)) ma.emplace_back(t * d + h, v);
      for (const auto& [h, v] : c.identity(x)) mb.emplace_back(g.inverse(t) * d + h, v);
      if (!same_comb(sk.compose(ma, mb), sk.identity(tx)) || !same_comb(sk.compose(mb, ma), sk.identity(x)))
        report.push_back(c.object(x) + " and " + g.label(t) + "·" + c.object(x) +
                         ": orbit morphisms are not mutually inverse");
    }
  return report;
}

QuotientResult quotient_category(const GroupAction& a, const OrbitData& o) {
  if (!o.free)
    throw NonFreeAction("the quotient C/G needs a free action; build resolving_category first");
  const LinCat& c = *a.cat;
  const FiniteGroup& g = a.group;
  const Field fld = c.field();
  const std::size_t norb = o.orbits.size();
  constexpr auto none = static_cast<std::size_t>(-1);

  std::vector<std::string> names;
  for (auto u : o.transversal) names.push_back("[" + c.object(u) + "]");
  auto q = std::make_shared<LinCat>(fld, names);
  std::vector<std::size_t> to_q(c.dim(), none), origin, degree;
  for (std::size_t f = 0; f < c.dim(); ++f) {
    const auto& b = c.basis(f);
    if (o.rep[b.target] != b.target) continue;
    to_q[f] = q->add_basis(b.label, o.orbit_of[b.source], o.orbit_of[b.target]);
    origin.push_back(f);
    degree.push_back(o.witness[b.source]);
  }

  // The homogeneous basis must be a basis of the coinvariants of each
  // orbit-pair block.
  for (std::size_t al = 0; al < norb; ++al)
    for (std::size_t be = 0; be < norb; ++be) {
      std::vector<std::size_t> block, where(c.dim(), none);
      for (std::size_t f = 0; f < c.dim(); ++f)
        if (o.orbit_of[c.basis(f).source] == al && o.orbit_of[c.basis(f).target] == be) {
          where[f] = block.size();
          block.push_back(f);
        }
      std::vector<SparseMatrix> mats;
      for (std::size_t s = 0; s < g.size(); ++s) {
        std::vector<SparseVector> cols;
        for (auto f : block) cols.push_back(relabel(a.image(s, f), where));
        mats.push_back(SparseMatrix::from_columns(fld, block.size(), std::move(cols)));
      }
      const Quotient co = coinvariants(Representation{g, mats});
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < block.size(); ++i)
        if (to_q[block[i]] != none) chosen.push_back(i);
      const SparseMatrix m = co.projection.select_cols(chosen);
      if (m.rows() != m.cols() || rank(m) != m.rows())
        throw InvalidInput("homogeneous classes do not form a basis of the coinvariants of " +
                           names[al] + " -> " + names[be]);
    }

  for (std::size_t i1 = 0; i1 < q->dim(); ++i1)
    for (std::size_t i2 = 0; i2 < q->dim(); ++i2) {
      if (q->basis(i2).source != q->basis(i1).target) continue;
      const std::size_t t = degree[i2];
      const LinComb h = c.compose(LinComb{{origin[i2], Scalar::one(fld)}}, a.image(t, origin[i1]));
      if (!h.empty()) q->set_comp(i2, i1, relabel(h, to_q));
    }
  for (std::size_t al = 0; al < norb; ++al) q->set_identity(al, relabel(c.identity(o.transversal[al]), to_q));

  std::vector<std::size_t> obj(c.num_objects());
  for (std::size_t x = 0; x < obj.size(); ++x) obj[x] = o.orbit_of[x];
  std::vector<LinComb> img(c.dim());
  for (std::size_t f = 0; f < c.dim(); ++f) {
    const std::size_t t = o.witness[c.basis(f).target];
    img[f] = relabel(a.image(g.inverse(t), f), to_q);
  }
  LinFunctor proj(a.cat, q, std::move(obj), std::move(img));
  return QuotientResult{q, Grading{g, q, std::move(degree)}, std::move(proj), std::move(origin)};
}

ResolvingResult resolving_category(const GroupAction& a) {
  const LinCat& c = *a.cat;
  const FiniteGroup& g = a.group;
  const std::size_t n = c.num_objects(), d = c.dim(), gs = g.size();
  std::vector<std::string> names;
  for (std::size_t s = 0; s < gs; ++s)
    for (std::size_t x = 0; x < n; ++x) names.push_back("(" + g.label(s) + "," + c.object(x) + ")");
  auto m = std::make_shared<LinCat>(c.field(), names);
  auto idx = [&](std::size_t s, std::size_t t, std::size_t f) { return (s * gs + t) * d + f; };
  for (std::size_t s = 0; s < gs; ++s)
    for (std::size_t t = 0; t < gs; ++t)
      for (std::size_t f = 0; f < d; ++f) {
        const auto& b = c.basis(f);
        m->add_basis(b.label + "(" + g.label(s) + "," + g.label(t) + ")", s * n + b.source,
                     t * n + b.target);
      }
  auto shift = [&](const LinComb& v, std::size_t s, std::size_t t) {
    LinComb out;
    for (const auto& [h, x] : v) out.emplace_back(idx(s, t, h), x);
    return out;
  };
  for (std::size_t s = 0; s < gs; ++s)
    for (std::size_t t = 0; t < gs; ++t)
      for (std::size_t u = 0; u < gs; ++u)
        for (std::size_t f = 0; f < d; ++f)
          for (std::size_t gv = 0; gv < d; ++gv) {
            const LinComb& h = c.comp(gv, f);
            if (!h.empty()) m->set_comp(idx(t, u, gv), idx(s, t, f), shift(h, s, u));
          }
  for (std::size_t s = 0; s < gs; ++s)
    for (std::size_t x = 0; x < n; ++x) m->set_identity(s * n + x, shift(c.identity(x), s, s));

  GroupAction act{g, m, {}, {}};
  for (std::size_t r = 0; r < gs; ++r) {
    std::vector<std::size_t> obj(gs * n);
    for (std::size_t s = 0; s < gs; ++s)
      for (std::size_t x = 0; x < n; ++x) obj[s * n + x] = g.mul(r, s) * n + a.act(r, x);
    std::vector<LinComb> img(m->dim());
    for (std::size_t s = 0; s < gs; ++s)
      for (std::size_t t = 0; t < gs; ++t)
        for (std::size_t f = 0; f < d; ++f) img[idx(s, t, f)] = shift(a.image(r, f), g.mul(r, s), g.mul(r, t));
    act.objects.push_back(std::move(obj));
    act.images.push_back(std::move(img));
  }

  std::vector<std::size_t> obj(gs * n);
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = i % n;
  std::vector<LinComb> img(m->dim());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = {{i % d, Scalar::one(c.field())}};
  LinFunctor L(m, a.cat, std::move(obj), std::move(img));
  return ResolvingResult{m, std::move(act), std::move(L)};
}

TransversalResult transversal_subcategory(const SkewResult& skew, const GroupAction& a,
                                          const OrbitData& o) {
  const LinCat& sk = *skew.cat;
  if (sk.num_objects() != a.cat->num_objects()) throw StructuralError("skew category does not match the action");
  std::vector<bool> seen(o.orbits.size(), false);
  for (auto u : o.transversal) {
    if (u >= sk.num_objects()) throw InvalidInput("transversal object out of range");
    const std::size_t orb = o.orbit_of[u];
    if (seen[orb]) throw InvalidInput("transversal meets an orbit twice");
    seen[orb] = true;
    for (std::size_t s = 0; s < a.group.size(); ++s)
      if (o.orbit_of[a.act(s, u)] != orb) throw InvalidInput("orbit data does not match the action");
  }
  for (bool b : seen)
    if (!b) throw InvalidInput("transversal misses an orbit");

  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> obj_to(sk.num_objects(), none);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < o.transversal.size(); ++i) {
    obj_to[o.transversal[i]] = i;
    names.push_back(sk.object(o.transversal[i]));
  }
  auto t = std::make_shared<LinCat>(sk.field(), names);
  std::vector<std::size_t> to_t(sk.dim(), none), back, degree;
  for (std::size_t i = 0; i < sk.dim(); ++i) {
    const auto& b = sk.basis(i);
    if (obj_to[b.source] == none || obj_to[b.target] == none) continue;
    to_t[i] = t->add_basis(b.label, obj_to[b.source], obj_to[b.target]);
    back.push_back(i);
    degree.push_back(skew.grading.degree[i]);
  }
  for (std::size_t j1 = 0; j1 < t->dim(); ++j1)
    for (std::size_t j2 = 0; j2 < t->dim(); ++j2) {
      if (t->basis(j2).source != t->basis(j1).target) continue;
      const LinComb& h = sk.comp(back[j2], back[j1]);
      if (!h.empty()) t->set_comp(j2, j1, relabel(h, to_t));
    }
  for (std::size_t i = 0; i < o.transversal.size(); ++i)
    t->set_identity(i, relabel(sk.identity(o.transversal[i]), to_t));
  std::vector<LinComb> img(t->dim());
  for (std::size_t j = 0; j < img.size(); ++j) img[j] = {{back[j], Scalar::one(sk.field())}};
  LinFunctor inc(t, skew.cat, o.transversal, std::move(img));
  return TransversalResult{t, Grading{a.group, t, std::move(degree)}, std::move(inc), o.transversal};
}

std::vector<std::string> compare_quotient_transversal(const QuotientResult& q, const TransversalResult& t) {
  const LinCat& qc = *q.cat;
  const LinCat& tc = *t.cat;
  std::vector<std::string> report;
  if (qc.num_objects() != tc.num_objects()) return {"object counts differ"};
  if (qc.dim() != tc.dim()) return {"dimensions differ"};
  const FiniteGroup& g = q.grading.group;
  std::vector<std::size_t> to_t(qc.dim());
  for (std::size_t i = 0; i < qc.dim(); ++i) {
    const std::string label = qc.basis(i).label + "@" + g.label(q.grading.degree[i]);
    auto j = tc.basis_index(label);
    if (!j) return {"no counterpart of " + label};
    to_t[i] = *j;
    if (tc.basis(*j).source != qc.basis(i).source || tc.basis(*j).target != qc.basis(i).target)
      report.push_back(label + " lies in a different hom space");
    if (t.grading.degree[*j] != q.grading.degree[i]) report.push_back(label + " has a different degree");
  }
  for (std::size_t x = 0; x < qc.num_objects(); ++x)
    if (!same_comb(relabel(qc.identity(x), to_t), tc.identity(x)))
      report.push_back("identities differ at " + qc.object(x));
  for (std::size_t i = 0; i < qc.dim(); ++i)
    for (std::size_t j = 0; j < qc.dim(); ++j)
      if (!same_comb(relabel(qc.comp(j, i), to_t), tc.comp(to_t[j], to_t[i])))
        report.push_back("composition " + qc.basis(j).label + "∘" + qc.basis(i).label + " differs");
  return report;
}

GroupAction algebra_action(const FiniteGroup& g, CatPtr lambda1, const std::vector<SparseMatrix>& mats) {
  if (mats.size() != g.size()) throw StructuralError("one matrix per group element is required");
  GroupAction a{g, lambda1, {}, {}};
  for (const auto& m : mats) {
    if (m.rows() != lambda1->dim() || m.cols() != lambda1->dim())
      throw StructuralError("action matrix does not match the algebra");
    a.objects.push_back({0});
    std::vector<LinComb> img;
    for (std::size_t f = 0; f < m.cols(); ++f) img.push_back(m.column(f));
    a.images.push_back(std::move(img));
  }
  return a;
}

MatrixSkewResult matrix_skew_algebra(const AlgebraView& lambda, const FiniteGroup& g,
                                     const std::vector<SparseMatrix>& mats) {
  CatPtr l1 = single_object_category(lambda);
  GroupAction act = algebra_action(g, l1, mats);
  const auto problems = validate_action(act);
  if (!problems.empty()) throw InvalidInput("invalid algebra action: " + problems.front());
  ResolvingResult res = resolving_category(act);
  const AlgebraView via_res = total_algebra(*res.cat);

  const std::size_t gs = g.size(), d = lambda.dim;
  auto idx = [&](std::size_t s, std::size_t t, std::size_t f) { return (s * gs + t) * d + f; };
  // Basis E_{t,s} ⊗ λ at index idx(s, t, λ); (E_{u,t}μ)(E_{t,s}λ) = E_{u,s} μλ.
  AlgebraView m{lambda.field, gs * gs * d, {}, {}, {}};
  m.labels.resize(m.dim);
  m.mul.resize(m.dim * m.dim);
  for (std::size_t s = 0; s < gs; ++s)
    for (std::size_t t = 0; t < gs; ++t)
      for (std::size_t f = 0; f < d; ++f)
        m.labels[idx(s, t, f)] = lambda.labels[f] + "(" + g.label(s) + "," + g.label(t) + ")";
  for (std::size_t s = 0; s < gs; ++s)
    for (std::size_t t = 0; t < gs; ++t)
      for (std::size_t u = 0; u < gs; ++u)
        for (std::size_t f = 0; f < d; ++f)
          for (std::size_t h = 0; h < d; ++h) {
            LinComb p;
            for (const auto& [k, v] : lambda.product(h, f)) p.emplace_back(idx(s, u, k), v);
            m.mul[idx(t, u, h) * m.dim + idx(s, t, f)] = std::move(p);
          }
  MatrixSkewResult r{m, {}, {}, false, false, res.action};
  for (std::size_t s = 0; s < gs; ++s) {
    LinComb e;
    for (const auto& [k, v] : lambda.unit) e.emplace_back(idx(s, s, k), v);
    r.idempotents.push_back(e);
    axpy(r.algebra.unit, Scalar::one(lambda.field), e);
  }
  r.matches_resolving = (r.algebra == via_res);
  r.free = true;
  for (std::size_t x = 0; x < gs; ++x)
    for (std::size_t s = 0; s < gs; ++s)
      if (x != s && same_comb(r.idempotents[x], r.idempotents[s])) r.free = false;
  for (std::size_t rr = 0; rr < gs; ++rr) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < gs; ++i) {
      const LinComb img = res.action.apply(rr, r.idempotents[i]);
      std::size_t found = gs;
      for (std::size_t j = 0; j < gs; ++j)
        if (same_comb(img, r.idempotents[j])) found = j;
      if (found == gs) throw InvalidInput("the action does not permute the diagonal idempotents");
      if (rr != 0 && found == i) r.free = false;
      p.push_back(found);
    }
    r.perm.push_back(std::move(p));
  }
  return r;
}

}  // namespace hmcat
