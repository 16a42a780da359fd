#include "hmcat/group.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hmcat {

namespace {

bool same_comb(const LinComb& a, const LinComb& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Field f, std::size_t cols) {
  SparseMatrix t(f, cols, 0);
  for (const auto& b : blocks) t = t.hstack(b.transpose());
  return t.transpose();
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidInput("a group needs at least one element");
  if (table_.size() != n) throw InvalidInput("multiplication table has the wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidInput("multiplication table row has the wrong length");
    for (auto v : row)
      if (v >= n) throw InvalidInput("multiplication table is not closed");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw InvalidInput("element 0 (" + labels_[0] + ") is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidInput("multiplication is not associative at (" + labels_[a] + "," +
                             labels_[b] + "," + labels_[c] + ")");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw InvalidInput("element " + labels_[a] + " has no inverse");
  std::map<std::string, int> seen;
  for (const auto& l : labels_)
    if (seen[l]++) throw InvalidInput("duplicate group element label " + l);
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"1"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  if (n == 2) labels[1] = "s";
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(labels), std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {1,2,3}, transpositions before 3-cycles; (ab)(x) = a(b(x)).
  const std::vector<std::array<std::size_t, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                      {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> ab{};
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return FiniteGroup({"1", "(12)", "(13)", "(23)", "(123)", "(132)"}, std::move(t));
}

std::optional<std::size_t> FiniteGroup::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  ConjClasses cc;
  const std::size_t n = g.size();
  cc.class_of.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (cc.class_of[a] != n) continue;
    std::vector<std::size_t> cls;
    for (std::size_t s = 0; s < n; ++s) cls.push_back(g.mul(g.mul(s, a), g.inverse(s)));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (auto b : cls) cc.class_of[b] = cc.classes.size();
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

LinComb GroupAction::apply(std::size_t s, const LinComb& v) const {
  LinComb out;
  for (const auto& [i, a] : v) axpy(out, a, images[s][i]);
  return out;
}

GroupAction trivial_action(const FiniteGroup& g, CatPtr c) {
  GroupAction a{g, c, {}, {}};
  std::vector<std::size_t> ids(c->num_objects());
  for (std::size_t x = 0; x < ids.size(); ++x) ids[x] = x;
  std::vector<LinComb> imgs(c->dim());
  for (std::size_t f = 0; f < imgs.size(); ++f) imgs[f] = {{f, Scalar::one(c->field())}};
  a.objects.assign(g.size(), ids);
  a.images.assign(g.size(), imgs);
  return a;
}

std::vector<std::string> validate_action(const GroupAction& a) {
  const LinCat& c = *a.cat;
  const FiniteGroup& g = a.group;
  if (a.objects.size() != g.size() || a.images.size() != g.size())
    throw StructuralError("action data does not cover every group element");
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (a.objects[s].size() != c.num_objects())
      throw StructuralError("object map of " + g.label(s) + " has the wrong size");
    if (a.images[s].size() != c.dim())
      throw StructuralError("morphism images of " + g.label(s) + " have the wrong size");
    for (auto y : a.objects[s])
      if (y >= c.num_objects()) throw StructuralError("object map of " + g.label(s) + " out of range");
    for (std::size_t f = 0; f < c.dim(); ++f)
      for (const auto& [i, _] : a.images[s][f]) {
        if (i >= c.dim()) throw StructuralError("morphism image out of range");
        const auto& bf = c.basis(f);
        const auto& bi = c.basis(i);
        if (bi.source != a.objects[s][bf.source] || bi.target != a.objects[s][bf.target])
          throw StructuralError(g.label(s) + "·" + bf.label + " leaves the hom space of " +
                                g.label(s) + "·(" + c.object(bf.source) + " -> " +
                                c.object(bf.target) + ")");
      }
  }

  std::vector<std::string> report;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<std::size_t> p = a.objects[s];
    std::sort(p.begin(), p.end());
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p[x] != x) {
        report.push_back(g.label(s) + " does not permute the objects");
        break;
      }
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (a.objects[0][x] != x) report.push_back("identity moves object " + c.object(x));
  for (std::size_t f = 0; f < c.dim(); ++f)
    if (!same_comb(a.images[0][f], LinComb{{f, Scalar::one(c.field())}}))
      report.push_back("identity moves " + c.basis(f).label);
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = 0; t < g.size(); ++t) {
      const std::size_t st = g.mul(s, t);
      for (std::size_t x = 0; x < c.num_objects(); ++x)
        if (a.objects[s][a.objects[t][x]] != a.objects[st][x])
          report.push_back("(" + g.label(s) + "," + g.label(t) + ") not functorial on object " +
                           c.object(x));
      for (std::size_t f = 0; f < c.dim(); ++f)
        if (!same_comb(a.apply(s, a.images[t][f]), a.images[st][f]))
          report.push_back("(" + g.label(s) + "," + g.label(t) + "," + c.basis(f).label +
                           "): s(tf) != (st)f");
    }
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t x = 0; x < c.num_objects(); ++x)
      if (!same_comb(a.apply(s, c.identity(x)), c.identity(a.objects[s][x])))
        report.push_back(g.label(s) + " does not send the identity of " + c.object(x) +
                         " to an identity");
    for (std::size_t f = 0; f < c.dim(); ++f)
      for (std::size_t h = 0; h < c.dim(); ++h) {
        if (c.basis(h).source != c.basis(f).target) continue;
        const LinComb lhs = a.apply(s, c.comp(h, f));
        const LinComb rhs = c.compose(a.images[s][h], a.images[s][f]);
        if (!same_comb(lhs, rhs))
          report.push_back("(" + g.label(s) + "," + c.basis(h).label + "," + c.basis(f).label +
                           "): s(g∘f) != s(g)∘s(f)");
      }
  }
  return report;
}

GroupAction tensor_action(const GroupAction& a, const GroupAction& b, CatPtr product) {
  if (!(a.group == b.group)) throw StructuralError("diagonal action needs a common group");
  const std::size_t nb = b.cat->num_objects(), db = b.cat->dim();
  if (product->num_objects() != a.cat->num_objects() * nb || product->dim() != a.cat->dim() * db)
    throw StructuralError("tensor product does not match the acting categories");
  GroupAction t{a.group, product, {}, {}};
  for (std::size_t s = 0; s < a.group.size(); ++s) {
    std::vector<std::size_t> obj(product->num_objects());
    for (std::size_t x = 0; x < a.cat->num_objects(); ++x)
      for (std::size_t y = 0; y < nb; ++y) obj[x * nb + y] = a.objects[s][x] * nb + b.objects[s][y];
    std::vector<LinComb> img(product->dim());
    for (std::size_t f = 0; f < a.cat->dim(); ++f)
      for (std::size_t g = 0; g < db; ++g) {
        LinComb v;
        for (const auto& [i, x] : a.images[s][f])
          for (const auto& [j, y] : b.images[s][g]) v.emplace_back(i * db + j, x * y);
        normalize(v);
        img[f * db + g] = std::move(v);
      }
    t.objects.push_back(std::move(obj));
    t.images.push_back(std::move(img));
  }
  return t;
}

OrbitData orbits_transversal(const GroupAction& a, const std::vector<std::size_t>& preferred) {
  const std::size_t n = a.cat->num_objects();
  const FiniteGroup& g = a.group;
  OrbitData o;
  o.orbit_of.assign(n, n);
  o.rep.assign(n, n);
  o.witness.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (o.orbit_of[x] != n) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t s = 0; s < g.size(); ++s) orbit.push_back(a.act(s, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    std::size_t u = orbit.front();
    for (auto p : preferred)
      if (std::binary_search(orbit.begin(), orbit.end(), p)) {
        u = p;
        break;
      }
    for (auto y : orbit) {
      o.orbit_of[y] = o.orbits.size();
      o.rep[y] = u;
    }
    o.orbits.push_back(std::move(orbit));
    o.transversal.push_back(u);
  }
  o.free = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 1; s < g.size(); ++s)
      if (a.act(s, x) == x) o.free = false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < g.size(); ++s)
      if (a.act(s, o.rep[x]) == x) {
        o.witness[x] = s;
        break;
      }
  return o;
}

void check_representation(const Representation& rep) {
  const FiniteGroup& g = rep.group;
  if (rep.mats.size() != g.size()) throw InvalidInput("representation needs one matrix per element");
  const std::size_t d = rep.dim();
  for (const auto& m : rep.mats)
    if (m.rows() != d || m.cols() != d) throw InvalidInput("representation matrices must be square of one size");
  if (!(rep.mats[0] == SparseMatrix::identity(rep.mats[0].field(), d)))
    throw InvalidInput("identity does not act as the identity matrix");
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = 0; t < g.size(); ++t)
      if (!(rep.mats[s] * rep.mats[t] == rep.mats[g.mul(s, t)]))
        throw InvalidInput("not a representation at (" + g.label(s) + "," + g.label(t) + ")");
}

Quotient coinvariants(const Representation& rep) {
  check_representation(rep);
  const Field f = rep.mats[0].field();
  const SparseMatrix id = SparseMatrix::identity(f, rep.dim());
  SparseMatrix span(f, rep.dim(), 0);
  for (std::size_t s = 1; s < rep.mats.size(); ++s) span = span.hstack(rep.mats[s] - id);
  return quotient_by_span(span);
}

InvariantResult invariants(const Representation& rep) {
  check_representation(rep);
  const Field f = rep.mats[0].field();
  const std::size_t d = rep.dim();
  const SparseMatrix id = SparseMatrix::identity(f, d);
  std::vector<SparseMatrix> blocks;
  for (std::size_t s = 1; s < rep.mats.size(); ++s) blocks.push_back(rep.mats[s] - id);
  InvariantResult r{kernel(vstack(blocks, f, d)), false};
  const auto order = static_cast<std::int64_t>(rep.group.size());
  if (f.is_unit(order)) {
    SparseMatrix avg(f, d, d);
    for (const auto& m : rep.mats) avg = avg + m;
    avg = avg.scaled(Scalar::from_int(f, order).inverse());
    const Quotient q = coinvariants(rep);
    if (q.dim() != r.space.dim()) throw InvalidInput("averaging check: dim V_G != dim V^G");
    if (!(q.projection * avg * q.section == SparseMatrix::identity(f, q.dim())))
      throw InvalidInput("averaging check: projection after averaging is not the identity");
    for (const auto& b : blocks)
      if (!(b * avg).is_zero()) throw InvalidInput("averaging check: average is not invariant");
    r.averaging_checked = true;
  }
  return r;
}

}  // namespace hmcat
