#include "hmcat/lincat.hpp"

#include <algorithm>

#include "hmcat/linalg.hpp"

namespace hmcat {

namespace {

const LinComb& empty_comb() {
  static const LinComb e;
  return e;
}

bool same_comb(const LinComb& a, const LinComb& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

LinComb unit_vector(Field f, std::size_t i) { return {{i, Scalar::one(f)}}; }

}  // namespace

LinCat::LinCat(Field field, std::vector<std::string> objects)
    : field_(field), objects_(std::move(objects)) {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (!object_index_.emplace(objects_[i], i).second)
      throw StructuralError("duplicate object '" + objects_[i] + "'");
  hom_.resize(objects_.size() * objects_.size());
  identities_.resize(objects_.size());
}

std::optional<std::size_t> LinCat::object_index(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> LinCat::basis_index(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LinCat::add_basis(const std::string& label, std::size_t source, std::size_t target) {
  if (source >= num_objects() || target >= num_objects())
    throw StructuralError("basis '" + label + "' refers to a missing object");
  const std::size_t i = basis_.size();
  if (!label_index_.emplace(label, i).second)
    throw StructuralError("duplicate basis label '" + label + "'");
  basis_.push_back({label, source, target});
  auto& block = hom_[target * num_objects() + source];
  position_.push_back(block.size());
  block.push_back(i);
  comp_.emplace_back();
  return i;
}

void LinCat::set_comp(std::size_t g, std::size_t f, LinComb h) {
  if (g >= dim() || f >= dim()) throw StructuralError("composition of missing basis vectors");
  if (basis_[g].source != basis_[f].target)
    throw StructuralError("composition " + basis_[g].label + "∘" + basis_[f].label +
                          " of non-composable morphisms");
  for (const auto& [i, _] : h)
    if (i >= dim()) throw StructuralError("composition result refers to a missing basis vector");
  normalize(h);
  auto& row = comp_[g];
  auto it = std::lower_bound(row.begin(), row.end(), f,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == f)
    it->second = std::move(h);
  else
    row.insert(it, {f, std::move(h)});
}

void LinCat::set_identity(std::size_t x, LinComb id) {
  if (x >= num_objects()) throw StructuralError("identity of a missing object");
  for (const auto& [i, _] : id)
    if (i >= dim()) throw StructuralError("identity refers to a missing basis vector");
  normalize(id);
  identities_[x] = std::move(id);
}

const LinComb& LinCat::comp(std::size_t g, std::size_t f) const {
  const auto& row = comp_.at(g);
  auto it = std::lower_bound(row.begin(), row.end(), f,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != row.end() && it->first == f) return it->second;
  return empty_comb();
}

LinComb LinCat::compose(const LinComb& g, const LinComb& f) const {
  LinComb out;
  for (const auto& [i, a] : g)
    for (const auto& [j, b] : f) {
      const LinComb& h = comp(i, j);
      if (!h.empty()) axpy(out, a * b, h);
    }
  return out;
}

std::vector<std::string> validate_category(const LinCat& c) {
  const std::size_t n = c.dim();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const LinComb& h = c.comp(g, f);
      for (const auto& [i, _] : h)
        if (c.basis(i).source != c.basis(f).source || c.basis(i).target != c.basis(g).target)
          throw StructuralError(c.basis(g).label + "∘" + c.basis(f).label + " has a term " +
                                c.basis(i).label + " outside its hom space");
    }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    for (const auto& [i, _] : c.identity(x))
      if (c.basis(i).source != x || c.basis(i).target != x)
        throw StructuralError("identity of " + c.object(x) + " has a term outside its endomorphisms");

  std::vector<std::string> report;
  const Field fld = c.field();
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (c.identity(x).empty()) report.push_back("identity of " + c.object(x) + " is zero");
  for (std::size_t f = 0; f < n; ++f) {
    const auto& b = c.basis(f);
    const LinComb e = unit_vector(fld, f);
    if (!same_comb(c.compose(c.identity(b.target), e), e))
      report.push_back("left identity fails on " + b.label);
    if (!same_comb(c.compose(e, c.identity(b.source)), e))
      report.push_back("right identity fails on " + b.label);
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      if (c.basis(g).source != c.basis(f).target) continue;
      const LinComb& gf = c.comp(g, f);
      for (std::size_t h = 0; h < n; ++h) {
        if (c.basis(h).source != c.basis(g).target) continue;
        const LinComb left = c.compose(c.comp(h, g), unit_vector(fld, f));
        const LinComb right = c.compose(unit_vector(fld, h), gf);
        if (!same_comb(left, right))
          report.push_back("associativity fails on (" + c.basis(h).label + ", " + c.basis(g).label +
                           ", " + c.basis(f).label + ")");
      }
    }
  return report;
}

LinFunctor::LinFunctor(CatPtr source, CatPtr target, std::vector<std::size_t> object_map,
                       std::vector<LinComb> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      images_(std::move(images)) {
  if (object_map_.size() != source_->num_objects() || images_.size() != source_->dim())
    throw StructuralError("functor data does not match its source category");
  if (!(source_->field() == target_->field())) throw FieldMismatch("functor across fields");
  for (auto y : object_map_)
    if (y >= target_->num_objects()) throw StructuralError("functor object map out of range");
  for (std::size_t f = 0; f < images_.size(); ++f) {
    normalize(images_[f]);
    const auto& b = source_->basis(f);
    for (const auto& [i, _] : images_[f]) {
      if (i >= target_->dim()) throw StructuralError("functor image out of range");
      const auto& t = target_->basis(i);
      if (t.source != object_map_[b.source] || t.target != object_map_[b.target])
        throw StructuralError("image of " + b.label + " leaves the hom space F(" +
                              source_->object(b.source) + ") -> F(" + source_->object(b.target) + ")");
    }
  }
}

LinComb LinFunctor::apply(const LinComb& v) const {
  LinComb out;
  for (const auto& [i, a] : v) axpy(out, a, images_.at(i));
  return out;
}

SparseMatrix LinFunctor::block(std::size_t y, std::size_t x) const {
  const auto& src = source_->hom(y, x);
  const auto& dst = target_->hom(object_map_[y], object_map_[x]);
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [i, a] : images_[src[j]]) t.push_back({target_->position(i), j, a});
  return SparseMatrix::from_triplets(source_->field(), dst.size(), src.size(), std::move(t));
}

std::vector<std::string> LinFunctor::validate() const {
  std::vector<std::string> report;
  const LinCat& c = *source_;
  const LinCat& d = *target_;
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!same_comb(apply(c.identity(x)), d.identity(object_map_[x])))
      report.push_back("identity of " + c.object(x) + " not preserved");
  for (std::size_t f = 0; f < c.dim(); ++f)
    for (std::size_t g = 0; g < c.dim(); ++g) {
      if (c.basis(g).source != c.basis(f).target) continue;
      if (!same_comb(apply(c.comp(g, f)), d.compose(images_[g], images_[f])))
        report.push_back("composition " + c.basis(g).label + "∘" + c.basis(f).label +
                         " not preserved");
    }
  return report;
}

bool LinFunctor::full() const {
  for (std::size_t y = 0; y < source_->num_objects(); ++y)
    for (std::size_t x = 0; x < source_->num_objects(); ++x) {
      const SparseMatrix b = block(y, x);
      if (rank(b) != b.rows()) return false;
    }
  return true;
}

bool LinFunctor::faithful() const {
  for (std::size_t y = 0; y < source_->num_objects(); ++y)
    for (std::size_t x = 0; x < source_->num_objects(); ++x) {
      const SparseMatrix b = block(y, x);
      if (rank(b) != b.cols()) return false;
    }
  return true;
}

bool LinFunctor::dense(const std::vector<std::pair<std::size_t, std::size_t>>& iso_witnesses) const {
  std::vector<bool> hit(target_->num_objects(), false);
  for (auto y : object_map_) hit[y] = true;
  for (const auto& [y, x] : iso_witnesses)
    if (y < hit.size() && x < object_map_.size()) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

LinComb AlgebraView::multiply(const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) axpy(out, x * y, product(i, j));
  return out;
}

std::vector<std::string> AlgebraView::validate() const {
  std::vector<std::string> report;
  if (mul.size() != dim * dim) throw StructuralError("multiplication table has the wrong size");
  for (std::size_t i = 0; i < dim; ++i) {
    const LinComb e = unit_vector(field, i);
    if (!same_comb(multiply(unit, e), e) || !same_comb(multiply(e, unit), e))
      report.push_back("unit fails on " + labels[i]);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const LinComb l = multiply(product(i, j), unit_vector(field, k));
        const LinComb r = multiply(unit_vector(field, i), product(j, k));
        if (!same_comb(l, r))
          report.push_back("associativity fails on (" + labels[i] + ", " + labels[j] + ", " +
                           labels[k] + ")");
      }
  return report;
}

bool AlgebraView::operator==(const AlgebraView& o) const {
  if (!(field == o.field) || dim != o.dim || !same_comb(unit, o.unit)) return false;
  for (std::size_t i = 0; i < mul.size(); ++i)
    if (!same_comb(mul[i], o.mul[i])) return false;
  return true;
}

AlgebraView total_algebra(const LinCat& c) {
  AlgebraView a{c.field(), c.dim(), {}, {}, {}};
  for (std::size_t i = 0; i < c.dim(); ++i) a.labels.push_back(c.basis(i).label);
  a.mul.resize(c.dim() * c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) a.mul[i * c.dim() + j] = c.comp(i, j);
  for (std::size_t x = 0; x < c.num_objects(); ++x) axpy(a.unit, Scalar::one(c.field()), c.identity(x));
  return a;
}

CatPtr tensor_product(const LinCat& c, const LinCat& d) {
  if (!(c.field() == d.field())) throw FieldMismatch("tensor product across fields");
  const std::size_t nd = d.num_objects();
  std::vector<std::string> objs;
  for (const auto& x : c.objects())
    for (const auto& y : d.objects()) objs.push_back("(" + x + "," + y + ")");
  auto t = std::make_shared<LinCat>(c.field(), objs);
  const std::size_t dd = d.dim();
  for (std::size_t f = 0; f < c.dim(); ++f)
    for (std::size_t g = 0; g < dd; ++g) {
      const auto& bf = c.basis(f);
      const auto& bg = d.basis(g);
      t->add_basis(bf.label + "*" + bg.label, bf.source * nd + bg.source, bf.target * nd + bg.target);
    }
  auto pair_comb = [&](const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) out.emplace_back(i * dd + j, x * y);
    normalize(out);
    return out;
  };
  for (std::size_t f2 = 0; f2 < c.dim(); ++f2)
    for (std::size_t f1 = 0; f1 < c.dim(); ++f1) {
      const LinComb& cf = c.comp(f2, f1);
      if (cf.empty()) continue;
      for (std::size_t g2 = 0; g2 < dd; ++g2)
        for (std::size_t g1 = 0; g1 < dd; ++g1) {
          const LinComb& dg = d.comp(g2, g1);
          if (dg.empty()) continue;
          t->set_comp(f2 * dd + g2, f1 * dd + g1, pair_comb(cf, dg));
        }
    }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    for (std::size_t y = 0; y < nd; ++y) t->set_identity(x * nd + y, pair_comb(c.identity(x), d.identity(y)));
  return t;
}

CatPtr single_object_category(const AlgebraView& a) {
  auto problems = a.validate();
  if (!problems.empty()) throw InvalidInput("algebra table: " + problems.front());
  auto c = std::make_shared<LinCat>(a.field, std::vector<std::string>{"*"});
  for (std::size_t i = 0; i < a.dim; ++i) c->add_basis(a.labels[i], 0, 0);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!a.product(i, j).empty()) c->set_comp(i, j, a.product(i, j));
  c->set_identity(0, a.unit);
  return c;
}

bool same_structure(const LinCat& a, const LinCat& b) {
  if (!(a.field() == b.field()) || a.objects() != b.objects() || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& x = a.basis(i);
    const auto& y = b.basis(i);
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  for (std::size_t x = 0; x < a.num_objects(); ++x)
    if (!same_comb(a.identity(x), b.identity(x))) return false;
  for (std::size_t g = 0; g < a.dim(); ++g)
    for (std::size_t f = 0; f < a.dim(); ++f)
      if (!same_comb(a.comp(g, f), b.comp(g, f))) return false;
  return true;
}

}  // namespace hmcat
