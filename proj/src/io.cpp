#include "hmcat/io.hpp"

#include <fstream>
#include <map>
#include <set>

namespace hmcat {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing member '") + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw InvalidInput(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Scalar scalar_from_json(const json& j, Field f) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw InvalidInput("coefficient must be an integer or a string");
}

std::size_t object_of(const LinCat& c, const json& j) {
  const std::string name = as_string(j, "object");
  auto x = c.object_index(name);
  if (!x) throw StructuralError("unknown object '" + name + "'");
  return *x;
}

std::size_t label_of(const LinCat& c, const std::string& label) {
  auto i = c.basis_index(label);
  if (!i) throw StructuralError("unknown basis label '" + label + "'");
  return *i;
}

std::size_t element_of(const FiniteGroup& g, const json& j) {
  const std::string name = as_string(j, "group element");
  auto s = g.index(name);
  if (!s) throw StructuralError("unknown group element '" + name + "'");
  return *s;
}

LinComb comb_from_json(const LinCat& c, const json& j) {
  if (!j.is_array()) throw InvalidInput("linear combination must be an array of [label, coefficient]");
  LinComb v;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw InvalidInput("term must be [label, coefficient]");
    v.emplace_back(label_of(c, as_string(term[0], "basis label")), scalar_from_json(term[1], c.field()));
  }
  normalize(v);
  return v;
}

/// Residues are written as the representative of least absolute value, so
/// a file written over F_p still means the same integers under another field.
json scalar_to_json(const Scalar& a) {
  if (a.field().is_rational()) {
    const mpq_class& q = a.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return a.to_string();
  }
  const std::int64_t p = a.field().characteristic(), r = a.residue();
  return 2 * r > p ? r - p : r;
}

json comb_to_json(const LinCat& c, const LinComb& v) {
  json out = json::array();
  for (const auto& [i, a] : v) out.push_back({c.basis(i).label, scalar_to_json(a)});
  return out;
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string() && (j == "Q" || j == "q")) return Field::rationals();
  if (j.is_number_integer() && j.get<std::int64_t>() > 1) return Field::prime(j.get<std::uint32_t>());
  throw InvalidInput("field must be a prime or \"Q\"");
}

json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return f.characteristic();
}

CatPtr category_from_json(const json& j, std::optional<Field> field) {
  const Field f = field ? *field : field_from_json(member(j, "field"));
  std::vector<std::string> objects;
  for (const auto& o : member(j, "objects")) objects.push_back(as_string(o, "object"));
  auto c = std::make_shared<LinCat>(f, objects);
  for (const auto& h : member(j, "hom")) {
    const std::size_t x = object_of(*c, member(h, "source"));
    const std::size_t y = object_of(*c, member(h, "target"));
    for (const auto& label : member(h, "basis")) c->add_basis(as_string(label, "basis label"), x, y);
  }
  if (j.contains("comp"))
    for (const auto& e : j.at("comp"))
      c->set_comp(label_of(*c, as_string(member(e, "g"), "g")), label_of(*c, as_string(member(e, "f"), "f")),
                  comb_from_json(*c, member(e, "value")));
  const json& ids = member(j, "identities");
  for (std::size_t x = 0; x < c->num_objects(); ++x) {
    if (!ids.contains(c->object(x))) throw InvalidInput("no identity given for object '" + c->object(x) + "'");
    c->set_identity(x, comb_from_json(*c, ids.at(c->object(x))));
  }
  return c;
}

json category_to_json(const LinCat& c) {
  json j;
  j["field"] = field_to_json(c.field());
  j["objects"] = c.objects();
  j["hom"] = json::array();
  // Blocks in order of their first basis vector, so reading back keeps the
  // basis order whenever blocks are contiguous.
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const std::size_t x = c.basis(i).source, y = c.basis(i).target;
    if (!done.emplace(x, y).second) continue;
    json labels = json::array();
    for (auto b : c.hom(y, x)) labels.push_back(c.basis(b).label);
    j["hom"].push_back({{"source", c.object(x)}, {"target", c.object(y)}, {"basis", labels}});
  }
  j["comp"] = json::array();
  for (std::size_t g = 0; g < c.dim(); ++g)
    for (std::size_t f = 0; f < c.dim(); ++f) {
      if (c.basis(g).source != c.basis(f).target) continue;
      const LinComb& v = c.comp(g, f);
      if (v.empty()) continue;
      j["comp"].push_back({{"g", c.basis(g).label}, {"f", c.basis(f).label}, {"value", comb_to_json(c, v)}});
    }
  j["identities"] = json::object();
  for (std::size_t x = 0; x < c.num_objects(); ++x) j["identities"][c.object(x)] = comb_to_json(c, c.identity(x));
  return j;
}

FiniteGroup group_from_json(const json& j) {
  std::vector<std::string> labels;
  for (const auto& e : member(j, "elements")) labels.push_back(as_string(e, "group element"));
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : member(j, "table")) {
    std::vector<std::size_t> r;
    for (const auto& e : row) {
      auto it = idx.find(as_string(e, "group element"));
      if (it == idx.end()) throw InvalidInput("table entry is not a group element");
      r.push_back(it->second);
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup(labels, table);
}

json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.size(); ++b) row.push_back(g.label(g.mul(a, b)));
    table.push_back(row);
  }
  return {{"elements", g.labels()}, {"table", table}};
}

GroupAction action_from_json(const json& j, const FiniteGroup& g, CatPtr c) {
  if (!j.is_object()) throw InvalidInput("action must be an object keyed by group element");
  GroupAction a = trivial_action(g, c);
  for (const auto& [name, entry] : j.items()) {
    const std::size_t s = element_of(g, name);
    if (entry.contains("objects"))
      for (const auto& [x, y] : entry.at("objects").items()) a.objects[s][object_of(*c, x)] = object_of(*c, y);
    if (entry.contains("morphisms"))
      for (const auto& [f, v] : entry.at("morphisms").items()) a.images[s][label_of(*c, f)] = comb_from_json(*c, v);
  }
  return a;
}

json action_to_json(const GroupAction& a) {
  const LinCat& c = *a.cat;
  json j = json::object();
  for (std::size_t s = 1; s < a.group.size(); ++s) {
    json objs = json::object(), mors = json::object();
    for (std::size_t x = 0; x < c.num_objects(); ++x) objs[c.object(x)] = c.object(a.act(s, x));
    for (std::size_t f = 0; f < c.dim(); ++f) mors[c.basis(f).label] = comb_to_json(c, a.image(s, f));
    j[a.group.label(s)] = {{"objects", objs}, {"morphisms", mors}};
  }
  return j;
}

Grading grading_from_json(const json& j, const FiniteGroup& g, CatPtr c) {
  if (!j.is_object()) throw InvalidInput("grading must map basis labels to group elements");
  Grading gr = trivial_grading(g, c);
  for (const auto& [label, s] : j.items()) gr.degree[label_of(*c, label)] = element_of(g, s);
  return gr;
}

json grading_to_json(const Grading& gr) {
  json j = json::object();
  for (std::size_t f = 0; f < gr.cat->dim(); ++f) j[gr.cat->basis(f).label] = gr.group.label(gr.degree[f]);
  return j;
}

Document document_from_json(const json& j, std::optional<Field> field) {
  Document d;
  d.cat = category_from_json(member(j, "category"), field);
  if (j.contains("group")) d.group = group_from_json(j.at("group"));
  if (j.contains("action")) {
    if (!d.group) throw InvalidInput("an action needs a group");
    d.action = action_from_json(j.at("action"), *d.group, d.cat);
  }
  if (j.contains("grading")) {
    if (!d.group) throw InvalidInput("a grading needs a group");
    d.grading = grading_from_json(j.at("grading"), *d.group, d.cat);
  }
  if (j.contains("transversal"))
    for (const auto& x : j.at("transversal")) d.transversal.push_back(object_of(*d.cat, x));
  return d;
}

json document_to_json(const Document& d) {
  json j;
  j["category"] = category_to_json(*d.cat);
  if (d.group) j["group"] = group_to_json(*d.group);
  if (d.action) j["action"] = action_to_json(*d.action);
  if (d.grading) j["grading"] = grading_to_json(*d.grading);
  if (!d.transversal.empty()) {
    j["transversal"] = json::array();
    for (auto x : d.transversal) j["transversal"].push_back(d.cat->object(x));
  }
  return j;
}

Document load_document(const std::string& path, std::optional<Field> field) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return document_from_json(j, field);
}

json cochain_to_json(const CochainComplex& cc, std::size_t n, const SparseVector& v) {
  const LinCat& c = *cc.cat;
  std::map<std::size_t, LinComb> by_path;
  for (const auto& [e, a] : v) by_path[cc.basis_path[n][e]].emplace_back(cc.basis_out[n][e], a);
  json entries = json::array();
  for (auto& [p, comb] : by_path) {
    const Path& path = cc.paths[n][p];
    json arrows = json::array();
    for (auto f : path.arrows) arrows.push_back(c.basis(f).label);
    normalize(comb);
    entries.push_back({{"start", c.object(path.start)}, {"arrows", arrows}, {"value", comb_to_json(c, comb)}});
  }
  return {{"degree", n}, {"entries", entries}};
}

std::pair<std::size_t, SparseVector> cochain_from_json(const CochainComplex& cc, const json& j) {
  const LinCat& c = *cc.cat;
  const json& deg = member(j, "degree");
  if (!deg.is_number_unsigned()) throw InvalidInput("cochain degree must be a nonnegative integer");
  const std::size_t n = deg.get<std::size_t>();
  if (n >= cc.paths.size()) throw InvalidInput("cochain degree beyond the complex");
  SparseVector v;
  for (const auto& e : member(j, "entries")) {
    Path p{object_of(c, member(e, "start")), {}};
    for (const auto& f : member(e, "arrows")) p.arrows.push_back(label_of(c, as_string(f, "arrow")));
    if (p.arrows.size() != n) throw InvalidInput("path length does not match the cochain degree");
    auto pi = cc.find_path(n, p);
    if (!pi) throw StructuralError("path is not composable or has an empty value space");
    for (const auto& [h, a] : comb_from_json(c, member(e, "value"))) {
      const auto& b = c.basis(h);
      if (b.source != p.start || b.target != cc.end(n, *pi))
        throw StructuralError("value '" + b.label + "' lies outside the target hom space");
      v.emplace_back(cc.element(n, *pi, h), a);
    }
  }
  normalize(v);
  return {n, v};
}

}  // namespace hmcat
