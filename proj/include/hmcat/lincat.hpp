/**
 * @file lincat.hpp
 * @brief Finite k-linear categories given by structure constants.
 *
 * A LinCat has a global basis of morphisms. Every basis vector lives in one
 * hom space _yC_x (source x, target y). Composition is stored per ordered
 * pair of basis vectors as a linear combination of basis vectors.
 */
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmcat/matrix.hpp"

namespace hmcat {

/// Linear combination of basis morphisms (indices into the global basis).
using LinComb = SparseVector;

struct BasisVector {
  std::string label;
  std::size_t source;
  std::size_t target;
};

class LinCat {
 public:
  LinCat(Field field, std::vector<std::string> objects);

  /// Appends a basis vector of _{target}C_{source}; labels must be unique.
  std::size_t add_basis(const std::string& label, std::size_t source, std::size_t target);
  /// Sets g∘f. Both must be basis indices with source(g) == target(f).
  void set_comp(std::size_t g, std::size_t f, LinComb h);
  void set_identity(std::size_t x, LinComb id);

  Field field() const { return field_; }
  std::size_t num_objects() const { return objects_.size(); }
  const std::string& object(std::size_t x) const { return objects_.at(x); }
  const std::vector<std::string>& objects() const { return objects_; }
  std::optional<std::size_t> object_index(const std::string& name) const;

  std::size_t dim() const { return basis_.size(); }
  const BasisVector& basis(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> basis_index(const std::string& label) const;
  /// Basis of _{target}C_{source}, in global order.
  const std::vector<std::size_t>& hom(std::size_t target, std::size_t source) const {
    return hom_[target * objects_.size() + source];
  }
  /// Position of basis vector i inside its hom block.
  std::size_t position(std::size_t i) const { return position_[i]; }

  /// g∘f on basis vectors; empty when not composable.
  const LinComb& comp(std::size_t g, std::size_t f) const;
  LinComb compose(const LinComb& g, const LinComb& f) const;
  const LinComb& identity(std::size_t x) const { return identities_.at(x); }

 private:
  Field field_;
  std::vector<std::string> objects_;
  std::map<std::string, std::size_t> object_index_;
  std::vector<BasisVector> basis_;
  std::map<std::string, std::size_t> label_index_;
  std::vector<std::vector<std::size_t>> hom_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<std::pair<std::size_t, LinComb>>> comp_;  // per g, sorted by f
  std::vector<LinComb> identities_;
};

using CatPtr = std::shared_ptr<const LinCat>;

/// Violated axioms; each entry names the offending basis vectors.
/// Throws StructuralError on malformed references (e.g. a composition
/// result leaving its hom block).
std::vector<std::string> validate_category(const LinCat& c);

class LinFunctor {
 public:
  LinFunctor(CatPtr source, CatPtr target, std::vector<std::size_t> object_map,
             std::vector<LinComb> images);

  const CatPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  std::size_t object(std::size_t x) const { return object_map_.at(x); }
  const LinComb& image(std::size_t f) const { return images_.at(f); }
  LinComb apply(const LinComb& v) const;
  /// Matrix of F_{y,x}: hom_C(x,y) -> hom_D(Fx,Fy) in block-local coordinates.
  SparseMatrix block(std::size_t y, std::size_t x) const;

  /// Functoriality violations (composition and identities).
  std::vector<std::string> validate() const;
  bool full() const;
  bool faithful() const;
  /// Density relative to a witness list: every target object must be the
  /// image of some object or be listed as isomorphic to one. Witnesses are
  /// pairs (target object, source object) whose isomorphism Fx ≅ y is
  /// asserted by the caller, not checked.
  bool dense(const std::vector<std::pair<std::size_t, std::size_t>>& iso_witnesses = {}) const;

 private:
  CatPtr source_;
  CatPtr target_;
  std::vector<std::size_t> object_map_;
  std::vector<LinComb> images_;
};

/// a(C): basis = global basis of C, product = composition (zero when not
/// composable), unit = sum of identities.
struct AlgebraView {
  Field field;
  std::size_t dim;
  std::vector<std::string> labels;
  /// mul[i * dim + j] = e_i * e_j.
  std::vector<LinComb> mul;
  LinComb unit;

  const LinComb& product(std::size_t i, std::size_t j) const { return mul[i * dim + j]; }
  LinComb multiply(const LinComb& a, const LinComb& b) const;
  /// Associativity and unit violations.
  std::vector<std::string> validate() const;
  bool operator==(const AlgebraView& o) const;
};

AlgebraView total_algebra(const LinCat& c);
/// Objects are pairs "(c,d)"; basis labels "f*g".
CatPtr tensor_product(const LinCat& c, const LinCat& d);
/// One object "*". Throws InvalidInput when the table is not associative or
/// the unit is not a two-sided unit.
CatPtr single_object_category(const AlgebraView& a);

/// Same field, objects, labels, hom blocks and structure constants.
bool same_structure(const LinCat& a, const LinCat& b);

}  // namespace hmcat
