/**
 * @file group.hpp
 * @brief Finite groups by multiplication table, actions on linear
 * categories, orbits and transversals, (co)invariants of representations.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmcat/lincat.hpp"
#include "hmcat/linalg.hpp"

namespace hmcat {

/// Elements are 0..n-1 with 0 the identity. table[a][b] = a·b.
class FiniteGroup {
 public:
  /// Checks closure, identity at index 0, associativity and inverses;
  /// throws InvalidInput otherwise.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// S3 with elements 1, r, r², s, sr, sr².
  static FiniteGroup symmetric3();

  std::size_t size() const { return labels_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  static constexpr std::size_t identity() { return 0; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::optional<std::size_t> index(const std::string& label) const;

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

struct ConjClasses {
  /// Sorted by minimal element; classes[0] == {identity}.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  std::size_t size() const { return classes.size(); }
};

ConjClasses conjugacy_classes(const FiniteGroup& g);

/// G acting on a LinCat: object permutation and basis images per element.
struct GroupAction {
  FiniteGroup group;
  CatPtr cat;
  /// objects[s][x] = s·x
  std::vector<std::vector<std::size_t>> objects;
  /// images[s][f] = s·f as a combination of basis vectors of _{sy}C_{sx}.
  std::vector<std::vector<LinComb>> images;

  std::size_t act(std::size_t s, std::size_t x) const { return objects[s][x]; }
  const LinComb& image(std::size_t s, std::size_t f) const { return images[s][f]; }
  LinComb apply(std::size_t s, const LinComb& v) const;
};

/// The action where every element fixes everything.
GroupAction trivial_action(const FiniteGroup& g, CatPtr c);

/// Empty iff the data is a functorial action by k-linear automorphisms.
/// Throws StructuralError on shape mismatches.
std::vector<std::string> validate_action(const GroupAction& a);

/// Diagonal action on the tensor product of the two categories.
GroupAction tensor_action(const GroupAction& a, const GroupAction& b, CatPtr product);

struct OrbitData {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> transversal;  // one per orbit, same order
  std::vector<std::size_t> orbit_of;
  std::vector<std::size_t> rep;  // u(x)
  bool free = false;
  /// When free: the unique s with x = s·u(x).
  std::vector<std::size_t> witness;
};

/// Representatives come from `preferred` when it meets an orbit, else the
/// lowest index.
OrbitData orbits_transversal(const GroupAction& a, const std::vector<std::size_t>& preferred = {});

/// Per-element matrices of a linear representation.
struct Representation {
  FiniteGroup group;
  std::vector<SparseMatrix> mats;
  std::size_t dim() const { return mats.empty() ? 0 : mats[0].rows(); }
};

/// Throws InvalidInput unless mats[s]·mats[t] = mats[st] and mats[1] = id.
void check_representation(const Representation& rep);

/// V_G = V / span{(s−1)v}.
Quotient coinvariants(const Representation& rep);

struct InvariantResult {
  Subspace space;
  /// True when |G| is invertible and the averaging map was checked to
  /// identify V_G with V^G.
  bool averaging_checked = false;
};

InvariantResult invariants(const Representation& rep);

}  // namespace hmcat
