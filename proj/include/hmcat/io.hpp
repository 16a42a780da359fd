/**
 * @file io.hpp
 * @brief JSON documents for categories, groups, actions, gradings and
 * cochains.
 *
 * A document is an object with a required "category" and optional
 * "group", "action", "grading" and "transversal" members:
 *
 *   {"category": {"field": 5, "objects": ["x"],
 *                 "hom": [{"source": "x", "target": "x", "basis": ["1", "t"]}],
 *                 "comp": [{"g": "t", "f": "t", "value": []}, ...],
 *                 "identities": {"x": [["1", "1"]]}},
 *    "group": {"elements": ["1", "s"], "table": [["1", "s"], ["s", "1"]]},
 *    "action": {"s": {"objects": {"x": "x"}, "morphisms": {"t": [["t", "-1"]]}}}}
 *
 * Linear combinations are arrays of [label, coefficient] pairs; a
 * coefficient is an integer or a string "n" or "n/d". Compositions not
 * listed are zero. The "field" is a prime or "Q".
 */
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hmcat/cohomology.hpp"

namespace hmcat {

using json = nlohmann::json;

struct Document {
  CatPtr cat;
  std::optional<FiniteGroup> group;
  std::optional<GroupAction> action;
  std::optional<Grading> grading;
  /// Preferred transversal objects, by index.
  std::vector<std::size_t> transversal;
};

Field field_from_json(const json& j);
json field_to_json(Field f);

/// `field` overrides the document's field; coefficients are reread in it.
CatPtr category_from_json(const json& j, std::optional<Field> field = std::nullopt);
json category_to_json(const LinCat& c);

FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);

/// Elements missing from the action act as the identity.
GroupAction action_from_json(const json& j, const FiniteGroup& g, CatPtr c);
json action_to_json(const GroupAction& a);

/// Basis label -> element label; missing labels have degree 1.
Grading grading_from_json(const json& j, const FiniteGroup& g, CatPtr c);
json grading_to_json(const Grading& gr);

/// Throws InvalidInput on malformed documents and StructuralError on
/// references to unknown objects or labels.
Document document_from_json(const json& j, std::optional<Field> field = std::nullopt);
json document_to_json(const Document& d);
Document load_document(const std::string& path, std::optional<Field> field = std::nullopt);

/// {"degree": n, "entries": [{"start": x, "arrows": [...], "value": comb}]}
/// with arrows listed f_1 first.
json cochain_to_json(const CochainComplex& cc, std::size_t n, const SparseVector& v);
/// Returns the degree and the coordinates in `cc`.
std::pair<std::size_t, SparseVector> cochain_from_json(const CochainComplex& cc, const json& j);

}  // namespace hmcat
