/**
 * @file verify.hpp
 * @brief Theorem checks: each builds both sides of an isomorphism statement
 * on an instance and compares them exactly, row by row.
 *
 * A row either compares two dimension vectors (degrees 0..N) or records a
 * pass/fail structural check. Rows whose equality needs an exact
 * (co)invariants functor are marked; when |G| is not invertible in k they
 * are still computed and shown, but not enforced.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hmcat/cohomology.hpp"
#include "hmcat/fixtures.hpp"
#include "hmcat/io.hpp"

namespace hmcat {

enum class Verdict { verified, hypothesis_not_met, failed };
std::string verdict_name(Verdict v);

struct ReportRow {
  std::string label;
  /// Empty for structural checks.
  std::vector<std::size_t> left, right;
  /// "=" or "<=" for dimension rows.
  std::string relation = "=";
  bool holds = false;
  bool requires_exactness = false;
  /// Gated and the hypothesis fails: shown, not enforced.
  bool skipped = false;
  std::string witness;
};

struct TheoremReport {
  std::string theorem;
  std::string fixture;
  std::string field;
  std::size_t max_degree = 0;
  bool free = false;
  bool group_order_invertible = false;
  /// "direct", "resolving" (through M_G) or "".
  std::string route;
  std::vector<std::string> transversal;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::failed;

  /// Sets skipped flags and the verdict.
  void finalize();
  json to_json() const;
  std::string to_table() const;
};

struct VerifyOptions {
  std::size_t max_degree = 3;
  BuildLimits limits;
  PairBudget cup_budget;
};

/// Σ_D dim HH^D_n = dim HH_n and the cohomology analogue, cross-class
/// blocks of d zero, class {1} closed under cup.
TheoremReport verify_graded_decomposition(const Grading& gr, const std::string& name,
                                          const VerifyOptions& opt = {});

/// HH^{1}_*(C[G]) against H_*((C_•C)_G) and (HH_*C)_G. Non-free actions go
/// through M_G(C).
TheoremReport verify_skew_homology(const GroupAction& a, const std::string& name, const VerifyOptions& opt = {});
TheoremReport verify_skew_cohomology(const GroupAction& a, const std::string& name,
                                     const VerifyOptions& opt = {});

/// H(C_•M_G C) = H(C_•C), the same for cochains, and C^•L a cup-multiplicative
/// G-cochain map.
TheoremReport verify_equivalence(const GroupAction& a, const std::string& name, const VerifyOptions& opt = {});

/// Free actions only; throws NonFreeAction otherwise.
TheoremReport verify_galois(const GroupAction& a, const std::string& name, const VerifyOptions& opt = {});

/// HH^*_{1}(Λ[G]) against HH^*(Λ)^G along the route through M_G(Λ₁).
TheoremReport verify_skew_group_algebra(const AlgebraAction& aa, const std::string& name,
                                        const VerifyOptions& opt = {});

/// Theorem ids accepted by run_theorem.
const std::vector<std::string>& theorem_ids();
/// Runs one theorem on a document. Throws InvalidInput when the document
/// lacks what the theorem needs.
TheoremReport run_theorem(const std::string& id, const Document& d, const std::string& name,
                          const VerifyOptions& opt = {});
/// Every theorem that applies to the document.
std::vector<TheoremReport> run_all(const Document& d, const std::string& name, const VerifyOptions& opt = {});

/// Chain (or cochain) space dimensions for degrees 0..top, from hom
/// dimensions alone.
std::vector<std::size_t> estimate_dims(const LinCat& c, std::size_t top, bool cochain);

struct RandomOptions {
  Field field = Field::prime(5);
  std::size_t max_objects = 3;
  std::size_t max_hom = 2;
  /// Paths longer than a random length in 1..max_length are zero.
  std::size_t max_length = 2;
  /// Largest allowed chain or cochain space over every complex the skew
  /// checks build, at the given degree.
  std::size_t budget = 150000;
  std::size_t degree = 3;
};

/// A truncated path category with a C2 or C3 action (arrows permuted up to
/// sign), and a random grading by C2, C3 or S3 of the same category.
struct RandomInstance {
  std::uint64_t seed;
  GroupAction action;
  Grading grading;
};

RandomInstance random_instance(std::uint64_t seed, const RandomOptions& opt = {});

}  // namespace hmcat
