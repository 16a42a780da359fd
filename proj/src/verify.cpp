#include "hmcat/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace hmcat {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string first_difference(const std::vector<std::size_t>& l, const std::vector<std::size_t>& r, bool le) {
  for (std::size_t n = 0; n < std::max(l.size(), r.size()); ++n) {
    const std::size_t a = n < l.size() ? l[n] : 0, b = n < r.size() ? r[n] : 0;
    if (le ? a > b : a != b)
      return "degree " + std::to_string(n) + ": left " + std::to_string(a) + ", right " + std::to_string(b);
  }
  return "";
}

ReportRow dims_row(std::string label, std::vector<std::size_t> left, std::vector<std::size_t> right,
                   bool gated = false) {
  ReportRow r;
  r.label = std::move(label);
  r.left = std::move(left);
  r.right = std::move(right);
  r.witness = first_difference(r.left, r.right, false);
  r.holds = r.witness.empty();
  r.requires_exactness = gated;
  return r;
}

ReportRow le_row(std::string label, std::vector<std::size_t> left, std::vector<std::size_t> right,
                 bool gated = false) {
  ReportRow r;
  r.label = std::move(label);
  r.left = std::move(left);
  r.right = std::move(right);
  r.relation = "<=";
  r.witness = first_difference(r.left, r.right, true);
  r.holds = r.witness.empty();
  r.requires_exactness = gated;
  return r;
}

ReportRow check_row(std::string label, bool holds, std::string witness = "") {
  ReportRow r;
  r.label = std::move(label);
  r.relation = "";
  r.holds = holds;
  if (!holds) r.witness = std::move(witness);
  return r;
}

template <class T>
std::string first_or_empty(const std::vector<T>& v) {
  if (v.empty()) return "";
  std::ostringstream os;
  if constexpr (std::is_same_v<T, std::string>)
    os << v.front();
  else if constexpr (std::is_same_v<T, std::pair<std::size_t, std::size_t>>)
    os << "degree " << v.front().first << ", element " << v.front().second;
  else
    os << "degree " << v.front();
  return os.str() + (v.size() > 1 ? " (+" + std::to_string(v.size() - 1) + " more)" : "");
}

std::vector<std::size_t> hdims(const Complex& c, std::size_t N) { return homology(c, N).dims; }

std::vector<std::size_t> sum_by_class(const HomologyResult& h) {
  std::vector<std::size_t> s(h.dims.size(), 0);
  for (const auto& row : h.by_class)
    for (std::size_t n = 0; n < row.size(); ++n) s[n] += row[n];
  return s;
}

HomologyResult graded_homology(const Grading& gr, const VerifyOptions& opt) {
  ChainComplex cc = bar_complex(gr.cat, opt.max_degree, opt.limits);
  class_decomposition(cc, gr, conjugacy_classes(gr.group));
  return homology(cc.cx, opt.max_degree);
}

HomologyResult graded_cohomology(const Grading& gr, const VerifyOptions& opt) {
  CochainComplex cc = cochain_complex(gr.cat, opt.max_degree, opt.limits);
  class_decomposition_cochains(cc, gr, conjugacy_classes(gr.group));
  return homology(cc.cx, opt.max_degree);
}

std::string class_label(const FiniteGroup& g, const std::vector<std::size_t>& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? ", " : "") + g.label(cls[i]);
  return s + "}";
}

void class_notes(TheoremReport& r, const std::string& what, const FiniteGroup& g, const HomologyResult& h) {
  const ConjClasses cl = conjugacy_classes(g);
  for (std::size_t k = 0; k < h.by_class.size(); ++k)
    r.notes.push_back(what + " class " + class_label(g, cl.classes[k]) + ": " + join(h.by_class[k]));
}

TheoremReport header(const std::string& theorem, const std::string& name, const GroupAction& a,
                     const VerifyOptions& opt) {
  TheoremReport r;
  r.theorem = theorem;
  r.fixture = name;
  r.field = a.cat->field().name();
  r.max_degree = opt.max_degree;
  r.group_order_invertible = a.cat->field().is_unit(static_cast<std::int64_t>(a.group.size()));
  const OrbitData o = orbits_transversal(a);
  r.free = o.free;
  for (auto x : o.transversal) r.transversal.push_back(a.cat->object(x));
  return r;
}

std::string transfer_witness(const std::vector<bool>& ab, const std::vector<bool>& ba,
                             const std::vector<std::size_t>& ac, const std::vector<std::size_t>& bc) {
  for (std::size_t n = 0; n < ab.size(); ++n) {
    if (!ab[n]) return "AB != id in degree " + std::to_string(n);
    if (!ba[n]) return "BA != id in degree " + std::to_string(n);
  }
  if (!ac.empty()) return "A fails to commute with d in degree " + std::to_string(ac.front());
  if (!bc.empty()) return "B fails to commute with d in degree " + std::to_string(bc.front());
  return "";
}

void add_homology_transfer_rows(TheoremReport& r, const HomologyTransfer& t, const std::string& cat,
                                const std::vector<std::size_t>& class_one_skew) {
  r.rows.push_back(check_row("A, B are mutually inverse chain maps for " + cat, t.ok(),
                             transfer_witness(t.ab_identity, t.ba_identity, t.a_chain_failures,
                                              t.b_chain_failures)));
  r.rows.push_back(dims_row("HH^{1}_n(" + cat + "_T[G]) = HH^{1}_n(" + cat + "[G])",
                            hdims(t.target, t.max_degree), class_one_skew));
}

void add_cohomology_transfer_rows(TheoremReport& r, const CohomologyTransfer& t, const std::string& cat,
                                  const std::vector<std::size_t>& class_one_skew) {
  const std::string w = transfer_witness(t.ab_identity, t.ba_identity, t.a_chain_failures, t.b_chain_failures);
  r.rows.push_back(check_row("A, B are mutually inverse cochain maps for " + cat, w.empty(), w));
  r.rows.push_back(check_row("A is cup-multiplicative (" + std::to_string(t.cup_pairs_checked) + " pairs)",
                             t.a_cup_failures.empty() && t.cup_pairs_checked > 0,
                             t.cup_pairs_checked ? first_or_empty(t.a_cup_failures) : "no pairs checked"));
  r.rows.push_back(dims_row("HH^n_{1}(" + cat + "_T[G]) = HH^n_{1}(" + cat + "[G])",
                            hdims(t.target, t.max_degree), class_one_skew));
}

std::string equivariance_witness(const ComplexMap& m, const Complex& src, const Complex& dst) {
  for (std::size_t n = 0; n < m.size(); ++n)
    for (std::size_t s = 0; s < src.action[n].size(); ++s)
      if (!(m[n] * src.action[n][s] == dst.action[n][s] * m[n]))
        return "degree " + std::to_string(n) + ", element " + std::to_string(s);
  return "";
}

/// Rows for H(C_•M_G C) = H(C_•C) and C_•L; leaves both complexes with actions.
void equivalence_homology_rows(TheoremReport& r, const GroupAction& a, const ResolvingResult& res,
                               ChainComplex& cm, ChainComplex& cc, const VerifyOptions& opt) {
  const std::size_t N = opt.max_degree;
  r.rows.push_back(dims_row("HH_n(M_G C) = HH_n(C)", hdims(cm.cx, N), hdims(cc.cx, N)));
  attach_g_action(cm, res.action);
  attach_g_action(cc, a);
  const ComplexMap lmap = functor_chain_map(res.L, cm, cc);
  const auto bad = chain_map_failures(lmap, cm.cx, cc.cx, N + 1);
  const std::string eq = equivariance_witness(lmap, cm.cx, cc.cx);
  r.rows.push_back(check_row("C_.L is a G-equivariant chain map", bad.empty() && eq.empty(),
                             bad.empty() ? "not equivariant at " + eq : first_or_empty(bad)));
}

void equivalence_cohomology_rows(TheoremReport& r, const GroupAction& a, const ResolvingResult& res,
                                 CochainComplex& cm, CochainComplex& cc, const VerifyOptions& opt) {
  const std::size_t N = opt.max_degree;
  r.rows.push_back(dims_row("HH^n(M_G C) = HH^n(C)", hdims(cm.cx, N), hdims(cc.cx, N)));
  attach_g_action_cochains(cm, res.action);
  attach_g_action_cochains(cc, a);
  const Transport t = transport_cochains(res.L, cm, cc, opt.cup_budget);
  std::string w = first_or_empty(t.chain_failures);
  if (w.empty()) w = first_or_empty(t.cup_failures);
  if (w.empty()) w = "not equivariant at " + first_or_empty(t.equivariance_failures);
  r.rows.push_back(check_row("C^.L is a cup-multiplicative G-cochain map", t.ok(), w));
}

ReportRow free_row(const OrbitData& o) {
  return check_row("G acts freely on the objects of M_G(C)", o.free, "some object has a nontrivial stabilizer");
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::hypothesis_not_met:
      return "hypothesis-not-met";
    case Verdict::failed:
      return "FAILED";
  }
  return "FAILED";
}

void TheoremReport::finalize() {
  bool failed = false, skipped_any = false;
  for (auto& row : rows) {
    row.skipped = row.requires_exactness && !group_order_invertible;
    if (row.skipped)
      skipped_any = true;
    else if (!row.holds)
      failed = true;
  }
  verdict = failed ? Verdict::failed : skipped_any ? Verdict::hypothesis_not_met : Verdict::verified;
}

json TheoremReport::to_json() const {
  json j;
  j["theorem"] = theorem;
  j["fixture"] = fixture;
  j["field"] = field;
  j["max_degree"] = max_degree;
  j["hypotheses"] = {{"free", free},
                     {"group_order_invertible", group_order_invertible},
                     {"exact", group_order_invertible}};
  if (!route.empty()) j["route"] = route;
  j["transversal"] = transversal;
  j["rows"] = json::array();
  for (const auto& row : rows) {
    json jr{{"label", row.label}, {"holds", row.holds}, {"requires_exactness", row.requires_exactness},
            {"skipped", row.skipped}};
    if (!row.relation.empty()) {
      jr["relation"] = row.relation;
      jr["left"] = row.left;
      jr["right"] = row.right;
    }
    if (!row.witness.empty()) jr["witness"] = row.witness;
    j["rows"].push_back(jr);
  }
  j["notes"] = notes;
  j["verdict"] = verdict_name(verdict);
  return j;
}

std::string TheoremReport::to_table() const {
  std::ostringstream os;
  os << theorem << " on " << fixture << " over " << field << ", degrees 0.." << max_degree << "\n";
  os << "  free: " << (free ? "yes" : "no") << "   |G| invertible: " << (group_order_invertible ? "yes" : "no");
  if (!route.empty()) os << "   route: " << route;
  if (!transversal.empty()) {
    os << "   T = {";
    for (std::size_t i = 0; i < transversal.size(); ++i) os << (i ? ", " : "") << transversal[i];
    os << "}";
  }
  os << "\n";
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.label.size());
  for (const auto& row : rows) {
    os << "  " << row.label << std::string(width - row.label.size() + 2, ' ');
    if (!row.relation.empty()) os << "[" << join(row.left) << "] " << row.relation << " [" << join(row.right) << "]  ";
    os << (row.skipped ? (row.holds ? "holds (not enforced)" : "differs (not enforced)") : row.holds ? "ok" : "FAIL");
    if (!row.holds && !row.witness.empty()) os << "  (" << row.witness << ")";
    os << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << "  verdict: " << verdict_name(verdict) << "\n";
  return os.str();
}

TheoremReport verify_graded_decomposition(const Grading& gr, const std::string& name, const VerifyOptions& opt) {
  TheoremReport r;
  r.theorem = "graded-decomposition";
  r.fixture = name;
  r.field = gr.cat->field().name();
  r.max_degree = opt.max_degree;
  r.group_order_invertible = gr.cat->field().is_unit(static_cast<std::int64_t>(gr.group.size()));
  const std::size_t N = opt.max_degree;
  const auto problems = validate_grading(gr);
  r.rows.push_back(check_row("grading is multiplicative", problems.empty(), first_or_empty(problems)));
  if (!problems.empty()) {
    r.finalize();
    return r;
  }
  const ConjClasses cl = conjugacy_classes(gr.group);

  ChainComplex cc = bar_complex(gr.cat, N, opt.limits);
  const auto total = hdims(cc.cx, N);
  std::string w;
  try {
    class_decomposition(cc, gr, cl);
  } catch (const InvalidInput& e) {
    w = e.what();
  }
  r.rows.push_back(check_row("d is block diagonal over classes (chains)", w.empty(), w));
  if (w.empty()) {
    const HomologyResult h = homology(cc.cx, N);
    r.rows.push_back(dims_row("sum_D HH^D_n = HH_n", sum_by_class(h), total));
    class_notes(r, "HH_n", gr.group, h);
  }

  CochainComplex co = cochain_complex(gr.cat, N, opt.limits);
  const auto ctotal = hdims(co.cx, N);
  w.clear();
  try {
    class_decomposition_cochains(co, gr, cl);
  } catch (const InvalidInput& e) {
    w = e.what();
  }
  r.rows.push_back(check_row("d is block diagonal over classes (cochains)", w.empty(), w));
  if (w.empty()) {
    const HomologyResult h = homology(co.cx, N);
    r.rows.push_back(dims_row("sum_D HH^n_D = HH^n", sum_by_class(h), ctotal));
    class_notes(r, "HH^n", gr.group, h);
    const auto bad = cup_class_failures(co, opt.cup_budget);
    r.rows.push_back(check_row("class-{1} cochains are closed under cup", bad.empty(), first_or_empty(bad)));
  }
  r.finalize();
  return r;
}

TheoremReport verify_skew_homology(const GroupAction& a, const std::string& name, const VerifyOptions& opt) {
  TheoremReport r = header("skew-homology", name, a, opt);
  const std::size_t N = opt.max_degree;
  const OrbitData o = orbits_transversal(a);
  const SkewResult skew = skew_category(a);
  const auto left = graded_homology(skew.grading, opt).by_class.at(0);

  if (o.free) {
    r.route = "direct";
    const HomologyTransfer t = transfer_maps_homology(a, o, N, opt.limits);
    const auto coinv = hdims(t.source.cx, N);
    r.rows.push_back(dims_row("HH^{1}_n(C[G]) = H_n((C_.C)_G)", left, coinv));
    add_homology_transfer_rows(r, t, "C", left);
    ChainComplex cc = bar_complex(a.cat, N, opt.limits);
    attach_g_action(cc, a);
    const auto rep = homology_rep_dims(cc.cx, N);
    r.rows.push_back(dims_row("H_n((C_.C)_G) = (HH_n C)_G", coinv, rep, true));
    r.rows.push_back(dims_row("HH^{1}_n(C[G]) = (HH_n C)_G", left, rep, true));
  } else {
    r.route = "resolving";
    const ResolvingResult res = resolving_category(a);
    const OrbitData om = orbits_transversal(res.action);
    r.rows.push_back(free_row(om));
    ChainComplex cm = bar_complex(res.cat, N, opt.limits);
    ChainComplex cc = bar_complex(a.cat, N, opt.limits);
    equivalence_homology_rows(r, a, res, cm, cc, opt);
    const SkewResult sm = skew_category(res.action);
    const auto left_m = graded_homology(sm.grading, opt).by_class.at(0);
    const HomologyTransfer t = transfer_maps_homology(res.action, om, N, opt.limits);
    const auto coinv_m = hdims(t.source.cx, N);
    r.rows.push_back(dims_row("HH^{1}_n(M_G(C)[G]) = H_n((C_.M_G C)_G)", left_m, coinv_m));
    add_homology_transfer_rows(r, t, "M_G(C)", left_m);
    r.rows.push_back(dims_row("HH^{1}_n(M_G(C)[G]) = HH^{1}_n(C[G])", left_m, left));
    const auto coinv = hdims(coinvariant_complex(cc.cx).cx, N);
    const auto rep = homology_rep_dims(cc.cx, N);
    r.rows.push_back(dims_row("H_n((C_.M_G C)_G) = H_n((C_.C)_G)", coinv_m, coinv, true));
    r.rows.push_back(dims_row("HH^{1}_n(C[G]) = H_n((C_.C)_G)", left, coinv, true));
    r.rows.push_back(dims_row("HH^{1}_n(C[G]) = (HH_n C)_G", left, rep, true));
  }
  r.finalize();
  return r;
}

TheoremReport verify_skew_cohomology(const GroupAction& a, const std::string& name, const VerifyOptions& opt) {
  TheoremReport r = header("skew-cohomology", name, a, opt);
  const std::size_t N = opt.max_degree;
  const OrbitData o = orbits_transversal(a);
  const SkewResult skew = skew_category(a);
  const auto left = graded_cohomology(skew.grading, opt).by_class.at(0);

  if (o.free) {
    r.route = "direct";
    const CohomologyTransfer t = transfer_maps_cohomology(a, o, N, opt.limits, opt.cup_budget);
    const auto inv = hdims(t.source.cx, N);
    r.rows.push_back(dims_row("HH^n_{1}(C[G]) = H^n((C^.C)^G)", left, inv));
    add_cohomology_transfer_rows(r, t, "C", left);
    CochainComplex cc = cochain_complex(a.cat, N, opt.limits);
    attach_g_action_cochains(cc, a);
    const auto bad = cup_equivariance_failures(cc, opt.cup_budget);
    r.rows.push_back(check_row("G acts on C^.C by cup automorphisms", bad.empty(), first_or_empty(bad)));
    const auto rep = homology_rep_dims(cc.cx, N);
    r.rows.push_back(dims_row("H^n((C^.C)^G) = HH^n(C)^G", inv, rep, true));
    r.rows.push_back(dims_row("HH^n_{1}(C[G]) = HH^n(C)^G", left, rep, true));
  } else {
    r.route = "resolving";
    const ResolvingResult res = resolving_category(a);
    const OrbitData om = orbits_transversal(res.action);
    r.rows.push_back(free_row(om));
    CochainComplex cm = cochain_complex(res.cat, N, opt.limits);
    CochainComplex cc = cochain_complex(a.cat, N, opt.limits);
    equivalence_cohomology_rows(r, a, res, cm, cc, opt);
    const SkewResult sm = skew_category(res.action);
    const auto left_m = graded_cohomology(sm.grading, opt).by_class.at(0);
    const CohomologyTransfer t = transfer_maps_cohomology(res.action, om, N, opt.limits, opt.cup_budget);
    const auto inv_m = hdims(t.source.cx, N);
    r.rows.push_back(dims_row("HH^n_{1}(M_G(C)[G]) = H^n((C^.M_G C)^G)", left_m, inv_m));
    add_cohomology_transfer_rows(r, t, "M_G(C)", left_m);
    r.rows.push_back(dims_row("HH^n_{1}(M_G(C)[G]) = HH^n_{1}(C[G])", left_m, left));
    const auto inv = hdims(invariant_complex(cc.cx).cx, N);
    const auto rep = homology_rep_dims(cc.cx, N);
    r.rows.push_back(dims_row("H^n((C^.M_G C)^G) = H^n((C^.C)^G)", inv_m, inv, true));
    r.rows.push_back(dims_row("HH^n_{1}(C[G]) = H^n((C^.C)^G)", left, inv, true));
    r.rows.push_back(dims_row("HH^n_{1}(C[G]) = HH^n(C)^G", left, rep, true));
  }
  r.finalize();
  return r;
}

TheoremReport verify_equivalence(const GroupAction& a, const std::string& name, const VerifyOptions& opt) {
  TheoremReport r = header("equivalence", name, a, opt);
  r.route = "resolving";
  const std::size_t N = opt.max_degree;
  const ResolvingResult res = resolving_category(a);
  r.rows.push_back(free_row(orbits_transversal(res.action)));
  const bool dense = res.L.dense();
  r.rows.push_back(check_row("L : M_G(C) -> C is full, faithful and onto objects",
                             res.L.validate().empty() && res.L.full() && res.L.faithful() && dense,
                             "L fails functoriality, fullness, faithfulness or density"));
  ChainComplex cm = bar_complex(res.cat, N, opt.limits);
  ChainComplex cc = bar_complex(a.cat, N, opt.limits);
  equivalence_homology_rows(r, a, res, cm, cc, opt);
  CochainComplex km = cochain_complex(res.cat, N, opt.limits);
  CochainComplex kc = cochain_complex(a.cat, N, opt.limits);
  equivalence_cohomology_rows(r, a, res, km, kc, opt);
  r.finalize();
  return r;
}

TheoremReport verify_galois(const GroupAction& a, const std::string& name, const VerifyOptions& opt) {
  const OrbitData o = orbits_transversal(a);
  if (!o.free) throw NonFreeAction("a Galois covering needs a free action");
  TheoremReport r = header("galois", name, a, opt);
  r.route = "direct";
  const std::size_t N = opt.max_degree;
  const QuotientResult q = quotient_category(a, o);
  const SkewResult skew = skew_category(a);
  const TransversalResult tr = transversal_subcategory(skew, a, o);
  const auto cmp = compare_quotient_transversal(q, tr);
  r.rows.push_back(check_row("C/G and C_T[G] agree by a homogeneous isomorphism", cmp.empty(),
                             first_or_empty(cmp)));
  const auto fprob = q.projection.validate();
  r.rows.push_back(check_row("C -> C/G is a functor", fprob.empty(), first_or_empty(fprob)));

  const HomologyResult hq = graded_homology(q.grading, opt);
  const HomologyTransfer ht = transfer_maps_homology(a, o, N, opt.limits);
  const auto coinv = hdims(ht.source.cx, N);
  r.rows.push_back(dims_row("HH^{1}_n(C/G) = H_n((C_.C)_G)", hq.by_class.at(0), coinv));
  ChainComplex cc = bar_complex(a.cat, N, opt.limits);
  attach_g_action(cc, a);
  r.rows.push_back(dims_row("HH^{1}_n(C/G) = (HH_n C)_G", hq.by_class.at(0), homology_rep_dims(cc.cx, N), true));
  class_notes(r, "HH_n(C/G)", a.group, hq);

  const HomologyResult cq = graded_cohomology(q.grading, opt);
  const CohomologyTransfer ct = transfer_maps_cohomology(a, o, N, opt.limits, opt.cup_budget);
  r.rows.push_back(dims_row("HH^n_{1}(C/G) = H^n((C^.C)^G)", cq.by_class.at(0), hdims(ct.source.cx, N)));
  CochainComplex co = cochain_complex(a.cat, N, opt.limits);
  attach_g_action_cochains(co, a);
  const auto crep = homology_rep_dims(co.cx, N);
  r.rows.push_back(dims_row("HH^n(C)^G = HH^n_{1}(C/G)", crep, cq.by_class.at(0), true));
  r.rows.push_back(le_row("HH^n(C)^G <= HH^n(C/G)", crep, cq.dims, true));
  r.rows.push_back(dims_row("HH^n(C/G) = sum over classes", sum_by_class(cq), cq.dims));
  class_notes(r, "HH^n(C/G)", a.group, cq);
  r.finalize();
  return r;
}

TheoremReport verify_skew_group_algebra(const AlgebraAction& aa, const std::string& name,
                                        const VerifyOptions& opt) {
  const std::size_t N = opt.max_degree;
  const CatPtr l1 = single_object_category(aa.lambda);
  const GroupAction act = algebra_action(aa.group, l1, aa.mats);
  TheoremReport r = header("skew-group-algebra", name, act, opt);
  r.route = "resolving";
  r.rows.push_back(check_row("a(Lambda_1) = Lambda", total_algebra(*l1) == aa.lambda));
  const auto aprob = validate_action(act);
  r.rows.push_back(check_row("G acts on Lambda by algebra automorphisms", aprob.empty(), first_or_empty(aprob)));
  if (!aprob.empty()) {
    r.finalize();
    return r;
  }
  const MatrixSkewResult ms = matrix_skew_algebra(aa.lambda, aa.group, aa.mats);
  r.rows.push_back(check_row("M_G(Lambda) = a(M_G(Lambda_1)) with G free on " +
                                 std::to_string(ms.idempotents.size()) + " idempotents",
                             ms.free && ms.matches_resolving && ms.idempotents.size() == aa.group.size()));

  const ResolvingResult res = resolving_category(act);
  CochainComplex cm = cochain_complex(res.cat, N, opt.limits);
  CochainComplex cl = cochain_complex(l1, N, opt.limits);
  const auto hl = hdims(cl.cx, N);
  const auto alg_dims = estimate_dims(*single_object_category(ms.algebra), N + 1, true);
  if (*std::max_element(alg_dims.begin(), alg_dims.end()) <= opt.limits.max_dim) {
    const CochainComplex ca = cochain_complex(single_object_category(ms.algebra), N, opt.limits);
    r.rows.push_back(dims_row("HH^n(Lambda) = HH^n(M_G(Lambda))", hl, hdims(ca.cx, N)));
  } else {
    r.notes.push_back("HH^n(M_G(Lambda)) as an algebra exceeds the size limit; compared through M_G(Lambda_1)");
  }
  equivalence_cohomology_rows(r, act, res, cm, cl, opt);

  const SkewResult sl = skew_category(act);
  const auto left = graded_cohomology(sl.grading, opt).by_class.at(0);
  const SkewResult sm = skew_category(res.action);
  const auto left_m = graded_cohomology(sm.grading, opt).by_class.at(0);
  r.rows.push_back(dims_row("HH^n_{1}(Lambda[G]) = HH^n_{1}(M_G(Lambda_1)[G])", left, left_m));
  const CohomologyTransfer t =
      transfer_maps_cohomology(res.action, orbits_transversal(res.action), N, opt.limits, opt.cup_budget);
  const auto inv_m = hdims(t.source.cx, N);
  r.rows.push_back(dims_row("HH^n_{1}(M_G(Lambda_1)[G]) = H^n((C^.M_G(Lambda_1))^G)", left_m, inv_m));
  add_cohomology_transfer_rows(r, t, "M_G(Lambda_1)", left_m);

  const auto inv = hdims(invariant_complex(cl.cx).cx, N);
  const auto rep = homology_rep_dims(cl.cx, N);
  r.rows.push_back(dims_row("H^n((C^.M_G(Lambda_1))^G) = H^n((C^.Lambda)^G)", inv_m, inv, true));
  r.rows.push_back(dims_row("HH^n_{1}(Lambda[G]) = H^n((C^.Lambda)^G)", left, inv, true));
  r.rows.push_back(dims_row("HH^n_{1}(Lambda[G]) = HH^n(Lambda)^G", left, rep, true));
  r.finalize();
  return r;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"graded-decomposition", "skew-homology",  "skew-cohomology",
                                            "equivalence",          "galois",         "skew-group-algebra"};
  return ids;
}

TheoremReport run_theorem(const std::string& id, const Document& d, const std::string& name,
                          const VerifyOptions& opt) {
  if (id == "graded-decomposition") {
    if (d.grading) return verify_graded_decomposition(*d.grading, name, opt);
    if (d.action) return verify_graded_decomposition(skew_category(*d.action).grading, name + "[G]", opt);
    throw InvalidInput("graded-decomposition needs a grading or an action");
  }
  if (!d.action) throw InvalidInput(id + " needs a group action");
  const GroupAction& a = *d.action;
  if (id == "skew-homology") return verify_skew_homology(a, name, opt);
  if (id == "skew-cohomology") return verify_skew_cohomology(a, name, opt);
  if (id == "equivalence") return verify_equivalence(a, name, opt);
  if (id == "galois") return verify_galois(a, name, opt);
  if (id == "skew-group-algebra") {
    if (a.cat->num_objects() != 1) throw InvalidInput("skew-group-algebra needs a single-object category");
    AlgebraAction aa{total_algebra(*a.cat), a.group, {}};
    for (std::size_t s = 0; s < a.group.size(); ++s)
      aa.mats.push_back(SparseMatrix::from_columns(a.cat->field(), a.cat->dim(), a.images[s]));
    return verify_skew_group_algebra(aa, name, opt);
  }
  throw InvalidInput("unknown theorem '" + id + "'");
}

std::vector<TheoremReport> run_all(const Document& d, const std::string& name, const VerifyOptions& opt) {
  std::vector<TheoremReport> out;
  for (const auto& id : theorem_ids()) {
    if (id != "graded-decomposition" && !d.action) continue;
    if (id == "graded-decomposition" && !d.grading && !d.action) continue;
    if (id == "galois" && !orbits_transversal(*d.action).free) continue;
    if (id == "skew-group-algebra" && d.action->cat->num_objects() != 1) continue;
    out.push_back(run_theorem(id, d, name, opt));
  }
  return out;
}

namespace {

using DimMatrix = std::vector<std::vector<std::size_t>>;  // m[y][x] = dim _yC_x

std::vector<std::size_t> estimate_from(const DimMatrix& m, std::size_t top, bool cochain) {
  const std::size_t n = m.size();
  auto mul = [&](const DimMatrix& a, const DimMatrix& b) {
    DimMatrix c(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  DimMatrix p(n, std::vector<std::size_t>(n, 0));  // paths of length deg
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  std::vector<std::size_t> out;
  for (std::size_t deg = 0; deg <= top; ++deg) {
    std::size_t s = 0;
    if (cochain) {
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) s += p[y][x] * m[y][x];
    } else {
      const DimMatrix q = mul(m, p);
      for (std::size_t x = 0; x < n; ++x) s += q[x][x];
    }
    out.push_back(s);
    p = mul(m, p);
  }
  return out;
}

DimMatrix dim_matrix(const LinCat& c) {
  DimMatrix m(c.num_objects(), std::vector<std::size_t>(c.num_objects()));
  for (std::size_t y = 0; y < c.num_objects(); ++y)
    for (std::size_t x = 0; x < c.num_objects(); ++x) m[y][x] = c.hom(y, x).size();
  return m;
}

/// Hom dimensions of C[G], M_G(C) and M_G(C)[G] from those of C.
DimMatrix skew_dims(const DimMatrix& m, const std::vector<std::vector<std::size_t>>& act) {
  const std::size_t n = m.size();
  DimMatrix s(n, std::vector<std::size_t>(n, 0));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& perm : act) s[y][x] += m[y][perm[x]];
  return s;
}

DimMatrix resolving_dims(const DimMatrix& m, std::size_t g) {
  const std::size_t n = m.size();
  DimMatrix r(g * n, std::vector<std::size_t>(g * n));
  for (std::size_t i = 0; i < g * n; ++i)
    for (std::size_t j = 0; j < g * n; ++j) r[i][j] = m[i % n][j % n];
  return r;
}

std::vector<std::vector<std::size_t>> resolving_perms(const FiniteGroup& g,
                                                      const std::vector<std::vector<std::size_t>>& act) {
  const std::size_t n = act[0].size();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r = 0; r < g.size(); ++r) {
    std::vector<std::size_t> p(g.size() * n);
    for (std::size_t s = 0; s < g.size(); ++s)
      for (std::size_t x = 0; x < n; ++x) p[s * n + x] = g.mul(r, s) * n + act[r][x];
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t largest(const DimMatrix& m, std::size_t top) {
  std::size_t best = 0;
  for (bool cochain : {false, true})
    for (auto d : estimate_from(m, top, cochain)) best = std::max(best, d);
  return best;
}

struct Word {
  std::vector<std::size_t> arrows;  // applied first to last
  std::size_t source, target;
};

}  // namespace

std::vector<std::size_t> estimate_dims(const LinCat& c, std::size_t top, bool cochain) {
  return estimate_from(dim_matrix(c), top, cochain);
}

RandomInstance random_instance(std::uint64_t seed, const RandomOptions& opt) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const Field f = opt.field;
  const Scalar one = Scalar::one(f);

  for (std::size_t attempt = 0; attempt < 10000; ++attempt) {
    const FiniteGroup g = FiniteGroup::cyclic(pick(2) ? 2 : 3);
    const std::size_t gs = g.size();
    const std::size_t n = 1 + pick(opt.max_objects);
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
    if (gs == 2) {
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (sigma[i] == i && pick(2)) {
          const std::size_t j = i + 1 + pick(n - i - 1);
          if (sigma[j] == j) std::swap(sigma[i], sigma[j]);
        }
    } else if (n == 3 && pick(2)) {
      sigma = {1, 2, 0};
    }
    std::vector<std::vector<std::size_t>> obj(gs, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t y = x;
      for (std::size_t k = 0; k < gs; ++k) {
        obj[k][x] = y;
        y = sigma[y];
      }
    }

    // Arrows as a signed G-set.
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
    std::vector<std::vector<std::pair<std::size_t, int>>> arrow_act(gs);
    const std::size_t max_length = 1 + pick(opt.max_length);
    auto words_of = [&]() {
      std::vector<Word> words;
      std::vector<Word> layer;
      for (std::size_t a = 0; a < arrows.size(); ++a) layer.push_back({{a}, arrows[a].first, arrows[a].second});
      for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
        words.insert(words.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const auto& w : layer)
          for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].first == w.target) {
              Word v = w;
              v.arrows.push_back(a);
              v.target = arrows[a].second;
              next.push_back(std::move(v));
            }
        layer = std::move(next);
      }
      return words;
    };
    auto fits = [&](const std::vector<Word>& words) {
      std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, 0));
      for (std::size_t x = 0; x < n; ++x) d[x][x] = 1;
      for (const auto& w : words)
        if (++d[w.target][w.source] > opt.max_hom) return false;
      return true;
    };
    const std::size_t orbits = 1 + pick(4);
    for (std::size_t k = 0; k < orbits; ++k) {
      const std::size_t x = pick(n), y = pick(n);
      const auto saved_arrows = arrows;
      const auto saved_act = arrow_act;
      bool fixed = true;
      for (std::size_t s = 0; s < gs; ++s) fixed = fixed && obj[s][x] == x && obj[s][y] == y;
      if (fixed) {
        const int sign = (gs == 2 && pick(2)) ? -1 : 1;
        const std::size_t a = arrows.size();
        arrows.push_back({x, y});
        for (std::size_t s = 0; s < gs; ++s) arrow_act[s].push_back({a, s % 2 ? sign : 1});
      } else {
        const std::size_t base = arrows.size();
        for (std::size_t j = 0; j < gs; ++j) arrows.push_back({obj[j][x], obj[j][y]});
        for (std::size_t s = 0; s < gs; ++s)
          for (std::size_t j = 0; j < gs; ++j) arrow_act[s].push_back({base + g.mul(s, j), 1});
      }
      if (!fits(words_of())) {
        arrows = saved_arrows;
        arrow_act = saved_act;
      }
    }
    if (arrows.empty()) continue;
    const std::vector<Word> words = words_of();

    auto c = std::make_shared<LinCat>(f, [&] {
      std::vector<std::string> names;
      for (std::size_t x = 0; x < n; ++x) names.push_back("o" + std::to_string(x));
      return names;
    }());
    for (std::size_t x = 0; x < n; ++x) c->add_basis("1_o" + std::to_string(x), x, x);
    std::map<std::vector<std::size_t>, std::size_t> word_index;
    for (const auto& w : words) {
      std::string label;
      for (std::size_t i = w.arrows.size(); i-- > 0;)
        label += "a" + std::to_string(w.arrows[i]) + (i ? "." : "");
      word_index[w.arrows] = c->add_basis(label, w.source, w.target);
    }
    for (std::size_t x = 0; x < n; ++x) c->set_identity(x, {{x, one}});
    for (std::size_t x = 0; x < n; ++x) c->set_comp(x, x, {{x, one}});
    for (const auto& w : words) {
      const std::size_t i = word_index[w.arrows];
      c->set_comp(w.target, i, {{i, one}});
      c->set_comp(i, w.source, {{i, one}});
      for (const auto& v : words) {
        if (v.source != w.target || w.arrows.size() + v.arrows.size() > max_length) continue;
        std::vector<std::size_t> cat = w.arrows;
        cat.insert(cat.end(), v.arrows.begin(), v.arrows.end());
        c->set_comp(word_index[v.arrows], i, {{word_index.at(cat), one}});
      }
    }

    GroupAction act{g, c, obj, std::vector<std::vector<LinComb>>(gs)};
    for (std::size_t s = 0; s < gs; ++s) {
      for (std::size_t x = 0; x < n; ++x) act.images[s].push_back({{obj[s][x], one}});
      for (const auto& w : words) {
        std::vector<std::size_t> img;
        int sign = 1;
        for (auto a : w.arrows) {
          img.push_back(arrow_act[s][a].first);
          sign *= arrow_act[s][a].second;
        }
        act.images[s].push_back({{word_index.at(img), sign > 0 ? one : -one}});
      }
    }

    const std::size_t pg = pick(3);
    const FiniteGroup h = pg == 0 ? FiniteGroup::cyclic(2) : pg == 1 ? FiniteGroup::cyclic(3) : FiniteGroup::symmetric3();
    std::vector<std::size_t> arrow_deg(arrows.size());
    for (auto& d : arrow_deg) d = pick(h.size());
    Grading gr{h, c, std::vector<std::size_t>(c->dim(), 0)};
    for (const auto& w : words) {
      std::size_t d = 0;
      for (auto a : w.arrows) d = h.mul(arrow_deg[a], d);
      gr.degree[word_index[w.arrows]] = d;
    }

    // Reject on size only.
    const std::size_t top = opt.degree + 1;
    const DimMatrix m = dim_matrix(*c);
    std::size_t worst = std::max(largest(m, top), largest(skew_dims(m, obj), top));
    bool free = true;
    for (std::size_t s = 1; s < gs; ++s)
      for (std::size_t x = 0; x < n; ++x) free = free && obj[s][x] != x;
    if (!free) {
      const DimMatrix r = resolving_dims(m, gs);
      worst = std::max({worst, largest(r, top), largest(skew_dims(r, resolving_perms(g, obj)), top)});
    }
    if (worst > opt.budget) continue;
    return {seed, std::move(act), std::move(gr)};
  }
  throw ResourceError("no random instance within the size budget after 10000 attempts");
}

}  // namespace hmcat
