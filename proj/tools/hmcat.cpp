// hmcat: command line front end for the category, (co)homology and theorem checks.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hmcat/verify.hpp"

using namespace hmcat;

namespace {

struct Source {
  std::string file;
  std::optional<std::uint32_t> field;
  std::optional<std::uint64_t> seed;
};

std::optional<Field> field_override(const Source& s) {
  if (!s.field) return std::nullopt;
  return *s.field == 0 ? Field::rationals() : Field::prime(*s.field);
}

/// "fixture:<name>" loads a built-in instance, otherwise a JSON document.
Document load(const Source& s, std::string& name) {
  const auto f = field_override(s);
  if (s.file.empty()) {
    if (!s.seed) throw InvalidInput("give a document file, fixture:<name>, or --seed");
    RandomOptions ro;
    if (f) ro.field = *f;
    const RandomInstance ri = random_instance(*s.seed, ro);
    name = "random-" + std::to_string(*s.seed);
    return {ri.action.cat, ri.action.group, ri.action, ri.grading, {}};
  }
  if (s.file.rfind("fixture:", 0) == 0) {
    const Fixture fx = fixture_by_name(s.file.substr(8), f ? *f : Field::prime(5));
    name = fx.name;
    return {fx.action.cat, fx.action.group, fx.action, std::nullopt, {}};
  }
  name = s.file;
  return load_document(s.file, f);
}

void write(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(out);
  if (!os) throw InvalidInput("cannot write '" + out + "'");
  os << j.dump(2) << "\n";
}

const GroupAction& need_action(const Document& d) {
  if (!d.action) throw InvalidInput("the document has no group action");
  return *d.action;
}

std::string class_name(const FiniteGroup& g, const std::vector<std::size_t>& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + g.label(cls[i]);
  return s + "}";
}

void print_table(const std::string& title, const std::vector<std::string>& heads,
                 const std::vector<std::vector<std::size_t>>& cols) {
  std::cout << title << "\n  n";
  for (const auto& h : heads) std::cout << "  " << h;
  std::cout << "\n";
  for (std::size_t n = 0; n < cols.front().size(); ++n) {
    std::cout << "  " << n;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string v = std::to_string(cols[c][n]);
      std::cout << "  " << std::string(heads[c].size() > v.size() ? heads[c].size() - v.size() : 0, ' ') << v;
    }
    std::cout << "\n";
  }
}

int run_hh(const Source& src, std::size_t N, bool classes, bool quotient_part, bool cochain, bool as_json,
           const std::vector<std::string>& cup_files) {
  std::string name;
  const Document d = load(src, name);
  json out{{"document", name}, {"field", d.cat->field().name()}, {"max_degree", N}};
  std::vector<std::string> heads{cochain ? "HH^n" : "HH_n"};
  std::vector<std::vector<std::size_t>> cols;

  auto classed = [&](Complex& cx, const Grading& gr) {
    const HomologyResult h = homology(cx, N);
    const ConjClasses cl = conjugacy_classes(gr.group);
    json jc = json::object();
    for (std::size_t k = 0; k < h.by_class.size(); ++k) {
      heads.push_back(class_name(gr.group, cl.classes[k]));
      cols.push_back(h.by_class[k]);
      jc[heads.back()] = h.by_class[k];
    }
    out["classes"] = jc;
  };

  if (!cochain) {
    ChainComplex cc = bar_complex(d.cat, N);
    cols.push_back(homology(cc.cx, N).dims);
    out["dims"] = cols.back();
    if (classes) {
      if (!d.grading) throw InvalidInput("--classes needs a grading in the document");
      class_decomposition(cc, *d.grading, conjugacy_classes(d.grading->group));
      classed(cc.cx, *d.grading);
    }
    if (quotient_part) {
      attach_g_action(cc, need_action(d));
      heads.push_back("H((C.)_G)");
      cols.push_back(homology(coinvariant_complex(cc.cx).cx, N).dims);
      out["coinvariant_complex"] = cols.back();
      heads.push_back("(HH)_G");
      cols.push_back(homology_rep_dims(cc.cx, N));
      out["coinvariants_of_homology"] = cols.back();
    }
  } else {
    CochainComplex cc = cochain_complex(d.cat, N);
    cols.push_back(homology(cc.cx, N).dims);
    out["dims"] = cols.back();
    if (classes) {
      if (!d.grading) throw InvalidInput("--classes needs a grading in the document");
      class_decomposition_cochains(cc, *d.grading, conjugacy_classes(d.grading->group));
      classed(cc.cx, *d.grading);
    }
    if (quotient_part) {
      attach_g_action_cochains(cc, need_action(d));
      heads.push_back("H((C.)^G)");
      cols.push_back(homology(invariant_complex(cc.cx).cx, N).dims);
      out["invariant_complex"] = cols.back();
      heads.push_back("(HH)^G");
      cols.push_back(homology_rep_dims(cc.cx, N));
      out["invariants_of_cohomology"] = cols.back();
    }
    if (!cup_files.empty()) {
      auto read = [&](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot open '" + path + "'");
        json j;
        in >> j;
        return cochain_from_json(cc, j);
      };
      const auto [m, psi] = read(cup_files.at(0));
      const auto [n, phi] = read(cup_files.at(1));
      out["cup"] = cochain_to_json(cc, m + n, cup(cc, m, psi, n, phi));
    }
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    print_table(name + " over " + d.cat->field().name(), heads, cols);
    if (out.contains("cup")) std::cout << "cup product:\n" << out["cup"].dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild-Mitchell (co)homology of linear categories with group actions"};
  app.require_subcommand(1);
  Source src;
  std::string out;
  std::size_t N = 3;
  bool classes = false, quotient_part = false, as_json = false;
  std::vector<std::string> cup_files, preferred;
  std::string theorem;

  auto add_source = [&](CLI::App* c) {
    c->add_option("file", src.file, "JSON document or fixture:<triv|swap|sign|discrete>");
    c->add_option("--field", src.field, "Override the field: a prime, or 0 for Q");
  };

  auto* validate = app.add_subcommand("validate", "Check category, action and grading axioms");
  add_source(validate);
  auto* skew = app.add_subcommand("skew", "Write the skew category C[G] with its grading");
  auto* quotient = app.add_subcommand("quotient", "Write C/G graded by a transversal (free actions)");
  auto* resolve = app.add_subcommand("resolve", "Write M_G(C) with its free action");
  auto* transversal = app.add_subcommand("transversal", "Write C_T[G] with its grading");
  auto* fixture = app.add_subcommand("fixture", "Write a built-in fixture as a document");
  for (auto* c : {skew, quotient, resolve, transversal, fixture}) {
    add_source(c);
    c->add_option("-o,--output", out, "Output file (default stdout)");
  }
  for (auto* c : {quotient, transversal})
    c->add_option("--transversal", preferred, "Preferred orbit representatives")->delimiter(',');

  auto* hh = app.add_subcommand("hh", "Hochschild-Mitchell homology dimensions");
  auto* hhcoh = app.add_subcommand("hhcoh", "Hochschild-Mitchell cohomology dimensions");
  for (auto* c : {hh, hhcoh}) {
    add_source(c);
    c->add_option("--max-degree", N, "Highest degree reported")->check(CLI::Range(0, 12));
    c->add_flag("--classes", classes, "Split by conjugacy class of the document's grading");
    c->add_flag("--json", as_json, "Machine-readable output");
  }
  hh->add_flag("--coinvariants", quotient_part, "Also H((C.)_G) and (HH_*)_G");
  hhcoh->add_flag("--invariants", quotient_part, "Also H((C.)^G) and (HH^*)^G");
  hhcoh->add_option("--cup", cup_files, "Two cochain files to multiply")->expected(2);

  auto* verify = app.add_subcommand("verify", "Check a theorem: " + [] {
    std::string s;
    for (const auto& id : theorem_ids()) s += id + ", ";
    return s + "or all";
  }());
  verify->add_option("theorem", theorem, "Theorem id or 'all'")->required();
  add_source(verify);
  verify->add_option("--max-degree", N, "Highest degree compared")->check(CLI::Range(0, 8));
  verify->add_option("--seed", src.seed, "Use a seeded random instance instead of a file");
  verify->add_flag("--json", as_json, "Machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string name;
    if (validate->parsed()) {
      const Document d = load(src, name);
      std::vector<std::string> problems = validate_category(*d.cat);
      if (d.action)
        for (auto& p : validate_action(*d.action)) problems.push_back("action: " + p);
      if (d.grading)
        for (auto& p : validate_grading(*d.grading)) problems.push_back("grading: " + p);
      for (const auto& p : problems) std::cout << p << "\n";
      std::cout << name << ": " << (problems.empty() ? "valid" : std::to_string(problems.size()) + " violation(s)")
                << "\n";
      return problems.empty() ? 0 : 1;
    }
    if (fixture->parsed()) {
      const Document d = load(src, name);
      write(document_to_json(d), out);
      return 0;
    }
    if (skew->parsed() || quotient->parsed() || resolve->parsed() || transversal->parsed()) {
      const Document d = load(src, name);
      const GroupAction& a = need_action(d);
      std::vector<std::size_t> pref;
      for (const auto& p : preferred) {
        auto x = d.cat->object_index(p);
        if (!x) throw InvalidInput("unknown object '" + p + "'");
        pref.push_back(*x);
      }
      if (pref.empty()) pref = d.transversal;
      Document r;
      if (skew->parsed()) {
        const SkewResult s = skew_category(a);
        r = {s.cat, a.group, std::nullopt, s.grading, {}};
      } else if (quotient->parsed()) {
        const QuotientResult q = quotient_category(a, orbits_transversal(a, pref));
        r = {q.cat, a.group, std::nullopt, q.grading, {}};
      } else if (resolve->parsed()) {
        const ResolvingResult m = resolving_category(a);
        r = {m.cat, a.group, m.action, std::nullopt, {}};
      } else {
        const TransversalResult t = transversal_subcategory(skew_category(a), a, orbits_transversal(a, pref));
        r = {t.cat, a.group, std::nullopt, t.grading, {}};
      }
      write(document_to_json(r), out);
      return 0;
    }
    if (hh->parsed()) return run_hh(src, N, classes, quotient_part, false, as_json, {});
    if (hhcoh->parsed()) return run_hh(src, N, classes, quotient_part, true, as_json, cup_files);
    if (verify->parsed()) {
      const Document d = load(src, name);
      VerifyOptions opt;
      opt.max_degree = N;
      std::vector<TheoremReport> reports;
      if (theorem == "all")
        reports = run_all(d, name, opt);
      else
        reports.push_back(run_theorem(theorem, d, name, opt));
      bool failed = false;
      json all = json::array();
      for (const auto& r : reports) {
        failed = failed || r.verdict == Verdict::failed;
        if (as_json)
          all.push_back(r.to_json());
        else
          std::cout << r.to_table();
      }
      if (as_json) std::cout << all.dump(2) << "\n";
      return failed ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
