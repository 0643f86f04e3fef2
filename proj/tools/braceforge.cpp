// braceforge: command-line front end.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "braceforge/catalog.hpp"
#include "braceforge/cohomology.hpp"
#include "braceforge/io.hpp"
#include "braceforge/split.hpp"
#include "braceforge/wells.hpp"

using namespace braceforge;

namespace {

struct Options {
  int jobs = 1;
  bool json_out = false;
  std::string out;
};

Options opts;
Warnings warnings;

void flush_warnings() {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  warnings.clear();
}

SkewBrace read_brace(const std::string& path) {
  SkewBrace b = brace_from_json(read_json(path), &warnings, path);
  flush_warnings();
  return b;
}

// A report is either printed as JSON (--json), written to -o, or shown as
// `human` lines. Returns the exit code: 0 when `ok`, 2 otherwise.
int emit(const std::string& command, const json& result, const std::string& human, bool ok = true) {
  const json r = report(command, result);
  if (!opts.out.empty()) write_json(opts.out, r);
  if (opts.json_out)
    std::cout << canonical_dump(r);
  else
    std::cout << human;
  return ok ? 0 : 2;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

json group_summary(const FiniteGroup& g) {
  bool cyclic = false;
  std::map<int, int> orders;
  for (int x = 0; x < g.order(); ++x) {
    const int o = g.element_order(x);
    ++orders[o];
    cyclic = cyclic || o == g.order();
  }
  json profile = json::object();
  for (auto [o, count] : orders) profile[std::to_string(o)] = count;
  return {{"order", g.order()}, {"abelian", g.is_abelian()}, {"cyclic", cyclic},
          {"element_orders", profile}};
}

std::string describe_group(const json& s) {
  std::ostringstream o;
  o << "order " << s["order"].get<int>() << (s["cyclic"].get<bool>() ? ", cyclic" : "")
    << (s["abelian"].get<bool>() ? ", abelian" : ", non-abelian");
  return o.str();
}

int cmd_validate_group(const std::string& path) {
  const FiniteGroup g = group_from_json(read_json(path), &warnings, path);
  flush_warnings();
  const json s = group_summary(g);
  return emit("validate-group", s, "valid group: " + describe_group(s) + "\n");
}

int cmd_validate(const std::string& path) {
  const SkewBrace b = read_brace(path);
  const bool lam = lambda_is_hom(b), ids = identities_check(b);
  const json r = {{"n", b.order()}, {"trivial", b.is_trivial()}, {"lambda_is_hom", lam},
                  {"identities", ids}};
  std::ostringstream h;
  h << "valid skew brace of order " << b.order() << (b.is_trivial() ? " (trivial)" : "") << "\n"
    << "lambda is a homomorphism: " << yes(lam) << "\n"
    << "a + b = a o lambda_a^-1(b): " << yes(ids) << "\n";
  return emit("validate", r, h.str(), lam && ids);
}

int cmd_info(const std::string& path) {
  const SkewBrace b = read_brace(path);
  const json add = group_summary(b.additive()), circ = group_summary(b.multiplicative());
  const int soc = static_cast<int>(socle(b).size()), ann = static_cast<int>(annihilator(b).size());
  const int autb = static_cast<int>(brace_automorphisms(b, b.order()).size());
  const json r = {{"n", b.order()}, {"socle_order", soc}, {"annihilator_order", ann},
                  {"additive", add}, {"multiplicative", circ}, {"autb_order", autb}};
  std::ostringstream h;
  h << "order " << b.order() << "\n(B,+): " << describe_group(add)
    << "\n(B,o): " << describe_group(circ) << "\n|Soc| = " << soc << "\n|Ann| = " << ann
    << "\n|Autb| = " << autb << "\n";
  return emit("info", r, h.str());
}

SplitCheckOptions split_opts(bool printed) {
  SplitCheckOptions o;
  o.form = printed ? Form::AsPrinted : Form::Derived;
  return o;
}

int cmd_semidirect(const std::string& hp, const std::string& ip, const std::string& tp,
                   bool printed) {
  const SkewBrace h = read_brace(hp), i = read_brace(ip);
  const ActionTriple t = triple_from_json(read_json(tp), tp);
  if (printed) validate_split_triple(h, i, t, split_opts(true));
  const SkewBrace e = semidirect_product(h, i, t);
  if (!opts.out.empty()) write_json(opts.out, to_json(e));
  if (opts.json_out || opts.out.empty()) std::cout << canonical_dump(to_json(e));
  return 0;
}

int cmd_enumerate_split(const std::string& hp, const std::string& ip, bool printed) {
  const SkewBrace h = read_brace(hp), i = read_brace(ip);
  const auto triples = enumerate_split_triples(h, i, split_opts(printed), opts.jobs);
  json list = json::array();
  for (const auto& t : triples) list.push_back(to_json(t));
  std::ostringstream s;
  s << triples.size() << " split triples (" << (printed ? "printed" : "derived")
    << " compatibility)\n";
  for (std::size_t k = 0; k < triples.size(); ++k) {
    s << "  [" << k << "] nu:";
    for (const auto& p : triples[k].nu) s << " " << to_string(p);
    s << "\n       mu:";
    for (const auto& p : triples[k].mu) s << " " << to_string(p);
    s << "\n    sigma:";
    for (const auto& p : triples[k].sigma) s << " " << to_string(p);
    s << "\n";
  }
  return emit("enumerate-split",
              {{"count", triples.size()}, {"form", printed ? "printed" : "derived"},
               {"triples", list}},
              s.str());
}

int cmd_build_ext(const std::string& hp, const std::string& ip, const std::string& tp) {
  const SkewBrace h = read_brace(hp), i = read_brace(ip);
  const Triplet t = triplet_from_json(read_json(tp), tp);
  if (auto v = triplet_violation(h, i, t)) throw AxiomError(*v);
  const Extension e = extension_from_triplet(h, i, t);
  if (!opts.out.empty()) write_json(opts.out, to_json(e));
  if (opts.json_out || opts.out.empty()) std::cout << canonical_dump(to_json(e));
  return 0;
}

int cmd_classify_ext(const std::string& hp, const std::string& ip) {
  const SkewBrace h = read_brace(hp), i = read_brace(ip);
  const ExtClassification c = ext_classes(h, i);
  json buckets = json::array();
  std::ostringstream s;
  s << c.extensions.size() << " labelled extensions, " << c.classes.size()
    << " equivalence classes, " << c.buckets.size() << " couplings\n";
  for (std::size_t k = 0; k < c.buckets.size(); ++k) {
    buckets.push_back({{"action", to_json(c.buckets[k].rep)},
                       {"classes", c.buckets[k].classes.size()}});
    s << "  coupling " << k << ": " << c.buckets[k].classes.size() << " classes\n";
  }
  return emit("classify-ext",
              {{"extensions", c.extensions.size()}, {"classes", c.classes.size()},
               {"couplings", buckets}},
              s.str());
}

json pairs_json(const Coefficients& c, const std::vector<CocyclePair>& ps) {
  json a = json::array();
  for (const auto& p : ps) {
    const CocyclePair e = embed_pair(c, p);
    a.push_back({{"g", e.g}, {"f", e.f}});
  }
  return a;
}

int cmd_cohomology(const std::string& hp, const std::string& ip, const std::string& cp, bool ann) {
  const SkewBrace h = read_brace(hp), i = read_brace(ip);
  const ActionTriple chi = triple_from_json(read_json(cp), cp);
  if (static_cast<int>(chi.nu.size()) != h.order() || chi.nu[0].degree() != i.order())
    throw SchemaError(cp, "", "action does not match |H| x |I|");
  const Coefficients c = ann ? annihilator_coefficients(i, chi) : coefficients(i, chi);
  const CohomologyGroup g = h2N(h, c);
  const auto plain = z2N(h, c, {false});
  const auto z1 = z1N(h, c);
  json z1j = json::array();
  for (const auto& t : z1) {
    std::vector<int> l;
    for (int v : t) l.push_back(c.embed[v]);
    z1j.push_back(l);
  }
  const json r = {{"coefficients", ann ? "annihilator" : "I"},
                  {"coefficient_order", c.a.order()},
                  {"z2_order", g.z2().size()},
                  {"z2_plain_order", plain.size()},
                  {"b2_order", g.b2().size()},
                  {"h2_order", g.order()},
                  {"z1_order", z1.size()},
                  {"h2_representatives", pairs_json(c, g.reps())},
                  {"z1", z1j}};
  std::ostringstream s;
  s << "|A| = " << c.a.order() << "\n|Z2| = " << g.z2().size()
    << " (without the parent relation: " << plain.size() << ")\n|B2| = " << g.b2().size()
    << "\n|H2| = " << g.order() << "\n|Z1| = " << z1.size() << "\n";
  return emit("cohomology", r, s.str());
}

int cmd_wells(const std::string& path) {
  const Extension e = extension_from_json(read_json(path), &warnings, path);
  flush_warnings();
  const ExactSequenceReport r = verify_exact_sequence(e);
  std::ostringstream s;
  s << "|Autb_I(E)| = " << r.autb_i_order << "\n|ker rho| = " << r.kernel_rho_order
    << "\n|Z1| = " << r.z1_order << "\npsi bijective: " << yes(r.psi_bijective)
    << "\npsi homomorphism: " << yes(r.psi_hom) << "\n|C| = " << r.c_order
    << "\n|H2| = " << r.h2_order << "\n|im rho| = " << r.im_rho_order
    << "\n|ker omega| = " << r.ker_omega_order
    << "\nim rho = ker omega: " << yes(r.im_rho_eq_ker_omega)
    << "\nderivation law: " << yes(r.derivation_law)
    << "\ntwisting: " << (r.twisting_witness ? "found" : "none")
    << "\nexact: " << yes(r.exact()) << "\n";
  return emit("wells-check", to_json(r), s.str(), r.exact());
}

std::string formula_line(const FormulaCheck& c) {
  std::ostringstream s;
  s << "  " << c.formula << ": " << c.mismatches << "/" << c.cells << " cells differ\n";
  for (const auto& m : c.first_mismatches)
    s << "    at (" << m[0] << ", " << m[1] << "): got " << m[2] << ", formula gives " << m[3]
      << "\n";
  return s.str();
}

json formula_json(const FormulaCheck& c) {
  return {{"formula", c.formula}, {"cells", c.cells}, {"mismatches", c.mismatches},
          {"first_mismatches", c.first_mismatches}};
}

// Fixture header plus the compatibility check in both forms.
json fixture_json(const SplitFixture& f, std::ostringstream& s) {
  SplitCheckOptions printed;
  printed.form = Form::AsPrinted;
  const auto dv = split_triple_violation(f.h, f.i, f.triple);
  const auto pv = split_triple_violation(f.h, f.i, f.triple, printed);
  s << f.name << ": |H| = " << f.h.order() << ", |I| = " << f.i.order() << "\n"
    << "  triple valid: " << (dv ? dv->message() : "yes") << "\n"
    << "  printed compatibility form: " << (pv ? pv->message() : "holds") << "\n";
  return {{"name", f.name}, {"h_order", f.h.order()}, {"i_order", f.i.order()},
          {"triple", to_json(f.triple)}, {"valid", !dv},
          {"printed_form_holds", !pv}};
}

int cmd_example(int n, int param_n, int param_p, bool odd) {
  std::ostringstream s;
  json r;
  bool ok = true;
  switch (n) {
    case 1: {
      const SplitFixture f = example1(param_n, param_p);
      r = fixture_json(f, s);
      ok = r["valid"].get<bool>();
      if (ok) r["product_order"] = semidirect_product(f.h, f.i, f.triple).order();
      break;
    }
    case 2: {
      const SplitFixture f = odd ? example2_odd(param_n, param_p) : example2(param_n, param_p);
      r = fixture_json(f, s);
      ok = r["valid"].get<bool>();
      if (ok && !odd) {
        const SkewBrace e = semidirect_product(f.h, f.i, f.triple);
        const FormulaCheck a = example2_add_formula(param_n, param_p, e);
        const FormulaCheck c = example2_circ_formula(param_n, param_p, e);
        s << formula_line(a) << formula_line(c);
        r["formulas"] = {formula_json(a), formula_json(c)};
        ok = a.ok() && c.ok();
      }
      break;
    }
    case 3: {
      const SplitFixture f = example3();
      r = fixture_json(f, s);
      const bool s3 = find_isomorphism(f.i.additive(), dihedral_group(3)).has_value();
      const bool z6 = find_isomorphism(f.i.multiplicative(), cyclic_group(6)).has_value();
      s << "  (I,+) ~ S3: " << yes(s3) << "\n  (I,o) ~ Z6: " << yes(z6) << "\n";
      r["additive_is_s3"] = s3;
      r["multiplicative_is_z6"] = z6;
      ok = s3 && z6 && r["valid"].get<bool>();
      if (r["valid"].get<bool>()) {
        const SkewBrace e = semidirect_product(f.h, f.i, f.triple);
        const FormulaCheck c = example3_circ_formula(e);
        s << "  product order " << e.order() << "\n" << formula_line(c);
        r["product_order"] = e.order();
        r["formulas"] = {formula_json(c)};
        ok = ok && c.ok();
      }
      break;
    }
    case 4: {
      const SplitFixture f = example4();
      r = fixture_json(f, s);
      const SkewBrace e = semidirect_product(f.h, f.i, f.triple);
      const FormulaCheck printed = example4_circ_formula(e, true);
      const FormulaCheck derived = example4_circ_formula(e, false);
      s << formula_line(printed) << formula_line(derived);
      r["formulas"] = {formula_json(printed), formula_json(derived)};
      ok = printed.ok();
      if (!ok) s << "  erratum candidate: the displayed circle formula does not match\n";
      break;
    }
    case 5: {
      const SkewBrace h = brace_z8_soc2(), i = brace_z4_klein();
      SplitCheckOptions printed;
      printed.form = Form::AsPrinted;
      const auto derived = enumerate_split_triples(h, i, {}, opts.jobs);
      const auto as_printed = enumerate_split_triples(h, i, printed, opts.jobs);
      auto mu_id = [](const ActionTriple& t) {
        for (const auto& p : t.mu)
          if (!p.is_identity()) return false;
        return true;
      };
      json listing = json::array();
      int with_mu_id = 0;
      for (const auto& t : derived) {
        with_mu_id += mu_id(t);
        listing.push_back(to_json(t));
      }
      s << "enumerate_split_triples: " << derived.size() << " triples (expected 8), "
        << with_mu_id << " with mu = Id; printed compatibility form: " << as_printed.size()
        << "\n";
      json listed = json::array();
      for (int w : {1, 2}) {
        const SplitFixture f = example5(w);
        const bool found = std::binary_search(derived.begin(), derived.end(), f.triple);
        s << "  listed triple " << (w == 1 ? "(i)" : "(ii)") << " present: " << yes(found) << "\n";
        json fj = fixture_json(f, s);
        fj["present"] = found;
        listed.push_back(fj);
      }
      r = {{"count", derived.size()}, {"expected", 8}, {"mu_identity", with_mu_id},
           {"printed_form_count", as_printed.size()}, {"triples", listing}, {"listed", listed}};
      ok = derived.size() == 8 && with_mu_id == 8 && listed[0]["present"].get<bool>() &&
           listed[1]["present"].get<bool>();
      if (!ok) {
        s << "erratum candidate: discrepancy listing\n";
        for (std::size_t k = 0; k < derived.size(); ++k) {
          s << "  [" << k << "] nu(1) = " << to_string(derived[k].nu[1])
            << ", nu(2) = " << to_string(derived[k].nu[2])
            << ", mu(1) = " << to_string(derived[k].mu[1])
            << ", sigma(1) = " << to_string(derived[k].sigma[1])
            << ", sigma(2) = " << to_string(derived[k].sigma[2]) << "\n";
        }
      }
      break;
    }
    default:
      throw InputError("ParamOutOfRange: example number must be 1..5");
  }
  return emit("example", r, s.str(), ok);
}

int cmd_selftest() {
  std::ostringstream s;
  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool pass) {
    s << (pass ? "PASS " : "FAIL ") << name << "\n";
    checks.push_back({{"name", name}, {"pass", pass}});
    all = all && pass;
  };
  for (const auto& [name, b] : small_trivial_braces())
    check("axioms " + name, lambda_is_hom(b) && identities_check(b));
  const SplitFixture f3 = example3();
  check("example 3 triple", !split_triple_violation(f3.h, f3.i, f3.triple));
  const SkewBrace z2 = cyclic_trivial(2);
  const BijectionReport b = ext_bijection_check(z2, z2, identity_triple(2, 2));
  check("bijection Z2 by Z2", b.equal());
  const ExactSequenceReport w =
      verify_exact_sequence(split_extension(z2, cyclic_trivial(3), identity_triple(2, 3)));
  check("wells split Z2 by Z3", w.exact());
  return emit("selftest", {{"checks", checks}, {"pass", all}}, s.str(), all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew braces: split products, extensions, cohomology, Wells sequence"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = 0;
  app.add_option("--jobs", opts.jobs, "Worker threads for enumerations")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "Cap on search-space sizes (overrides BRACEFORGE_BUDGET)");
  app.add_flag("--json", opts.json_out, "Print the JSON report");
  app.add_option("-o,--output", opts.out, "Write the result to a file");

  std::string a, b, c;
  bool printed = false, ann = false, odd = false;
  int n = 0, pn = 2, pp = 3;

  auto* vg = app.add_subcommand("validate-group", "Check a group table");
  vg->add_option("file", a)->required();

  auto* v = app.add_subcommand("validate", "Check a skew brace");
  v->add_option("file", a)->required();

  auto* info = app.add_subcommand("info", "Socle, annihilator, group types, |Autb|");
  info->add_option("file", a)->required();

  auto* sd = app.add_subcommand("semidirect", "Split semi-direct product of H by I");
  sd->add_option("H", a)->required();
  sd->add_option("I", b)->required();
  sd->add_option("triple", c)->required();
  sd->add_flag("--as-printed", printed, "Also require the printed compatibility form");

  auto* es = app.add_subcommand("enumerate-split", "All split triples for H and I");
  es->add_option("H", a)->required();
  es->add_option("I", b)->required();
  es->add_flag("--as-printed", printed, "Use the printed compatibility form");

  auto* be = app.add_subcommand("build-ext", "Extension from a triplet");
  be->add_option("H", a)->required();
  be->add_option("I", b)->required();
  be->add_option("triplet", c)->required();

  auto* ce = app.add_subcommand("classify-ext", "Extension classes of H by I");
  ce->add_option("H", a)->required();
  ce->add_option("I", b)->required();

  auto* co = app.add_subcommand("cohomology", "Z2, B2, H2 and Z1 for an action");
  co->add_option("H", a)->required();
  co->add_option("I", b)->required();
  co->add_option("chi", c)->required();
  co->add_flag("--ann", ann, "Use Ann(I) as coefficients");

  auto* wc = app.add_subcommand("wells-check", "Verify the Wells exact sequence of an extension");
  wc->add_option("E", a)->required();

  auto* ex = app.add_subcommand("example", "Rebuild a catalogued example (1..5)");
  ex->add_option("number", n)->required();
  ex->add_option("--n", pn, "Example 1/2 size parameter");
  ex->add_option("--p", pp, "Example 1/2 modulus");
  ex->add_flag("--odd", odd, "Example 2 with odd n");

  auto* st = app.add_subcommand("selftest", "Quick internal checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }
  if (budget > 0) setenv("BRACEFORGE_BUDGET", std::to_string(budget).c_str(), 1);

  try {
    if (*vg) return cmd_validate_group(a);
    if (*v) return cmd_validate(a);
    if (*info) return cmd_info(a);
    if (*sd) return cmd_semidirect(a, b, c, printed);
    if (*es) return cmd_enumerate_split(a, b, printed);
    if (*be) return cmd_build_ext(a, b, c);
    if (*ce) return cmd_classify_ext(a, b);
    if (*co) return cmd_cohomology(a, b, c, ann);
    if (*wc) return cmd_wells(a);
    if (*ex) return cmd_example(n, pn, pp, odd);
    if (*st) return cmd_selftest();
  } catch (const AxiomError& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
