// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "braceforge/catalog.hpp"
#include "braceforge/cohomology.hpp"
#include "braceforge/split.hpp"
#include "braceforge/wells.hpp"

using namespace braceforge;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "  exception: " << e.what() << "\n";
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (s > limit_s) {
    o.pass = false;
    o.detail << "  took " << s << " s, limit " << limit_s << " s\n";
  }
  failures += !o.pass;
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title;
  if (!o.summary.empty()) std::cout << ": " << o.summary;
  std::cout << " (" << static_cast<int>(s * 1000) << " ms)\n" << o.detail.str() << std::flush;
}

bool mu_identity(const ActionTriple& t) {
  for (const auto& p : t.mu)
    if (!p.is_identity()) return false;
  return true;
}

std::string perms(const std::vector<Perm>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

std::vector<SplitFixture> axiom_fixtures() {
  std::vector<SplitFixture> f;
  for (int n = 1; n <= 4; ++n)
    for (int p : {3, 5}) f.push_back(example2(n, p));
  for (int p : {3, 5}) f.push_back(example2_odd(3, p));
  for (int k = 1; k <= 4; ++k)
    for (int m : {3, 5}) f.push_back(example1(k, m));
  f.push_back(example3());
  f.push_back(example4());
  f.push_back(example5(1));
  return f;
}

void axiom_suite(Outcome& o) {
  int checked = 0;
  auto check = [&](const std::string& name, const SkewBrace& b) {
    ++checked;
    bool ok = true;
    try {
      validate_brace(b.additive().table(), b.multiplicative().table());
    } catch (const std::exception& e) {
      ok = false;
      o.detail << "  " << name << ": " << e.what() << "\n";
    }
    if (!lambda_is_hom(b)) ok = false, o.detail << "  " << name << ": lambda not a homomorphism\n";
    if (!identities_check(b)) ok = false, o.detail << "  " << name << ": identities fail\n";
    o.pass = o.pass && ok;
  };
  for (const auto& [name, b] : small_trivial_braces()) check(name, b);
  for (const auto& [name, b] : std::vector<std::pair<std::string, SkewBrace>>{
           {"klein_z4", brace_klein_z4()}, {"z4_klein", brace_z4_klein()},
           {"s3_z6", brace_s3_z6()}, {"z8_soc2", brace_z8_soc2()}})
    check(name, b);
  for (const auto& f : axiom_fixtures()) check(f.name, semidirect_product(f.h, f.i, f.triple));
  o.summary = std::to_string(checked) + " braces, full sweeps";
}

void example3_check(Outcome& o) {
  const SplitFixture f = example3();
  const bool s3 = find_isomorphism(f.i.additive(), dihedral_group(3)).has_value();
  const bool z6 = find_isomorphism(f.i.multiplicative(), cyclic_group(6)).has_value();
  const auto v = split_triple_violation(f.h, f.i, f.triple);
  o.pass = s3 && z6 && !v;
  o.summary = std::string("(I,+) ~ S3 ") + (s3 ? "yes" : "no") + ", (I,o) ~ Z6 " + (z6 ? "yes" : "no") +
              ", triple " + (v ? v->message() : "valid");
}

void example4_check(Outcome& o) {
  const SplitFixture f = example4();
  const SkewBrace e = semidirect_product(f.h, f.i, f.triple);
  const FormulaCheck printed = example4_circ_formula(e, true);
  const FormulaCheck derived = example4_circ_formula(e, false);
  o.pass = printed.ok();
  o.summary = std::to_string(printed.mismatches) + "/" + std::to_string(printed.cells) +
              " cells differ from " + printed.formula;
  if (!o.pass) {
    o.detail << "  erratum candidate; first differing cells (x, y, product, formula):\n";
    for (const auto& m : printed.first_mismatches)
      o.detail << "    " << m[0] << " " << m[1] << " " << m[2] << " " << m[3] << "\n";
    o.detail << "  " << derived.formula << ": " << derived.mismatches << "/" << derived.cells
             << " cells differ\n";
  }
}

void example5_check(Outcome& o) {
  const SkewBrace h = brace_z8_soc2(), i = brace_z4_klein();
  const auto all = enumerate_split_triples(h, i, {}, 4);
  int mu_id = 0;
  for (const auto& t : all) mu_id += mu_identity(t);
  const bool has_i = std::binary_search(all.begin(), all.end(), example5(1).triple);
  const bool has_ii = std::binary_search(all.begin(), all.end(), example5(2).triple);
  o.pass = all.size() == 8 && mu_id == static_cast<int>(all.size()) && has_i && has_ii;
  o.summary = std::to_string(all.size()) + " triples (expected 8), " + std::to_string(mu_id) +
              " with mu = Id, (i) " + (has_i ? "present" : "absent") + ", (ii) " +
              (has_ii ? "present" : "absent");
  if (o.pass) return;
  SplitCheckOptions printed;
  printed.form = Form::AsPrinted;
  o.detail << "  erratum candidate; full listing (generator images under o: 1, 2):\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& t = all[k];
    o.detail << "    [" << k << "] nu " << perms({t.nu[1], t.nu[2]}) << " | mu(1) "
             << to_string(t.mu[1]) << " | sigma " << perms({t.sigma[1], t.sigma[2]})
             << (split_triple_violation(h, i, t, printed) ? " | printed form rejects" : "") << "\n";
  }
  o.detail << "  printed compatibility form admits "
           << enumerate_split_triples(h, i, printed, 4).size() << " triples\n";
  if (auto v = split_triple_violation(h, i, example5(2).triple))
    o.detail << "  listed (ii): " << v->message() << "\n";
}

void bijection_check(Outcome& o) {
  std::ostringstream s;
  for (auto [name, h, i] : {std::tuple{"Z2 by Z2", cyclic_trivial(2), cyclic_trivial(2)},
                            std::tuple{"Z2 by Z3", cyclic_trivial(2), cyclic_trivial(3)}}) {
    const ExtClassification c = ext_classes(h, i);
    for (std::size_t k = 0; k < c.buckets.size(); ++k) {
      const auto& b = c.buckets[k];
      const int ext = static_cast<int>(b.classes.size());
      const int trip = static_cast<int>(triplet_classes(h, i, z2_alpha(h, i, b.rep)).size());
      const Coefficients co = coefficients(i, b.rep);
      const int h2 = static_cast<int>(h2N(h, co).order());
      const int plain = static_cast<int>(h2N(h, co, {false}).order());
      const bool ok = ext == trip && ext == h2;
      o.pass = o.pass && ok;
      o.detail << "  " << name << " coupling " << k << ": extensions " << ext << ", z2_alpha " << trip
               << ", H2 " << h2 << " (without parent relation " << plain << ")"
               << (ok ? "" : "  MISMATCH") << "\n";
    }
  }
  o.summary = "per-coupling counts agree three ways";
}

struct FreeCase {
  std::string name;
  SkewBrace h, i;
};

std::vector<FreeCase> action_cases() {
  return {{"Z2 by Z2", cyclic_trivial(2), cyclic_trivial(2)},
          {"Z2 by Z3", cyclic_trivial(2), cyclic_trivial(3)},
          {"Z3 by Z2", cyclic_trivial(3), cyclic_trivial(2)},
          {"Z3 by Z3", cyclic_trivial(3), cyclic_trivial(3)},
          {"Z4 by Z2", cyclic_trivial(4), cyclic_trivial(2)},
          {"klein_z4 by Z2", brace_klein_z4(), cyclic_trivial(2)},
          {"Z2 by z4_klein", cyclic_trivial(2), brace_z4_klein()}};
}

void free_check(Outcome& o) {
  int runs = 0;
  for (const auto& c : action_cases())
    for (const auto& b : ext_classes(c.h, c.i).buckets) {
      const FreeTransitiveReport r = verify_free_transitive(c.h, c.i, b.rep);
      ++runs;
      if (!r.free || !r.well_defined) {
        o.pass = false;
        o.detail << "  " << c.name << ": free " << r.free << ", well defined " << r.well_defined << "\n";
      }
    }
  o.summary = std::to_string(runs) + " couplings, no nonzero class fixes a class";
}

void transitive_check(Outcome& o) {
  int runs = 0;
  for (const auto& c : action_cases()) {
    if (!c.i.is_trivial()) continue;
    for (const auto& b : ext_classes(c.h, c.i).buckets) {
      const FreeTransitiveReport r = verify_free_transitive(c.h, c.i, b.rep);
      ++runs;
      if (!r.transitive()) {
        o.pass = false;
        o.detail << "  " << c.name << ": " << r.orbits << " orbits\n";
      }
    }
  }
  o.summary = std::to_string(runs) + " couplings, one orbit each";
}

void wells_check(Outcome& o) {
  Triplet t{identity_triple(2, 2), zero_cochain(2), zero_cochain(2)};
  t.beta[1][1] = 1;
  t.tau[1][1] = 1;
  const std::vector<std::pair<std::string, Extension>> fixtures = {
      {"split Z2 by Z3", split_extension(cyclic_trivial(2), cyclic_trivial(3), identity_triple(2, 3))},
      {"Z4-additive Z2 by Z2", extension_from_triplet(cyclic_trivial(2), cyclic_trivial(2), t)}};
  for (const auto& [name, e] : fixtures) {
    const ExactSequenceReport r = verify_exact_sequence(e);
    o.pass = o.pass && r.exact();
    o.detail << "  " << name << ": ker rho " << r.kernel_rho_order << " = Z1 " << r.z1_order
             << " via psi " << (r.psi_bijective && r.psi_hom ? "yes" : "no") << ", im rho "
             << r.im_rho_order << " = ker omega " << r.ker_omega_order << " "
             << (r.im_rho_eq_ker_omega ? "yes" : "no") << ", derivation law "
             << (r.derivation_law ? "yes" : "no") << "\n";
  }
  o.summary = "both fixtures exact";
}

// Random candidate triplets, kept when they pass the triplet checks.
std::vector<Triplet> random_valid_triplets(const SkewBrace& h, const SkewBrace& i, int count,
                                           std::mt19937& rng) {
  const PermGroup aut = automorphism_group(i.additive());
  const PermGroup aut_c = automorphism_group(i.multiplicative());
  std::uniform_int_distribution<int> elem(0, i.order() - 1);
  std::vector<Triplet> out;
  for (int attempts = 0; static_cast<int>(out.size()) < count && attempts < 1'000'000; ++attempts) {
    Triplet t{identity_triple(h.order(), i.order()), zero_cochain(h.order()), zero_cochain(h.order())};
    auto pick = [&](const PermGroup& g) {
      std::uniform_int_distribution<std::size_t> d(0, g.size() - 1);
      return g.elements()[d(rng)];
    };
    for (int x = 1; x < h.order(); ++x) {
      t.chi.nu[x] = pick(aut);
      t.chi.mu[x] = pick(aut);
      t.chi.sigma[x] = pick(aut_c);
    }
    for (int a = 1; a < h.order(); ++a)
      for (int b = 1; b < h.order(); ++b) {
        t.beta[a][b] = elem(rng);
        t.tau[a][b] = elem(rng);
      }
    if (!triplet_violation(h, i, t)) out.push_back(t);
  }
  return out;
}

void roundtrip_check(Outcome& o) {
  std::mt19937 rng(20261019);
  int total = 0;
  for (auto [name, h, i] : {std::tuple{"Z2 by Z2", cyclic_trivial(2), cyclic_trivial(2)},
                            std::tuple{"Z3 by Z2", cyclic_trivial(3), cyclic_trivial(2)}}) {
    const auto ts = random_valid_triplets(h, i, 100, rng);
    if (ts.size() != 100) {
      o.pass = false;
      o.detail << "  " << name << ": only " << ts.size() << " valid triplets sampled\n";
    }
    for (const auto& t : ts) {
      const Extension e = extension_from_triplet(h, i, t);
      ++total;
      if (extract_triplet(e, canonical_section(e)) != t) {
        o.pass = false;
        o.detail << "  " << name << ": triplet not reproduced\n";
      }
    }
  }
  o.summary = std::to_string(total) + " triplets (seed 20261019) reproduced exactly";
}

}  // namespace

int main() {
  run(1, "axiom suite", 5, axiom_suite);
  run(2, "example 3 reproduction", 60, example3_check);
  run(3, "example 4 reproduction", 1, example4_check);
  run(4, "example 5 count", 120, example5_check);
  run(5, "bijection theorem", 60, bijection_check);
  run(6, "free action", 600, free_check);
  run(7, "transitivity for trivial I", 600, transitive_check);
  run(8, "Wells exactness", 30, wells_check);
  run(9, "build/extract round trip", 600, roundtrip_check);
  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
