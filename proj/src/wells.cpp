#include "braceforge/wells.hpp"

#include <algorithm>
#include <set>

#include "braceforge/errors.hpp"

namespace braceforge {

using json = nlohmann::json;

namespace {

void require_trivial(const SkewBrace& i) {
  if (!i.is_trivial()) throw InputError("NotTrivialCoefficients");
}

Perm conj(const Perm& theta_inv, const Perm& p, const Perm& theta) { return theta_inv * p * theta; }

// Extension of E_x = (χ, β + x_g, τ + x_f) for every class x.
std::vector<Triplet> class_triplets(const Extension& ext, const WellsContext& ctx) {
  std::vector<Triplet> out;
  for (const auto& rep : ctx.h2.reps())
    out.push_back(h2_act(ext.h, ext.i, ctx.base, embed_pair(ctx.centre, rep)));
  return out;
}

// Index x with `t` ∼ E_x; throws unless exactly one exists.
int locate(const Extension& ext, const std::vector<Triplet>& classes, const Triplet& t) {
  int found = -1;
  for (int x = 0; x < static_cast<int>(classes.size()); ++x) {
    if (!triplets_equivalent(ext.h, ext.i, classes[x], t)) continue;
    if (found >= 0) fail("ActionNotFree", {found, x});
    found = x;
  }
  if (found < 0) fail("ActionNotTransitive");
  return found;
}

Triplet canonical_triplet(const Extension& ext) {
  return extract_triplet(ext, canonical_section(ext));
}

int position(const std::vector<AutPair>& c, const AutPair& p) {
  auto it = std::lower_bound(c.begin(), c.end(), p);
  if (it == c.end() || *it != p) return -1;
  return static_cast<int>(it - c.begin());
}

}  // namespace

Extension pair_act(const Extension& ext, const AutPair& c) {
  require_trivial(ext.i);
  const Perm phi_inv = c.phi.inverse();
  std::vector<int> inj(ext.i.order()), proj(ext.e.order());
  for (int y = 0; y < ext.i.order(); ++y) inj[y] = ext.inj[c.theta(y)];
  for (int x = 0; x < ext.e.order(); ++x) proj[x] = phi_inv(ext.proj[x]);
  return make_extension(ext.e, ext.h, ext.i, std::move(inj), std::move(proj));
}

std::vector<AutPair> stabilizer_C(const SkewBrace& h, const SkewBrace& i, const ActionTriple& chi) {
  const PermGroup aut_h = brace_automorphisms(h);
  const PermGroup aut_i = brace_automorphisms(i);
  const PermGroup inn_add = inner_group(i.additive());
  const PermGroup inn_circ = inner_group(i.multiplicative());
  std::vector<AutPair> out;
  for (const Perm& phi : aut_h.elements())
    for (const Perm& theta : aut_i.elements()) {
      const Perm ti = theta.inverse();
      bool ok = true;
      for (int x = 0; x < h.order() && ok; ++x) {
        const int px = phi(x);
        ok = conj(ti, chi.nu[px], theta) == chi.nu[x] &&
             equal_mod(inn_add, conj(ti, chi.mu[px], theta), chi.mu[x]) &&
             equal_mod(inn_circ, conj(ti, chi.sigma[px], theta), chi.sigma[x]);
      }
      if (ok) out.push_back({phi, theta});
    }
  std::sort(out.begin(), out.end());
  for (const auto& a : out)
    for (const auto& b : out)
      if (position(out, a * b) < 0) fail("StabilizerNotClosed");
  return out;
}

int c_act_on_h2(const SkewBrace& h, const Coefficients& c, const CohomologyGroup& g,
                const AutPair& pair, int cls) {
  std::vector<int> to_a(*std::max_element(c.embed.begin(), c.embed.end()) + 1, -1);
  for (int k = 0; k < static_cast<int>(c.embed.size()); ++k) to_a[c.embed[k]] = k;
  const Perm ti = pair.theta.inverse();
  auto transform = [&](const CocyclePair& x) {
    CocyclePair r = x;
    for (int p = 0; p < h.order(); ++p)
      for (int q = 0; q < h.order(); ++q) {
        r.g[p][q] = to_a[ti(c.embed[x.g[pair.phi(p)][pair.phi(q)]])];
        r.f[p][q] = to_a[ti(c.embed[x.f[pair.phi(p)][pair.phi(q)]])];
      }
    return r;
  };
  const CocyclePair& rep = g.reps()[cls];
  const int out = g.class_of(transform(rep));
  // A second representative of the same coset must land in the same class.
  const CocyclePair other = pair_add(c.a, rep, g.b2().back());
  if (g.class_of(transform(other)) != out) fail("ActionNotWellDefined", {cls});
  return out;
}

std::vector<Perm> autb_I(const Extension& ext) {
  std::vector<char> in_i(ext.e.order(), 0);
  for (int x : ext.inj) in_i[x] = 1;
  const PermGroup all = brace_automorphisms(ext.e, ext.e.order());
  std::vector<Perm> out;
  for (const Perm& g : all.elements()) {
    bool keeps = true;
    for (int x : ext.inj) keeps = keeps && in_i[g(x)];
    if (keeps) out.push_back(g);
  }
  return out;
}

AutPair rho(const Extension& ext, const Perm& gamma) {
  const Section s = canonical_section(ext);
  std::vector<int> gh(ext.h.order()), gi(ext.i.order());
  for (int x = 0; x < ext.h.order(); ++x) gh[x] = ext.proj[gamma(s[x])];
  for (int y = 0; y < ext.i.order(); ++y) gi[y] = ext.to_i[gamma(ext.inj[y])];
  return {Perm(std::move(gh)), Perm(std::move(gi))};
}

Perm psi(const Extension& ext, const std::vector<int>& lambda) {
  const Section s = canonical_section(ext);
  const SkewBrace& e = ext.e;
  std::vector<int> m(e.order());
  for (int x = 0; x < e.order(); ++x) {
    const int h = ext.proj[x];
    const int y = fibre_coordinate(ext, s, x);
    m[x] = e.circ(e.circ(s[h], ext.inj[lambda[h]]), ext.inj[y]);
  }
  return Perm(std::move(m));
}

WellsContext wells_context(const Extension& ext, const Budget& budget) {
  require_trivial(ext.i);
  Triplet base = canonical_triplet(ext);
  Coefficients centre = centre_coefficients(ext.i, base.chi);
  CohomologyGroup h2 = h2N(ext.h, centre, {}, budget);
  std::vector<AutPair> c = stabilizer_C(ext.h, ext.i, base.chi);
  return {std::move(base), std::move(centre), std::move(h2), std::move(c)};
}

std::vector<int> wells_map(const Extension& ext, const WellsContext& ctx) {
  const auto classes = class_triplets(ext, ctx);
  std::vector<int> omega;
  for (const AutPair& c : ctx.c) omega.push_back(locate(ext, classes, canonical_triplet(pair_act(ext, c))));
  return omega;
}

bool gamma_action_check(const Extension& ext, const WellsContext& ctx) {
  const auto classes = class_triplets(ext, ctx);
  const int n = static_cast<int>(classes.size());
  // moved[c][k]: class of (E_k)^c.
  std::vector<std::vector<int>> moved;
  for (const AutPair& c : ctx.c) {
    std::vector<int> row;
    for (int k = 0; k < n; ++k) {
      const Extension ek = extension_from_triplet(ext.h, ext.i, classes[k]);
      row.push_back(locate(ext, classes, canonical_triplet(pair_act(ek, c))));
    }
    moved.push_back(std::move(row));
  }
  const int nc = static_cast<int>(ctx.c.size());
  auto act = [&](int k, int c, int x) { return ctx.h2.add(moved[c][k], x); };
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = 0; c2 < nc; ++c2) {
      const int c12 = position(ctx.c, ctx.c[c1] * ctx.c[c2]);
      for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2) {
          // (c1,x1)(c2,x2) = (c1c2, x1^{c2} + x2)
          const int prod_x =
              ctx.h2.add(c_act_on_h2(ext.h, ctx.centre, ctx.h2, ctx.c[c2], x1), x2);
          for (int k = 0; k < n; ++k)
            if (act(act(k, c1, x1), c2, x2) != act(k, c12, prod_x)) return false;
        }
    }
  return true;
}

ExactSequenceReport verify_exact_sequence(const Extension& ext, const Budget& budget) {
  const WellsContext ctx = wells_context(ext, budget);
  ExactSequenceReport r;
  r.c_order = static_cast<int>(ctx.c.size());
  r.h2_order = static_cast<int>(ctx.h2.order());

  const std::vector<Perm> aut = autb_I(ext);
  r.autb_i_order = static_cast<int>(aut.size());
  const AutPair one{Perm::identity(ext.h.order()), Perm::identity(ext.i.order())};

  std::set<Perm> kernel;
  std::set<AutPair> image;
  r.rho_into_c = true;
  for (const Perm& g : aut) {
    const AutPair p = rho(ext, g);
    if (p == one) kernel.insert(g);
    image.insert(p);
    if (position(ctx.c, p) < 0) r.rho_into_c = false;
  }
  r.kernel_rho_order = static_cast<int>(kernel.size());
  r.im_rho_order = static_cast<int>(image.size());

  const auto z1 = z1N(ext.h, ctx.centre, Z1Reading::Standard, budget);
  r.z1_order = static_cast<int>(z1.size());
  std::vector<std::vector<int>> lambdas;
  for (const auto& t : z1) {
    std::vector<int> l(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) l[k] = ctx.centre.embed[t[k]];
    lambdas.push_back(std::move(l));
  }
  std::set<Perm> psi_image;
  for (const auto& l : lambdas) psi_image.insert(psi(ext, l));
  r.psi_bijective = psi_image.size() == lambdas.size() && psi_image == kernel;
  r.psi_hom = true;
  for (const auto& a : lambdas)
    for (const auto& b : lambdas) {
      std::vector<int> sum(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) sum[k] = ext.i.plus(a[k], b[k]);
      if (psi(ext, sum) != psi(ext, a) * psi(ext, b)) r.psi_hom = false;
    }

  r.c = ctx.c;
  r.omega = wells_map(ext, ctx);
  std::set<AutPair> ker_omega;
  for (int k = 0; k < r.c_order; ++k)
    if (r.omega[k] == ctx.h2.zero()) ker_omega.insert(ctx.c[k]);
  r.ker_omega_order = static_cast<int>(ker_omega.size());
  r.im_rho_eq_ker_omega = image == ker_omega;

  r.derivation_law = true;
  for (int a = 0; a < r.c_order; ++a)
    for (int b = 0; b < r.c_order; ++b) {
      const int ab = position(ctx.c, ctx.c[a] * ctx.c[b]);
      const int law = ctx.h2.add(c_act_on_h2(ext.h, ctx.centre, ctx.h2, ctx.c[b], r.omega[a]),
                                 r.omega[b]);
      if (r.omega[ab] != law) r.derivation_law = false;
      if (!r.twisting_witness && r.omega[ab] != ctx.h2.add(r.omega[a], r.omega[b]))
        r.twisting_witness = std::make_pair(a, b);
    }

  // ν read off every section (up to a cap) should agree for trivial I.
  r.nu_section_independent = true;
  SectionRange sections(ext);
  for (int k = 0; k < 256; ++k) {
    auto s = sections.next();
    if (!s) break;
    if (extract_action(ext, *s).nu != ctx.base.chi.nu) r.nu_section_independent = false;
  }
  return r;
}

json to_json(const ExactSequenceReport& r) {
  json table = json::array();
  for (std::size_t k = 0; k < r.omega.size(); ++k)
    table.push_back({{"phi", r.c[k].phi.map()}, {"theta", r.c[k].theta.map()}, {"omega", r.omega[k]}});
  json j = {
      {"autb_i_order", r.autb_i_order},
      {"kernel_rho_order", r.kernel_rho_order},
      {"z1_order", r.z1_order},
      {"psi_bijective", r.psi_bijective},
      {"psi_hom", r.psi_hom},
      {"rho_into_c", r.rho_into_c},
      {"c_order", r.c_order},
      {"h2_order", r.h2_order},
      {"im_rho_order", r.im_rho_order},
      {"ker_omega_order", r.ker_omega_order},
      {"im_rho_eq_ker_omega", r.im_rho_eq_ker_omega},
      {"derivation_law", r.derivation_law},
      {"nu_section_independent", r.nu_section_independent},
      {"exact", r.exact()},
      {"omega_table", table},
  };
  j["twisting_witness"] =
      r.twisting_witness ? json{r.twisting_witness->first, r.twisting_witness->second} : json();
  return j;
}

}  // namespace braceforge
