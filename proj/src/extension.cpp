#include "braceforge/extension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cochain_search.hpp"
#include "detail.hpp"

namespace braceforge {

// ------------------------------------------------------------ structure

Extension make_extension(SkewBrace e, SkewBrace h, SkewBrace i, std::vector<int> inj,
                         std::vector<int> proj) {
  if (static_cast<int>(inj.size()) != i.order() || static_cast<int>(proj.size()) != e.order())
    throw InputError("extension: map sizes do not match the braces");
  if (!is_brace_hom(i, e, inj)) fail("NotHom", {}, "inj");
  if (!is_brace_hom(e, h, proj)) fail("NotHom", {}, "proj");
  std::vector<int> to_i(e.order(), -1);
  for (int y = 0; y < i.order(); ++y) {
    if (to_i[inj[y]] >= 0) fail("NotInjective", {to_i[inj[y]], y});
    to_i[inj[y]] = y;
  }
  std::vector<char> hit(h.order(), 0);
  for (int x : proj) hit[x] = 1;
  for (int x = 0; x < h.order(); ++x)
    if (!hit[x]) fail("NotSurjective", {x});
  for (int x = 0; x < e.order(); ++x)
    if ((proj[x] == 0) != (to_i[x] >= 0)) fail("NotExact", {x});
  std::vector<int> image(inj);
  if (!is_ideal(e, image)) fail("NotIdeal");
  return Extension{std::move(e), std::move(h), std::move(i), std::move(inj), std::move(proj),
                   std::move(to_i)};
}

bool is_section(const Extension& ext, const Section& s) {
  if (static_cast<int>(s.size()) != ext.h.order() || s[0] != 0) return false;
  for (int h = 0; h < ext.h.order(); ++h)
    if (s[h] < 0 || s[h] >= ext.e.order() || ext.proj[s[h]] != h) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> fibres_of(const Extension& ext) {
  std::vector<std::vector<int>> fibres(ext.h.order());
  for (int x = 0; x < ext.e.order(); ++x) fibres[ext.proj[x]].push_back(x);
  fibres[0] = {0};
  return fibres;
}

}  // namespace

Section canonical_section(const Extension& ext) {
  Section s(ext.h.order(), -1);
  for (int x = ext.e.order() - 1; x >= 0; --x) s[ext.proj[x]] = x;
  return s;
}

std::uint64_t section_count(const Extension& ext) {
  return checked_pow(static_cast<std::uint64_t>(ext.i.order()),
                     static_cast<std::uint64_t>(ext.h.order() - 1));
}

Section section_at(const Extension& ext, std::uint64_t index) {
  const auto fibres = fibres_of(ext);
  Section s(ext.h.order(), 0);
  for (int h = 1; h < ext.h.order(); ++h) {
    const auto base = fibres[h].size();
    s[h] = fibres[h][index % base];
    index /= base;
  }
  return s;
}

SectionRange::SectionRange(const Extension& ext)
    : fibres_(fibres_of(ext)), digits_(ext.h.order(), 0) {}

std::optional<Section> SectionRange::next() {
  if (done_) return std::nullopt;
  Section s(fibres_.size());
  for (std::size_t h = 0; h < fibres_.size(); ++h) s[h] = fibres_[h][digits_[h]];
  // Advance the odometer, least significant digit at h = 1.
  std::size_t h = 1;
  for (; h < fibres_.size(); ++h) {
    if (++digits_[h] < fibres_[h].size()) break;
    digits_[h] = 0;
  }
  if (h >= fibres_.size()) done_ = true;
  return s;
}

int fibre_coordinate(const Extension& ext, const Section& s, int x) {
  const int h = ext.proj[x];
  return ext.to_i[ext.e.circ(ext.e.cinv(s[h]), x)];
}

ActionTriple extract_action(const Extension& ext, const Section& s) {
  const SkewBrace& e = ext.e;
  const int nh = ext.h.order(), ni = ext.i.order();
  ActionTriple t;
  for (int h = 0; h < nh; ++h) {
    const int sh = s[h];
    std::vector<int> nu(ni), mu(ni), sigma(ni);
    for (int y = 0; y < ni; ++y) {
      const int ey = ext.inj[y];
      nu[y] = ext.to_i[e.plus(e.neg(sh), e.circ(sh, ey))];
      mu[y] = ext.to_i[e.plus(e.plus(e.neg(sh), ey), sh)];
      sigma[y] = ext.to_i[e.circ(e.circ(e.cinv(sh), ey), sh)];
    }
    t.nu.emplace_back(std::move(nu));
    t.mu.emplace_back(std::move(mu));
    t.sigma.emplace_back(std::move(sigma));
  }
  return t;
}

std::pair<Cochain, Cochain> extract_cocycle(const Extension& ext, const Section& s) {
  const SkewBrace& e = ext.e;
  const SkewBrace& hb = ext.h;
  const int nh = hb.order();
  Cochain beta(nh, std::vector<int>(nh)), tau(nh, std::vector<int>(nh));
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      beta[a][b] = ext.to_i[e.plus(e.plus(e.neg(s[hb.plus(a, b)]), s[a]), s[b])];
      tau[a][b] = ext.to_i[e.circ(e.circ(e.cinv(s[hb.circ(a, b)]), s[a]), s[b])];
    }
  return {std::move(beta), std::move(tau)};
}

Triplet extract_triplet(const Extension& ext, const Section& s) {
  auto [beta, tau] = extract_cocycle(ext, s);
  return Triplet{extract_action(ext, s), std::move(beta), std::move(tau)};
}

// ------------------------------------------------------------ identities

std::optional<Violation> action_identity_violation(const SkewBrace& h, const SkewBrace& i,
                                                   const Triplet& t, Form form) {
  const detail::BraceOps ops(i);
  const int nh = h.order(), ni = i.order();
  const bool printed = form == Form::AsPrinted;
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      const int tau = t.tau[a][b];
      const int beta = t.beta[a][b];
      const int ac = h.circ(a, b), ap = h.plus(a, b);
      const int conj_add = printed ? i.neg(beta) : beta;
      const int conj_circ = printed ? i.cinv(tau) : tau;
      for (int y = 0; y < ni; ++y) {
        if (t.chi.nu[ac](y) != t.chi.nu[a](t.chi.nu[b](ops.lambda_inv[tau](y))))
          return Violation{"Action1Failed", {a, b, y}, {}};
        if (t.chi.mu[ap](y) != ops.inn_add[conj_add](t.chi.mu[b](t.chi.mu[a](y))))
          return Violation{"Action2Failed", {a, b, y}, {}};
        if (t.chi.sigma[ac](y) != ops.inn_circ[conj_circ](t.chi.sigma[b](t.chi.sigma[a](y))))
          return Violation{"Action3Failed", {a, b, y}, {}};
      }
    }
  return std::nullopt;
}

std::optional<Violation> cocycle_violation(const SkewBrace& h, const SkewBrace& i,
                                           const Triplet& t, Form form) {
  const int nh = h.order();
  const auto& beta = t.beta;
  const auto& tau = t.tau;
  const bool printed = form == Form::AsPrinted;
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      for (int c = 0; c < nh; ++c) {
        const int lhs1 = i.plus(beta[a][h.plus(b, c)], beta[b][c]);
        const int x = beta[h.plus(a, b)][c];
        const int y = t.chi.mu[c](beta[a][b]);
        const int rhs1 = printed ? i.plus(y, x) : i.plus(x, y);
        if (lhs1 != rhs1) return Violation{"Cocycle1Failed", {a, b, c}, {}};

        const int lhs2 = i.circ(tau[a][h.circ(b, c)], tau[b][c]);
        const int u = tau[h.circ(a, b)][c];
        const int v = t.chi.sigma[c](tau[a][b]);
        const int rhs2 = printed ? i.circ(v, u) : i.circ(u, v);
        if (lhs2 != rhs2) return Violation{"Cocycle2Failed", {a, b, c}, {}};
      }
  return std::nullopt;
}

std::optional<Violation> parent_relation_violation(const SkewBrace& h, const SkewBrace& i,
                                                   const Triplet& t, Form form) {
  const int nh = h.order(), ni = i.order();
  const auto& nu = t.chi.nu;
  const auto& mu = t.chi.mu;
  const auto& sigma = t.chi.sigma;
  const auto& beta = t.beta;
  const auto& tau = t.tau;
  std::vector<Perm> nu_inv;
  for (const auto& p : nu) nu_inv.push_back(p.inverse());
  const bool printed = form == Form::AsPrinted;

  for (int h1 = 0; h1 < nh; ++h1) {
    const int neg_h1 = h.neg(h1);
    for (int h2 = 0; h2 < nh; ++h2)
      for (int h3 = 0; h3 < nh; ++h3) {
        const int s23 = h.plus(h2, h3);
        const int g = h.circ(h1, s23);
        const int c12 = h.circ(h1, h2), c13 = h.circ(h1, h3);
        const int first_arg = printed ? h.plus(c13, neg_h1) : h.plus(c12, neg_h1);
        const int b_first = beta[first_arg][c13];
        const int b_mid = beta[c12][neg_h1];
        const int b_back = beta[h1][neg_h1];
        for (int y1 = 0; y1 < ni; ++y1) {
          const int q = nu[h1](y1);
          for (int y2 = 0; y2 < ni; ++y2) {
            const int p = nu[c12](i.circ(i.circ(tau[h1][h2], sigma[h2](y1)), y2));
            const int inner = printed ? i.minus(mu[neg_h1](p), q) : mu[neg_h1](i.minus(p, q));
            const int bracket = i.minus(i.plus(b_mid, inner), b_back);
            for (int y3 = 0; y3 < ni; ++y3) {
              const int inside =
                  i.plus(i.plus(beta[h2][h3], mu[h3](nu[h2](y2))), nu[h3](y3));
              const int lhs = nu[g](
                  i.circ(i.circ(tau[h1][s23], sigma[s23](y1)), nu_inv[s23](inside)));
              const int r = nu[c13](i.circ(i.circ(tau[h1][h3], sigma[h3](y1)), y3));
              const int rhs = i.plus(i.plus(b_first, mu[c13](bracket)), r);
              if (lhs != rhs) return Violation{"ParentRelationFailed", {h1, h2, h3, y1, y2, y3}, {}};
            }
          }
        }
      }
  }
  return std::nullopt;
}

std::optional<Violation> triplet_violation(const SkewBrace& h, const SkewBrace& i,
                                           const Triplet& t) {
  const int nh = h.order(), ni = i.order();
  if (static_cast<int>(t.chi.nu.size()) != nh || static_cast<int>(t.chi.mu.size()) != nh ||
      static_cast<int>(t.chi.sigma.size()) != nh || static_cast<int>(t.beta.size()) != nh ||
      static_cast<int>(t.tau.size()) != nh)
    return Violation{"ShapeMismatch", {}, "arrays must be indexed by H"};
  for (int a = 0; a < nh; ++a) {
    if (static_cast<int>(t.beta[a].size()) != nh || static_cast<int>(t.tau[a].size()) != nh)
      return Violation{"ShapeMismatch", {a}, "cochain row length"};
    for (const Perm* p : {&t.chi.nu[a], &t.chi.mu[a], &t.chi.sigma[a]})
      if (p->degree() != ni) return Violation{"ShapeMismatch", {a}, "permutation degree"};
    for (int b = 0; b < nh; ++b)
      if (t.beta[a][b] < 0 || t.beta[a][b] >= ni || t.tau[a][b] < 0 || t.tau[a][b] >= ni)
        return Violation{"ShapeMismatch", {a, b}, "cochain value out of range"};
  }
  for (int a = 0; a < nh; ++a)
    if (t.beta[0][a] || t.beta[a][0] || t.tau[0][a] || t.tau[a][0])
      return Violation{"NotNormalized", {a}, {}};
  for (int a = 0; a < nh; ++a) {
    if (!detail::preserves(i.additive(), t.chi.nu[a]))
      return Violation{"NotAutomorphism", {a}, "nu"};
    if (!detail::preserves(i.additive(), t.chi.mu[a]))
      return Violation{"NotAutomorphism", {a}, "mu"};
    if (!detail::preserves(i.multiplicative(), t.chi.sigma[a]))
      return Violation{"NotAutomorphism", {a}, "sigma"};
  }
  if (auto v = action_identity_violation(h, i, t)) return v;
  if (auto v = cocycle_violation(h, i, t)) return v;
  return parent_relation_violation(h, i, t);
}

// -------------------------------------------------------------- couplings

CouplingContext coupling_context(const SkewBrace& i) {
  CouplingContext ctx;
  ctx.aut_add = automorphism_group(i.additive());
  ctx.aut_circ = automorphism_group(i.multiplicative());
  for (int y = 0; y < i.order(); ++y) ctx.lambdas.push_back(lambda(i, y));
  ctx.n_group = normal_closure(ctx.aut_add, ctx.lambdas);
  ctx.inn_add = inner_group(i.additive());
  ctx.inn_circ = inner_group(i.multiplicative());
  return ctx;
}

bool same_coupling_classes(const Coupling& a, const ActionTriple& b) {
  for (std::size_t h = 0; h < a.rep.nu.size(); ++h) {
    if (!equal_mod(a.n_group, a.rep.nu[h], b.nu[h])) return false;
    if (!equal_mod(a.inn_add, a.rep.mu[h], b.mu[h])) return false;
    if (!equal_mod(a.inn_circ, a.rep.sigma[h], b.sigma[h])) return false;
  }
  return true;
}

std::optional<std::vector<std::vector<int>>> couplings_related(const SkewBrace& i,
                                                               const ActionTriple& chi1,
                                                               const ActionTriple& chi2) {
  const detail::BraceOps ops(i);
  const int nh = static_cast<int>(chi1.nu.size());
  std::vector<std::vector<int>> theta(nh);
  for (int h = 0; h < nh; ++h) {
    for (int y = 0; y < i.order(); ++y) {
      if (chi2.nu[h] != chi1.nu[h] * ops.lambda[y]) continue;
      if (chi2.mu[h] != ops.inn_add[chi1.nu[h](i.neg(y))] * chi1.mu[h]) continue;
      if (chi2.sigma[h] != ops.inn_circ[i.cinv(y)] * chi1.sigma[h]) continue;
      theta[h].push_back(y);
    }
    if (theta[h].empty()) return std::nullopt;
  }
  if (theta[0].empty() || theta[0][0] != 0) return std::nullopt;
  return theta;
}

Coupling coupling_of(const Extension& ext, int samples) {
  const CouplingContext ctx = coupling_context(ext.i);
  Coupling c{extract_action(ext, canonical_section(ext)), ctx.n_group, ctx.inn_add, ctx.inn_circ};
  const std::uint64_t count = section_count(ext);
  for (int k = 1; k <= samples; ++k) {
    const std::uint64_t index = count <= 1 ? 0 : (count - 1) * k / samples;
    const ActionTriple other = extract_action(ext, section_at(ext, index));
    if (!couplings_related(ext.i, c.rep, other) || !same_coupling_classes(c, other))
      fail("CouplingNotSectionIndependent", {static_cast<int>(index)});
  }
  return c;
}

// ---------------------------------------------------------- equivalence

std::optional<std::vector<int>> triplets_equivalent(const SkewBrace& h, const SkewBrace& i,
                                                    const Triplet& t1, const Triplet& t2) {
  auto candidates = couplings_related(i, t1.chi, t2.chi);
  if (!candidates) return std::nullopt;
  (*candidates)[0] = {0};
  const int nh = h.order();
  const auto& nu1 = t1.chi.nu;
  const auto& mu1 = t1.chi.mu;
  const auto& sigma1 = t1.chi.sigma;

  // Constraint (h1,h2) becomes checkable once θ is known on h1, h2 and the
  // sum (resp. product); bucket by the largest of those indices.
  std::vector<std::vector<std::pair<int, int>>> add_at(nh), circ_at(nh);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      add_at[std::max({a, b, h.plus(a, b)})].emplace_back(a, b);
      circ_at[std::max({a, b, h.circ(a, b)})].emplace_back(a, b);
    }

  std::vector<int> theta(nh, 0);
  auto ok_at = [&](int k) {
    for (auto [a, b] : add_at[k]) {
      const int ab = h.plus(a, b);
      int v = i.plus(nu1[ab](i.neg(theta[ab])), t1.beta[a][b]);
      v = i.plus(v, mu1[b](nu1[a](theta[a])));
      v = i.plus(v, nu1[b](theta[b]));
      if (v != t2.beta[a][b]) return false;
    }
    for (auto [a, b] : circ_at[k]) {
      const int ab = h.circ(a, b);
      int v = i.circ(i.cinv(theta[ab]), t1.tau[a][b]);
      v = i.circ(v, sigma1[b](theta[a]));
      v = i.circ(v, theta[b]);
      if (v != t2.tau[a][b]) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == nh) return true;
    for (int y : (*candidates)[k]) {
      theta[k] = y;
      if (ok_at(k) && rec(k + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return theta;
  return std::nullopt;
}

Extension extension_from_triplet(const SkewBrace& h, const SkewBrace& i, const Triplet& t) {
  const int nh = h.order(), ni = i.order(), n = nh * ni;
  std::vector<Perm> nu_inv;
  for (const auto& p : t.chi.nu) nu_inv.push_back(p.inverse());
  Table add(n, std::vector<int>(n)), circ(n, std::vector<int>(n));
  for (int h1 = 0; h1 < nh; ++h1)
    for (int y1 = 0; y1 < ni; ++y1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int y2 = 0; y2 < ni; ++y2) {
          const int hp = h.plus(h1, h2);
          int v = i.plus(t.beta[h1][h2], t.chi.mu[h2](t.chi.nu[h1](y1)));
          v = i.plus(v, t.chi.nu[h2](y2));
          add[h1 * ni + y1][h2 * ni + y2] = hp * ni + nu_inv[hp](v);
          const int hc = h.circ(h1, h2);
          const int w = i.circ(i.circ(t.tau[h1][h2], t.chi.sigma[h2](y1)), y2);
          circ[h1 * ni + y1][h2 * ni + y2] = hc * ni + w;
        }
  std::vector<int> inj(ni), proj(n);
  for (int y = 0; y < ni; ++y) inj[y] = y;
  for (int x = 0; x < n; ++x) proj[x] = x / ni;
  return make_extension(SkewBrace::from_tables(add, circ), h, i, std::move(inj), std::move(proj));
}

std::optional<BraceHom> extensions_equivalent(const Extension& e1, const Extension& e2) {
  const int nh = e1.h.order(), ni = e1.i.order(), n = e1.e.order();
  if (e2.h.order() != nh || e2.i.order() != ni || e2.e.order() != n) return std::nullopt;
  const Section s1 = canonical_section(e1);
  const Section s2 = canonical_section(e2);
  std::vector<std::vector<int>> fibre(nh);
  std::vector<int> coord(n);
  for (int x = 0; x < n; ++x) {
    fibre[e1.proj[x]].push_back(x);
    coord[x] = fibre_coordinate(e1, s1, x);
  }
  const SkewBrace& a = e1.e;
  const SkewBrace& b = e2.e;
  const SkewBrace& hb = e1.h;
  std::vector<std::vector<std::pair<int, int>>> add_at(nh), circ_at(nh);
  for (int p = 0; p < nh; ++p)
    for (int q = 0; q < nh; ++q) {
      add_at[std::max({p, q, hb.plus(p, q)})].emplace_back(p, q);
      circ_at[std::max({p, q, hb.circ(p, q)})].emplace_back(p, q);
    }
  std::vector<int> phi(n, -1);
  auto assign = [&](int h, int y_theta) {
    const int base = b.circ(s2[h], e2.inj[y_theta]);
    for (int x : fibre[h]) phi[x] = b.circ(base, e2.inj[coord[x]]);
  };
  auto ok_at = [&](int k) {
    for (auto [p, q] : add_at[k])
      for (int x : fibre[p])
        for (int y : fibre[q])
          if (phi[a.plus(x, y)] != b.plus(phi[x], phi[y])) return false;
    for (auto [p, q] : circ_at[k])
      for (int x : fibre[p])
        for (int y : fibre[q])
          if (phi[a.circ(x, y)] != b.circ(phi[x], phi[y])) return false;
    return true;
  };
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == nh) return true;
    const int lo = 0, hi = k == 0 ? 1 : ni;
    for (int y = lo; y < hi; ++y) {
      assign(k, y);
      if (ok_at(k) && rec(k + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return BraceHom{phi};
}

// ----------------------------------------------------------- Z²_α search


std::vector<Triplet> z2_alpha(const SkewBrace& h, const SkewBrace& i, const ActionTriple& alpha,
                              const Budget& budget) {
  const detail::BraceOps ops(i);
  const int nh = h.order(), ni = i.order();

  // Actions ≈-related to alpha: per-h options, then their product.
  std::vector<std::vector<std::array<Perm, 3>>> per_h(nh);
  for (int a = 0; a < nh; ++a) {
    std::set<std::array<Perm, 3>> seen;
    const int ylimit = a == 0 ? 1 : ni;
    for (int y = 0; y < ylimit; ++y)
      seen.insert({alpha.nu[a] * ops.lambda[y], ops.inn_add[alpha.nu[a](i.neg(y))] * alpha.mu[a],
                   ops.inn_circ[i.cinv(y)] * alpha.sigma[a]});
    per_h[a].assign(seen.begin(), seen.end());
  }
  std::uint64_t action_count = 1;
  for (const auto& o : per_h)
    action_count = action_count > UINT64_MAX / o.size() ? UINT64_MAX : action_count * o.size();
  budget.check(action_count, "z2_alpha actions");

  const auto beta_at = detail::bucket_triples(h, [&](int x, int y) { return h.plus(x, y); });
  const auto tau_at = detail::bucket_triples(h, [&](int x, int y) { return h.circ(x, y); });

  std::vector<Triplet> out;
  std::vector<std::size_t> pick(nh, 0);
  while (true) {
    ActionTriple chi;
    for (int a = 0; a < nh; ++a) {
      chi.nu.push_back(per_h[a][pick[a]][0]);
      chi.mu.push_back(per_h[a][pick[a]][1]);
      chi.sigma.push_back(per_h[a][pick[a]][2]);
    }
    // Per-cell options from the action identities: each pins one cell.
    std::vector<std::vector<int>> beta_opts, tau_opts;
    bool feasible = true;
    for (int a = 1; a < nh && feasible; ++a)
      for (int b = 1; b < nh && feasible; ++b) {
        const Perm mu_target = chi.mu[h.plus(a, b)] * (chi.mu[b] * chi.mu[a]).inverse();
        const Perm nu_target = (chi.nu[h.circ(a, b)]).inverse() * chi.nu[a] * chi.nu[b];
        const Perm sigma_target = chi.sigma[h.circ(a, b)] * (chi.sigma[b] * chi.sigma[a]).inverse();
        std::vector<int> bo, to;
        for (int y = 0; y < ni; ++y) {
          if (ops.inn_add[y] == mu_target) bo.push_back(y);
          if (ops.lambda[y] == nu_target && ops.inn_circ[y] == sigma_target) to.push_back(y);
        }
        feasible = !bo.empty() && !to.empty();
        beta_opts.push_back(std::move(bo));
        tau_opts.push_back(std::move(to));
      }
    // Degenerate identities at h1 or h2 = 0 must hold exactly.
    for (int a = 0; a < nh && feasible; ++a)
      feasible = chi.nu[a] == chi.nu[0] * chi.nu[a] && chi.mu[a] == chi.mu[a] * chi.mu[0] &&
                 chi.sigma[a] == chi.sigma[a] * chi.sigma[0] && chi.nu[0].is_identity() &&
                 chi.mu[0].is_identity() && chi.sigma[0].is_identity();
    if (feasible) {
      detail::CochainSearch betas(h, beta_opts, beta_at, [&](const Cochain& beta, int a, int b, int c) {
        return i.plus(beta[a][h.plus(b, c)], beta[b][c]) ==
               i.plus(beta[h.plus(a, b)][c], chi.mu[c](beta[a][b]));
      });
      detail::CochainSearch taus(h, tau_opts, tau_at, [&](const Cochain& tau, int a, int b, int c) {
        return i.circ(tau[a][h.circ(b, c)], tau[b][c]) ==
               i.circ(tau[h.circ(a, b)][c], chi.sigma[c](tau[a][b]));
      });
      const auto bs = nh > 1 ? betas.run(budget, "z2_alpha beta") : std::vector<Cochain>{zero_cochain(nh)};
      const auto ts = nh > 1 ? taus.run(budget, "z2_alpha tau") : std::vector<Cochain>{zero_cochain(nh)};
      budget.check(static_cast<std::uint64_t>(bs.size()) * ts.size(), "z2_alpha pairs");
      for (const auto& beta : bs)
        for (const auto& tau : ts) {
          Triplet t{chi, beta, tau};
          if (!parent_relation_violation(h, i, t)) out.push_back(std::move(t));
        }
    }
    int a = 0;
    for (; a < nh; ++a) {
      if (++pick[a] < per_h[a].size()) break;
      pick[a] = 0;
    }
    if (a == nh) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> triplet_classes(const SkewBrace& h, const SkewBrace& i,
                                              const std::vector<Triplet>& triplets) {
  std::vector<std::vector<int>> classes;
  for (int k = 0; k < static_cast<int>(triplets.size()); ++k) {
    bool placed = false;
    for (auto& cls : classes)
      if (triplets_equivalent(h, i, triplets[cls[0]], triplets[k])) {
        cls.push_back(k);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({k});
  }
  return classes;
}

// ------------------------------------------------ exhaustive enumeration

namespace {

/// Group tables on H×I ((h,y) ↦ h·|I| + y) whose first coordinate is the
/// H-product and whose restriction to {0}×I is the I-product.
class ExtensionGroupSearch {
 public:
  ExtensionGroupSearch(const FiniteGroup& hg, const FiniteGroup& ig, const Budget& budget)
      : hg_(hg), ig_(ig), budget_(budget), ni_(ig.order()), n_(hg.order() * ig.order()) {}

  std::vector<FiniteGroup> run() {
    t_.assign(n_, std::vector<int>(n_, -1));
    row_used_.assign(n_, std::vector<char>(n_, 0));
    col_used_.assign(n_, std::vector<char>(n_, 0));
    for (int x = 0; x < n_; ++x) {
      set(x, 0, x);
      set(0, x, x);
    }
    for (int a = 0; a < ni_; ++a)
      for (int b = 0; b < ni_; ++b)
        if (t_[a][b] < 0) set(a, b, ig_.op(a, b));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (t_[x][y] < 0) free_.emplace_back(x, y);
    rec(0);
    return std::move(out_);
  }

 private:
  void set(int x, int y, int v) {
    t_[x][y] = v;
    row_used_[x][v] = 1;
    col_used_[y][v] = 1;
  }
  void unset(int x, int y) {
    const int v = t_[x][y];
    row_used_[x][v] = 0;
    col_used_[y][v] = 0;
    t_[x][y] = -1;
  }

  int at(int x, int y) const { return (x < 0 || y < 0) ? -1 : t_[x][y]; }

  // Associativity instances that became fully known through cell (a,b).
  bool consistent(int a, int b) const {
    const int v = t_[a][b];
    for (int x = 0; x < n_; ++x) {
      // (a b) x = a (b x)
      const int l1 = at(v, x), r1 = at(a, at(b, x));
      if (l1 >= 0 && r1 >= 0 && l1 != r1) return false;
      // (x a) b = x (a b)
      const int l2 = at(at(x, a), b), r2 = at(x, v);
      if (l2 >= 0 && r2 >= 0 && l2 != r2) return false;
      for (int y = 0; y < n_; ++y) {
        // a = x y: (x y) b = x (y b)
        if (t_[x][y] == a) {
          const int r = at(x, at(y, b));
          if (r >= 0 && r != v) return false;
        }
        // b = x y: a (x y) = (a x) y
        if (t_[x][y] == b) {
          const int l = at(at(a, x), y);
          if (l >= 0 && l != v) return false;
        }
      }
    }
    return true;
  }

  void rec(std::size_t k) {
    budget_.check(++nodes_, "extension group search nodes");
    if (k == free_.size()) {
      if (!group_violation(t_)) out_.push_back(FiniteGroup::from_table(t_));
      return;
    }
    const auto [x, y] = free_[k];
    const int hv = hg_.op(x / ni_, y / ni_);
    for (int c = 0; c < ni_; ++c) {
      const int v = hv * ni_ + c;
      if (row_used_[x][v] || col_used_[y][v]) continue;
      set(x, y, v);
      if (consistent(x, y)) rec(k + 1);
      unset(x, y);
    }
  }

  const FiniteGroup& hg_;
  const FiniteGroup& ig_;
  const Budget& budget_;
  int ni_, n_;
  Table t_;
  std::vector<std::vector<char>> row_used_, col_used_;
  std::vector<std::pair<int, int>> free_;
  std::vector<FiniteGroup> out_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<Extension> enumerate_extensions(const SkewBrace& h, const SkewBrace& i,
                                            const Budget& budget) {
  const auto adds = ExtensionGroupSearch(h.additive(), i.additive(), budget).run();
  const auto circs = ExtensionGroupSearch(h.multiplicative(), i.multiplicative(), budget).run();
  const int ni = i.order(), n = h.order() * ni;
  std::vector<int> inj(ni), proj(n);
  std::iota(inj.begin(), inj.end(), 0);
  for (int x = 0; x < n; ++x) proj[x] = x / ni;
  budget.check(static_cast<std::uint64_t>(adds.size()) * circs.size(), "extension table pairs");
  std::vector<Extension> out;
  for (const auto& add : adds)
    for (const auto& circ : circs) {
      if (brace_violation(add, circ)) continue;
      out.push_back(make_extension(SkewBrace::from_groups(add, circ), h, i, inj, proj));
    }
  return out;
}

ExtClassification ext_classes(const SkewBrace& h, const SkewBrace& i, const Budget& budget) {
  ExtClassification r;
  r.extensions = enumerate_extensions(h, i, budget);
  for (int k = 0; k < static_cast<int>(r.extensions.size()); ++k) {
    bool placed = false;
    for (auto& cls : r.classes)
      if (extensions_equivalent(r.extensions[cls[0]], r.extensions[k])) {
        cls.push_back(k);
        placed = true;
        break;
      }
    if (!placed) r.classes.push_back({k});
  }
  std::vector<ActionTriple> class_action;
  for (const auto& cls : r.classes) {
    const ActionTriple rep = coupling_of(r.extensions[cls[0]]).rep;
    // Equivalent extensions carry ≈-related couplings.
    for (int member : cls)
      if (!couplings_related(i, rep, coupling_of(r.extensions[member]).rep))
        fail("EquivalentExtensionsWithDifferentCouplings", {cls[0], member});
    class_action.push_back(rep);
  }
  for (int c = 0; c < static_cast<int>(r.classes.size()); ++c) {
    int home = -1;
    for (int b = 0; b < static_cast<int>(r.buckets.size()); ++b)
      if (couplings_related(i, r.buckets[b].rep, class_action[c])) {
        if (home >= 0) fail("CouplingBucketsOverlap", {home, b});
        home = b;
      }
    if (home < 0) {
      r.buckets.push_back({class_action[c], {}});
      home = static_cast<int>(r.buckets.size()) - 1;
    }
    r.buckets[home].classes.push_back(c);
  }
  return r;
}

ActionTriple identity_triple(int h_order, int i_order) {
  ActionTriple t;
  t.nu.assign(h_order, Perm::identity(i_order));
  t.mu = t.nu;
  t.sigma = t.nu;
  return t;
}

Cochain zero_cochain(int h_order) { return Cochain(h_order, std::vector<int>(h_order, 0)); }

}  // namespace braceforge
