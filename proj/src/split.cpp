#include "braceforge/split.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "detail.hpp"

namespace braceforge {

namespace {

std::vector<int> sweep_set(const SkewBrace& h, const SkewBrace& i, SweepMode mode) {
  const bool full = mode == SweepMode::Full ||
                    (mode == SweepMode::Auto && h.order() * i.order() <= 64);
  std::vector<int> out;
  if (full) {
    for (int x = 0; x < h.order(); ++x) out.push_back(x);
    return out;
  }
  out.push_back(0);
  for (int g : h.additive().generators()) out.push_back(g);
  return out;
}

/// Compatibility sweep only; assumes the shape and automorphism checks passed.
std::optional<Violation> compatibility_violation(const SkewBrace& h, const SkewBrace& i,
                                                 const ActionTriple& t,
                                                 const std::vector<Perm>& nu_inv,
                                                 const std::vector<int>& inner, Form form) {
  const int nh = h.order(), ni = i.order();
  const auto& nu = t.nu;
  const auto& mu = t.mu;
  const auto& sigma = t.sigma;
  for (int h1 = 0; h1 < nh; ++h1) {
    const int neg_h1 = h.neg(h1);
    for (int h2 : inner)
      for (int h3 : inner) {
        const int s23 = h.plus(h2, h3);
        const int c1_23 = h.circ(h1, s23), c12 = h.circ(h1, h2), c13 = h.circ(h1, h3);
        const int outer = form == Form::AsPrinted ? h.plus(neg_h1, h.circ(h2, h3))
                                                  : h.plus(neg_h1, c13);
        for (int y1 = 0; y1 < ni; ++y1) {
          const int u = nu_inv[h1](y1);
          const int a23 = sigma[s23](u), a2 = sigma[h2](u), a3 = sigma[h3](u);
          for (int y2 = 0; y2 < ni; ++y2) {
            const int y12 = nu[c12](i.circ(a2, nu_inv[h2](y2)));
            const int left_part = mu[outer](i.minus(y12, y1));
            const int m2 = mu[h3](y2);
            for (int y3 = 0; y3 < ni; ++y3) {
              const int lhs = nu[c1_23](i.circ(a23, nu_inv[s23](i.plus(m2, y3))));
              const int y13 = nu[c13](i.circ(a3, nu_inv[h3](y3)));
              if (lhs != i.plus(left_part, y13))
                return Violation{"CompatibilityFailed", {h1, h2, h3, y1, y2, y3}, {}};
            }
          }
        }
      }
  }
  return std::nullopt;
}

std::optional<Violation> law_violation(const SkewBrace& h, const ActionTriple& t) {
  const int nh = h.order();
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      if (t.nu[h.circ(a, b)] != t.nu[a] * t.nu[b]) return Violation{"NotHom", {a, b}, "nu"};
      if (t.mu[h.plus(a, b)] != t.mu[b] * t.mu[a]) return Violation{"NotAntiHom", {a, b}, "mu"};
      if (t.sigma[h.circ(a, b)] != t.sigma[b] * t.sigma[a])
        return Violation{"NotAntiHom", {a, b}, "sigma"};
    }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> split_triple_violation(const SkewBrace& h, const SkewBrace& i,
                                                const ActionTriple& t, SplitCheckOptions opts) {
  const int nh = h.order(), ni = i.order();
  if (static_cast<int>(t.nu.size()) != nh || static_cast<int>(t.mu.size()) != nh ||
      static_cast<int>(t.sigma.size()) != nh)
    return Violation{"ShapeMismatch", {}, "arrays must be indexed by H"};
  for (int a = 0; a < nh; ++a) {
    for (const Perm* p : {&t.nu[a], &t.mu[a], &t.sigma[a]})
      if (p->degree() != ni) return Violation{"ShapeMismatch", {a}, "permutation degree"};
    if (!detail::preserves(i.additive(), t.nu[a])) return Violation{"NotAutomorphism", {a}, "nu"};
    if (!detail::preserves(i.additive(), t.mu[a])) return Violation{"NotAutomorphism", {a}, "mu"};
    if (!detail::preserves(i.multiplicative(), t.sigma[a]))
      return Violation{"NotAutomorphism", {a}, "sigma"};
  }
  if (auto v = law_violation(h, t)) return v;
  std::vector<Perm> nu_inv;
  for (const auto& p : t.nu) nu_inv.push_back(p.inverse());
  return compatibility_violation(h, i, t, nu_inv, sweep_set(h, i, opts.sweep), opts.form);
}

void validate_split_triple(const SkewBrace& h, const SkewBrace& i, const ActionTriple& t,
                           SplitCheckOptions opts) {
  if (auto v = split_triple_violation(h, i, t, opts)) throw AxiomError(*v);
}

SkewBrace semidirect_product(const SkewBrace& h, const SkewBrace& i, const ActionTriple& t) {
  validate_split_triple(h, i, t);
  const int nh = h.order(), ni = i.order(), n = nh * ni;
  std::vector<Perm> nu_inv;
  for (const auto& p : t.nu) nu_inv.push_back(p.inverse());
  Table add(n, std::vector<int>(n)), circ(n, std::vector<int>(n));
  for (int h1 = 0; h1 < nh; ++h1)
    for (int y1 = 0; y1 < ni; ++y1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int y2 = 0; y2 < ni; ++y2) {
          add[h1 * ni + y1][h2 * ni + y2] = h.plus(h1, h2) * ni + i.plus(t.mu[h2](y1), y2);
          const int hc = h.circ(h1, h2);
          const int y = t.nu[hc](i.circ(t.sigma[h2](nu_inv[h1](y1)), nu_inv[h2](y2)));
          circ[h1 * ni + y1][h2 * ni + y2] = hc * ni + y;
        }
  return SkewBrace::from_tables(add, circ);
}

Extension split_extension(const SkewBrace& h, const SkewBrace& i, const ActionTriple& t) {
  SkewBrace e = semidirect_product(h, i, t);
  const int ni = i.order();
  std::vector<int> inj(ni), proj(e.order());
  for (int y = 0; y < ni; ++y) inj[y] = y;
  for (int x = 0; x < e.order(); ++x) proj[x] = x / ni;
  return make_extension(std::move(e), h, i, std::move(inj), std::move(proj));
}

SplitDecomposition split_decompose(const Extension& ext, const Section& s) {
  if (!is_section(ext, s)) fail("NotASection");
  if (!is_brace_hom(ext.h, ext.e, s)) fail("SectionNotHom");
  ActionTriple t = extract_action(ext, s);
  const SkewBrace product = semidirect_product(ext.h, ext.i, t);
  const SkewBrace& e = ext.e;
  const int ni = ext.i.order();
  std::vector<int> phi(e.order());
  for (int x = 0; x < e.order(); ++x) {
    const int h = ext.proj[x];
    phi[x] = h * ni + ext.to_i[e.plus(e.neg(s[h]), x)];
  }
  if (!is_brace_hom(e, product, phi)) fail("DecompositionNotHom");
  for (int y = 0; y < ni; ++y)
    if (phi[ext.inj[y]] != y) fail("DiagramNotCommutative", {y}, "injection");
  for (int x = 0; x < e.order(); ++x)
    if (phi[x] / ni != ext.proj[x]) fail("DiagramNotCommutative", {x}, "projection");
  return SplitDecomposition{std::move(t), BraceHom{std::move(phi)}};
}

std::optional<Section> find_split_section(const Extension& ext) {
  const SkewBrace& hb = ext.h;
  const SkewBrace& e = ext.e;
  const int nh = hb.order();
  std::vector<std::vector<int>> fibre(nh);
  for (int x = 0; x < e.order(); ++x) fibre[ext.proj[x]].push_back(x);
  fibre[0] = {0};
  std::vector<std::vector<std::pair<int, int>>> at(nh);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      at[std::max({a, b, hb.plus(a, b), hb.circ(a, b)})].emplace_back(a, b);
  Section s(nh, 0);
  auto ok_at = [&](int k) {
    for (auto [a, b] : at[k]) {
      if (std::max({a, b, hb.plus(a, b)}) <= k && s[hb.plus(a, b)] != e.plus(s[a], s[b]))
        return false;
      if (std::max({a, b, hb.circ(a, b)}) <= k && s[hb.circ(a, b)] != e.circ(s[a], s[b]))
        return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == nh) return true;
    for (int x : fibre[k]) {
      s[k] = x;
      if (ok_at(k) && rec(k + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return s;
  return std::nullopt;
}

SplitDecomposition split_decompose(const Extension& ext) {
  auto s = find_split_section(ext);
  if (!s) fail("NotSplit");
  return split_decompose(ext, *s);
}

std::vector<ActionTriple> enumerate_split_triples(const SkewBrace& h, const SkewBrace& i,
                                                  SplitCheckOptions opts, int jobs) {
  const PermGroup aut_add = automorphism_group(i.additive());
  const PermGroup aut_circ = automorphism_group(i.multiplicative());
  const auto nus = homomorphisms_into(h.multiplicative(), aut_add, false);
  const auto mus = homomorphisms_into(h.additive(), aut_add, true);
  const auto sigmas = homomorphisms_into(h.multiplicative(), aut_circ, true);
  const std::vector<int> inner = sweep_set(h, i, opts.sweep);

  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(nus.size())));
  std::vector<std::vector<ActionTriple>> found(nus.size());
  auto work = [&](int worker) {
    for (std::size_t k = worker; k < nus.size(); k += jobs) {
      std::vector<Perm> nu_inv;
      for (const auto& p : nus[k]) nu_inv.push_back(p.inverse());
      for (const auto& mu : mus)
        for (const auto& sigma : sigmas) {
          ActionTriple t{nus[k], mu, sigma};
          if (!compatibility_violation(h, i, t, nu_inv, inner, opts.form))
            found[k].push_back(std::move(t));
        }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<ActionTriple> out;
  for (auto& f : found)
    for (auto& t : f) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braceforge
