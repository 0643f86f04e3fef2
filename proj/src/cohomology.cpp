#include "braceforge/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cochain_search.hpp"

namespace braceforge {

namespace {

/// Restricts each permutation of χ to `subset` (sorted I-indices), relabelled.
ActionTriple restrict_action(const ActionTriple& chi, const std::vector<int>& subset) {
  std::vector<int> index(chi.nu.empty() ? 0 : chi.nu[0].degree(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) index[subset[k]] = static_cast<int>(k);
  auto restrict = [&](const Perm& p, int h, const char* which) {
    std::vector<int> m(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
      const int v = index[p(subset[k])];
      if (v < 0) fail("ActionDoesNotPreserve", {h, subset[k]}, which);
      m[k] = v;
    }
    return Perm(std::move(m));
  };
  ActionTriple out;
  for (std::size_t h = 0; h < chi.nu.size(); ++h) {
    out.nu.push_back(restrict(chi.nu[h], static_cast<int>(h), "nu"));
    out.mu.push_back(restrict(chi.mu[h], static_cast<int>(h), "mu"));
    out.sigma.push_back(restrict(chi.sigma[h], static_cast<int>(h), "sigma"));
  }
  return out;
}

Coefficients from_subset(const SkewBrace& i, const ActionTriple& chi, const std::vector<int>& s) {
  SubBrace sub = sub_brace(i, s);
  if (!sub.brace.is_trivial() || !sub.brace.additive().is_abelian())
    throw InputError("NonAbelianCoefficients");
  return Coefficients{std::move(sub.brace), restrict_action(chi, sub.embed), std::move(sub.embed)};
}

}  // namespace

Coefficients coefficients(const SkewBrace& i, const ActionTriple& chi) {
  if (!i.is_trivial() || !i.additive().is_abelian()) throw InputError("NonAbelianCoefficients");
  std::vector<int> all(i.order());
  std::iota(all.begin(), all.end(), 0);
  return from_subset(i, chi, all);
}

Coefficients annihilator_coefficients(const SkewBrace& i, const ActionTriple& chi) {
  return from_subset(i, chi, annihilator(i));
}

Coefficients centre_coefficients(const SkewBrace& i, const ActionTriple& chi) {
  if (!i.is_trivial()) throw InputError("NotTrivialCoefficients");
  return from_subset(i, chi, centre(i.additive()));
}

CocyclePair pair_add(const SkewBrace& a, const CocyclePair& x, const CocyclePair& y) {
  CocyclePair r = x;
  for (std::size_t p = 0; p < x.g.size(); ++p)
    for (std::size_t q = 0; q < x.g.size(); ++q) {
      r.g[p][q] = a.plus(x.g[p][q], y.g[p][q]);
      r.f[p][q] = a.plus(x.f[p][q], y.f[p][q]);
    }
  return r;
}

CocyclePair pair_neg(const SkewBrace& a, const CocyclePair& x) {
  CocyclePair r = x;
  for (auto& row : r.g)
    for (int& v : row) v = a.neg(v);
  for (auto& row : r.f)
    for (int& v : row) v = a.neg(v);
  return r;
}

CocyclePair zero_pair(int h_order) { return {zero_cochain(h_order), zero_cochain(h_order)}; }

std::vector<CocyclePair> z2N(const SkewBrace& h, const Coefficients& c, Z2Options opts,
                             const Budget& budget) {
  const SkewBrace& a = c.a;
  const int nh = h.order();
  const std::size_t cells = static_cast<std::size_t>(nh - 1) * (nh - 1);
  std::vector<int> all(a.order());
  std::iota(all.begin(), all.end(), 0);
  const std::vector<std::vector<int>> options(cells, all);
  const auto g_at = detail::bucket_triples(h, [&](int x, int y) { return h.plus(x, y); });
  const auto f_at = detail::bucket_triples(h, [&](int x, int y) { return h.circ(x, y); });
  detail::CochainSearch gs(h, options, g_at, [&](const Cochain& g, int p, int q, int r) {
    return a.plus(g[p][h.plus(q, r)], g[q][r]) == a.plus(g[h.plus(p, q)][r], c.chi.mu[r](g[p][q]));
  });
  detail::CochainSearch fs(h, options, f_at, [&](const Cochain& f, int p, int q, int r) {
    return a.plus(f[p][h.circ(q, r)], f[q][r]) ==
           a.plus(f[h.circ(p, q)][r], c.chi.sigma[r](f[p][q]));
  });
  const auto gs_out = gs.run(budget, "z2N additive cocycles");
  const auto fs_out = fs.run(budget, "z2N multiplicative cocycles");
  budget.check(static_cast<std::uint64_t>(gs_out.size()) * fs_out.size(), "z2N pairs");
  std::vector<CocyclePair> out;
  for (const auto& g : gs_out)
    for (const auto& f : fs_out) {
      if (opts.compatible && parent_relation_violation(h, a, Triplet{c.chi, g, f})) continue;
      out.push_back({g, f});
    }
  std::sort(out.begin(), out.end());
  return out;
}

CocyclePair coboundary(const SkewBrace& h, const Coefficients& c, const std::vector<int>& theta) {
  const SkewBrace& a = c.a;
  const int nh = h.order();
  CocyclePair r = zero_pair(nh);
  for (int p = 0; p < nh; ++p)
    for (int q = 0; q < nh; ++q) {
      const int s = h.plus(p, q);
      int g = a.neg(c.chi.nu[s](theta[s]));
      g = a.plus(g, c.chi.mu[q](c.chi.nu[p](theta[p])));
      r.g[p][q] = a.plus(g, c.chi.nu[q](theta[q]));
      const int m = h.circ(p, q);
      r.f[p][q] = a.plus(a.plus(a.neg(theta[m]), c.chi.sigma[q](theta[p])), theta[q]);
    }
  return r;
}

namespace {

/// Calls visit(θ) for every map H → A with θ(0) = 0.
template <class F>
void for_each_map(int nh, int na, const Budget& budget, const std::string& what, F visit) {
  budget.check(checked_pow(na, nh - 1), what);
  std::vector<int> theta(nh, 0);
  while (true) {
    visit(theta);
    int k = 1;
    for (; k < nh; ++k) {
      if (++theta[k] < na) break;
      theta[k] = 0;
    }
    if (k >= nh) return;
  }
}

}  // namespace

std::vector<CocyclePair> b2N(const SkewBrace& h, const Coefficients& c, const Budget& budget) {
  std::set<CocyclePair> seen;
  for_each_map(h.order(), c.a.order(), budget, "b2N maps",
               [&](const std::vector<int>& theta) { seen.insert(coboundary(h, c, theta)); });
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> z1N(const SkewBrace& h, const Coefficients& c, Z1Reading reading,
                                  const Budget& budget) {
  const SkewBrace& a = c.a;
  const int nh = h.order();
  std::vector<std::vector<int>> out;
  for_each_map(nh, a.order(), budget, "z1N maps", [&](const std::vector<int>& th) {
    for (int p = 0; p < nh; ++p)
      for (int q = 0; q < nh; ++q) {
        const int m = h.circ(p, q);
        const int want = reading == Z1Reading::Standard
                             ? a.plus(c.chi.sigma[q](th[p]), th[q])
                             : c.chi.sigma[q](a.plus(th[p], th[q]));
        if (th[m] != want) return;
        const int s = h.plus(p, q);
        if (c.chi.nu[s](th[s]) != a.plus(c.chi.mu[q](c.chi.nu[p](th[p])), c.chi.nu[q](th[q])))
          return;
      }
    out.push_back(th);
  });
  return out;
}

CohomologyGroup::CohomologyGroup(SkewBrace a, std::vector<CocyclePair> z2,
                                 std::vector<CocyclePair> b2)
    : a_(std::move(a)), z2_(std::move(z2)), b2_(std::move(b2)) {
  std::sort(z2_.begin(), z2_.end());
  std::sort(b2_.begin(), b2_.end());
  class_of_z2_.assign(z2_.size(), -1);
  auto z2_index = [&](const CocyclePair& x) {
    auto it = std::lower_bound(z2_.begin(), z2_.end(), x);
    if (it == z2_.end() || *it != x) fail("NotACocycle");
    return static_cast<int>(it - z2_.begin());
  };
  // z2_ is sorted, so the first unclassified element is its coset's least.
  for (std::size_t k = 0; k < z2_.size(); ++k) {
    if (class_of_z2_[k] >= 0) continue;
    const int cls = static_cast<int>(reps_.size());
    reps_.push_back(z2_[k]);
    for (const auto& b : b2_) class_of_z2_[z2_index(pair_add(a_, z2_[k], b))] = cls;
  }
}

int CohomologyGroup::class_of(const CocyclePair& x) const {
  auto it = std::lower_bound(z2_.begin(), z2_.end(), x);
  if (it == z2_.end() || *it != x) fail("NotACocycle");
  return class_of_z2_[it - z2_.begin()];
}

int CohomologyGroup::add(int x, int y) const { return class_of(pair_add(a_, reps_[x], reps_[y])); }

int CohomologyGroup::neg(int x) const { return class_of(pair_neg(a_, reps_[x])); }

CohomologyGroup h2N(const SkewBrace& h, const Coefficients& c, Z2Options opts,
                    const Budget& budget) {
  auto z2 = z2N(h, c, opts, budget);
  auto b2 = b2N(h, c, budget);
  const std::set<CocyclePair> zs(z2.begin(), z2.end());
  for (const auto& b : b2)
    if (!zs.count(b)) fail("CoboundaryNotCocycle");
  const std::set<CocyclePair> bs(b2.begin(), b2.end());
  for (const auto& x : b2)
    for (const auto& y : b2)
      if (!bs.count(pair_add(c.a, x, y))) fail("CoboundariesNotClosed");
  for (const auto& x : z2)
    for (const auto& y : z2)
      if (!zs.count(pair_add(c.a, x, y))) fail("CocyclesNotClosed");
  return CohomologyGroup(c.a, std::move(z2), std::move(b2));
}

CocyclePair embed_pair(const Coefficients& c, const CocyclePair& x) {
  CocyclePair r = x;
  for (auto* m : {&r.g, &r.f})
    for (auto& row : *m)
      for (int& v : row) v = c.embed[v];
  return r;
}

Triplet h2_act(const SkewBrace& h, const SkewBrace& i, const Triplet& t, const CocyclePair& x) {
  const std::vector<int> ann = annihilator(i);
  const int nh = h.order();
  Triplet r = t;
  for (int p = 0; p < nh; ++p)
    for (int q = 0; q < nh; ++q) {
      for (int v : {x.g[p][q], x.f[p][q]})
        if (!std::binary_search(ann.begin(), ann.end(), v))
          fail("ValuesNotInAnnihilator", {p, q, v});
      r.beta[p][q] = i.plus(x.g[p][q], t.beta[p][q]);
      r.tau[p][q] = i.plus(x.f[p][q], t.tau[p][q]);
    }
  return r;
}

BijectionReport ext_bijection_check(const SkewBrace& h, const SkewBrace& i, const ActionTriple& chi,
                                    const Budget& budget) {
  const Coefficients c = coefficients(i, chi);
  BijectionReport r;
  const ExtClassification ext = ext_classes(h, i, budget);
  for (const auto& bucket : ext.buckets)
    if (couplings_related(i, bucket.rep, chi)) r.ext_classes = static_cast<int>(bucket.classes.size());
  const auto triplets = z2_alpha(h, i, chi, budget);
  r.triplet_classes = static_cast<int>(triplet_classes(h, i, triplets).size());
  r.h2_order = static_cast<int>(h2N(h, c, {}, budget).order());
  r.h2_order_plain = static_cast<int>(h2N(h, c, {false}, budget).order());
  return r;
}

FreeTransitiveReport verify_free_transitive(const SkewBrace& h, const SkewBrace& i,
                                            const ActionTriple& alpha, const Budget& budget) {
  FreeTransitiveReport r;
  r.trivial_i = i.is_trivial();
  const auto triplets = z2_alpha(h, i, alpha, budget);
  const auto classes = triplet_classes(h, i, triplets);
  r.classes = static_cast<int>(classes.size());
  if (classes.empty()) return r;
  const ActionTriple& chi = triplets[classes[0][0]].chi;
  const Coefficients ann = annihilator_coefficients(i, chi);
  const CohomologyGroup g = h2N(h, ann, {}, budget);
  r.group_order = static_cast<int>(g.order());

  auto class_index = [&](const Triplet& t) {
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (triplets_equivalent(h, i, triplets[classes[k][0]], t)) return static_cast<int>(k);
    fail("ActedTripletOutsideExt", {});
  };
  // act[x][k]: class of x · [E_k].
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(classes.size()));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const Triplet& rep = triplets[classes[k][0]];
      const Triplet moved = h2_act(h, i, rep, embed_pair(ann, g.reps()[x]));
      if (auto v = triplet_violation(h, i, moved)) throw AxiomError(*v);
      act[x][k] = class_index(moved);
      // A second representative of x must land in the same class.
      if (!g.b2().empty()) {
        const CocyclePair other = pair_add(ann.a, g.reps()[x], g.b2().back());
        const Triplet moved2 = h2_act(h, i, rep, embed_pair(ann, other));
        if (!triplets_equivalent(h, i, moved, moved2)) r.well_defined = false;
      }
      if (x != 0 && act[x][k] == static_cast<int>(k)) r.free = false;
    }
  std::vector<int> orbit(classes.size(), -1);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (orbit[k] >= 0) continue;
    for (std::size_t x = 0; x < g.order(); ++x) orbit[act[x][k]] = r.orbits;
    ++r.orbits;
  }
  if (r.trivial_i) r.centre_h2_order = static_cast<int>(h2N(h, centre_coefficients(i, chi), {}, budget).order());
  return r;
}

}  // namespace braceforge
