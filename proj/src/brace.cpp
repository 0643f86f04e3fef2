#include "braceforge/brace.hpp"

#include <algorithm>

namespace braceforge {

std::optional<Violation> brace_violation(const FiniteGroup& add, const FiniteGroup& circ) {
  const int n = add.order();
  if (circ.order() != n) return Violation{"OrderMismatch", {n, circ.order()}, {}};
  for (int a = 0; a < n; ++a) {
    const int neg_a = add.inv(a);
    for (int b = 0; b < n; ++b) {
      const int ab = circ.op(a, b);
      const int ab_minus_a = add.op(ab, neg_a);
      for (int c = 0; c < n; ++c) {
        if (circ.op(a, add.op(b, c)) != add.op(ab_minus_a, circ.op(a, c)))
          return Violation{"BraceAxiomFailed", {a, b, c}, {}};
      }
    }
  }
  return std::nullopt;
}

SkewBrace SkewBrace::from_groups(FiniteGroup add, FiniteGroup circ) {
  if (auto v = brace_violation(add, circ)) throw AxiomError(*v);
  SkewBrace e;
  e.add_ = std::move(add);
  e.circ_ = std::move(circ);
  return e;
}

SkewBrace SkewBrace::from_tables(const Table& add, const Table& circ) {
  return from_groups(FiniteGroup::from_table(add), FiniteGroup::from_table(circ));
}

SkewBrace validate_brace(const Table& add, const Table& circ) {
  return SkewBrace::from_tables(add, circ);
}

Perm lambda(const SkewBrace& e, int a) {
  std::vector<int> m(e.order());
  for (int b = 0; b < e.order(); ++b) m[b] = e.plus(e.neg(a), e.circ(a, b));
  return Perm(std::move(m));
}

bool lambda_is_hom(const SkewBrace& e) {
  const int n = e.order();
  std::vector<Perm> lam;
  for (int a = 0; a < n; ++a) lam.push_back(lambda(e, a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c)
        if (lam[a](e.plus(b, c)) != e.plus(lam[a](b), lam[a](c))) return false;
      if (lam[e.circ(a, b)] != lam[a] * lam[b]) return false;
    }
  return true;
}

bool identities_check(const SkewBrace& e) {
  const int n = e.order();
  for (int a = 0; a < n; ++a) {
    const Perm lam = lambda(e, a);
    const Perm lam_inv = lam.inverse();
    for (int b = 0; b < n; ++b) {
      if (e.plus(a, b) != e.circ(a, lam_inv(b))) return false;
      if (e.circ(a, b) != e.plus(a, lam(b))) return false;
    }
  }
  return true;
}

std::vector<int> socle(const SkewBrace& e) {
  std::vector<int> out;
  for (int a : centre(e.additive()))
    if (lambda(e, a).is_identity()) out.push_back(a);
  return out;
}

std::vector<int> annihilator(const SkewBrace& e) {
  const std::vector<int> z = centre(e.multiplicative());
  std::vector<int> out;
  for (int a : socle(e))
    if (std::binary_search(z.begin(), z.end(), a)) out.push_back(a);
  return out;
}

namespace {

void require_subbrace(const SkewBrace& e, const std::vector<int>& s) {
  if (!is_subgroup(e.additive(), s) || !is_subgroup(e.multiplicative(), s))
    fail("NotASubbrace");
}

}  // namespace

bool is_left_ideal(const SkewBrace& e, const std::vector<int>& s) {
  require_subbrace(e, s);
  std::vector<char> in(e.order(), 0);
  for (int x : s) in[x] = 1;
  for (int a = 0; a < e.order(); ++a) {
    const Perm lam = lambda(e, a);
    for (int y : s)
      if (!in[lam(y)]) return false;
  }
  return true;
}

bool is_ideal(const SkewBrace& e, const std::vector<int>& s) {
  return is_left_ideal(e, s) && is_normal_subgroup(e.multiplicative(), s);
}

bool is_brace_hom(const SkewBrace& from, const SkewBrace& to, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != from.order()) return false;
  for (int x : map)
    if (x < 0 || x >= to.order()) return false;
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b) {
      if (map[from.plus(a, b)] != to.plus(map[a], map[b])) return false;
      if (map[from.circ(a, b)] != to.circ(map[a], map[b])) return false;
    }
  return true;
}

std::vector<int> kernel(const BraceHom& f) {
  std::vector<int> k;
  for (std::size_t x = 0; x < f.map.size(); ++x)
    if (f.map[x] == 0) k.push_back(static_cast<int>(x));
  return k;
}

PermGroup brace_automorphisms(const SkewBrace& e, int bound) {
  if (e.order() > bound) fail("OrderBoundExceeded", {e.order(), bound}, "brace automorphism search");
  std::vector<Perm> auts;
  for_each_isomorphism({&e.additive(), &e.multiplicative()}, {&e.additive(), &e.multiplicative()},
                       [&](const Perm& p) {
                         auts.push_back(p);
                         return true;
                       });
  return PermGroup(e.order(), std::move(auts));
}

std::optional<Perm> find_brace_isomorphism(const SkewBrace& a, const SkewBrace& b) {
  std::optional<Perm> found;
  for_each_isomorphism({&a.additive(), &a.multiplicative()}, {&b.additive(), &b.multiplicative()},
                       [&](const Perm& p) {
                         found = p;
                         return false;
                       });
  return found;
}

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace::from_groups(g, g); }

SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b) {
  return SkewBrace::from_groups(direct_product(a.additive(), b.additive()),
                                direct_product(a.multiplicative(), b.multiplicative()));
}

SubBrace sub_brace(const SkewBrace& e, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  require_subbrace(e, s);
  SubBrace out;
  out.embed = s;
  out.restrict.assign(e.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) out.restrict[s[i]] = static_cast<int>(i);
  const int k = static_cast<int>(s.size());
  Table add(k, std::vector<int>(k)), circ(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      add[i][j] = out.restrict[e.plus(s[i], s[j])];
      circ[i][j] = out.restrict[e.circ(s[i], s[j])];
    }
  out.brace = SkewBrace::from_tables(add, circ);
  return out;
}

}  // namespace braceforge
