#include "braceforge/catalog.hpp"

#include <functional>

#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

SkewBrace from_ops(int n, const std::function<int(int, int)>& add,
                   const std::function<int(int, int)>& circ) {
  Table a(n, std::vector<int>(n)), c(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a[x][y] = add(x, y);
      c[x][y] = circ(x, y);
    }
  return SkewBrace::from_tables(a, c);
}

Perm perm_from(int n, const std::function<int(int)>& f) {
  std::vector<int> m(n);
  for (int x = 0; x < n; ++x) m[x] = f(x);
  return Perm(std::move(m));
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InputError("ParamOutOfRange: " + what);
}

FormulaCheck named(std::string formula) {
  FormulaCheck c;
  c.formula = std::move(formula);
  return c;
}

void record(FormulaCheck& c, int x, int y, int got, int want) {
  ++c.cells;
  if (got == want) return;
  ++c.mismatches;
  if (c.first_mismatches.size() < 5) c.first_mismatches.push_back({x, y, got, want});
}

}  // namespace

SkewBrace cyclic_trivial(int n) { return trivial_brace(cyclic_group(n)); }

SkewBrace brace_klein_z4() {
  return from_ops(
      4, [](int x, int y) { return x ^ y; },
      [](int x, int y) {
        const int x1 = x >> 1, x2 = x & 1, y1 = y >> 1, y2 = y & 1;
        return 2 * ((x1 + y1 + x2 * y2) % 2) + (x2 + y2) % 2;
      });
}

SkewBrace brace_z4_klein() {
  return from_ops(
      4, [](int a, int b) { return (a + b) % 4; },
      [](int a, int b) { return (a + b + 2 * a * b) % 4; });
}

SkewBrace brace_s3_z6() {
  auto pow2 = [](int e) { return e ? 2 : 1; };
  return from_ops(
      6,
      [&](int x, int y) {
        const int n = x / 2, m = x % 2, s = y / 2, t = y % 2;
        return 2 * mod(n + pow2(m) * s, 3) + (m + t) % 2;
      },
      [&](int x, int y) {
        const int n = x / 2, m = x % 2, s = y / 2, t = y % 2;
        return 2 * mod(pow2(t) * n + pow2(m) * s, 3) + (m + t) % 2;
      });
}

SkewBrace brace_z8_soc2() {
  return from_ops(
      8, [](int a, int b) { return (a + b) % 8; },
      [](int a, int b) { return (a + (1 + 2 * a) * b) % 8; });
}

ActionTriple uniform_triple(const std::vector<Perm>& f) { return ActionTriple{f, f, f}; }

Perm negation(int m) {
  return perm_from(m, [m](int x) { return mod(-x, m); });
}

std::vector<std::pair<std::string, SkewBrace>> small_trivial_braces() {
  std::vector<std::pair<std::string, SkewBrace>> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back("Z" + std::to_string(n), cyclic_trivial(n));
  const FiniteGroup z2 = cyclic_group(2);
  out.emplace_back("Z2xZ2", trivial_brace(direct_product(z2, z2)));
  out.emplace_back("S3", trivial_brace(dihedral_group(3)));
  out.emplace_back("Z4xZ2", trivial_brace(direct_product(cyclic_group(4), z2)));
  out.emplace_back("Z2^3", trivial_brace(direct_product(direct_product(z2, z2), z2)));
  out.emplace_back("D4", trivial_brace(dihedral_group(4)));
  out.emplace_back("Q8", trivial_brace(quaternion_group()));
  return out;
}

SplitFixture example1(int k, int m) {
  require(k >= 1 && m >= 2, "example 1 needs k >= 1, m >= 2");
  SplitFixture f{"example1_k" + std::to_string(k) + "_m" + std::to_string(m),
                 cyclic_trivial(2 * k), cyclic_trivial(m), {}};
  std::vector<Perm> act;
  for (int l = 0; l < 2 * k; ++l) act.push_back(l % 2 ? negation(m) : Perm::identity(m));
  f.triple = uniform_triple(act);
  return f;
}

SplitFixture example2(int n, int p) {
  require(n >= 1 && p >= 2, "example 2 needs n >= 1, p >= 2");
  const int m = 2 * n;
  SplitFixture f{"example2_n" + std::to_string(n) + "_p" + std::to_string(p),
                 trivial_brace(dihedral_group(m)), cyclic_trivial(p), {}};
  std::vector<Perm> act;
  for (int x = 0; x < 2 * m; ++x) {
    const int i = x % m, j = x / m;
    act.push_back((i + j) % 2 ? negation(p) : Perm::identity(p));
  }
  f.triple = uniform_triple(act);
  return f;
}

SplitFixture example2_odd(int n, int p) {
  require(n >= 3 && n % 2 == 1 && p >= 2, "example 2 (odd case) needs odd n >= 3, p >= 2");
  SplitFixture f{"example2_odd_n" + std::to_string(n) + "_p" + std::to_string(p),
                 trivial_brace(dihedral_group(n)), cyclic_trivial(p), {}};
  std::vector<Perm> act;
  for (int x = 0; x < 2 * n; ++x) act.push_back(x / n ? negation(p) : Perm::identity(p));
  f.triple = uniform_triple(act);
  return f;
}

SplitFixture example3() {
  SplitFixture f{"example3", cyclic_trivial(8), brace_s3_z6(), {}};
  const Perm iota = perm_from(6, [](int x) { return 2 * mod(-(x / 2), 3) + x % 2; });
  for (int k = 0; k < 8; ++k) {
    const Perm p = k % 2 ? iota : Perm::identity(6);
    f.triple.nu.push_back(p);
    f.triple.mu.push_back(Perm::identity(6));
    f.triple.sigma.push_back(p);
  }
  return f;
}

SplitFixture example4() {
  SplitFixture f{"example4", brace_klein_z4(), brace_z4_klein(), {}};
  f.triple.nu.assign(4, Perm());
  // Powers of g = (0,1) (index 1) under ∘.
  int x = 0;
  for (int k = 0; k < 4; ++k) {
    f.triple.nu[x] = k % 2 ? negation(4) : Perm::identity(4);
    x = f.h.circ(x, 1);
  }
  f.triple.sigma = f.triple.nu;
  f.triple.mu.assign(4, Perm::identity(4));
  return f;
}

SplitFixture example5(int which) {
  require(which == 1 || which == 2, "example 5 lists triples (i) and (ii)");
  SplitFixture f{which == 1 ? "example5_i" : "example5_ii", brace_z8_soc2(), brace_z4_klein(), {}};
  const Perm id = Perm::identity(4);
  const Perm neg = negation(4);
  const Perm swap23 = Perm({0, 1, 3, 2});
  const std::vector<int> gens = {1, 2};
  const std::vector<Perm> nu_img = which == 1 ? std::vector<Perm>{neg, id} : std::vector<Perm>{neg, neg};
  const std::vector<Perm> sigma_img =
      which == 1 ? std::vector<Perm>{id, id} : std::vector<Perm>{id, swap23};
  f.triple.nu = extend_from_generators(f.h.multiplicative(), gens, nu_img, false);
  f.triple.sigma = extend_from_generators(f.h.multiplicative(), gens, sigma_img, true);
  f.triple.mu.assign(8, id);
  return f;
}

FormulaCheck example2_add_formula(int n, int p, const SkewBrace& product) {
  const FiniteGroup d = dihedral_group(2 * n);
  const int m = 2 * n;
  FormulaCheck c = named("(a^i b^j a^m b^n, y2 + (-1)^(m+n) y1)");
  for (int x = 0; x < product.order(); ++x)
    for (int y = 0; y < product.order(); ++y) {
      const int h1 = x / p, y1 = x % p, h2 = y / p, y2 = y % p;
      const int sign = (h2 % m + h2 / m) % 2 ? -1 : 1;
      record(c, x, y, product.plus(x, y), d.op(h1, h2) * p + mod(y2 + sign * y1, p));
    }
  return c;
}

FormulaCheck example2_circ_formula(int n, int p, const SkewBrace& product) {
  const FiniteGroup d = dihedral_group(2 * n);
  const int m = 2 * n;
  FormulaCheck c = named("(a^i b^j a^m b^n, y1 + (-1)^(i+j) y2)");
  for (int x = 0; x < product.order(); ++x)
    for (int y = 0; y < product.order(); ++y) {
      const int h1 = x / p, y1 = x % p, h2 = y / p, y2 = y % p;
      const int sign = (h1 % m + h1 / m) % 2 ? -1 : 1;
      record(c, x, y, product.circ(x, y), d.op(h1, h2) * p + mod(y1 + sign * y2, p));
    }
  return c;
}

FormulaCheck example3_circ_formula(const SkewBrace& product) {
  const SkewBrace i = brace_s3_z6();
  FormulaCheck c = named("(a^(k+l), y1 o iota^k(y2))");
  for (int x = 0; x < product.order(); ++x)
    for (int y = 0; y < product.order(); ++y) {
      const int k = x / 6, l = y / 6, y1 = x % 6, y2 = y % 6;
      const int t = k % 2 ? i.cinv(y2) : y2;
      record(c, x, y, product.circ(x, y), ((k + l) % 8) * 6 + i.circ(y1, t));
    }
  return c;
}

FormulaCheck example4_circ_formula(const SkewBrace& product, bool printed) {
  const SkewBrace h = brace_klein_z4();
  std::vector<int> power(4), exponent(4);
  int g = 0;
  for (int k = 0; k < 4; ++k) {
    power[k] = g;
    exponent[g] = k;
    g = h.circ(g, 1);
  }
  FormulaCheck c = named(printed ? "((0,1)^(k+n), l + (-1)^k m + (-1)^n lm)"
                         : "((0,1)^(k+n), l + (-1)^k m + 2lm)");
  for (int x = 0; x < product.order(); ++x)
    for (int y = 0; y < product.order(); ++y) {
      const int k = exponent[x / 4], n = exponent[y / 4], l = x % 4, m = y % 4;
      const int sk = k % 2 ? -1 : 1, sn = n % 2 ? -1 : 1;
      const int second = printed ? l + sk * m + sn * l * m : l + sk * m + 2 * l * m;
      record(c, x, y, product.circ(x, y), power[(k + n) % 4] * 4 + mod(second, 4));
    }
  return c;
}

}  // namespace braceforge
