#pragma once

#include <string>
#include <vector>

#include "braceforge/action.hpp"
#include "braceforge/brace.hpp"

namespace braceforge {

// Fixture braces and triples. Products use the pair encoding
// (h, y) ↦ h·|I| + y throughout.

/// Trivial brace on ℤ_n.
SkewBrace cyclic_trivial(int n);

/// Additive ℤ_2×ℤ_2 (x = 2·x1 + x2) with
/// (x1,x2) ∘ (y1,y2) = (x1 + y1 + x2·y2, x2 + y2); (H,∘) ≅ ℤ_4.
SkewBrace brace_klein_z4();
/// Additive ℤ_4 with a ∘ b = a + b + 2ab; (I,∘) ≅ ℤ_2×ℤ_2.
SkewBrace brace_z4_klein();
/// (n,m) + (s,t) = (n + 2^m s, m + t), (n,m) ∘ (s,t) = (2^t n + 2^m s, m + t)
/// on ℤ_3×ℤ_2, (n,m) ↦ 2n + m. (I,+) ≅ S_3, (I,∘) ≅ ℤ_6.
SkewBrace brace_s3_z6();
/// Additive ℤ_8 with a ∘ b = a + (1 + 2a)·b; |Soc| = 2, (H,∘) ≅ ℤ_4×ℤ_2.
SkewBrace brace_z8_soc2();

/// Triple with every ν_h = μ_h = σ_h given by `f(h)`.
ActionTriple uniform_triple(const std::vector<Perm>& f);
/// Negation on ℤ_m.
Perm negation(int m);

/// Trivial braces on the groups of order ≤ 8, one per isomorphism type.
std::vector<std::pair<std::string, SkewBrace>> small_trivial_braces();

/// A fixture: two braces, a triple, and the product when it exists.
struct SplitFixture {
  std::string name;
  SkewBrace h;
  SkewBrace i;
  ActionTriple triple;
};

/// Finite analog of Example 1: trivial ℤ_{2k} acting on trivial ℤ_m by
/// negation through the parity of h.
SplitFixture example1(int k, int m);
/// Trivial D_{2n} (order 4n, a^i b^j ↦ i + 2n·j) on trivial ℤ_p, every
/// generator acting by negation.
SplitFixture example2(int n, int p);
/// Trivial D_n (order 2n, n odd) on trivial ℤ_p; a acts trivially, b by negation.
SplitFixture example2_odd(int n, int p);
/// Trivial ℤ_8 on brace_s3_z6 with μ = id, ν_a = σ_a = (n,m) ↦ (2n,m).
SplitFixture example3();
/// brace_klein_z4 on brace_z4_klein, μ = id, ν_{g^k} = σ_{g^k} = (−1)^k for g = (0,1).
SplitFixture example4();
/// brace_z8_soc2 on brace_z4_klein with the triple listed as (i) or (ii).
SplitFixture example5(int which);

/// Cell-by-cell comparison of a product table against a closed form.
struct FormulaCheck {
  std::string formula;
  int cells = 0;
  int mismatches = 0;
  std::vector<std::vector<int>> first_mismatches;  // (x, y, got, want), up to 5
  bool ok() const { return mismatches == 0; }
};

/// Example 2 displayed formulas, first case.
FormulaCheck example2_add_formula(int n, int p, const SkewBrace& product);
FormulaCheck example2_circ_formula(int n, int p, const SkewBrace& product);
/// Example 3: y1 ∘ ι^k(y2) for (a^k, y1) ∘ (a^l, y2), ι the ∘-inversion.
FormulaCheck example3_circ_formula(const SkewBrace& product);
/// Example 4 circle in ∘-power coordinates. `printed` compares against
/// l + (−1)^k m + (−1)^n lm; otherwise l + (−1)^k m + 2lm.
FormulaCheck example4_circ_formula(const SkewBrace& product, bool printed);

}  // namespace braceforge
