#pragma once

#include <optional>
#include <vector>

#include "braceforge/group.hpp"

namespace braceforge {

/// Left skew brace (E, +, ∘) on 0..n-1 with shared identity 0 and
///   a∘(b + c) = a∘b − a + a∘c.
class SkewBrace {
 public:
  SkewBrace() = default;

  /// Full n³ check of the brace law; throws AxiomError "BraceAxiomFailed"
  /// with the witness triple.
  static SkewBrace from_groups(FiniteGroup add, FiniteGroup circ);
  static SkewBrace from_tables(const Table& add, const Table& circ);

  int order() const { return add_.order(); }
  const FiniteGroup& additive() const { return add_; }
  const FiniteGroup& multiplicative() const { return circ_; }

  int plus(int a, int b) const { return add_.op(a, b); }
  int neg(int a) const { return add_.inv(a); }
  int minus(int a, int b) const { return add_.op(a, add_.inv(b)); }
  int circ(int a, int b) const { return circ_.op(a, b); }
  int cinv(int a) const { return circ_.inv(a); }

  bool is_trivial() const { return add_ == circ_; }

  bool operator==(const SkewBrace&) const = default;

 private:
  FiniteGroup add_;
  FiniteGroup circ_;
};

/// First failure of the brace law, if any (both tables already groups).
std::optional<Violation> brace_violation(const FiniteGroup& add, const FiniteGroup& circ);

/// validate_brace: both tables must be groups with identity 0.
SkewBrace validate_brace(const Table& add, const Table& circ);

/// λ_a(b) = −a + (a∘b).
Perm lambda(const SkewBrace& e, int a);

/// λ is a homomorphism (E,∘) → Aut(E,+): each λ_a preserves + and
/// λ_{a∘b} = λ_a λ_b.
bool lambda_is_hom(const SkewBrace& e);

/// a + b = a ∘ λ_a⁻¹(b) and a ∘ b = a + λ_a(b) for all pairs.
bool identities_check(const SkewBrace& e);

std::vector<int> socle(const SkewBrace& e);
std::vector<int> annihilator(const SkewBrace& e);

/// Throws AxiomError "NotASubbrace" if `s` is not closed under both operations.
bool is_left_ideal(const SkewBrace& e, const std::vector<int>& s);
bool is_ideal(const SkewBrace& e, const std::vector<int>& s);

/// Map between braces that respects both operations.
struct BraceHom {
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  bool operator==(const BraceHom&) const = default;
};

bool is_brace_hom(const SkewBrace& from, const SkewBrace& to, const std::vector<int>& map);
std::vector<int> kernel(const BraceHom& f);

/// Autb(E): permutations preserving both tables. Bounded like
/// automorphism_group.
PermGroup brace_automorphisms(const SkewBrace& e, int bound = kDefaultOrderBound);

std::optional<Perm> find_brace_isomorphism(const SkewBrace& a, const SkewBrace& b);

/// Trivial brace: ∘ equals +.
SkewBrace trivial_brace(const FiniteGroup& g);

/// Componentwise product; (a,b) ↦ a·|B| + b.
SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b);

/// The sub-brace on a subset closed under both operations, relabelled
/// 0..k-1 in increasing order of the original indices.
struct SubBrace {
  SkewBrace brace;
  std::vector<int> embed;     // sub index -> ambient index
  std::vector<int> restrict;  // ambient index -> sub index or -1
};
SubBrace sub_brace(const SkewBrace& e, const std::vector<int>& subset);

}  // namespace braceforge
