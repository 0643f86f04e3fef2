#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/action.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/budget.hpp"
#include "braceforge/extension.hpp"

namespace braceforge {

/// Abelian coefficients for §6-style cohomology: a trivial brace A on an
/// abelian group, the action of H restricted to A, and the embedding of A
/// into the brace I it came from.
struct Coefficients {
  SkewBrace a;
  ActionTriple chi;
  std::vector<int> embed;  // A-index -> I-index
};

/// I itself; I must be a trivial brace on an abelian group.
/// Throws InputError "NonAbelianCoefficients" otherwise.
Coefficients coefficients(const SkewBrace& i, const ActionTriple& chi);
/// Ann(I) with χ restricted to it. Throws AxiomError "ActionDoesNotPreserve"
/// when some ν_h, μ_h or σ_h moves Ann(I).
Coefficients annihilator_coefficients(const SkewBrace& i, const ActionTriple& chi);
/// Z(I,+) for a trivial brace I.
Coefficients centre_coefficients(const SkewBrace& i, const ActionTriple& chi);

struct CocyclePair {
  Cochain g;  // additive
  Cochain f;  // multiplicative

  auto operator<=>(const CocyclePair&) const = default;
};

CocyclePair pair_add(const SkewBrace& a, const CocyclePair& x, const CocyclePair& y);
CocyclePair pair_neg(const SkewBrace& a, const CocyclePair& x);
CocyclePair zero_pair(int h_order);

struct Z2Options {
  /// Also require the parent relation of (χ, g, f). Without it the set is
  /// the plain pair of cocycle conditions.
  bool compatible = true;
};

/// Pairs (g, f) of normalised cocycles for the fixed action, sorted.
std::vector<CocyclePair> z2N(const SkewBrace& h, const Coefficients& c, Z2Options opts = {},
                             const Budget& budget = Budget::from_env());

/// Coboundary of θ: A-valued map on H with θ(0) = 0.
///   g = −ν_{h1+h2}(θ(h1+h2)) + μ_{h2}(ν_{h1}(θ(h1))) + ν_{h2}(θ(h2))
///   f = −θ(h1∘h2) + σ_{h2}(θ(h1)) + θ(h2)
CocyclePair coboundary(const SkewBrace& h, const Coefficients& c, const std::vector<int>& theta);

/// Image of every θ under `coboundary`, sorted and deduplicated.
std::vector<CocyclePair> b2N(const SkewBrace& h, const Coefficients& c,
                             const Budget& budget = Budget::from_env());

enum class Z1Reading {
  /// θ(h1∘h2) = σ_{h2}(θ(h1)) + θ(h2)
  Standard,
  /// θ(h1∘h2) = σ_{h2}(θ(h1) + θ(h2))
  Alternative,
};

/// Derivations: maps θ with θ(0) = 0 satisfying the ∘-law above and
///   ν_{h1+h2}(θ(h1+h2)) = μ_{h2}(ν_{h1}(θ(h1))) + ν_{h2}(θ(h2)).
std::vector<std::vector<int>> z1N(const SkewBrace& h, const Coefficients& c,
                                  Z1Reading reading = Z1Reading::Standard,
                                  const Budget& budget = Budget::from_env());

/// Z²/B² with the lexicographically least element of each coset as its
/// representative. Classes are indexed by position in `reps`.
class CohomologyGroup {
 public:
  CohomologyGroup(SkewBrace a, std::vector<CocyclePair> z2, std::vector<CocyclePair> b2);

  std::size_t order() const { return reps_.size(); }
  const std::vector<CocyclePair>& reps() const { return reps_; }
  const std::vector<CocyclePair>& z2() const { return z2_; }
  const std::vector<CocyclePair>& b2() const { return b2_; }

  /// Class index of a cocycle pair; throws AxiomError "NotACocycle".
  int class_of(const CocyclePair& x) const;
  int add(int x, int y) const;
  int neg(int x) const;
  int zero() const { return 0; }

 private:
  SkewBrace a_;
  std::vector<CocyclePair> z2_;
  std::vector<CocyclePair> b2_;
  std::vector<CocyclePair> reps_;
  std::vector<int> class_of_z2_;
};

/// Computes Z², B² and the quotient, asserting B² ⊆ Z² and closure of both
/// under addition.
CohomologyGroup h2N(const SkewBrace& h, const Coefficients& c, Z2Options opts = {},
                    const Budget& budget = Budget::from_env());

/// (χ, β₁ + β, τ₁ + τ) for a pair valued in Ann(I) (given as I-indices).
/// Throws AxiomError "ValuesNotInAnnihilator".
Triplet h2_act(const SkewBrace& h, const SkewBrace& i, const Triplet& t, const CocyclePair& x);

/// Embeds an A-valued pair into I-indices.
CocyclePair embed_pair(const Coefficients& c, const CocyclePair& x);

struct BijectionReport {
  int ext_classes = 0;      // from exhaustive extension enumeration
  int triplet_classes = 0;  // from z2_alpha and ∼
  int h2_order = 0;         // from z2N / b2N
  int h2_order_plain = 0;   // z2N without the parent relation
  bool equal() const { return ext_classes == triplet_classes && ext_classes == h2_order; }
};

/// Ext_χ(H,I) counted three ways for abelian trivial I.
BijectionReport ext_bijection_check(const SkewBrace& h, const SkewBrace& i, const ActionTriple& chi,
                                    const Budget& budget = Budget::from_env());

struct FreeTransitiveReport {
  int classes = 0;          // |Ext_α(H,I)| via ∼-classes of Z²_α
  int group_order = 0;      // |H²_N(H, Ann(I))|
  int orbits = 0;
  bool free = true;
  bool well_defined = true;  // two representatives act alike
  bool trivial_i = false;
  std::optional<int> centre_h2_order;  // |H²_N(H, Z(I))| when I is trivial
  bool transitive() const { return orbits == 1; }
};

/// Acts with every class of H²_N(H, Ann(I)) on every class of Ext_α(H,I).
FreeTransitiveReport verify_free_transitive(const SkewBrace& h, const SkewBrace& i,
                                            const ActionTriple& alpha,
                                            const Budget& budget = Budget::from_env());

}  // namespace braceforge
