#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braceforge/action.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/budget.hpp"

namespace braceforge {

/// 0 → I → E → H → 0 with inj: I → E and proj: E → H brace homomorphisms,
/// inj injective, proj surjective, im(inj) = ker(proj).
struct Extension {
  SkewBrace e;
  SkewBrace h;
  SkewBrace i;
  std::vector<int> inj;
  std::vector<int> proj;
  /// E-index ↦ I-index for elements of im(inj), −1 elsewhere.
  std::vector<int> to_i;
};

/// validate_extension. Throws AxiomError with kinds NotHom(inj|proj),
/// NotInjective, NotSurjective, NotExact, NotIdeal.
Extension make_extension(SkewBrace e, SkewBrace h, SkewBrace i, std::vector<int> inj,
                         std::vector<int> proj);

/// st-section: proj(s(h)) = h and s(0) = 0.
using Section = std::vector<int>;

bool is_section(const Extension& ext, const Section& s);
/// Least E-index in each fibre.
Section canonical_section(const Extension& ext);
/// ∏_{h≠0} |I|, saturating.
std::uint64_t section_count(const Extension& ext);
/// The section with mixed-radix index `index` over the sorted fibres.
Section section_at(const Extension& ext, std::uint64_t index);

/// Lazy iteration over all sections in index order.
class SectionRange {
 public:
  explicit SectionRange(const Extension& ext);
  /// Next section or nullopt when exhausted.
  std::optional<Section> next();

 private:
  std::vector<std::vector<int>> fibres_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

/// x = s(h) ∘ y with h = proj(x); returns y as an I-index.
int fibre_coordinate(const Extension& ext, const Section& s, int x);

/// ν_h(y) = −s(h) + s(h)∘y, μ_h(y) = −s(h) + y + s(h),
/// σ_h(y) = s(h)⁻¹ ∘ y ∘ s(h).
ActionTriple extract_action(const Extension& ext, const Section& s);

/// β(h1,h2) = −s(h1+h2) + s(h1) + s(h2), τ(h1,h2) = s(h1∘h2)⁻¹ ∘ s(h1) ∘ s(h2).
std::pair<Cochain, Cochain> extract_cocycle(const Extension& ext, const Section& s);

Triplet extract_triplet(const Extension& ext, const Section& s);

// Identities relating an action to its cocycles. Each returns the first
// failing instance. With Form::Derived:
//   ν_{h1∘h2} = ν_{h1} ν_{h2} λ⁻¹_{τ(h1,h2)}
//   μ_{h1+h2} = i⁺_{β(h1,h2)} μ_{h2} μ_{h1}
//   σ_{h1∘h2} = i∘_{τ(h1,h2)} σ_{h2} σ_{h1}
// With Form::AsPrinted the conjugating elements are −β and τ⁻¹.
std::optional<Violation> action_identity_violation(const SkewBrace& h, const SkewBrace& i,
                                                   const Triplet& t, Form form = Form::Derived);

// Derived:   β(h1,h2+h3) + β(h2,h3) = β(h1+h2,h3) + μ_{h3}(β(h1,h2))
//            τ(h1,h2∘h3) ∘ τ(h2,h3) = τ(h1∘h2,h3) ∘ σ_{h3}(τ(h1,h2))
// AsPrinted: the right-hand sides in reversed operand order.
std::optional<Violation> cocycle_violation(const SkewBrace& h, const SkewBrace& i,
                                           const Triplet& t, Form form = Form::Derived);

/// The brace law of E(χ,β,τ) in cocycle coordinates, swept over all
/// (h1,h2,h3,y1,y2,y3). Derived right-hand side:
///   β(h1∘h2−h1, h1∘h3) + μ_{h1∘h3}(β(h1∘h2,−h1) + μ_{−h1}(P − Q) − β(h1,−h1)) + R
/// AsPrinted uses β(h1∘h3−h1, h1∘h3) and μ_{−h1}(P) − Q.
std::optional<Violation> parent_relation_violation(const SkewBrace& h, const SkewBrace& i,
                                                   const Triplet& t, Form form = Form::Derived);

/// Normalisation, automorphism membership, and the three derived checks.
std::optional<Violation> triplet_violation(const SkewBrace& h, const SkewBrace& i,
                                           const Triplet& t);

/// Quotient data for comparing actions: N (normal closure of the λ_y in
/// Aut(I,+)), Inn(I,+), Inn(I,∘).
struct CouplingContext {
  PermGroup aut_add;
  PermGroup aut_circ;
  PermGroup n_group;
  PermGroup inn_add;
  PermGroup inn_circ;
  std::vector<Perm> lambdas;
};

CouplingContext coupling_context(const SkewBrace& i);

/// Section-independent class of an extension: a representative action and
/// the quotient subgroups it is read modulo.
struct Coupling {
  ActionTriple rep;
  PermGroup n_group;
  PermGroup inn_add;
  PermGroup inn_circ;
};

/// Componentwise comparison modulo N, Inn(I,+), Inn(I,∘).
bool same_coupling_classes(const Coupling& a, const ActionTriple& b);

/// Coupling from the canonical section; asserts that `samples` further
/// sections give ≈-related actions (throws AxiomError otherwise).
Coupling coupling_of(const Extension& ext, int samples = 4);

/// Θ_h = { y : ν′_h = ν_h λ_y, μ′_h = i⁺_{ν_h(−y)} μ_h, σ′_h = i∘_{y⁻¹} σ_h }
/// for chi1 = (ν,μ,σ), chi2 = (ν′,μ′,σ′). Returns nullopt unless every Θ_h is
/// non-empty and 0 ∈ Θ_0.
std::optional<std::vector<std::vector<int>>> couplings_related(const SkewBrace& i,
                                                               const ActionTriple& chi1,
                                                               const ActionTriple& chi2);

/// θ with χ2 ≈ χ1 by θ and
///   ν1_{h1+h2}(−θ(h1+h2)) + β1(h1,h2) + μ1_{h2}(ν1_{h1}(θ(h1))) + ν1_{h2}(θ(h2)) = β2(h1,h2)
///   θ(h1∘h2)⁻¹ ∘ τ1(h1,h2) ∘ σ1_{h2}(θ(h1)) ∘ θ(h2) = τ2(h1,h2).
std::optional<std::vector<int>> triplets_equivalent(const SkewBrace& h, const SkewBrace& i,
                                                    const Triplet& t1, const Triplet& t2);

/// E(χ,β,τ) on H×I, (h,y) ↦ h·|I| + y:
///   (h1,y1) + (h2,y2) = (h1+h2, ν⁻¹_{h1+h2}(β(h1,h2) + μ_{h2}(ν_{h1}(y1)) + ν_{h2}(y2)))
///   (h1,y1) ∘ (h2,y2) = (h1∘h2, τ(h1,h2) ∘ σ_{h2}(y1) ∘ y2)
/// with i(y) = (0,y) and π(h,y) = h. Validates the result.
Extension extension_from_triplet(const SkewBrace& h, const SkewBrace& i, const Triplet& t);

/// Brace isomorphism φ: E1 → E2 with φ∘i1 = i2 and π2∘φ = π1, searched as
/// φ(s1(h) ∘ y) = s2(h) ∘ θ(h) ∘ y over θ: H → I with θ(0) = 0.
std::optional<BraceHom> extensions_equivalent(const Extension& e1, const Extension& e2);

/// Z²_α(H,I): every triplet whose action is ≈-related to `alpha` and which
/// satisfies the cocycle identities and the parent relation. Ordered.
std::vector<Triplet> z2_alpha(const SkewBrace& h, const SkewBrace& i, const ActionTriple& alpha,
                              const Budget& budget = Budget::from_env());

/// Partition of a list into ∼-classes (indices into `triplets`).
std::vector<std::vector<int>> triplet_classes(const SkewBrace& h, const SkewBrace& i,
                                              const std::vector<Triplet>& triplets);

/// Every labelled extension structure on the carrier H×I with the canonical
/// inclusion and projection. Found by backtracking over group tables,
/// independently of any cocycle formulas.
std::vector<Extension> enumerate_extensions(const SkewBrace& h, const SkewBrace& i,
                                            const Budget& budget = Budget::from_env());

struct CouplingBucket {
  ActionTriple rep;
  std::vector<int> classes;  // indices into ExtClassification::classes
};

struct ExtClassification {
  std::vector<Extension> extensions;
  std::vector<std::vector<int>> classes;  // equivalence classes of extensions
  std::vector<CouplingBucket> buckets;    // classes grouped by coupling (≈)
};

/// Ext(H,I) = ⨆ Ext_α(H,I), computed from enumerate_extensions.
ExtClassification ext_classes(const SkewBrace& h, const SkewBrace& i,
                              const Budget& budget = Budget::from_env());

}  // namespace braceforge
