#pragma once

#include <optional>
#include <vector>

#include "braceforge/cohomology.hpp"
#include "braceforge/extension.hpp"
#include "json.hpp"

namespace braceforge {

/// (φ, θ) ∈ Autb(H) × Autb(I). Products compose componentwise,
/// (φ1,θ1)(φ2,θ2) = (φ1φ2, θ1θ2), and act on extensions from the right.
struct AutPair {
  Perm phi;
  Perm theta;

  AutPair operator*(const AutPair& o) const { return {phi * o.phi, theta * o.theta}; }
  auto operator<=>(const AutPair&) const = default;
};

/// E with injection i∘θ and projection φ⁻¹∘π. I must be a trivial brace.
Extension pair_act(const Extension& ext, const AutPair& c);

/// Pairs with ν_h = θ⁻¹ν_{φ(h)}θ, and the same for μ mod Inn(I,+) and σ mod
/// Inn(I,∘). Sorted; asserted to be a subgroup.
std::vector<AutPair> stabilizer_C(const SkewBrace& h, const SkewBrace& i, const ActionTriple& chi);

/// g^{(φ,θ)}(h1,h2) = θ⁻¹(g(φ h1, φ h2)), likewise f; on class indices of a
/// cohomology group with coefficients `c` (θ restricted to them).
int c_act_on_h2(const SkewBrace& h, const Coefficients& c, const CohomologyGroup& g,
                const AutPair& pair, int cls);

/// Brace automorphisms of E mapping im(inj) onto itself.
std::vector<Perm> autb_I(const Extension& ext);

/// γ ↦ (γ_H, γ_I) with γ_H(h) = π(γ(s(h))).
AutPair rho(const Extension& ext, const Perm& gamma);

/// ψ(λ)(s(h) ∘ y) = s(h) ∘ λ(h) ∘ y for the canonical section; λ in I-indices.
Perm psi(const Extension& ext, const std::vector<int>& lambda);

/// The data the Wells map is computed from.
struct WellsContext {
  Triplet base;           // canonical-section triplet of E
  Coefficients centre;    // Z(I) with the base action
  CohomologyGroup h2;     // H²_N(H, Z(I))
  std::vector<AutPair> c; // stabiliser of the coupling
};

WellsContext wells_context(const Extension& ext, const Budget& budget = Budget::from_env());

/// ω(E)(c): the unique class x with [E]^c = x·[E], found by orbit search.
/// Throws AxiomError "ActionNotTransitive" (no x) or "ActionNotFree" (several).
std::vector<int> wells_map(const Extension& ext, const WellsContext& ctx);

/// [E]^{(c,x)} = ([E]^c)^x on Ext_χ, checked as a right action of C ⋉ H²
/// with (c1,x1)(c2,x2) = (c1c2, x1^{c2} + x2). Costs |C|·|H²|² orbit searches.
bool gamma_action_check(const Extension& ext, const WellsContext& ctx);

struct ExactSequenceReport {
  int autb_i_order = 0;
  int kernel_rho_order = 0;
  int z1_order = 0;
  bool psi_bijective = false;
  bool psi_hom = false;
  bool rho_into_c = false;
  int c_order = 0;
  int h2_order = 0;
  int im_rho_order = 0;
  int ker_omega_order = 0;
  bool im_rho_eq_ker_omega = false;
  bool derivation_law = false;
  /// (c1, c2) with ω(c1c2) ≠ ω(c1) + ω(c2), if any.
  std::optional<std::pair<int, int>> twisting_witness;
  bool nu_section_independent = false;
  std::vector<AutPair> c;  // sorted
  std::vector<int> omega;  // ω(c[k]) as an index into the H² representatives

  bool exact() const {
    return psi_bijective && psi_hom && rho_into_c && im_rho_eq_ker_omega && derivation_law &&
           kernel_rho_order == z1_order;
  }
};

ExactSequenceReport verify_exact_sequence(const Extension& ext,
                                          const Budget& budget = Budget::from_env());

nlohmann::json to_json(const ExactSequenceReport& r);

}  // namespace braceforge
