#pragma once

#include <optional>
#include <vector>

#include "braceforge/action.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/extension.hpp"

namespace braceforge {

/// Which (h1,h2,h3) the compatibility sweep visits.
///  Full: every triple.
///  Generators: h2, h3 restricted to 0 and the additive generators of H.
///    Heuristic; the law is not known to be generator-local.
///  Auto: Full when |H|·|I| ≤ 64, Generators above.
enum class SweepMode { Auto, Full, Generators };

struct SplitCheckOptions {
  Form form = Form::Derived;
  SweepMode sweep = SweepMode::Full;
};

/// Split compatibility, with Y(h,y) := ν_{h1∘h}(σ_h(ν⁻¹_{h1}(y1)) ∘ ν⁻¹_h(y)):
///   Y(h2+h3, μ_{h3}(y2) + y3) = μ_{−h1 + h1∘h3}(Y(h2,y2) − y1) + Y(h3,y3)
/// AsPrinted indexes the outer μ by −h1 + h2∘h3.
/// Kinds: ShapeMismatch, NotAutomorphism(h) with detail nu|mu|sigma,
/// NotHom(h1,h2) for ν, NotAntiHom(h1,h2) for μ or σ,
/// CompatibilityFailed(h1,h2,h3,y1,y2,y3).
std::optional<Violation> split_triple_violation(const SkewBrace& h, const SkewBrace& i,
                                                const ActionTriple& t,
                                                SplitCheckOptions opts = {});
void validate_split_triple(const SkewBrace& h, const SkewBrace& i, const ActionTriple& t,
                           SplitCheckOptions opts = {});

/// Brace on H×I ((h,y) ↦ h·|I| + y):
///   (h1,y1) + (h2,y2) = (h1+h2, μ_{h2}(y1) + y2)
///   (h1,y1) ∘ (h2,y2) = (h1∘h2, ν_{h1∘h2}(σ_{h2}(ν⁻¹_{h1}(y1)) ∘ ν⁻¹_{h2}(y2)))
/// Validates the triple first and the resulting brace afterwards.
SkewBrace semidirect_product(const SkewBrace& h, const SkewBrace& i, const ActionTriple& t);

/// The product with its natural injection and projection.
Extension split_extension(const SkewBrace& h, const SkewBrace& i, const ActionTriple& t);

struct SplitDecomposition {
  ActionTriple triple;
  /// s(h) + y ↦ (h, y) from E onto semidirect_product(H, I, triple).
  BraceHom iso;
};

/// Throws AxiomError "SectionNotHom" if s is not a brace homomorphism.
SplitDecomposition split_decompose(const Extension& ext, const Section& s);

/// A section that is a brace homomorphism, if one exists.
std::optional<Section> find_split_section(const Extension& ext);

/// Like split_decompose on a searched section; throws AxiomError "NotSplit".
SplitDecomposition split_decompose(const Extension& ext);

/// Every triple passing split_triple_violation(opts), sorted by (ν, μ, σ).
/// Candidates are (anti-)homomorphisms built from generator images;
/// `jobs` threads share the ν candidates.
std::vector<ActionTriple> enumerate_split_triples(const SkewBrace& h, const SkewBrace& i,
                                                  SplitCheckOptions opts = {}, int jobs = 1);

}  // namespace braceforge
