#pragma once

#include <compare>
#include <vector>

#include "braceforge/group.hpp"

namespace braceforge {

/// Three families of permutations of I indexed by the elements of H:
/// ν_h, μ_h ∈ Aut(I,+) and σ_h ∈ Aut(I,∘).
struct ActionTriple {
  std::vector<Perm> nu;
  std::vector<Perm> mu;
  std::vector<Perm> sigma;

  auto operator<=>(const ActionTriple&) const = default;
};

ActionTriple identity_triple(int h_order, int i_order);

/// Map H×H → I stored as cochain[h1][h2].
using Cochain = std::vector<std::vector<int>>;

Cochain zero_cochain(int h_order);

/// (χ, β, τ): an action together with its additive and multiplicative
/// cocycles, as extracted from an extension and a section.
struct Triplet {
  ActionTriple chi;
  Cochain beta;
  Cochain tau;

  auto operator<=>(const Triplet&) const = default;
};

/// Which form of a printed identity to evaluate. `Derived` is the form that
/// holds in every extension; `AsPrinted` evaluates the formula with the
/// index and operand order of the source text, kept for erratum reports.
enum class Form { Derived, AsPrinted };

}  // namespace braceforge
