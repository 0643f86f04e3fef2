#pragma once

#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge::detail {

/// Per-element maps of a brace that the cocycle code reads repeatedly.
struct BraceOps {
  explicit BraceOps(const SkewBrace& b) {
    for (int y = 0; y < b.order(); ++y) {
      lambda.push_back(braceforge::lambda(b, y));
      lambda_inv.push_back(lambda.back().inverse());
      inn_add.push_back(inner_automorphism(b.additive(), y));
      inn_circ.push_back(inner_automorphism(b.multiplicative(), y));
    }
  }

  std::vector<Perm> lambda;
  std::vector<Perm> lambda_inv;
  std::vector<Perm> inn_add;   // z ↦ y + z − y
  std::vector<Perm> inn_circ;  // z ↦ y ∘ z ∘ y⁻¹
};

/// p respects the table of g.
inline bool preserves(const FiniteGroup& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (p(g.op(a, b)) != g.op(p(a), p(b))) return false;
  return true;
}

}  // namespace braceforge::detail
