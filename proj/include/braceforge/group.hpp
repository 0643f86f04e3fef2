#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/errors.hpp"

namespace braceforge {

/// Row-major Cayley table as read from files: table[a][b] = a·b.
using Table = std::vector<std::vector<int>>;

/// A bijection on 0..n-1. Composition follows function notation:
/// (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> map);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(map_.size()); }
  int operator()(int x) const { return map_[x]; }
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  const std::vector<int>& map() const { return map_; }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> map_;
};

std::string to_string(const Perm& p);

/// Group on 0..n-1 given by its Cayley table, identity at index 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates and builds; throws AxiomError naming the first failed axiom.
  static FiniteGroup from_table(const Table& table);

  int order() const { return n_; }
  int op(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  Table table() const;

  bool is_abelian() const;
  int element_order(int a) const;
  /// Greedy generating set: repeatedly adds the least element outside the
  /// subgroup generated so far. Deterministic.
  std::vector<int> generators() const;

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && mul_ == other.mul_;
  }

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

/// First failed group axiom, if any. Kinds: NotSquare, NotClosed,
/// NoIdentityAtZero, NoInverse(a), NotAssociative(a,b,c).
std::optional<Violation> group_violation(const Table& table);

/// validate_group: FiniteGroup or AxiomError.
FiniteGroup validate_group(const Table& table);

/// Finite set of permutations closed under composition and inverses,
/// stored explicitly in sorted order.
class PermGroup {
 public:
  PermGroup() = default;
  /// Sorts and deduplicates; throws AxiomError if not a group.
  PermGroup(int degree, std::vector<Perm> elements);

  static PermGroup trivial(int degree);
  static PermGroup generated_by(int degree, const std::vector<Perm>& gens);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  bool operator==(const PermGroup&) const = default;

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
};

/// Default order bound for exhaustive automorphism searches.
inline constexpr int kDefaultOrderBound = 16;

/// Aut(G) by backtracking over generator images. Throws AxiomError
/// "OrderBoundExceeded" when |G| > bound.
PermGroup automorphism_group(const FiniteGroup& g, int bound = kDefaultOrderBound);

/// z ↦ g·z·g⁻¹.
Perm inner_automorphism(const FiniteGroup& g, int element);

std::vector<int> centre(const FiniteGroup& g);
PermGroup inner_group(const FiniteGroup& g);

/// Least subgroup of `ambient` containing `generators` and closed under
/// conjugation by every element of `ambient`.
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& generators);

/// p ≡ q modulo `sub`, i.e. p ∘ q⁻¹ ∈ sub.
bool equal_mod(const PermGroup& sub, const Perm& p, const Perm& q);

/// Elements of the subgroup generated by `gens`, sorted.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& subset);

/// Visits every bijection f with f(0)=0 that is simultaneously an isomorphism
/// src[k] → dst[k] for all k. Generators are taken from src[0]; images are
/// pruned on each generated prefix subgroup before the remaining tables are
/// checked. Return false from the visitor to stop early.
void for_each_isomorphism(const std::vector<const FiniteGroup*>& src,
                          const std::vector<const FiniteGroup*>& dst,
                          const std::function<bool(const Perm&)>& visit);

std::optional<Perm> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// All maps f: G → target (indexed by G's elements) with f(ab) = f(a)f(b),
/// or f(ab) = f(b)f(a) when `anti`. Canonically ordered.
std::vector<std::vector<Perm>> homomorphisms_into(const FiniteGroup& g,
                                                  const PermGroup& target, bool anti);

/// Extends generator images to a map on all of G along BFS words, without
/// checking the (anti-)homomorphism laws.
std::vector<Perm> extend_from_generators(const FiniteGroup& g, const std::vector<int>& gens,
                                         const std::vector<Perm>& images, bool anti);

// Standard small groups.
FiniteGroup cyclic_group(int n);
/// Carrier pairs (a,b) ↦ a·|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Order 2m, ⟨a,b | a^m = b² = 1, bab = a⁻¹⟩; a^i b^j ↦ i + m·j.
FiniteGroup dihedral_group(int m);
/// Q8 with ±1, ±i, ±j, ±k ↦ 0..7 as 1,-1,i,-i,j,-j,k,-k.
FiniteGroup quaternion_group();

/// Relabels so that `identity` becomes index 0 (swapping it with 0).
Table move_identity_to_zero(const Table& table, int identity);
/// Two-sided identity of a table, if any.
std::optional<int> find_identity(const Table& table);

}  // namespace braceforge
