#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "braceforge/errors.hpp"
#include "braceforge/group.hpp"

using namespace braceforge;

namespace {

int euler_phi(int n) {
  int c = 0;
  for (int k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

FiniteGroup klein() { return direct_product(cyclic_group(2), cyclic_group(2)); }

}  // namespace

TEST(Perm, ComposesRightToLeft) {
  const Perm p({1, 2, 0}), q({0, 2, 1});
  // (p*q)(x) = p(q(x))
  EXPECT_EQ((p * q).map(), (std::vector<int>{1, 0, 2}));
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(to_string(p), "[1,2,0]");
}

TEST(Group, RejectsNonGroups) {
  EXPECT_EQ(group_violation({{0, 1}, {1, 1}})->kind, "NoInverse");
  EXPECT_EQ(group_violation({{0, 1}, {1}})->kind, "NotSquare");
  EXPECT_EQ(group_violation({{1, 0}, {0, 1}})->kind, "NoIdentityAtZero");
  // Closed with identity and inverses but not associative.
  const Table loop = {{0, 1, 2, 3, 4},
                      {1, 0, 3, 4, 2},
                      {2, 4, 0, 1, 3},
                      {3, 2, 4, 0, 1},
                      {4, 3, 1, 2, 0}};
  EXPECT_EQ(group_violation(loop)->kind, "NotAssociative");
  EXPECT_THROW(validate_group(loop), AxiomError);
}

TEST(Group, StandardGroups) {
  EXPECT_TRUE(cyclic_group(7).is_abelian());
  EXPECT_FALSE(dihedral_group(3).is_abelian());
  EXPECT_EQ(dihedral_group(4).order(), 8);
  EXPECT_FALSE(quaternion_group().is_abelian());
  // bab = a⁻¹ in D_5 with a = 1, b = 5.
  const FiniteGroup d = dihedral_group(5);
  EXPECT_EQ(d.op(d.op(5, 1), 5), d.inv(1));
  int order4 = 0;
  const FiniteGroup q = quaternion_group();
  for (int x = 0; x < 8; ++x) order4 += q.element_order(x) == 4;
  EXPECT_EQ(order4, 6);
}

TEST(Group, AutomorphismOrders) {
  for (int n = 1; n <= 12; ++n)
    EXPECT_EQ(automorphism_group(cyclic_group(n)).size(), static_cast<std::size_t>(euler_phi(n)))
        << n;
  EXPECT_EQ(automorphism_group(klein()).size(), 6u);
  EXPECT_EQ(automorphism_group(dihedral_group(3)).size(), 6u);
  EXPECT_EQ(automorphism_group(dihedral_group(4)).size(), 8u);
  EXPECT_EQ(automorphism_group(quaternion_group()).size(), 24u);
  EXPECT_EQ(automorphism_group(direct_product(cyclic_group(4), cyclic_group(2))).size(), 8u);
  EXPECT_THROW(automorphism_group(cyclic_group(17)), AxiomError);
}

TEST(Group, CentreAndInner) {
  EXPECT_EQ(centre(dihedral_group(3)).size(), 1u);
  EXPECT_EQ(centre(dihedral_group(4)).size(), 2u);
  EXPECT_EQ(centre(quaternion_group()).size(), 2u);
  EXPECT_EQ(inner_group(dihedral_group(4)).size(), 4u);
  EXPECT_EQ(inner_group(cyclic_group(6)).size(), 1u);
  EXPECT_TRUE(inner_group(quaternion_group()).is_subgroup_of(automorphism_group(quaternion_group())));
}

TEST(Group, Subgroups) {
  const FiniteGroup d = dihedral_group(4);
  EXPECT_EQ(generated_subgroup(d, {1}).size(), 4u);
  EXPECT_TRUE(is_normal_subgroup(d, generated_subgroup(d, {1})));
  EXPECT_FALSE(is_normal_subgroup(d, generated_subgroup(d, {4})));
  EXPECT_FALSE(is_subgroup(d, {0, 1}));
}

TEST(Group, Isomorphisms) {
  EXPECT_TRUE(find_isomorphism(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
  EXPECT_FALSE(find_isomorphism(cyclic_group(4), klein()));
  EXPECT_FALSE(find_isomorphism(dihedral_group(4), quaternion_group()));
}

TEST(Group, Homomorphisms) {
  const PermGroup aut3 = automorphism_group(cyclic_group(3));
  EXPECT_EQ(homomorphisms_into(cyclic_group(2), aut3, false).size(), 2u);
  EXPECT_EQ(homomorphisms_into(cyclic_group(3), aut3, false).size(), 1u);
  // Anti-homomorphisms into an abelian target coincide with homomorphisms.
  EXPECT_EQ(homomorphisms_into(klein(), automorphism_group(cyclic_group(5)), true).size(),
            homomorphisms_into(klein(), automorphism_group(cyclic_group(5)), false).size());
  // S3 → S3 ≅ Aut(S3): 1 trivial + 3 onto order-2 subgroups + 6 automorphisms.
  EXPECT_EQ(homomorphisms_into(dihedral_group(3), automorphism_group(dihedral_group(3)), false).size(),
            10u);
}

TEST(Group, IdentityRelabel) {
  const Table t = {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}};
  ASSERT_EQ(find_identity(t), 1);
  const Table moved = move_identity_to_zero(t, 1);
  EXPECT_FALSE(group_violation(moved));
}

TEST(GroupProperty, RandomRelabelPreservesAutomorphismCount) {
  std::mt19937 rng(20261019);
  const FiniteGroup g = dihedral_group(4);
  const Table base = g.table();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> p(8);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin() + 1, p.end(), rng);
    Table t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) t[p[a]][p[b]] = p[base[a][b]];
    const FiniteGroup h = validate_group(t);
    EXPECT_EQ(automorphism_group(h).size(), 8u);
    EXPECT_TRUE(find_isomorphism(g, h));
  }
}
