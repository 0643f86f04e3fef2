#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "braceforge/brace.hpp"
#include "braceforge/catalog.hpp"
#include "braceforge/errors.hpp"

using namespace braceforge;

namespace {

SkewBrace relabel(const SkewBrace& b, const std::vector<int>& p) {
  const int n = b.order();
  Table a(n, std::vector<int>(n)), c(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a[p[x]][p[y]] = p[b.plus(x, y)];
      c[p[x]][p[y]] = p[b.circ(x, y)];
    }
  return SkewBrace::from_tables(a, c);
}

}  // namespace

TEST(Brace, CatalogBracesHaveTheStatedGroups) {
  const FiniteGroup z2 = cyclic_group(2);
  const FiniteGroup k4 = direct_product(z2, z2);
  EXPECT_TRUE(find_isomorphism(brace_klein_z4().multiplicative(), cyclic_group(4)));
  EXPECT_TRUE(find_isomorphism(brace_klein_z4().additive(), k4));
  EXPECT_TRUE(find_isomorphism(brace_z4_klein().multiplicative(), k4));
  EXPECT_TRUE(find_isomorphism(brace_s3_z6().additive(), dihedral_group(3)));
  EXPECT_TRUE(find_isomorphism(brace_s3_z6().multiplicative(), cyclic_group(6)));
  EXPECT_TRUE(find_isomorphism(brace_z8_soc2().multiplicative(),
                               direct_product(cyclic_group(4), z2)));
}

TEST(Brace, SocleAndAnnihilator) {
  EXPECT_EQ(socle(brace_z8_soc2()), (std::vector<int>{0, 4}));
  EXPECT_EQ(socle(brace_z4_klein()), (std::vector<int>{0, 2}));
  EXPECT_EQ(annihilator(brace_z4_klein()), (std::vector<int>{0, 2}));
  // Trivial brace: socle is the centre of the group.
  EXPECT_EQ(socle(trivial_brace(dihedral_group(4))), centre(dihedral_group(4)));
  EXPECT_EQ(socle(cyclic_trivial(5)).size(), 5u);
  for (const SkewBrace& b : {brace_s3_z6(), brace_z8_soc2(), brace_klein_z4()}) {
    EXPECT_TRUE(is_ideal(b, socle(b)));
    EXPECT_TRUE(is_ideal(b, annihilator(b)));
  }
}

TEST(Brace, LambdaAndIdentities) {
  for (const SkewBrace& b : {brace_s3_z6(), brace_z8_soc2(), brace_klein_z4(), brace_z4_klein()}) {
    EXPECT_TRUE(lambda_is_hom(b));
    EXPECT_TRUE(identities_check(b));
  }
  // λ_a(b) = (1 + 2a)b on brace_z8_soc2.
  EXPECT_EQ(lambda(brace_z8_soc2(), 1).map(), (std::vector<int>{0, 3, 6, 1, 4, 7, 2, 5}));
}

TEST(Brace, RejectsBrokenBraceLaw) {
  // Z6 with the circle of S3 in the dihedral labelling.
  const Table add = cyclic_group(6).table();
  const Table circ = dihedral_group(3).table();
  auto v = brace_violation(FiniteGroup::from_table(add), FiniteGroup::from_table(circ));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, "BraceAxiomFailed");
  EXPECT_EQ(v->witness, (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(validate_brace(add, circ), AxiomError);
}

TEST(Brace, Automorphisms) {
  EXPECT_EQ(brace_automorphisms(cyclic_trivial(8)).size(), 4u);
  EXPECT_EQ(brace_automorphisms(brace_z4_klein()).size(), 2u);
  const PermGroup a = brace_automorphisms(brace_s3_z6());
  for (const Perm& p : a.elements())
    EXPECT_TRUE(is_brace_hom(brace_s3_z6(), brace_s3_z6(), p.map()));
}

TEST(Brace, DirectAndSub) {
  const SkewBrace p = direct_product(brace_z4_klein(), cyclic_trivial(3));
  EXPECT_EQ(p.order(), 12);
  EXPECT_TRUE(lambda_is_hom(p));
  const SubBrace s = sub_brace(brace_z8_soc2(), socle(brace_z8_soc2()));
  EXPECT_EQ(s.brace.order(), 2);
  EXPECT_TRUE(s.brace.is_trivial());
  EXPECT_EQ(kernel(BraceHom{{0, 0, 0, 0}}), (std::vector<int>{0, 1, 2, 3}));
}

TEST(BraceProperty, RelabelingGivesIsomorphicBraces) {
  std::mt19937 rng(7);
  for (const SkewBrace& b : {brace_s3_z6(), brace_z8_soc2(), brace_klein_z4()}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> p(b.order());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin() + 1, p.end(), rng);
      const SkewBrace r = relabel(b, p);
      const auto iso = find_brace_isomorphism(b, r);
      ASSERT_TRUE(iso);
      EXPECT_TRUE(is_brace_hom(b, r, iso->map()));
      EXPECT_EQ(socle(r).size(), socle(b).size());
    }
  }
  EXPECT_FALSE(find_brace_isomorphism(brace_klein_z4(), cyclic_trivial(4)));
}
