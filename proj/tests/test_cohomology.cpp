#include <gtest/gtest.h>

#include "braceforge/catalog.hpp"
#include "braceforge/cohomology.hpp"
#include "braceforge/errors.hpp"

using namespace braceforge;

namespace {

ActionTriple neg_z2_on(int m) { return uniform_triple({Perm::identity(m), negation(m)}); }

}  // namespace

TEST(Cohomology, TrivialZ2ByZ2) {
  const SkewBrace z2 = cyclic_trivial(2);
  const Coefficients c = coefficients(z2, identity_triple(2, 2));
  const CohomologyGroup g = h2N(z2, c);
  EXPECT_EQ(g.z2().size(), 4u);
  EXPECT_EQ(g.b2().size(), 1u);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(z1N(z2, c).size(), 2u);  // Hom(Z2, Z2)
}

TEST(Cohomology, ParentRelationIsNeededForCoprimeOrders) {
  // Every extension of Z2 by Z3 splits, so H² must be trivial. Without the
  // parent relation the cocycle pairs leave a group of order 3.
  const SkewBrace z2 = cyclic_trivial(2), z3 = cyclic_trivial(3);
  const Coefficients c = coefficients(z3, identity_triple(2, 3));
  EXPECT_EQ(h2N(z2, c).order(), 1u);
  EXPECT_EQ(h2N(z2, c, {false}).order(), 3u);
  EXPECT_EQ(z1N(z2, c).size(), 1u);
}

TEST(Cohomology, DerivationReadings) {
  const SkewBrace z2 = cyclic_trivial(2), z3 = cyclic_trivial(3);
  const Coefficients c = coefficients(z3, neg_z2_on(3));
  EXPECT_EQ(z1N(z2, c, Z1Reading::Standard).size(), 3u);
  EXPECT_EQ(z1N(z2, c, Z1Reading::Alternative).size(), 1u);
}

TEST(Cohomology, CoboundariesAreCocycles) {
  const SkewBrace h = brace_klein_z4();
  const Coefficients c = coefficients(cyclic_trivial(2), identity_triple(4, 2));
  const auto z = z2N(h, c);
  for (const auto& b : b2N(h, c)) EXPECT_TRUE(std::binary_search(z.begin(), z.end(), b));
  const CohomologyGroup g = h2N(h, c);
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    EXPECT_EQ(g.add(x, g.neg(x)), g.zero());
    for (int y = 0; y < static_cast<int>(g.order()); ++y) EXPECT_EQ(g.add(x, y), g.add(y, x));
  }
}

TEST(Cohomology, CoefficientErrors) {
  const SkewBrace s3 = trivial_brace(dihedral_group(3));
  EXPECT_THROW(coefficients(s3, identity_triple(2, 6)), InputError);
  const SkewBrace i = brace_z4_klein();
  const Coefficients ann = annihilator_coefficients(i, identity_triple(2, 4));
  EXPECT_EQ(ann.a.order(), 2);
  EXPECT_EQ(ann.embed, (std::vector<int>{0, 2}));
  // h2_act refuses values outside Ann(I).
  Triplet t{identity_triple(2, 4), zero_cochain(2), zero_cochain(2)};
  CocyclePair x = zero_pair(2);
  x.g[1][1] = 1;
  EXPECT_THROW(h2_act(cyclic_trivial(2), i, t, x), AxiomError);
  x.g[1][1] = 2;
  EXPECT_EQ(h2_act(cyclic_trivial(2), i, t, x).beta[1][1], 2);
}

TEST(Cohomology, BijectionWithExtensionClasses) {
  struct Case {
    SkewBrace h, i;
    ActionTriple chi;
    int classes;
  };
  const SkewBrace z2 = cyclic_trivial(2), z3 = cyclic_trivial(3);
  const std::vector<Case> cases = {
      {z2, z2, identity_triple(2, 2), 4},
      {z2, z3, identity_triple(2, 3), 1},
      {z2, z3, neg_z2_on(3), 1},
      {z3, z2, identity_triple(3, 2), 1},
      {cyclic_trivial(4), z2, identity_triple(4, 2), 4},
      {brace_klein_z4(), z2, identity_triple(4, 2), 8},
  };
  for (const auto& k : cases) {
    const BijectionReport r = ext_bijection_check(k.h, k.i, k.chi);
    EXPECT_EQ(r.ext_classes, k.classes);
    EXPECT_TRUE(r.equal()) << r.ext_classes << " " << r.triplet_classes << " " << r.h2_order;
  }
}

TEST(Cohomology, FreeAndTransitive) {
  const SkewBrace z2 = cyclic_trivial(2), z3 = cyclic_trivial(3);
  for (auto [h, i, chi] : {std::tuple{z2, z2, identity_triple(2, 2)},
                           std::tuple{z2, z3, neg_z2_on(3)},
                           std::tuple{z3, z2, identity_triple(3, 2)}}) {
    const FreeTransitiveReport r = verify_free_transitive(h, i, chi);
    EXPECT_TRUE(r.free);
    EXPECT_TRUE(r.well_defined);
    EXPECT_TRUE(r.transitive());
    EXPECT_EQ(r.classes, r.group_order);
  }
  // Non-trivial I: the action is free; Ann(I) is smaller than I.
  const FreeTransitiveReport r = verify_free_transitive(z2, brace_z4_klein(), identity_triple(2, 4));
  EXPECT_TRUE(r.free);
  EXPECT_TRUE(r.well_defined);
  EXPECT_FALSE(r.trivial_i);
}
