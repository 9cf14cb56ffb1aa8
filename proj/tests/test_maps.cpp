#include "superring/maps.hpp"

#include <gtest/gtest.h>

#include "superring/axioms.hpp"
#include "superring/bimodule.hpp"
#include "superring/constructions.hpp"
#include "superring/graded.hpp"

using namespace superring;

namespace {
TrivialExtension te_zn(std::int64_t n) {
  return trivial_extension(zn_ring(n), ring_as_bimodule(zn_ring(n)));
}
}  // namespace

TEST(MapFromGeneratorImages, BasicAndRejected) {
  AbelianGroup z2({2}), z4({4});
  AdditiveMap zero = map_from_generator_images(z4, z4, {z4.zero()});
  EXPECT_TRUE(zero.is_zero());
  AdditiveMap id = map_from_generator_images(z4, z4, {z4.make({1})});
  EXPECT_EQ(id, GroupHom::identity(z4));
  // Z2 -> Z4 sending 1 to 1 is not additively well defined
  EXPECT_THROW(map_from_generator_images(z2, z4, {z4.make({1})}), std::invalid_argument);
}

TEST(GradedMap, AcceptsBlockRespectingMaps) {
  TrivialExtension te = te_zn(2);
  GradedRing g = grade_trivial_extension(te);
  const AbelianGroup& c = te.ring.carrier();

  // (r,m) -> (0,m) has degree 0
  GradedMap d0(g, GroupHom(c, c, {0, 0, 0, 1}), 0);
  EXPECT_EQ(d0.apply(c.make({1, 1})), c.make({0, 1}));

  // (r,m) -> (m,r) has degree 1
  GradedMap d1(g, GroupHom(c, c, {0, 1, 1, 0}), 1);
  EXPECT_EQ(d1.apply(c.make({1, 0})), c.make({0, 1}));

  Homog image = d1.apply(g.homog(c.make({1, 0}), 0));
  EXPECT_EQ(image.degree, 1);
}

TEST(GradedMap, RejectsBlockViolationWithWitness) {
  TrivialExtension te = te_zn(2);
  GradedRing g = grade_trivial_extension(te);
  const AbelianGroup& c = te.ring.carrier();
  // (r,m) -> (r, r+m) claimed degree 1: (1,0) maps to (1,1), not odd
  GroupHom h(c, c, {1, 1, 0, 1});
  Verdict v = GradedMap::check_blocks(g, h, 1);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.counterexample->where[0].second, c.make({1, 0}));
  EXPECT_THROW(GradedMap(g, h, 1), std::invalid_argument);
}

TEST(GradedMapSpace, SizesMatchBlockHomCounts) {
  TrivialExtension te2 = te_zn(2);
  GradedRing g2 = grade_trivial_extension(te2);
  EXPECT_EQ(GradedMapSpace(g2, 0, 4096).size(), 4);  // Hom(Z2,Z2)^2
  EXPECT_EQ(GradedMapSpace(g2, 1, 4096).size(), 4);

  TrivialExtension te42 =
      trivial_extension(zn_ring(4), zn_bimodule(2, zn_ring(4), zn_ring(4)));
  GradedRing g42 = grade_trivial_extension(te42);
  EXPECT_EQ(GradedMapSpace(g42, 0, 4096).size(), 8);  // |Hom(Z4,Z4)| * |Hom(Z2,Z2)|
  EXPECT_EQ(GradedMapSpace(g42, 1, 4096).size(), 4);  // |Hom(Z4,Z2)| * |Hom(Z2,Z4)|
}

TEST(GradedMapSpace, EveryMemberRespectsBlocksAndEnumerationIsStable) {
  Ring z3 = zn_ring(3);
  TriangularRing tri = triangular_ring(z3, zn_bimodule(3, z3, z3), z3);
  GradedRing g = grade_triangular(tri);
  GradedMapSpace s(g, 1, 4096);
  EXPECT_EQ(s.size(), 81);  // Hom(Z3^2,Z3) x Hom(Z3,Z3^2)
  GradedMapSpace s2(g, 1, 4096);
  for (std::int64_t i = 0; i < s.size(); ++i) {
    GradedMap m = s.at(i);
    EXPECT_TRUE(GradedMap::check_blocks(g, m.hom(), 1).ok());
    EXPECT_EQ(m, s2.at(i));
  }
}

TEST(InnerDerivation, MatrixUnitExamples) {
  Ring t2 = upper_triangular_tn(zn_ring(2), 2);
  Elem e12 = t2.carrier().make({0, 1, 0});
  AdditiveMap inner = inner_derivation(t2, e12);
  EXPECT_EQ(inner.apply(t2.carrier().make({1, 0, 0})), e12);  // I_{E12}(E11) = E12
  EXPECT_EQ(inner.apply(e12), t2.zero());                     // E12^2 = 0

  // central element of a commutative ring induces the zero map
  Ring z6 = zn_ring(6);
  for (std::int64_t i = 0; i < 6; ++i)
    EXPECT_TRUE(inner_derivation(z6, z6.carrier().element_at(i)).is_zero());
}

TEST(BiadditiveMap, ApplyIsBiadditive) {
  AbelianGroup z3({3});
  // B(x,y) = x o y on Z3 comes from the generator-pair image 1 o 1 = 2
  BiadditiveMap b(z3, z3, z3, {z3.make({2})});
  Ring r3 = zn_ring(3);
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t j = 0; j < 3; ++j) {
      Elem x = z3.element_at(i), y = z3.element_at(j);
      EXPECT_EQ(b.apply(x, y), jordan_product(r3, x, y));
      for (std::int64_t k = 0; k < 3; ++k) {
        Elem z = z3.element_at(k);
        EXPECT_EQ(b.apply(z3.add(x, z), y), z3.add(b.apply(x, y), b.apply(z, y)));
        EXPECT_EQ(b.apply(x, z3.add(y, z)), z3.add(b.apply(x, y), b.apply(x, z)));
      }
    }
}

TEST(BiadditiveMap, OrderViolatingImageRejected) {
  AbelianGroup z2({2}), z4({4});
  EXPECT_THROW(BiadditiveMap(z2, z4, z4, {z4.make({1})}), std::invalid_argument);
  EXPECT_NO_THROW(BiadditiveMap(z2, z4, z4, {z4.make({2})}));
}

TEST(BiadditiveSpace, CountsAndBlockConstraint) {
  TrivialExtension te2 = te_zn(2);
  GradedRing g2 = grade_trivial_extension(te2);
  BiadditiveSpace s2(g2, 4096);
  EXPECT_EQ(s2.size(), 16);

  TrivialExtension te3 = te_zn(3);
  GradedRing g3 = grade_trivial_extension(te3);
  BiadditiveSpace s3(g3, 4096);
  EXPECT_EQ(s3.size(), 81);

  for (std::int64_t i = 0; i < s3.size(); ++i)
    EXPECT_TRUE(BiadditiveMap::check_blocks(g3, s3.at(i)).ok());

  // mixed-order instance: T(Z4, Z2)
  TrivialExtension te42 =
      trivial_extension(zn_ring(4), zn_bimodule(2, zn_ring(4), zn_ring(4)));
  GradedRing g42 = grade_trivial_extension(te42);
  EXPECT_EQ(BiadditiveSpace(g42, 4096).size(), 32);  // 4*2*2*2
}

TEST(BiadditiveSpace, ZeroMapIsFirst) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  BiadditiveSpace s(g, 4096);
  const AbelianGroup& c = te.ring.carrier();
  EXPECT_EQ(s.at(0), BiadditiveMap::zero(c, c, c));
}

TEST(TabulateAdditive, MatchesMatrixAction) {
  AbelianGroup src({2, 4}), dst({4, 2});
  HomSpace s(src, dst, 1 << 20);
  for (std::int64_t h = 0; h < s.size(); ++h) {
    GroupHom hom = s.at(h);
    auto table = tabulate_additive(hom);
    for (std::int64_t i = 0; i < src.order(); ++i)
      ASSERT_EQ(table[(std::size_t)i], hom.apply(src.element_at(i)));
  }
}
