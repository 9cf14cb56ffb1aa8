#include "superring/graded.hpp"

#include <gtest/gtest.h>

#include "superring/bimodule.hpp"
#include "superring/constructions.hpp"
#include "superring/ring.hpp"

using namespace superring;

namespace {
TrivialExtension te_zn(std::int64_t n) {
  return trivial_extension(zn_ring(n), ring_as_bimodule(zn_ring(n)));
}
}  // namespace

TEST(JordanProduct, Arithmetic) {
  Ring z3 = zn_ring(3);
  EXPECT_EQ(jordan_product(z3, z3.carrier().make({1}), z3.carrier().make({2})),
            z3.carrier().make({1}));

  Ring z4 = zn_ring(4);
  Elem two = z4.carrier().make({2});
  EXPECT_EQ(jordan_product(z4, two, two), z4.zero());

  // commutative ring: x o y = 2xy
  Ring z6 = zn_ring(6);
  for (std::int64_t i = 0; i < 6; ++i)
    for (std::int64_t j = 0; j < 6; ++j) {
      Elem x = z6.carrier().element_at(i), y = z6.carrier().element_at(j);
      EXPECT_EQ(jordan_product(z6, x, y), z6.carrier().scale(2, z6.mul(x, y)));
    }
}

TEST(Commutator, MatrixUnits) {
  Ring t2 = upper_triangular_tn(zn_ring(2), 2);
  Elem e11 = t2.carrier().make({1, 0, 0});
  Elem e12 = t2.carrier().make({0, 1, 0});
  EXPECT_EQ(commutator(t2, e11, e12), e12);
  for (std::int64_t i = 0; i < t2.order(); ++i) {
    Elem x = t2.carrier().element_at(i);
    EXPECT_EQ(commutator(t2, x, x), t2.zero());
  }
  Ring z6 = zn_ring(6);
  for (std::int64_t i = 0; i < 6; ++i)
    for (std::int64_t j = 0; j < 6; ++j)
      EXPECT_EQ(commutator(z6, z6.carrier().element_at(i), z6.carrier().element_at(j)),
                z6.zero());
}

TEST(GradeTrivialExtension, PartsAndHomogeneity) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  EXPECT_EQ(g.degree_of(te.ring.carrier().make({2, 0})), 0);
  EXPECT_EQ(g.degree_of(te.ring.carrier().make({0, 2})), 1);
  EXPECT_EQ(g.degree_of(te.ring.carrier().make({1, 1})), std::nullopt);
  EXPECT_EQ(g.degree_of(te.ring.zero()), 0);

  // product of two odd elements lands in the even part (it is zero)
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t j = 0; j < 3; ++j) {
      Elem p = te.ring.mul(te.ring.carrier().make({0, i}), te.ring.carrier().make({0, j}));
      EXPECT_TRUE(g.is_homogeneous(p, 0));
      EXPECT_EQ(p, te.ring.zero());
    }

  EXPECT_TRUE(validate_grading(g).ok());
}

TEST(GradeTriangular, ClosureHolds) {
  Ring z3 = zn_ring(3);
  TriangularRing tri = triangular_ring(z3, zn_bimodule(3, z3, z3), z3);
  GradedRing g = grade_triangular(tri);
  EXPECT_TRUE(validate_grading(g).ok());
  EXPECT_EQ(g.part_group(0).order(), 9);
  EXPECT_EQ(g.part_group(1).order(), 3);
}

TEST(ValidateGrading, RejectsSwappedMask) {
  TrivialExtension te = te_zn(2);
  GradedRing bad(te.ring, {1, 0});
  Verdict v = validate_grading(bad);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.counterexample->identity, "1 in A0");
}

TEST(Superproduct, MatchesJordanWhenEitherEven) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  for (const Homog& x : g.homogeneous_elements())
    for (const Homog& y : g.homogeneous_elements()) {
      if (x.degree == 1 && y.degree == 1) continue;
      EXPECT_EQ(superproduct(g, x, y).elem, jordan_product(te.ring, x.elem, y.elem));
    }
}

TEST(Superproduct, OddOddIsCommutatorAndVanishesInTrivialExtension) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  for (std::int64_t i = 0; i < 3; ++i)
    for (std::int64_t j = 0; j < 3; ++j) {
      Homog x = g.homog(te.ring.carrier().make({0, i}), 1);
      Homog y = g.homog(te.ring.carrier().make({0, j}), 1);
      EXPECT_EQ(superproduct(g, x, y).elem, commutator(te.ring, x.elem, y.elem));
      EXPECT_EQ(superproduct(g, x, y).elem, te.ring.zero());
    }
}

TEST(Superproduct, SuperSymmetry) {
  // x o_s y = (-1)^{|x||y|} y o_s x
  Ring z3 = zn_ring(3);
  TriangularRing tri = triangular_ring(z3, zn_bimodule(3, z3, z3), z3);
  GradedRing g = grade_triangular(tri);
  for (const Homog& x : g.homogeneous_elements())
    for (const Homog& y : g.homogeneous_elements()) {
      Elem lhs = superproduct(g, x, y).elem;
      Elem rhs = superproduct(g, y, x).elem;
      if (x.degree == 1 && y.degree == 1) rhs = tri.ring.neg(rhs);
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Superproduct, DegreeArithmetic) {
  TrivialExtension te = te_zn(4);
  GradedRing g = grade_trivial_extension(te);
  for (const Homog& x : g.homogeneous_elements())
    for (const Homog& y : g.homogeneous_elements()) {
      Homog p = superproduct(g, x, y);
      EXPECT_EQ(p.degree, (x.degree + y.degree) % 2);
      EXPECT_TRUE(g.is_homogeneous(p.elem, p.degree));
    }
}

TEST(Sigma, InvolutiveAutomorphismFixingEvenPart) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  EXPECT_EQ(g.sigma(te.ring.carrier().make({2, 0})), te.ring.carrier().make({2, 0}));
  EXPECT_EQ(g.sigma(te.ring.carrier().make({0, 1})), te.ring.carrier().make({0, 2}));
  for (std::int64_t i = 0; i < te.ring.order(); ++i) {
    Elem x = te.ring.carrier().element_at(i);
    EXPECT_EQ(g.sigma(g.sigma(x)), x);
  }
}

TEST(Homog, RejectsWrongDegree) {
  TrivialExtension te = te_zn(2);
  GradedRing g = grade_trivial_extension(te);
  EXPECT_THROW(g.homog(te.ring.carrier().make({1, 0}), 1), std::invalid_argument);
  EXPECT_NO_THROW(g.homog(te.ring.zero(), 1));  // zero lies in both parts
}

TEST(GradedRing, HomogeneousElementsOrderIsDeterministic) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  auto h = g.homogeneous_elements();
  ASSERT_EQ(h.size(), 6u);
  EXPECT_EQ(h[0].degree, 0);
  EXPECT_EQ(h[0].elem, te.ring.zero());
  EXPECT_EQ(h[3].degree, 1);
}
