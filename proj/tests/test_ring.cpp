#include "superring/ring.hpp"

#include <gtest/gtest.h>

#include "superring/bimodule.hpp"
#include "superring/constructions.hpp"

using namespace superring;

TEST(ZnRing, ModularArithmetic) {
  Ring z1 = zn_ring(1);
  EXPECT_EQ(z1.order(), 1);
  EXPECT_EQ(z1.one(), z1.zero());

  Ring z3 = zn_ring(3);
  EXPECT_EQ(z3.mul(z3.carrier().make({2}), z3.carrier().make({2})), z3.carrier().make({1}));

  Ring z4 = zn_ring(4);
  EXPECT_EQ(z4.mul(z4.carrier().make({2}), z4.carrier().make({2})), z4.zero());

  EXPECT_THROW(zn_ring(0), std::invalid_argument);
}

TEST(ProductRing, ComponentwiseOperations) {
  Ring p = product_ring(zn_ring(2), zn_ring(3));
  Elem x = p.carrier().make({1, 2});
  EXPECT_EQ(p.mul(x, x), p.carrier().make({1, 1}));
  for (std::int64_t i = 0; i < p.order(); ++i) {
    Elem e = p.carrier().element_at(i);
    EXPECT_EQ(p.mul(p.one(), e), e);
    EXPECT_EQ(p.mul(e, p.one()), e);
  }
  Ring q = product_ring(zn_ring(2), zn_ring(2));
  EXPECT_EQ(q.mul(q.carrier().make({1, 0}), q.carrier().make({0, 1})), q.zero());
}

TEST(TrivialExtension, MultiplicationRule) {
  TrivialExtension t2 = trivial_extension(zn_ring(2), ring_as_bimodule(zn_ring(2)));
  Elem x = t2.ring.carrier().make({1, 1});
  EXPECT_EQ(t2.ring.mul(x, x), t2.ring.carrier().make({1, 0}));

  // odd * odd = 0
  for (std::int64_t i = 0; i < 2; ++i)
    for (std::int64_t j = 0; j < 2; ++j)
      EXPECT_EQ(t2.ring.mul(t2.ring.carrier().make({0, i}), t2.ring.carrier().make({0, j})),
                t2.ring.zero());

  TrivialExtension t3 = trivial_extension(zn_ring(3), ring_as_bimodule(zn_ring(3)));
  EXPECT_EQ(t3.ring.mul(t3.ring.carrier().make({2, 1}), t3.ring.carrier().make({1, 2})),
            t3.ring.carrier().make({2, 2}));

  EXPECT_THROW(trivial_extension(zn_ring(2), ring_as_bimodule(zn_ring(3))),
               std::invalid_argument);
}

TEST(TriangularRing, MatrixUnits) {
  Ring z2 = zn_ring(2);
  Bimodule m = zn_bimodule(2, z2, z2);
  TriangularRing t = triangular_ring(z2, m, z2);
  Elem e11 = t.ring.carrier().make({1, 0, 0});
  Elem e12 = t.ring.carrier().make({0, 1, 0});
  EXPECT_EQ(t.ring.mul(e12, e12), t.ring.zero());
  EXPECT_EQ(t.ring.mul(e11, e12), e12);
  EXPECT_EQ(t.ring.mul(e12, e11), t.ring.zero());
  EXPECT_EQ(t.ring.one(), t.ring.carrier().make({1, 0, 1}));
}

TEST(ProductBimodule, ActionsSplitSides) {
  Ring z3 = zn_ring(3);
  Bimodule m = zn_bimodule(3, z3, z3);
  Ring prod = product_ring(z3, z3);
  Bimodule pm = product_bimodule(m, prod);
  for (std::int64_t s = 0; s < 3; ++s) {
    for (std::int64_t mm = 0; mm < 3; ++mm) {
      Elem mod = pm.carrier().make({mm});
      // (1, s) m = m under the left action
      EXPECT_EQ(pm.left(prod.carrier().make({1, s}), mod), mod);
      // (0, s) m = 0
      EXPECT_EQ(pm.left(prod.carrier().make({0, s}), mod), pm.zero());
      // m (r, 1) = m
      EXPECT_EQ(pm.right(mod, prod.carrier().make({s, 1})), mod);
    }
  }
  EXPECT_TRUE(validate_bimodule(pm).ok());
}

TEST(TriangularToTrivialIso, PermutesAndPreservesStructure) {
  Ring z2 = zn_ring(2);
  Bimodule m = zn_bimodule(2, z2, z2);
  TriangularRing t = triangular_ring(z2, m, z2);
  TriangularTrivialIso iso = triangular_to_trivial_iso(t);

  // identity to identity, corner to the odd slot
  EXPECT_EQ(iso.fwd.apply(t.ring.carrier().make({1, 0, 1})), iso.te.ring.one());
  EXPECT_EQ(iso.fwd.apply(t.ring.carrier().make({0, 1, 0})),
            iso.te.ring.carrier().make({0, 0, 1}));

  RingIso ri{t.ring, iso.te.ring, iso.fwd, iso.inv};
  EXPECT_TRUE(verify_ring_iso(ri).ok());
}

TEST(UpperTriangular, OrdersAndIdentity) {
  Ring t2 = upper_triangular_tn(zn_ring(2), 2);
  EXPECT_EQ(t2.order(), 8);
  Ring t3 = upper_triangular_tn(zn_ring(2), 3);
  EXPECT_EQ(t3.order(), 64);
  for (std::int64_t i = 0; i < t3.order(); ++i) {
    Elem x = t3.carrier().element_at(i);
    EXPECT_EQ(t3.mul(t3.one(), x), x);
    EXPECT_EQ(t3.mul(x, t3.one()), x);
  }
  EXPECT_THROW(upper_triangular_tn(zn_ring(2), 12), BoundExceeded);
}

TEST(UpperTriangular, MatchesMatrixMultiplication) {
  // T2(Z3): coordinates (a00, a01, a11)
  Ring t2 = upper_triangular_tn(zn_ring(3), 2);
  auto mat = [&](std::int64_t a, std::int64_t b, std::int64_t d) {
    return t2.carrier().make({a, b, d});
  };
  // (a b; 0 d)(a' b'; 0 d') = (aa' ab'+bd'; 0 dd')
  for (std::int64_t a = 0; a < 3; ++a)
    for (std::int64_t b = 0; b < 3; ++b)
      for (std::int64_t d = 0; d < 3; ++d)
        for (std::int64_t a2 = 0; a2 < 3; ++a2)
          for (std::int64_t b2 = 0; b2 < 3; ++b2)
            for (std::int64_t d2 = 0; d2 < 3; ++d2)
              ASSERT_EQ(t2.mul(mat(a, b, d), mat(a2, b2, d2)),
                        mat(a * a2, a * b2 + b * d2, d * d2));
}

TEST(RemarkIso, SplitsFirstRow) {
  for (std::int64_t n : {2, 3}) {
    TnSplit split = remark_iso(zn_ring(2), (std::size_t)n);
    EXPECT_TRUE(verify_ring_iso(split.iso).ok()) << "n=" << n;
  }
  TnSplit s3 = remark_iso(zn_ring(3), 2);
  EXPECT_TRUE(verify_ring_iso(s3.iso).ok());
  // forward preserves 1
  EXPECT_EQ(s3.iso.fwd.apply(s3.iso.from.one()), s3.iso.to.one());
}

TEST(Torsion, Predicates) {
  EXPECT_TRUE(is_two_torsion_free(zn_ring(3)));
  EXPECT_FALSE(is_two_torsion_free(zn_ring(2)));
  EXPECT_FALSE(is_two_torsion_free(zn_ring(6)));

  EXPECT_TRUE(is_two_torsion(AbelianGroup({2})));
  EXPECT_TRUE(is_two_torsion(AbelianGroup({2, 2})));
  EXPECT_FALSE(is_two_torsion(AbelianGroup({4})));
}

TEST(Faithful, Predicates) {
  Ring z3 = zn_ring(3);
  EXPECT_EQ(is_faithful(zn_bimodule(3, z3, z3)), (std::pair<bool, bool>{true, true}));

  Ring z4 = zn_ring(4);
  EXPECT_EQ(is_faithful(zn_bimodule(2, z4, z4)), (std::pair<bool, bool>{false, false}));

  EXPECT_EQ(is_faithful(zn_bimodule(1, z3, z3)), (std::pair<bool, bool>{false, false}));
}

TEST(ValidateRing, AllBuiltinsPass) {
  std::vector<Ring> rings;
  for (std::int64_t n : {1, 2, 3, 4, 6}) rings.push_back(zn_ring(n));
  rings.push_back(product_ring(zn_ring(2), zn_ring(3)));
  rings.push_back(trivial_extension(zn_ring(3), ring_as_bimodule(zn_ring(3))).ring);
  rings.push_back(trivial_extension(zn_ring(4), zn_bimodule(2, zn_ring(4), zn_ring(4))).ring);
  {
    Ring z3 = zn_ring(3);
    rings.push_back(triangular_ring(z3, zn_bimodule(3, z3, z3), z3).ring);
  }
  rings.push_back(upper_triangular_tn(zn_ring(2), 3));
  rings.push_back(upper_triangular_tn(zn_ring(3), 2));
  for (const Ring& r : rings) {
    Verdict v = validate_ring(r);
    EXPECT_TRUE(v.ok()) << r.name() << ": " << to_string(*v.counterexample);
  }
}

TEST(TableRing, MatchesRuleBasedZn) {
  Ring z4 = zn_ring(4);
  Ring t = table_ring(z4.carrier(), z4.one(), {z4.carrier().make({1})}, "Z4//table");
  for (std::int64_t i = 0; i < 4; ++i)
    for (std::int64_t j = 0; j < 4; ++j) {
      Elem x = z4.carrier().element_at(i), y = z4.carrier().element_at(j);
      EXPECT_EQ(t.mul(x, y), z4.mul(x, y));
    }
  EXPECT_TRUE(validate_ring(t).ok());
}

TEST(TableRing, ValidationCatchesNonAssociativeTable) {
  AbelianGroup g({2, 2, 2});
  auto e = [&](std::int64_t a, std::int64_t b, std::int64_t c) { return g.make({a, b, c}); };
  // e0 is the identity; e1*e1 = e2, e1*e2 = e1, e2*e1 = e2*e2 = 0.
  // (e1 e1) e2 = e2 e2 = 0 but e1 (e1 e2) = e1 e1 = e2.
  std::vector<Elem> table = {
      e(1, 0, 0), e(0, 1, 0), e(0, 0, 1),  // e0 row
      e(0, 1, 0), e(0, 0, 1), e(0, 1, 0),  // e1 row
      e(0, 0, 1), e(0, 0, 0), e(0, 0, 0),  // e2 row
  };
  Ring bad = table_ring(g, e(1, 0, 0), table, "bad");
  Verdict v = validate_ring(bad);
  ASSERT_FALSE(v.ok());
  // the witness is genuine: re-evaluating the identity at it reproduces the gap
  const Witness& w = *v.counterexample;
  ASSERT_EQ(w.where.size(), 3u);
  EXPECT_NE(w.lhs, w.rhs);
}

TEST(ValidateBimodule, PassesGoodAndCatchesBroken) {
  Ring z4 = zn_ring(4);
  EXPECT_TRUE(validate_bimodule(ring_as_bimodule(z4)).ok());
  EXPECT_TRUE(validate_bimodule(zn_bimodule(2, z4, z4)).ok());

  Ring z2 = zn_ring(2);
  AbelianGroup m({2});
  // right action is identically zero: m*1 = 0 breaks unitarity
  Bimodule broken = table_bimodule(m, z2, z2, {m.make({1})}, {m.make({0})}, "broken");
  Verdict v = validate_bimodule(broken);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.counterexample->identity, "m*1 = m");
}

TEST(RowBimodule, ActsAsRowVectorTimesMatrix) {
  Ring z3 = zn_ring(3);
  Ring t2 = upper_triangular_tn(z3, 2);
  Bimodule rows = row_bimodule(z3, 2, t2);
  EXPECT_TRUE(validate_bimodule(rows).ok());
  // (v0,v1) * (a b; 0 d) = (v0 a, v0 b + v1 d)
  Elem v = rows.carrier().make({1, 2});
  Elem mat = t2.carrier().make({2, 1, 2});
  EXPECT_EQ(rows.right(v, mat), rows.carrier().make({2, 1 * 1 + 2 * 2}));
  EXPECT_EQ(rows.left(z3.carrier().make({2}), v), rows.carrier().make({2, 4}));
}
