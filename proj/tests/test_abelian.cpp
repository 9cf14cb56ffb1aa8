#include "superring/abelian.hpp"

#include <gtest/gtest.h>

#include <map>
#include <vector>

using namespace superring;

TEST(AbelianGroup, DirectSumConcatenatesFactorsAndMultipliesOrder) {
  AbelianGroup z2({2}), z2b({2});
  AbelianGroup sum = AbelianGroup::direct_sum(z2, z2b);
  EXPECT_EQ(sum.factors(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(sum.order(), 4);

  AbelianGroup z3({3}), trivial;
  EXPECT_EQ(AbelianGroup::direct_sum(z3, trivial).factors(), z3.factors());
  EXPECT_EQ(AbelianGroup::direct_sum(z3, trivial).order(), 3);

  AbelianGroup z2z3({2, 3}), z4({4});
  EXPECT_EQ(AbelianGroup::direct_sum(z2z3, z4).order(), 24);
}

TEST(AbelianGroup, ElementIndexingIsLexicographic) {
  AbelianGroup g({2, 3});
  EXPECT_EQ(g.element_at(0), g.zero());
  // last coordinate varies fastest
  EXPECT_EQ(g.element_at(1), g.make({0, 1}));
  EXPECT_EQ(g.element_at(3), g.make({1, 0}));
  for (std::int64_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index_of(g.element_at(i)), i);
  for (std::int64_t i = 0; i + 1 < g.order(); ++i)
    EXPECT_LT(g.element_at(i), g.element_at(i + 1));
}

TEST(AbelianGroup, ScaleMatchesRepeatedAddition) {
  AbelianGroup g({4, 6});
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem x = g.element_at(i);
    Elem acc = g.zero();
    for (int n = 0; n <= 13; ++n) {
      EXPECT_EQ(g.scale(n, x), acc);
      acc = g.add(acc, x);
    }
    EXPECT_EQ(g.scale(-1, x), g.neg(x));
  }
}

TEST(AbelianGroup, RejectsForeignElements) {
  AbelianGroup g({2, 3}), h({6});
  EXPECT_THROW(g.add(g.zero(), h.zero()), std::invalid_argument);
  EXPECT_THROW(g.index_of(Elem({5, 0})), std::invalid_argument);
}

TEST(GroupHom, ApplyMatchesExamples) {
  AbelianGroup z4({4});
  GroupHom id = GroupHom::identity(z4);
  EXPECT_EQ(id.apply(z4.make({3})), z4.make({3}));

  GroupHom zero = GroupHom::zero(z4, z4);
  for (std::int64_t i = 0; i < 4; ++i) EXPECT_EQ(zero.apply(z4.element_at(i)), z4.zero());

  AbelianGroup z2({2});
  GroupHom h(z2, z4, {2});  // forced by 2*2 = 0 mod 4
  EXPECT_EQ(h.apply(z2.make({1})), z4.make({2}));
}

TEST(GroupHom, OrderConstraintEnforced) {
  AbelianGroup z2({2}), z4({4});
  EXPECT_THROW(GroupHom(z2, z4, {1}), std::invalid_argument);
  EXPECT_NO_THROW(GroupHom(z2, z4, {0}));
  EXPECT_NO_THROW(GroupHom(z2, z4, {2}));
}

TEST(GroupHom, ApplyRejectsMismatchedGroup) {
  AbelianGroup z2({2}), z4({4}), z22({2, 2});
  GroupHom h(z2, z4, {2});
  EXPECT_THROW(h.apply(z4.make({3})), std::invalid_argument);
  EXPECT_THROW(h.apply(z22.zero()), std::invalid_argument);
}

TEST(HomSpace, CountsMatchExamples) {
  EXPECT_EQ(HomSpace(AbelianGroup({2}), AbelianGroup({2}), 4096).size(), 2);
  EXPECT_EQ(HomSpace(AbelianGroup({2}), AbelianGroup({3}), 4096).size(), 1);
  EXPECT_EQ(HomSpace(AbelianGroup({2, 2}), AbelianGroup({2, 2}), 4096).size(), 16);
}

TEST(HomSpace, FirstHomIsZeroAndOrderIsDeterministic) {
  AbelianGroup z2({2});
  HomSpace s(z2, z2, 4096);
  EXPECT_TRUE(s.at(0).is_zero());
  EXPECT_EQ(s.at(1), GroupHom::identity(z2));
  // two runs yield identical sequences
  HomSpace s2(z2, z2, 4096);
  for (std::int64_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.at(i), s2.at(i));
}

// Independent oracle: count additive value tables directly and compare with
// the gcd-product enumeration.
namespace {
std::int64_t count_additive_tables(const AbelianGroup& src, const AbelianGroup& dst) {
  const std::int64_t n = src.order(), m = dst.order();
  std::vector<std::int64_t> table((std::size_t)n, 0);
  std::int64_t count = 0;
  while (true) {
    bool additive = true;
    for (std::int64_t i = 0; i < n && additive; ++i)
      for (std::int64_t j = 0; j < n; ++j) {
        Elem sum = src.add(src.element_at(i), src.element_at(j));
        Elem lhs = dst.element_at(table[(std::size_t)src.index_of(sum)]);
        Elem rhs = dst.add(dst.element_at(table[(std::size_t)i]),
                           dst.element_at(table[(std::size_t)j]));
        if (lhs != rhs) {
          additive = false;
          break;
        }
      }
    if (additive) ++count;
    std::size_t p = 0;
    while (p < table.size() && ++table[p] == m) table[p++] = 0;
    if (p == table.size()) break;
  }
  return count;
}
}  // namespace

TEST(HomSpace, CountAgreesWithBruteForceTableOracle) {
  struct Case {
    AbelianGroup src, dst;
  };
  std::vector<Case> cases = {{AbelianGroup({2, 2}), AbelianGroup({2})},
                             {AbelianGroup({2}), AbelianGroup({2, 2})},
                             {AbelianGroup({4}), AbelianGroup({2})},
                             {AbelianGroup({2}), AbelianGroup({4})},
                             {AbelianGroup({6}), AbelianGroup({4})},
                             {AbelianGroup({2, 3}), AbelianGroup({6})}};
  for (const auto& c : cases) {
    EXPECT_EQ(HomSpace(c.src, c.dst, 1 << 20).size(), count_additive_tables(c.src, c.dst))
        << c.src.name() << " -> " << c.dst.name();
  }
}

TEST(HomSpace, AllEnumeratedHomsAreAdditive) {
  AbelianGroup src({2, 4}), dst({4, 2});
  HomSpace s(src, dst, 1 << 20);
  for (std::int64_t h = 0; h < s.size(); ++h) {
    GroupHom hom = s.at(h);
    for (std::int64_t i = 0; i < src.order(); ++i)
      for (std::int64_t j = 0; j < src.order(); ++j) {
        Elem x = src.element_at(i), y = src.element_at(j);
        ASSERT_EQ(hom.apply(src.add(x, y)), dst.add(hom.apply(x), hom.apply(y)));
      }
  }
}

TEST(HomSpace, BoundExceededSignalsOversizedInstance) {
  AbelianGroup big({2, 2, 2, 2, 2, 2});
  EXPECT_THROW(HomSpace(big, big, 4096), BoundExceeded);
}

TEST(GroupHom, ComposeAndAddBehaveAdditively) {
  AbelianGroup z6({6});
  HomSpace s(z6, z6, 4096);
  for (std::int64_t i = 0; i < s.size(); ++i)
    for (std::int64_t j = 0; j < s.size(); ++j) {
      GroupHom a = s.at(i), b = s.at(j);
      GroupHom ab = a.compose(b);
      GroupHom sum = a.add(b);
      for (std::int64_t x = 0; x < z6.order(); ++x) {
        Elem e = z6.element_at(x);
        EXPECT_EQ(ab.apply(e), a.apply(b.apply(e)));
        EXPECT_EQ(sum.apply(e), z6.add(a.apply(e), b.apply(e)));
      }
    }
}
