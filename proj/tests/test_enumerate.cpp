#include "superring/enumerate.hpp"

#include <gtest/gtest.h>

using namespace superring;

namespace {
TrivialExtension te_zn(std::int64_t n) {
  return trivial_extension(zn_ring(n), ring_as_bimodule(zn_ring(n)));
}
}  // namespace

TEST(EnumerateJordanSuperderivations, CountsOnSmallExtensions) {
  {
    TrivialExtension te = te_zn(2);
    GradedRing g = grade_trivial_extension(te);
    // all 4 candidates survive in each degree: everything is 2-torsion
    EXPECT_EQ(enumerate_jordan_superderivations(g, 0).size(), 4u);
    EXPECT_EQ(enumerate_jordan_superderivations(g, 1).size(), 4u);
  }
  {
    TrivialExtension te = te_zn(3);
    GradedRing g = grade_trivial_extension(te);
    // degree 0: delta = 0 forced, g free; degree 1: gamma = 0 forced, f free
    EXPECT_EQ(enumerate_jordan_superderivations(g, 0).size(), 3u);
    EXPECT_EQ(enumerate_jordan_superderivations(g, 1).size(), 3u);
  }
  {
    TrivialExtension te =
        trivial_extension(zn_ring(4), zn_bimodule(2, zn_ring(4), zn_ring(4)));
    GradedRing g = grade_trivial_extension(te);
    EXPECT_EQ(enumerate_jordan_superderivations(g, 0).size(), 4u);
    EXPECT_EQ(enumerate_jordan_superderivations(g, 1).size(), 4u);
  }
}

TEST(EnumerateJordanSuperderivations, ZeroPresentAndClosedUnderNegation) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  for (int deg : {0, 1}) {
    auto list = enumerate_jordan_superderivations(g, deg);
    bool has_zero = false;
    for (const GradedMap& d : list) has_zero |= d.hom().is_zero();
    EXPECT_TRUE(has_zero);
    for (const GradedMap& d : list) {
      GradedMap neg(g, d.hom().negate(), deg);
      EXPECT_TRUE(is_jordan_superderivation(neg).ok());
    }
  }
}

TEST(EnumerateDerivations, OnlyZeroOnZp) {
  for (std::int64_t p : {2, 3, 5}) {
    auto list = enumerate_derivations(zn_ring(p));
    ASSERT_EQ(list.size(), 1u) << "Z" << p;
    EXPECT_TRUE(list[0].is_zero());
  }
}

TEST(EnumerateDerivations, ContainedInJordanDerivations) {
  Ring t2 = upper_triangular_tn(zn_ring(2), 2);
  auto der = enumerate_derivations(t2);
  auto jordan = enumerate_jordan_derivations(t2);
  EXPECT_LE(der.size(), jordan.size());
  for (const AdditiveMap& d : der)
    EXPECT_NE(std::find(jordan.begin(), jordan.end(), d), jordan.end());
}

TEST(EnumerateJordanSuperBiderivations, CountsAndNegationClosure) {
  {
    TrivialExtension te = te_zn(2);
    GradedRing g = grade_trivial_extension(te);
    auto list = enumerate_jordan_super_biderivations(g);
    EXPECT_EQ(list.size(), 16u);
  }
  {
    TrivialExtension te = te_zn(3);
    GradedRing g = grade_trivial_extension(te);
    auto list = enumerate_jordan_super_biderivations(g);
    EXPECT_EQ(list.size(), 3u);
    bool has_zero = false;
    for (const BiadditiveMap& b : list) {
      if (b == BiadditiveMap::zero(b.src1(), b.src2(), b.dst())) has_zero = true;
      std::vector<Elem> neg_imgs;
      for (const Elem& e : b.images()) neg_imgs.push_back(b.dst().neg(e));
      BiadditiveMap neg(b.src1(), b.src2(), b.dst(), std::move(neg_imgs));
      EXPECT_TRUE(is_jordan_super_biderivation(g, neg).ok());
    }
    EXPECT_TRUE(has_zero);
  }
}

TEST(ComponentRoute, MatchesBruteForceOnTrivialExtensions) {
  std::vector<TrivialExtension> tes;
  tes.push_back(te_zn(2));
  tes.push_back(te_zn(3));
  tes.push_back(trivial_extension(zn_ring(4), zn_bimodule(2, zn_ring(4), zn_ring(4))));
  for (const TrivialExtension& te : tes) {
    GradedRing g = grade_trivial_extension(te);
    for (int deg : {0, 1}) {
      auto brute = enumerate_jordan_superderivations(g, deg);
      auto built = superderivations_from_components(te, g, deg);
      sort_canonical(brute);
      sort_canonical(built);
      ASSERT_EQ(brute.size(), built.size()) << te.ring.name() << " degree " << deg;
      for (std::size_t i = 0; i < brute.size(); ++i)
        EXPECT_EQ(brute[i], built[i]) << te.ring.name() << " degree " << deg;
    }
  }
}

TEST(ParallelFilter, ResultIndependentOfWorkerCount) {
  TrivialExtension te = te_zn(3);
  GradedRing g = grade_trivial_extension(te);
  auto seq = enumerate_jordan_superderivations(g, 0, kDefaultBound, 1);
  for (int workers : {2, 3, 8}) {
    auto par = enumerate_jordan_superderivations(g, 0, kDefaultBound, workers);
    ASSERT_EQ(seq.size(), par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) EXPECT_EQ(seq[i], par[i]);
  }
}

TEST(ParallelFilter, ChunkingMatchesSequentialOnRaggedSizes) {
  for (std::int64_t n : {0, 1, 7, 100, 101}) {
    auto pred = [](std::int64_t i) { return i % 3 == 0; };
    auto seq = parallel_filter_indices(n, 1, pred);
    for (int w : {2, 4, 16}) EXPECT_EQ(parallel_filter_indices(n, w, pred), seq);
  }
}

TEST(Enumerate, BoundExceededOnOversizedInstance) {
  Ring t3 = upper_triangular_tn(zn_ring(2), 3);
  TnSplit split = remark_iso(zn_ring(2), 3);
  GradedRing g = grade_triangular(split.tri);
  EXPECT_THROW(enumerate_jordan_superderivations(g, 0), BoundExceeded);
  EXPECT_THROW(enumerate_derivations(t3), BoundExceeded);
}
