#include "gametopo/ordinal_game.h"

#include <set>

#include <gtest/gtest.h>

#include "gametopo/errors.h"
#include "oracle.h"

namespace gametopo {
namespace {

oracle::Game ToOracle(const OrdinalGame& g) {
  return {g.row_ranks().values(), g.col_ranks().values()};
}

TEST(MakeGameTest, AcceptsPrisonersDilemma) {
  const OrdinalGame pd = MakeGame({1, 3, 2, 4}, {4, 3, 2, 1});
  EXPECT_EQ(pd, named_games::PrisonersDilemma());
  EXPECT_TRUE(pd.strict());
  EXPECT_EQ(pd.row(Cell::kDR), 4);
  EXPECT_EQ(pd.col(Cell::kUL), 4);
}

TEST(MakeGameTest, AcceptsNullGame) {
  const OrdinalGame null = MakeGame({1, 1, 1, 1}, {1, 1, 1, 1});
  EXPECT_FALSE(null.strict());
  EXPECT_EQ(null.row_ranks().distinct(), 1);
}

TEST(MakeGameTest, RejectsSparseRanking) {
  EXPECT_THROW(MakeGame({1, 3, 3, 4}, {1, 2, 3, 4}), InvalidRanking);
  EXPECT_THROW(MakeGame({1, 2, 2, 4}, {1, 2, 3, 4}), InvalidRanking);
  EXPECT_THROW(MakeGame({0, 1, 2, 3}, {1, 2, 3, 4}), InvalidRanking);
  EXPECT_THROW(MakeGame({1, 2, 3, 4}, {2, 2, 3, 4}), InvalidRanking);
  EXPECT_THROW(MakeGame({1, 2, 3, 5}, {1, 2, 3, 4}), InvalidRanking);
}

TEST(RankVectorTest, DensifyCompressesValues) {
  EXPECT_EQ(RankVector::Densify({10, -3, 10, 7}).values(),
            (std::array<int, 4>{3, 1, 3, 2}));
  EXPECT_EQ(RankVector::Densify({5, 5, 5, 5}).values(),
            (std::array<int, 4>{1, 1, 1, 1}));
}

TEST(RankVectorTest, MultiplicityAndContains) {
  const RankVector v = RankVector::FromValues({1, 1, 2, 3});
  EXPECT_EQ(v.distinct(), 3);
  EXPECT_EQ(v.multiplicity(1), 2);
  EXPECT_EQ(v.multiplicity(4), 0);
  EXPECT_TRUE(v.contains(3));
  EXPECT_FALSE(v.contains(4));
  EXPECT_FALSE(v.strict());
}

TEST(RankVectorTest, EnumerationsMatchOracle) {
  const auto all = AllRankVectors();
  const auto expected = oracle::AllDense();
  ASSERT_EQ(all.size(), 75u);
  ASSERT_EQ(expected.size(), 75u);
  std::set<std::array<int, 4>> ours;
  for (const RankVector& v : all) ours.insert(v.values());
  EXPECT_EQ(ours, (std::set<std::array<int, 4>>(expected.begin(), expected.end())));
  EXPECT_EQ(AllStrictRankVectors().size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(SymmetryTest, FlipsAndTransposeAreInvolutionsOnAllGames) {
  int checked = 0;
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      const OrdinalGame g(r, c);
      ASSERT_EQ(FlipRows(FlipRows(g)), g);
      ASSERT_EQ(FlipCols(FlipCols(g)), g);
      ASSERT_EQ(TransposePlayers(TransposePlayers(g)), g);
      ASSERT_EQ(ToOracle(TransposePlayers(g)), oracle::Transpose(ToOracle(g)));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 5625);
}

TEST(CanonicalizeTest, PrisonersDilemmaIsCanonical) {
  const CanonicalForm c = Canonicalize(named_games::PrisonersDilemma());
  EXPECT_EQ(c.game, named_games::PrisonersDilemma());
  EXPECT_EQ(c.quadrant, Quadrant::kNE);
  EXPECT_FALSE(c.row_flip);
  EXPECT_FALSE(c.col_flip);
}

TEST(CanonicalizeTest, QuadrantRecordsFlips) {
  const OrdinalGame pd = named_games::PrisonersDilemma();
  EXPECT_EQ(Canonicalize(FlipRows(pd)).quadrant, Quadrant::kSE);
  EXPECT_EQ(Canonicalize(FlipCols(pd)).quadrant, Quadrant::kNW);
  EXPECT_EQ(Canonicalize(FlipRows(FlipCols(pd))).quadrant, Quadrant::kSW);
  EXPECT_EQ(CanonicalGame(FlipRows(pd)), pd);
  EXPECT_TRUE(Canonicalize(FlipRows(pd)).row_flip);
}

TEST(CanonicalizeTest, NullGameIsFixed) {
  const CanonicalForm c = Canonicalize(named_games::Null());
  EXPECT_EQ(c.game, named_games::Null());
  EXPECT_EQ(c.quadrant, Quadrant::kNE);
}

TEST(CanonicalizeTest, StrictConventionAndFlipInvarianceOnAllGames) {
  std::set<OrdinalGame> strict_classes;
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      const OrdinalGame g(r, c);
      const OrdinalGame canon = CanonicalGame(g);
      ASSERT_EQ(CanonicalGame(canon), canon);
      ASSERT_EQ(CanonicalGame(FlipRows(g)), canon);
      ASSERT_EQ(CanonicalGame(FlipCols(g)), canon);
      if (g.strict()) {
        ASSERT_TRUE(canon.row(Cell::kUR) == 4 || canon.row(Cell::kDR) == 4);
        ASSERT_TRUE(canon.col(Cell::kUL) == 4 || canon.col(Cell::kUR) == 4);
        strict_classes.insert(canon);
      } else {
        ASSERT_EQ(oracle::LexMinUnderFlips({r.values(), c.values()}),
                  ToOracle(canon));
      }
    }
  }
  EXPECT_EQ(strict_classes.size(), 144u);
}

TEST(NamedGamesTest, ChickenAndStagHuntAreCanonical) {
  EXPECT_EQ(CanonicalGame(named_games::Chicken()), named_games::Chicken());
  EXPECT_EQ(CanonicalGame(named_games::StagHunt()), named_games::StagHunt());
}

}  // namespace
}  // namespace gametopo
