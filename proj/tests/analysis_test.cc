#include "gametopo/analysis.h"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracle.h"

namespace gametopo {
namespace {

oracle::Game ToOracle(const OrdinalGame& g) {
  return {g.row_ranks().values(), g.col_ranks().values()};
}

std::vector<Cell> Cells(const std::vector<StrategyProfile>& profiles) {
  std::vector<Cell> out;
  for (const StrategyProfile& p : profiles) out.push_back(p.cell());
  return out;
}

const OrdinalGame kMatchingPennies = MakeGame({4, 2, 1, 3}, {2, 4, 3, 1});
const OrdinalGame kAssurance = MakeGame({1, 4, 2, 3}, {3, 4, 2, 1});

TEST(PureNashTest, PrisonersDilemma) {
  const OrdinalGame pd = named_games::PrisonersDilemma();
  EXPECT_EQ(Cells(PureNash(pd)), std::vector<Cell>{Cell::kDL});
  EXPECT_EQ(NashPayoffs(pd), (std::vector<PayoffPair>{{2, 2}}));
}

TEST(PureNashTest, MatchingPenniesHasNone) {
  EXPECT_TRUE(PureNash(kMatchingPennies).empty());
}

TEST(PureNashTest, AssuranceGameHasTwo) {
  EXPECT_EQ(Cells(PureNash(kAssurance)),
            (std::vector<Cell>{Cell::kUR, Cell::kDL}));
  EXPECT_EQ(NashPayoffs(kAssurance), (std::vector<PayoffPair>{{2, 2}, {4, 4}}));
}

TEST(PureNashTest, NullGameEveryCellIsWeakEquilibrium) {
  EXPECT_EQ(PureNash(named_games::Null()).size(), 4u);
}

TEST(PureNashTest, MatchesOracleOnAllGames) {
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      const OrdinalGame g(r, c);
      std::vector<int> expected = oracle::Nash(ToOracle(g));
      std::vector<int> actual;
      for (Cell cell : Cells(PureNash(g))) actual.push_back(CellIndex(cell));
      ASSERT_EQ(actual, expected);
      const auto pairs = oracle::NashPayoffs(ToOracle(g));
      ASSERT_EQ(NashPayoffs(g),
                std::vector<PayoffPair>(pairs.begin(), pairs.end()));
    }
  }
}

TEST(DominanceTest, PrisonersDilemma) {
  const Dominance d = DominantStrategies(named_games::PrisonersDilemma());
  ASSERT_TRUE(d.row.has_value());
  ASSERT_TRUE(d.col.has_value());
  EXPECT_EQ(d.row->move, RowMove::kDown);
  EXPECT_TRUE(d.row->strict);
  EXPECT_EQ(d.col->move, ColMove::kLeft);
  EXPECT_TRUE(d.col->strict);
  EXPECT_EQ(d.count(), 2);
}

TEST(DominanceTest, AssuranceHasNone) {
  EXPECT_EQ(DominantStrategies(kAssurance).count(), 0);
}

// D gives 3 and 4 against U's 2 and 1.
TEST(DominanceTest, RowDownFromDirectComparison) {
  const Dominance d = DominantStrategies(MakeGame({2, 1, 3, 4}, {1, 2, 3, 4}));
  ASSERT_TRUE(d.row.has_value());
  EXPECT_EQ(d.row->move, RowMove::kDown);
  EXPECT_TRUE(d.row->strict);
}

TEST(DominanceTest, WeakDominanceUnderTies) {
  const Dominance d = DominantStrategies(MakeGame({1, 2, 1, 3}, {1, 1, 1, 1}));
  EXPECT_FALSE(DominantStrategies(MakeGame({2, 3, 1, 4}, {1, 2, 3, 4})).row);
  ASSERT_TRUE(d.row.has_value());
  EXPECT_EQ(d.row->move, RowMove::kDown);
  EXPECT_FALSE(d.row->strict);
  EXPECT_FALSE(d.col.has_value());
}

TEST(DominanceTest, StrictGamePropertiesAgainstOracle) {
  for (const RankVector& r : AllStrictRankVectors()) {
    for (const RankVector& c : AllStrictRankVectors()) {
      const OrdinalGame g(r, c);
      const oracle::Game o = ToOracle(g);
      const Dominance d = DominantStrategies(g);
      const int row_dom = oracle::StrictDominantRow(o);
      const int col_dom = oracle::StrictDominantCol(o);
      ASSERT_EQ(d.row.has_value(), row_dom != 0);
      ASSERT_EQ(d.col.has_value(), col_dom != 0);
      if (d.row) ASSERT_EQ(static_cast<int>(d.row->move) + 1, row_dom);
      if (d.col) ASSERT_EQ(static_cast<int>(d.col->move) + 1, col_dom);

      const auto nash = PureNash(g);
      ASSERT_LE(nash.size(), 2u);
      if (d.count() > 0) ASSERT_EQ(nash.size(), 1u);
      if (d.count() == 2) {
        ASSERT_EQ(nash[0].row, d.row->move);
        ASSERT_EQ(nash[0].col, d.col->move);
      }
      if (nash.empty()) ASSERT_EQ(d.count(), 0);
    }
  }
}

TEST(AnalyzeTest, PrisonersDilemmaReport) {
  const AnalysisReport r = AnalyzeGame(named_games::PrisonersDilemma());
  EXPECT_EQ(Cells(r.pareto_inferior_equilibria), std::vector<Cell>{Cell::kDL});
  EXPECT_EQ(Cells(r.pareto_optimal),
            (std::vector<Cell>{Cell::kUL, Cell::kUR, Cell::kDR}));
  EXPECT_TRUE(r.symmetric);
  EXPECT_EQ(r.alignment, Alignment::kMixed);
  EXPECT_EQ(r.maximin.row, RowMove::kDown);
  EXPECT_EQ(r.maximin.row_guarantee, 2);
  EXPECT_FALSE(r.maximin.row_tied);
  EXPECT_EQ(r.maximin.col, ColMove::kLeft);
  EXPECT_EQ(r.maximin.col_guarantee, 2);
}

TEST(AnalyzeTest, FixedSumIsPureConflict) {
  const OrdinalGame g = MakeGame({4, 3, 2, 1}, {1, 2, 3, 4});
  EXPECT_EQ(ComputeAlignment(g), Alignment::kPureConflict);
}

TEST(AnalyzeTest, IdenticalInterestsArePureCommon) {
  const OrdinalGame g = MakeGame({2, 4, 1, 3}, {2, 4, 1, 3});
  const AnalysisReport r = AnalyzeGame(g);
  EXPECT_EQ(r.alignment, Alignment::kPureCommon);
  EXPECT_EQ(Cells(r.nash_profiles), std::vector<Cell>{Cell::kUR});
}

TEST(AnalyzeTest, MaximinTieReportedAndBrokenTowardUp) {
  // Both rows guarantee rank 1 for the row player.
  const Maximin m = ComputeMaximin(MakeGame({1, 3, 2, 1}, {1, 2, 3, 4}));
  EXPECT_EQ(m.row, RowMove::kUp);
  EXPECT_TRUE(m.row_tied);
  EXPECT_EQ(m.row_guarantee, 1);
}

TEST(AnalyzeTest, ParetoDefinitionMatchesBruteForce) {
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      const OrdinalGame g(r, c);
      std::vector<Cell> expected;
      for (Cell a : kAllCells) {
        bool dominated = false;
        for (Cell b : kAllCells) {
          const bool weak = g.row(b) >= g.row(a) && g.col(b) >= g.col(a);
          const bool better = g.row(b) > g.row(a) || g.col(b) > g.col(a);
          dominated = dominated || (weak && better);
        }
        if (!dominated) expected.push_back(a);
      }
      ASSERT_EQ(Cells(ParetoOptimal(g)), expected);
    }
  }
}

TEST(AnalyzeTest, TransposeCommutesWithNashAndAlignment) {
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      const OrdinalGame g(r, c);
      const OrdinalGame t = TransposePlayers(g);
      ASSERT_EQ(ComputeAlignment(t), ComputeAlignment(g));
      std::vector<Cell> mirrored;
      for (Cell cell : Cells(PureNash(g))) mirrored.push_back(MirrorCell(cell));
      std::sort(mirrored.begin(), mirrored.end());
      ASSERT_EQ(Cells(PureNash(t)), mirrored);
    }
  }
}

TEST(AnalyzeTest, PureConflictStrictGamesSumToFive) {
  for (const RankVector& r : AllStrictRankVectors()) {
    for (const RankVector& c : AllStrictRankVectors()) {
      const OrdinalGame g(r, c);
      if (ComputeAlignment(g) != Alignment::kPureConflict) continue;
      for (Cell cell : kAllCells) ASSERT_EQ(g.row(cell) + g.col(cell), 5);
    }
  }
}

TEST(AnalyzeTest, NashPayoffsAreImageOfProfiles) {
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      const OrdinalGame g(r, c);
      const AnalysisReport rep = AnalyzeGame(g);
      std::set<PayoffPair> image;
      for (const StrategyProfile& p : rep.nash_profiles) {
        image.insert({g.row(p.cell()), g.col(p.cell())});
      }
      ASSERT_EQ(rep.nash_payoffs,
                std::vector<PayoffPair>(image.begin(), image.end()));
    }
  }
}

}  // namespace
}  // namespace gametopo
