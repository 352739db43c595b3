#include "gametopo/analysis.h"

#include <algorithm>

namespace gametopo {
namespace {

// The cell reached when `p` deviates alone from `c`.
Cell Deviation(Cell c, Player p) {
  const int i = CellIndex(c);
  return p == Player::kRow ? CellAt(i ^ 2) : CellAt(i ^ 1);
}

Cell At(RowMove r, ColMove c) { return StrategyProfile{r, c}.cell(); }

}  // namespace

std::string_view AlignmentName(Alignment a) {
  switch (a) {
    case Alignment::kPureCommon: return "pure-common";
    case Alignment::kPureConflict: return "pure-conflict";
    case Alignment::kMixed: return "mixed";
  }
  return "?";
}

std::vector<StrategyProfile> PureNash(const OrdinalGame& game) {
  std::vector<StrategyProfile> out;
  for (Cell c : kAllCells) {
    const bool row_ok =
        game.row(Deviation(c, Player::kRow)) <= game.row(c);
    const bool col_ok =
        game.col(Deviation(c, Player::kCol)) <= game.col(c);
    if (row_ok && col_ok) out.push_back(StrategyProfile::FromCell(c));
  }
  return out;
}

std::vector<PayoffPair> NashPayoffs(const OrdinalGame& game) {
  std::vector<PayoffPair> out;
  for (const StrategyProfile& p : PureNash(game)) {
    out.emplace_back(game.row(p.cell()), game.col(p.cell()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Dominance DominantStrategies(const OrdinalGame& game) {
  Dominance d;
  for (RowMove m : {RowMove::kUp, RowMove::kDown}) {
    const RowMove other = m == RowMove::kUp ? RowMove::kDown : RowMove::kUp;
    bool weak = true;
    int strictly_better = 0;
    for (ColMove c : {ColMove::kLeft, ColMove::kRight}) {
      const int mine = game.row(At(m, c));
      const int theirs = game.row(At(other, c));
      weak = weak && mine >= theirs;
      strictly_better += mine > theirs ? 1 : 0;
    }
    if (weak && strictly_better > 0) {
      d.row = DominantStrategy<RowMove>{m, strictly_better == 2};
    }
  }
  for (ColMove m : {ColMove::kLeft, ColMove::kRight}) {
    const ColMove other = m == ColMove::kLeft ? ColMove::kRight : ColMove::kLeft;
    bool weak = true;
    int strictly_better = 0;
    for (RowMove r : {RowMove::kUp, RowMove::kDown}) {
      const int mine = game.col(At(r, m));
      const int theirs = game.col(At(r, other));
      weak = weak && mine >= theirs;
      strictly_better += mine > theirs ? 1 : 0;
    }
    if (weak && strictly_better > 0) {
      d.col = DominantStrategy<ColMove>{m, strictly_better == 2};
    }
  }
  return d;
}

bool ParetoDominates(const OrdinalGame& game, Cell a, Cell b) {
  const bool weak = game.row(a) >= game.row(b) && game.col(a) >= game.col(b);
  const bool strict = game.row(a) > game.row(b) || game.col(a) > game.col(b);
  return weak && strict;
}

std::vector<StrategyProfile> ParetoOptimal(const OrdinalGame& game) {
  std::vector<StrategyProfile> out;
  for (Cell c : kAllCells) {
    const bool dominated = std::any_of(
        kAllCells.begin(), kAllCells.end(),
        [&](Cell other) { return ParetoDominates(game, other, c); });
    if (!dominated) out.push_back(StrategyProfile::FromCell(c));
  }
  return out;
}

Maximin ComputeMaximin(const OrdinalGame& game) {
  Maximin m;
  const int up = std::min(game.row(Cell::kUL), game.row(Cell::kUR));
  const int down = std::min(game.row(Cell::kDL), game.row(Cell::kDR));
  m.row = down > up ? RowMove::kDown : RowMove::kUp;
  m.row_guarantee = std::max(up, down);
  m.row_tied = up == down;

  const int left = std::min(game.col(Cell::kUL), game.col(Cell::kDL));
  const int right = std::min(game.col(Cell::kUR), game.col(Cell::kDR));
  m.col = right > left ? ColMove::kRight : ColMove::kLeft;
  m.col_guarantee = std::max(left, right);
  m.col_tied = left == right;
  return m;
}

Alignment ComputeAlignment(const OrdinalGame& game) {
  if (game.row_ranks() == game.col_ranks()) return Alignment::kPureCommon;
  const int sum = game.row(Cell::kUL) + game.col(Cell::kUL);
  const bool constant_sum =
      std::all_of(kAllCells.begin(), kAllCells.end(), [&](Cell c) {
        return game.row(c) + game.col(c) == sum;
      });
  return constant_sum ? Alignment::kPureConflict : Alignment::kMixed;
}

bool IsSymmetric(const OrdinalGame& game) {
  return CanonicalGame(TransposePlayers(game)) == CanonicalGame(game);
}

AnalysisReport AnalyzeGame(const OrdinalGame& game) {
  AnalysisReport report;
  report.nash_profiles = PureNash(game);
  report.nash_payoffs = NashPayoffs(game);
  report.dominance = DominantStrategies(game);
  report.pareto_optimal = ParetoOptimal(game);
  for (const StrategyProfile& p : report.nash_profiles) {
    const bool optimal =
        std::find(report.pareto_optimal.begin(), report.pareto_optimal.end(),
                  p) != report.pareto_optimal.end();
    if (!optimal) report.pareto_inferior_equilibria.push_back(p);
  }
  report.maximin = ComputeMaximin(game);
  report.symmetric = IsSymmetric(game);
  report.alignment = ComputeAlignment(game);
  return report;
}

}  // namespace gametopo
