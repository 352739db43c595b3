#ifndef GAMETOPO_ANALYSIS_H_
#define GAMETOPO_ANALYSIS_H_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gametopo/ordinal_game.h"

namespace gametopo {

template <typename Move>
struct DominantStrategy {
  Move move;
  // True when strictly better against both opposing moves.
  bool strict = false;
  friend bool operator==(const DominantStrategy&,
                         const DominantStrategy&) = default;
};

struct Dominance {
  std::optional<DominantStrategy<RowMove>> row;
  std::optional<DominantStrategy<ColMove>> col;

  int count() const { return (row ? 1 : 0) + (col ? 1 : 0); }
};

// Each player's security strategy. When both strategies guarantee the same
// worst-case rank, U (resp. L) is chosen and the tie flag is set.
struct Maximin {
  RowMove row = RowMove::kUp;
  int row_guarantee = 0;
  bool row_tied = false;
  ColMove col = ColMove::kLeft;
  int col_guarantee = 0;
  bool col_tied = false;
};

enum class Alignment { kPureCommon, kPureConflict, kMixed };
std::string_view AlignmentName(Alignment a);

using PayoffPair = std::pair<int, int>;  // (row rank, col rank)

struct AnalysisReport {
  std::vector<StrategyProfile> nash_profiles;
  std::vector<PayoffPair> nash_payoffs;  // sorted, unique
  Dominance dominance;
  std::vector<StrategyProfile> pareto_optimal;
  std::vector<StrategyProfile> pareto_inferior_equilibria;
  Maximin maximin;
  bool symmetric = false;
  Alignment alignment = Alignment::kMixed;
};

// Weak pure equilibria: no player can strictly improve by deviating alone.
// Returned in cell order.
std::vector<StrategyProfile> PureNash(const OrdinalGame& game);

// Sorted set of (row, col) payoff pairs at the pure equilibria.
std::vector<PayoffPair> NashPayoffs(const OrdinalGame& game);

Dominance DominantStrategies(const OrdinalGame& game);

// True if `a` is at least as good as `b` for both players and better for one.
bool ParetoDominates(const OrdinalGame& game, Cell a, Cell b);

std::vector<StrategyProfile> ParetoOptimal(const OrdinalGame& game);

Maximin ComputeMaximin(const OrdinalGame& game);

Alignment ComputeAlignment(const OrdinalGame& game);

// True if the game is unchanged, up to row/column flips, by exchanging the
// players.
bool IsSymmetric(const OrdinalGame& game);

AnalysisReport AnalyzeGame(const OrdinalGame& game);

}  // namespace gametopo

#endif  // GAMETOPO_ANALYSIS_H_
