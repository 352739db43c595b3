#ifndef GAMETOPO_ORDINAL_GAME_H_
#define GAMETOPO_ORDINAL_GAME_H_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gametopo {

enum class RowMove : std::uint8_t { kUp = 0, kDown = 1 };
enum class ColMove : std::uint8_t { kLeft = 0, kRight = 1 };
enum class Player : std::uint8_t { kRow = 0, kCol = 1 };

// Cells are stored in reading order: top row left to right, then bottom row.
enum class Cell : std::uint8_t { kUL = 0, kUR = 1, kDL = 2, kDR = 3 };

inline constexpr std::array<Cell, 4> kAllCells = {Cell::kUL, Cell::kUR,
                                                  Cell::kDL, Cell::kDR};
inline constexpr std::array<Player, 2> kPlayers = {Player::kRow, Player::kCol};

constexpr int CellIndex(Cell c) { return static_cast<int>(c); }
constexpr Cell CellAt(int index) { return static_cast<Cell>(index); }

std::string_view CellName(Cell c);
std::string_view PlayerName(Player p);
std::string_view RowMoveName(RowMove m);
std::string_view ColMoveName(ColMove m);

struct StrategyProfile {
  RowMove row = RowMove::kUp;
  ColMove col = ColMove::kLeft;

  constexpr Cell cell() const {
    return CellAt(2 * static_cast<int>(row) + static_cast<int>(col));
  }
  static constexpr StrategyProfile FromCell(Cell c) {
    return {static_cast<RowMove>(CellIndex(c) / 2),
            static_cast<ColMove>(CellIndex(c) % 2)};
  }
  friend constexpr auto operator<=>(const StrategyProfile&,
                                    const StrategyProfile&) = default;
};

// One player's ranking of the four cells. Always dense: the distinct values
// are exactly 1..k. k == 4 is a strict ranking, k == 1 total indifference.
class RankVector {
 public:
  // Throws InvalidRanking unless `ranks` is dense.
  static RankVector FromValues(const std::array<int, 4>& ranks);
  // Compresses arbitrary integers into a dense ranking preserving order.
  static RankVector Densify(const std::array<int, 4>& values);

  RankVector() : ranks_{1, 1, 1, 1} {}

  int operator[](Cell c) const { return ranks_[CellIndex(c)]; }
  int at(int index) const { return ranks_.at(index); }
  const std::array<int, 4>& values() const { return ranks_; }

  int distinct() const;
  bool strict() const { return distinct() == 4; }
  int multiplicity(int value) const;
  bool contains(int value) const { return multiplicity(value) > 0; }

  friend auto operator<=>(const RankVector&, const RankVector&) = default;

 private:
  explicit RankVector(const std::array<int, 4>& ranks) : ranks_(ranks) {}
  std::array<int, 4> ranks_;
};

bool IsDenseRanking(const std::array<int, 4>& ranks);

// A 2x2 ordinal game. Ordering is lexicographic on row ranks then column
// ranks, both read in cell order.
class OrdinalGame {
 public:
  OrdinalGame() = default;
  OrdinalGame(RankVector row, RankVector col) : row_(row), col_(col) {}

  const RankVector& row_ranks() const { return row_; }
  const RankVector& col_ranks() const { return col_; }
  const RankVector& ranks(Player p) const {
    return p == Player::kRow ? row_ : col_;
  }
  int row(Cell c) const { return row_[c]; }
  int col(Cell c) const { return col_[c]; }
  int payoff(Player p, Cell c) const { return ranks(p)[c]; }

  bool strict() const { return row_.strict() && col_.strict(); }

  OrdinalGame with_ranks(Player p, RankVector ranks) const;

  friend auto operator<=>(const OrdinalGame&, const OrdinalGame&) = default;

 private:
  RankVector row_;
  RankVector col_;
};

// Validating constructor. Throws InvalidRanking.
OrdinalGame MakeGame(const std::array<int, 4>& row_ranks,
                     const std::array<int, 4>& col_ranks);

// Exchange the two rows (U <-> D).
OrdinalGame FlipRows(const OrdinalGame& game);
// Exchange the two columns (L <-> R).
OrdinalGame FlipCols(const OrdinalGame& game);
// Exchange the players' roles, mirroring cells across the main diagonal.
OrdinalGame TransposePlayers(const OrdinalGame& game);

// Cell seen from the other side of the main diagonal (UR <-> DL).
constexpr Cell MirrorCell(Cell c) {
  constexpr std::array<Cell, 4> kMirror = {Cell::kUL, Cell::kDL, Cell::kUR,
                                           Cell::kDR};
  return kMirror[CellIndex(c)];
}

enum class Quadrant : std::uint8_t { kNE, kNW, kSE, kSW };
std::string_view QuadrantName(Quadrant q);

struct CanonicalForm {
  OrdinalGame game;
  Quadrant quadrant = Quadrant::kNE;
  bool row_flip = false;
  bool col_flip = false;
};

// Strict games: flip so the row player's 4 is in column R and the column
// player's 4 is in row U; the quadrant names where the 4s were found. Games
// with ties: lexicographically least image under the flip group, quadrant NE.
CanonicalForm Canonicalize(const OrdinalGame& game);
inline OrdinalGame CanonicalGame(const OrdinalGame& game) {
  return Canonicalize(game).game;
}

// All 75 dense rank vectors, in increasing order.
const std::vector<RankVector>& AllRankVectors();
// The 24 strict rank vectors, in increasing order.
const std::vector<RankVector>& AllStrictRankVectors();

namespace named_games {
OrdinalGame PrisonersDilemma();
OrdinalGame Chicken();
OrdinalGame StagHunt();
OrdinalGame Null();
}  // namespace named_games

}  // namespace gametopo

#endif  // GAMETOPO_ORDINAL_GAME_H_
