#ifndef GAMETOPO_TIES_H_
#define GAMETOPO_TIES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gametopo/atlas.h"
#include "gametopo/ordinal_game.h"

namespace gametopo {

// One player's tie pattern. Letters follow the A-H naming; labels give the
// number of distinct values with a subscript for where the ties sit:
//   A 1        all tied
//   B 2_1      1=2=3<4        C 2_2  1=2<3=4       E 2_3  1<2=3=4
//   D 3_1      1=2<3<4        F 3_2  1<2=3<4       G 3_3  1<2<3=4
//   H 4        strict
struct PreferenceClass {
  char letter = 'H';
  std::string_view label = "4";
  // Position on the natural-order axis (1, 2_1, 2_2, 2_3, 3_1, 3_2, 3_3, 4),
  // counted from 1.
  int axis_index = 8;

  friend bool operator==(const PreferenceClass& a, const PreferenceClass& b) {
    return a.letter == b.letter;
  }
};

PreferenceClass ClassifyPreferences(const RankVector& ranks);
// The class at axis position 1..8.
PreferenceClass PreferenceClassAt(int axis_index);
std::optional<PreferenceClass> PreferenceClassFromLabel(std::string_view label);

// Merge ranks r and r+1 of one player (a half-swap) and canonicalize. Throws
// RankAbsent if either rank is missing for that player.
OrdinalGame MakeTie(const OrdinalGame& game, Player player, int lower_rank);

// Every canonical game obtained by splitting the group tied at `value` into a
// lower and an upper part, i.e. every game that make_tie maps back onto
// `game`. Sorted and unique. Throws RankNotTied unless at least
// two cells share `value`.
std::vector<OrdinalGame> BreakTie(const OrdinalGame& game, Player player,
                                  int value);

enum class HalfSwapMove { kMakeTie, kBreakTie };
std::string_view HalfSwapMoveName(HalfSwapMove m);

struct HalfSwapStep {
  HalfSwapMove move = HalfSwapMove::kMakeTie;
  Player player = Player::kRow;
  int rank = 1;  // lower merged rank for make, tied value for break
  OrdinalGame result;
};

// Counts of canonical games (rows/columns flipped but players kept) by the
// pair of preference classes, indexed by axis position minus one.
struct TiesCensus {
  std::array<std::array<int, 8>, 8> counts{};
  int total = 0;
  // Also identifying games that differ only by exchanging the players.
  int player_swap_total = 0;

  int at(char row_letter, char col_letter) const;
  int row_sum(char row_letter) const;
};

struct NaturalOrderCoordinate {
  int row_class_index = 8;  // 1..8, axis order
  int col_class_index = 8;
  int position = 1;    // 1-based order inside the block
  int block_size = 1;
  // Layout inside the block, x growing east and y north. For strict games
  // this is the 12x12 atlas layout with Prisoner's Dilemma at the far
  // northeast; other blocks fill a near-square grid row by row.
  int x = 0;
  int y = 0;
  int width = 1;
  int height = 1;
};

// All 1413 canonical ordinal games with the half-swap moves between them.
class TieLattice {
 public:
  struct Edge {
    HalfSwapMove move;
    Player player;
    int rank;
    int target;
  };

  const std::vector<OrdinalGame>& games() const { return games_; }
  // Outgoing moves of node i, ordered by target game then label.
  const std::vector<Edge>& moves(int node) const { return adjacency_.at(node); }
  int IndexOf(const OrdinalGame& game) const;  // canonicalizes
  std::size_t edge_count() const;

  const TiesCensus& census() const { return census_; }

  // Fewest make/break moves from one game to another; ties broken by visiting
  // smaller canonical games first.
  std::vector<HalfSwapStep> HalfSwapPath(const OrdinalGame& from,
                                         const OrdinalGame& to) const;

  NaturalOrderCoordinate NaturalOrder(const OrdinalGame& game) const;
  // Inverse of NaturalOrder's (class pair, position).
  std::optional<OrdinalGame> GameAt(int row_class_index, int col_class_index,
                                    int position) const;

 private:
  friend TieLattice BuildTieLattice(const TopologyAtlas& atlas);
  TieLattice() = default;

  std::vector<OrdinalGame> games_;
  std::vector<std::vector<Edge>> adjacency_;
  std::vector<int> position_;  // 1-based position in block, by node
  std::array<std::array<std::vector<int>, 8>, 8> blocks_;
  std::vector<StrictGameId> strict_ids_;  // valid only for strict nodes
  TiesCensus census_;
};

// Canonical games with ties, sorted: the 1413 flip-group classes.
std::vector<OrdinalGame> EnumerateCanonicalGames();

TiesCensus EnumerateTiesCensus();

TieLattice BuildTieLattice(const TopologyAtlas& atlas);
const TieLattice& DefaultTieLattice();

namespace named_games {
// Both players 1=2=3<4 with the 4s in one cell.
OrdinalGame UtterHarmony();
}  // namespace named_games

}  // namespace gametopo

#endif  // GAMETOPO_TIES_H_
