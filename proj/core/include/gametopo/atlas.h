#ifndef GAMETOPO_ATLAS_H_
#define GAMETOPO_ATLAS_H_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gametopo/ordinal_game.h"

namespace gametopo {

// Layer-row-column coordinate of a canonical strict game. Prisoner's Dilemma
// is (1,1,1).
struct StrictGameId {
  int layer = 1;  // 1..4
  int row = 1;    // 1..6
  int col = 1;    // 1..6

  bool valid() const;
  // Dense index 0..143 in (layer, row, col) order.
  int index() const { return (layer - 1) * 36 + (row - 1) * 6 + (col - 1); }
  static StrictGameId FromIndex(int index);
  // "LRC", e.g. "111".
  std::string ToString() const;
  // Accepts exactly three digits naming a valid id.
  static std::optional<StrictGameId> Parse(std::string_view text);

  friend auto operator<=>(const StrictGameId&, const StrictGameId&) = default;
};

// The swapped ranks: Low is 1<->2, Mid 2<->3, High 3<->4.
enum class SwapKind : std::uint8_t { kLow = 1, kMid = 2, kHigh = 3 };
std::string_view SwapKindName(SwapKind k);
std::optional<SwapKind> ParseSwapKind(std::string_view name);

struct SwapEdge {
  Player player = Player::kRow;
  SwapKind kind = SwapKind::kLow;
  friend auto operator<=>(const SwapEdge&, const SwapEdge&) = default;
};
std::string ToString(const SwapEdge& e);  // e.g. "row-high"

// The six edge labels in traversal order: Row before Col, Low < Mid < High.
inline constexpr std::array<SwapEdge, 6> kSwapEdges = {{
    {Player::kRow, SwapKind::kLow},
    {Player::kRow, SwapKind::kMid},
    {Player::kRow, SwapKind::kHigh},
    {Player::kCol, SwapKind::kLow},
    {Player::kCol, SwapKind::kMid},
    {Player::kCol, SwapKind::kHigh},
}};

class SwapKindSet {
 public:
  SwapKindSet() = default;
  SwapKindSet(std::initializer_list<SwapKind> kinds) {
    for (SwapKind k : kinds) insert(k);
  }
  static SwapKindSet All() {
    return {SwapKind::kLow, SwapKind::kMid, SwapKind::kHigh};
  }
  void insert(SwapKind k) { bits_ |= Bit(k); }
  bool contains(SwapKind k) const { return (bits_ & Bit(k)) != 0; }
  bool empty() const { return bits_ == 0; }

 private:
  static std::uint8_t Bit(SwapKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(k));
  }
  std::uint8_t bits_ = 0;
};

// A tile: the four games closed under both players' Low swaps. Tile row t
// holds game rows {2t-2, 2t-1} with row 0 read as 6, i.e. {6,1}, {2,3},
// {4,5}; tile columns likewise.
struct TileId {
  int layer = 1;
  int tile_row = 1;
  int tile_col = 1;

  std::string ToString() const;  // "T1.1.1"
  friend auto operator<=>(const TileId&, const TileId&) = default;
};

TileId TileOf(StrictGameId id);
std::array<StrictGameId, 4> TileMembers(TileId tile);

// Exchange ranks r and r+1 for one player and re-canonicalize. Throws NotStrict
// for games with ties.
OrdinalGame ApplySwap(const OrdinalGame& game, Player player, SwapKind kind);

struct AtlasEdge {
  StrictGameId from;
  StrictGameId to;
  SwapEdge label;
};

struct Neighbor {
  SwapEdge edge;
  StrictGameId id;
};

struct PathStep {
  SwapEdge edge;
  StrictGameId to;
};

// Two tiles on two layers joined by both players' High swaps.
struct Hotspot {
  TileId first;
  TileId second;
};

// Four tiles on four layers linked in a cycle by alternating Row-High and
// Col-High swaps. Stored in cycle order starting from the smallest tile.
struct Pipe {
  std::array<TileId, 4> tiles;
};

// The 144 canonical strict games with their swap graph. Immutable once built.
class TopologyAtlas {
 public:
  struct Entry {
    StrictGameId id;
    OrdinalGame game;
  };

  // Entries are ordered by StrictGameId.
  const std::vector<Entry>& games() const { return games_; }
  // Every labeled undirected edge once, ordered by source id then label.
  const std::vector<AtlasEdge>& edges() const { return edges_; }
  const std::vector<Hotspot>& hotspots() const { return hotspots_; }
  const std::vector<Pipe>& pipes() const { return pipes_; }

  // Throws NotStrict for games with ties.
  StrictGameId Locate(const OrdinalGame& game) const;
  // Throws std::out_of_range for ids outside the atlas.
  const OrdinalGame& Resolve(StrictGameId id) const;

  std::array<Neighbor, 6> Neighbors(StrictGameId id) const;
  StrictGameId NeighborAlong(StrictGameId id, SwapEdge edge) const;

  // Breadth-first shortest path using only `kinds`. Throws Unreachable.
  std::vector<PathStep> ShortestPath(StrictGameId from, StrictGameId to,
                                     SwapKindSet kinds) const;

  // The tile reached from `tile` by one player's High swap.
  TileId HighTileNeighbor(TileId tile, Player player) const;

 private:
  friend TopologyAtlas BuildAtlas();
  TopologyAtlas() = default;

  static std::uint32_t Key(const OrdinalGame& game);

  std::vector<Entry> games_;
  std::vector<AtlasEdge> edges_;
  std::vector<Hotspot> hotspots_;
  std::vector<Pipe> pipes_;
  std::vector<std::array<int, 6>> adjacency_;  // by index, kSwapEdges order
  std::unordered_map<std::uint32_t, int> index_of_;
};

// Enumerates the canonical strict games, assigns ids, links swaps and
// detects hotspots and pipes. Deterministic. Throws
// ConstructionInvariantViolation if the id anchors cannot be met.
TopologyAtlas BuildAtlas();

// Process-wide atlas, built on first use.
const TopologyAtlas& DefaultAtlas();

// Position of a strict rank vector in its row ordering (1..6). Rows 1..3 are
// exactly those where the player has a dominant strategy.
int RowIndexOf(const RankVector& row_ranks);
// Column index (1..6) of a column player's strict rank vector.
int ColIndexOf(const RankVector& col_ranks);
// Layer (1..4) from the positions of the two 4s of a canonical strict game.
int LayerOf(const OrdinalGame& canonical_strict_game);

}  // namespace gametopo

#endif  // GAMETOPO_ATLAS_H_
