#include "gametopo/atlas.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "gametopo/analysis.h"
#include "gametopo/errors.h"

namespace gametopo {
namespace {

Cell CellOfValue(const RankVector& v, int value) {
  for (Cell c : kAllCells) {
    if (v[c] == value) return c;
  }
  throw std::logic_error("rank value not present");
}

RankVector SwapValues(const RankVector& v, int low) {
  std::array<int, 4> out = v.values();
  for (int& x : out) {
    if (x == low) x = low + 1;
    else if (x == low + 1) x = low;
  }
  return RankVector::FromValues(out);
}

RankVector Mirror(const RankVector& v) {
  std::array<int, 4> out{};
  for (Cell c : kAllCells) out[CellIndex(c)] = v[MirrorCell(c)];
  return RankVector::FromValues(out);
}

// Row-player dominance read from the row ranks alone.
bool RowHasDominantStrategy(const RankVector& v) {
  const bool down = v[Cell::kDL] > v[Cell::kUL] && v[Cell::kDR] > v[Cell::kUR];
  const bool up = v[Cell::kUL] > v[Cell::kDL] && v[Cell::kUR] > v[Cell::kDR];
  return down || up;
}

// Orders the six strict vectors sharing a 4-cell into a hexagon: start at the
// dominant vector whose Low swap loses dominance, then alternate Mid and Low
// swaps. Rows 1-3 come out dominant, {6,1}, {2,3}, {4,5} are Low pairs.
std::array<RankVector, 6> RowCycle(Cell four_cell) {
  std::vector<RankVector> members;
  for (const RankVector& v : AllStrictRankVectors()) {
    if (v[four_cell] == 4) members.push_back(v);
  }
  std::vector<RankVector> starts;
  for (const RankVector& v : members) {
    if (RowHasDominantStrategy(v) &&
        !RowHasDominantStrategy(SwapValues(v, 1))) {
      starts.push_back(v);
    }
  }
  if (starts.size() != 1) {
    throw ConstructionInvariantViolation(
        "row ordering: expected one dominance boundary on a Low swap");
  }
  std::array<RankVector, 6> cycle;
  cycle[0] = starts.front();
  for (int i = 1; i < 6; ++i) {
    cycle[i] = SwapValues(cycle[i - 1], i % 2 == 1 ? 2 : 1);
  }
  if (SwapValues(cycle[5], 1) != cycle[0]) {
    throw ConstructionInvariantViolation("row ordering does not close");
  }
  for (int i = 0; i < 6; ++i) {
    if (RowHasDominantStrategy(cycle[i]) != (i < 3)) {
      throw ConstructionInvariantViolation(
          "row ordering: rows 1-3 must be the dominant rows");
    }
  }
  return cycle;
}

const std::map<RankVector, int>& RowIndexTable() {
  static const std::map<RankVector, int> kTable = [] {
    std::map<RankVector, int> table;
    for (Cell c : kAllCells) {
      const std::array<RankVector, 6> cycle = RowCycle(c);
      for (int i = 0; i < 6; ++i) table[cycle[i]] = i + 1;
    }
    return table;
  }();
  return kTable;
}

// Game 262 must be a Samaritan game: one equilibrium paying 4 and 3, where a
// player with a dominant strategy receives the 3.
bool IsSamaritanAnchor(const OrdinalGame& game) {
  const std::vector<StrategyProfile> nash = PureNash(game);
  if (nash.size() != 1) return false;
  const Cell eq = nash.front().cell();
  const Dominance dom = DominantStrategies(game);
  const bool row_three = dom.row && game.row(eq) == 3 && game.col(eq) == 4;
  const bool col_three = dom.col && game.col(eq) == 3 && game.row(eq) == 4;
  return row_three || col_three;
}

}  // namespace

bool StrictGameId::valid() const {
  return layer >= 1 && layer <= 4 && row >= 1 && row <= 6 && col >= 1 &&
         col <= 6;
}

StrictGameId StrictGameId::FromIndex(int index) {
  if (index < 0 || index >= 144) throw std::out_of_range("game index");
  return {index / 36 + 1, (index % 36) / 6 + 1, index % 6 + 1};
}

std::string StrictGameId::ToString() const {
  return std::to_string(layer) + std::to_string(row) + std::to_string(col);
}

std::optional<StrictGameId> StrictGameId::Parse(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
  }
  StrictGameId id{text[0] - '0', text[1] - '0', text[2] - '0'};
  if (!id.valid()) return std::nullopt;
  return id;
}

std::string_view SwapKindName(SwapKind k) {
  switch (k) {
    case SwapKind::kLow: return "low";
    case SwapKind::kMid: return "mid";
    case SwapKind::kHigh: return "high";
  }
  return "?";
}

std::optional<SwapKind> ParseSwapKind(std::string_view name) {
  if (name == "low") return SwapKind::kLow;
  if (name == "mid") return SwapKind::kMid;
  if (name == "high") return SwapKind::kHigh;
  return std::nullopt;
}

std::string ToString(const SwapEdge& e) {
  return std::string(PlayerName(e.player)) + "-" +
         std::string(SwapKindName(e.kind));
}

std::string TileId::ToString() const {
  return "T" + std::to_string(layer) + "." + std::to_string(tile_row) + "." +
         std::to_string(tile_col);
}

TileId TileOf(StrictGameId id) {
  return {id.layer, (id.row % 6) / 2 + 1, (id.col % 6) / 2 + 1};
}

std::array<StrictGameId, 4> TileMembers(TileId tile) {
  auto first = [](int t) { return t == 1 ? 6 : 2 * t - 2; };
  auto second = [](int t) { return 2 * t - 1; };
  const int r0 = first(tile.tile_row), r1 = second(tile.tile_row);
  const int c0 = first(tile.tile_col), c1 = second(tile.tile_col);
  std::array<StrictGameId, 4> out = {{{tile.layer, r0, c0},
                                      {tile.layer, r0, c1},
                                      {tile.layer, r1, c0},
                                      {tile.layer, r1, c1}}};
  std::sort(out.begin(), out.end());
  return out;
}

int RowIndexOf(const RankVector& row_ranks) {
  if (!row_ranks.strict()) throw NotStrict("row index needs a strict ranking");
  return RowIndexTable().at(row_ranks);
}

int ColIndexOf(const RankVector& col_ranks) {
  if (!col_ranks.strict()) {
    throw NotStrict("column index needs a strict ranking");
  }
  return RowIndexTable().at(Mirror(col_ranks));
}

int LayerOf(const OrdinalGame& game) {
  const Cell row_four = CellOfValue(game.row_ranks(), 4);
  const Cell col_four = CellOfValue(game.col_ranks(), 4);
  if (row_four == Cell::kUR && col_four == Cell::kUR) return 3;
  if (row_four == Cell::kDR && col_four == Cell::kUL) return 1;
  if (row_four == Cell::kDR && col_four == Cell::kUR) return 2;
  if (row_four == Cell::kUR && col_four == Cell::kUL) return 4;
  throw std::invalid_argument("LayerOf requires a canonical strict game");
}

OrdinalGame ApplySwap(const OrdinalGame& game, Player player, SwapKind kind) {
  if (!game.strict()) {
    throw NotStrict("swaps apply to strict games; use half-swaps for ties");
  }
  const RankVector swapped =
      SwapValues(game.ranks(player), static_cast<int>(kind));
  return CanonicalGame(game.with_ranks(player, swapped));
}

std::uint32_t TopologyAtlas::Key(const OrdinalGame& game) {
  std::uint32_t key = 0;
  for (Cell c : kAllCells) key = key * 8 + static_cast<std::uint32_t>(game.row(c));
  for (Cell c : kAllCells) key = key * 8 + static_cast<std::uint32_t>(game.col(c));
  return key;
}

StrictGameId TopologyAtlas::Locate(const OrdinalGame& game) const {
  if (!game.strict()) throw NotStrict("only strict games have atlas ids");
  const auto it = index_of_.find(Key(CanonicalGame(game)));
  if (it == index_of_.end()) {
    throw std::logic_error("canonical strict game missing from atlas");
  }
  return StrictGameId::FromIndex(it->second);
}

const OrdinalGame& TopologyAtlas::Resolve(StrictGameId id) const {
  if (!id.valid()) throw std::out_of_range("invalid game id");
  return games_[id.index()].game;
}

std::array<Neighbor, 6> TopologyAtlas::Neighbors(StrictGameId id) const {
  if (!id.valid()) throw std::out_of_range("invalid game id");
  std::array<Neighbor, 6> out;
  for (int e = 0; e < 6; ++e) {
    out[e] = {kSwapEdges[e],
              StrictGameId::FromIndex(adjacency_[id.index()][e])};
  }
  return out;
}

StrictGameId TopologyAtlas::NeighborAlong(StrictGameId id,
                                          SwapEdge edge) const {
  if (!id.valid()) throw std::out_of_range("invalid game id");
  const auto pos = std::find(kSwapEdges.begin(), kSwapEdges.end(), edge);
  return StrictGameId::FromIndex(
      adjacency_[id.index()][std::distance(kSwapEdges.begin(), pos)]);
}

std::vector<PathStep> TopologyAtlas::ShortestPath(StrictGameId from,
                                                  StrictGameId to,
                                                  SwapKindSet kinds) const {
  if (!from.valid() || !to.valid()) throw std::out_of_range("invalid game id");
  if (kinds.empty()) throw std::invalid_argument("no swap kinds allowed");
  constexpr int kUnvisited = -1;
  std::vector<int> parent(games_.size(), kUnvisited);
  std::vector<int> via(games_.size(), -1);
  std::deque<int> queue;
  parent[from.index()] = from.index();
  queue.push_back(from.index());
  while (!queue.empty() && parent[to.index()] == kUnvisited) {
    const int node = queue.front();
    queue.pop_front();
    for (int e = 0; e < 6; ++e) {
      if (!kinds.contains(kSwapEdges[e].kind)) continue;
      const int next = adjacency_[node][e];
      if (parent[next] != kUnvisited) continue;
      parent[next] = node;
      via[next] = e;
      queue.push_back(next);
    }
  }
  if (parent[to.index()] == kUnvisited) {
    throw Unreachable("no path from " + from.ToString() + " to " +
                      to.ToString() + " with the allowed swap kinds");
  }
  std::vector<PathStep> path;
  for (int node = to.index(); node != from.index(); node = parent[node]) {
    path.push_back({kSwapEdges[via[node]], StrictGameId::FromIndex(node)});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

TileId TopologyAtlas::HighTileNeighbor(TileId tile, Player player) const {
  const StrictGameId any = TileMembers(tile).front();
  return TileOf(NeighborAlong(any, {player, SwapKind::kHigh}));
}

TopologyAtlas BuildAtlas() {
  TopologyAtlas atlas;

  std::set<OrdinalGame> canonical;
  for (const RankVector& r : AllStrictRankVectors()) {
    for (const RankVector& c : AllStrictRankVectors()) {
      canonical.insert(CanonicalGame(OrdinalGame(r, c)));
    }
  }
  if (canonical.size() != 144) {
    throw ConstructionInvariantViolation("expected 144 canonical strict games");
  }

  std::vector<std::optional<OrdinalGame>> slots(144);
  for (const OrdinalGame& g : canonical) {
    const StrictGameId id{LayerOf(g), RowIndexOf(g.row_ranks()),
                          ColIndexOf(g.col_ranks())};
    auto& slot = slots[id.index()];
    if (slot) {
      throw ConstructionInvariantViolation("two games share id " +
                                           id.ToString());
    }
    slot = g;
  }
  atlas.games_.reserve(144);
  for (int i = 0; i < 144; ++i) {
    atlas.games_.push_back({StrictGameId::FromIndex(i), *slots[i]});
    atlas.index_of_[TopologyAtlas::Key(*slots[i])] = i;
  }

  if (atlas.Resolve({1, 1, 1}) != named_games::PrisonersDilemma()) {
    throw ConstructionInvariantViolation("Prisoner's Dilemma must be 111");
  }
  if (!IsSamaritanAnchor(atlas.Resolve({2, 6, 2}))) {
    throw ConstructionInvariantViolation("game 262 must be a Samaritan game");
  }

  atlas.adjacency_.assign(144, {});
  for (int i = 0; i < 144; ++i) {
    const OrdinalGame& g = atlas.games_[i].game;
    for (int e = 0; e < 6; ++e) {
      const OrdinalGame next =
          ApplySwap(g, kSwapEdges[e].player, kSwapEdges[e].kind);
      const int j = atlas.index_of_.at(TopologyAtlas::Key(next));
      if (j == i) {
        throw ConstructionInvariantViolation("swap produced a self-loop");
      }
      atlas.adjacency_[i][e] = j;
    }
  }
  for (int i = 0; i < 144; ++i) {
    for (int e = 0; e < 6; ++e) {
      const int j = atlas.adjacency_[i][e];
      if (atlas.adjacency_[j][e] != i) {
        throw ConstructionInvariantViolation("swap edges must be symmetric");
      }
      if (i < j) {
        atlas.edges_.push_back({StrictGameId::FromIndex(i),
                                StrictGameId::FromIndex(j), kSwapEdges[e]});
      }
    }
  }

  // Lift High swaps to tiles, then split the tile graph into 2-cycles
  // (hotspots) and 4-cycles (pipes).
  std::vector<TileId> tiles;
  for (int layer = 1; layer <= 4; ++layer)
    for (int tr = 1; tr <= 3; ++tr)
      for (int tc = 1; tc <= 3; ++tc) tiles.push_back({layer, tr, tc});
  for (const TileId& t : tiles) {
    for (Player p : kPlayers) {
      std::set<TileId> images;
      for (const StrictGameId& member : TileMembers(t)) {
        images.insert(TileOf(atlas.NeighborAlong(member, {p, SwapKind::kHigh})));
      }
      if (images.size() != 1) {
        throw ConstructionInvariantViolation(
            "High swaps must map tiles onto tiles");
      }
    }
  }
  std::set<TileId> seen;
  for (const TileId& t : tiles) {
    if (seen.count(t)) continue;
    const TileId by_row = atlas.HighTileNeighbor(t, Player::kRow);
    const TileId by_col = atlas.HighTileNeighbor(t, Player::kCol);
    if (by_row == by_col) {
      atlas.hotspots_.push_back({t, by_row});
      seen.insert(t);
      seen.insert(by_row);
      continue;
    }
    const TileId across = atlas.HighTileNeighbor(by_row, Player::kCol);
    if (atlas.HighTileNeighbor(by_col, Player::kRow) != across) {
      throw ConstructionInvariantViolation("High tile swaps must commute");
    }
    atlas.pipes_.push_back({{t, by_row, across, by_col}});
    seen.insert({t, by_row, across, by_col});
  }
  return atlas;
}

const TopologyAtlas& DefaultAtlas() {
  static const TopologyAtlas kAtlas = BuildAtlas();
  return kAtlas;
}

}  // namespace gametopo
