#include "gametopo/ties.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "gametopo/errors.h"

namespace gametopo {
namespace {

constexpr std::array<PreferenceClass, 8> kAxis = {{
    {'A', "1", 1},
    {'B', "2_1", 2},
    {'C', "2_2", 3},
    {'E', "2_3", 4},
    {'D', "3_1", 5},
    {'F', "3_2", 6},
    {'G', "3_3", 7},
    {'H', "4", 8},
}};

int AxisOfLetter(char letter) {
  for (const PreferenceClass& c : kAxis) {
    if (c.letter == letter) return c.axis_index;
  }
  throw std::invalid_argument(std::string("unknown preference class ") +
                              letter);
}

}  // namespace

PreferenceClass ClassifyPreferences(const RankVector& ranks) {
  // Multiplicities of ranks 1..k spell the pattern.
  std::string pattern;
  for (int v = 1; v <= ranks.distinct(); ++v) {
    pattern += static_cast<char>('0' + ranks.multiplicity(v));
  }
  static const std::map<std::string, char> kByPattern = {
      {"4", 'A'},   {"31", 'B'},  {"22", 'C'},  {"13", 'E'},
      {"211", 'D'}, {"121", 'F'}, {"112", 'G'}, {"1111", 'H'},
  };
  return kAxis[AxisOfLetter(kByPattern.at(pattern)) - 1];
}

PreferenceClass PreferenceClassAt(int axis_index) {
  if (axis_index < 1 || axis_index > 8) {
    throw std::out_of_range("preference axis index");
  }
  return kAxis[axis_index - 1];
}

std::optional<PreferenceClass> PreferenceClassFromLabel(std::string_view label) {
  for (const PreferenceClass& c : kAxis) {
    if (c.label == label) return c;
  }
  return std::nullopt;
}

OrdinalGame MakeTie(const OrdinalGame& game, Player player, int lower_rank) {
  const RankVector& ranks = game.ranks(player);
  if (!ranks.contains(lower_rank) || !ranks.contains(lower_rank + 1)) {
    throw RankAbsent("ranks " + std::to_string(lower_rank) + " and " +
                     std::to_string(lower_rank + 1) + " are not both held by " +
                     std::string(PlayerName(player)));
  }
  std::array<int, 4> merged = ranks.values();
  for (int& r : merged) {
    if (r > lower_rank) --r;
  }
  return CanonicalGame(game.with_ranks(player, RankVector::FromValues(merged)));
}

std::vector<OrdinalGame> BreakTie(const OrdinalGame& game, Player player,
                                  int value) {
  const RankVector& ranks = game.ranks(player);
  if (ranks.multiplicity(value) < 2) {
    throw RankNotTied("value " + std::to_string(value) + " is not tied for " +
                      std::string(PlayerName(player)));
  }
  std::vector<Cell> group;
  for (Cell c : kAllCells) {
    if (ranks[c] == value) group.push_back(c);
  }
  std::set<OrdinalGame> out;
  // Every proper nonempty subset of the group moves half a step up (doubled
  // scale), which is exactly the set of games that merge back by make_tie.
  const unsigned full = (1u << group.size()) - 1;
  for (unsigned upper = 1; upper < full; ++upper) {
    std::array<int, 4> scaled{};
    for (Cell c : kAllCells) scaled[CellIndex(c)] = 2 * ranks[c];
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (upper & (1u << k)) ++scaled[CellIndex(group[k])];
    }
    out.insert(CanonicalGame(
        game.with_ranks(player, RankVector::Densify(scaled))));
  }
  return {out.begin(), out.end()};
}

std::string_view HalfSwapMoveName(HalfSwapMove m) {
  return m == HalfSwapMove::kMakeTie ? "make-tie" : "break-tie";
}

int TiesCensus::at(char row_letter, char col_letter) const {
  return counts[AxisOfLetter(row_letter) - 1][AxisOfLetter(col_letter) - 1];
}

int TiesCensus::row_sum(char row_letter) const {
  int sum = 0;
  for (int v : counts[AxisOfLetter(row_letter) - 1]) sum += v;
  return sum;
}

std::vector<OrdinalGame> EnumerateCanonicalGames() {
  std::set<OrdinalGame> canonical;
  for (const RankVector& r : AllRankVectors()) {
    for (const RankVector& c : AllRankVectors()) {
      canonical.insert(CanonicalGame(OrdinalGame(r, c)));
    }
  }
  return {canonical.begin(), canonical.end()};
}

TiesCensus EnumerateTiesCensus() {
  TiesCensus census;
  std::set<OrdinalGame> up_to_players;
  for (const OrdinalGame& g : EnumerateCanonicalGames()) {
    const int r = ClassifyPreferences(g.row_ranks()).axis_index - 1;
    const int c = ClassifyPreferences(g.col_ranks()).axis_index - 1;
    ++census.counts[r][c];
    ++census.total;
    up_to_players.insert(std::min(g, CanonicalGame(TransposePlayers(g))));
  }
  census.player_swap_total = static_cast<int>(up_to_players.size());
  return census;
}

int TieLattice::IndexOf(const OrdinalGame& game) const {
  const OrdinalGame canonical = CanonicalGame(game);
  const auto it = std::lower_bound(games_.begin(), games_.end(), canonical);
  if (it == games_.end() || *it != canonical) {
    throw std::logic_error("canonical game missing from lattice");
  }
  return static_cast<int>(std::distance(games_.begin(), it));
}

std::size_t TieLattice::edge_count() const {
  std::size_t directed = 0;
  for (const auto& moves : adjacency_) directed += moves.size();
  return directed / 2;
}

std::vector<HalfSwapStep> TieLattice::HalfSwapPath(const OrdinalGame& from,
                                                   const OrdinalGame& to) const {
  const int source = IndexOf(from);
  const int target = IndexOf(to);
  std::vector<int> parent(games_.size(), -1);
  std::vector<const Edge*> via(games_.size(), nullptr);
  std::deque<int> queue{source};
  parent[source] = source;
  while (!queue.empty() && parent[target] < 0) {
    const int node = queue.front();
    queue.pop_front();
    for (const Edge& e : adjacency_[node]) {
      if (parent[e.target] >= 0) continue;
      parent[e.target] = node;
      via[e.target] = &e;
      queue.push_back(e.target);
    }
  }
  if (parent[target] < 0) {
    throw std::logic_error("half-swap lattice is disconnected");
  }
  std::vector<HalfSwapStep> path;
  for (int node = target; node != source; node = parent[node]) {
    const Edge& e = *via[node];
    path.push_back({e.move, e.player, e.rank, games_[node]});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

NaturalOrderCoordinate TieLattice::NaturalOrder(const OrdinalGame& game) const {
  const int node = IndexOf(game);
  const OrdinalGame& g = games_[node];
  NaturalOrderCoordinate coord;
  coord.row_class_index = ClassifyPreferences(g.row_ranks()).axis_index;
  coord.col_class_index = ClassifyPreferences(g.col_ranks()).axis_index;
  coord.position = position_[node];
  coord.block_size = static_cast<int>(
      blocks_[coord.row_class_index - 1][coord.col_class_index - 1].size());

  if (g.strict()) {
    // Layers as quadrants: 1 NE, 2 NW, 3 SW, 4 SE; inside a layer row 1 is
    // north and column 1 east, so 111 sits in the far northeast cell.
    const StrictGameId id = strict_ids_[node];
    const int east = (id.layer == 1 || id.layer == 4) ? 6 : 0;
    const int north = (id.layer == 1 || id.layer == 2) ? 6 : 0;
    coord.x = east + 6 - id.col;
    coord.y = north + 6 - id.row;
    coord.width = coord.height = 12;
  } else {
    const int width = static_cast<int>(
        std::ceil(std::sqrt(static_cast<double>(coord.block_size))));
    coord.width = width;
    coord.height = (coord.block_size + width - 1) / width;
    coord.x = (coord.position - 1) % width;
    coord.y = (coord.position - 1) / width;
  }
  return coord;
}

std::optional<OrdinalGame> TieLattice::GameAt(int row_class_index,
                                              int col_class_index,
                                              int position) const {
  if (row_class_index < 1 || row_class_index > 8 || col_class_index < 1 ||
      col_class_index > 8) {
    return std::nullopt;
  }
  const std::vector<int>& block =
      blocks_[row_class_index - 1][col_class_index - 1];
  if (position < 1 || position > static_cast<int>(block.size())) {
    return std::nullopt;
  }
  return games_[block[position - 1]];
}

TieLattice BuildTieLattice(const TopologyAtlas& atlas) {
  TieLattice lattice;
  lattice.games_ = EnumerateCanonicalGames();
  lattice.census_ = EnumerateTiesCensus();
  const int n = static_cast<int>(lattice.games_.size());

  lattice.adjacency_.resize(n);
  for (int i = 0; i < n; ++i) {
    const OrdinalGame& g = lattice.games_[i];
    std::map<int, TieLattice::Edge> by_target;
    auto add = [&](HalfSwapMove move, Player p, int rank, const OrdinalGame& h) {
      const int j = lattice.IndexOf(h);
      by_target.try_emplace(j, TieLattice::Edge{move, p, rank, j});
    };
    for (Player p : kPlayers) {
      const RankVector& ranks = g.ranks(p);
      for (int r = 1; r < ranks.distinct(); ++r) {
        add(HalfSwapMove::kMakeTie, p, r, MakeTie(g, p, r));
      }
      for (int v = 1; v <= ranks.distinct(); ++v) {
        if (ranks.multiplicity(v) < 2) continue;
        for (const OrdinalGame& h : BreakTie(g, p, v)) {
          add(HalfSwapMove::kBreakTie, p, v, h);
        }
      }
    }
    for (const auto& [target, edge] : by_target) {
      lattice.adjacency_[i].push_back(edge);
    }
  }

  lattice.strict_ids_.assign(n, StrictGameId{});
  lattice.position_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const OrdinalGame& g = lattice.games_[i];
    const int r = ClassifyPreferences(g.row_ranks()).axis_index - 1;
    const int c = ClassifyPreferences(g.col_ranks()).axis_index - 1;
    lattice.blocks_[r][c].push_back(i);
    if (g.strict()) lattice.strict_ids_[i] = atlas.Locate(g);
  }
  // The strict block follows atlas id order; others stay lexicographic.
  auto& strict_block = lattice.blocks_[7][7];
  std::sort(strict_block.begin(), strict_block.end(), [&](int a, int b) {
    return lattice.strict_ids_[a] < lattice.strict_ids_[b];
  });
  for (auto& row : lattice.blocks_) {
    for (auto& block : row) {
      for (std::size_t k = 0; k < block.size(); ++k) {
        lattice.position_[block[k]] = static_cast<int>(k) + 1;
      }
    }
  }
  return lattice;
}

const TieLattice& DefaultTieLattice() {
  static const TieLattice kLattice = BuildTieLattice(DefaultAtlas());
  return kLattice;
}

namespace named_games {

OrdinalGame UtterHarmony() {
  return CanonicalGame(MakeGame({1, 1, 1, 2}, {1, 1, 1, 2}));
}

}  // namespace named_games

}  // namespace gametopo
