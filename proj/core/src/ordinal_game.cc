#include "gametopo/ordinal_game.h"

#include <algorithm>
#include <set>

#include "gametopo/errors.h"

namespace gametopo {
namespace {

std::string FormatRanks(const std::array<int, 4>& r) {
  std::string out = "(";
  for (int i = 0; i < 4; ++i) {
    if (i > 0) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

RankVector Permuted(const RankVector& v, const std::array<Cell, 4>& source) {
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = v[source[i]];
  return RankVector::FromValues(out);
}

constexpr std::array<Cell, 4> kRowFlipSource = {Cell::kDL, Cell::kDR,
                                                Cell::kUL, Cell::kUR};
constexpr std::array<Cell, 4> kColFlipSource = {Cell::kUR, Cell::kUL,
                                                Cell::kDR, Cell::kDL};
constexpr std::array<Cell, 4> kMirrorSource = {Cell::kUL, Cell::kDL,
                                               Cell::kUR, Cell::kDR};

Cell CellOfValue(const RankVector& v, int value) {
  for (Cell c : kAllCells) {
    if (v[c] == value) return c;
  }
  return Cell::kUL;
}

}  // namespace

std::string_view CellName(Cell c) {
  switch (c) {
    case Cell::kUL: return "UL";
    case Cell::kUR: return "UR";
    case Cell::kDL: return "DL";
    case Cell::kDR: return "DR";
  }
  return "?";
}

std::string_view PlayerName(Player p) {
  return p == Player::kRow ? "row" : "col";
}

std::string_view RowMoveName(RowMove m) {
  return m == RowMove::kUp ? "U" : "D";
}

std::string_view ColMoveName(ColMove m) {
  return m == ColMove::kLeft ? "L" : "R";
}

std::string_view QuadrantName(Quadrant q) {
  switch (q) {
    case Quadrant::kNE: return "NE";
    case Quadrant::kNW: return "NW";
    case Quadrant::kSE: return "SE";
    case Quadrant::kSW: return "SW";
  }
  return "?";
}

bool IsDenseRanking(const std::array<int, 4>& ranks) {
  int max_value = 0;
  for (int r : ranks) {
    if (r < 1 || r > 4) return false;
    max_value = std::max(max_value, r);
  }
  for (int v = 1; v <= max_value; ++v) {
    if (std::find(ranks.begin(), ranks.end(), v) == ranks.end()) return false;
  }
  return true;
}

RankVector RankVector::FromValues(const std::array<int, 4>& ranks) {
  if (!IsDenseRanking(ranks)) {
    throw InvalidRanking("not a dense ranking: " + FormatRanks(ranks));
  }
  return RankVector(ranks);
}

RankVector RankVector::Densify(const std::array<int, 4>& values) {
  std::set<int> distinct(values.begin(), values.end());
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) {
    out[i] = 1 + static_cast<int>(std::distance(distinct.begin(),
                                                distinct.find(values[i])));
  }
  return RankVector(out);
}

int RankVector::distinct() const {
  return *std::max_element(ranks_.begin(), ranks_.end());
}

int RankVector::multiplicity(int value) const {
  return static_cast<int>(std::count(ranks_.begin(), ranks_.end(), value));
}

OrdinalGame OrdinalGame::with_ranks(Player p, RankVector ranks) const {
  return p == Player::kRow ? OrdinalGame(ranks, col_) : OrdinalGame(row_, ranks);
}

OrdinalGame MakeGame(const std::array<int, 4>& row_ranks,
                     const std::array<int, 4>& col_ranks) {
  return OrdinalGame(RankVector::FromValues(row_ranks),
                     RankVector::FromValues(col_ranks));
}

OrdinalGame FlipRows(const OrdinalGame& game) {
  return OrdinalGame(Permuted(game.row_ranks(), kRowFlipSource),
                     Permuted(game.col_ranks(), kRowFlipSource));
}

OrdinalGame FlipCols(const OrdinalGame& game) {
  return OrdinalGame(Permuted(game.row_ranks(), kColFlipSource),
                     Permuted(game.col_ranks(), kColFlipSource));
}

OrdinalGame TransposePlayers(const OrdinalGame& game) {
  return OrdinalGame(Permuted(game.col_ranks(), kMirrorSource),
                     Permuted(game.row_ranks(), kMirrorSource));
}

CanonicalForm Canonicalize(const OrdinalGame& game) {
  if (game.strict()) {
    const Cell row_four = CellOfValue(game.row_ranks(), 4);
    const Cell col_four = CellOfValue(game.col_ranks(), 4);
    const bool col_flip = row_four == Cell::kUL || row_four == Cell::kDL;
    const bool row_flip = col_four == Cell::kDL || col_four == Cell::kDR;
    OrdinalGame g = game;
    if (col_flip) g = FlipCols(g);
    if (row_flip) g = FlipRows(g);
    Quadrant q = Quadrant::kNE;
    if (row_flip) q = col_flip ? Quadrant::kSW : Quadrant::kSE;
    else if (col_flip) q = Quadrant::kNW;
    return {g, q, row_flip, col_flip};
  }

  CanonicalForm best{game, Quadrant::kNE, false, false};
  for (int flips = 1; flips < 4; ++flips) {
    const bool row_flip = (flips & 1) != 0;
    const bool col_flip = (flips & 2) != 0;
    OrdinalGame g = game;
    if (row_flip) g = FlipRows(g);
    if (col_flip) g = FlipCols(g);
    if (g < best.game) best = {g, Quadrant::kNE, row_flip, col_flip};
  }
  return best;
}

const std::vector<RankVector>& AllRankVectors() {
  static const std::vector<RankVector> kAll = [] {
    std::vector<RankVector> out;
    std::array<int, 4> r{};
    for (r[0] = 1; r[0] <= 4; ++r[0])
      for (r[1] = 1; r[1] <= 4; ++r[1])
        for (r[2] = 1; r[2] <= 4; ++r[2])
          for (r[3] = 1; r[3] <= 4; ++r[3])
            if (IsDenseRanking(r)) out.push_back(RankVector::FromValues(r));
    return out;
  }();
  return kAll;
}

const std::vector<RankVector>& AllStrictRankVectors() {
  static const std::vector<RankVector> kStrict = [] {
    std::vector<RankVector> out;
    for (const RankVector& v : AllRankVectors()) {
      if (v.strict()) out.push_back(v);
    }
    return out;
  }();
  return kStrict;
}

namespace named_games {

OrdinalGame PrisonersDilemma() { return MakeGame({1, 3, 2, 4}, {4, 3, 2, 1}); }
OrdinalGame Chicken() { return MakeGame({2, 3, 1, 4}, {4, 3, 1, 2}); }
OrdinalGame StagHunt() { return MakeGame({1, 4, 2, 3}, {3, 4, 2, 1}); }
OrdinalGame Null() { return MakeGame({1, 1, 1, 1}, {1, 1, 1, 1}); }

}  // namespace named_games

}  // namespace gametopo
