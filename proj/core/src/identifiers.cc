#include "gametopo/identifiers.h"

#include "gametopo/errors.h"

namespace gametopo {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void Expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError("expected '" + std::string(token) + "'", pos_);
    }
    pos_ += token.size();
  }

  int Digit() {
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
      throw ParseError("expected a rank", pos_);
    }
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) throw ParseError("rank out of range", start);
      ++pos_;
    }
    return value;
  }

  std::string_view ClassToken() {
    if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '4') {
      throw ParseError("expected a preference class token", pos_);
    }
    const bool subscripted =
        pos_ + 1 < text_.size() && text_[pos_ + 1] == '_';
    if (subscripted && pos_ + 2 >= text_.size()) {
      throw ParseError("incomplete preference class token", pos_);
    }
    const std::size_t len = subscripted ? 3 : 1;
    const std::string_view token = text_.substr(pos_, len);
    if (!PreferenceClassFromLabel(token)) {
      throw ParseError("unknown preference class '" + std::string(token) + "'",
                       pos_);
    }
    pos_ += len;
    return token;
  }

  void ExpectEnd() const {
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string EncodeGameString(const OrdinalGame& game) {
  auto cell = [&](Cell c) {
    return std::to_string(game.row(c)) + "," + std::to_string(game.col(c));
  };
  return "game(" + cell(Cell::kUL) + ";" + cell(Cell::kUR) + "/" +
         cell(Cell::kDL) + ";" + cell(Cell::kDR) + ")";
}

OrdinalGame ParseGameString(std::string_view text) {
  Cursor in(text);
  std::array<int, 4> row{};
  std::array<int, 4> col{};
  in.Expect("game(");
  constexpr std::array<std::string_view, 4> kAfter = {";", "/", ";", ")"};
  for (int i = 0; i < 4; ++i) {
    row[i] = in.Digit();
    in.Expect(",");
    col[i] = in.Digit();
    in.Expect(kAfter[i]);
  }
  in.ExpectEnd();
  return MakeGame(row, col);
}

std::string EncodeTieCoordinate(const OrdinalGame& game,
                                const TieLattice& lattice) {
  const NaturalOrderCoordinate coord = lattice.NaturalOrder(game);
  return std::string(PreferenceClassAt(coord.row_class_index).label) +
         std::string(PreferenceClassAt(coord.col_class_index).label) + "-" +
         std::to_string(coord.position);
}

OrdinalGame ParseTieCoordinate(std::string_view text,
                               const TieLattice& lattice) {
  Cursor in(text);
  const std::string_view row_token = in.ClassToken();
  const std::string_view col_token = in.ClassToken();
  in.Expect("-");
  const int position = in.Digit();
  in.ExpectEnd();
  const auto game =
      lattice.GameAt(PreferenceClassFromLabel(row_token)->axis_index,
                     PreferenceClassFromLabel(col_token)->axis_index, position);
  if (!game) {
    throw ParseError("block position out of range", text.find('-') + 1);
  }
  return *game;
}

std::string GeographicAlias(const OrdinalGame& game,
                            const TieLattice& lattice) {
  const NaturalOrderCoordinate coord = lattice.NaturalOrder(game);
  const bool north = 2 * coord.y >= coord.height;
  const bool east = 2 * coord.x >= coord.width;
  return std::string(PreferenceClassAt(coord.row_class_index).label) +
         std::string(PreferenceClassAt(coord.col_class_index).label) +
         (north ? "n" : "s") + (east ? "e" : "w");
}

ParsedIdentifier ParseIdentifier(std::string_view text,
                                 const TopologyAtlas& atlas,
                                 const TieLattice& lattice) {
  if (text.starts_with("game(")) {
    return {IdentifierKind::kPayoffString, ParseGameString(text)};
  }
  if (text.find('-') != std::string_view::npos) {
    return {IdentifierKind::kTieCoordinate, ParseTieCoordinate(text, lattice)};
  }
  if (const auto id = StrictGameId::Parse(text)) {
    return {IdentifierKind::kStrictId, atlas.Resolve(*id)};
  }
  throw ParseError(
      "not a game id (LRC), payoff string (game(...)) or tie coordinate", 0);
}

}  // namespace gametopo
