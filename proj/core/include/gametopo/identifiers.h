#ifndef GAMETOPO_IDENTIFIERS_H_
#define GAMETOPO_IDENTIFIERS_H_

#include <optional>
#include <string>
#include <string_view>

#include "gametopo/atlas.h"
#include "gametopo/ordinal_game.h"
#include "gametopo/ties.h"

namespace gametopo {

// Payoff string: game(rUL,cUL;rUR,cUR/rDL,cDL;rDR,cDR), row value first in
// each cell. Prisoner's Dilemma is game(1,4;3,3/2,2;4,1).
std::string EncodeGameString(const OrdinalGame& game);

// Inverse of EncodeGameString; the game is returned as written, without
// canonicalization. Throws ParseError (with offset) for malformed text and
// InvalidRanking for well-formed text holding a non-dense ranking.
OrdinalGame ParseGameString(std::string_view text);

// Tie coordinate "<rowClass><colClass>-<n>", class tokens 1, 2_1, 2_2, 2_3,
// 3_1, 3_2, 3_3, 4 and n the 1-based position inside the block; Prisoner's
// Dilemma is "44-1".
std::string EncodeTieCoordinate(const OrdinalGame& game,
                                const TieLattice& lattice);
// Throws ParseError.
OrdinalGame ParseTieCoordinate(std::string_view text,
                               const TieLattice& lattice);

// Display-only alias: class tokens plus the compass corner of the game inside
// its block, e.g. "44ne". Not unique and not parseable.
std::string GeographicAlias(const OrdinalGame& game, const TieLattice& lattice);

enum class IdentifierKind { kStrictId, kPayoffString, kTieCoordinate };

struct ParsedIdentifier {
  IdentifierKind kind;
  OrdinalGame game;  // canonical for ids and tie coordinates
};

// Accepts any of the three identifier kinds. Throws ParseError.
ParsedIdentifier ParseIdentifier(std::string_view text,
                                 const TopologyAtlas& atlas,
                                 const TieLattice& lattice);

}  // namespace gametopo

#endif  // GAMETOPO_IDENTIFIERS_H_
