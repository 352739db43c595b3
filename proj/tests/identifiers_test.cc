#include "gametopo/identifiers.h"

#include <gtest/gtest.h>

#include "gametopo/errors.h"

namespace gametopo {
namespace {

const TieLattice& Lattice() { return DefaultTieLattice(); }

TEST(GameStringTest, PrisonersDilemma) {
  EXPECT_EQ(EncodeGameString(named_games::PrisonersDilemma()),
            "game(1,4;3,3/2,2;4,1)");
  EXPECT_EQ(ParseGameString("game(1,4;3,3/2,2;4,1)"),
            named_games::PrisonersDilemma());
}

TEST(GameStringTest, ParseKeepsOrientation) {
  const OrdinalGame g = ParseGameString("game(2,2;4,1/1,4;3,3)");
  EXPECT_EQ(g, FlipRows(named_games::PrisonersDilemma()));
}

TEST(GameStringTest, RoundTripsAllCanonicalGames) {
  for (const OrdinalGame& g : Lattice().games()) {
    ASSERT_EQ(ParseGameString(EncodeGameString(g)), g);
  }
}

TEST(GameStringTest, ErrorsCarryPositions) {
  try {
    ParseGameString("game(1,4;3,3/2,2;4,)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 19u);
  }
  try {
    ParseGameString("game(1,4;3,3/2,2;4,1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 20u);
  }
  try {
    ParseGameString("game(1,4;3,3/2,2;4,1) ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 21u);
  }
  EXPECT_THROW(ParseGameString("gme(1,4;3,3/2,2;4,1)"), ParseError);
  EXPECT_THROW(ParseGameString("game(1,4,3,3/2,2;4,1)"), ParseError);
  EXPECT_THROW(ParseGameString(""), ParseError);
}

TEST(GameStringTest, NonDenseRanksAreInvalidRanking) {
  EXPECT_THROW(ParseGameString("game(1,4;3,3/3,2;4,1)"), InvalidRanking);
}

TEST(TieCoordinateTest, Examples) {
  EXPECT_EQ(EncodeTieCoordinate(named_games::PrisonersDilemma(), Lattice()),
            "44-1");
  EXPECT_EQ(EncodeTieCoordinate(named_games::Null(), Lattice()), "11-1");
  EXPECT_EQ(ParseTieCoordinate("44-1", Lattice()),
            named_games::PrisonersDilemma());
}

TEST(TieCoordinateTest, RoundTripsAllCanonicalGames) {
  for (const OrdinalGame& g : Lattice().games()) {
    ASSERT_EQ(ParseTieCoordinate(EncodeTieCoordinate(g, Lattice()), Lattice()),
              g);
  }
}

TEST(TieCoordinateTest, Errors) {
  EXPECT_THROW(ParseTieCoordinate("44-145", Lattice()), ParseError);
  EXPECT_THROW(ParseTieCoordinate("44-0", Lattice()), ParseError);
  EXPECT_THROW(ParseTieCoordinate("2_44-1", Lattice()), ParseError);
  EXPECT_THROW(ParseTieCoordinate("54-1", Lattice()), ParseError);
  EXPECT_THROW(ParseTieCoordinate("44", Lattice()), ParseError);
  EXPECT_THROW(ParseTieCoordinate("2_", Lattice()), ParseError);
}

TEST(GeographicAliasTest, Corners) {
  EXPECT_EQ(GeographicAlias(named_games::PrisonersDilemma(), Lattice()), "44ne");
  EXPECT_EQ(GeographicAlias(named_games::Null(), Lattice()), "11sw");
}

TEST(ParseIdentifierTest, AllKinds) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const OrdinalGame pd = named_games::PrisonersDilemma();
  EXPECT_EQ(ParseIdentifier("111", atlas, Lattice()).kind,
            IdentifierKind::kStrictId);
  EXPECT_EQ(ParseIdentifier("111", atlas, Lattice()).game, pd);
  EXPECT_EQ(ParseIdentifier("game(1,4;3,3/2,2;4,1)", atlas, Lattice()).kind,
            IdentifierKind::kPayoffString);
  EXPECT_EQ(ParseIdentifier("44-1", atlas, Lattice()).game, pd);
  EXPECT_THROW(ParseIdentifier("711", atlas, Lattice()), ParseError);
  EXPECT_THROW(ParseIdentifier("pd", atlas, Lattice()), ParseError);
}

TEST(ParseIdentifierTest, StrictIdsRoundTrip) {
  for (const auto& [id, game] : DefaultAtlas().games()) {
    EXPECT_EQ(ParseIdentifier(id.ToString(), DefaultAtlas(), Lattice()).game,
              game);
  }
}

}  // namespace
}  // namespace gametopo
