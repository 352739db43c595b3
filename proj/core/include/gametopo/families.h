#ifndef GAMETOPO_FAMILIES_H_
#define GAMETOPO_FAMILIES_H_

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "gametopo/atlas.h"
#include "gametopo/ordinal_game.h"

namespace gametopo {

enum class Family { kWinWin, kBiased, kSecondBest, kUnfair, kPdFamily, kCyclic };

enum class Subfamily {
  kHarmonious,
  kStagHunt,
  kBattleOfSexes,
  kSamaritan,
  kSelfServing,
  kAlibi,
  kTragic,
  kPrisonersDilemma,
  kImproper,
};

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::kWinWin, Family::kBiased,   Family::kSecondBest,
    Family::kUnfair, Family::kPdFamily, Family::kCyclic};

std::string_view FamilyName(Family f);
std::string_view SubfamilyName(Subfamily s);

struct PayoffFamily {
  Family family = Family::kCyclic;
  std::optional<Subfamily> subfamily;
  friend bool operator==(const PayoffFamily&, const PayoffFamily&) = default;
};

// Classifies a strict game by the payoff pairs at its pure equilibria:
//   none                       -> Cyclic
//   contains (4,4)             -> WinWin (Harmonious if alone, StagHunt if two)
//   best pair 4-3              -> Biased (BattleOfSexes for {(4,3),(3,4)},
//                                 Improper when mixed with a 4-2 pair,
//                                 Samaritan for a single equilibrium)
//   best pair 3-3              -> SecondBest (SelfServing with exactly one
//                                 dominant strategy)
//   best pair 4-2              -> Unfair
//   otherwise (2-2, 3-2, 2-3)  -> PdFamily (PrisonersDilemma for PD itself,
//                                 Alibi if some cell beats the equilibrium for
//                                 both players, else Tragic)
// Throws NotStrict.
PayoffFamily ClassifyFamily(const OrdinalGame& game);

struct FamilyCensus {
  std::map<Family, int> families;
  std::map<Subfamily, int> subfamilies;
  int total = 0;
};

FamilyCensus ComputeFamilyCensus(const TopologyAtlas& atlas);

// Orbits of the atlas under exchanging the players.
struct PlayerSwapOrbits {
  std::vector<StrictGameId> representatives;  // smaller id of each orbit
  std::vector<StrictGameId> symmetric;        // fixed points
};

PlayerSwapOrbits DistinctUpToPlayerSwap(const TopologyAtlas& atlas);

}  // namespace gametopo

#endif  // GAMETOPO_FAMILIES_H_
