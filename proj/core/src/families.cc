#include "gametopo/families.h"

#include <algorithm>

#include "gametopo/analysis.h"
#include "gametopo/errors.h"

namespace gametopo {
namespace {

PayoffPair Descending(const PayoffPair& p) {
  return {std::max(p.first, p.second), std::min(p.first, p.second)};
}

bool Contains(const std::vector<PayoffPair>& pairs, const PayoffPair& p) {
  return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
}

}  // namespace

std::string_view FamilyName(Family f) {
  switch (f) {
    case Family::kWinWin: return "win-win";
    case Family::kBiased: return "biased";
    case Family::kSecondBest: return "second-best";
    case Family::kUnfair: return "unfair";
    case Family::kPdFamily: return "pd-family";
    case Family::kCyclic: return "cyclic";
  }
  return "?";
}

std::string_view SubfamilyName(Subfamily s) {
  switch (s) {
    case Subfamily::kHarmonious: return "harmonious";
    case Subfamily::kStagHunt: return "stag-hunt";
    case Subfamily::kBattleOfSexes: return "battle-of-the-sexes";
    case Subfamily::kSamaritan: return "samaritan";
    case Subfamily::kSelfServing: return "self-serving";
    case Subfamily::kAlibi: return "alibi";
    case Subfamily::kTragic: return "tragic";
    case Subfamily::kPrisonersDilemma: return "prisoners-dilemma";
    case Subfamily::kImproper: return "improper";
  }
  return "?";
}

PayoffFamily ClassifyFamily(const OrdinalGame& game) {
  if (!game.strict()) throw NotStrict("payoff families are defined for strict games");

  const std::vector<PayoffPair> eq = NashPayoffs(game);
  if (eq.empty()) return {Family::kCyclic, std::nullopt};

  if (Contains(eq, {4, 4})) {
    return {Family::kWinWin,
            eq.size() == 1 ? Subfamily::kHarmonious : Subfamily::kStagHunt};
  }

  PayoffPair best{0, 0};
  for (const PayoffPair& p : eq) best = std::max(best, Descending(p));

  if (best == PayoffPair{4, 3}) {
    if (eq == std::vector<PayoffPair>{{3, 4}, {4, 3}}) {
      return {Family::kBiased, Subfamily::kBattleOfSexes};
    }
    if (eq.size() == 1) return {Family::kBiased, Subfamily::kSamaritan};
    const bool mixes_unfair = std::any_of(eq.begin(), eq.end(), [](auto& p) {
      return Descending(p) == PayoffPair{4, 2};
    });
    return {Family::kBiased,
            mixes_unfair ? std::optional(Subfamily::kImproper) : std::nullopt};
  }
  if (best == PayoffPair{3, 3}) {
    const bool one_dominant = DominantStrategies(game).count() == 1;
    return {Family::kSecondBest,
            one_dominant ? std::optional(Subfamily::kSelfServing)
                         : std::nullopt};
  }
  if (best == PayoffPair{4, 2}) return {Family::kUnfair, std::nullopt};

  if (CanonicalGame(game) == named_games::PrisonersDilemma()) {
    return {Family::kPdFamily, Subfamily::kPrisonersDilemma};
  }
  bool improvable = false;
  for (const StrategyProfile& p : PureNash(game)) {
    for (Cell c : kAllCells) {
      improvable = improvable || ParetoDominates(game, c, p.cell());
    }
  }
  return {Family::kPdFamily,
          improvable ? Subfamily::kAlibi : Subfamily::kTragic};
}

FamilyCensus ComputeFamilyCensus(const TopologyAtlas& atlas) {
  FamilyCensus census;
  for (const TopologyAtlas::Entry& e : atlas.games()) {
    const PayoffFamily f = ClassifyFamily(e.game);
    ++census.families[f.family];
    if (f.subfamily) ++census.subfamilies[*f.subfamily];
    ++census.total;
  }
  return census;
}

PlayerSwapOrbits DistinctUpToPlayerSwap(const TopologyAtlas& atlas) {
  PlayerSwapOrbits orbits;
  for (const TopologyAtlas::Entry& e : atlas.games()) {
    const StrictGameId mirror = atlas.Locate(TransposePlayers(e.game));
    if (mirror == e.id) orbits.symmetric.push_back(e.id);
    if (e.id <= mirror) orbits.representatives.push_back(e.id);
  }
  return orbits;
}

}  // namespace gametopo
