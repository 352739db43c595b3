#ifndef GAMETOPO_NORMALIZATION_H_
#define GAMETOPO_NORMALIZATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gametopo/atlas.h"
#include "gametopo/ordinal_game.h"

namespace gametopo {

// A 2x2 game with real payoffs, cells in UL, UR, DL, DR order.
struct RealGame {
  std::array<double, 4> row{};
  std::array<double, 4> col{};
  double tie_tolerance = 0.0;

  // Throws std::invalid_argument for non-finite payoffs or negative
  // tolerance.
  void Validate() const;
};

struct NormalizedGame {
  OrdinalGame ordinal;
  // Min-max scaled payoffs in [0,1], permuted with the canonicalization.
  std::array<double, 4> row_unit{};
  std::array<double, 4> col_unit{};
  Quadrant quadrant = Quadrant::kNE;
};

// Dense ranks by chained tolerance: after sorting, neighbours whose gap is at
// most `tolerance` share a rank.
RankVector RankWithTies(const std::array<double, 4>& values, double tolerance);

// All-equal payoffs for a player map to 0.5.
std::array<double, 4> UnitScale(const std::array<double, 4>& values);

NormalizedGame NormalizeGame(const RealGame& game);

struct OrderGraphPoint {
  Cell cell;
  double row_payoff;  // x
  double col_payoff;  // y
};

std::array<OrderGraphPoint, 4> OrderGraphPoints(const NormalizedGame& game);

enum class SampleDistribution { kUniform, kGaussian };
std::string_view DistributionName(SampleDistribution d);
std::optional<SampleDistribution> ParseDistribution(std::string_view name);

struct SampleCensus {
  std::int64_t draws = 0;
  std::array<std::int64_t, 144> counts{};  // by StrictGameId::index()
  std::int64_t ties_hit = 0;
};

// Draws `draws` games with i.i.d. cell payoffs, normalizes and locates each.
// Draws are split into fixed-size chunks with seeds derived from (seed,
// chunk), so the result does not depend on `workers`. Throws
// std::invalid_argument when draws <= 0.
SampleCensus SampleCensusOf(const TopologyAtlas& atlas, std::int64_t draws,
                            std::uint64_t seed, SampleDistribution dist,
                            int workers = 1);

}  // namespace gametopo

#endif  // GAMETOPO_NORMALIZATION_H_
