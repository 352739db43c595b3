#include "gametopo/normalization.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace gametopo {
namespace {

constexpr std::int64_t kChunkSize = 4096;

std::array<double, 4> Permuted(const std::array<double, 4>& v,
                               bool row_flip, bool col_flip) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    int source = i;
    if (row_flip) source ^= 2;
    if (col_flip) source ^= 1;
    out[i] = v[source];
  }
  return out;
}

void SampleChunk(const TopologyAtlas& atlas, std::uint64_t seed,
                 std::int64_t chunk, std::int64_t draws,
                 SampleDistribution dist, SampleCensus& out) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  auto draw = [&] {
    return dist == SampleDistribution::kUniform ? uniform(rng) : gaussian(rng);
  };
  for (std::int64_t k = 0; k < draws; ++k) {
    RealGame g;
    for (double& v : g.row) v = draw();
    for (double& v : g.col) v = draw();
    const OrdinalGame ordinal = NormalizeGame(g).ordinal;
    if (!ordinal.strict()) {
      ++out.ties_hit;
      continue;
    }
    ++out.counts[atlas.Locate(ordinal).index()];
  }
  out.draws += draws;
}

}  // namespace

void RealGame::Validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(row.begin(), row.end(), finite) ||
      !std::all_of(col.begin(), col.end(), finite)) {
    throw std::invalid_argument("payoffs must be finite");
  }
  if (!(tie_tolerance >= 0.0) || !std::isfinite(tie_tolerance)) {
    throw std::invalid_argument("tie tolerance must be finite and >= 0");
  }
}

RankVector RankWithTies(const std::array<double, 4>& values,
                        double tolerance) {
  std::array<int, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] < values[b]; });
  std::array<int, 4> ranks{};
  int rank = 1;
  ranks[order[0]] = rank;
  for (int k = 1; k < 4; ++k) {
    if (values[order[k]] - values[order[k - 1]] > tolerance) ++rank;
    ranks[order[k]] = rank;
  }
  return RankVector::FromValues(ranks);
}

std::array<double, 4> UnitScale(const std::array<double, 4>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  std::array<double, 4> out{};
  if (*hi == *lo) {
    out.fill(0.5);
    return out;
  }
  for (int i = 0; i < 4; ++i) out[i] = (values[i] - *lo) / (*hi - *lo);
  return out;
}

NormalizedGame NormalizeGame(const RealGame& game) {
  game.Validate();
  const OrdinalGame raw(RankWithTies(game.row, game.tie_tolerance),
                        RankWithTies(game.col, game.tie_tolerance));
  const CanonicalForm canon = Canonicalize(raw);
  NormalizedGame out;
  out.ordinal = canon.game;
  out.quadrant = canon.quadrant;
  out.row_unit = Permuted(UnitScale(game.row), canon.row_flip, canon.col_flip);
  out.col_unit = Permuted(UnitScale(game.col), canon.row_flip, canon.col_flip);
  return out;
}

std::array<OrderGraphPoint, 4> OrderGraphPoints(const NormalizedGame& game) {
  std::array<OrderGraphPoint, 4> out{};
  for (Cell c : kAllCells) {
    out[CellIndex(c)] = {c, game.row_unit[CellIndex(c)],
                         game.col_unit[CellIndex(c)]};
  }
  return out;
}

std::string_view DistributionName(SampleDistribution d) {
  return d == SampleDistribution::kUniform ? "uniform" : "gaussian";
}

std::optional<SampleDistribution> ParseDistribution(std::string_view name) {
  if (name == "uniform") return SampleDistribution::kUniform;
  if (name == "gaussian") return SampleDistribution::kGaussian;
  return std::nullopt;
}

SampleCensus SampleCensusOf(const TopologyAtlas& atlas, std::int64_t draws,
                            std::uint64_t seed, SampleDistribution dist,
                            int workers) {
  if (draws <= 0) throw std::invalid_argument("sample count must be positive");
  const std::int64_t chunks = (draws + kChunkSize - 1) / kChunkSize;
  auto chunk_draws = [&](std::int64_t chunk) {
    return std::min(kChunkSize, draws - chunk * kChunkSize);
  };

  workers = static_cast<int>(
      std::clamp<std::int64_t>(workers, 1, chunks));
  std::vector<SampleCensus> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::int64_t chunk = w; chunk < chunks; chunk += workers) {
          SampleChunk(atlas, seed, chunk, chunk_draws(chunk), dist, partial[w]);
        }
      });
    }
  }
  SampleCensus total;
  for (const SampleCensus& p : partial) {
    total.draws += p.draws;
    total.ties_hit += p.ties_hit;
    for (int i = 0; i < 144; ++i) total.counts[i] += p.counts[i];
  }
  return total;
}

}  // namespace gametopo
