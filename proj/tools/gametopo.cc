// gametopo: command-line access to the 2x2 ordinal game atlas.
//
// Exit codes: 0 success, 1 usage error, 2 invalid game input (or a query with
// no answer, such as an unreachable path), 3 internal invariant violation.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "gametopo/analysis.h"
#include "gametopo/atlas.h"
#include "gametopo/errors.h"
#include "gametopo/export.h"
#include "gametopo/families.h"
#include "gametopo/identifiers.h"
#include "gametopo/normalization.h"
#include "gametopo/ordinal_game.h"
#include "gametopo/ties.h"

namespace gametopo {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalidGame = 2;
constexpr int kExitInvariant = 3;

// Usage problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitList(const std::string& text,
                                   std::string_view separators) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (separators.find(ch) != std::string_view::npos) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

struct KindOptions {
  SwapKindSet swaps;
  bool half = false;
};

KindOptions ParseKinds(const std::string& text, bool allow_half) {
  KindOptions out;
  for (const std::string& token : SplitList(text, ",")) {
    if (token == "half" && allow_half) {
      out.half = true;
    } else if (const auto kind = ParseSwapKind(token)) {
      out.swaps.insert(*kind);
    } else {
      throw UsageError("unknown swap kind '" + token + "'");
    }
  }
  if (out.swaps.empty() && !out.half) throw UsageError("no swap kinds given");
  return out;
}

std::string Label(const OrdinalGame& game, const TopologyAtlas& atlas) {
  if (game.strict()) return atlas.Locate(game).ToString();
  return EncodeGameString(CanonicalGame(game));
}

std::string PairText(const PayoffPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string ProfilesText(const std::vector<StrategyProfile>& profiles) {
  if (profiles.empty()) return "none";
  std::string out;
  for (const StrategyProfile& p : profiles) {
    if (!out.empty()) out += " ";
    out += CellName(p.cell());
  }
  return out;
}

template <typename Move, typename NameFn>
std::string DominantText(const std::optional<DominantStrategy<Move>>& d,
                         NameFn name) {
  if (!d) return "none";
  return std::string(name(d->move)) + (d->strict ? " (strict)" : " (weak)");
}

int RunAnalyze(const std::string& identifier, bool as_json) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const TieLattice& lattice = DefaultTieLattice();
  const OrdinalGame game = ParseIdentifier(identifier, atlas, lattice).game;
  if (as_json) {
    std::cout << ExportGameJson(game, atlas, lattice);
    return 0;
  }
  const CanonicalForm canon = Canonicalize(game);
  const AnalysisReport r = AnalyzeGame(game);
  const PreferenceClass row_class = ClassifyPreferences(game.row_ranks());
  const PreferenceClass col_class = ClassifyPreferences(game.col_ranks());

  std::cout << "game           " << EncodeGameString(game) << "\n";
  std::cout << "canonical      " << EncodeGameString(canon.game) << " (quadrant "
            << QuadrantName(canon.quadrant) << ")\n";
  if (game.strict()) {
    const StrictGameId id = atlas.Locate(game);
    const PayoffFamily fam = ClassifyFamily(game);
    std::cout << "id             " << id.ToString() << "  tile "
              << TileOf(id).ToString() << "\n";
    std::cout << "family         " << FamilyName(fam.family);
    if (fam.subfamily) std::cout << " / " << SubfamilyName(*fam.subfamily);
    std::cout << "\n";
  }
  std::cout << "classes        " << row_class.letter << " x " << col_class.letter
            << " (" << row_class.label << ", " << col_class.label << ")\n";
  std::cout << "tie coordinate " << EncodeTieCoordinate(game, lattice)
            << "  alias " << GeographicAlias(game, lattice) << "\n";
  std::cout << "nash           " << ProfilesText(r.nash_profiles);
  for (const PayoffPair& p : r.nash_payoffs) std::cout << " " << PairText(p);
  std::cout << "\n";
  std::cout << "dominant row   " << DominantText(r.dominance.row, RowMoveName)
            << "\n";
  std::cout << "dominant col   " << DominantText(r.dominance.col, ColMoveName)
            << "\n";
  std::cout << "pareto optimal " << ProfilesText(r.pareto_optimal) << "\n";
  std::cout << "pareto-inferior equilibria "
            << ProfilesText(r.pareto_inferior_equilibria) << "\n";
  std::cout << "maximin        " << RowMoveName(r.maximin.row) << " (guarantees "
            << r.maximin.row_guarantee << (r.maximin.row_tied ? ", tied" : "")
            << "), " << ColMoveName(r.maximin.col) << " (guarantees "
            << r.maximin.col_guarantee << (r.maximin.col_tied ? ", tied" : "")
            << ")\n";
  std::cout << "symmetric      " << (r.symmetric ? "yes" : "no") << "\n";
  std::cout << "alignment      " << AlignmentName(r.alignment) << "\n";
  return 0;
}

int RunNeighbors(const std::string& identifier, const std::string& kinds_text) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const TieLattice& lattice = DefaultTieLattice();
  const OrdinalGame game =
      CanonicalGame(ParseIdentifier(identifier, atlas, lattice).game);
  KindOptions kinds;
  if (kinds_text.empty()) {
    kinds = game.strict() ? KindOptions{SwapKindSet::All(), false}
                          : KindOptions{{}, true};
  } else {
    kinds = ParseKinds(kinds_text, /*allow_half=*/true);
  }
  if (!kinds.swaps.empty()) {
    if (!game.strict()) {
      throw NotStrict("swap neighbors need a strict game; use --kinds half");
    }
    for (const Neighbor& n : atlas.Neighbors(atlas.Locate(game))) {
      if (!kinds.swaps.contains(n.edge.kind)) continue;
      std::cout << ToString(n.edge) << " " << n.id.ToString() << "\n";
    }
  }
  if (kinds.half) {
    const int node = lattice.IndexOf(game);
    for (const TieLattice::Edge& e : lattice.moves(node)) {
      std::cout << HalfSwapMoveName(e.move) << " " << PlayerName(e.player) << " "
                << e.rank << " " << Label(lattice.games()[e.target], atlas)
                << "\n";
    }
  }
  return 0;
}

int RunPath(const std::string& from, const std::string& to,
            const std::string& kinds_text) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const TieLattice& lattice = DefaultTieLattice();
  const OrdinalGame a = ParseIdentifier(from, atlas, lattice).game;
  const OrdinalGame b = ParseIdentifier(to, atlas, lattice).game;
  const KindOptions kinds = ParseKinds(kinds_text, /*allow_half=*/false);
  const auto path =
      atlas.ShortestPath(atlas.Locate(a), atlas.Locate(b), kinds.swaps);
  std::cout << "length " << path.size() << "\n";
  StrictGameId at = atlas.Locate(a);
  for (const PathStep& step : path) {
    std::cout << at.ToString() << " " << ToString(step.edge) << " "
              << step.to.ToString() << "\n";
    at = step.to;
  }
  return 0;
}

int RunTiePath(const std::string& from, const std::string& to) {
  const TopologyAtlas& atlas = DefaultAtlas();
  const TieLattice& lattice = DefaultTieLattice();
  const OrdinalGame a = ParseIdentifier(from, atlas, lattice).game;
  const OrdinalGame b = ParseIdentifier(to, atlas, lattice).game;
  const auto path = lattice.HalfSwapPath(a, b);
  std::cout << "length " << path.size() << "\n";
  std::string at = Label(a, atlas);
  for (const HalfSwapStep& step : path) {
    const std::string next = Label(step.result, atlas);
    std::cout << at << " " << HalfSwapMoveName(step.move) << " "
              << PlayerName(step.player) << " " << step.rank << " " << next
              << "\n";
    at = next;
  }
  return 0;
}

void PrintClassMatrix(const TiesCensus& census) {
  std::cout << "row\\col";
  for (int c = 1; c <= 8; ++c) std::cout << "\t" << PreferenceClassAt(c).letter;
  std::cout << "\tsum\n";
  for (int r = 8; r >= 1; --r) {
    const PreferenceClass rc = PreferenceClassAt(r);
    std::cout << rc.letter;
    for (int c = 1; c <= 8; ++c) std::cout << "\t" << census.counts[r - 1][c - 1];
    std::cout << "\t" << census.row_sum(rc.letter) << "\n";
  }
  std::cout << "total " << census.total << "\n";
  std::cout << "up to player swap " << census.player_swap_total << "\n";
}

int RunCensus(bool ties, const std::string& by) {
  if (ties || by == "class") {
    if (ties) {
      PrintClassMatrix(DefaultTieLattice().census());
    } else {
      std::cout << "H x H 144\ntotal 144\n";
    }
    return 0;
  }
  const TopologyAtlas& atlas = DefaultAtlas();
  const FamilyCensus census = ComputeFamilyCensus(atlas);
  for (const auto& [family, count] : census.families) {
    std::cout << FamilyName(family) << " " << count << "\n";
  }
  for (const auto& [sub, count] : census.subfamilies) {
    std::cout << "  " << SubfamilyName(sub) << " " << count << "\n";
  }
  const PlayerSwapOrbits orbits = DistinctUpToPlayerSwap(atlas);
  std::cout << "total " << census.total << "\n";
  std::cout << "distinct up to player swap " << orbits.representatives.size()
            << " (symmetric " << orbits.symmetric.size() << ")\n";
  return 0;
}

int ParseInt(const std::string& text) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return value;
}

struct ExportArgs {
  std::string what;
  std::string out;
  std::string scroll;
  bool with_ties = false;
  bool glyphs = false;
  int layer = 0;
  std::string tile;
};

int RunExport(const ExportArgs& args) {
  const TopologyAtlas& atlas = DefaultAtlas();
  std::string text;
  if (args.what == "atlas") {
    text = ExportAtlasJson(atlas, DefaultTieLattice(), JsonVariant::kAtlas);
  } else if (args.what == "atlas-ties") {
    text = ExportAtlasJson(atlas, DefaultTieLattice(),
                           JsonVariant::kAtlasWithTies);
  } else if (args.what == "ui-data") {
    text = ExportAtlasJson(atlas, DefaultTieLattice(),
                           args.with_ties ? JsonVariant::kUiDataWithTies
                                          : JsonVariant::kUiData);
  } else if (args.what == "dot") {
    DotFilter filter;
    if (args.layer != 0 && !args.tile.empty()) {
      throw UsageError("--layer and --tile are exclusive");
    }
    if (args.layer != 0) {
      filter.kind = DotFilter::Kind::kLayer;
      filter.layer = args.layer;
    } else if (!args.tile.empty()) {
      filter.kind = DotFilter::Kind::kTile;
      filter.member = atlas.Locate(
          ParseIdentifier(args.tile, atlas, DefaultTieLattice()).game);
    }
    text = ExportDot(atlas, filter);
  } else if (args.what == "chart") {
    ChartOptions options;
    options.order_glyphs = args.glyphs;
    if (!args.scroll.empty()) {
      const auto parts = SplitList(args.scroll, ",");
      if (parts.size() != 2) throw UsageError("--scroll takes <dr>,<dc>");
      options.scroll_rows = ParseInt(parts[0]);
      options.scroll_cols = ParseInt(parts[1]);
    }
    text = ExportChartSvg(atlas, options);
  }
  WriteTextFile(args.out, text);
  return 0;
}

int RunSample(std::int64_t n, std::uint64_t seed, const std::string& dist_name,
              int workers, bool counts) {
  const auto dist = ParseDistribution(dist_name);
  if (!dist) throw UsageError("unknown distribution '" + dist_name + "'");
  if (n <= 0) throw UsageError("--n must be positive");
  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  const TopologyAtlas& atlas = DefaultAtlas();
  const SampleCensus census = SampleCensusOf(atlas, n, seed, *dist, workers);
  const auto [lo, hi] =
      std::minmax_element(census.counts.begin(), census.counts.end());
  const double expected =
      static_cast<double>(census.draws - census.ties_hit) / 144.0;
  double chi2 = 0.0;
  for (std::int64_t c : census.counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  if (counts) {
    for (int i = 0; i < 144; ++i) {
      std::cout << StrictGameId::FromIndex(i).ToString() << " "
                << census.counts[i] << "\n";
    }
  }
  std::cout << "draws " << census.draws << "\n";
  std::cout << "distribution " << DistributionName(*dist) << "\n";
  std::cout << "ties " << census.ties_hit << "\n";
  std::cout << "min " << *lo << " ("
            << StrictGameId::FromIndex(static_cast<int>(lo - census.counts.begin()))
                   .ToString()
            << ")\n";
  std::cout << "max " << *hi << " ("
            << StrictGameId::FromIndex(static_cast<int>(hi - census.counts.begin()))
                   .ToString()
            << ")\n";
  std::printf("chi-square %.2f (143 degrees of freedom)\n", chi2);
  return 0;
}

int RunNormalize(const std::string& payoffs, double tol) {
  const auto parts = SplitList(payoffs, ",;/ ()");
  if (parts.size() != 8) {
    throw UsageError("--payoffs needs 8 numbers: rUL,cUL;rUR,cUR/rDL,cDL;rDR,cDR");
  }
  RealGame game;
  game.tie_tolerance = tol;
  for (int i = 0; i < 8; ++i) {
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + parts[i] + "'");
    }
    (i % 2 == 0 ? game.row : game.col)[i / 2] = value;
  }
  const NormalizedGame norm = NormalizeGame(game);
  const TopologyAtlas& atlas = DefaultAtlas();
  std::cout << "ordinal  " << EncodeGameString(norm.ordinal) << "\n";
  std::cout << "quadrant " << QuadrantName(norm.quadrant) << "\n";
  if (norm.ordinal.strict()) {
    std::cout << "id       " << atlas.Locate(norm.ordinal).ToString() << "\n";
  } else {
    std::cout << "tie coordinate "
              << EncodeTieCoordinate(norm.ordinal, DefaultTieLattice()) << "\n";
  }
  std::cout << "order graph (cell: row, col)\n";
  for (const OrderGraphPoint& p : OrderGraphPoints(norm)) {
    std::printf("  %s: %.6g, %.6g\n", std::string(CellName(p.cell)).c_str(),
                p.row_payoff, p.col_payoff);
  }
  return 0;
}

}  // namespace
}  // namespace gametopo

int main(int argc, char** argv) {
  using namespace gametopo;
  CLI::App app{"Explore the topology of 2x2 ordinal games."};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List canonical games");
  bool enum_ties = false;
  std::string enum_format = "csv";
  enumerate->add_flag("--ties", enum_ties, "Include the 1413 games with ties");
  enumerate->add_option("--format", enum_format)
      ->check(CLI::IsMember({"json", "csv"}));

  auto* analyze = app.add_subcommand("analyze", "Analyze one game");
  std::string analyze_id;
  bool analyze_json = false;
  analyze->add_option("identifier", analyze_id,
                      "LRC id, game(...) payoff string or tie coordinate")
      ->required();
  analyze->add_flag("--json", analyze_json, "Print the export record");

  auto* neighbors = app.add_subcommand("neighbors", "Swap or half-swap moves");
  std::string neighbors_id;
  std::string neighbors_kinds;
  neighbors->add_option("identifier", neighbors_id)->required();
  neighbors->add_option("--kinds", neighbors_kinds,
                        "Comma list of low, mid, high, half");

  auto* path = app.add_subcommand("path", "Shortest swap path");
  std::string path_from, path_to, path_kinds = "low,mid,high";
  path->add_option("from", path_from)->required();
  path->add_option("to", path_to)->required();
  path->add_option("--kinds", path_kinds, "Comma list of low, mid, high");

  auto* tiepath = app.add_subcommand("tiepath", "Shortest half-swap path");
  std::string tie_from, tie_to;
  tiepath->add_option("from", tie_from)->required();
  tiepath->add_option("to", tie_to)->required();

  auto* census = app.add_subcommand("census", "Family or class counts");
  bool census_ties = false;
  std::string census_by = "family";
  census->add_flag("--ties", census_ties, "Class matrix of the 1413 games");
  census->add_option("--by", census_by)->check(CLI::IsMember({"family", "class"}));

  auto* exporter = app.add_subcommand("export", "Write an export file");
  ExportArgs export_args;
  exporter->add_option("--what", export_args.what)
      ->required()
      ->check(CLI::IsMember({"atlas", "atlas-ties", "dot", "chart", "ui-data"}));
  exporter->add_option("--out", export_args.out)->required();
  exporter->add_option("--scroll", export_args.scroll, "Chart scroll <dr>,<dc>");
  exporter->add_flag("--with-ties", export_args.with_ties,
                     "ui-data: include the tie lattice");
  exporter->add_flag("--glyphs", export_args.glyphs,
                     "chart: draw an order graph in each cell");
  exporter->add_option("--layer", export_args.layer, "dot: one layer")
      ->check(CLI::Range(1, 4));
  exporter->add_option("--tile", export_args.tile, "dot: tile of this game");

  auto* sample = app.add_subcommand("sample", "Random real games census");
  std::int64_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_dist = "uniform";
  int sample_workers = 0;
  bool sample_counts = false;
  sample->add_option("--n", sample_n)->required();
  sample->add_option("--seed", sample_seed)->required();
  sample->add_option("--dist", sample_dist)
      ->check(CLI::IsMember({"uniform", "gaussian"}));
  sample->add_option("--workers", sample_workers,
                     "Worker threads (0 = hardware concurrency)");
  sample->add_flag("--counts", sample_counts, "Print every game's count");

  auto* normalize = app.add_subcommand("normalize", "Normalize a real game");
  std::string normalize_payoffs;
  double normalize_tol = 0.0;
  normalize->add_option("--payoffs", normalize_payoffs,
                        "8 reals: rUL,cUL;rUR,cUR/rDL,cDL;rDR,cDR")
      ->required();
  normalize->add_option("--tol", normalize_tol)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) {
      const TopologyAtlas& atlas = DefaultAtlas();
      const TieLattice& lattice = DefaultTieLattice();
      if (enum_format == "csv") {
        std::cout << ExportGamesCsv(atlas, lattice, enum_ties);
      } else {
        std::cout << ExportAtlasJson(atlas, lattice,
                                     enum_ties ? JsonVariant::kAtlasWithTies
                                               : JsonVariant::kAtlas);
      }
      return 0;
    }
    if (*analyze) return RunAnalyze(analyze_id, analyze_json);
    if (*neighbors) return RunNeighbors(neighbors_id, neighbors_kinds);
    if (*path) return RunPath(path_from, path_to, path_kinds);
    if (*tiepath) return RunTiePath(tie_from, tie_to);
    if (*census) return RunCensus(census_ties, census_by);
    if (*exporter) return RunExport(export_args);
    if (*sample) {
      return RunSample(sample_n, sample_seed, sample_dist, sample_workers,
                       sample_counts);
    }
    if (*normalize) return RunNormalize(normalize_payoffs, normalize_tol);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionInvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // Invalid input surfaces as std::invalid_argument subclasses or
    // std::out_of_range; anything else is ours.
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInvalidGame;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Unreachable& e) {
    std::cerr << "unreachable: " << e.what() << "\n";
    return kExitInvalidGame;
  }
  return kExitUsage;
}
