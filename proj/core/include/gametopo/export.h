#ifndef GAMETOPO_EXPORT_H_
#define GAMETOPO_EXPORT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "gametopo/atlas.h"
#include "gametopo/families.h"
#include "gametopo/ties.h"

namespace gametopo {

inline constexpr std::string_view kAtlasSchema = "gametopo-atlas";
inline constexpr int kAtlasSchemaVersion = 1;

enum class JsonVariant {
  kAtlas,           // 144 strict games
  kAtlasWithTies,   // all 1413 canonical games plus half-swap edges
  kUiData,          // strict atlas plus legend and chart defaults
  kUiDataWithTies,  // ui-data plus the tie lattice
};

// Byte-reproducible JSON document (sorted keys, fixed indentation).
std::string ExportAtlasJson(const TopologyAtlas& atlas,
                            const TieLattice& lattice, JsonVariant variant);

// The per-game record used inside the atlas document, on its own.
std::string ExportGameJson(const OrdinalGame& game, const TopologyAtlas& atlas,
                           const TieLattice& lattice);

// Background color shared by the SVG chart and the ui-data legend.
std::string_view FamilyColor(Family f);

struct DotFilter {
  enum class Kind { kAll, kLayer, kTile };
  Kind kind = Kind::kAll;
  int layer = 1;            // for kLayer
  StrictGameId member;      // for kTile: any game of the tile
};

std::string ExportDot(const TopologyAtlas& atlas, const DotFilter& filter = {});

struct ChartOptions {
  // Torus scroll applied to every layer. The defaults put Prisoner's
  // Dilemma's tile at the middle of the chart.
  int scroll_rows = 5;
  int scroll_cols = 5;
  bool order_glyphs = false;
};

// Display cell of a game on the 12x12 chart: x from the west edge, y from the
// south edge. Layers occupy quadrants 1 SW, 2 SE, 3 NE, 4 NW.
struct ChartPosition {
  int x = 0;
  int y = 0;
  friend bool operator==(const ChartPosition&, const ChartPosition&) = default;
};
ChartPosition ChartCellOf(StrictGameId id, const ChartOptions& options = {});

std::string ExportChartSvg(const TopologyAtlas& atlas,
                           const ChartOptions& options = {});

// One line per game: id, payoff string, family, subfamily, classes, nash.
std::string ExportGamesCsv(const TopologyAtlas& atlas,
                           const TieLattice& lattice, bool with_ties);

// Throws IoFailure.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace gametopo

#endif  // GAMETOPO_EXPORT_H_
