#include "gametopo/export.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gametopo/analysis.h"
#include "gametopo/errors.h"
#include "gametopo/identifiers.h"

namespace gametopo {
namespace {

using nlohmann::json;

std::string ProfileName(const StrategyProfile& p) {
  return std::string(CellName(p.cell()));
}

json ProfilesJson(const std::vector<StrategyProfile>& profiles) {
  json out = json::array();
  for (const StrategyProfile& p : profiles) out.push_back(ProfileName(p));
  return out;
}

json AnalysisJson(const AnalysisReport& r) {
  json out;
  out["nash_profiles"] = ProfilesJson(r.nash_profiles);
  out["nash_payoffs"] = json::array();
  for (const auto& [row, col] : r.nash_payoffs) {
    out["nash_payoffs"].push_back({row, col});
  }
  out["dominant_row"] = nullptr;
  if (r.dominance.row) {
    out["dominant_row"] = {{"move", RowMoveName(r.dominance.row->move)},
                           {"strict", r.dominance.row->strict}};
  }
  out["dominant_col"] = nullptr;
  if (r.dominance.col) {
    out["dominant_col"] = {{"move", ColMoveName(r.dominance.col->move)},
                           {"strict", r.dominance.col->strict}};
  }
  out["pareto_optimal"] = ProfilesJson(r.pareto_optimal);
  out["pareto_inferior_equilibria"] = ProfilesJson(r.pareto_inferior_equilibria);
  out["maximin"] = {{"row", RowMoveName(r.maximin.row)},
                    {"row_guarantee", r.maximin.row_guarantee},
                    {"row_tied", r.maximin.row_tied},
                    {"col", ColMoveName(r.maximin.col)},
                    {"col_guarantee", r.maximin.col_guarantee},
                    {"col_tied", r.maximin.col_tied}};
  out["symmetric"] = r.symmetric;
  out["alignment"] = AlignmentName(r.alignment);
  return out;
}

json GameJson(const OrdinalGame& game, const TopologyAtlas& atlas,
              const TieLattice& lattice) {
  json out;
  out["payoff_string"] = EncodeGameString(game);
  out["ranks"] = {{"row", game.row_ranks().values()},
                  {"col", game.col_ranks().values()}};
  out["analysis"] = AnalysisJson(AnalyzeGame(game));
  out["quadrant"] = QuadrantName(Canonicalize(game).quadrant);

  const PreferenceClass row_class = ClassifyPreferences(game.row_ranks());
  const PreferenceClass col_class = ClassifyPreferences(game.col_ranks());
  out["classes"] = {{"row", std::string(1, row_class.letter)},
                    {"col", std::string(1, col_class.letter)},
                    {"row_label", row_class.label},
                    {"col_label", col_class.label}};
  const NaturalOrderCoordinate coord = lattice.NaturalOrder(game);
  out["natural_order"] = {{"row_class", coord.row_class_index},
                          {"col_class", coord.col_class_index},
                          {"position", coord.position},
                          {"block_size", coord.block_size},
                          {"x", coord.x},
                          {"y", coord.y}};
  out["tie_coordinate"] = EncodeTieCoordinate(game, lattice);
  out["geographic_alias"] = GeographicAlias(game, lattice);

  out["id"] = nullptr;
  out["family"] = nullptr;
  if (game.strict()) {
    const StrictGameId id = atlas.Locate(game);
    const PayoffFamily f = ClassifyFamily(game);
    out["id"] = id.ToString();
    out["layer"] = id.layer;
    out["row"] = id.row;
    out["col"] = id.col;
    out["tile"] = TileOf(id).ToString();
    out["family"] = {
        {"family", FamilyName(f.family)},
        {"subfamily", f.subfamily ? json(SubfamilyName(*f.subfamily))
                                  : json(nullptr)},
        {"color", FamilyColor(f.family)}};
  }
  return out;
}

json EdgesJson(const TopologyAtlas& atlas) {
  json out = json::array();
  for (const AtlasEdge& e : atlas.edges()) {
    out.push_back({{"from", e.from.ToString()},
                   {"to", e.to.ToString()},
                   {"player", PlayerName(e.label.player)},
                   {"kind", SwapKindName(e.label.kind)}});
  }
  return out;
}

json TileLatticeEdgesJson(const TieLattice& lattice) {
  json out = json::array();
  const auto& games = lattice.games();
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (const TieLattice::Edge& e : lattice.moves(static_cast<int>(i))) {
      if (e.move != HalfSwapMove::kMakeTie) continue;
      out.push_back({{"from", EncodeGameString(games[i])},
                     {"to", EncodeGameString(games[e.target])},
                     {"player", PlayerName(e.player)},
                     {"merged_rank", e.rank}});
    }
  }
  return out;
}

int PositiveMod(int a, int m) { return ((a % m) + m) % m; }

std::string Escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string_view FamilyColor(Family f) {
  switch (f) {
    case Family::kWinWin: return "#9fd89f";
    case Family::kBiased: return "#f6e58d";
    case Family::kSecondBest: return "#a6cee3";
    case Family::kUnfair: return "#fdbf6f";
    case Family::kPdFamily: return "#f08080";
    case Family::kCyclic: return "#cab2d6";
  }
  return "#ffffff";
}

std::string ExportAtlasJson(const TopologyAtlas& atlas,
                            const TieLattice& lattice, JsonVariant variant) {
  const bool with_ties = variant == JsonVariant::kAtlasWithTies ||
                         variant == JsonVariant::kUiDataWithTies;
  const bool ui = variant == JsonVariant::kUiData ||
                  variant == JsonVariant::kUiDataWithTies;
  json doc;
  doc["schema"] = kAtlasSchema;
  doc["version"] = kAtlasSchemaVersion;
  doc["variant"] = ui ? "ui-data" : (with_ties ? "atlas-ties" : "atlas");
  doc["with_ties"] = with_ties;

  json games = json::array();
  if (with_ties) {
    for (const OrdinalGame& g : lattice.games()) {
      games.push_back(GameJson(g, atlas, lattice));
    }
  } else {
    for (const TopologyAtlas::Entry& e : atlas.games()) {
      games.push_back(GameJson(e.game, atlas, lattice));
    }
  }
  doc["games"] = std::move(games);
  doc["edges"] = EdgesJson(atlas);

  doc["hotspots"] = json::array();
  for (const Hotspot& h : atlas.hotspots()) {
    doc["hotspots"].push_back({h.first.ToString(), h.second.ToString()});
  }
  doc["pipes"] = json::array();
  for (const Pipe& p : atlas.pipes()) {
    json cycle = json::array();
    for (const TileId& t : p.tiles) cycle.push_back(t.ToString());
    doc["pipes"].push_back(std::move(cycle));
  }
  if (with_ties) doc["half_swap_edges"] = TileLatticeEdgesJson(lattice);

  if (ui) {
    json legend = json::array();
    for (Family f : kAllFamilies) {
      legend.push_back({{"family", FamilyName(f)}, {"color", FamilyColor(f)}});
    }
    doc["legend"] = std::move(legend);
    const ChartOptions defaults;
    doc["chart"] = {{"default_scroll", {defaults.scroll_rows,
                                        defaults.scroll_cols}},
                    {"quadrants", {{"1", "SW"}, {"2", "SE"},
                                   {"3", "NE"}, {"4", "NW"}}}};
  }
  return doc.dump(2) + "\n";
}

std::string ExportGameJson(const OrdinalGame& game, const TopologyAtlas& atlas,
                           const TieLattice& lattice) {
  return GameJson(game, atlas, lattice).dump(2) + "\n";
}

std::string ExportDot(const TopologyAtlas& atlas, const DotFilter& filter) {
  std::vector<bool> keep(144, false);
  for (const TopologyAtlas::Entry& e : atlas.games()) {
    switch (filter.kind) {
      case DotFilter::Kind::kAll: keep[e.id.index()] = true; break;
      case DotFilter::Kind::kLayer:
        keep[e.id.index()] = e.id.layer == filter.layer;
        break;
      case DotFilter::Kind::kTile:
        keep[e.id.index()] = TileOf(e.id) == TileOf(filter.member);
        break;
    }
  }
  std::ostringstream out;
  out << "graph gametopo {\n";
  out << "  node [shape=box, style=filled];\n";
  for (const TopologyAtlas::Entry& e : atlas.games()) {
    if (!keep[e.id.index()]) continue;
    const Family f = ClassifyFamily(e.game).family;
    out << "  \"" << e.id.ToString() << "\" [label=\"" << e.id.ToString()
        << "\", class=\"" << FamilyName(f) << "\", fillcolor=\""
        << FamilyColor(f) << "\"];\n";
  }
  for (const AtlasEdge& e : atlas.edges()) {
    if (!keep[e.from.index()] || !keep[e.to.index()]) continue;
    std::string kind(SwapKindName(e.label.kind));
    kind[0] = static_cast<char>(kind[0] - 'a' + 'A');
    out << "  \"" << e.from.ToString() << "\" -- \"" << e.to.ToString()
        << "\" [label=\"" << kind << "\", player=\""
        << PlayerName(e.label.player) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

ChartPosition ChartCellOf(StrictGameId id, const ChartOptions& options) {
  static constexpr std::array<ChartPosition, 4> kQuadrant = {{
      {0, 0}, {6, 0}, {6, 6}, {0, 6}}};
  const ChartPosition origin = kQuadrant[id.layer - 1];
  return {origin.x + PositiveMod(id.col - 1 + options.scroll_cols, 6),
          origin.y + PositiveMod(id.row - 1 + options.scroll_rows, 6)};
}

std::string ExportChartSvg(const TopologyAtlas& atlas,
                           const ChartOptions& options) {
  constexpr int kCell = 76;
  constexpr int kMargin = 40;
  constexpr int kGrid = 12 * kCell;
  constexpr int kLegendHeight = 120;
  const int width = kGrid + 2 * kMargin;
  const int height = kGrid + 2 * kMargin + kLegendHeight;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\" font-family=\"sans-serif\">\n";
  out << "<title>Topology of 2x2 ordinal games with payoff families</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const TopologyAtlas::Entry& e : atlas.games()) {
    const ChartPosition pos = ChartCellOf(e.id, options);
    const int left = kMargin + pos.x * kCell;
    const int top = kMargin + (11 - pos.y) * kCell;
    const PayoffFamily fam = ClassifyFamily(e.game);
    const AnalysisReport report = AnalyzeGame(e.game);

    out << "<g class=\"game family-" << FamilyName(fam.family)
        << "\" data-id=\"" << e.id.ToString() << "\" data-x=\"" << pos.x
        << "\" data-y=\"" << pos.y << "\">\n";
    out << "  <rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << FamilyColor(fam.family)
        << "\" stroke=\"#777\" stroke-width=\"0.5\"/>\n";
    out << "  <text x=\"" << left + 3 << "\" y=\"" << top + 11
        << "\" font-size=\"9\" fill=\"#333\">" << e.id.ToString() << "</text>\n";

    for (Cell c : kAllCells) {
      const StrategyProfile p = StrategyProfile::FromCell(c);
      const int cx = left + 22 + static_cast<int>(p.col) * 32;
      const int cy = top + 34 + static_cast<int>(p.row) * 26;
      const bool nash = std::find(report.nash_profiles.begin(),
                                  report.nash_profiles.end(),
                                  p) != report.nash_profiles.end();
      const bool optimal = std::find(report.pareto_optimal.begin(),
                                     report.pareto_optimal.end(),
                                     p) != report.pareto_optimal.end();
      const bool maximin = report.nash_profiles.empty() &&
                           p.row == report.maximin.row &&
                           p.col == report.maximin.col;
      if (nash) {
        const bool inferior = !optimal;
        out << "  <ellipse class=\"nash" << (inferior ? " pareto-inferior" : "")
            << "\" cx=\"" << cx << "\" cy=\"" << cy - 4
            << "\" rx=\"14\" ry=\"10\" fill=\"none\" stroke=\""
            << (inferior ? "#b00" : "#000") << "\" stroke-width=\"1.2\"/>\n";
      } else if (maximin) {
        out << "  <ellipse class=\"maximin\" cx=\"" << cx << "\" cy=\""
            << cy - 4 << "\" rx=\"14\" ry=\"10\" fill=\"none\" stroke=\"#000\""
            << " stroke-dasharray=\"2,2\"/>\n";
      }
      out << "  <text x=\"" << cx << "\" y=\"" << cy
          << "\" font-size=\"11\" text-anchor=\"middle\""
          << (optimal ? " font-weight=\"bold\"" : "") << ">" << e.game.row(c)
          << "," << e.game.col(c) << "</text>\n";
    }

    if (options.order_glyphs) {
      constexpr int kGlyph = 14;
      const int gx = left + kCell - kGlyph - 3;
      const int gy = top + 3;
      out << "  <g class=\"order-graph\"><rect x=\"" << gx << "\" y=\"" << gy
          << "\" width=\"" << kGlyph << "\" height=\"" << kGlyph
          << "\" fill=\"white\" stroke=\"#999\" stroke-width=\"0.5\"/>";
      for (Cell c : kAllCells) {
        const double ux = (e.game.row(c) - 1) / 3.0;
        const double uy = (e.game.col(c) - 1) / 3.0;
        out << "<circle cx=\"" << gx + ux * kGlyph << "\" cy=\""
            << gy + kGlyph - uy * kGlyph << "\" r=\"1.3\"/>";
      }
      out << "</g>\n";
    }
    out << "</g>\n";
  }

  for (int q = 0; q < 2; ++q) {
    const int at = kMargin + 6 * kCell;
    out << "<line x1=\"" << (q == 0 ? at : kMargin) << "\" y1=\""
        << (q == 0 ? kMargin : at) << "\" x2=\""
        << (q == 0 ? at : kMargin + kGrid) << "\" y2=\""
        << (q == 0 ? kMargin + kGrid : at)
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  static constexpr std::array<std::pair<int, const char*>, 4> kLayerLabels = {{
      {1, "Layer 1"}, {2, "Layer 2"}, {3, "Layer 3"}, {4, "Layer 4"}}};
  for (const auto& [layer, label] : kLayerLabels) {
    const ChartPosition origin = ChartCellOf({layer, 1, 1}, {0, 0, false});
    const int lx = kMargin + origin.x * kCell;
    const int ly = origin.y == 0 ? kMargin + kGrid + 14 : kMargin - 6;
    out << "<text x=\"" << lx << "\" y=\"" << ly
        << "\" font-size=\"12\" font-weight=\"bold\">" << label << "</text>\n";
  }

  const int legend_top = kMargin + kGrid + 30;
  out << "<g class=\"legend\">\n";
  int index = 0;
  for (Family f : kAllFamilies) {
    const int lx = kMargin + (index % 3) * 260;
    const int ly = legend_top + (index / 3) * 24;
    out << "  <rect x=\"" << lx << "\" y=\"" << ly
        << "\" width=\"16\" height=\"16\" fill=\"" << FamilyColor(f)
        << "\" stroke=\"#777\"/>\n";
    out << "  <text x=\"" << lx + 22 << "\" y=\"" << ly + 13
        << "\" font-size=\"12\">" << Escape(FamilyName(f)) << "</text>\n";
    ++index;
  }
  out << "  <text x=\"" << kMargin << "\" y=\"" << legend_top + 64
      << "\" font-size=\"11\">Circled: Nash equilibrium (red: Pareto-inferior;"
         " dashed: maximin for cyclic games). Bold: Pareto optimal. Cells show"
         " row,column ranks. Row 1 south, column 1 west; layers scrolled by ("
      << options.scroll_rows << "," << options.scroll_cols << ").</text>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string ExportGamesCsv(const TopologyAtlas& atlas,
                           const TieLattice& lattice, bool with_ties) {
  std::ostringstream out;
  out << "id,payoff_string,family,subfamily,row_class,col_class,"
         "tie_coordinate,nash_payoffs\n";
  auto line = [&](const OrdinalGame& g) {
    std::string id, family, subfamily;
    if (g.strict()) {
      id = atlas.Locate(g).ToString();
      const PayoffFamily f = ClassifyFamily(g);
      family = FamilyName(f.family);
      if (f.subfamily) subfamily = SubfamilyName(*f.subfamily);
    }
    std::string nash;
    for (const auto& [r, c] : NashPayoffs(g)) {
      if (!nash.empty()) nash += " ";
      nash += std::to_string(r) + "-" + std::to_string(c);
    }
    out << id << ",\"" << EncodeGameString(g) << "\"," << family << ','
        << subfamily << ',' << ClassifyPreferences(g.row_ranks()).letter << ','
        << ClassifyPreferences(g.col_ranks()).letter << ','
        << EncodeTieCoordinate(g, lattice) << ',' << nash << '\n';
  };
  if (with_ties) {
    for (const OrdinalGame& g : lattice.games()) line(g);
  } else {
    for (const TopologyAtlas::Entry& e : atlas.games()) line(e.game);
  }
  return out.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open " + path.string() + " for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoFailure("failed writing " + path.string());
}

}  // namespace gametopo
