#include "gametopo/export.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>

#include <gtest/gtest.h>

#include "gametopo/analysis.h"
#include "gametopo/errors.h"
#include "json.hpp"

namespace gametopo {
namespace {

using nlohmann::json;

const TopologyAtlas& Atlas() { return DefaultAtlas(); }
const TieLattice& Lattice() { return DefaultTieLattice(); }

json Export(JsonVariant v) {
  return json::parse(ExportAtlasJson(Atlas(), Lattice(), v));
}

TEST(AtlasJsonTest, StrictDocument) {
  const json doc = Export(JsonVariant::kAtlas);
  EXPECT_EQ(doc["schema"], "gametopo-atlas");
  EXPECT_EQ(doc["version"], kAtlasSchemaVersion);
  EXPECT_EQ(doc["games"].size(), 144u);
  EXPECT_EQ(doc["edges"].size(), 432u);
  EXPECT_EQ(doc["hotspots"].size(), 6u);
  EXPECT_EQ(doc["pipes"].size(), 6u);
  EXPECT_FALSE(doc["with_ties"].get<bool>());
  EXPECT_FALSE(doc.contains("half_swap_edges"));

  const json& pd = doc["games"][0];
  EXPECT_EQ(pd["id"], "111");
  EXPECT_EQ(pd["payoff_string"], "game(1,4;3,3/2,2;4,1)");
  EXPECT_EQ(pd["family"]["family"], "pd-family");
  EXPECT_EQ(pd["family"]["subfamily"], "prisoners-dilemma");
  EXPECT_EQ(pd["analysis"]["nash_profiles"], json::array({"DL"}));
  EXPECT_EQ(pd["analysis"]["nash_payoffs"], json::parse("[[2,2]]"));
  EXPECT_EQ(pd["analysis"]["symmetric"], true);
  EXPECT_EQ(pd["classes"]["row"], "H");
  EXPECT_EQ(pd["tie_coordinate"], "44-1");
  EXPECT_EQ(pd["quadrant"], "NE");
  EXPECT_EQ(pd["tile"], "T1.1.1");
}

TEST(AtlasJsonTest, EdgesMatchAtlas) {
  const json doc = Export(JsonVariant::kAtlas);
  std::map<std::string, int> kinds;
  for (const json& e : doc["edges"]) {
    kinds[e["kind"].get<std::string>()]++;
    EXPECT_NE(e["from"], e["to"]);
  }
  EXPECT_EQ(kinds, (std::map<std::string, int>{
                       {"low", 144}, {"mid", 144}, {"high", 144}}));
}

TEST(AtlasJsonTest, WithTiesDocument) {
  const json doc = Export(JsonVariant::kAtlasWithTies);
  EXPECT_EQ(doc["games"].size(), 1413u);
  EXPECT_TRUE(doc["with_ties"].get<bool>());
  std::set<std::string> strings;
  int strict = 0;
  for (const json& g : doc["games"]) {
    strings.insert(g["payoff_string"].get<std::string>());
    strict += !g["id"].is_null();
  }
  EXPECT_EQ(strings.size(), 1413u);
  EXPECT_EQ(strict, 144);
  std::size_t makes = 0;
  for (std::size_t i = 0; i < Lattice().games().size(); ++i) {
    for (const auto& e : Lattice().moves(static_cast<int>(i))) {
      makes += e.move == HalfSwapMove::kMakeTie;
    }
  }
  EXPECT_EQ(doc["half_swap_edges"].size(), makes);
}

TEST(AtlasJsonTest, UiDataCarriesLegendAndChart) {
  const json doc = Export(JsonVariant::kUiData);
  EXPECT_EQ(doc["variant"], "ui-data");
  EXPECT_EQ(doc["legend"].size(), 6u);
  EXPECT_EQ(doc["chart"]["default_scroll"], json::parse("[5,5]"));
  EXPECT_EQ(doc["games"].size(), 144u);
  EXPECT_TRUE(Export(JsonVariant::kUiDataWithTies)["with_ties"].get<bool>());
}

TEST(AtlasJsonTest, ByteDeterministic) {
  for (JsonVariant v : {JsonVariant::kAtlas, JsonVariant::kAtlasWithTies,
                        JsonVariant::kUiData}) {
    EXPECT_EQ(ExportAtlasJson(Atlas(), Lattice(), v),
              ExportAtlasJson(BuildAtlas(), BuildTieLattice(Atlas()), v));
  }
}

int CountOf(const std::string& text, const std::regex& re) {
  return static_cast<int>(std::distance(
      std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

const std::regex kDotNode(R"re(\n  "\d{3}" \[label)re");
const std::regex kDotEdge(R"re( -- )re");

TEST(DotTest, FullGraph) {
  const std::string dot = ExportDot(Atlas());
  EXPECT_EQ(CountOf(dot, kDotNode), 144);
  EXPECT_EQ(CountOf(dot, kDotEdge), 432);
  EXPECT_EQ(dot.rfind("graph gametopo {", 0), 0u);
}

TEST(DotTest, LayerIsFourRegularTorus) {
  DotFilter f;
  f.kind = DotFilter::Kind::kLayer;
  f.layer = 1;
  const std::string dot = ExportDot(Atlas(), f);
  EXPECT_EQ(CountOf(dot, kDotNode), 36);
  EXPECT_EQ(CountOf(dot, kDotEdge), 72);
  std::map<std::string, int> degree;
  const std::regex edge(R"re("(\d{3})" -- "(\d{3})")re");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge);
       it != std::sregex_iterator(); ++it) {
    ++degree[(*it)[1]];
    ++degree[(*it)[2]];
  }
  EXPECT_EQ(degree.size(), 36u);
  for (const auto& [id, d] : degree) EXPECT_EQ(d, 4) << id;
}

TEST(DotTest, TileOfPrisonersDilemma) {
  DotFilter f;
  f.kind = DotFilter::Kind::kTile;
  f.member = {1, 1, 1};
  const std::string dot = ExportDot(Atlas(), f);
  EXPECT_EQ(CountOf(dot, kDotNode), 4);
  EXPECT_EQ(CountOf(dot, kDotEdge), 4);
  EXPECT_EQ(CountOf(dot, std::regex(R"(label="Low")")), 4);
}

TEST(ChartTest, DefaultScrollPutsPdAtTheCenter) {
  // PD's cell touches the chart's central point, its tile filling the
  // northeast corner of layer 1's quadrant.
  EXPECT_EQ(ChartCellOf({1, 1, 1}), (ChartPosition{5, 5}));
  EXPECT_EQ(ChartCellOf({1, 6, 6}), (ChartPosition{4, 4}));
  EXPECT_EQ(ChartCellOf({1, 1, 1}, {0, 0, false}), (ChartPosition{0, 0}));
}

TEST(ChartTest, CellsAreABijectionAndSymmetricGamesShareADiagonal) {
  std::set<std::pair<int, int>> cells;
  for (const auto& [id, game] : Atlas().games()) {
    const ChartPosition p = ChartCellOf(id);
    EXPECT_GE(p.x, 0);
    EXPECT_LT(p.x, 12);
    EXPECT_GE(p.y, 0);
    EXPECT_LT(p.y, 12);
    cells.insert({p.x, p.y});
    if (IsSymmetric(game)) EXPECT_EQ(p.x, p.y) << id.ToString();
  }
  EXPECT_EQ(cells.size(), 144u);
}

TEST(ChartTest, SvgPaintsEveryGame) {
  const std::string svg = ExportChartSvg(Atlas());
  EXPECT_EQ(CountOf(svg, std::regex(R"(<g class="game family-)")), 144);
  std::set<std::string> ids;
  const std::regex id_re(R"re(data-id="(\d{3})")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), id_re);
       it != std::sregex_iterator(); ++it) {
    ids.insert((*it)[1]);
  }
  EXPECT_EQ(ids.size(), 144u);
  EXPECT_NE(svg.find("class=\"legend\""), std::string::npos);
  EXPECT_EQ(svg, ExportChartSvg(Atlas()));
  EXPECT_EQ(svg.find("order-graph"), std::string::npos);
  const std::string glyphs = ExportChartSvg(Atlas(), {5, 5, true});
  EXPECT_EQ(CountOf(glyphs, std::regex(R"(class="order-graph")")), 144);
}

TEST(CsvTest, Rows) {
  const std::string csv = ExportGamesCsv(Atlas(), Lattice(), false);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 145);
  const std::string ties = ExportGamesCsv(Atlas(), Lattice(), true);
  EXPECT_EQ(std::count(ties.begin(), ties.end(), '\n'), 1414);
}

TEST(WriteTextFileTest, WritesAndFails) {
  const auto path =
      std::filesystem::temp_directory_path() / "gametopo_export_test.txt";
  WriteTextFile(path, "hello\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "hello");
  std::filesystem::remove(path);
  EXPECT_THROW(WriteTextFile("/nonexistent-dir/x.txt", "x"), IoFailure);
}

}  // namespace
}  // namespace gametopo
