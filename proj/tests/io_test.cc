/*! \file io_test.cc
  \brief GraphML, CSV and heatmap serialization.
*/

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "support.hh"
#include "wom/generators.hh"
#include "wom/graphml.hh"
#include "wom/report.hh"

using namespace wom;
using namespace wom::testing;

namespace {

  std::vector<std::string> lines(const std::string& text)
  {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  }

  std::size_t parse_line_of(std::string_view doc)
  {
    try {
      parse_graphml(doc);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  }

  CellSummary cell(double curious, double enthusiastic, double value)
  {
    CellSummary c;
    c.network_model = "ws";
    c.k = 0.01;
    c.supporters = 0.1;
    c.curious = curious;
    c.enthusiastic = enthusiastic;
    c.mean_final_both = value;
    c.n = 1;
    return c;
  }

  RunRecord sample_record(double both, std::uint64_t seed)
  {
    RunRecord r;
    r.network_model = "sii";
    r.network_seed = seed;
    r.sim_seed = seed ^ 0xffffffffffffull;
    r.k = 0.1;
    r.curious = 1.0 / 3.0;
    r.enthusiastic = 0.05;
    r.supporters = 0.5;
    r.final_aware = 0.987654321;
    r.final_both = both;
    r.rounds = 321;
    r.hit_max_rounds = seed % 2;
    r.metrics = compute_metrics(complete(4));
    return r;
  }

} // namespace

TEST_CASE("graphml writer layout")
{
  const std::string k3 = to_graphml(complete(3));
  CHECK(k3 ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        "  <graph id=\"G\" edgedefault=\"undirected\">\n"
        "    <node id=\"n0\"/>\n"
        "    <node id=\"n1\"/>\n"
        "    <node id=\"n2\"/>\n"
        "    <edge source=\"n0\" target=\"n1\"/>\n"
        "    <edge source=\"n0\" target=\"n2\"/>\n"
        "    <edge source=\"n1\" target=\"n2\"/>\n"
        "  </graph>\n"
        "</graphml>\n");

  std::ostringstream out;
  CHECK(write_graphml(complete(3), out) == k3.size());

  GraphmlDocument empty = parse_graphml(to_graphml(Graph::from_edges(2, {})));
  CHECK(empty.graph.node_count() == 2);
  CHECK(empty.graph.edge_count() == 0);
  CHECK_FALSE(empty.remapped);
}

TEST_CASE("graphml round-trips generated graphs")
{
  for (std::uint64_t s = 1; s <= 3; ++s) {
    for (const NetworkParams& p :
         {NetworkParams{WsParams{}}, NetworkParams{FfParams{}}, NetworkParams{SiiParams{}}}) {
      Graph g = generate(p, RngSeed{s});
      const std::string text = to_graphml(g);
      GraphmlDocument doc = parse_graphml(text);
      CHECK(doc.graph == g);
      CHECK_FALSE(doc.remapped);
      CHECK(to_graphml(doc.graph) == text);
    }
  }
}

TEST_CASE("graphml reader tolerates foreign content")
{
  const char* doc = R"(<?xml version="1.0"?>
<!-- produced elsewhere -->
<graphml xmlns="http://graphml.graphdrawing.org/xmlns" xmlns:y="http://www.yworks.com/xml/graphml">
  <key id="w" for="edge" attr.name="weight" attr.type="double"/>
  <graph id="G" edgedefault="undirected" y:extra="1">
    <desc>three &amp; a half</desc>
    <node id="a"><data key="w">1.5</data></node>
    <node id="b"/>
    <node id="c"><data key="w"><![CDATA[<not markup>]]></data></node>
    <edge id="e1" source="a" target="b"><data key="w">2</data></edge>
    <edge source="c" target="b" directed="false"/>
  </graph>
</graphml>
)";
  GraphmlDocument g = parse_graphml(doc);
  CHECK(g.graph.node_count() == 3);
  CHECK(g.graph.edge_count() == 2);
  CHECK(g.graph.has_edge(0, 1));
  CHECK(g.graph.has_edge(1, 2));
  CHECK(g.remapped);
  CHECK(g.node_ids == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("graphml reader rejects what it cannot represent")
{
  CHECK(parse_line_of("<graphml>\n<graph edgedefault=\"directed\">\n</graph></graphml>") == 2);
  CHECK(parse_line_of("<graphml><graph edgedefault=\"undirected\">\n<node id=\"n0\"/>\n"
                      "<edge source=\"n0\" target=\"n7\"/>\n</graph></graphml>") == 3);
  CHECK(parse_line_of("<graphml><graph edgedefault=\"undirected\">\n<node id=\"n0\"/>\n"
                      "<node id=\"n1\"/>\n<edge source=\"n0\" target=\"n1\" directed=\"true\"/>"
                      "</graph></graphml>") == 4);
  CHECK(parse_line_of("<graphml><graph edgedefault=\"undirected\"><node id=\"n0\"/>"
                      "<edge source=\"n0\" target=\"n0\"/></graph></graphml>") == 1);
  CHECK(parse_line_of("<graphml><graph edgedefault=\"undirected\"><node id=\"x\"/>\n"
                      "<node id=\"x\"/></graph></graphml>") == 2);
  CHECK(parse_line_of("<graphml><graph edgedefault=\"undirected\">\n<node id=\"n0\">\n"
                      "</graph></graphml>") > 0);
  CHECK(parse_line_of("<graphml><graph edgedefault=\"undirected\"></graph>"
                      "<graph edgedefault=\"undirected\"></graph></graphml>") > 0);
  CHECK(parse_line_of("not xml at all") > 0);
  CHECK(parse_line_of("") > 0);
}

TEST_CASE("graphml files")
{
  const auto path = std::filesystem::temp_directory_path() / "wom_io_test.graphml";
  Graph g = generate_sii({4, 6, 0.5, 1}, RngSeed{3});
  CHECK(write_graphml(g, path) == to_graphml(g).size());
  CHECK(read_graphml(path).graph == g);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_graphml(path), IoError);
}

TEST_CASE("metrics row")
{
  CHECK(metrics_row(compute_metrics(complete(5))) ==
        "5,10,1.000000,1.000000,1.000000,1,true");
  std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK(metrics_row(compute_metrics(Graph::from_edges(4, two))) ==
        "4,2,0.333333,NA,0.000000,NA,false");
}

TEST_CASE("records csv")
{
  std::ostringstream empty;
  CHECK(write_records_csv(std::vector<RunRecord>{}, empty) == kRecordsHeader.size() + 1);
  CHECK(empty.str() == std::string(kRecordsHeader) + "\n");

  std::vector<RunRecord> one{sample_record(0.25, 7)};
  std::ostringstream out;
  const std::size_t bytes = write_records_csv(one, out);
  CHECK(bytes == out.str().size());
  auto rows = lines(out.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == "sii,7,281474976710648,0.100000,0.333333,0.050000,0.500000,0.987654,"
                   "0.250000,321,1,4,6,1.000000,1.000000,1.000000,1");

  std::vector<RunRecord> many;
  for (std::uint64_t s = 0; s < 12; ++s) many.push_back(sample_record(s / 11.0, s));
  many[3].metrics = compute_metrics(Graph::from_edges(3, {}));
  std::ostringstream text;
  write_records_csv(many, text);
  std::istringstream in(text.str());
  std::vector<RunRecord> back = read_records_csv(in);
  REQUIRE(back.size() == many.size());
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(back[i].network_seed == many[i].network_seed);
    CHECK(back[i].sim_seed == many[i].sim_seed);
    CHECK(std::abs(back[i].curious - many[i].curious) <= 1e-6);
    CHECK(std::abs(back[i].final_both - many[i].final_both) <= 1e-6);
    CHECK(std::abs(back[i].final_aware - many[i].final_aware) <= 1e-6);
    CHECK(back[i].rounds == many[i].rounds);
    CHECK(back[i].hit_max_rounds == many[i].hit_max_rounds);
    CHECK(back[i].metrics.avg_path_length.has_value() ==
          many[i].metrics.avg_path_length.has_value());
    CHECK(back[i].metrics.diameter == many[i].metrics.diameter);
  }
  std::ostringstream again;
  write_records_csv(back, again);
  CHECK(again.str() == text.str());

  // aggregation from the file matches aggregation in memory
  std::vector<CellSummary> direct = aggregate(many), reread = aggregate(back);
  REQUIRE(direct.size() == reread.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(std::abs(direct[i].mean_final_both - reread[i].mean_final_both) <= 1e-6);
    CHECK(std::abs(direct[i].sd_final_both - reread[i].sd_final_both) <= 1e-6);
    CHECK(std::abs(direct[i].mean_final_aware - reread[i].mean_final_aware) <= 1e-6);
    CHECK(direct[i].mean_rounds == reread[i].mean_rounds);
    CHECK(direct[i].n == reread[i].n);
  }

  std::istringstream bad_header("network_model,oops\n");
  CHECK_THROWS_AS(read_records_csv(bad_header), ParseError);
  std::istringstream bad_cell(std::string(kRecordsHeader) + "\n" +
                              "ws,1,2,x,0,0,0,0,0,1,0,2,1,1,1,0,1\n");
  CHECK_THROWS_AS(read_records_csv(bad_cell), ParseError);
  std::istringstream short_row(std::string(kRecordsHeader) + "\nws,1,2\n");
  CHECK_THROWS_AS(read_records_csv(short_row), ParseError);
}

TEST_CASE("summaries csv")
{
  std::vector<CellSummary> cells{cell(0.0, 0.0, 0.125), cell(0.05, 0.0, 1.0 / 7.0)};
  cells[1].sd_final_both = 0.70710678;
  cells[1].mean_rounds = 12.5;
  cells[1].n = 10;
  std::ostringstream out;
  write_summaries_csv(cells, out);
  auto rows = lines(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == kSummariesHeader);
  CHECK(rows[2] == "ws,0.010000,0.100000,0.050000,0.000000,0.142857,0.707107,0.000000,"
                   "12.500000,10");
  std::istringstream in(out.str());
  std::vector<CellSummary> back = read_summaries_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(std::abs(back[1].mean_final_both - 1.0 / 7.0) <= 1e-6);
  CHECK(back[1].n == 10);
}

TEST_CASE("heatmap colours")
{
  CHECK(heat_color(0.0) == std::array<std::uint8_t, 3>{0, 0, 64});
  CHECK(heat_color(1.0) == std::array<std::uint8_t, 3>{255, 255, 255});
  CHECK(heat_color(0.5) == std::array<std::uint8_t, 3>{128, 128, 160});
  CHECK(heat_color(0.25) == std::array<std::uint8_t, 3>{64, 64, 112});
}

TEST_CASE("heatmap of a 2x2 panel")
{
  // curious across, enthusiastic up: (0,0)=0 (1,0)=1 (0,1)=0.5 (1,1)=0.25
  std::vector<CellSummary> cells{cell(0.0, 0.0, 0.0), cell(1.0, 0.0, 1.0),
                                 cell(0.0, 1.0, 0.5), cell(1.0, 1.0, 0.25)};
  std::vector<PanelKey> keys = panels(cells);
  REQUIRE(keys.size() == 1);
  CHECK(panel_basename(keys[0]) == "heatmap_ws_k0.01_s0.1");

  Heatmap h = build_heatmap(cells, keys[0]);
  CHECK(h.curious == std::vector<double>{0.0, 1.0});
  CHECK(h.enthusiastic == std::vector<double>{0.0, 1.0});
  CHECK(heatmap_csv(h) == "enthusiastic\\curious,0.000000,1.000000\n"
                          "0.000000,0.000000,1.000000\n"
                          "1.000000,0.500000,0.250000\n");

  CHECK(heatmap_ppm(h, 1) == "P3\n2 2\n255\n"
                             "128 128 160\n64 64 112\n"
                             "0 0 64\n255 255 255\n");
  auto px = lines(heatmap_ppm(h, 3));
  REQUIRE(px.size() == 3 + 36);
  CHECK(px[1] == "6 6");
  // the top-left block holds (curious 0, enthusiastic 1), the bottom-right (1, 0)
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) {
      CHECK(px[3 + y * 6 + x] == "128 128 160");
      CHECK(px[3 + (y + 3) * 6 + x + 3] == "255 255 255");
    }
  CHECK(heatmap_ppm(h) == heatmap_ppm(h));
}

TEST_CASE("uniform panels and a full default panel")
{
  std::vector<CellSummary> dark, bright;
  for (double c : unit_axis())
    for (double e : unit_axis()) {
      dark.push_back(cell(c, e, 0.0));
      bright.push_back(cell(c, e, 1.0));
    }
  Heatmap d = build_heatmap(dark, panels(dark)[0]);
  CHECK(d.curious.size() == 21);
  CHECK(d.enthusiastic.size() == 21);
  CHECK(lines(heatmap_csv(d)).size() == 22);
  auto dpx = lines(heatmap_ppm(d, 2));
  CHECK(dpx[1] == "42 42");
  for (std::size_t i = 3; i < dpx.size(); ++i) REQUIRE(dpx[i] == "0 0 64");
  auto bpx = lines(heatmap_ppm(build_heatmap(bright, panels(bright)[0]), 2));
  for (std::size_t i = 3; i < bpx.size(); ++i) REQUIRE(bpx[i] == "255 255 255");
}

TEST_CASE("heatmap errors")
{
  std::vector<CellSummary> holes{cell(0.0, 0.0, 0.1), cell(1.0, 0.0, 0.2), cell(0.0, 1.0, 0.3)};
  try {
    build_heatmap(holes, panels(holes)[0]);
    FAIL("expected a HeatmapError");
  } catch (const HeatmapError& e) {
    CHECK(std::string(e.what()).find("curious=1.000000, enthusiastic=1.000000") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(build_heatmap(holes, PanelKey{"ff", 0.01, 0.1}), HeatmapError);
  std::vector<CellSummary> out_of_range{cell(0.0, 0.0, 1.5)};
  CHECK_THROWS_AS(build_heatmap(out_of_range, panels(out_of_range)[0]), HeatmapError);
}

TEST_CASE("panels keep first-appearance order")
{
  std::vector<CellSummary> cells{cell(0, 0, 0), cell(0, 0, 0), cell(0, 0, 0)};
  cells[1].network_model = "ff";
  cells[2].k = 0.5;
  cells[2].supporters = 0.0;
  std::vector<PanelKey> keys = panels(cells);
  REQUIRE(keys.size() == 3);
  CHECK(panel_basename(keys[1]) == "heatmap_ff_k0.01_s0.1");
  CHECK(panel_basename(keys[2]) == "heatmap_ws_k0.5_s0");
}
