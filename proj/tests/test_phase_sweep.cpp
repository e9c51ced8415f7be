#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace twocontour;

TEST(SweepGrid, TriangleLayout) {
  const auto g = sweep_grid(24, 5);
  EXPECT_EQ(g.cells.size(), 276u);
  std::size_t k = 0;
  for (int l1 = 1; l1 < 24; ++l1)
    for (int l2 = l1; l2 < 24; ++l2, ++k) {
      ASSERT_EQ(g.cells[k].l1, l1);
      ASSERT_EQ(g.cells[k].l2, l2);
      ASSERT_EQ(PhaseGrid::index(24, l1, l2), k);
    }
  EXPECT_THROW(g.at(3, 2), std::out_of_range);
  EXPECT_THROW(g.at(1, 24), std::out_of_range);
}

TEST(SweepGrid, FirstTheoremCell) {
  const auto g = sweep_grid(24, 5);
  const auto& c = g.at(1, 2);
  EXPECT_EQ(c.scenario.label, ScenarioLabel::S1_FreeMotionAlways);
  EXPECT_EQ(c.spectrum_digest, "{(1/1,1/1)}");
  EXPECT_NE(std::find(c.theorem_matches.begin(), c.theorem_matches.end(), theorem(1)), c.theorem_matches.end());
  const auto m = testutil::model(make_params(24, 1, 2, 5)).spectrum();
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.begin()->first, testutil::to_oracle(formulas::free_motion()));
}

TEST(SweepGrid, ValidatesArguments) {
  EXPECT_THROW(sweep_grid(24, 13), ParamError);
  EXPECT_THROW(sweep_grid(1, 1), ParamError);
}

TEST(SweepGrid, IndependentOfThreadCount) {
  const auto a = emit_grid(sweep_grid(16, 5, 1), GridFormat::JSON);
  const auto b = emit_grid(sweep_grid(16, 5, 7), GridFormat::JSON);
  EXPECT_EQ(a, b);
}

TEST(SweepGrid, CellsAgreeWithTheirReports) {
  const auto g = sweep_grid(24, 8);
  for (const auto& c : g.cells) {
    ASSERT_EQ(c.scenario, c.report.scenario);
    ASSERT_EQ(c.spectrum_digest, digest(c.report.spectrum.outcomes()));
    for (auto id : c.theorem_matches) ASSERT_EQ(c.report.entry(id).verdict, Verdict::Match);
  }
}

TEST(EmitGrid, Csv) {
  const auto g = sweep_grid(24, 5);
  const auto text = emit_grid(g, GridFormat::CSV);
  EXPECT_EQ(text.rfind("l1,l2,scenario,spectrum\n1,1,", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 277);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_NE(text.find("\n1,2,S1_FreeMotionAlways,\"{(1/1,1/1)}\"\n"), std::string::npos);
}

TEST(EmitGrid, Json) {
  const auto g = sweep_grid(24, 5);
  const auto doc = nlohmann::json::parse(emit_grid(g, GridFormat::JSON));
  EXPECT_EQ(doc["n"], 24);
  EXPECT_EQ(doc["d"], 5);
  ASSERT_EQ(doc["cells"].size(), 276u);
  EXPECT_EQ(doc["cells"][0]["l1"], 1);
  EXPECT_EQ(doc["cells"][0]["l2"], 1);
  EXPECT_EQ(doc["cells"][275]["l1"], 23);
}

TEST(EmitGrid, ByteStable) {
  const auto g = sweep_grid(24, 7);
  EXPECT_EQ(emit_grid(g, GridFormat::CSV), emit_grid(g, GridFormat::CSV));
  EXPECT_EQ(emit_grid(g, GridFormat::JSON), emit_grid(sweep_grid(24, 7), GridFormat::JSON));
  EXPECT_EQ(grid_format_from_string("csv"), GridFormat::CSV);
  EXPECT_THROW(grid_format_from_string("xml"), std::invalid_argument);
}
