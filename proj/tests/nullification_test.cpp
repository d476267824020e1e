#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "nullwrithe/nullification.hpp"
#include "nullwrithe/report.hpp"
#include "support/oracles.hpp"

using namespace nullwrithe;

TEST(Counts, FixturesMatchHandValuesAndOracle) {
  for (const auto& f : fixtures::knots_and_links()) {
    const InvariantReport r = chirality_verdict(parse_diagram(f.pd));
    const auto ref = oracle::analyze(f.pd);
    EXPECT_EQ(r.n, f.n) << f.name;
    EXPECT_EQ(r.s, f.s) << f.name;
    EXPECT_EQ(r.k, f.k) << f.name;
    EXPECT_EQ(r.c, f.c) << f.name;
    EXPECT_EQ(r.o, f.o) << f.name;
    EXPECT_EQ(r.w, f.w) << f.name;
    EXPECT_EQ(r.w_x, f.w_x) << f.name;
    EXPECT_EQ(r.w_y, f.w_y) << f.name;
    EXPECT_EQ(r.alternating, f.alternating) << f.name;
    EXPECT_EQ(r.reduced, f.reduced) << f.name;

    EXPECT_EQ(r.s, ref.s) << f.name;
    EXPECT_EQ(r.c, ref.c) << f.name;
    EXPECT_EQ(r.o, ref.o) << f.name;
    EXPECT_EQ(r.w, ref.w) << f.name;
    std::set<int> wx;
    for (auto forest : oracle::spanning_forests(ref.graph))
      wx.insert(oracle::nullification_writhe(ref.graph, forest));
    EXPECT_EQ(wx, std::set<int>{f.w_x}) << f.name;
  }
}

TEST(Counts, DeskTriple) {
  const InvariantReport t = chirality_verdict(parse_diagram(fixtures::trefoil));
  EXPECT_EQ(std::tie(t.n, t.s, t.o), std::make_tuple(3u, 2u, 2u));
  EXPECT_EQ(std::tie(t.w, t.w_x, t.w_y), std::make_tuple(3, 2, 1));
  const InvariantReport e = chirality_verdict(parse_diagram(fixtures::figure_eight));
  EXPECT_EQ(std::tie(e.n, e.s, e.o), std::make_tuple(4u, 3u, 2u));
  EXPECT_EQ(std::tie(e.w, e.w_x, e.w_y), std::make_tuple(0, 0, 0));
  const InvariantReport h = chirality_verdict(parse_diagram(fixtures::positive_hopf));
  EXPECT_EQ(std::tie(h.n, h.s, h.o), std::make_tuple(2u, 2u, 1u));
  EXPECT_EQ(std::tie(h.w, h.w_x, h.w_y), std::make_tuple(2, 1, 1));
}

TEST(Counts, Unknot) {
  const InvariantReport r = chirality_verdict(parse_diagram("unknot"));
  EXPECT_EQ(std::tie(r.n, r.s, r.k, r.c, r.o), std::make_tuple(0u, 1u, 1u, 1u, 0u));
  EXPECT_EQ(std::tie(r.w, r.w_x, r.w_y), std::make_tuple(0, 0, 0));
  EXPECT_FALSE(r.verdict.chiral());
  EXPECT_EQ(r.verdict.to_string(), "Undetermined");
}

TEST(WritheSplit, SumsToWritheForEveryForest) {
  for (const auto& f : fixtures::knots_and_links()) {
    const SeifertGraph g = build_seifert_graph(parse_diagram(f.pd));
    enumerate_spanning_forests(g, 100'000, [&](const SpanningForest& forest) {
      const WritheSplit s = writhe_split(g, forest);
      EXPECT_EQ(s.w, s.w_x + s.w_y);
      EXPECT_EQ(s.w, f.w);
    });
  }
}

TEST(WritheSplit, NonAlternatingCanDependOnForest) {
  const SeifertGraph g = build_seifert_graph(parse_diagram(fixtures::non_alternating));
  std::set<int> values;
  enumerate_spanning_forests(g, 100'000, [&](const SpanningForest& f) { values.insert(writhe_split(g, f).w_x); });
  const auto ref = oracle::analyze(fixtures::non_alternating);
  std::set<int> expected;
  for (auto forest : oracle::spanning_forests(ref.graph))
    expected.insert(oracle::nullification_writhe(ref.graph, forest));
  EXPECT_EQ(values, expected);
  EXPECT_GT(values.size(), 1u);
}

TEST(FundamentalCycle, ClosesThroughTheForest) {
  const SeifertGraph g = build_seifert_graph(parse_diagram(fixtures::knot_7_4));
  const SpanningForest f = spanning_forest(g, 3);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (f.contains(e)) continue;
    const auto cycle = fundamental_cycle(g, f, e);
    ASSERT_FALSE(cycle.empty());
    EXPECT_EQ(cycle.front(), e);
    std::uint64_t mask = 0;
    for (std::size_t id : cycle) {
      if (id != e) {
        EXPECT_TRUE(f.contains(id));
      }
      mask |= std::uint64_t{1} << id;
    }
    const auto ref = oracle::analyze(fixtures::knot_7_4);
    const auto cycles = oracle::simple_cycles(ref.graph);
    EXPECT_NE(std::find(cycles.begin(), cycles.end(), mask), cycles.end());
  }
}

TEST(SignStructure, AlternatingFixturesAreMonochromatic) {
  for (const auto& f : fixtures::knots_and_links()) {
    const SeifertGraph g = build_seifert_graph(parse_diagram(f.pd));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto r = check_sign_structure(g, seed);
      EXPECT_TRUE(r.ok()) << f.name;
      EXPECT_EQ(r.fundamental_cycles, f.o) << f.name;
    }
  }
}

TEST(SignStructure, DetectsMixedSigns) {
  const SeifertGraph g(2, {{0, 0, 1, Sign::positive}, {1, 0, 1, Sign::negative}}, false);
  const auto r = check_sign_structure(g, 0);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.mixed_parallel_classes, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.mixed_cycles.size(), 1u);
}

TEST(Independence, FigureEightExhaustiveOverFour) {
  const SeifertGraph g = build_seifert_graph(parse_diagram(fixtures::figure_eight));
  const IndependenceResult r = verify_forest_independence(g, 100);
  EXPECT_TRUE(r.independent);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.forest_count, 4u);
  EXPECT_EQ(r.forests_checked, 104u);
  EXPECT_EQ(r.distinct_splits, (std::vector<WritheSplit>{{0, 0, 0}}));
}

TEST(Independence, SampledBeyondBound) {
  const SeifertGraph g = build_seifert_graph(parse_diagram(fixtures::knot_7_4));
  IndependenceOptions opt;
  opt.exhaustive_bound = 1;
  const IndependenceResult r = verify_forest_independence(g, 25, opt);
  EXPECT_TRUE(r.independent);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.forests_checked, 25u);
}

TEST(Independence, Preconditions) {
  const SeifertGraph na = build_seifert_graph(parse_diagram(fixtures::non_alternating));
  EXPECT_THROW(verify_forest_independence(na, 10), NotAlternatingError);
  const SeifertGraph g = build_seifert_graph(parse_diagram(fixtures::trefoil));
  EXPECT_THROW(verify_forest_independence(g, 0), NotApplicableError);
}

TEST(Independence, NonReducedAlternatingStillIndependent) {
  const SeifertGraph g = build_seifert_graph(parse_diagram(fixtures::nugatory));
  EXPECT_TRUE(verify_forest_independence(g, 50).independent);
}

TEST(Verdict, Reasons) {
  const auto trefoil = chirality_verdict(parse_diagram(fixtures::trefoil)).verdict;
  EXPECT_EQ(trefoil.to_string(), "Chiral(nonzero_wx_wy)");
  const auto eight = chirality_verdict(parse_diagram(fixtures::figure_eight)).verdict;
  EXPECT_EQ(eight.to_string(), "Undetermined");
  const auto hopf = chirality_verdict(parse_diagram(fixtures::positive_hopf)).verdict;
  EXPECT_TRUE(hopf.has(ChiralityReason::nonzero_wx_wy));
  EXPECT_TRUE(hopf.has(ChiralityReason::even_components));
  EXPECT_EQ(hopf.to_string(), "Chiral(nonzero_wx_wy,even_components)");
  // Three components, all writhes zero: nothing to say.
  EXPECT_EQ(chirality_verdict(parse_diagram(fixtures::borromean)).verdict.to_string(), "Undetermined");
}

TEST(Verdict, WarningsOutsideTheHypotheses) {
  const auto na = chirality_verdict(parse_diagram(fixtures::non_alternating));
  EXPECT_FALSE(na.verdict.chiral());
  EXPECT_EQ(na.warnings, (std::vector<std::string>{"not_alternating", "not_invariant"}));
  const auto nr = chirality_verdict(parse_diagram(fixtures::nugatory));
  EXPECT_FALSE(nr.verdict.chiral());
  EXPECT_EQ(nr.warnings, (std::vector<std::string>{"not_reduced", "not_invariant"}));
}

TEST(Verdict, SeedIndependentForReducedAlternating) {
  for (const auto& f : fixtures::knots_and_links()) {
    if (!f.reduced) continue;
    const Diagram d = parse_diagram(f.pd);
    const InvariantReport base = chirality_verdict(d, 0);
    for (std::uint64_t seed = 1; seed < 20; ++seed) EXPECT_EQ(chirality_verdict(d, seed), base) << f.name;
  }
}

TEST(Verdict, SplitDiagramsSkipEvenComponentRule) {
  // Two unknots: two components but split, so no parity argument applies.
  const auto r = chirality_verdict(parse_diagram("unlink 2"));
  EXPECT_TRUE(r.split);
  EXPECT_FALSE(r.verdict.chiral());
}

TEST(Parity, HoldsOnFixtures) {
  for (const auto& f : fixtures::knots_and_links()) {
    EXPECT_TRUE(verify_parity_law(parse_diagram(f.pd))) << f.name;
    EXPECT_EQ(f.o % 2, (f.c - 1) % 2) << f.name;
  }
  EXPECT_TRUE(verify_parity_law(parse_diagram(fixtures::non_alternating)));
}

TEST(Parity, SplitNotApplicable) {
  EXPECT_THROW(verify_parity_law(parse_diagram("unlink 2")), NotApplicableError);
}

TEST(Mirror, Antisymmetry) {
  for (const auto& f : fixtures::knots_and_links()) {
    const MirrorCheck m = verify_mirror_antisymmetry(parse_diagram(f.pd));
    EXPECT_TRUE(m.holds) << f.name;
    EXPECT_EQ(m.mirrored.w_x, -f.w_x) << f.name;
    EXPECT_EQ(m.mirrored.w_y, -f.w_y) << f.name;
    EXPECT_EQ(m.o, m.o_mirror) << f.name;
  }
}

TEST(Mirror, ReportOfMirrorNegatesWrithes) {
  const auto a = chirality_verdict(parse_diagram(fixtures::trefoil));
  const auto b = chirality_verdict(parse_diagram(fixtures::left_trefoil));
  EXPECT_EQ(b.w_x, -a.w_x);
  EXPECT_EQ(b.w_y, -a.w_y);
  EXPECT_EQ(b.o, a.o);
  EXPECT_EQ(b.verdict, a.verdict);
}

TEST(Report, JsonShape) {
  const auto j = to_json(chirality_verdict(parse_diagram(fixtures::trefoil)));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "s", "k", "c", "o", "w", "w_x", "w_y", "alternating",
                                            "reduced", "split", "verdict", "warnings"}));
  EXPECT_EQ(j["w_x"], 2);
  EXPECT_EQ(j["verdict"], "Chiral(nonzero_wx_wy)");
  EXPECT_TRUE(j["warnings"].is_array());
}

TEST(Report, Text) {
  const std::string text = to_text(chirality_verdict(parse_diagram(fixtures::positive_hopf)));
  EXPECT_NE(text.find("w_x         1\n"), std::string::npos) << text;
  EXPECT_NE(text.find("warnings    -\n"), std::string::npos) << text;
}
