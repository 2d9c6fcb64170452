#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sfmlab/cut_dimension.hpp"
#include "sfmlab/errors.hpp"
#include "sfmlab/hyperedge_system.hpp"
#include "sfmlab/random_instances.hpp"
#include "sfmlab/set_function_checks.hpp"
#include "sfmlab/sfm_solvers.hpp"

namespace sfmlab {
namespace {

using testing::q;

TEST(WeightBased, TriangleSingletonCut) {
  const auto [sys, w] = cut_system_from_graph(testing::unit_triangle());
  EXPECT_EQ(sys.active(Subset::singleton(3, 2)), (std::vector<int>{0, 2}));
  EXPECT_EQ(eval_weight_based(sys, w, Subset::singleton(3, 2)), q(2));
  EXPECT_EQ(eval_weight_based(sys, w, Subset::empty(3)), q(0));
}

TEST(WeightBased, RationalWeights) {
  const auto [sys, unit] = cut_system_from_graph(testing::unit_triangle());
  const WeightVector w(testing::weights({q(1, 2), q(1), q(3, 2)}));
  EXPECT_EQ(eval_weight_based(sys, w, Subset::singleton(3, 2)), q(2));
  EXPECT_EQ(w.total(), q(3));
}

TEST(WeightBased, LengthMismatchThrows) {
  const auto [sys, unit] = cut_system_from_graph(testing::unit_triangle());
  EXPECT_THROW(eval_weight_based(sys, WeightVector(testing::weights({q(1)})), Subset::empty(3)), SizeMismatchError);
  EXPECT_THROW(WeightVector(testing::weights({q(-1)})), InvalidArgumentError);
}

TEST(WeightBased, FunctionMatchesGraphCut) {
  Rng rng(2);
  for (CutMode mode : {CutMode::kUndirected, CutMode::kDirected, CutMode::kSt}) {
    for (int t = 0; t < 10; ++t) {
      const WeightedGraph g = random_graph(6, mode, rng);
      const auto [sys, w] = cut_system_from_graph(g);
      const SetFunction f = weight_based_function(sys, w);
      for_each_subset(g.ground_size(), [&](const Subset& s) { ASSERT_EQ(f(s), g.cut_value(s)); });
    }
  }
}

TEST(WeightBasedCondition, CutSystemsSatisfyIt) {
  Rng rng(3);
  for (CutMode mode : {CutMode::kUndirected, CutMode::kDirected, CutMode::kSt}) {
    for (int t = 0; t < 10; ++t) {
      const WeightedGraph g = random_graph(mode == CutMode::kSt ? 8 : 6, mode, rng, {0.5, t % 2 == 1});
      EXPECT_FALSE(check_weight_based_condition(cut_system_from_graph(g).first).has_value()) << to_string(mode);
    }
  }
}

TEST(WeightBasedCondition, RepeatedHyperedgeCountsMultiplicity) {
  const auto sys = HyperedgeSystem::from_table(2, 1, {{0}, {0}, {0}, {0}});
  EXPECT_FALSE(check_weight_based_condition(sys).has_value());
}

TEST(WeightBasedCondition, DetectsViolation) {
  const auto sys = HyperedgeSystem::from_table(2, 1, {{}, {}, {}, {0}});
  const auto v = check_weight_based_condition(sys);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->s, Subset::of(2, {1}));
  EXPECT_EQ(v->t, Subset::of(2, {2}));
  EXPECT_EQ(v->hyperedge, 0);
}

TEST(WeightBasedCondition, ViolatingSystemCanBeNonSubmodular) {
  const auto sys = HyperedgeSystem::from_table(2, 1, {{}, {}, {}, {0}});
  const SetFunction f = weight_based_function(sys, WeightVector(testing::weights({q(1)})));
  EXPECT_TRUE(check_submodular(f, 2).has_value());
}

TEST(HyperedgeSystem, TableValidation) {
  EXPECT_THROW(HyperedgeSystem::from_table(2, 1, {{}, {}, {}}), InvalidArgumentError);
  EXPECT_THROW(HyperedgeSystem::from_table(1, 1, {{}, {1}}), InvalidArgumentError);
  EXPECT_THROW(HyperedgeSystem::from_table(1, 1, {{}, {0, 0}}), InvalidArgumentError);
}

TEST(HyperedgeSystem, MaterializeAndRelabelPreserveValues) {
  const auto [sys, w] = cut_system_from_graph(build_star_matching_graph(5));
  const HyperedgeSystem table = sys.materialized();
  EXPECT_TRUE(table.is_extensional());
  EXPECT_FALSE(sys.is_extensional());
  std::vector<int> perm(static_cast<std::size_t>(sys.m()));
  std::vector<Rational> moved(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    perm[k] = static_cast<int>(perm.size() - 1 - k);
    moved[static_cast<std::size_t>(perm[k])] = w[k];
  }
  const HyperedgeSystem relabeled = sys.relabeled(perm);
  const WeightVector w2(moved);
  for_each_subset(5, [&](const Subset& s) {
    EXPECT_EQ(sys.active(s), table.active(s));
    EXPECT_EQ(eval_weight_based(relabeled, w2, s), eval_weight_based(sys, w, s));
  });
}

TEST(CutSystem, UndirectedPairCrossesTwoSpokes) {
  const auto [sys, w] = cut_system_from_graph(testing::unit_triangle());
  const Subset s = Subset::of(3, {2, 3});
  EXPECT_EQ(sys.active(s), (std::vector<int>{0, 1}));
  EXPECT_EQ(eval_weight_based(sys, w, s), q(2));
}

TEST(CutSystem, DirectedCycleUsesTailInHeadOut) {
  const auto [sys, w] = cut_system_from_graph(testing::directed_three_cycle());
  EXPECT_EQ(sys.active(Subset::singleton(3, 1)), std::vector<int>{0});
  EXPECT_EQ(eval_weight_based(sys, w, Subset::singleton(3, 1)), q(1));
}

TEST(CutSystem, StModeCountsEdgesLeavingTheSourceSide) {
  const WeightedGraph g = testing::parallel_paths();
  EXPECT_EQ(g.ground_size(), 2);
  EXPECT_EQ(g.vertex_of(1), 3);
  EXPECT_EQ(g.element_of(1), 0);
  const auto [sys, w] = cut_system_from_graph(g);
  EXPECT_EQ(sys.active(Subset::empty(2)), (std::vector<int>{0, 1}));
  EXPECT_EQ(eval_weight_based(sys, w, Subset::empty(2)), q(2));
  EXPECT_EQ(sys.active(Subset::full(2)), (std::vector<int>{2, 3}));
}

TEST(CutSystem, DirectedStModeIgnoresBackwardEdges) {
  const WeightedGraph g(3, CutMode::kSt, {{1, 3, q(1)}, {2, 3, q(5)}}, 1, 2, true);
  EXPECT_EQ(g.cut_value(Subset::empty(1)), q(1));
  EXPECT_EQ(g.cut_value(Subset::full(1)), q(0));
}

TEST(WeightedGraph, RejectsMalformedGraphs) {
  EXPECT_THROW(WeightedGraph(3, CutMode::kUndirected, {{1, 1, q(1)}}), InvalidArgumentError);
  EXPECT_THROW(WeightedGraph(3, CutMode::kUndirected, {{1, 4, q(1)}}), InvalidArgumentError);
  EXPECT_THROW(WeightedGraph(3, CutMode::kUndirected, {{1, 2, q(-1)}}), InvalidArgumentError);
  EXPECT_THROW(WeightedGraph(3, CutMode::kSt, {{1, 2, q(1)}}), InvalidArgumentError);
  EXPECT_THROW(WeightedGraph(3, CutMode::kSt, {{1, 2, q(1)}}, 1, 1), InvalidArgumentError);
  EXPECT_THROW(parse_cut_mode("both"), InvalidArgumentError);
}

TEST(StarMatching, TriangleHasMinCutTwo) {
  const WeightedGraph g = build_star_matching_graph(3);
  EXPECT_EQ(g.edges().size(), 3u);
  ValueOracle oracle = testing::cut_oracle(g);
  EXPECT_EQ(brute_force_sfm(oracle, true).min_value, q(2));
}

TEST(StarMatching, FiveVerticesHaveTwelveMinCuts) {
  const WeightedGraph g = build_star_matching_graph(5);
  EXPECT_EQ(g.edges().size(), 6u);
  const auto [sys, w] = cut_system_from_graph(g);
  const MinimizerFamily m = enumerate_minimizers(sys, w, true);
  EXPECT_EQ(m.min_value, q(2));
  std::set<Subset> expected;
  for (int i = 1; i <= 2; ++i) {
    for (const Subset& s : {Subset::of(5, {2 * i}), Subset::of(5, {2 * i + 1}), Subset::of(5, {2 * i, 2 * i + 1})}) {
      expected.insert(s);
      expected.insert(s.complement());
    }
  }
  EXPECT_EQ(std::set<Subset>(m.sets.begin(), m.sets.end()), expected);
}

TEST(StarMatching, EvenSizeAddsWeightTwoPendant) {
  const WeightedGraph g = build_star_matching_graph(4);
  ASSERT_EQ(g.edges().size(), 4u);
  EXPECT_EQ(g.edges().back().tail, 1);
  EXPECT_EQ(g.edges().back().head, 4);
  EXPECT_EQ(g.edges().back().weight, q(2));
  const auto [sys, w] = cut_system_from_graph(g);
  const MinimizerFamily m = enumerate_minimizers(sys, w, true);
  EXPECT_EQ(m.min_value, q(2));
  EXPECT_TRUE(m.contains(Subset::singleton(4, 4)));
  EXPECT_EQ(m.sets.size(), 8u);
  EXPECT_THROW(build_star_matching_graph(2), InvalidArgumentError);
}

}  // namespace
}  // namespace sfmlab
