#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "sfmlab/errors.hpp"
#include "sfmlab/random_instances.hpp"
#include "sfmlab/serialization.hpp"

namespace sfmlab {
namespace {

using testing::q;

TEST(RationalJson, StringsAndIntegers) {
  EXPECT_EQ(rational_to_json(q(-3, 6)), Json("-1/2"));
  EXPECT_EQ(rational_to_json(q(4)), Json("4/1"));
  EXPECT_EQ(rational_from_json(Json("6/4")), q(3, 2));
  EXPECT_EQ(rational_from_json(Json(7)), q(7));
  EXPECT_THROW(rational_from_json(Json("1/0")), InvalidArgumentError);
  EXPECT_THROW(rational_from_json(Json("abc")), InvalidArgumentError);
  EXPECT_THROW(rational_from_json(Json(1.5)), InvalidArgumentError);
}

TEST(SubsetJson, SortedElementList) {
  EXPECT_EQ(subset_to_json(Subset::of(5, {4, 1})).dump(), "[1,4]");
  EXPECT_EQ(subset_to_json(Subset::empty(3)).dump(), "[]");
}

TEST(PermutationJson, RoundTrip) {
  const PermutationInstance p(3, {3, 1, 2}, {0, 1, 0, 1});
  const Json j = to_json(p);
  EXPECT_EQ(j.dump(), R"({"kind":"permutation","n":3,"sigma":[3,1,2],"c":[0,1,0,1]})");
  const PermutationInstance back = permutation_from_json(j);
  EXPECT_EQ(back.sigma(), p.sigma());
  EXPECT_EQ(back.c(), p.c());
}

TEST(CostBasedJson, RoundTrip) {
  const PairFamily family(4);
  const CostBasedInstance& f = family.variant(1, 2);
  const CostBasedInstance back = cost_based_from_json(to_json(f));
  EXPECT_EQ(back.singletons(), f.singletons());
  EXPECT_EQ(back.cost(), f.cost());
  for_each_subset(4, [&](const Subset& s) { EXPECT_EQ(back.evaluate(s), f.evaluate(s)); });
}

TEST(GraphJson, RoundTripEveryMode) {
  Rng rng(80);
  for (CutMode mode : {CutMode::kUndirected, CutMode::kDirected, CutMode::kSt}) {
    const WeightedGraph g = random_graph(5, mode, rng, {0.5, mode == CutMode::kSt});
    const Json j = to_json(g);
    EXPECT_EQ(j.contains("directed"), mode == CutMode::kSt);
    const WeightedGraph back = graph_from_json(j);
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(WitnessJson, FieldOrder) {
  const auto [sys, w] = cut_system_from_graph(testing::unit_triangle());
  const auto witness = find_witness(sys, w, true, {Subset::singleton(3, 2)});
  ASSERT_TRUE(witness.has_value());
  const Json j = to_json(*witness);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"z", "epsilon", "sign", "w_prime", "original_min", "changed_min",
                                            "moved_minimizer"}));
}

TEST(SolverResultJson, Fields) {
  const SolverResult r{q(2), Subset::of(3, {2}), 7};
  EXPECT_EQ(to_json(r).dump(), R"({"min_value":"2/1","argmin":[2],"queries_used":7})");
}

TEST(InstanceJson, DispatchAndErrors) {
  EXPECT_TRUE(std::holds_alternative<PermutationInstance>(
      instance_from_json(Json::parse(R"({"kind":"permutation","n":2,"sigma":[2,1],"c":[0,0,1]})"))));
  EXPECT_TRUE(std::holds_alternative<WeightedGraph>(
      instance_from_json(Json::parse(R"({"n_vertices":2,"mode":"undirected","edges":[[1,2,"1/1"]]})"))));
  EXPECT_THROW(instance_from_json(Json::parse(R"({"kind":"mystery"})")), InvalidArgumentError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"kind":"permutation","n":2,"sigma":[1,1],"c":[0,0,0]})")),
               InvalidArgumentError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"n_vertices":2,"mode":"undirected","edges":[[1,3,"1"]]})")),
               InvalidArgumentError);
  EXPECT_THROW(instance_from_json(Json::parse("[1,2]")), InvalidArgumentError);
}

TEST(LoadInstance, ReadsFileAndRejectsGarbage) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "sfmlab_serialization_good.json";
  const auto bad = dir / "sfmlab_serialization_bad.json";
  std::ofstream(good) << to_json(testing::unit_triangle()).dump();
  std::ofstream(bad) << "{not json";
  const Instance inst = load_instance(good.string());
  ASSERT_TRUE(std::holds_alternative<WeightedGraph>(inst));
  EXPECT_EQ(std::get<WeightedGraph>(inst).edges().size(), 3u);
  EXPECT_THROW(load_instance(bad.string()), InvalidArgumentError);
  EXPECT_THROW(load_instance((dir / "sfmlab_missing_file.json").string()), InvalidArgumentError);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(RandomInstances, DeterministicPerSeed) {
  Rng a(9);
  Rng b(9);
  EXPECT_EQ(to_json(random_graph(6, CutMode::kDirected, a)), to_json(random_graph(6, CutMode::kDirected, b)));
  EXPECT_EQ(to_json(random_permutation_instance(5, a)), to_json(random_permutation_instance(5, b)));
  for (int t = 0; t < 50; ++t) EXPECT_GT(random_positive_rational(a), 0);
}

}  // namespace
}  // namespace sfmlab
