#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "sfmlab/adversary_2n.hpp"
#include "sfmlab/cost_based.hpp"
#include "sfmlab/errors.hpp"
#include "sfmlab/permutation_family.hpp"
#include "sfmlab/random_instances.hpp"
#include "sfmlab/set_function_checks.hpp"
#include "sfmlab/sfm_solvers.hpp"

namespace sfmlab {
namespace {

using testing::q;

std::vector<int> c_from_mask(int n, Subset::Mask mask) {
  std::vector<int> c;
  for (int i = 0; i <= n; ++i) c.push_back(static_cast<int>((mask >> i) & 1u));
  return c;
}

// ---------------------------------------------------------------- permutation family

TEST(PermutationFamily, ChainSetTakesNegatedCost) {
  const auto p = PermutationInstance::identity(4, {0, 1, 0, 0, 1});
  EXPECT_EQ(p.evaluate(Subset::of(4, {1})), q(-1));
  EXPECT_EQ(p.evaluate(Subset::empty(4)), q(0));
  EXPECT_EQ(p.evaluate(Subset::full(4)), q(-1));
}

TEST(PermutationFamily, NonChainSetsFollowFormula) {
  const auto p = PermutationInstance::identity(4, {0, 0, 0, 0, 0});
  EXPECT_EQ(p.evaluate(Subset::of(4, {2, 3})), q(12));
  EXPECT_EQ(p.evaluate(Subset::of(4, {1, 2, 4})), q(4));
  EXPECT_EQ(p.chain_depth(Subset::of(4, {1, 2, 4})), 2);
  EXPECT_EQ(chain_formula(4, 3, 2), q(4));
}

TEST(PermutationFamily, RespectsSigma) {
  const PermutationInstance p(3, {3, 1, 2}, {0, 0, 1, 0});
  EXPECT_EQ(p.chain_set(2), Subset::of(3, {1, 3}));
  EXPECT_EQ(p.evaluate(Subset::of(3, {1, 3})), q(-1));
  EXPECT_EQ(p.position_of(3), 1);
  EXPECT_EQ(p.sigma_at(2), 1);
  EXPECT_EQ(p.minimum(), q(-1));
  EXPECT_EQ(p.minimizer(), Subset::of(3, {1, 3}));
}

TEST(PermutationFamily, MinimumIsSmallestChainWithUnitCost) {
  const auto p = PermutationInstance::identity(5, {0, 0, 1, 0, 1, 0});
  EXPECT_EQ(p.minimum(), q(-1));
  EXPECT_EQ(p.minimizer(), Subset::of(5, {1, 2}));
  ValueOracle oracle(5, p.as_function());
  const SolverResult brute = brute_force_sfm(oracle, false);
  EXPECT_EQ(brute.min_value, q(-1));
  EXPECT_EQ(brute.argmin, Subset::of(5, {1, 2}));
}

TEST(PermutationFamily, ValidatesInput) {
  EXPECT_THROW(PermutationInstance(3, {1, 1, 2}, {0, 0, 0, 0}), InvalidArgumentError);
  EXPECT_THROW(PermutationInstance(3, {1, 2}, {0, 0, 0, 0}), InvalidArgumentError);
  EXPECT_THROW(PermutationInstance(3, {1, 2, 3}, {0, 0, 0}), InvalidArgumentError);
  EXPECT_THROW(PermutationInstance(3, {1, 2, 3}, {0, 2, 0, 0}), InvalidArgumentError);
}

TEST(PermutationFamily, EveryMemberIsSubmodularUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      for (Subset::Mask cm = 0; cm < (Subset::Mask{1} << (n + 1)); ++cm) {
        const PermutationInstance p(n, sigma, c_from_mask(n, cm));
        ASSERT_FALSE(check_submodular(p.as_function(), n).has_value()) << "n=" << n << " c=" << cm;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST(PermutationFamily, NonChainValuesArePositive) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const PermutationInstance p = random_permutation_instance(6, rng);
    for_each_subset(6, [&](const Subset& s) {
      if (s != p.chain_set(s.size())) {
        EXPECT_GT(p.evaluate(s), 0);
      } else {
        EXPECT_LE(p.evaluate(s), 0);
      }
    });
  }
}

// ---------------------------------------------------------------- 2n solver

TEST(SolvePermutationFamily, ProbesRevealPositions) {
  const auto p = PermutationInstance::identity(4, {0, 0, 0, 0, 0});
  EXPECT_EQ(p.evaluate(Subset::of(4, {2, 3, 4})), q(18));
  EXPECT_EQ(p.evaluate(Subset::of(4, {1, 2, 4})), q(4));
}

TEST(SolvePermutationFamily, ExactlyTwoNQueriesAndCorrectUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      for (Subset::Mask cm = 0; cm < (Subset::Mask{1} << (n + 1)); ++cm) {
        const PermutationInstance p(n, sigma, c_from_mask(n, cm));
        ValueOracle oracle(n, p.as_function());
        const PermutationSolve s = solve_permutation_family(oracle);
        ASSERT_EQ(s.queries_used, static_cast<std::size_t>(2 * n));
        ASSERT_EQ(s.recovered_sigma, sigma);
        ASSERT_EQ(s.min_value, p.minimum());
        ASSERT_EQ(p.evaluate(s.argmin), s.min_value);
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST(SolvePermutationFamily, RejectsForeignFunctions) {
  ValueOracle oracle(4, [](const Subset& s) { return q(s.size()); });
  EXPECT_THROW(solve_permutation_family(oracle), InconsistencyError);
}

// ---------------------------------------------------------------- 2n adversary

TEST(Adversary2n, ScriptedOpeningFollowsTheThreeCases) {
  Adversary2n adv(4);
  const auto first = adv.answer(Subset::of(4, {1, 3}));
  EXPECT_EQ(first.kind, QueryClass::kDecoy);
  EXPECT_EQ(first.value, q(12));
  EXPECT_EQ(adv.partial_sigma(), std::vector<int>{2});

  const auto second = adv.answer(Subset::empty(4));
  EXPECT_EQ(second.kind, QueryClass::kImportant);
  EXPECT_EQ(second.value, q(0));
  EXPECT_EQ(adv.partial_c()[0], 0);

  const auto third = adv.answer(Subset::of(4, {2}));
  EXPECT_EQ(third.kind, QueryClass::kImportant);
  EXPECT_EQ(third.value, q(0));
  EXPECT_EQ(adv.partial_c()[1], 0);

  const auto fourth = adv.answer(Subset::of(4, {1, 4}));
  EXPECT_EQ(fourth.kind, QueryClass::kUseless);
  EXPECT_EQ(fourth.value, chain_formula(4, 2, 0));
  EXPECT_EQ(adv.distinct_important(), 2u);
  EXPECT_EQ(adv.decoy_count(), 1);
  EXPECT_EQ(adv.useless_count(), 1);
}

TEST(Adversary2n, FullSetIsAlwaysImportant) {
  Adversary2n adv(5);
  EXPECT_EQ(adv.answer(Subset::full(5)).kind, QueryClass::kImportant);
  EXPECT_EQ(adv.partial_c()[5], 0);
}

TEST(Adversary2n, ShortGamesAreLostWhicheverWayTheGuessGoes) {
  Adversary2n adv(5);
  adv.answer(Subset::empty(5));
  adv.answer(Subset::full(5));
  adv.answer(Subset::of(5, {2, 3}));
  adv.answer(Subset::of(5, {1}));
  ASSERT_EQ(adv.distinct_important(), 3u);

  const auto zero = adv.finalize(q(0));
  EXPECT_EQ(zero.true_minimum, q(-1));
  EXPECT_EQ(zero.verdict, Verdict::kFooled);
  const auto minus_one = adv.finalize(q(-1));
  EXPECT_EQ(minus_one.true_minimum, q(0));
  EXPECT_EQ(minus_one.verdict, Verdict::kFooled);
  EXPECT_EQ(adv.finalize(q(7)).verdict, Verdict::kFooled);
}

TEST(Adversary2n, FinalizedInstanceReplaysEveryAnswer) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    Adversary2n adv(n);
    std::vector<std::pair<Subset, Rational>> log;
    std::uniform_int_distribution<Subset::Mask> pick(0, Subset::full_mask(n));
    const int queries = static_cast<int>(rng() % static_cast<unsigned>(3 * n));
    for (int k = 0; k < queries; ++k) {
      const Subset s(n, pick(rng));
      log.emplace_back(s, adv.answer(s).value);
      ASSERT_TRUE(adv.decoy_bound_held());
    }
    for (const Rational& guess : {q(0), q(-1)}) {
      const auto outcome = adv.finalize(guess);
      for (const auto& [s, v] : log) ASSERT_EQ(outcome.instance.evaluate(s), v);
    }
  }
}

TEST(Play2nGame, BruteForceAndTwoNSolverAreCorrect) {
  for (int n = 3; n <= 8; ++n) {
    const auto brute = play_2n_game(n, [](ValueOracle& o) { return brute_force_sfm(o, false).min_value; });
    EXPECT_EQ(brute.verdict, Verdict::kCorrect);
    EXPECT_GE(brute.queries_used, static_cast<std::size_t>(2 * n));
    EXPECT_TRUE(brute.transcript_replays);

    const auto two_n = play_2n_game(n, [](ValueOracle& o) { return solve_permutation_family(o).min_value; });
    EXPECT_EQ(two_n.verdict, Verdict::kCorrect);
    EXPECT_EQ(two_n.queries_used, static_cast<std::size_t>(2 * n));
    EXPECT_EQ(two_n.distinct_important, static_cast<std::size_t>(n + 1));
    EXPECT_TRUE(two_n.transcript_replays);
    EXPECT_TRUE(two_n.decoy_bound_held);
  }
}

TEST(Play2nGame, RandomShortSolversAreFooled) {
  std::mt19937_64 rng(99);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const int budget = static_cast<int>(rng() % static_cast<unsigned>(2 * n));
      const std::uint64_t seed = rng();
      const auto report = play_2n_game(n, [&](ValueOracle& o) {
        std::mt19937_64 local(seed);
        std::uniform_int_distribution<Subset::Mask> pick(0, Subset::full_mask(n));
        Rational best = 1;
        for (int k = 0; k < budget; ++k) best = std::min(best, o.evaluate(Subset(n, pick(local))));
        return best <= 0 ? best : Rational(0);
      });
      EXPECT_EQ(report.verdict, Verdict::kFooled) << "n=" << n << " budget=" << budget;
      EXPECT_TRUE(report.transcript_replays);
      EXPECT_TRUE(report.decoy_bound_held);
    }
  }
}

// ---------------------------------------------------------------- cost-based functions

TEST(CostBased, BaseFunctionValues) {
  const PairFamily family = make_pair_family(4);
  const auto& f = family.base();
  EXPECT_EQ(f.evaluate(Subset::of(4, {1, 2})), q(2));
  EXPECT_EQ(f.evaluate(Subset::of(4, {1, 2, 3})), q(0));
  EXPECT_EQ(f.evaluate(Subset::full(4)), q(-16));
  EXPECT_EQ(f.evaluate(Subset::empty(4)), q(0));
}

TEST(CostBased, VariantValues) {
  const PairFamily family(4);
  const auto& f12 = family.variant(1, 2);
  EXPECT_EQ(f12.evaluate(Subset::of(4, {3, 4})), q(-1));
  EXPECT_EQ(f12.evaluate(Subset::of(4, {2, 3})), q(2));
  EXPECT_EQ(f12.evaluate(Subset::of(4, {1, 3, 4})), q(0));
  EXPECT_EQ(f12.evaluate(Subset::full(4)), q(-16));
}

TEST(CostBased, VariantsDifferFromBaseOnlyOnTheirCoPair) {
  for (int n = 4; n <= 6; ++n) {
    const PairFamily family(n);
    for (const auto& [ij, f] : family.variants()) {
      for_each_subset(n, [&](const Subset& s) {
        const bool differs = f.evaluate(s) != family.base().evaluate(s);
        EXPECT_EQ(differs, s == PairFamily::co_pair(n, ij.first, ij.second));
      });
    }
  }
}

TEST(CostBased, EveryFamilyMemberIsSubmodular) {
  for (int n = 4; n <= 6; ++n) {
    const PairFamily family(n);
    EXPECT_FALSE(check_submodular(family.base().as_function(), n).has_value());
    for (const auto& [ij, f] : family.variants()) EXPECT_FALSE(check_submodular(f.as_function(), n).has_value());
  }
}

TEST(CostBased, RandomInstancesAreSubmodular) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> val(0, 4);
  for (int t = 0; t < 40; ++t) {
    const int n = 4;
    std::vector<Rational> singletons;
    for (int i = 0; i < n; ++i) singletons.push_back(q(val(rng) - 2));
    CostBasedInstance::CostMap cost;
    for_each_subset(n, [&](const Subset& s) {
      if (s.size() >= 2 && val(rng) == 0) cost[s.bits()] = q(val(rng), 1 + val(rng));
    });
    const CostBasedInstance f(n, singletons, cost);
    EXPECT_FALSE(check_submodular(f.as_function(), n).has_value());
  }
}

TEST(CostBased, ValidatesCosts) {
  const std::vector<Rational> zeros(3, q(0));
  EXPECT_THROW(CostBasedInstance(3, zeros, {{0b011, q(-1)}}), InvalidArgumentError);
  EXPECT_THROW(CostBasedInstance(3, zeros, {{0b010, q(1)}}), InvalidArgumentError);
  EXPECT_THROW(CostBasedInstance(3, zeros, {{0b1000, q(1)}}), InvalidArgumentError);
  EXPECT_THROW(CostBasedInstance(3, {q(0)}, {}), InvalidArgumentError);
  const CostBasedInstance f(3, zeros, {{0b011, q(0)}});
  EXPECT_TRUE(f.cost().empty());
  EXPECT_THROW(PairFamily(3), InvalidArgumentError);
}

TEST(CostBased, NontrivialMinimaAreZeroAndMinusOne) {
  for (int n = 4; n <= 6; ++n) {
    const PairFamily family(n);
    ValueOracle base(n, family.base().as_function());
    EXPECT_EQ(brute_force_sfm(base, true).min_value, q(0));
    for (const auto& [ij, f] : family.variants()) {
      ValueOracle oracle(n, f.as_function());
      const SolverResult r = brute_force_sfm(oracle, true);
      EXPECT_EQ(r.min_value, q(-1));
      EXPECT_EQ(r.argmin, PairFamily::co_pair(n, ij.first, ij.second));
    }
  }
}

// ---------------------------------------------------------------- pair adversary

QueryTranscript co_pair_transcript(const PairFamily& family, const std::vector<std::pair<int, int>>& skip) {
  const int n = family.n();
  ValueOracle oracle(n, family.base().as_function());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (std::find(skip.begin(), skip.end(), std::pair{i, j}) == skip.end()) {
        oracle.evaluate(PairFamily::co_pair(n, i, j));
      }
    }
  }
  return oracle.transcript();
}

TEST(AdversaryPairs, MissingCoPairYieldsItsVariant) {
  const PairFamily family(4);
  const QueryTranscript t = co_pair_transcript(family, {{1, 2}});
  ASSERT_EQ(t.size(), 5u);
  const auto fooled = adversary_pairs(t, q(0), family);
  ASSERT_TRUE(fooled.has_value());
  EXPECT_EQ(fooled->variant, (std::optional<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(fooled->nontrivial_minimum, q(-1));
  EXPECT_TRUE(t.replays_against(fooled->instance.as_function()));
}

TEST(AdversaryPairs, MinusOneGuessMeetsTheBaseFunction) {
  const PairFamily family(4);
  const auto fooled = adversary_pairs(co_pair_transcript(family, {{1, 2}}), q(-1), family);
  ASSERT_TRUE(fooled.has_value());
  EXPECT_FALSE(fooled->variant.has_value());
  EXPECT_EQ(fooled->nontrivial_minimum, q(0));
}

TEST(AdversaryPairs, FullyQueriedCoPairsPinTheAnswer) {
  const PairFamily family(4);
  const QueryTranscript t = co_pair_transcript(family, {});
  EXPECT_FALSE(adversary_pairs(t, q(0), family).has_value());
  EXPECT_TRUE(adversary_pairs(t, q(-1), family).has_value());
  EXPECT_TRUE(adversary_pairs(t, q(5), family).has_value());
}

TEST(AdversaryPairs, RejectsAnswersThatAreNotFromTheBase) {
  const PairFamily family(4);
  ValueOracle oracle(4, family.variant(1, 2).as_function());
  oracle.evaluate(Subset::of(4, {3, 4}));
  EXPECT_THROW(adversary_pairs(oracle.transcript(), q(0), family), InconsistencyError);
}

TEST(AdversaryPairs, AnyShortScanIsFooled) {
  std::mt19937_64 rng(8);
  for (int n = 4; n <= 7; ++n) {
    const PairFamily family(n);
    std::vector<Subset> all;
    for_each_subset(n, [&](const Subset& s) {
      if (s.is_nontrivial()) all.push_back(s);
    });
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(all.begin(), all.end(), rng);
      // Drop one co-pair so fewer than C(n,2) are queried.
      const Subset dropped = PairFamily::co_pair(n, 1 + trial % (n - 1), n);
      ValueOracle oracle(n, family.base().as_function());
      Rational guess = 0;
      for (const auto& s : all) {
        if (s != dropped) guess = std::min(guess, oracle.evaluate(s));
      }
      const auto fooled = adversary_pairs(oracle.transcript(), guess, family);
      ASSERT_TRUE(fooled.has_value());
      EXPECT_NE(fooled->nontrivial_minimum, guess);
      EXPECT_TRUE(oracle.transcript().replays_against(fooled->instance.as_function()));
    }
  }
}

}  // namespace
}  // namespace sfmlab
