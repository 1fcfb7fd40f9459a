#include "stablepath/delta.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stablepath/oracle.hpp"
#include "support.hpp"

namespace stablepath {
namespace {

using testing::three_by_three;

TEST(MaxFlow, SmallNetworks) {
  MaxFlow diamond(4);
  diamond.add_edge(0, 1, 3);
  diamond.add_edge(0, 2, 2);
  diamond.add_edge(1, 2, 5);
  diamond.add_edge(1, 3, 2);
  diamond.add_edge(2, 3, 3);
  EXPECT_EQ(diamond.solve(0, 3), 5);
  EXPECT_EQ(diamond.source_side(0), (std::vector<char>{1, 0, 0, 0}));

  MaxFlow cut(3);
  cut.add_edge(0, 1, 10);
  cut.add_edge(1, 2, 1);
  EXPECT_EQ(cut.solve(0, 2), 1);
  EXPECT_EQ(cut.source_side(0), (std::vector<char>{1, 1, 0}));

  EXPECT_THROW(cut.add_edge(0, 2, -1), std::invalid_argument);
}

TEST(Rotations, SingleRotationOfThreeByThreeSample) {
  const auto poset = extract_rotations(three_by_three());
  EXPECT_EQ(poset.man_optimal, (ProposalVector{1, 1, 1}));
  ASSERT_EQ(poset.rotations.size(), 1u);
  const auto& cycle = poset.rotations[0].cycle;
  ASSERT_EQ(cycle.size(), 3u);
  EXPECT_EQ(cycle[0], (RotationEntry{0, 0, 2}));
  std::set<std::pair<int, int>> moves;
  for (const auto& e : cycle) moves.insert({e.man, e.to_woman});
  EXPECT_EQ(moves, (std::set<std::pair<int, int>>{{0, 2}, {1, 0}, {2, 1}}));
  EXPECT_TRUE(poset.direct_predecessors[0].empty());
  EXPECT_EQ(apply_rotations(three_by_three(), poset, {1}), (ProposalVector{3, 3, 3}));
}

TEST(Rotations, UniqueStableMatchingHasNone) {
  EXPECT_TRUE(extract_rotations(testing::unique_two()).rotations.empty());
  EXPECT_TRUE(extract_rotations(testing::from_rows({{1}}, {{1}})).rotations.empty());
}

TEST(Rotations, OpenSetRejected) {
  // First generated instance whose poset has a rotation with a predecessor.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = generate_instance(5, 5, rng());
    const auto poset = extract_rotations(inst);
    for (std::size_t b = 0; b < poset.rotations.size(); ++b) {
      if (poset.direct_predecessors[b].empty()) continue;
      std::vector<char> chosen(poset.rotations.size(), 0);
      chosen[b] = 1;
      EXPECT_FALSE(is_closed(poset, chosen));
      EXPECT_THROW(apply_rotations(inst, poset, chosen), std::invalid_argument);
      return;
    }
  }
  GTEST_SKIP() << "no instance with a rotation precedence found";
}

TEST(CostMatrix, DistanceToStartIsTotalCost) {
  const auto inst = three_by_three();
  const CostMatrix cost(inst, {2, 2, 1});
  EXPECT_EQ(cost(0, 0), 1);
  EXPECT_EQ(cost(2, 1), 2);
  EXPECT_EQ(cost(2, 2), 0);
  EXPECT_EQ(cost.of(inst, {3, 3, 3}), 4);
}

TEST(RunDelta, WorkedExamples) {
  const auto inst = three_by_three();
  EXPECT_EQ(run_delta(inst, {2, 2, 1}), (ProposalVector{1, 1, 1}));
  EXPECT_EQ(run_delta(inst, {3, 3, 3}), (ProposalVector{3, 3, 3}));
  EXPECT_EQ(run_delta(inst, {3, 3, 2}), (ProposalVector{3, 3, 3}));
  // Both stable vectors are at distance 3; the lattice-least wins.
  EXPECT_EQ(run_delta(inst, {2, 2, 2}), (ProposalVector{1, 1, 1}));
  EXPECT_EQ(run_delta(testing::unique_two(), {1, 1}), (ProposalVector{2, 1}));
}

TEST(LpCertificate, WorkedExamples) {
  const auto inst = three_by_three();
  EXPECT_TRUE(lp_certificate(inst, {1, 1, 1}));
  EXPECT_TRUE(lp_certificate(inst, {3, 3, 3}));
  EXPECT_FALSE(lp_certificate(inst, {2, 2, 2}));
  EXPECT_FALSE(lp_certificate(inst, {1, 1, 2}));  // two men on w1
}

class DeltaProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{8080};
};

TEST_F(DeltaProperties, ClosedSetsAreExactlyTheStableVectors) {
  for (int trial = 0; trial < 250; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    const int w = trial % 2 ? m : std::uniform_int_distribution<int>(m, 8)(rng);
    const auto inst = generate_instance(m, w, rng());
    const auto poset = extract_rotations(inst);
    const auto stable = oracle::enumerate_stable(inst);
    std::set<ProposalVector> reached;
    testing::for_each_closed_subset(poset, [&](const std::vector<char>& chosen) {
      ASSERT_TRUE(is_closed(poset, chosen));
      reached.insert(apply_rotations(inst, poset, chosen));
    });
    EXPECT_EQ(testing::count_closed_subsets(poset), static_cast<std::int64_t>(stable.size()));
    EXPECT_EQ(std::vector<ProposalVector>(reached.begin(), reached.end()), stable);
  }
}

TEST_F(DeltaProperties, PrecedenceIsAStrictOrder) {
  for (int trial = 0; trial < 200; ++trial) {
    const int m = std::uniform_int_distribution<int>(2, 7)(rng);
    const auto inst = generate_instance(m, m, rng());
    const auto poset = extract_rotations(inst);
    const int r = static_cast<int>(poset.rotations.size());
    for (int a = 0; a < r; ++a) {
      EXPECT_FALSE(poset.precedes[a][a]);
      for (int b = 0; b < r; ++b) {
        if (poset.precedes[a][b]) EXPECT_LT(a, b) << "list order must extend precedence";
        for (int c = 0; c < r; ++c)
          if (poset.precedes[a][b] && poset.precedes[b][c]) EXPECT_TRUE(poset.precedes[a][c]);
      }
    }
  }
}

TEST_F(DeltaProperties, NearestMatchesOracleWithLeastTieBreak) {
  for (int trial = 0; trial < 300; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    const int w = trial % 2 ? m : std::uniform_int_distribution<int>(m, 8)(rng);
    const auto inst = generate_instance(m, w, rng());
    const auto stable = oracle::enumerate_stable(inst);
    const auto poset = extract_rotations(inst);
    for (int rep = 0; rep < 4; ++rep) {
      const auto start = testing::random_vector(inst, rng);
      const auto got = run_delta(inst, start, poset);
      ASSERT_TRUE(is_stable(inst, got));
      const auto ties = oracle::nearest(stable, start);
      ASSERT_FALSE(ties.empty());
      EXPECT_EQ(dist(start, got), dist(start, ties.front()));
      for (const auto& t : ties) EXPECT_TRUE(leq(got, t)) << "not the least of the ties";
    }
  }
}

TEST_F(DeltaProperties, RotationWeightsTelescope) {
  for (int trial = 0; trial < 200; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto inst = generate_instance(m, m, rng());
    const auto start = testing::random_vector(inst, rng);
    const CostMatrix cost(inst, start);
    auto poset = extract_rotations(inst);
    assign_weights(poset, cost);
    std::int64_t total = cost.of(inst, poset.man_optimal);
    EXPECT_EQ(total, dist(start, poset.man_optimal));
    std::vector<char> chosen(poset.rotations.size(), 0);
    for (std::size_t k = 0; k < poset.rotations.size(); ++k) {
      chosen[k] = 1;
      total += poset.rotations[k].weight;
      EXPECT_EQ(total, dist(start, apply_rotations(inst, poset, chosen)));
    }
  }
}

TEST_F(DeltaProperties, ChosenClosureIsClosed) {
  for (int trial = 0; trial < 200; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto inst = generate_instance(m, m, rng());
    auto poset = extract_rotations(inst);
    assign_weights(poset, CostMatrix(inst, testing::random_vector(inst, rng)));
    EXPECT_TRUE(is_closed(poset, min_weight_closure(poset)));
  }
}

TEST_F(DeltaProperties, StableStartIsItsOwnNearest) {
  for (int trial = 0; trial < 150; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const int w = std::uniform_int_distribution<int>(m, 6)(rng);
    const auto inst = generate_instance(m, w, rng());
    const auto poset = extract_rotations(inst);
    for (const auto& s : oracle::enumerate_stable(inst)) EXPECT_EQ(run_delta(inst, s, poset), s);
  }
}

TEST_F(DeltaProperties, LpCertificateAgreesOnSaturatingVectors) {
  for (int trial = 0; trial < 150; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const int w = std::uniform_int_distribution<int>(m, 5)(rng);
    const auto inst = generate_instance(m, w, rng());
    oracle::for_each_saturating(inst, [&](const ProposalVector& g) {
      EXPECT_EQ(lp_certificate(inst, g), is_stable(inst, g)) << g.to_string();
    });
  }
}

}  // namespace
}  // namespace stablepath
