#include <gtest/gtest.h>

#include "oracles.hpp"

namespace lc = labelcover;
using lc::Rational;

namespace {

lc::ProjectionGame fixture(const std::string& name) {
  return lc::parse_game(lc::read_file(std::string(LC_FIXTURES) + "/" + name));
}

lc::Assignment fixture_assignment(const std::string& name) {
  return lc::parse_assignment(lc::read_file(std::string(LC_FIXTURES) + "/" + name));
}

lc::ProjectionGame single_identity_edge() { return lc::build_game(lc::RawGame{1, 1, 2, 2, {{0, 0}}, {{0, 1}}}); }

/// One A-vertex joined to three B-vertices.
lc::ProjectionGame star() {
  return lc::build_game(lc::RawGame{1, 3, 3, 2, {{0, 0}, {0, 1}, {0, 2}}, {{1, 0, 1}, {0, 0, 1}, {1, 1, 0}}});
}

/// a0 and a1 share b0; a0 is the identity there, a1 maps everything to 0, so sigma = 1 at a0
/// leaves a1 without a consistent symbol.
lc::ProjectionGame forced_empty() {
  return lc::build_game(lc::RawGame{2, 1, 2, 2, {{0, 0}, {1, 0}}, {{0, 1}, {0, 0}}});
}

lc::ProjectionGame random_game(lc::Rng& rng) {
  lc::RawGame raw;
  raw.a_count = 1 + rng.below(4);
  raw.b_count = 1 + rng.below(4);
  raw.sigma_a = 1 + rng.below(3);
  raw.sigma_b = 1 + rng.below(3);
  for (int a = 0; a < raw.a_count; ++a)
    for (int b = 0; b < raw.b_count; ++b)
      if (rng.below(2) == 0) raw.edges.push_back({a, b});
  for (std::size_t e = 0; e < raw.edges.size(); ++e) {
    std::vector<lc::Symbol> t(static_cast<std::size_t>(raw.sigma_a));
    for (auto& x : t) x = rng.below(raw.sigma_b);
    raw.projections.push_back(t);
  }
  return lc::build_game(raw);
}

std::vector<lc::SolveReport> all_five(const lc::ProjectionGame& g, const lc::Analysis& an) {
  std::vector<lc::SolveReport> out;
  out.push_back(lc::satisfy_one_neighbor(g));
  out.push_back(lc::greedy_assignment(g, an.stats));
  const auto& star_a = an.star.per_a[static_cast<std::size_t>(an.stats.e_n_argmax)];
  if (!star_a.empty()) out.push_back(lc::know_your_neighbors(g, an.stats.e_n_argmax, star_a.front().sigma, an));
  out.push_back(lc::know_neighbors_neighbors(g, an.star.h_star_argmax_a, an));
  out.push_back(lc::divide_and_conquer(g, an));
  return out;
}

}  // namespace

TEST(OneNeighbor, StarSatisfiesEveryEdge) {
  const auto r = lc::satisfy_one_neighbor(star());
  EXPECT_EQ(r.satisfied, 3);
  EXPECT_EQ(r.guarantee, Rational(3));
}

TEST(OneNeighbor, SingleEdge) { EXPECT_EQ(lc::satisfy_one_neighbor(single_identity_edge()).satisfied, 1); }

TEST(OneNeighbor, Tiny1GoldenValue) {
  // a-labels 0; b0, b1, b2 follow edges 2, 0, 1; edges 0, 1, 2 and 5 end up satisfied.
  const auto r = lc::satisfy_one_neighbor(fixture("tiny1.lc"));
  EXPECT_EQ(r.satisfied, 4);
  EXPECT_EQ(r.assignment.b_labels, (std::vector<lc::Symbol>{0, 0, 0}));
}

TEST(Greedy, ConstantTablesAreTight) {
  const auto g = lc::build_game(lc::RawGame{2, 2, 3, 2, {{0, 0}, {0, 1}, {1, 1}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}});
  const auto r = lc::greedy_assignment(g);
  EXPECT_EQ(r.satisfied, 3);
  EXPECT_EQ(r.guarantee, Rational(3));
}

TEST(Greedy, IdentityTablesGetHalf) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = lc::gen_random_satisfiable(8, 8, 2, 2, 3, s, true).game;
    EXPECT_GE(2 * lc::greedy_assignment(g).satisfied, g.edge_count());
  }
}

TEST(Greedy, BoundHoldsOnRandomPlantedGames) {
  lc::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const int ka = 2 + rng.below(4);
    const int na = 2 + rng.below(20), nb = 2 + rng.below(20), kb = 2 + rng.below(ka - 1);
    const auto gen = lc::gen_random_satisfiable(na, nb, ka, kb, 1 + rng.below(std::min(3, nb)), static_cast<std::uint64_t>(i));
    const auto& g = gen.game;
    const auto st = lc::compute_stats(g);
    const auto r = lc::greedy_assignment(g, st);
    EXPECT_GE(Rational(r.satisfied), Rational(g.edge_count()) * st.p_bar_max() / g.sigma_a());
    EXPECT_GE(Rational(r.satisfied), r.guarantee);
  }
}

TEST(SigmaStar, SingleEdgeKeepsEverySymbol) {
  const lc::Analysis an(single_identity_edge());
  ASSERT_EQ(an.star.per_a[0].size(), 2u);
  EXPECT_TRUE(an.star.contains(0, 0));
  EXPECT_TRUE(an.star.contains(0, 1));
}

TEST(SigmaStar, ForcedEmptySetExcludesTheSymbol) {
  const auto g = forced_empty();
  const lc::Analysis an(g);
  EXPECT_TRUE(an.star.contains(0, 0));
  EXPECT_FALSE(an.star.contains(0, 1));
  EXPECT_TRUE(an.star.contains(1, 0));
  EXPECT_TRUE(an.star.contains(1, 1));
  for (int a = 0; a < 2; ++a)
    for (lc::Symbol s = 0; s < 2; ++s) EXPECT_EQ(an.star.contains(a, s), oracle::in_sigma_star(g, a, s));
}

TEST(SigmaStar, PlantedSymbolsSurvive) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto gen = lc::gen_random_satisfiable(6, 7, 4, 3, 3, s);
    const lc::Analysis an(gen.game);
    for (int a = 0; a < gen.game.a_count(); ++a) EXPECT_TRUE(an.star.contains(a, gen.plant.a_labels[a]));
  }
}

TEST(SigmaStar, MatchesTheDefinitionOnRandomGames) {
  lc::Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto g = random_game(rng);
    const lc::Analysis an(g);
    for (int a = 0; a < g.a_count(); ++a)
      for (lc::Symbol s = 0; s < g.sigma_a(); ++s) EXPECT_EQ(an.star.contains(a, s), oracle::in_sigma_star(g, a, s));
  }
}

TEST(SigmaStar, NeighbourhoodsAreNestedAndWeighed) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = lc::gen_random_satisfiable(8, 8, 4, 2, 2, s).game;
    const lc::Analysis an(g);
    const auto naive = oracle::naive_stats(g);
    for (int a = 0; a < g.a_count(); ++a) {
      for (const auto& en : an.star.per_a[a]) {
        const auto& nb = an.stats.neighbors_a[a];
        for (int b : en.n_star) EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), b));
        std::int64_t h = 0;
        for (int a2 : en.n_star2) {
          EXPECT_TRUE(naive.two_hop[a].count(a2));
          h += an.stats.degree_a[a2];
        }
        EXPECT_EQ(en.h_star, h);
        EXPECT_LE(en.h_star, an.star.h_star_max);
      }
    }
  }
}

TEST(KnowYourNeighbors, StarIsFullySatisfied) {
  const auto g = star();
  const lc::Analysis an(g);
  const auto r = lc::know_your_neighbors(g, 0, 2, an);
  EXPECT_EQ(r.satisfied, 3);
}

TEST(KnowYourNeighbors, SingleEdge) {
  const auto g = single_identity_edge();
  EXPECT_EQ(lc::know_your_neighbors(g, 0, 1, lc::Analysis(g)).satisfied, 1);
}

TEST(KnowYourNeighbors, Tiny1PlantedSymbolAtTheArgmax) {
  const auto g = fixture("tiny1.lc");
  const auto plant = fixture_assignment("tiny1.plant.asg");
  const lc::Analysis an(g);
  const auto naive = oracle::naive_stats(g);
  const int a0 = an.stats.e_n_argmax;
  EXPECT_EQ(an.stats.e_n[a0], naive.e_n_max);
  const auto r = lc::know_your_neighbors(g, a0, plant.a_labels[a0], an);
  EXPECT_GE(r.satisfied, naive.e_n_max);
  // Every edge at a neighbour of a0 is satisfied.
  for (int b : an.stats.neighbors_a[a0])
    for (int e : g.edges_at_b(b)) EXPECT_TRUE(lc::satisfied(g, r.assignment, e));
}

TEST(KnowYourNeighbors, RejectsSymbolsOutsideTheSurvivingSet) {
  const auto g = forced_empty();
  EXPECT_THROW(lc::know_your_neighbors(g, 0, 1, lc::Analysis(g)), lc::NotInSigmaStar);
}

TEST(KnowNeighborsNeighbors, SingleEdgeUniform) {
  const auto g = single_identity_edge();
  const lc::Analysis an(g);
  const auto r = lc::know_neighbors_neighbors_uniform(g, 0, an);
  EXPECT_EQ(r.satisfied, 1);
  EXPECT_EQ(r.guarantee, Rational(1));
}

TEST(KnowNeighborsNeighbors, CompleteBipartiteUniformPlanted) {
  const auto gen = lc::gen_random_satisfiable(2, 2, 4, 2, 2, 8, true);
  const auto& g = gen.game;
  const lc::Analysis an(g);
  ASSERT_TRUE(an.stats.uniform_p.has_value());
  for (int a0 = 0; a0 < 2; ++a0) {
    const auto r = lc::know_neighbors_neighbors_uniform(g, a0, an);
    EXPECT_GE(Rational(r.satisfied), Rational(an.stats.h[a0], *an.stats.uniform_p));
  }
}

TEST(KnowNeighborsNeighbors, BothVariantsMeetTheUniformBound) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto gen = lc::gen_random_satisfiable(10, 10, 6, 3, 3, s, true);
    const auto& g = gen.game;
    const lc::Analysis an(g);
    const int a0 = an.stats.h_argmax;
    const Rational bound(an.stats.h[a0], *an.stats.uniform_p);
    EXPECT_GE(Rational(lc::know_neighbors_neighbors_uniform(g, a0, an).satisfied), bound);
    EXPECT_GE(Rational(lc::know_neighbors_neighbors(g, a0, an).satisfied), bound / 2);
  }
}

TEST(KnowNeighborsNeighbors, ProofBoundOnRandomPlantedGames) {
  lc::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const int ka = 2 + rng.below(4);
    const int na = 2 + rng.below(15), nb = 2 + rng.below(15), kb = 2 + rng.below(ka - 1);
    const auto gen = lc::gen_random_satisfiable(na, nb, ka, kb, 1 + rng.below(std::min(3, nb)), 500 + static_cast<std::uint64_t>(i));
    const auto& g = gen.game;
    const lc::Analysis an(g);
    const int a0 = an.star.h_star_argmax_a;
    const auto r = lc::know_neighbors_neighbors(g, a0, an);
    EXPECT_GE(Rational(r.satisfied), r.guarantee);
    EXPECT_GE(Rational(r.satisfied), Rational(an.star.h_star_max) / (2 * an.stats.p_bar_max()));
  }
}

TEST(KnowNeighborsNeighbors, UniformVariantRejectsUnbalancedTables) {
  const auto g = forced_empty();
  EXPECT_THROW(lc::know_neighbors_neighbors_uniform(g, 0, lc::Analysis(g)), lc::UniformAssumptionViolated);
}

TEST(DivideAndConquer, SingleEdge) {
  const auto g = single_identity_edge();
  EXPECT_EQ(lc::divide_and_conquer(g, lc::Analysis(g)).satisfied, 1);
}

TEST(DivideAndConquer, DisjointPlantedBlocksAreAllCollected) {
  lc::RawGame raw{0, 0, 3, 3, {}, {}};
  for (std::uint64_t s = 0; s < 4; ++s) {
    const auto part = lc::gen_random_satisfiable(3, 3, 3, 3, 3, 40 + s, true).game.raw();
    for (std::size_t e = 0; e < part.edges.size(); ++e) {
      raw.edges.push_back({part.edges[e].a + raw.a_count, part.edges[e].b + raw.b_count});
      raw.projections.push_back(part.projections[e]);
    }
    raw.a_count += 3;
    raw.b_count += 3;
  }
  const auto g = lc::build_game(raw);
  const lc::Analysis an(g);
  EXPECT_EQ(lc::divide_and_conquer(g, an).satisfied, g.edge_count());
  EXPECT_EQ(lc::divide_and_conquer_uniform(g, an).satisfied, g.edge_count());
}

TEST(DivideAndConquer, BoundOnRandomPlantedGames) {
  lc::Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    const int ka = 2 + rng.below(4);
    const int na = 2 + rng.below(15), nb = 2 + rng.below(15), kb = 2 + rng.below(ka - 1);
    const auto gen = lc::gen_random_satisfiable(na, nb, ka, kb, 1 + rng.below(std::min(3, nb)), 700 + static_cast<std::uint64_t>(i));
    const auto& g = gen.game;
    const lc::Analysis an(g);
    const auto r = lc::divide_and_conquer(g, an);
    const __int128 m = g.edge_count();
    const __int128 lhs = static_cast<__int128>(r.satisfied) * 64 * g.a_count() * g.b_count() *
                         (an.star.h_star_max + oracle::naive_stats(g).e_n_max);
    EXPECT_GE(lhs, m * m * m);
  }
}

TEST(BestOf, SingleEdge) {
  const auto r = lc::best_of(single_identity_edge());
  EXPECT_EQ(r.satisfied, 1);
  EXPECT_EQ(r.winner, "one-neighbor");
}

TEST(BestOf, Tiny1GoldenWinner) {
  const auto g = fixture("tiny1.lc");
  const auto r = lc::best_of(g);
  EXPECT_EQ(r.winner, "kynn");
  EXPECT_EQ(r.satisfied, 6);
  ASSERT_EQ(r.breakdown.size(), 5u);
  const std::vector<int> expected{4, 4, 4, 6, 4};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r.breakdown[i].satisfied, expected[i]) << r.breakdown[i].algorithm;
  EXPECT_TRUE(lc::meets_composite_bound(g, r.satisfied));
}

TEST(BestOf, SelectsTheMaximumAndIsDeterministic) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = lc::gen_random_satisfiable(12, 10, 5, 3, 2, s).game;
    const lc::Analysis an(g);
    const auto r = lc::best_of(g, an);
    int top = 0;
    for (const auto& x : all_five(g, an)) top = std::max(top, x.satisfied);
    EXPECT_EQ(r.satisfied, top);
    const auto again = lc::best_of(g, an);
    EXPECT_EQ(again.assignment.a_labels, r.assignment.a_labels);
    EXPECT_EQ(again.assignment.b_labels, r.assignment.b_labels);
    EXPECT_EQ(again.winner, r.winner);
  }
}

TEST(BestOf, CompositeBoundCheckIsExact) {
  // |E| = 16, n_A |Sigma_A| = 16: the bound is 16 / (4 * 2) = 2.
  const auto g = lc::gen_random_satisfiable(4, 4, 4, 2, 4, 1).game;
  ASSERT_EQ(g.edge_count(), 16);
  EXPECT_TRUE(lc::meets_composite_bound(g, 2));
  EXPECT_FALSE(lc::meets_composite_bound(g, 1));
}

TEST(Approx, EveryAlgorithmReturnsAValidAssignmentOnArbitraryGames) {
  lc::Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const auto g = random_game(rng);
    const lc::Analysis an(g);
    for (const auto& r : all_five(g, an)) {
      EXPECT_NO_THROW(lc::check_assignment(g, r.assignment));
      EXPECT_EQ(r.satisfied, oracle::count_satisfied(g, r.assignment));
    }
    EXPECT_NO_THROW(lc::check_assignment(g, lc::best_of(g, an).assignment));
    EXPECT_NO_THROW(lc::check_assignment(g, lc::divide_and_conquer_uniform(g, an).assignment));
  }
}
