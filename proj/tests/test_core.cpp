#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"

namespace lc = labelcover;
using lc::Rational;

namespace {

lc::RawGame single_edge(std::vector<lc::Symbol> table, int kb = 2) {
  return lc::RawGame{1, 1, static_cast<int>(table.size()), kb, {{0, 0}}, {std::move(table)}};
}

lc::ProjectionGame fixture(const std::string& name) {
  return lc::parse_game(lc::read_file(std::string(LC_FIXTURES) + "/" + name));
}

lc::Assignment fixture_assignment(const std::string& name) {
  return lc::parse_assignment(lc::read_file(std::string(LC_FIXTURES) + "/" + name));
}

lc::ProjectionGame random_game(std::uint64_t seed, int max_side = 6, int max_k = 4) {
  lc::Rng rng(seed);
  lc::RawGame raw;
  raw.a_count = 1 + rng.below(max_side);
  raw.b_count = 1 + rng.below(max_side);
  raw.sigma_a = 1 + rng.below(max_k);
  raw.sigma_b = 1 + rng.below(max_k);
  for (int a = 0; a < raw.a_count; ++a)
    for (int b = 0; b < raw.b_count; ++b)
      if (rng.below(3) == 0) raw.edges.push_back({a, b});
  for (std::size_t e = 0; e < raw.edges.size(); ++e) {
    std::vector<lc::Symbol> t(static_cast<std::size_t>(raw.sigma_a));
    for (auto& x : t) x = rng.below(raw.sigma_b);
    raw.projections.push_back(t);
  }
  return lc::build_game(raw);
}

lc::GameErrorKind build_error(const lc::RawGame& raw, int* edge = nullptr) {
  try {
    lc::build_game(raw);
  } catch (const lc::GameError& e) {
    if (edge) *edge = e.edge();
    return e.kind();
  }
  ADD_FAILURE() << "build_game accepted an invalid instance";
  return lc::GameErrorKind::InvalidSize;
}

}  // namespace

TEST(BuildGame, SmallestWellFormedInstance) {
  const auto g = lc::build_game(single_edge({0, 1}));
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.project(0, 1), 1);
  EXPECT_EQ(g.vertex_count(), 2);
}

TEST(BuildGame, RejectsOutOfRangeSymbolNamingTheEdge) {
  int edge = -2;
  EXPECT_EQ(build_error(single_edge({0, 2}), &edge), lc::GameErrorKind::SymbolOutOfRange);
  EXPECT_EQ(edge, 0);
}

TEST(BuildGame, RejectsBadEndpointsDuplicatesAndShortTables) {
  lc::RawGame raw{2, 2, 2, 2, {{0, 0}, {1, 1}, {0, 0}}, {{0, 1}, {1, 0}, {0, 0}}};
  int edge = -1;
  EXPECT_EQ(build_error(raw, &edge), lc::GameErrorKind::DuplicateEdge);
  EXPECT_EQ(edge, 2);

  raw.edges[2] = {0, 2};
  EXPECT_EQ(build_error(raw, &edge), lc::GameErrorKind::IndexOutOfRange);
  EXPECT_EQ(edge, 2);

  raw.edges[2] = {1, 0};
  raw.projections[1] = {1};
  EXPECT_EQ(build_error(raw, &edge), lc::GameErrorKind::TableLengthMismatch);
  EXPECT_EQ(edge, 1);

  EXPECT_EQ(build_error(lc::RawGame{0, 1, 1, 1, {}, {}}), lc::GameErrorKind::InvalidSize);
}

TEST(BuildGame, IncidenceListsFollowEdgeOrder) {
  const auto g = lc::build_game(lc::RawGame{2, 2, 1, 1, {{1, 0}, {0, 0}, {1, 1}}, {{0}, {0}, {0}}});
  EXPECT_EQ(g.edges_at_a(1), (std::vector<int>{0, 2}));
  EXPECT_EQ(g.edges_at_b(0), (std::vector<int>{0, 1}));
  EXPECT_EQ(lc::build_game(g.raw()), g);
}

TEST(Value, CountsMatchingEdges) {
  const auto g = lc::build_game(single_edge({0, 1}));
  EXPECT_EQ(lc::value(g, {{0}, {0}}), 1);
  EXPECT_EQ(lc::value(g, {{0}, {1}}), 0);
}

TEST(Value, PlantedFixtureIsFullySatisfied) {
  const auto g = fixture("tiny1.lc");
  EXPECT_EQ(lc::value(g, fixture_assignment("tiny1.plant.asg")), 6);
}

TEST(Value, RejectsMisshapenAssignments) {
  const auto g = lc::build_game(single_edge({0, 1}));
  EXPECT_THROW(lc::value(g, {{0, 0}, {0}}), lc::ShapeMismatch);
  EXPECT_THROW(lc::value(g, {{2}, {0}}), lc::ShapeMismatch);
  EXPECT_THROW(lc::value(g, {{0}, {-1}}), lc::ShapeMismatch);
}

TEST(Value, InvariantUnderEdgeReordering) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = random_game(s);
    auto raw = g.raw();
    lc::Rng rng(s + 100);
    std::vector<int> perm(raw.edges.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    rng.shuffle(perm);
    lc::RawGame shuffled = raw;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      shuffled.edges[i] = raw.edges[static_cast<std::size_t>(perm[i])];
      shuffled.projections[i] = raw.projections[static_cast<std::size_t>(perm[i])];
    }
    const auto h = lc::build_game(shuffled);
    lc::Assignment phi;
    for (int a = 0; a < g.a_count(); ++a) phi.a_labels.push_back(rng.below(g.sigma_a()));
    for (int b = 0; b < g.b_count(); ++b) phi.b_labels.push_back(rng.below(g.sigma_b()));
    const int v = lc::value(g, phi);
    EXPECT_EQ(v, lc::value(h, phi));
    EXPECT_EQ(v, oracle::count_satisfied(g, phi));
    EXPECT_GE(v, 0);
    EXPECT_LE(v, g.edge_count());
  }
}

TEST(BestResponse, EachSidePicksItsMostSatisfyingSymbol) {
  // a0 - b0 and a0 - b1; b-labels (1, 1): symbol 2 projects to (1, 1), symbol 0 to (1, 0).
  const auto g = lc::build_game(lc::RawGame{1, 2, 3, 2, {{0, 0}, {0, 1}}, {{1, 0, 1}, {0, 0, 1}}});
  const std::vector<lc::Symbol> b{1, 1};
  EXPECT_EQ(lc::best_a_response(g, b), (std::vector<lc::Symbol>{2}));
  const std::vector<lc::Symbol> a{1};
  EXPECT_EQ(lc::best_b_response(g, a), (std::vector<lc::Symbol>{0, 0}));
}

TEST(Stats, IdentityTablesAreUniform) {
  const auto g = lc::build_game(lc::RawGame{2, 2, 2, 2, {{0, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 1}, {0, 1}}});
  const auto st = lc::compute_stats(g);
  ASSERT_TRUE(st.uniform_p.has_value());
  EXPECT_EQ(*st.uniform_p, 1);
  EXPECT_EQ(st.p_bar_max(), Rational(1));
}

TEST(Stats, ConstantTablesPutAllMassOnSymbolZero) {
  const auto g = lc::build_game(lc::RawGame{2, 2, 3, 2, {{0, 0}, {1, 0}, {1, 1}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}});
  const auto st = lc::compute_stats(g);
  EXPECT_EQ(st.sigma_b_max, (std::vector<lc::Symbol>{0, 0}));
  EXPECT_EQ(st.p_max, (std::vector<int>{3, 3, 3}));
  EXPECT_FALSE(st.uniform_p.has_value());
}

TEST(Stats, TiesGoToTheSmallestSymbol) {
  const auto g = lc::build_game(lc::RawGame{1, 1, 2, 3, {{0, 0}}, {{2, 1}}});
  EXPECT_EQ(lc::compute_stats(g).sigma_b_max, (std::vector<lc::Symbol>{1}));
}

TEST(Stats, Tiny1MatchesGoldenFile) {
  const auto g = fixture("tiny1.lc");
  const auto st = lc::compute_stats(g);
  const auto golden = nlohmann::json::parse(lc::read_file(std::string(LC_FIXTURES) + "/tiny1.stats.json"));
  EXPECT_EQ(golden["degree_a"].get<std::vector<int>>(), st.degree_a);
  EXPECT_EQ(golden["degree_b"].get<std::vector<int>>(), st.degree_b);
  EXPECT_EQ(golden["sigma_b_max"].get<std::vector<int>>(), st.sigma_b_max);
  EXPECT_EQ(golden["p_max"].get<std::vector<int>>(), st.p_max);
  EXPECT_EQ(golden["p_bar_max"].get<std::string>(), "3/2");
  EXPECT_EQ(st.p_bar_max(), Rational(3, 2));
  EXPECT_EQ(golden["h"].get<std::vector<std::int64_t>>(), st.h);
  EXPECT_EQ(golden["e_n"].get<std::vector<std::int64_t>>(), st.e_n);
  EXPECT_EQ(golden["h_max"].get<std::int64_t>(), st.h_max);
  EXPECT_EQ(golden["e_n_max"].get<std::int64_t>(), st.e_n_max);
}

TEST(Stats, Tiny1NeighbourhoodsMatchSetExpansion) {
  const auto g = fixture("tiny1.lc");
  const auto st = lc::compute_stats(g);
  const auto naive = oracle::naive_stats(g);
  EXPECT_EQ(st.h_max, naive.h_max);
  EXPECT_EQ(st.e_n_max, naive.e_n_max);
}

TEST(Stats, IdentitiesHoldOnRandomGames) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto g = random_game(s);
    const auto st = lc::compute_stats(g);
    const auto naive = oracle::naive_stats(g);
    std::int64_t sum_a = 0, sum_b = 0;
    for (int d : st.degree_a) sum_a += d;
    for (int d : st.degree_b) sum_b += d;
    EXPECT_EQ(sum_a, g.edge_count());
    EXPECT_EQ(sum_b, g.edge_count());
    for (int a = 0; a < g.a_count(); ++a) {
      EXPECT_EQ(st.h[a], naive.h[a]);
      EXPECT_EQ(st.e_n[a], naive.e_n[a]);
      EXPECT_EQ(std::set<int>(st.two_hop[a].begin(), st.two_hop[a].end()), naive.two_hop[a]);
      EXPECT_GE(st.h[a], st.e_n[a]);
      EXPECT_GE(st.e_n[a], st.degree_a[a]);
    }
  }
}

TEST(Stats, PlantedGamesHaveMeanMaxPreimageAtLeastOne) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto gen = lc::gen_random_satisfiable(8, 9, 5, 3, 3, s);
    EXPECT_GE(lc::compute_stats(gen.game).p_bar_max(), Rational(1));
  }
}

TEST(Stats, UniformFlagFollowsTheGenerator) {
  const auto uniform = lc::gen_random_satisfiable(6, 6, 6, 3, 3, 5, true);
  const auto st = lc::compute_stats(uniform.game);
  ASSERT_TRUE(st.uniform_p.has_value());
  EXPECT_EQ(*st.uniform_p, 2);
  // Same shape without the flag; random tables are essentially never balanced.
  const auto plain = lc::gen_random_satisfiable(6, 6, 6, 3, 3, 5, false);
  EXPECT_FALSE(lc::compute_stats(plain.game).uniform_p.has_value());
}

TEST(Components, ConnectedGameIsOneComponent) {
  const auto g = fixture("tiny1.lc");
  const auto split = lc::connected_components(g);
  ASSERT_EQ(split.components.size(), 1u);
  EXPECT_EQ(split.components[0].game, g);
  EXPECT_TRUE(split.isolated_a.empty());
  EXPECT_TRUE(split.isolated_b.empty());
}

TEST(Components, DisjointEdgesSplit) {
  const auto g = lc::build_game(lc::RawGame{2, 2, 2, 2, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}});
  const auto split = lc::connected_components(g);
  ASSERT_EQ(split.components.size(), 2u);
  for (const auto& c : split.components) EXPECT_EQ(c.game.edge_count(), 1);
}

TEST(Components, IsolatedVerticesAreReportedSeparately) {
  const auto g = lc::build_game(lc::RawGame{3, 2, 1, 1, {{1, 1}}, {{0}}});
  const auto split = lc::connected_components(g);
  EXPECT_EQ(split.components.size(), 1u);
  EXPECT_EQ(split.isolated_a, (std::vector<int>{0, 2}));
  EXPECT_EQ(split.isolated_b, (std::vector<int>{0}));
}

TEST(Components, LiftedComponentOptimaAddUp) {
  // Three planted blocks with randomly relabelled vertices, glued into one game.
  lc::RawGame raw{0, 0, 3, 2, {}, {}};
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto part = lc::gen_random_satisfiable(2, 2, 3, 2, 2, 70 + s).game.raw();
    for (std::size_t e = 0; e < part.edges.size(); ++e) {
      raw.edges.push_back({part.edges[e].a + raw.a_count, part.edges[e].b + raw.b_count});
      auto t = part.projections[e];
      if (e == 0) t[0] = 1 - t[0];  // make some blocks imperfect
      raw.projections.push_back(t);
    }
    raw.a_count += part.a_count;
    raw.b_count += part.b_count;
  }
  const auto g = lc::build_game(raw);
  const auto split = lc::connected_components(g);
  ASSERT_EQ(split.components.size(), 3u);
  std::vector<lc::Assignment> parts;
  int sum = 0;
  for (const auto& c : split.components) {
    const int opt = oracle::optimum(c.game);
    sum += opt;
    // Component optimum by enumeration, lifted through the index maps.
    lc::Assignment best;
    std::vector<lc::Symbol> a(static_cast<std::size_t>(c.game.a_count()), 0);
    do {
      lc::Assignment phi{a, lc::best_b_response(c.game, a)};
      if (oracle::count_satisfied(c.game, phi) == opt) {
        best = phi;
        break;
      }
    } while (oracle::bump(a, c.game.sigma_a()));
    parts.push_back(best);
  }
  const auto lifted = lc::lift(g, split, parts);
  EXPECT_EQ(oracle::count_satisfied(g, lifted), sum);
  EXPECT_EQ(oracle::optimum(g), sum);
}

TEST(CeilOf, RoundsTowardPositiveInfinity) {
  EXPECT_EQ(lc::ceil_of(Rational(7, 2)), 4);
  EXPECT_EQ(lc::ceil_of(Rational(6, 2)), 3);
  EXPECT_EQ(lc::ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(lc::ceil_of(Rational(0)), 0);
}

TEST(Rng, IsReproducibleAndInRange) {
  lc::Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) {
    const int x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_GE(x, 0);
    EXPECT_LT(x, 7);
  }
  const auto s = lc::Rng(3).sample(10, 10);
  EXPECT_EQ(std::set<int>(s.begin(), s.end()).size(), 10u);
  EXPECT_FALSE(lc::Rng(1).bernoulli(Rational(0)));
  EXPECT_TRUE(lc::Rng(1).bernoulli(Rational(1)));
}
