#include <gtest/gtest.h>

#include "oracles.hpp"

namespace lc = labelcover;
using lc::Rational;

namespace {

lc::ProjectionGame fixture(const std::string& name) {
  return lc::parse_game(lc::read_file(std::string(LC_FIXTURES) + "/" + name));
}

/// a0 - b0 - a1 - b1 - a2 with identity tables.
lc::ProjectionGame path4() {
  return lc::build_game(lc::RawGame{3, 2, 2, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}}, {{0, 1}, {0, 1}, {1, 0}, {0, 1}}});
}

/// BFS distances over the global vertex numbering, each component started from its smallest vertex.
std::vector<int> naive_levels(const lc::ProjectionGame& g) {
  const int n = g.vertex_count();
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (level[s] >= 0) continue;
    level[s] = 0;
    for (bool grew = true; grew;) {
      grew = false;
      for (int e = 0; e < g.edge_count(); ++e) {
        const int u = g.edge(e).a, v = g.a_count() + g.edge(e).b;
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
          if (level[x] >= 0 && (level[y] < 0 || level[y] > level[x] + 1)) {
            level[y] = level[x] + 1;
            grew = true;
          }
        }
      }
    }
  }
  return level;
}

void expect_sound_partition(const lc::ProjectionGame& g, const lc::BakerPartition& p) {
  ASSERT_EQ(static_cast<int>(p.classes.size()), p.h);
  ASSERT_EQ(static_cast<int>(p.decompositions.size()), p.h);
  EXPECT_EQ(p.levels, naive_levels(g));
  std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (int i = 0; i < p.h; ++i) {
    for (int e : p.classes[i]) {
      ++seen[e];
      const int lvl = std::min(p.levels[g.edge(e).a], p.levels[g.a_count() + g.edge(e).b]);
      EXPECT_EQ(lvl % p.h, i);
    }
    const auto residual = lc::restrict_edges(g, lc::residual_edges(g, p, i));
    EXPECT_EQ(residual.edge_count() + static_cast<int>(p.classes[i].size()), g.edge_count());
    EXPECT_TRUE(lc::validate_decomposition(residual, p.decompositions[i]).empty()) << "class " << i;
  }
  for (int c : seen) EXPECT_EQ(c, 1);
}

void expect_ptas_bound(const lc::ProjectionGame& g, const Rational& eps) {
  const auto r = lc::ptas(g, eps);
  const int h = lc::ptas_h(eps);
  const int opt = oracle::optimum(g);
  EXPECT_EQ(lc::value(g, r.assignment), r.satisfied);
  EXPECT_GE(static_cast<std::int64_t>(r.satisfied) * h, static_cast<std::int64_t>(opt) * (h - 1));
  EXPECT_GE(Rational(r.satisfied), r.guarantee);
  ASSERT_TRUE(r.opt_fraction.has_value());
  EXPECT_EQ(*r.opt_fraction, Rational(h - 1, h));
}

}  // namespace

TEST(Baker, SingleClassHoldsEveryEdge) {
  const auto g = fixture("grid3.lc");
  const auto p = lc::baker_partition(g, 1);
  expect_sound_partition(g, p);
  EXPECT_EQ(static_cast<int>(p.classes[0].size()), g.edge_count());
  EXPECT_EQ(p.decompositions[0].width(), 0);
}

TEST(Baker, PathAlternatesClasses) {
  const auto g = path4();
  const auto p = lc::baker_partition(g, 2);
  expect_sound_partition(g, p);
  EXPECT_EQ(p.levels, (std::vector<int>{0, 2, 4, 1, 3}));
  EXPECT_EQ(p.classes[0], (std::vector<int>{0, 2}));
  EXPECT_EQ(p.classes[1], (std::vector<int>{1, 3}));
  for (const auto& td : p.decompositions) EXPECT_LE(td.width(), 1);
}

TEST(Baker, GridPartitionIsSound) {
  const auto g = fixture("grid4.lc");
  for (int h = 1; h <= 4; ++h) expect_sound_partition(g, lc::baker_partition(g, h));
}

TEST(Baker, DisconnectedGamesRestartLevels) {
  const auto g = lc::build_game(lc::RawGame{2, 2, 1, 1, {{0, 0}, {1, 1}}, {{0}, {0}}});
  const auto p = lc::baker_partition(g, 2);
  expect_sound_partition(g, p);
  EXPECT_EQ(p.levels, (std::vector<int>{0, 0, 1, 1}));
}

TEST(Baker, RejectsZeroClasses) { EXPECT_THROW(lc::baker_partition(path4(), 0), lc::Error); }

TEST(Ptas, ClassCountFromEpsilon) {
  EXPECT_EQ(lc::ptas_h(Rational(1)), 2);
  EXPECT_EQ(lc::ptas_h(Rational(1, 2)), 3);
  EXPECT_EQ(lc::ptas_h(Rational(1, 3)), 4);
  EXPECT_EQ(lc::ptas_h(Rational(2, 5)), 4);
}

TEST(Ptas, PathWithEpsilonOne) {
  const auto g = path4();
  expect_ptas_bound(g, Rational(1));
}

TEST(Ptas, GridWithEpsilonHalf) {
  expect_ptas_bound(fixture("grid3.lc"), Rational(1, 2));
  for (std::uint64_t s = 0; s < 5; ++s) expect_ptas_bound(lc::gen_planar_grid(3, 4, 3, 2, s).game, Rational(1, 2));
}

TEST(Ptas, ColoringReductionWithEpsilonThird) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto graph = lc::gen_planar_coloring_graph(5, Rational(1, 4), s);
    expect_ptas_bound(lc::from_planar_3col(graph), Rational(1, 3));
  }
}

TEST(Ptas, UnsatisfiableGridStillMeetsTheBound) {
  lc::Rng rng(9);
  for (int i = 0; i < 5; ++i) {
    auto raw = lc::gen_planar_grid(3, 3, 2, 2, static_cast<std::uint64_t>(i)).game.raw();
    for (auto& t : raw.projections)
      for (auto& x : t) x = rng.below(2);
    expect_ptas_bound(lc::build_game(raw), Rational(1, 2));
  }
}

TEST(Ptas, DenseGamesFailThePlanarityCheck) {
  lc::RawGame raw{5, 5, 1, 1, {}, {}};
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      raw.edges.push_back({a, b});
      raw.projections.push_back({0});
    }
  const auto g = lc::build_game(raw);
  EXPECT_FALSE(lc::passes_planarity_check(g));
  EXPECT_THROW(lc::ptas(g, Rational(1)), lc::PlanarityCheckFailed);
  lc::PtasOptions opt;
  opt.force_nonplanar = true;
  EXPECT_EQ(lc::ptas(g, Rational(1), opt).satisfied, 25);
}

TEST(Ptas, RejectsEpsilonOutsideTheUnitInterval) {
  EXPECT_THROW(lc::ptas(path4(), Rational(0)), lc::Error);
  EXPECT_THROW(lc::ptas(path4(), Rational(3, 2)), lc::Error);
  lc::PtasOptions opt;
  opt.h_override = 3;
  const auto r = lc::ptas(path4(), Rational(0), opt);
  EXPECT_EQ(*r.opt_fraction, Rational(2, 3));
}
