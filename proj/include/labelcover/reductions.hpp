#pragma once

/// Instance generators: reductions from graph 3-colouring and Matrix Tiling (with solution
/// extraction), and seeded planted generators.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "labelcover/core.hpp"
#include "labelcover/random.hpp"
#include "labelcover/smooth.hpp"

namespace labelcover {

class InfeasibleParams : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// 3-colouring
// ---------------------------------------------------------------------------

struct ColoringGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  bool claimed_planar = false;
  friend bool operator==(const ColoringGraph&, const ColoringGraph&) = default;
};

inline void check_coloring_graph(const ColoringGraph& g) {
  if (g.vertex_count < 0) throw Error("colouring graph: negative vertex count");
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw Error("colouring graph: edge " + std::to_string(i) + " has an endpoint outside the vertex range");
    if (u == v) throw Error("colouring graph: edge " + std::to_string(i) + " is a self-loop");
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw Error("colouring graph: repeated edge");
}

/// Sigma_A symbol order: ordered pairs of distinct colours, lexicographic.
inline constexpr std::pair<int, int> kColorPairs[6] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

inline Symbol color_pair_symbol(int c1, int c2) {
  for (int s = 0; s < 6; ++s)
    if (kColorPairs[s].first == c1 && kColorPairs[s].second == c2) return s;
  throw Error("colour pair must consist of two distinct colours in 0..2");
}

/// A = graph edges, B = graph vertices; graph edge i = (u, v) yields game edges (i, u) then (i, v),
/// projecting a colour pair to its first and second component respectively.
inline ProjectionGame from_planar_3col(const ColoringGraph& g) {
  check_coloring_graph(g);
  if (g.edges.empty() || g.vertex_count == 0) throw InfeasibleParams("colouring graph needs at least one edge");
  RawGame r;
  r.a_count = static_cast<int>(g.edges.size());
  r.b_count = g.vertex_count;
  r.sigma_a = 6;
  r.sigma_b = 3;
  std::vector<Symbol> first, second;
  for (auto [c1, c2] : kColorPairs) {
    first.push_back(c1);
    second.push_back(c2);
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    r.edges.push_back({static_cast<int>(i), g.edges[i].first});
    r.projections.push_back(first);
    r.edges.push_back({static_cast<int>(i), g.edges[i].second});
    r.projections.push_back(second);
  }
  return ProjectionGame::build(r);
}

struct ColoringExtraction {
  /// Colour per graph vertex, read off the B-labels.
  std::vector<int> colors;
  /// Unsatisfied game edges; empty iff `colors` is a proper colouring obtained from a satisfying assignment.
  std::vector<int> violated;
  bool complete() const { return violated.empty(); }
};

inline ColoringExtraction extract_coloring(const ColoringGraph& g, const ProjectionGame& game, const Assignment& phi) {
  check_assignment(game, phi);
  if (game.b_count() != g.vertex_count) throw ShapeMismatch("game does not come from this colouring graph");
  ColoringExtraction out;
  out.colors.assign(phi.b_labels.begin(), phi.b_labels.end());
  for (int e = 0; e < game.edge_count(); ++e)
    if (!satisfied(game, phi, e)) out.violated.push_back(e);
  return out;
}

/// Stacked triangulation on n vertices with each edge then dropped with probability `drop`.
inline ColoringGraph gen_planar_coloring_graph(int n, const Rational& drop, std::uint64_t seed) {
  if (n < 2) throw InfeasibleParams("planar colouring graph needs at least 2 vertices");
  Rng rng(seed);
  ColoringGraph g;
  g.vertex_count = n;
  g.claimed_planar = true;
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges = {{0, 1}};
  } else {
    edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
      const auto f = static_cast<std::size_t>(rng.below(static_cast<int>(faces.size())));
      const auto face = faces[f];
      for (int u : face) edges.emplace_back(u, v);
      faces[f] = {face[0], face[1], v};
      faces.push_back({face[0], face[2], v});
      faces.push_back({face[1], face[2], v});
    }
  }
  for (auto e : edges)
    if (!rng.bernoulli(drop)) g.edges.push_back(e);
  if (g.edges.empty()) g.edges.push_back(edges.front());
  return g;
}

/// G(n, p) graph; planarity is not claimed.
inline ColoringGraph gen_random_coloring_graph(int n, const Rational& p, std::uint64_t seed) {
  if (n < 2) throw InfeasibleParams("colouring graph needs at least 2 vertices");
  Rng rng(seed);
  ColoringGraph g;
  g.vertex_count = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.edges.emplace_back(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Matrix Tiling
// ---------------------------------------------------------------------------

using Cell = std::pair<int, int>;  // 1-based (first, second)

struct MatrixTiling {
  int k = 0;  // grid side
  int n = 0;  // coordinate range [1, n]
  /// sets[(i-1)*k + (j-1)] = S_{i,j}, sorted and duplicate-free after normalize().
  std::vector<std::vector<Cell>> sets;

  const std::vector<Cell>& at(int i, int j) const { return sets[static_cast<std::size_t>((i - 1) * k + (j - 1))]; }
  bool contains(int i, int j, Cell s) const {
    const auto& v = at(i, j);
    return std::binary_search(v.begin(), v.end(), s);
  }
  void normalize() {
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }
  friend bool operator==(const MatrixTiling&, const MatrixTiling&) = default;
};

inline void check_tiling(const MatrixTiling& t) {
  if (t.k < 1 || t.n < 1) throw Error("matrix tiling: k and n must be positive");
  if (static_cast<int>(t.sets.size()) != t.k * t.k) throw Error("matrix tiling: expected k*k cell sets");
  for (const auto& s : t.sets)
    for (auto [x, y] : s)
      if (x < 1 || y < 1 || x > t.n || y > t.n) throw Error("matrix tiling: pair component outside [1, n]");
}

/// Row-major choices; nullopt is the wildcard.
struct TilingSolution {
  std::vector<std::optional<Cell>> cells;
  int stars() const {
    return static_cast<int>(std::count(cells.begin(), cells.end(), std::nullopt));
  }
  friend bool operator==(const TilingSolution&, const TilingSolution&) = default;
};

/// Empty when the solution respects membership and the row/column agreement constraints.
inline std::vector<std::string> tiling_violations(const MatrixTiling& t, const TilingSolution& s) {
  std::vector<std::string> out;
  if (static_cast<int>(s.cells.size()) != t.k * t.k) {
    out.push_back("solution has the wrong number of cells");
    return out;
  }
  auto cell = [&](int i, int j) { return s.cells[static_cast<std::size_t>((i - 1) * t.k + (j - 1))]; };
  auto where = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 1; i <= t.k; ++i) {
    for (int j = 1; j <= t.k; ++j) {
      const auto c = cell(i, j);
      if (!c) continue;
      if (!t.contains(i, j, *c)) out.push_back("cell " + where(i, j) + " picks a pair outside its set");
      if (j < t.k && cell(i, j + 1) && cell(i, j + 1)->first != c->first)
        out.push_back("cells " + where(i, j) + " and " + where(i, j + 1) + " disagree in the first coordinate");
      if (i < t.k && cell(i + 1, j) && cell(i + 1, j)->second != c->second)
        out.push_back("cells " + where(i, j) + " and " + where(i + 1, j) + " disagree in the second coordinate");
    }
  }
  return out;
}

/// Index maps of the tiling game.
struct TilingLayout {
  int k = 0;
  int n = 0;
  int a_index(int i, int j) const { return (i - 1) * k + (j - 1); }
  /// b_{i+1/2, j}, i in [1, k-1], j in [1, k]
  int b_vertical(int i, int j) const { return (i - 1) * k + (j - 1); }
  /// b_{i, j+1/2}, i in [1, k], j in [1, k-1]
  int b_horizontal(int i, int j) const { return k * (k - 1) + (i - 1) * (k - 1) + (j - 1); }
  Symbol a_symbol(Cell s) const { return (s.first - 1) * n + (s.second - 1); }
  Cell a_cell(Symbol s) const { return {s / n + 1, s % n + 1}; }
  Symbol square() const { return n; }
  Symbol diamond() const { return n + 1; }
};

/// A = cells (row-major), B = vertical then horizontal separators, Sigma_A = [n]x[n],
/// Sigma_B = [n] + {square, diamond}. Edges per cell in the order up, left, right, down.
inline ProjectionGame from_matrix_tiling(const MatrixTiling& t_in) {
  MatrixTiling t = t_in;
  t.normalize();
  check_tiling(t);
  if (t.k < 2) throw InfeasibleParams("tiling reduction needs k >= 2");
  const TilingLayout L{t.k, t.n};
  RawGame r;
  r.a_count = t.k * t.k;
  r.b_count = 2 * t.k * t.k - 2 * t.k;
  r.sigma_a = t.n * t.n;
  r.sigma_b = t.n + 2;
  // (x, y) is the cell, (z, t) the separator position scaled by 2 to stay integral.
  auto table = [&](int x, int y, int z2, int t2) {
    std::vector<Symbol> out(static_cast<std::size_t>(r.sigma_a));
    for (Symbol s = 0; s < r.sigma_a; ++s) {
      const Cell c = L.a_cell(s);
      const bool in = t.contains(x, y, c);
      if (in && 2 * x == z2) out[static_cast<std::size_t>(s)] = c.first - 1;
      else if (in) out[static_cast<std::size_t>(s)] = c.second - 1;
      else if (2 * x >= z2 && 2 * y >= t2) out[static_cast<std::size_t>(s)] = L.square();
      else out[static_cast<std::size_t>(s)] = L.diamond();
    }
    return out;
  };
  for (int i = 1; i <= t.k; ++i) {
    for (int j = 1; j <= t.k; ++j) {
      const int a = L.a_index(i, j);
      if (i > 1) {
        r.edges.push_back({a, L.b_vertical(i - 1, j)});
        r.projections.push_back(table(i, j, 2 * i - 1, 2 * j));
      }
      if (j > 1) {
        r.edges.push_back({a, L.b_horizontal(i, j - 1)});
        r.projections.push_back(table(i, j, 2 * i, 2 * j - 1));
      }
      if (j < t.k) {
        r.edges.push_back({a, L.b_horizontal(i, j)});
        r.projections.push_back(table(i, j, 2 * i, 2 * j + 1));
      }
      if (i < t.k) {
        r.edges.push_back({a, L.b_vertical(i, j)});
        r.projections.push_back(table(i, j, 2 * i + 1, 2 * j));
      }
    }
  }
  return ProjectionGame::build(r);
}

/// Satisfying labels from a wildcard-free tiling solution.
inline Assignment tiling_assignment(const MatrixTiling& t, const TilingSolution& s) {
  const TilingLayout L{t.k, t.n};
  Assignment phi;
  phi.a_labels.assign(static_cast<std::size_t>(t.k * t.k), 0);
  phi.b_labels.assign(static_cast<std::size_t>(2 * t.k * t.k - 2 * t.k), 0);
  for (int i = 1; i <= t.k; ++i)
    for (int j = 1; j <= t.k; ++j) {
      const auto& c = s.cells[static_cast<std::size_t>(L.a_index(i, j))];
      if (!c) throw Error("tiling_assignment: solution contains a wildcard");
      phi.a_labels[static_cast<std::size_t>(L.a_index(i, j))] = L.a_symbol(*c);
      if (i < t.k) phi.b_labels[static_cast<std::size_t>(L.b_vertical(i, j))] = c->second - 1;
      if (j < t.k) phi.b_labels[static_cast<std::size_t>(L.b_horizontal(i, j))] = c->first - 1;
    }
  return phi;
}

/// s_{i,j} = phi(a_{i,j}) when every edge touching N(a_{i,j}) is satisfied, the wildcard otherwise.
inline TilingSolution extract_tiling(const MatrixTiling& t, const ProjectionGame& game, const Assignment& phi) {
  check_assignment(game, phi);
  const TilingLayout L{t.k, t.n};
  if (game.a_count() != t.k * t.k) throw ShapeMismatch("game does not come from this tiling");
  TilingSolution s;
  s.cells.resize(static_cast<std::size_t>(t.k * t.k));
  for (int a = 0; a < game.a_count(); ++a) {
    bool all = true;
    for (int e : game.edges_at_a(a))
      for (int e2 : game.edges_at_b(game.edge(e).b)) all = all && satisfied(game, phi, e2);
    if (all) s.cells[static_cast<std::size_t>(a)] = L.a_cell(phi.a_labels[static_cast<std::size_t>(a)]);
  }
  return s;
}

/// Maximum number of non-wildcard cells. Depth-first over cells in row-major order trying set
/// members in ascending order before the wildcard; the first optimum found is returned.
inline std::pair<TilingSolution, int> brute_force_tiling(const MatrixTiling& t_in, std::uint64_t node_cap = 50'000'000) {
  MatrixTiling t = t_in;
  t.normalize();
  check_tiling(t);
  const int cells = t.k * t.k;
  TilingSolution cur, best;
  cur.cells.resize(static_cast<std::size_t>(cells));
  int best_count = -1;
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, int idx, int count) -> void {
    if (++nodes > node_cap) throw BudgetExceeded("tiling search exceeded " + std::to_string(node_cap) + " nodes");
    if (count + (cells - idx) <= best_count) return;
    if (idx == cells) {
      best_count = count;
      best = cur;
      return;
    }
    const int i = idx / t.k + 1, j = idx % t.k + 1;
    const auto& left = j > 1 ? cur.cells[static_cast<std::size_t>(idx - 1)] : std::nullopt;
    const auto& up = i > 1 ? cur.cells[static_cast<std::size_t>(idx - t.k)] : std::nullopt;
    for (const Cell& c : t.at(i, j)) {
      if (left && left->first != c.first) continue;
      if (up && up->second != c.second) continue;
      cur.cells[static_cast<std::size_t>(idx)] = c;
      self(self, idx + 1, count + 1);
    }
    cur.cells[static_cast<std::size_t>(idx)] = std::nullopt;
    self(self, idx + 1, count);
  };
  rec(rec, 0, 0);
  return {best, best_count};
}

/// Each pair enters each cell set independently with probability `density`.
inline MatrixTiling gen_matrix_tiling(int k, int n, const Rational& density, std::uint64_t seed) {
  if (k < 1 || n < 1) throw InfeasibleParams("matrix tiling needs k, n >= 1");
  Rng rng(seed);
  MatrixTiling t;
  t.k = k;
  t.n = n;
  t.sets.resize(static_cast<std::size_t>(k * k));
  for (auto& s : t.sets)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (rng.bernoulli(density)) s.emplace_back(x, y);
  return t;
}

// ---------------------------------------------------------------------------
// Planted generators
// ---------------------------------------------------------------------------

struct GeneratedGame {
  ProjectionGame game;
  Assignment plant;
};

namespace detail {

/// Each a gets `degree` distinct random B-neighbours; every B-vertex left uncovered is attached to a
/// random A-vertex. Returned sorted by (a, b).
inline std::vector<Edge> random_bipartite(Rng& rng, int n_a, int n_b, int degree) {
  std::vector<Edge> edges;
  std::vector<char> covered(static_cast<std::size_t>(n_b), 0);
  for (int a = 0; a < n_a; ++a) {
    for (int b : rng.sample(n_b, degree)) {
      edges.push_back({a, b});
      covered[static_cast<std::size_t>(b)] = 1;
    }
  }
  for (int b = 0; b < n_b; ++b)
    if (!covered[static_cast<std::size_t>(b)]) edges.push_back({rng.below(n_a), b});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
  return edges;
}

inline std::vector<Symbol> random_labels(Rng& rng, int count, int k) {
  std::vector<Symbol> out(static_cast<std::size_t>(count));
  for (auto& s : out) s = rng.below(k);
  return out;
}

/// Random total table with t[sa] = sb; balanced (k_a / k_b preimages per symbol) when `uniform`.
inline std::vector<Symbol> planted_table(Rng& rng, int k_a, int k_b, Symbol sa, Symbol sb, bool uniform) {
  std::vector<Symbol> t(static_cast<std::size_t>(k_a));
  if (uniform) {
    for (int i = 0; i < k_a; ++i) t[static_cast<std::size_t>(i)] = i % k_b;
    rng.shuffle(t);
    const auto j = static_cast<std::size_t>(std::find(t.begin(), t.end(), sb) - t.begin());
    std::swap(t[j], t[static_cast<std::size_t>(sa)]);
  } else {
    for (auto& x : t) x = rng.below(k_b);
    t[static_cast<std::size_t>(sa)] = sb;
  }
  return t;
}

}  // namespace detail

/// Random bipartite game with a planted satisfying assignment.
inline GeneratedGame gen_random_satisfiable(int n_a, int n_b, int k_a, int k_b, int degree, std::uint64_t seed,
                                            bool uniform = false) {
  if (n_a < 1 || n_b < 1 || k_a < 1 || k_b < 1) throw InfeasibleParams("counts and alphabet sizes must be positive");
  if (degree < 1 || degree > n_b) throw InfeasibleParams("degree must lie in [1, n_B]");
  if (uniform && k_a % k_b != 0) throw InfeasibleParams("uniform preimages need k_B to divide k_A");
  Rng rng(seed);
  Assignment plant;
  plant.b_labels = detail::random_labels(rng, n_b, k_b);
  plant.a_labels = detail::random_labels(rng, n_a, k_a);
  RawGame r{n_a, n_b, k_a, k_b, detail::random_bipartite(rng, n_a, n_b, degree), {}};
  for (const Edge& e : r.edges) {
    r.projections.push_back(detail::planted_table(rng, k_a, k_b, plant.a_labels[static_cast<std::size_t>(e.a)],
                                                  plant.b_labels[static_cast<std::size_t>(e.b)], uniform));
  }
  return {ProjectionGame::build(r), std::move(plant)};
}

struct GeneratedSmoothGame {
  ProjectionGame game;
  Assignment plant;
  SmoothnessReport smoothness;
};

/// Planted game whose per-vertex tables are redrawn until every pair of A-symbols collides on at
/// most a `mu_target` fraction of the vertex's edges.
inline GeneratedSmoothGame gen_smooth(int n_a, int n_b, int k_a, int k_b, int degree, const Rational& mu_target,
                                      std::uint64_t seed, int max_attempts = 10000) {
  if (n_a < 1 || n_b < 1 || k_a < 1) throw InfeasibleParams("counts and alphabet sizes must be positive");
  if (k_b < 2 || degree < k_b) throw InfeasibleParams("smooth generation needs degree >= k_B >= 2");
  if (degree > n_b) throw InfeasibleParams("degree must not exceed n_B");
  Rng rng(seed);
  Assignment plant;
  plant.b_labels = detail::random_labels(rng, n_b, k_b);
  plant.a_labels = detail::random_labels(rng, n_a, k_a);
  RawGame r{n_a, n_b, k_a, k_b, detail::random_bipartite(rng, n_a, n_b, degree), {}};
  r.projections.resize(r.edges.size());

  std::vector<std::vector<int>> at_a(static_cast<std::size_t>(n_a));
  for (std::size_t e = 0; e < r.edges.size(); ++e) at_a[static_cast<std::size_t>(r.edges[e].a)].push_back(static_cast<int>(e));
  for (int a = 0; a < n_a; ++a) {
    const auto& inc = at_a[static_cast<std::size_t>(a)];
    const auto d = static_cast<std::int64_t>(inc.size());
    const Symbol sa = plant.a_labels[static_cast<std::size_t>(a)];
    // rows[s][i] = projection of symbol s on the i-th incident edge
    std::vector<std::vector<Symbol>> rows(static_cast<std::size_t>(k_a), std::vector<Symbol>(inc.size()));
    bool ok = false;
    for (int attempt = 0; attempt < max_attempts && !ok; ++attempt) {
      for (Symbol s = 0; s < k_a; ++s) {
        for (std::size_t i = 0; i < inc.size(); ++i) {
          rows[static_cast<std::size_t>(s)][i] =
              s == sa ? plant.b_labels[static_cast<std::size_t>(r.edges[static_cast<std::size_t>(inc[i])].b)] : rng.below(k_b);
        }
      }
      ok = true;
      for (Symbol s = 0; s < k_a && ok; ++s)
        for (Symbol u = s + 1; u < k_a && ok; ++u) {
          std::int64_t same = 0;
          for (std::size_t i = 0; i < inc.size(); ++i) same += rows[static_cast<std::size_t>(s)][i] == rows[static_cast<std::size_t>(u)][i] ? 1 : 0;
          ok = Rational(same, d) <= mu_target;
        }
    }
    if (!ok) throw GenerationFailed("could not meet the smoothness target for a" + std::to_string(a) + " within " + std::to_string(max_attempts) + " attempts");
    for (std::size_t i = 0; i < inc.size(); ++i) {
      auto& t = r.projections[static_cast<std::size_t>(inc[i])];
      t.resize(static_cast<std::size_t>(k_a));
      for (Symbol s = 0; s < k_a; ++s) t[static_cast<std::size_t>(s)] = rows[static_cast<std::size_t>(s)][i];
    }
  }
  GeneratedSmoothGame out{ProjectionGame::build(r), std::move(plant), {}};
  out.smoothness = measure_smoothness(out.game);
  return out;
}

/// rows x cols grid graph; cells with even (r + c) are A-vertices, the others B-vertices, each side
/// numbered row-major. Edges per A-cell in the order up, left, right, down.
inline GeneratedGame gen_planar_grid(int rows, int cols, int k_a, int k_b, std::uint64_t seed) {
  if (rows < 1 || cols < 1 || k_a < 1 || k_b < 1) throw InfeasibleParams("grid sides and alphabet sizes must be positive");
  if (rows * cols < 2) throw InfeasibleParams("grid needs at least two cells");
  std::vector<int> index(static_cast<std::size_t>(rows * cols));
  int na = 0, nb = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) index[static_cast<std::size_t>(r * cols + c)] = (r + c) % 2 == 0 ? na++ : nb++;
  Rng rng(seed);
  Assignment plant;
  plant.b_labels = detail::random_labels(rng, nb, k_b);
  plant.a_labels = detail::random_labels(rng, na, k_a);
  RawGame raw{na, nb, k_a, k_b, {}, {}};
  const int dr[4] = {-1, 0, 0, 1}, dc[4] = {0, -1, 1, 0};
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if ((r + c) % 2 != 0) continue;
      for (int k = 0; k < 4; ++k) {
        const int r2 = r + dr[k], c2 = c + dc[k];
        if (r2 < 0 || c2 < 0 || r2 >= rows || c2 >= cols) continue;
        raw.edges.push_back({index[static_cast<std::size_t>(r * cols + c)], index[static_cast<std::size_t>(r2 * cols + c2)]});
      }
    }
  for (const Edge& e : raw.edges) {
    raw.projections.push_back(detail::planted_table(rng, k_a, k_b, plant.a_labels[static_cast<std::size_t>(e.a)],
                                                    plant.b_labels[static_cast<std::size_t>(e.b)], false));
  }
  return {ProjectionGame::build(raw), std::move(plant)};
}

}  // namespace labelcover
