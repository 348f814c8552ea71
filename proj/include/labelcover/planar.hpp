#pragma once

/// Layered edge partition and the approximation scheme that solves each thinned game exactly.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "labelcover/core.hpp"
#include "labelcover/exact.hpp"

namespace labelcover {

class PlanarityCheckFailed : public Error {
 public:
  using Error::Error;
};

struct BakerPartition {
  int h = 1;
  /// classes[i]: ascending edge indices whose smaller endpoint level is congruent to i mod h.
  std::vector<std::vector<int>> classes;
  /// decompositions[i] is valid for the game with classes[i] removed.
  std::vector<TreeDecomposition> decompositions;
  /// BFS level per global vertex; each component restarts at level 0 from its smallest vertex.
  std::vector<int> levels;
};

/// Edges kept when class `i` is removed, ascending.
inline std::vector<int> residual_edges(const ProjectionGame& game, const BakerPartition& part, int i) {
  std::vector<char> drop(static_cast<std::size_t>(game.edge_count()), 0);
  for (int e : part.classes[static_cast<std::size_t>(i)]) drop[static_cast<std::size_t>(e)] = 1;
  std::vector<int> keep;
  for (int e = 0; e < game.edge_count(); ++e)
    if (!drop[static_cast<std::size_t>(e)]) keep.push_back(e);
  return keep;
}

/// Largest vertex count for which residual decompositions come from the exact treewidth search.
inline constexpr int kExactDecompositionLimit = 12;

inline TreeDecomposition decompose(const ProjectionGame& game) {
  const auto adj = detail::vertex_adjacency(game);
  if (game.vertex_count() <= kExactDecompositionLimit) return decomposition_from_order(adj, exact_treewidth_order(adj));
  return decomposition_from_order(adj, min_fill_order(adj));
}

inline BakerPartition baker_partition(const ProjectionGame& game, int h) {
  if (h < 1) throw Error("baker_partition: h must be at least 1");
  BakerPartition p;
  p.h = h;
  const int n = game.vertex_count();
  p.levels.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (p.levels[static_cast<std::size_t>(s)] >= 0) continue;
    p.levels[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      const auto& inc = game.is_a(v) ? game.edges_at_a(v) : game.edges_at_b(v - game.a_count());
      for (int e : inc) {
        const Edge& ed = game.edge(e);
        const int w = game.is_a(v) ? game.global_b(ed.b) : ed.a;
        if (p.levels[static_cast<std::size_t>(w)] < 0) {
          p.levels[static_cast<std::size_t>(w)] = p.levels[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  p.classes.assign(static_cast<std::size_t>(h), {});
  for (int e = 0; e < game.edge_count(); ++e) {
    const Edge& ed = game.edge(e);
    const int level = std::min(p.levels[static_cast<std::size_t>(ed.a)], p.levels[static_cast<std::size_t>(game.global_b(ed.b))]);
    p.classes[static_cast<std::size_t>(level % h)].push_back(e);
  }
  for (int i = 0; i < h; ++i) {
    const auto keep = residual_edges(game, p, i);
    p.decompositions.push_back(decompose(restrict_edges(game, keep)));
  }
  return p;
}

/// Euler bound |E| <= 3n - 6 (n >= 3); necessary for planarity.
inline bool passes_planarity_check(const ProjectionGame& game) {
  const std::int64_t n = game.vertex_count();
  return n < 3 || game.edge_count() <= 3 * n - 6;
}

struct PtasOptions {
  bool force_nonplanar = false;
  /// Replaces ceil(1 + 1/eps) when positive.
  int h_override = 0;
  std::uint64_t state_cap = kDefaultDpStateCap;
};

inline int ptas_h(const Rational& eps) { return static_cast<int>(ceil_of(Rational(1) + Rational(1) / eps)); }

/// Solves every thinned game exactly and keeps the best assignment on the full edge set
/// (ties: smaller class index). satisfied >= (1 - 1/h) OPT.
inline SolveReport ptas(const ProjectionGame& game, const Rational& eps, const PtasOptions& opt = {}) {
  if (opt.h_override <= 0 && (eps <= 0 || eps > 1)) throw Error("ptas: epsilon must lie in (0, 1]");
  if (!opt.force_nonplanar && !passes_planarity_check(game)) {
    throw PlanarityCheckFailed("graph has " + std::to_string(game.edge_count()) + " edges on " +
                               std::to_string(game.vertex_count()) + " vertices, above the planar bound 3n-6");
  }
  const int h = opt.h_override > 0 ? opt.h_override : ptas_h(eps);
  return timed(game, [&] {
    const BakerPartition part = baker_partition(game, h);
    SolveReport r;
    r.algorithm = "ptas";
    r.assignment = Assignment::zeros(game);
    int best = -1;
    for (int i = 0; i < h; ++i) {
      const ProjectionGame residual = restrict_edges(game, residual_edges(game, part, i));
      const DpResult dp = tree_dp_solve(residual, part.decompositions[static_cast<std::size_t>(i)], opt.state_cap);
      const int v = value(game, dp.assignment);
      if (v > best) {
        best = v;
        r.assignment = dp.assignment;
      }
      r.guarantee = std::max(r.guarantee, Rational(dp.value));
    }
    r.opt_fraction = Rational(h - 1, h);
    return r;
  });
}

}  // namespace labelcover
