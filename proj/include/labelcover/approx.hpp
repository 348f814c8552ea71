#pragma once

/// Polynomial-time approximation algorithms for satisfiable projection games and their combination.
///
/// Every routine returns a structurally valid assignment for any well-formed game. The `guarantee`
/// field holds the lower bound the corresponding argument certifies when the game is satisfiable.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "labelcover/core.hpp"

namespace labelcover {

class NotInSigmaStar : public Error {
 public:
  using Error::Error;
};

class UniformAssumptionViolated : public Error {
 public:
  using Error::Error;
};

/// Per (a, sigma) data for sigma in the surviving set Sigma*(a).
struct SigmaStarEntry {
  Symbol sigma = 0;
  std::vector<int> n_star;   // B indices, ascending
  std::vector<int> n_star2;  // A indices, ascending
  std::int64_t h_star = 0;   // sum of degrees over n_star2
  std::vector<int> e_star;   // edge indices, ascending
};

struct SigmaStarCache {
  std::vector<std::vector<SigmaStarEntry>> per_a;  // entries ascending by sigma
  std::int64_t h_star_max = 0;
  int h_star_argmax_a = 0;
  Symbol h_star_argmax_sigma = 0;

  const SigmaStarEntry* find(int a, Symbol sigma) const {
    for (const auto& en : per_a[static_cast<std::size_t>(a)])
      if (en.sigma == sigma) return &en;
    return nullptr;
  }
  bool contains(int a, Symbol sigma) const { return find(a, sigma) != nullptr; }
};

namespace detail {

/// Symbols of `a` agreeing with every fixed label in `target` (indexed by B, -1 = free).
inline SymbolSet plausible(const ProjectionGame& g, const PreimageIndex& pre, int a, const std::vector<Symbol>& target) {
  SymbolSet s(static_cast<std::size_t>(g.sigma_a()));
  s.set();
  for (int e : g.edges_at_a(a)) {
    const Symbol t = target[static_cast<std::size_t>(g.edge(e).b)];
    if (t >= 0) s &= pre.set(e, t);
  }
  return s;
}

/// Labels N(a0) by propagating sigma from a0.
inline std::vector<Symbol> propagate(const ProjectionGame& g, int a0, Symbol sigma) {
  std::vector<Symbol> target(static_cast<std::size_t>(g.b_count()), -1);
  for (int e : g.edges_at_a(a0)) target[static_cast<std::size_t>(g.edge(e).b)] = g.project(e, sigma);
  return target;
}

inline Symbol first_of(const SymbolSet& s) {
  const auto i = s.find_first();
  return i == SymbolSet::npos ? 0 : static_cast<Symbol>(i);
}

}  // namespace detail

/// Evaluates the Sigma*(a) membership condition and the good-edge neighbourhoods for every (a, sigma).
inline SigmaStarCache compute_sigma_star(const ProjectionGame& game, const InstanceStats& stats, const PreimageIndex& pre) {
  SigmaStarCache cache;
  const auto na = static_cast<std::size_t>(game.a_count());
  const auto nb = static_cast<std::size_t>(game.b_count());
  const auto kb = static_cast<std::size_t>(game.sigma_b());
  cache.per_a.resize(na);
  bool have_max = false;

  std::vector<SymbolSet> cand(nb, SymbolSet(kb));
  std::vector<char> touched(nb, 0);
  std::vector<int> touched_list;
  std::vector<char> in_star2(na, 0);
  SymbolSet image(kb);

  for (int a = 0; a < game.a_count(); ++a) {
    const auto& two_hop = stats.two_hop[static_cast<std::size_t>(a)];
    for (Symbol sigma = 0; sigma < game.sigma_a(); ++sigma) {
      const auto target = detail::propagate(game, a, sigma);
      bool ok = true;
      touched_list.clear();
      for (int a2 : two_hop) {
        const SymbolSet t = detail::plausible(game, pre, a2, target);
        for (int e : game.edges_at_a(a2)) {
          const auto b = static_cast<std::size_t>(game.edge(e).b);
          image.reset();
          for (auto s = t.find_first(); s != SymbolSet::npos; s = t.find_next(s))
            image.set(static_cast<std::size_t>(game.project(e, static_cast<Symbol>(s))));
          if (!touched[b]) {
            touched[b] = 1;
            touched_list.push_back(static_cast<int>(b));
            cand[b] = image;
          } else {
            cand[b] &= image;
          }
        }
      }
      for (int b : touched_list) {
        ok = ok && cand[static_cast<std::size_t>(b)].any();
        touched[static_cast<std::size_t>(b)] = 0;
      }
      if (!ok) continue;

      SigmaStarEntry en;
      en.sigma = sigma;
      for (int e : game.edges_at_a(a)) {
        const int b = game.edge(e).b;
        const Symbol sb = target[static_cast<std::size_t>(b)];
        bool any_good = false;
        for (int e2 : game.edges_at_b(b)) {
          if (stats.within_good_threshold(pre.count(e2, sb))) {
            any_good = true;
            const int a2 = game.edge(e2).a;
            if (!in_star2[static_cast<std::size_t>(a2)]) {
              in_star2[static_cast<std::size_t>(a2)] = 1;
              en.n_star2.push_back(a2);
            }
          }
        }
        if (any_good) en.n_star.push_back(b);
      }
      std::sort(en.n_star.begin(), en.n_star.end());
      std::sort(en.n_star2.begin(), en.n_star2.end());
      for (int a2 : en.n_star2) en.h_star += stats.degree_a[static_cast<std::size_t>(a2)];
      for (int b : en.n_star) {
        const Symbol sb = target[static_cast<std::size_t>(b)];
        for (int e2 : game.edges_at_b(b)) {
          if (in_star2[static_cast<std::size_t>(game.edge(e2).a)] && stats.within_good_threshold(pre.count(e2, sb)))
            en.e_star.push_back(e2);
        }
      }
      std::sort(en.e_star.begin(), en.e_star.end());
      for (int a2 : en.n_star2) in_star2[static_cast<std::size_t>(a2)] = 0;
      if (!have_max || en.h_star > cache.h_star_max) {
        have_max = true;
        cache.h_star_max = en.h_star;
        cache.h_star_argmax_a = a;
        cache.h_star_argmax_sigma = sigma;
      }
      cache.per_a[static_cast<std::size_t>(a)].push_back(std::move(en));
    }
  }
  return cache;
}

/// Everything the approximation algorithms derive from a game once.
struct Analysis {
  PreimageIndex pre;
  InstanceStats stats;
  SigmaStarCache star;

  explicit Analysis(const ProjectionGame& game)
      : pre(game), stats(compute_stats(game, pre)), star(compute_sigma_star(game, stats, pre)) {}
};

// ---------------------------------------------------------------------------
// Satisfy one neighbour
// ---------------------------------------------------------------------------

/// A-labels 0; every b satisfies its smallest-index incident edge.
inline SolveReport satisfy_one_neighbor(const ProjectionGame& game) {
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "one-neighbor";
    r.assignment = Assignment::zeros(game);
    std::int64_t covered = 0;
    for (int b = 0; b < game.b_count(); ++b) {
      const auto& inc = game.edges_at_b(b);
      if (inc.empty()) continue;
      r.assignment.b_labels[static_cast<std::size_t>(b)] = game.project(inc.front(), 0);
      ++covered;
    }
    r.guarantee = Rational(covered);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Greedy
// ---------------------------------------------------------------------------

/// Each b takes its preimage-heaviest symbol, each a its best response.
inline SolveReport greedy_assignment(const ProjectionGame& game, const InstanceStats& stats) {
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "greedy";
    r.assignment.b_labels = stats.sigma_b_max;
    r.assignment.a_labels = best_a_response(game, r.assignment.b_labels);
    // ceil(|E| * p_bar_max / |Sigma_A|)
    r.guarantee = Rational(ceil_of(Rational(stats.p_max_sum, game.sigma_a())));
    return r;
  });
}

inline SolveReport greedy_assignment(const ProjectionGame& game) { return greedy_assignment(game, compute_stats(game)); }

// ---------------------------------------------------------------------------
// Know your neighbours
// ---------------------------------------------------------------------------

/// Fixes sigma at a0, propagates to N(a0), and gives every two-hop vertex its smallest
/// consistent symbol; all edges touching N(a0) end up satisfied.
inline SolveReport know_your_neighbors(const ProjectionGame& game, int a0, Symbol sigma, const Analysis& an) {
  if (a0 < 0 || a0 >= game.a_count()) throw Error("know_your_neighbors: vertex a" + std::to_string(a0) + " out of range");
  if (!an.star.contains(a0, sigma)) {
    throw NotInSigmaStar("symbol " + std::to_string(sigma) + " is not a surviving choice for a" + std::to_string(a0));
  }
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "kyn";
    r.assignment = Assignment::zeros(game);
    const auto target = detail::propagate(game, a0, sigma);
    for (int b = 0; b < game.b_count(); ++b)
      if (target[static_cast<std::size_t>(b)] >= 0) r.assignment.b_labels[static_cast<std::size_t>(b)] = target[static_cast<std::size_t>(b)];
    for (int a : an.stats.two_hop[static_cast<std::size_t>(a0)])
      r.assignment.a_labels[static_cast<std::size_t>(a)] = detail::first_of(detail::plausible(game, an.pre, a, target));
    r.assignment.a_labels[static_cast<std::size_t>(a0)] = sigma;
    r.guarantee = Rational(an.stats.e_n[static_cast<std::size_t>(a0)]);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Know your neighbours' neighbours
// ---------------------------------------------------------------------------

namespace detail {

/// Steps 3-4 shared by both variants: B labels maximize preimage mass inside the S-sets of the
/// counted A-vertices, then every a takes the best symbol of its S-set.
inline Assignment kynn_complete(const ProjectionGame& g, const PreimageIndex& pre, const std::vector<SymbolSet>& s_sets,
                                const std::vector<char>& counted) {
  Assignment phi = Assignment::zeros(g);
  std::vector<std::int64_t> mass(static_cast<std::size_t>(g.sigma_b()));
  for (int b = 0; b < g.b_count(); ++b) {
    std::fill(mass.begin(), mass.end(), 0);
    for (int e : g.edges_at_b(b)) {
      const auto a = static_cast<std::size_t>(g.edge(e).a);
      if (!counted[a]) continue;
      for (Symbol sb = 0; sb < g.sigma_b(); ++sb)
        mass[static_cast<std::size_t>(sb)] += static_cast<std::int64_t>((pre.set(e, sb) & s_sets[a]).count());
    }
    phi.b_labels[static_cast<std::size_t>(b)] = static_cast<Symbol>(std::max_element(mass.begin(), mass.end()) - mass.begin());
  }
  for (int a = 0; a < g.a_count(); ++a) {
    const auto& s = s_sets[static_cast<std::size_t>(a)];
    int best = -1;
    for (auto x = s.find_first(); x != SymbolSet::npos; x = s.find_next(x)) {
      int hits = 0;
      for (int e : g.edges_at_a(a))
        hits += g.project(e, static_cast<Symbol>(x)) == phi.b_labels[static_cast<std::size_t>(g.edge(e).b)] ? 1 : 0;
      if (hits > best) {
        best = hits;
        phi.a_labels[static_cast<std::size_t>(a)] = static_cast<Symbol>(x);
      }
    }
  }
  return phi;
}

inline std::vector<SymbolSet> s_sets_for(const ProjectionGame& g, const PreimageIndex& pre, int a0, Symbol sigma) {
  const auto target = propagate(g, a0, sigma);
  std::vector<SymbolSet> s;
  s.reserve(static_cast<std::size_t>(g.a_count()));
  for (int a = 0; a < g.a_count(); ++a) s.push_back(plausible(g, pre, a, target));
  return s;
}

}  // namespace detail

/// Tries every sigma in Sigma*(a0) and keeps the assignment satisfying the most edges.
/// Guarantee: max over tried sigma of h*(a0, sigma) / (2 p_bar_max).
inline SolveReport know_neighbors_neighbors(const ProjectionGame& game, int a0, const Analysis& an) {
  if (a0 < 0 || a0 >= game.a_count()) throw Error("know_neighbors_neighbors: vertex a" + std::to_string(a0) + " out of range");
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "kynn";
    r.assignment = Assignment::zeros(game);
    int best = -1;
    std::vector<char> counted(static_cast<std::size_t>(game.a_count()), 0);
    for (const auto& en : an.star.per_a[static_cast<std::size_t>(a0)]) {
      const auto s = detail::s_sets_for(game, an.pre, a0, en.sigma);
      for (int a : en.n_star2) counted[static_cast<std::size_t>(a)] = 1;
      Assignment phi = detail::kynn_complete(game, an.pre, s, counted);
      for (int a : en.n_star2) counted[static_cast<std::size_t>(a)] = 0;
      const int v = value(game, phi);
      if (v > best) {
        best = v;
        r.assignment = std::move(phi);
      }
      if (an.stats.p_max_sum > 0) {
        const Rational bound(en.h_star * an.stats.edge_count, 2 * an.stats.p_max_sum);
        r.guarantee = std::max(r.guarantee, bound);
      }
    }
    return r;
  });
}

/// Variant for games with a common preimage size p: tries every sigma at a0, skipping those that
/// leave some S_a empty. Guarantee: h(a0) / p.
inline SolveReport know_neighbors_neighbors_uniform(const ProjectionGame& game, int a0, const Analysis& an) {
  if (a0 < 0 || a0 >= game.a_count()) throw Error("know_neighbors_neighbors: vertex a" + std::to_string(a0) + " out of range");
  if (!an.stats.uniform_p) throw UniformAssumptionViolated("preimage sizes differ across edges or symbols");
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "kynn-uniform";
    r.assignment = Assignment::zeros(game);
    std::vector<char> counted(static_cast<std::size_t>(game.a_count()), 0);
    for (int a : an.stats.two_hop[static_cast<std::size_t>(a0)]) counted[static_cast<std::size_t>(a)] = 1;
    int best = -1;
    for (Symbol sigma = 0; sigma < game.sigma_a(); ++sigma) {
      const auto s = detail::s_sets_for(game, an.pre, a0, sigma);
      if (std::any_of(s.begin(), s.end(), [](const SymbolSet& x) { return x.none(); })) continue;
      Assignment phi = detail::kynn_complete(game, an.pre, s, counted);
      const int v = value(game, phi);
      if (v > best) {
        best = v;
        r.assignment = std::move(phi);
      }
    }
    r.guarantee = Rational(an.stats.h[static_cast<std::size_t>(a0)], *an.stats.uniform_p);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Divide and conquer
// ---------------------------------------------------------------------------

namespace detail {

/// Labels one collected part: b in P gets the projection of sigma, a' in P a consistent symbol.
inline void label_part(const ProjectionGame& g, const PreimageIndex& pre, int a, Symbol sigma,
                       const std::vector<int>& part_a, const std::vector<int>& part_b, Assignment& phi) {
  const auto target = propagate(g, a, sigma);
  for (int b : part_b) phi.b_labels[static_cast<std::size_t>(b)] = target[static_cast<std::size_t>(b)] >= 0 ? target[static_cast<std::size_t>(b)] : 0;
  for (int a2 : part_a) phi.a_labels[static_cast<std::size_t>(a2)] = a2 == a ? sigma : first_of(plausible(g, pre, a2, target));
}

inline std::int64_t edges_outside(const ProjectionGame& g, std::span<const int> edges, const std::vector<char>& used_a,
                                  const std::vector<char>& used_b) {
  std::int64_t c = 0;
  for (int e : edges) {
    const Edge& ed = g.edge(e);
    c += (!used_a[static_cast<std::size_t>(ed.a)] && !used_b[static_cast<std::size_t>(ed.b)]) ? 1 : 0;
  }
  return c;
}

}  // namespace detail

/// Collects disjoint parts N*(a, sigma) + N*2(a, sigma) while some surviving (a, sigma) still has
/// at least |E|^2 / (16 n_A n_B) good edges among uncollected vertices, then satisfies each part.
/// Guarantee: |E|^3 / (64 n_A n_B (h*_max + E_N^max)).
inline SolveReport divide_and_conquer(const ProjectionGame& game, const Analysis& an) {
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "dnc";
    r.assignment = Assignment::zeros(game);
    const std::int64_t m = game.edge_count();
    const std::int64_t scale = 16LL * game.a_count() * game.b_count();
    std::vector<char> used_a(static_cast<std::size_t>(game.a_count()), 0), used_b(static_cast<std::size_t>(game.b_count()), 0);
    // Counts only shrink as parts are collected, so one ascending pass finds every pick.
    for (int a = 0; a < game.a_count() && m > 0; ++a) {
      for (const auto& en : an.star.per_a[static_cast<std::size_t>(a)]) {
        if (scale * detail::edges_outside(game, en.e_star, used_a, used_b) < m * m) continue;
        std::vector<int> part_a, part_b;
        for (int a2 : en.n_star2)
          if (!used_a[static_cast<std::size_t>(a2)]) part_a.push_back(a2);
        for (int b : en.n_star)
          if (!used_b[static_cast<std::size_t>(b)]) part_b.push_back(b);
        detail::label_part(game, an.pre, a, en.sigma, part_a, part_b, r.assignment);
        for (int a2 : part_a) used_a[static_cast<std::size_t>(a2)] = 1;
        for (int b : part_b) used_b[static_cast<std::size_t>(b)] = 1;
      }
    }
    const std::int64_t denom = 64LL * game.a_count() * game.b_count() * (an.star.h_star_max + an.stats.e_n_max);
    if (m > 0 && denom > 0) r.guarantee = Rational(m * m * m, denom);
    return r;
  });
}

/// Same scheme over N(a) + N2(a) with threshold |E|^2 / (4 n_A n_B); sigma for a part is the
/// smallest symbol leaving every A-vertex of the part a consistent choice.
/// Guarantee: |E|^3 / (8 n_A n_B h_max).
inline SolveReport divide_and_conquer_uniform(const ProjectionGame& game, const Analysis& an) {
  return timed(game, [&] {
    SolveReport r;
    r.algorithm = "dnc-uniform";
    r.assignment = Assignment::zeros(game);
    const std::int64_t m = game.edge_count();
    const std::int64_t scale = 4LL * game.a_count() * game.b_count();
    std::vector<char> used_a(static_cast<std::size_t>(game.a_count()), 0), used_b(static_cast<std::size_t>(game.b_count()), 0);
    std::vector<char> in_a(static_cast<std::size_t>(game.a_count()), 0), in_b(static_cast<std::size_t>(game.b_count()), 0);
    for (int a = 0; a < game.a_count() && m > 0; ++a) {
      std::vector<int> part_a, part_b;
      for (int a2 : an.stats.two_hop[static_cast<std::size_t>(a)])
        if (!used_a[static_cast<std::size_t>(a2)]) part_a.push_back(a2);
      for (int b : an.stats.neighbors_a[static_cast<std::size_t>(a)])
        if (!used_b[static_cast<std::size_t>(b)]) part_b.push_back(b);
      for (int b : part_b) in_b[static_cast<std::size_t>(b)] = 1;
      std::int64_t inside = 0;
      for (int a2 : part_a)
        for (int e : game.edges_at_a(a2)) inside += in_b[static_cast<std::size_t>(game.edge(e).b)] ? 1 : 0;
      for (int b : part_b) in_b[static_cast<std::size_t>(b)] = 0;
      if (scale * inside < m * m) continue;

      Symbol chosen = 0;
      for (Symbol sigma = 0; sigma < game.sigma_a(); ++sigma) {
        const auto target = detail::propagate(game, a, sigma);
        bool ok = true;
        for (int a2 : part_a) ok = ok && detail::plausible(game, an.pre, a2, target).any();
        if (ok) {
          chosen = sigma;
          break;
        }
      }
      detail::label_part(game, an.pre, a, chosen, part_a, part_b, r.assignment);
      for (int a2 : part_a) used_a[static_cast<std::size_t>(a2)] = 1;
      for (int b : part_b) used_b[static_cast<std::size_t>(b)] = 1;
    }
    const std::int64_t denom = 8LL * game.a_count() * game.b_count() * an.stats.h_max;
    if (m > 0 && denom > 0) r.guarantee = Rational(m * m * m, denom);
    return r;
  });
}

// ---------------------------------------------------------------------------
// Best of five
// ---------------------------------------------------------------------------

/// Runs the five algorithms and keeps the best (first on ties, in run order).
///
/// Composite guarantee |E| / (4 (n_A |Sigma_A|)^{1/4}). With r1 = |E|/n_B, r2 = |Sigma_A|/p_bar_max,
/// r3 = |E|/E_N^max, r4 = 2 |E| p_bar_max / h*_max, r5 = 64 n_A n_B (h*_max + E_N^max) / |E|^2 the
/// achieved ratio is at most min(r1..r5). If h*_max >= E_N^max then r5 <= 128 n_A n_B h*_max / |E|^2
/// and r1 r2 r4 r5 <= 256 n_A |Sigma_A|, so min <= 4 (n_A |Sigma_A|)^{1/4}. Otherwise
/// r5 <= 128 n_A n_B E_N^max / |E|^2 and r1 r2 r3 r5 <= 128 n_A |Sigma_A| / p_bar_max, which is at most
/// 128 n_A |Sigma_A| because p_bar_max >= 1 on satisfiable games; 128^{1/4} < 4.
inline SolveReport best_of(const ProjectionGame& game, const Analysis& an) {
  return timed(game, [&] {
    std::vector<SolveReport> runs;
    runs.push_back(satisfy_one_neighbor(game));
    runs.push_back(greedy_assignment(game, an.stats));
    const int a_kyn = an.stats.e_n_argmax;
    const auto& star_kyn = an.star.per_a[static_cast<std::size_t>(a_kyn)];
    if (!star_kyn.empty()) {
      runs.push_back(know_your_neighbors(game, a_kyn, star_kyn.front().sigma, an));
    } else {
      SolveReport empty;
      empty.algorithm = "kyn";
      empty.assignment = Assignment::zeros(game);
      empty.satisfied = value(game, empty.assignment);
      runs.push_back(std::move(empty));
    }
    runs.push_back(know_neighbors_neighbors(game, an.star.h_star_argmax_a, an));
    runs.push_back(divide_and_conquer(game, an));

    SolveReport r;
    r.algorithm = "best";
    std::size_t win = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].satisfied > runs[win].satisfied) win = i;
      r.guarantee = std::max(r.guarantee, runs[i].guarantee);
    }
    r.assignment = runs[win].assignment;
    r.winner = runs[win].algorithm;
    r.breakdown = std::move(runs);
    return r;
  });
}

inline SolveReport best_of(const ProjectionGame& game) { return best_of(game, Analysis(game)); }

/// The composite bound |E| / (4 (n_A |Sigma_A|)^{1/4}) holds iff (4 * satisfied)^4 * n_A * |Sigma_A| >= |E|^4.
inline bool meets_composite_bound(const ProjectionGame& game, int satisfied) {
  const __int128 s = static_cast<__int128>(4) * satisfied;
  const __int128 m = game.edge_count();
  return s * s * s * s * game.a_count() * game.sigma_a() >= m * m * m * m;
}

}  // namespace labelcover
