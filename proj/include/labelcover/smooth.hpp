#pragma once

/// Smoothness measurement and the two enumeration algorithms for smooth games.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "labelcover/core.hpp"
#include "labelcover/exact.hpp"
#include "labelcover/random.hpp"

namespace labelcover {

class NoSatisfyingFound : public Error {
 public:
  using Error::Error;
};

struct SmoothnessReport {
  /// Max over a and distinct sigma, sigma' of the fraction of N(a) where the two project equally.
  Rational mu{0};
  int witness_a = -1;
  Symbol witness_s1 = -1;
  Symbol witness_s2 = -1;
  std::vector<Rational> per_a;
};

inline SmoothnessReport measure_smoothness(const ProjectionGame& game) {
  SmoothnessReport r;
  r.per_a.assign(static_cast<std::size_t>(game.a_count()), Rational(0));
  if (game.sigma_a() < 2) return r;
  for (int a = 0; a < game.a_count(); ++a) {
    const auto& inc = game.edges_at_a(a);
    if (inc.empty()) continue;
    const auto d = static_cast<std::int64_t>(inc.size());
    for (Symbol s = 0; s < game.sigma_a(); ++s) {
      for (Symbol t = s + 1; t < game.sigma_a(); ++t) {
        std::int64_t same = 0;
        for (int e : inc) same += game.project(e, s) == game.project(e, t) ? 1 : 0;
        const Rational f(same, d);
        if (f > r.per_a[static_cast<std::size_t>(a)]) r.per_a[static_cast<std::size_t>(a)] = f;
        if (r.witness_a < 0 || f > r.mu) {
          r.mu = f;
          r.witness_a = a;
          r.witness_s1 = s;
          r.witness_s2 = t;
        }
      }
    }
  }
  return r;
}

/// 1 / min degree over non-isolated A-vertices (1 if there are none).
inline Rational inverse_min_degree(const ProjectionGame& game) {
  int d = 0;
  for (int a = 0; a < game.a_count(); ++a) {
    const int da = static_cast<int>(game.edges_at_a(a).size());
    if (da > 0 && (d == 0 || da < d)) d = da;
  }
  return d == 0 ? Rational(1) : Rational(1, d);
}

/// max(measured smoothness, 1 / min degree).
inline Rational default_mu(const ProjectionGame& game) {
  return std::max(measure_smoothness(game).mu, inverse_min_degree(game));
}

namespace detail {

/// Depth-first enumeration of labels for `b_star` in mixed-radix order (first position slowest),
/// tracking for every a the symbols consistent with the B* labels fixed so far. A prefix is
/// abandoned as soon as some a in `must_survive` has no consistent symbol. `leaf` returns true
/// to stop. Throws BudgetExceeded after `node_cap` visited nodes.
class BStarWalker {
 public:
  BStarWalker(const ProjectionGame& g, const PreimageIndex& pre, std::vector<int> b_star, std::vector<char> must_survive,
              std::uint64_t node_cap)
      : g_(g), pre_(pre), b_star_(std::move(b_star)), must_(std::move(must_survive)), cap_(node_cap) {}

  template <typename Leaf>
  void run(Leaf&& leaf) {
    labels_.assign(b_star_.size(), 0);
    consistent_.assign(static_cast<std::size_t>(g_.a_count()), SymbolSet(static_cast<std::size_t>(g_.sigma_a())));
    for (auto& s : consistent_) s.set();
    nodes_ = 0;
    stop_ = false;
    descend(0, leaf);
  }

  const std::vector<Symbol>& labels() const { return labels_; }
  const std::vector<SymbolSet>& consistent() const { return consistent_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  template <typename Leaf>
  void descend(std::size_t depth, Leaf& leaf) {
    if (++nodes_ > cap_) throw BudgetExceeded("B* enumeration exceeded " + std::to_string(cap_) + " nodes");
    if (depth == b_star_.size()) {
      stop_ = leaf();
      return;
    }
    const int b = b_star_[depth];
    const auto& inc = g_.edges_at_b(b);
    std::vector<SymbolSet> saved;
    saved.reserve(inc.size());
    for (int e : inc) saved.push_back(consistent_[static_cast<std::size_t>(g_.edge(e).a)]);
    for (Symbol s = 0; s < g_.sigma_b() && !stop_; ++s) {
      bool alive = true;
      for (std::size_t i = 0; i < inc.size(); ++i) {
        const auto a = static_cast<std::size_t>(g_.edge(inc[i]).a);
        consistent_[a] = saved[i] & pre_.set(inc[i], s);
        if (must_[a] && consistent_[a].none()) alive = false;
      }
      if (alive) {
        labels_[depth] = s;
        descend(depth + 1, leaf);
      }
      for (std::size_t i = 0; i < inc.size(); ++i) consistent_[static_cast<std::size_t>(g_.edge(inc[i]).a)] = saved[i];
    }
    labels_[depth] = 0;
  }

  const ProjectionGame& g_;
  const PreimageIndex& pre_;
  std::vector<int> b_star_;
  std::vector<char> must_;
  std::uint64_t cap_;
  std::vector<Symbol> labels_;
  std::vector<SymbolSet> consistent_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

/// B labels by majority over the edges to pinned A-vertices (smallest symbol on ties, 0 with no votes),
/// except for `keep` vertices which retain their given label.
inline std::vector<Symbol> majority_over_pinned(const ProjectionGame& g, const std::vector<Symbol>& a_labels,
                                                const std::vector<char>& pinned, const std::vector<Symbol>& keep_label) {
  std::vector<Symbol> out(static_cast<std::size_t>(g.b_count()), 0);
  std::vector<int> votes(static_cast<std::size_t>(g.sigma_b()));
  for (int b = 0; b < g.b_count(); ++b) {
    if (keep_label[static_cast<std::size_t>(b)] >= 0) {
      out[static_cast<std::size_t>(b)] = keep_label[static_cast<std::size_t>(b)];
      continue;
    }
    std::fill(votes.begin(), votes.end(), 0);
    for (int e : g.edges_at_b(b)) {
      const auto a = static_cast<std::size_t>(g.edge(e).a);
      if (pinned[a]) ++votes[static_cast<std::size_t>(g.project(e, a_labels[a]))];
    }
    out[static_cast<std::size_t>(b)] = static_cast<Symbol>(std::max_element(votes.begin(), votes.end()) - votes.begin());
  }
  return out;
}

}  // namespace detail

struct SmoothExactOptions {
  Rational c1{4};
  /// Largest admissible sample |B*|.
  int max_sample = 64;
  /// Visited enumeration nodes before giving up.
  std::uint64_t node_cap = kDefaultEnumerationCap;
};

/// Enumerates labels of the given B*, pins every a with exactly one symbol consistent with its B*
/// neighbours, labels the rest of B by majority over pinned edges, gives unpinned a their best
/// response, and returns the first completion satisfying every edge.
inline Assignment smooth_exact_from_sample(const ProjectionGame& game, const std::vector<int>& b_star,
                                           const SmoothExactOptions& opt = {}) {
  if (static_cast<int>(b_star.size()) > opt.max_sample) {
    throw BudgetExceeded("sampled " + std::to_string(b_star.size()) + " B-vertices, cap is " + std::to_string(opt.max_sample));
  }
  const PreimageIndex pre(game);
  // A fully satisfying completion needs every a consistent with its B* neighbours.
  detail::BStarWalker walk(game, pre, b_star, std::vector<char>(static_cast<std::size_t>(game.a_count()), 1), opt.node_cap);
  std::optional<Assignment> found;
  std::vector<char> pinned(static_cast<std::size_t>(game.a_count()));
  std::vector<Symbol> keep(static_cast<std::size_t>(game.b_count()), -1);
  walk.run([&] {
    Assignment phi = Assignment::zeros(game);
    for (int a = 0; a < game.a_count(); ++a) {
      const auto& s = walk.consistent()[static_cast<std::size_t>(a)];
      pinned[static_cast<std::size_t>(a)] = s.count() == 1 ? 1 : 0;
      if (pinned[static_cast<std::size_t>(a)]) phi.a_labels[static_cast<std::size_t>(a)] = static_cast<Symbol>(s.find_first());
    }
    for (std::size_t i = 0; i < b_star.size(); ++i) keep[static_cast<std::size_t>(b_star[i])] = walk.labels()[i];
    phi.b_labels = detail::majority_over_pinned(game, phi.a_labels, pinned, keep);
    for (int b : b_star) keep[static_cast<std::size_t>(b)] = -1;
    const auto response = best_a_response(game, phi.b_labels);
    for (int a = 0; a < game.a_count(); ++a)
      if (!pinned[static_cast<std::size_t>(a)]) phi.a_labels[static_cast<std::size_t>(a)] = response[static_cast<std::size_t>(a)];
    if (value(game, phi) == game.edge_count()) {
      found = std::move(phi);
      return true;
    }
    return false;
  });
  if (!found) throw NoSatisfyingFound("no enumerated labelling of the " + std::to_string(b_star.size()) + " sampled B-vertices completes to a satisfying assignment");
  return *found;
}

/// Samples each b into B* with probability min(1, c1 * mu), in index order.
inline std::vector<int> sample_b_star(const ProjectionGame& game, const Rational& mu, const Rational& c1, std::uint64_t seed) {
  Rng rng(seed);
  const Rational p = std::min(Rational(1), c1 * mu);
  std::vector<int> out;
  for (int b = 0; b < game.b_count(); ++b)
    if (rng.bernoulli(p)) out.push_back(b);
  return out;
}

/// Randomized exact algorithm for smooth satisfiable games.
inline Assignment smooth_exact(const ProjectionGame& game, const Rational& mu, std::uint64_t seed, const SmoothExactOptions& opt = {}) {
  if (mu <= 0) throw Error("smooth_exact: mu must be positive");
  if (opt.c1 < 1) throw Error("smooth_exact: c1 must be at least 1");
  return smooth_exact_from_sample(game, sample_b_star(game, mu, opt.c1, seed), opt);
}

struct SmoothApproxResult {
  SolveReport report;
  /// 1: exhaustive over B; 2: one edge per A-vertex; 3: saturation sample.
  int regime = 0;
  Rational mu{0};
  std::vector<int> b_star;
  /// Regime 3: ceil(n_B mu (1 + n_A/(|E| mu)) / (3/4 - mu - n_A/|E|)) when the denominator is positive.
  std::optional<std::int64_t> b_star_bound;
};

/// Deterministic constant-factor algorithm for smooth satisfiable games.
inline SmoothApproxResult smooth_approx(const ProjectionGame& game, const Rational& mu,
                                        std::uint64_t node_cap = kDefaultEnumerationCap) {
  if (mu <= 0) throw Error("smooth_approx: mu must be positive");
  SmoothApproxResult out;
  const PreimageIndex pre(game);
  const std::int64_t m = game.edge_count();
  const Rational quarter(1, 4);

  out.report = timed(game, [&] {
    SolveReport r;
    r.algorithm = "smooth-approx";
    r.assignment = Assignment::zeros(game);

    if (mu >= quarter) {
      out.regime = 1;
      out.mu = mu;
      const auto count = detail::capped_pow(static_cast<std::uint64_t>(game.sigma_b()), static_cast<std::uint64_t>(game.b_count()), node_cap);
      if (count > node_cap) throw BudgetExceeded("exhaustive B enumeration exceeds " + std::to_string(node_cap));
      std::vector<Symbol> b(static_cast<std::size_t>(game.b_count()), 0);
      const std::vector<int> radix(b.size(), game.sigma_b());
      int best = -1;
      do {
        Assignment phi{best_a_response(game, b), b};
        const int v = value(game, phi);
        if (v > best) {
          best = v;
          r.assignment = std::move(phi);
        }
      } while (best < m && detail::next_digits(b, radix));
      r.guarantee = Rational(m);
      return r;
    }

    if (4 * game.a_count() >= m) {
      out.regime = 2;
      out.mu = mu;
      for (int b = 0; b < game.b_count(); ++b) {
        for (Symbol s = 0; s < game.sigma_b(); ++s) {
          bool all = true;
          for (int e : game.edges_at_b(b)) all = all && pre.count(e, s) > 0;
          if (all) {
            r.assignment.b_labels[static_cast<std::size_t>(b)] = s;
            break;
          }
        }
      }
      std::int64_t touched = 0;
      for (int a = 0; a < game.a_count(); ++a) {
        const auto& inc = game.edges_at_a(a);
        if (inc.empty()) continue;
        ++touched;
        const int e = inc.front();
        const auto& s = pre.set(e, r.assignment.b_labels[static_cast<std::size_t>(game.edge(e).b)]);
        r.assignment.a_labels[static_cast<std::size_t>(a)] = detail::first_of(s);
      }
      r.guarantee = Rational(touched);
      return r;
    }

    out.regime = 3;
    out.mu = std::max(mu, inverse_min_degree(game));
    const Rational& mu3 = out.mu;
    const auto na = static_cast<std::size_t>(game.a_count());
    std::vector<int> hits(na, 0);
    std::vector<char> saturated(na, 0), chosen(static_cast<std::size_t>(game.b_count()), 0);
    std::int64_t saturated_degree = 0;
    auto is_saturated = [&](std::size_t a) {
      const auto d = static_cast<std::int64_t>(game.edges_at_a(static_cast<int>(a)).size());
      return Rational(hits[a]) > mu3 * d;
    };
    while (4 * saturated_degree < m) {
      int pick = -1, pick_gain = -1;
      for (int b = 0; b < game.b_count(); ++b) {
        if (chosen[static_cast<std::size_t>(b)]) continue;
        int gain = 0;
        for (int e : game.edges_at_b(b)) gain += saturated[static_cast<std::size_t>(game.edge(e).a)] ? 0 : 1;
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = b;
        }
      }
      if (pick < 0) break;
      chosen[static_cast<std::size_t>(pick)] = 1;
      out.b_star.push_back(pick);
      for (int e : game.edges_at_b(pick)) {
        const auto a = static_cast<std::size_t>(game.edge(e).a);
        ++hits[a];
        if (!saturated[a] && is_saturated(a)) {
          saturated[a] = 1;
          saturated_degree += static_cast<std::int64_t>(game.edges_at_a(static_cast<int>(a)).size());
        }
      }
    }
    const Rational density(game.a_count(), m);
    const Rational denom = Rational(3, 4) - mu3 - density;
    if (denom > 0) {
      out.b_star_bound = ceil_of(Rational(game.b_count()) * mu3 * (Rational(1) + density / mu3) / denom);
    }

    detail::BStarWalker walk(game, pre, out.b_star, saturated, node_cap);
    std::vector<Symbol> keep(static_cast<std::size_t>(game.b_count()), -1);
    int best = value(game, r.assignment);
    walk.run([&] {
      Assignment phi = Assignment::zeros(game);
      for (std::size_t a = 0; a < na; ++a) {
        if (!saturated[a]) continue;
        const auto& s = walk.consistent()[a];
        if (s.count() != 1) return false;
        phi.a_labels[a] = static_cast<Symbol>(s.find_first());
      }
      phi.b_labels = detail::majority_over_pinned(game, phi.a_labels, saturated, keep);
      const auto response = best_a_response(game, phi.b_labels);
      for (std::size_t a = 0; a < na; ++a)
        if (!saturated[a]) phi.a_labels[a] = response[a];
      const int v = value(game, phi);
      if (v > best) {
        best = v;
        r.assignment = std::move(phi);
      }
      return best == m;
    });
    r.guarantee = Rational(saturated_degree);
    return r;
  });
  return out;
}

}  // namespace labelcover
