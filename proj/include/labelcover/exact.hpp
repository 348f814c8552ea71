#pragma once

/// Exact solvers: exhaustive search and dynamic programming over a tree decomposition.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "labelcover/core.hpp"

namespace labelcover {

inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;
inline constexpr std::uint64_t kDefaultDpStateCap = 1ULL << 22;

namespace detail {

/// a^b, saturating at max()+... anything above `limit` is reported as limit + 1.
inline std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

/// Lexicographic odometer over digits with per-position radices; false once it wraps around.
inline bool next_digits(std::vector<Symbol>& digits, std::span<const int> radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

struct ComponentOptimum {
  std::vector<Symbol> a_labels;
  int value = -1;
};

inline ComponentOptimum optimum_over_a(const ProjectionGame& g) {
  ComponentOptimum best;
  std::vector<Symbol> digits(static_cast<std::size_t>(g.a_count()), 0);
  const std::vector<int> radix(digits.size(), g.sigma_a());
  std::vector<int> votes(static_cast<std::size_t>(g.sigma_b()));
  do {
    int v = 0;
    for (int b = 0; b < g.b_count(); ++b) {
      std::fill(votes.begin(), votes.end(), 0);
      for (int e : g.edges_at_b(b)) ++votes[static_cast<std::size_t>(g.project(e, digits[static_cast<std::size_t>(g.edge(e).a)]))];
      v += *std::max_element(votes.begin(), votes.end());
    }
    if (v > best.value) {
      best.value = v;
      best.a_labels = digits;
    }
  } while (next_digits(digits, radix));
  return best;
}

inline ComponentOptimum optimum_over_b(const ProjectionGame& g) {
  ComponentOptimum best;
  std::vector<Symbol> digits(static_cast<std::size_t>(g.b_count()), 0);
  const std::vector<int> radix(digits.size(), g.sigma_b());
  std::vector<Symbol> candidate(static_cast<std::size_t>(g.a_count()), 0);
  do {
    int v = 0;
    for (int a = 0; a < g.a_count(); ++a) {
      int top = -1;
      for (Symbol s = 0; s < g.sigma_a(); ++s) {
        int hits = 0;
        for (int e : g.edges_at_a(a)) hits += g.project(e, s) == digits[static_cast<std::size_t>(g.edge(e).b)] ? 1 : 0;
        if (hits > top) {
          top = hits;
          candidate[static_cast<std::size_t>(a)] = s;
        }
      }
      v += top;
    }
    // Among maximizers keep the lexicographically smallest A-labelling.
    if (v > best.value || (v == best.value && candidate < best.a_labels)) {
      best.value = v;
      best.a_labels = candidate;
    }
  } while (next_digits(digits, radix));
  return best;
}

inline std::string vertex_name(const ProjectionGame& g, int v) {
  return g.is_a(v) ? "a" + std::to_string(v) : "b" + std::to_string(v - g.a_count());
}

/// Undirected adjacency over the global vertex numbering.
inline std::vector<std::vector<int>> vertex_adjacency(const ProjectionGame& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.a)].push_back(g.global_b(e.b));
    adj[static_cast<std::size_t>(g.global_b(e.b))].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

}  // namespace detail

struct ExactResult {
  Assignment assignment;
  int value = 0;
};

/// Exhaustive optimum. Each connected component is enumerated over whichever side has the smaller
/// label space (the other side is a per-vertex best response). Among maximizers, returns the
/// lexicographically smallest (a_labels, then b_labels).
inline ExactResult brute_force_opt(const ProjectionGame& game, std::uint64_t budget = kDefaultEnumerationCap) {
  const ComponentSplit split = connected_components(game);
  std::uint64_t total = 0;
  for (const auto& c : split.components) {
    const auto sa = detail::capped_pow(static_cast<std::uint64_t>(game.sigma_a()), static_cast<std::uint64_t>(c.game.a_count()), budget);
    const auto sb = detail::capped_pow(static_cast<std::uint64_t>(game.sigma_b()), static_cast<std::uint64_t>(c.game.b_count()), budget);
    total += std::min(sa, sb);
    if (total > budget) {
      throw BudgetExceeded("brute force needs more than " + std::to_string(budget) + " enumerated assignments");
    }
  }
  std::vector<Assignment> parts;
  for (const auto& c : split.components) {
    const auto sa = detail::capped_pow(static_cast<std::uint64_t>(game.sigma_a()), static_cast<std::uint64_t>(c.game.a_count()), budget);
    const auto sb = detail::capped_pow(static_cast<std::uint64_t>(game.sigma_b()), static_cast<std::uint64_t>(c.game.b_count()), budget);
    auto opt = sa <= sb ? detail::optimum_over_a(c.game) : detail::optimum_over_b(c.game);
    Assignment part{opt.a_labels, {}};
    part.b_labels = best_b_response(c.game, part.a_labels);
    parts.push_back(std::move(part));
  }
  ExactResult r;
  r.assignment = lift(game, split, parts);
  r.value = value(game, r.assignment);
  return r;
}

// ---------------------------------------------------------------------------
// Tree decompositions
// ---------------------------------------------------------------------------

/// Bags over the global vertex numbering (A: 0..n_A-1, B: n_A..n_A+n_B-1); tree rooted at bag 0.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree;

  int width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
  }
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct Violation {
  int condition = 0;  // 0: not a tree / malformed, 1: vertex cover, 2: edge cover, 3: connectivity
  std::string message;
};

class InvalidDecomposition : public Error {
 public:
  InvalidDecomposition(const std::string& what, std::vector<Violation> violations)
      : Error(what), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

namespace detail {

inline std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(td.bags.size());
  for (auto [i, j] : td.tree) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  return adj;
}

}  // namespace detail

/// Checks the three tree-decomposition conditions against an arbitrary graph on `n` vertices.
inline std::vector<Violation> validate_decomposition(int n, const std::vector<std::pair<int, int>>& graph_edges,
                                                     const TreeDecomposition& td,
                                                     const std::function<std::string(int)>& name) {
  std::vector<Violation> out;
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (n > 0) out.push_back({0, "decomposition has no bags"});
    return out;
  }
  for (int i = 0; i < nb; ++i) {
    auto bag = td.bags[static_cast<std::size_t>(i)];
    for (int v : bag) {
      if (v < 0 || v >= n) out.push_back({0, "bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v)});
    }
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      out.push_back({0, "bag " + std::to_string(i) + " repeats a vertex"});
    }
  }
  bool tree_ok = static_cast<int>(td.tree.size()) == nb - 1;
  for (auto [i, j] : td.tree) {
    if (i < 0 || j < 0 || i >= nb || j >= nb || i == j) tree_ok = false;
  }
  if (tree_ok) {
    auto adj = detail::tree_adjacency(td);
    std::vector<char> seen(static_cast<std::size_t>(nb), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    tree_ok = count == nb;
  }
  if (!tree_ok) {
    out.push_back({0, "tree edges do not form a spanning tree over the " + std::to_string(nb) + " bags"});
    return out;
  }
  if (!out.empty()) return out;

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int i = 0; i < nb; ++i) {
    for (int v : td.bags[static_cast<std::size_t>(i)]) holders[static_cast<std::size_t>(v)].push_back(i);
  }
  for (int v = 0; v < n; ++v) {
    if (holders[static_cast<std::size_t>(v)].empty()) out.push_back({1, "vertex " + name(v) + " is in no bag"});
  }
  for (auto [u, v] : graph_edges) {
    const auto& hu = holders[static_cast<std::size_t>(u)];
    const auto& hv = holders[static_cast<std::size_t>(v)];
    bool found = false;
    for (int i : hu) found = found || std::find(hv.begin(), hv.end(), i) != hv.end();
    if (!found) out.push_back({2, "no bag contains edge (" + name(u) + "," + name(v) + ")"});
  }
  auto adj = detail::tree_adjacency(td);
  std::vector<char> in(static_cast<std::size_t>(nb), 0), seen(static_cast<std::size_t>(nb), 0);
  for (int v = 0; v < n; ++v) {
    const auto& h = holders[static_cast<std::size_t>(v)];
    if (h.size() < 2) continue;
    for (int i : h) in[static_cast<std::size_t>(i)] = 1;
    std::vector<int> stack{h.front()};
    seen[static_cast<std::size_t>(h.front())] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != h.size()) out.push_back({3, "bags holding " + name(v) + " are not connected in the tree"});
    for (int i : h) in[static_cast<std::size_t>(i)] = seen[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

inline std::vector<Violation> validate_decomposition(const ProjectionGame& game, const TreeDecomposition& td) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(game.edge_count()));
  for (const Edge& e : game.edges()) edges.emplace_back(e.a, game.global_b(e.b));
  return validate_decomposition(game.vertex_count(), edges, td, [&](int v) { return detail::vertex_name(game, v); });
}

/// Decomposition induced by an elimination order: each vertex's bag is itself plus its
/// later-eliminated neighbours in the filled graph. Bag 0 is the bag of the last vertex.
inline TreeDecomposition decomposition_from_order(const std::vector<std::vector<int>>& adj, const std::vector<int>& order) {
  const std::size_t n = adj.size();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<int> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (int w : adj[v]) m[v][static_cast<std::size_t>(w)] = 1;

  std::vector<std::vector<int>> bag_of(n);
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    std::vector<int> later;
    for (std::size_t w = 0; w < n; ++w)
      if (m[v][w] && rank[w] > static_cast<int>(i)) later.push_back(static_cast<int>(w));
    for (std::size_t x = 0; x < later.size(); ++x)
      for (std::size_t y = x + 1; y < later.size(); ++y) {
        m[static_cast<std::size_t>(later[x])][static_cast<std::size_t>(later[y])] = 1;
        m[static_cast<std::size_t>(later[y])][static_cast<std::size_t>(later[x])] = 1;
      }
    if (!later.empty()) {
      int p = later.front();
      for (int w : later)
        if (rank[static_cast<std::size_t>(w)] < rank[static_cast<std::size_t>(p)]) p = w;
      parent[v] = p;
    }
    later.push_back(static_cast<int>(v));
    std::sort(later.begin(), later.end());
    bag_of[v] = std::move(later);
  }
  const int root = order.back();
  for (std::size_t v = 0; v < n; ++v)
    if (parent[v] < 0 && static_cast<int>(v) != root) parent[v] = root;

  // Renumber bags in BFS order from the root so that bag 0 is the root.
  std::vector<std::vector<int>> children(n);
  for (std::size_t v = 0; v < n; ++v)
    if (parent[v] >= 0) children[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
  std::vector<int> queue{root};
  std::vector<int> index(n, -1);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int v = queue[q];
    index[static_cast<std::size_t>(v)] = static_cast<int>(q);
    for (int c : children[static_cast<std::size_t>(v)]) queue.push_back(c);
  }
  for (int v : queue) {
    td.bags.push_back(bag_of[static_cast<std::size_t>(v)]);
    if (parent[static_cast<std::size_t>(v)] >= 0)
      td.tree.emplace_back(index[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])], index[static_cast<std::size_t>(v)]);
  }
  return td;
}

/// Min-fill elimination ordering, smallest index on ties.
inline std::vector<int> min_fill_order(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (int w : adj[v]) m[v][static_cast<std::size_t>(w)] = 1;
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> nb;
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = std::numeric_limits<long>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      nb.clear();
      for (std::size_t w = 0; w < n; ++w)
        if (!gone[w] && m[v][w]) nb.push_back(static_cast<int>(w));
      long fill = 0;
      for (std::size_t x = 0; x < nb.size() && fill < best_fill; ++x)
        for (std::size_t y = x + 1; y < nb.size(); ++y)
          if (!m[static_cast<std::size_t>(nb[x])][static_cast<std::size_t>(nb[y])]) ++fill;
      if (fill < best_fill) {
        best_fill = fill;
        best = static_cast<int>(v);
      }
    }
    const auto v = static_cast<std::size_t>(best);
    nb.clear();
    for (std::size_t w = 0; w < n; ++w)
      if (!gone[w] && m[v][w]) nb.push_back(static_cast<int>(w));
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        m[static_cast<std::size_t>(nb[x])][static_cast<std::size_t>(nb[y])] = 1;
        m[static_cast<std::size_t>(nb[y])][static_cast<std::size_t>(nb[x])] = 1;
      }
    gone[v] = 1;
    order.push_back(best);
  }
  return order;
}

/// Treewidth-optimal elimination ordering by dynamic programming over vertex subsets.
/// Exponential in the vertex count; meant for graphs of a dozen vertices.
inline std::vector<int> exact_treewidth_order(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n > 20) throw BudgetExceeded("exact treewidth search limited to 20 vertices");
  const std::uint32_t full = n == 0 ? 0u : ((1u << n) - 1u);
  std::vector<std::uint32_t> nbmask(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : adj[static_cast<std::size_t>(v)]) nbmask[static_cast<std::size_t>(v)] |= 1u << w;

  // |Q(S, v)|: vertices outside S+v reachable from v through S.
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t reached = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbmask[static_cast<std::size_t>(__builtin_ctz(f))];
      next &= ~reached;
      reached |= next;
      out |= next & ~s;
      frontier = next & s;
    }
    return __builtin_popcount(out);
  };

  std::vector<int> tw(static_cast<std::size_t>(full) + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    for (int v = 0; v < n; ++v) {
      if (!(s & (1u << v))) continue;
      const std::uint32_t rest = s & ~(1u << v);
      const int cand = std::max(tw[rest], q_size(rest, v));
      if (cand < tw[s]) {
        tw[s] = cand;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    if (s == full) break;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[static_cast<std::size_t>(i)] = last[s];
    s &= ~(1u << last[s]);
  }
  return order;
}

inline TreeDecomposition heuristic_decomposition(const ProjectionGame& game) {
  const auto adj = detail::vertex_adjacency(game);
  return decomposition_from_order(adj, min_fill_order(adj));
}

// ---------------------------------------------------------------------------
// Tree DP
// ---------------------------------------------------------------------------

struct DpResult {
  Assignment assignment;
  int value = 0;
  /// Total number of (bag, bag-assignment) states evaluated.
  std::uint64_t states = 0;
};

/// Maximum satisfied edges by dynamic programming over a valid tree decomposition.
/// Bag assignments are typed: A-members range over Sigma_A, B-members over Sigma_B.
inline DpResult tree_dp_solve(const ProjectionGame& game, const TreeDecomposition& td,
                              std::uint64_t state_cap = kDefaultDpStateCap) {
  if (auto v = validate_decomposition(game, td); !v.empty()) {
    // Build the message before the vector is moved into the exception.
    std::string what = "invalid tree decomposition: " + v.front().message;
    throw InvalidDecomposition(what, std::move(v));
  }
  DpResult result;
  result.assignment = Assignment::zeros(game);
  const std::size_t nbags = td.bags.size();
  if (nbags == 0) return result;

  const auto n = static_cast<std::size_t>(game.vertex_count());
  auto radix_of = [&](int v) { return game.is_a(v) ? game.sigma_a() : game.sigma_b(); };

  // Rooted structure.
  auto tadj = detail::tree_adjacency(td);
  std::vector<int> parent(nbags, -1), order;
  std::vector<std::vector<int>> children(nbags);
  {
    std::vector<char> seen(nbags, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : tadj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          parent[static_cast<std::size_t>(y)] = x;
          children[static_cast<std::size_t>(x)].push_back(y);
          stack.push_back(y);
        }
      }
    }
  }

  struct BagInfo {
    std::vector<int> members;
    std::vector<int> radix;
    std::vector<std::uint64_t> stride;  // position 0 is the fastest digit
    std::uint64_t states = 1;
    std::vector<std::tuple<int, int, int>> local_edges;  // (pos_a, pos_b, edge)
  };
  std::vector<BagInfo> info(nbags);
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < nbags; ++i) {
    auto& bi = info[i];
    bi.members = td.bags[i];
    for (std::size_t p = 0; p < bi.members.size(); ++p) {
      bi.radix.push_back(radix_of(bi.members[p]));
      bi.stride.push_back(bi.states);
      if (bi.states > state_cap / static_cast<std::uint64_t>(bi.radix.back())) {
        throw BudgetExceeded("bag " + std::to_string(i) + " exceeds the DP state cap of " + std::to_string(state_cap));
      }
      bi.states *= static_cast<std::uint64_t>(bi.radix.back());
      pos[static_cast<std::size_t>(bi.members[p])] = static_cast<int>(p);
    }
    for (std::size_t p = 0; p < bi.members.size(); ++p) {
      const int v = bi.members[p];
      if (!game.is_a(v)) continue;
      for (int e : game.edges_at_a(v)) {
        const int pb = pos[static_cast<std::size_t>(game.global_b(game.edge(e).b))];
        if (pb >= 0) bi.local_edges.emplace_back(static_cast<int>(p), pb, e);
      }
    }
    for (int v : bi.members) pos[static_cast<std::size_t>(v)] = -1;
    result.states += bi.states;
  }

  auto decode = [](const BagInfo& bi, std::uint64_t s, std::vector<Symbol>& digits) {
    digits.resize(bi.members.size());
    for (std::size_t p = 0; p < bi.members.size(); ++p) {
      digits[p] = static_cast<Symbol>(s % static_cast<std::uint64_t>(bi.radix[p]));
      s /= static_cast<std::uint64_t>(bi.radix[p]);
    }
  };
  auto count_local = [&](const std::vector<std::tuple<int, int, int>>& edges, const std::vector<Symbol>& digits) {
    int c = 0;
    for (auto [pa, pb, e] : edges) c += game.project(e, digits[static_cast<std::size_t>(pa)]) == digits[static_cast<std::size_t>(pb)] ? 1 : 0;
    return c;
  };

  struct Link {
    std::vector<int> parent_pos, child_pos;
    std::vector<std::uint64_t> sep_stride;
    std::vector<std::uint32_t> argmax;  // best child state per separator state
  };
  std::vector<Link> links(nbags);
  std::vector<std::vector<std::int32_t>> table(nbags);
  std::vector<Symbol> digits;

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    const BagInfo& bi = info[i];
    auto& tab = table[i];
    tab.assign(static_cast<std::size_t>(bi.states), 0);
    for (std::uint64_t s = 0; s < bi.states; ++s) {
      decode(bi, s, digits);
      tab[static_cast<std::size_t>(s)] = count_local(bi.local_edges, digits);
    }
    for (int c : children[i]) {
      const BagInfo& ci = info[static_cast<std::size_t>(c)];
      Link& lk = links[static_cast<std::size_t>(c)];
      BagInfo sep;
      for (std::size_t p = 0; p < bi.members.size(); ++p) {
        auto f = std::find(ci.members.begin(), ci.members.end(), bi.members[p]);
        if (f == ci.members.end()) continue;
        lk.parent_pos.push_back(static_cast<int>(p));
        lk.child_pos.push_back(static_cast<int>(f - ci.members.begin()));
        sep.members.push_back(bi.members[p]);
        sep.radix.push_back(bi.radix[p]);
        lk.sep_stride.push_back(sep.states);
        sep.states *= static_cast<std::uint64_t>(bi.radix[p]);
      }
      for (auto [pa, pb, e] : bi.local_edges) {
        auto fa = std::find(lk.parent_pos.begin(), lk.parent_pos.end(), pa);
        auto fb = std::find(lk.parent_pos.begin(), lk.parent_pos.end(), pb);
        if (fa != lk.parent_pos.end() && fb != lk.parent_pos.end())
          sep.local_edges.emplace_back(static_cast<int>(fa - lk.parent_pos.begin()), static_cast<int>(fb - lk.parent_pos.begin()), e);
      }
      std::vector<std::int32_t> best(static_cast<std::size_t>(sep.states), std::numeric_limits<std::int32_t>::min());
      lk.argmax.assign(static_cast<std::size_t>(sep.states), 0);
      const auto& ctab = table[static_cast<std::size_t>(c)];
      for (std::uint64_t s = 0; s < ci.states; ++s) {
        decode(ci, s, digits);
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < lk.child_pos.size(); ++j)
          k += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(lk.child_pos[j])]) * lk.sep_stride[j];
        if (ctab[static_cast<std::size_t>(s)] > best[static_cast<std::size_t>(k)]) {
          best[static_cast<std::size_t>(k)] = ctab[static_cast<std::size_t>(s)];
          lk.argmax[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(s);
        }
      }
      // Edges inside the separator were counted in both bags.
      for (std::uint64_t k = 0; k < sep.states; ++k) {
        decode(sep, k, digits);
        best[static_cast<std::size_t>(k)] -= count_local(sep.local_edges, digits);
      }
      for (std::uint64_t s = 0; s < bi.states; ++s) {
        decode(bi, s, digits);
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < lk.parent_pos.size(); ++j)
          k += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(lk.parent_pos[j])]) * lk.sep_stride[j];
        tab[static_cast<std::size_t>(s)] += best[static_cast<std::size_t>(k)];
      }
      table[static_cast<std::size_t>(c)].clear();
      table[static_cast<std::size_t>(c)].shrink_to_fit();
    }
  }

  // Backtrack from the root maximizer (smallest state on ties).
  const auto& root = table[0];
  const auto root_state = static_cast<std::uint64_t>(std::max_element(root.begin(), root.end()) - root.begin());
  result.value = root[static_cast<std::size_t>(root_state)];
  std::vector<std::uint64_t> chosen(nbags, 0);
  chosen[0] = root_state;
  for (int x : order) {
    const auto i = static_cast<std::size_t>(x);
    decode(info[i], chosen[i], digits);
    for (std::size_t p = 0; p < info[i].members.size(); ++p) {
      const int v = info[i].members[p];
      if (game.is_a(v))
        result.assignment.a_labels[static_cast<std::size_t>(v)] = digits[p];
      else
        result.assignment.b_labels[static_cast<std::size_t>(v - game.a_count())] = digits[p];
    }
    for (int c : children[i]) {
      const Link& lk = links[static_cast<std::size_t>(c)];
      std::uint64_t k = 0;
      for (std::size_t j = 0; j < lk.parent_pos.size(); ++j)
        k += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(lk.parent_pos[j])]) * lk.sep_stride[j];
      chosen[static_cast<std::size_t>(c)] = lk.argmax[static_cast<std::size_t>(k)];
    }
  }
  return result;
}

}  // namespace labelcover
