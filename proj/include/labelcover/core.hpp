#pragma once

/// Projection game (Label Cover) instance model, evaluation, and derived statistics.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

namespace labelcover {

using Symbol = std::int32_t;
using Rational = boost::rational<std::int64_t>;
using SymbolSet = boost::dynamic_bitset<std::uint64_t>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GameErrorKind {
  InvalidSize,
  IndexOutOfRange,
  DuplicateEdge,
  TableLengthMismatch,
  SymbolOutOfRange,
};

inline const char* to_string(GameErrorKind kind) {
  switch (kind) {
    case GameErrorKind::InvalidSize: return "InvalidSize";
    case GameErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case GameErrorKind::DuplicateEdge: return "DuplicateEdge";
    case GameErrorKind::TableLengthMismatch: return "TableLengthMismatch";
    case GameErrorKind::SymbolOutOfRange: return "SymbolOutOfRange";
  }
  return "?";
}

/// Raised by build_game. `edge()` is -1 for header-level problems.
class GameError : public Error {
 public:
  GameError(GameErrorKind kind, int edge, const std::string& detail)
      : Error(std::string(to_string(kind)) + (edge >= 0 ? "(edge " + std::to_string(edge) + ")" : "") +
              ": " + detail),
        kind_(kind),
        edge_(edge) {}
  GameErrorKind kind() const noexcept { return kind_; }
  int edge() const noexcept { return edge_; }

 private:
  GameErrorKind kind_;
  int edge_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the caller's cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Instance model
// ---------------------------------------------------------------------------

struct Edge {
  int a = 0;
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unvalidated instance description, as read from a file or produced by a generator.
struct RawGame {
  int a_count = 0;
  int b_count = 0;
  int sigma_a = 0;
  int sigma_b = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Symbol>> projections;
};

/// Bipartite constraint graph with a total projection table per edge.
/// Immutable once built; all per-edge data is aligned to the edge list order.
class ProjectionGame {
 public:
  static ProjectionGame build(const RawGame& raw);

  int a_count() const noexcept { return a_count_; }
  int b_count() const noexcept { return b_count_; }
  int vertex_count() const noexcept { return a_count_ + b_count_; }
  int sigma_a() const noexcept { return sigma_a_; }
  int sigma_b() const noexcept { return sigma_b_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  Symbol project(int e, Symbol s) const {
    return tables_[static_cast<std::size_t>(e) * static_cast<std::size_t>(sigma_a_) + static_cast<std::size_t>(s)];
  }
  std::span<const Symbol> table(int e) const {
    return {tables_.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(sigma_a_),
            static_cast<std::size_t>(sigma_a_)};
  }

  /// Incident edge indices, ascending.
  const std::vector<int>& edges_at_a(int a) const { return a_edges_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& edges_at_b(int b) const { return b_edges_[static_cast<std::size_t>(b)]; }

  /// Global vertex numbering: A-vertices 0..n_A-1, then B-vertices.
  int global_b(int b) const noexcept { return a_count_ + b; }
  bool is_a(int v) const noexcept { return v < a_count_; }

  RawGame raw() const;

  friend bool operator==(const ProjectionGame& x, const ProjectionGame& y) {
    return x.a_count_ == y.a_count_ && x.b_count_ == y.b_count_ && x.sigma_a_ == y.sigma_a_ &&
           x.sigma_b_ == y.sigma_b_ && x.edges_ == y.edges_ && x.tables_ == y.tables_;
  }

 private:
  ProjectionGame() = default;

  int a_count_ = 0;
  int b_count_ = 0;
  int sigma_a_ = 0;
  int sigma_b_ = 0;
  std::vector<Edge> edges_;
  std::vector<Symbol> tables_;
  std::vector<std::vector<int>> a_edges_;
  std::vector<std::vector<int>> b_edges_;
};

inline ProjectionGame ProjectionGame::build(const RawGame& raw) {
  if (raw.a_count <= 0 || raw.b_count <= 0 || raw.sigma_a <= 0 || raw.sigma_b <= 0) {
    throw GameError(GameErrorKind::InvalidSize, -1, "vertex counts and alphabet sizes must be positive");
  }
  if (raw.projections.size() != raw.edges.size()) {
    throw GameError(GameErrorKind::TableLengthMismatch, static_cast<int>(std::min(raw.projections.size(), raw.edges.size())),
                    "edge count and projection table count differ");
  }
  ProjectionGame g;
  g.a_count_ = raw.a_count;
  g.b_count_ = raw.b_count;
  g.sigma_a_ = raw.sigma_a;
  g.sigma_b_ = raw.sigma_b;
  g.edges_ = raw.edges;
  g.tables_.reserve(raw.edges.size() * static_cast<std::size_t>(raw.sigma_a));
  g.a_edges_.assign(static_cast<std::size_t>(raw.a_count), {});
  g.b_edges_.assign(static_cast<std::size_t>(raw.b_count), {});

  std::vector<std::pair<Edge, int>> seen;
  seen.reserve(raw.edges.size());
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const int e = static_cast<int>(i);
    const Edge& ed = raw.edges[i];
    if (ed.a < 0 || ed.a >= raw.a_count || ed.b < 0 || ed.b >= raw.b_count) {
      throw GameError(GameErrorKind::IndexOutOfRange, e,
                      "endpoint (" + std::to_string(ed.a) + "," + std::to_string(ed.b) + ") outside vertex range");
    }
    const auto& t = raw.projections[i];
    if (static_cast<int>(t.size()) != raw.sigma_a) {
      throw GameError(GameErrorKind::TableLengthMismatch, e,
                      "table has " + std::to_string(t.size()) + " entries, expected " + std::to_string(raw.sigma_a));
    }
    for (Symbol s : t) {
      if (s < 0 || s >= raw.sigma_b) {
        throw GameError(GameErrorKind::SymbolOutOfRange, e, "projection value " + std::to_string(s) + " not in [0," +
                                                                std::to_string(raw.sigma_b) + ")");
      }
    }
    g.tables_.insert(g.tables_.end(), t.begin(), t.end());
    g.a_edges_[static_cast<std::size_t>(ed.a)].push_back(e);
    g.b_edges_[static_cast<std::size_t>(ed.b)].push_back(e);
    seen.emplace_back(ed, e);
  }
  std::sort(seen.begin(), seen.end(), [](const auto& x, const auto& y) {
    if (x.first.a != y.first.a) return x.first.a < y.first.a;
    if (x.first.b != y.first.b) return x.first.b < y.first.b;
    return x.second < y.second;
  });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw GameError(GameErrorKind::DuplicateEdge, seen[i].second,
                      "duplicates edge " + std::to_string(seen[i - 1].second));
    }
  }
  return g;
}

inline RawGame ProjectionGame::raw() const {
  RawGame r;
  r.a_count = a_count_;
  r.b_count = b_count_;
  r.sigma_a = sigma_a_;
  r.sigma_b = sigma_b_;
  r.edges = edges_;
  r.projections.reserve(edges_.size());
  for (int e = 0; e < edge_count(); ++e) {
    auto t = table(e);
    r.projections.emplace_back(t.begin(), t.end());
  }
  return r;
}

inline ProjectionGame build_game(const RawGame& raw) { return ProjectionGame::build(raw); }

/// Same vertex set and alphabets, keeping only the listed edges (in the given order).
inline ProjectionGame restrict_edges(const ProjectionGame& game, std::span<const int> keep) {
  RawGame r;
  r.a_count = game.a_count();
  r.b_count = game.b_count();
  r.sigma_a = game.sigma_a();
  r.sigma_b = game.sigma_b();
  for (int e : keep) {
    r.edges.push_back(game.edge(e));
    auto t = game.table(e);
    r.projections.emplace_back(t.begin(), t.end());
  }
  return ProjectionGame::build(r);
}

struct Assignment {
  std::vector<Symbol> a_labels;
  std::vector<Symbol> b_labels;

  static Assignment zeros(const ProjectionGame& g) {
    return {std::vector<Symbol>(static_cast<std::size_t>(g.a_count()), 0),
            std::vector<Symbol>(static_cast<std::size_t>(g.b_count()), 0)};
  }
  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

inline void check_assignment(const ProjectionGame& game, const Assignment& phi) {
  if (static_cast<int>(phi.a_labels.size()) != game.a_count() || static_cast<int>(phi.b_labels.size()) != game.b_count()) {
    throw ShapeMismatch("assignment has " + std::to_string(phi.a_labels.size()) + "/" +
                        std::to_string(phi.b_labels.size()) + " labels, game has " +
                        std::to_string(game.a_count()) + "/" + std::to_string(game.b_count()) + " vertices");
  }
  for (std::size_t i = 0; i < phi.a_labels.size(); ++i) {
    if (phi.a_labels[i] < 0 || phi.a_labels[i] >= game.sigma_a()) {
      throw ShapeMismatch("label of a" + std::to_string(i) + " out of range");
    }
  }
  for (std::size_t i = 0; i < phi.b_labels.size(); ++i) {
    if (phi.b_labels[i] < 0 || phi.b_labels[i] >= game.sigma_b()) {
      throw ShapeMismatch("label of b" + std::to_string(i) + " out of range");
    }
  }
}

inline bool satisfied(const ProjectionGame& game, const Assignment& phi, int e) {
  const Edge& ed = game.edge(e);
  return game.project(e, phi.a_labels[static_cast<std::size_t>(ed.a)]) == phi.b_labels[static_cast<std::size_t>(ed.b)];
}

/// Number of satisfied edges.
inline int value(const ProjectionGame& game, const Assignment& phi) {
  check_assignment(game, phi);
  int count = 0;
  for (int e = 0; e < game.edge_count(); ++e) count += satisfied(game, phi, e) ? 1 : 0;
  return count;
}

/// Smallest-index symbol for each b maximizing the satisfied edges at b, given the A-labels.
inline std::vector<Symbol> best_b_response(const ProjectionGame& game, std::span<const Symbol> a_labels) {
  std::vector<Symbol> out(static_cast<std::size_t>(game.b_count()), 0);
  std::vector<int> votes(static_cast<std::size_t>(game.sigma_b()));
  for (int b = 0; b < game.b_count(); ++b) {
    std::fill(votes.begin(), votes.end(), 0);
    for (int e : game.edges_at_b(b)) ++votes[static_cast<std::size_t>(game.project(e, a_labels[static_cast<std::size_t>(game.edge(e).a)]))];
    out[static_cast<std::size_t>(b)] = static_cast<Symbol>(std::max_element(votes.begin(), votes.end()) - votes.begin());
  }
  return out;
}

/// Smallest-index symbol for each a maximizing the satisfied edges at a, given the B-labels.
inline std::vector<Symbol> best_a_response(const ProjectionGame& game, std::span<const Symbol> b_labels) {
  std::vector<Symbol> out(static_cast<std::size_t>(game.a_count()), 0);
  for (int a = 0; a < game.a_count(); ++a) {
    int best = -1;
    for (Symbol s = 0; s < game.sigma_a(); ++s) {
      int hits = 0;
      for (int e : game.edges_at_a(a)) hits += game.project(e, s) == b_labels[static_cast<std::size_t>(game.edge(e).b)] ? 1 : 0;
      if (hits > best) {
        best = hits;
        out[static_cast<std::size_t>(a)] = s;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Preimages
// ---------------------------------------------------------------------------

/// Per (edge, B-symbol) preimage sets of the projection tables.
class PreimageIndex {
 public:
  explicit PreimageIndex(const ProjectionGame& game)
      : sigma_b_(game.sigma_b()),
        sets_(static_cast<std::size_t>(game.edge_count()) * static_cast<std::size_t>(game.sigma_b()),
              SymbolSet(static_cast<std::size_t>(game.sigma_a()))),
        counts_(sets_.size(), 0) {
    for (int e = 0; e < game.edge_count(); ++e) {
      for (Symbol s = 0; s < game.sigma_a(); ++s) {
        const std::size_t k = slot(e, game.project(e, s));
        sets_[k].set(static_cast<std::size_t>(s));
        ++counts_[k];
      }
    }
  }

  const SymbolSet& set(int e, Symbol sb) const { return sets_[slot(e, sb)]; }
  int count(int e, Symbol sb) const { return counts_[slot(e, sb)]; }

 private:
  std::size_t slot(int e, Symbol sb) const {
    return static_cast<std::size_t>(e) * static_cast<std::size_t>(sigma_b_) + static_cast<std::size_t>(sb);
  }
  int sigma_b_;
  std::vector<SymbolSet> sets_;
  std::vector<int> counts_;
};

// ---------------------------------------------------------------------------
// Stats
// ---------------------------------------------------------------------------

struct InstanceStats {
  std::vector<int> degree_a;
  std::vector<int> degree_b;
  std::vector<std::vector<int>> neighbors_a;  // N(a), ascending B indices
  std::vector<std::vector<int>> neighbors_b;  // N(b), ascending A indices
  std::vector<std::vector<int>> two_hop;      // N2(a) = N(N(a)), ascending A indices

  std::vector<Symbol> sigma_b_max;  // per b
  std::vector<int> p_max;           // per edge: |pi_e^{-1}(sigma_b^max)|
  std::int64_t p_max_sum = 0;
  int edge_count = 0;

  std::vector<std::int64_t> h;    // |E(N2(a))|
  std::int64_t h_max = 0;
  int h_argmax = 0;
  std::vector<std::int64_t> e_n;  // |E(N(a))|
  std::int64_t e_n_max = 0;
  int e_n_argmax = 0;

  std::optional<int> uniform_p;

  /// Mean of p_max over all edges (0 on an edgeless game).
  Rational p_bar_max() const {
    return edge_count == 0 ? Rational(0) : Rational(p_max_sum, edge_count);
  }
  /// |pi^{-1}| <= 2 * p_bar_max, evaluated in integers.
  bool within_good_threshold(int preimage_size) const {
    return static_cast<std::int64_t>(preimage_size) * edge_count <= 2 * p_max_sum;
  }
};

inline InstanceStats compute_stats(const ProjectionGame& game, const PreimageIndex& pre) {
  InstanceStats st;
  const auto na = static_cast<std::size_t>(game.a_count());
  const auto nb = static_cast<std::size_t>(game.b_count());
  st.edge_count = game.edge_count();
  st.degree_a.resize(na);
  st.degree_b.resize(nb);
  st.neighbors_a.resize(na);
  st.neighbors_b.resize(nb);
  for (int a = 0; a < game.a_count(); ++a) {
    for (int e : game.edges_at_a(a)) st.neighbors_a[static_cast<std::size_t>(a)].push_back(game.edge(e).b);
    std::sort(st.neighbors_a[static_cast<std::size_t>(a)].begin(), st.neighbors_a[static_cast<std::size_t>(a)].end());
    st.degree_a[static_cast<std::size_t>(a)] = static_cast<int>(game.edges_at_a(a).size());
  }
  for (int b = 0; b < game.b_count(); ++b) {
    for (int e : game.edges_at_b(b)) st.neighbors_b[static_cast<std::size_t>(b)].push_back(game.edge(e).a);
    std::sort(st.neighbors_b[static_cast<std::size_t>(b)].begin(), st.neighbors_b[static_cast<std::size_t>(b)].end());
    st.degree_b[static_cast<std::size_t>(b)] = static_cast<int>(game.edges_at_b(b).size());
  }

  st.two_hop.resize(na);
  st.h.assign(na, 0);
  st.e_n.assign(na, 0);
  std::vector<char> mark(na, 0);
  for (std::size_t a = 0; a < na; ++a) {
    auto& out = st.two_hop[a];
    for (int b : st.neighbors_a[a]) {
      st.e_n[a] += st.degree_b[static_cast<std::size_t>(b)];
      for (int a2 : st.neighbors_b[static_cast<std::size_t>(b)]) {
        if (!mark[static_cast<std::size_t>(a2)]) {
          mark[static_cast<std::size_t>(a2)] = 1;
          out.push_back(a2);
        }
      }
    }
    for (int a2 : out) {
      mark[static_cast<std::size_t>(a2)] = 0;
      st.h[a] += st.degree_a[static_cast<std::size_t>(a2)];
    }
    std::sort(out.begin(), out.end());
  }
  for (std::size_t a = 0; a < na; ++a) {
    if (st.h[a] > st.h_max) {
      st.h_max = st.h[a];
      st.h_argmax = static_cast<int>(a);
    }
    if (st.e_n[a] > st.e_n_max) {
      st.e_n_max = st.e_n[a];
      st.e_n_argmax = static_cast<int>(a);
    }
  }

  st.sigma_b_max.assign(nb, 0);
  for (int b = 0; b < game.b_count(); ++b) {
    std::int64_t best = -1;
    for (Symbol s = 0; s < game.sigma_b(); ++s) {
      std::int64_t total = 0;
      for (int e : game.edges_at_b(b)) total += pre.count(e, s);
      if (total > best) {
        best = total;
        st.sigma_b_max[static_cast<std::size_t>(b)] = s;
      }
    }
  }
  st.p_max.resize(static_cast<std::size_t>(game.edge_count()));
  for (int e = 0; e < game.edge_count(); ++e) {
    const int p = pre.count(e, st.sigma_b_max[static_cast<std::size_t>(game.edge(e).b)]);
    st.p_max[static_cast<std::size_t>(e)] = p;
    st.p_max_sum += p;
  }

  // Uniform iff every (edge, B-symbol) preimage has the same size.
  std::optional<int> common;
  bool uniform = true;
  for (int e = 0; e < game.edge_count() && uniform; ++e) {
    for (Symbol s = 0; s < game.sigma_b(); ++s) {
      const int c = pre.count(e, s);
      if (!common) common = c;
      if (*common != c) {
        uniform = false;
        break;
      }
    }
  }
  if (uniform && common) st.uniform_p = *common;
  return st;
}

inline InstanceStats compute_stats(const ProjectionGame& game) { return compute_stats(game, PreimageIndex(game)); }

// ---------------------------------------------------------------------------
// Components
// ---------------------------------------------------------------------------

/// A connected piece with at least one edge, plus maps from local to global indices.
struct Component {
  ProjectionGame game;
  std::vector<int> a_map;
  std::vector<int> b_map;
  std::vector<int> edge_map;
};

struct ComponentSplit {
  std::vector<Component> components;
  std::vector<int> isolated_a;
  std::vector<int> isolated_b;
};

/// Components ordered by their smallest global vertex; vertex and edge order preserved within each.
inline ComponentSplit connected_components(const ProjectionGame& game) {
  const int n = game.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const auto& inc = game.is_a(v) ? game.edges_at_a(v) : game.edges_at_b(v - game.a_count());
      for (int e : inc) {
        const Edge& ed = game.edge(e);
        const int w = game.is_a(v) ? game.global_b(ed.b) : ed.a;
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }

  ComponentSplit split;
  std::vector<RawGame> raws(static_cast<std::size_t>(next));
  std::vector<std::vector<int>> amaps(static_cast<std::size_t>(next)), bmaps(static_cast<std::size_t>(next)),
      emaps(static_cast<std::size_t>(next));
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
    if (game.is_a(v)) {
      local[static_cast<std::size_t>(v)] = static_cast<int>(amaps[c].size());
      amaps[c].push_back(v);
    } else {
      local[static_cast<std::size_t>(v)] = static_cast<int>(bmaps[c].size());
      bmaps[c].push_back(v - game.a_count());
    }
  }
  for (int e = 0; e < game.edge_count(); ++e) {
    const Edge& ed = game.edge(e);
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(ed.a)]);
    raws[c].edges.push_back({local[static_cast<std::size_t>(ed.a)], local[static_cast<std::size_t>(game.global_b(ed.b))]});
    auto t = game.table(e);
    raws[c].projections.emplace_back(t.begin(), t.end());
    emaps[c].push_back(e);
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(next); ++c) {
    if (emaps[c].empty()) {
      for (int a : amaps[c]) split.isolated_a.push_back(a);
      for (int b : bmaps[c]) split.isolated_b.push_back(b);
      continue;
    }
    raws[c].a_count = static_cast<int>(amaps[c].size());
    raws[c].b_count = static_cast<int>(bmaps[c].size());
    raws[c].sigma_a = game.sigma_a();
    raws[c].sigma_b = game.sigma_b();
    split.components.push_back(
        Component{ProjectionGame::build(raws[c]), std::move(amaps[c]), std::move(bmaps[c]), std::move(emaps[c])});
  }
  return split;
}

/// Assemble a global assignment from per-component assignments; isolated vertices get label 0.
inline Assignment lift(const ProjectionGame& game, const ComponentSplit& split, std::span<const Assignment> parts) {
  if (parts.size() != split.components.size()) throw ShapeMismatch("one assignment per component required");
  Assignment out = Assignment::zeros(game);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto& comp = split.components[c];
    check_assignment(comp.game, parts[c]);
    for (std::size_t i = 0; i < comp.a_map.size(); ++i) out.a_labels[static_cast<std::size_t>(comp.a_map[i])] = parts[c].a_labels[i];
    for (std::size_t i = 0; i < comp.b_map.size(); ++i) out.b_labels[static_cast<std::size_t>(comp.b_map[i])] = parts[c].b_labels[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct SolveReport {
  Assignment assignment;
  int satisfied = 0;
  std::string algorithm;
  /// Lower bound on `satisfied` the algorithm certifies for this instance (when its preconditions hold).
  Rational guarantee{0};
  std::chrono::nanoseconds elapsed{0};
  std::optional<std::uint64_t> seed;
  /// best_of: the reports of every candidate, in run order.
  std::vector<SolveReport> breakdown;
  std::string winner;
  /// ptas: guarantee as a fraction of the optimum, (h-1)/h.
  std::optional<Rational> opt_fraction;
};

/// Runs `fn`, fills `elapsed` and recomputes `satisfied` from the assignment.
template <typename Fn>
SolveReport timed(const ProjectionGame& game, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport r = fn();
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  r.satisfied = value(game, r.assignment);
  return r;
}

inline std::int64_t ceil_of(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

}  // namespace labelcover
