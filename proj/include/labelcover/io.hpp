#pragma once

/// Versioned text formats for games, assignments, decompositions, colouring graphs and tilings.
///
/// Every format is line-oriented with whitespace-separated decimal integers. Blank lines and lines
/// whose first non-blank character is `#` are ignored. Emitters write the canonical form, which
/// the parsers read back unchanged.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "labelcover/core.hpp"
#include "labelcover/exact.hpp"
#include "labelcover/reductions.hpp"

namespace labelcover {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

struct TextLine {
  int number = 0;
  std::vector<std::string_view> tokens;
};

/// Splits `text` into its significant lines.
inline std::vector<TextLine> significant_lines(std::string_view text) {
  std::vector<TextLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    TextLine tl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tl.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tl.tokens.empty() || tl.tokens.front().front() == '#') continue;
    out.push_back(std::move(tl));
    if (end == text.size()) break;
  }
  return out;
}

class LineCursor {
 public:
  LineCursor(std::string_view text, std::string_view magic) : lines_(significant_lines(text)) {
    if (lines_.empty()) throw ParseError(0, "empty input, expected '" + std::string(magic) + "'");
    const auto& first = lines_.front();
    std::string head;
    for (std::size_t i = 0; i < first.tokens.size(); ++i) head += (i ? " " : "") + std::string(first.tokens[i]);
    if (head != magic) throw ParseError(first.number, "expected header '" + std::string(magic) + "'");
    next_ = 1;
  }

  const TextLine& take(const char* what) {
    if (next_ >= lines_.size()) {
      throw ParseError(lines_.back().number + 1, std::string("unexpected end of input, expected ") + what);
    }
    return lines_[next_++];
  }

  void expect_end() const {
    if (next_ < lines_.size()) throw ParseError(lines_[next_].number, "unexpected trailing content");
  }

 private:
  std::vector<TextLine> lines_;
  std::size_t next_ = 0;
};

inline std::int64_t to_int(const TextLine& line, std::size_t i, std::int64_t lo, std::int64_t hi) {
  if (i >= line.tokens.size()) throw ParseError(line.number, "missing value " + std::to_string(i + 1));
  const auto tok = line.tokens[i];
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line.number, "'" + std::string(tok) + "' is not an integer");
  }
  if (v < lo || v > hi) {
    throw ParseError(line.number, "value " + std::string(tok) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

inline void expect_count(const TextLine& line, std::size_t n, const char* what) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, std::string(what) + ": expected " + std::to_string(n) + " values, found " +
                                      std::to_string(line.tokens.size()));
  }
}

constexpr std::int64_t kMaxInt = 2147483647;

}  // namespace detail

// ---------------------------------------------------------------------------
// labelcover v1
// ---------------------------------------------------------------------------

/// Parses the token structure only; validation happens in build_game.
inline RawGame parse_raw_game(std::string_view text) {
  detail::LineCursor cur(text, "labelcover v1");
  const auto& head = cur.take("size line 'nA nB kA kB m'");
  detail::expect_count(head, 5, "size line");
  RawGame r;
  r.a_count = static_cast<int>(detail::to_int(head, 0, 0, detail::kMaxInt));
  r.b_count = static_cast<int>(detail::to_int(head, 1, 0, detail::kMaxInt));
  r.sigma_a = static_cast<int>(detail::to_int(head, 2, 0, detail::kMaxInt));
  r.sigma_b = static_cast<int>(detail::to_int(head, 3, 0, detail::kMaxInt));
  const auto m = detail::to_int(head, 4, 0, detail::kMaxInt);
  for (std::int64_t e = 0; e < m; ++e) {
    const auto& line = cur.take("edge line");
    detail::expect_count(line, 2 + static_cast<std::size_t>(r.sigma_a), "edge line");
    r.edges.push_back({static_cast<int>(detail::to_int(line, 0, 0, detail::kMaxInt)),
                       static_cast<int>(detail::to_int(line, 1, 0, detail::kMaxInt))});
    std::vector<Symbol> t;
    t.reserve(static_cast<std::size_t>(r.sigma_a));
    for (int i = 0; i < r.sigma_a; ++i) t.push_back(static_cast<Symbol>(detail::to_int(line, 2 + static_cast<std::size_t>(i), 0, detail::kMaxInt)));
    r.projections.push_back(std::move(t));
  }
  cur.expect_end();
  return r;
}

inline ProjectionGame parse_game(std::string_view text) { return build_game(parse_raw_game(text)); }

inline std::string emit_game(const ProjectionGame& g) {
  std::ostringstream os;
  os << "labelcover v1\n" << g.a_count() << ' ' << g.b_count() << ' ' << g.sigma_a() << ' ' << g.sigma_b() << ' '
     << g.edge_count() << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    os << g.edge(e).a << ' ' << g.edge(e).b;
    for (Symbol s : g.table(e)) os << ' ' << s;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// assign v1
// ---------------------------------------------------------------------------

inline Assignment parse_assignment(std::string_view text) {
  detail::LineCursor cur(text, "assign v1");
  Assignment phi;
  for (auto* side : {&phi.a_labels, &phi.b_labels}) {
    const auto& line = cur.take(side == &phi.a_labels ? "A-label line" : "B-label line");
    for (std::size_t i = 0; i < line.tokens.size(); ++i) side->push_back(static_cast<Symbol>(detail::to_int(line, i, 0, detail::kMaxInt)));
  }
  cur.expect_end();
  return phi;
}

inline std::string emit_assignment(const Assignment& phi) {
  std::ostringstream os;
  os << "assign v1\n";
  for (const auto* side : {&phi.a_labels, &phi.b_labels}) {
    for (std::size_t i = 0; i < side->size(); ++i) os << (i ? " " : "") << (*side)[i];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// td v1
// ---------------------------------------------------------------------------

inline TreeDecomposition parse_decomposition(std::string_view text) {
  detail::LineCursor cur(text, "td v1");
  const auto& head = cur.take("size line 'bags edges'");
  detail::expect_count(head, 2, "size line");
  const auto nb = detail::to_int(head, 0, 0, detail::kMaxInt);
  const auto ne = detail::to_int(head, 1, 0, detail::kMaxInt);
  TreeDecomposition td;
  for (std::int64_t i = 0; i < nb; ++i) {
    const auto& line = cur.take("bag line");
    const auto size = detail::to_int(line, 0, 0, detail::kMaxInt);
    detail::expect_count(line, 1 + static_cast<std::size_t>(size), "bag line");
    std::vector<int> bag;
    for (std::int64_t j = 0; j < size; ++j) bag.push_back(static_cast<int>(detail::to_int(line, 1 + static_cast<std::size_t>(j), 0, detail::kMaxInt)));
    td.bags.push_back(std::move(bag));
  }
  for (std::int64_t i = 0; i < ne; ++i) {
    const auto& line = cur.take("tree edge line");
    detail::expect_count(line, 2, "tree edge line");
    td.tree.emplace_back(static_cast<int>(detail::to_int(line, 0, 0, nb - 1)), static_cast<int>(detail::to_int(line, 1, 0, nb - 1)));
  }
  cur.expect_end();
  return td;
}

inline std::string emit_decomposition(const TreeDecomposition& td) {
  std::ostringstream os;
  os << "td v1\n" << td.bags.size() << ' ' << td.tree.size() << '\n';
  for (const auto& bag : td.bags) {
    os << bag.size();
    for (int v : bag) os << ' ' << v;
    os << '\n';
  }
  for (auto [i, j] : td.tree) os << i << ' ' << j << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// colgraph v1
// ---------------------------------------------------------------------------

inline ColoringGraph parse_coloring_graph(std::string_view text) {
  detail::LineCursor cur(text, "colgraph v1");
  const auto& head = cur.take("size line 'n m planar'");
  detail::expect_count(head, 3, "size line");
  ColoringGraph g;
  g.vertex_count = static_cast<int>(detail::to_int(head, 0, 0, detail::kMaxInt));
  const auto m = detail::to_int(head, 1, 0, detail::kMaxInt);
  g.claimed_planar = detail::to_int(head, 2, 0, 1) == 1;
  for (std::int64_t i = 0; i < m; ++i) {
    const auto& line = cur.take("edge line");
    detail::expect_count(line, 2, "edge line");
    g.edges.emplace_back(static_cast<int>(detail::to_int(line, 0, 0, g.vertex_count - 1)),
                         static_cast<int>(detail::to_int(line, 1, 0, g.vertex_count - 1)));
  }
  cur.expect_end();
  return g;
}

inline std::string emit_coloring_graph(const ColoringGraph& g) {
  std::ostringstream os;
  os << "colgraph v1\n" << g.vertex_count << ' ' << g.edges.size() << ' ' << (g.claimed_planar ? 1 : 0) << '\n';
  for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// matrixtiling v1
// ---------------------------------------------------------------------------

/// Cell lines `i j c x1 y1 ... xc yc`, 1-based, one per cell in any order.
inline MatrixTiling parse_tiling(std::string_view text) {
  detail::LineCursor cur(text, "matrixtiling v1");
  const auto& head = cur.take("size line 'k n'");
  detail::expect_count(head, 2, "size line");
  MatrixTiling t;
  t.k = static_cast<int>(detail::to_int(head, 0, 1, 4096));
  t.n = static_cast<int>(detail::to_int(head, 1, 1, 46340));
  t.sets.resize(static_cast<std::size_t>(t.k * t.k));
  std::vector<char> seen(t.sets.size(), 0);
  for (int c = 0; c < t.k * t.k; ++c) {
    const auto& line = cur.take("cell line");
    const auto i = detail::to_int(line, 0, 1, t.k);
    const auto j = detail::to_int(line, 1, 1, t.k);
    const auto count = detail::to_int(line, 2, 0, detail::kMaxInt);
    detail::expect_count(line, 3 + 2 * static_cast<std::size_t>(count), "cell line");
    const auto idx = static_cast<std::size_t>((i - 1) * t.k + (j - 1));
    if (seen[idx]) throw ParseError(line.number, "cell listed twice");
    seen[idx] = 1;
    for (std::int64_t p = 0; p < count; ++p) {
      t.sets[idx].emplace_back(static_cast<int>(detail::to_int(line, 3 + 2 * static_cast<std::size_t>(p), 1, t.n)),
                               static_cast<int>(detail::to_int(line, 4 + 2 * static_cast<std::size_t>(p), 1, t.n)));
    }
  }
  cur.expect_end();
  t.normalize();
  return t;
}

inline std::string emit_tiling(const MatrixTiling& t) {
  std::ostringstream os;
  os << "matrixtiling v1\n" << t.k << ' ' << t.n << '\n';
  for (int i = 1; i <= t.k; ++i)
    for (int j = 1; j <= t.k; ++j) {
      const auto& s = t.at(i, j);
      os << i << ' ' << j << ' ' << s.size();
      for (auto [x, y] : s) os << ' ' << x << ' ' << y;
      os << '\n';
    }
  return os.str();
}

/// `tiling v1`, then k lines of k entries, each `x,y` or `*`.
inline std::string emit_tiling_solution(const MatrixTiling& t, const TilingSolution& s) {
  std::ostringstream os;
  os << "tiling v1\n" << t.k << '\n';
  for (int i = 0; i < t.k; ++i) {
    for (int j = 0; j < t.k; ++j) {
      const auto& c = s.cells[static_cast<std::size_t>(i * t.k + j)];
      os << (j ? " " : "");
      if (c) os << c->first << ',' << c->second;
      else os << '*';
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write to " + path + " failed");
}

}  // namespace labelcover
