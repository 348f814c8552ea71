// Command-line front end: generation, solving, verification and benchmarking of projection games.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "labelcover/labelcover.hpp"

namespace lc = labelcover;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Globals {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::uint64_t enum_cap = lc::kDefaultEnumerationCap;
  std::string out;
};

std::string rational_text(const lc::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "3", "1/2" or "0.25".
lc::Rational parse_rational(const std::string& s) {
  auto fail = [&] { throw CLI::ValidationError("'" + s + "' is not a rational number"); };
  if (s.empty()) fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      std::size_t p1 = 0, p2 = 0;
      const auto n = std::stoll(s.substr(0, slash), &p1);
      const auto d = std::stoll(s.substr(slash + 1), &p2);
      if (p1 != slash || p2 != s.size() - slash - 1 || d == 0) fail();
      return lc::Rational(n, d);
    } catch (const std::logic_error&) {
      fail();
    }
  }
  const auto dot = s.find('.');
  const std::string whole = s.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (frac.size() > 15 || (whole.empty() && frac.empty())) fail();
  for (char c : frac)
    if (c < '0' || c > '9') fail();
  std::int64_t n = 0;
  bool neg = false;
  std::size_t i = 0;
  if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
    neg = whole[0] == '-';
    i = 1;
  }
  for (; i < whole.size(); ++i) {
    if (whole[i] < '0' || whole[i] > '9') fail();
    n = n * 10 + (whole[i] - '0');
  }
  std::int64_t d = 1;
  for (char c : frac) {
    n = n * 10 + (c - '0');
    d *= 10;
  }
  return lc::Rational(neg ? -n : n, d);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + os.str();
}

struct LoadedGame {
  std::string path;
  std::string digest;
  lc::ProjectionGame game;
};

LoadedGame load_game(const std::string& path) {
  const std::string text = lc::read_file(path);
  return {path, sha256_hex(text), lc::parse_game(text)};
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    lc::write_file(g.out, text);
  }
}

ordered_json assignment_json(const lc::Assignment& phi) {
  return ordered_json{{"a", phi.a_labels}, {"b", phi.b_labels}};
}

ordered_json report_json(const lc::SolveReport& r, const lc::ProjectionGame& game, const Globals& g) {
  ordered_json j;
  j["algorithm"] = r.algorithm;
  j["satisfied"] = r.satisfied;
  j["edges"] = game.edge_count();
  j["guarantee"] = rational_text(r.guarantee);
  if (r.opt_fraction) j["opt_fraction"] = rational_text(*r.opt_fraction);
  if (r.seed) j["seed"] = *r.seed;
  if (!r.winner.empty()) j["winner"] = r.winner;
  if (!r.breakdown.empty()) {
    j["breakdown"] = ordered_json::array();
    for (const auto& b : r.breakdown) {
      ordered_json x{{"algorithm", b.algorithm}, {"satisfied", b.satisfied}, {"guarantee", rational_text(b.guarantee)}};
      if (g.timing) x["elapsed_ms"] = std::chrono::duration<double, std::milli>(b.elapsed).count();
      j["breakdown"].push_back(std::move(x));
    }
  }
  if (g.timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  j["assignment"] = assignment_json(r.assignment);
  return j;
}

ordered_json record(const std::string& command, const LoadedGame* lg) {
  ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  if (lg) {
    j["instance"] = lg->path;
    j["digest"] = lg->digest;
  }
  return j;
}

void print_report(const Globals& g, const std::string& command, const LoadedGame& lg, const lc::SolveReport& r,
                  const std::string& assign_out) {
  if (!assign_out.empty()) lc::write_file(assign_out, lc::emit_assignment(r.assignment));
  if (g.json) {
    ordered_json j = record(command, &lg);
    j.update(report_json(r, lg.game, g));
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "algorithm: " << r.algorithm << '\n';
  std::cout << "satisfied: " << r.satisfied << " / " << lg.game.edge_count() << '\n';
  std::cout << "guarantee: " << rational_text(r.guarantee) << '\n';
  if (r.opt_fraction) std::cout << "opt_fraction: " << rational_text(*r.opt_fraction) << '\n';
  if (!r.winner.empty()) {
    std::cout << "winner: " << r.winner << '\n';
    for (const auto& b : r.breakdown)
      std::cout << "  " << b.algorithm << ": " << b.satisfied << " (guarantee " << rational_text(b.guarantee) << ")\n";
  }
  if (g.timing) std::cout << "elapsed_ms: " << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
  if (assign_out.empty()) std::cout << lc::emit_assignment(r.assignment);
}

ordered_json stats_json(const lc::ProjectionGame& game) {
  const auto st = lc::compute_stats(game);
  ordered_json j;
  j["a_count"] = game.a_count();
  j["b_count"] = game.b_count();
  j["sigma_a"] = game.sigma_a();
  j["sigma_b"] = game.sigma_b();
  j["edges"] = game.edge_count();
  j["degree_a"] = st.degree_a;
  j["degree_b"] = st.degree_b;
  j["sigma_b_max"] = st.sigma_b_max;
  j["p_max"] = st.p_max;
  j["p_bar_max"] = rational_text(st.p_bar_max());
  j["h"] = st.h;
  j["h_max"] = st.h_max;
  j["e_n"] = st.e_n;
  j["e_n_max"] = st.e_n_max;
  j["uniform_p"] = st.uniform_p ? ordered_json(*st.uniform_p) : ordered_json(nullptr);
  const auto split = lc::connected_components(game);
  j["components"] = split.components.size();
  j["isolated_a"] = split.isolated_a;
  j["isolated_b"] = split.isolated_b;
  return j;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Projection game (Label Cover) toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Structured JSON output");
  app.add_flag("--timing", g.timing, "Include wall-clock timings (output is then not reproducible)");
  app.add_option("--seed", g.seed, "Random seed")->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--enum-cap", g.enum_cap, "Enumeration budget (assignments, nodes or states)");
  app.add_option("-o,--out", g.out, "Write the primary output to this file");
  app.set_version_flag("--version", kVersion);

  // gen ---------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  struct GenOpts {
    int na = 10, nb = 10, ka = 4, kb = 2, degree = 3, rows = 3, cols = 3, n = 6, k = 3;
    bool uniform = false, nonplanar = false;
    std::string mu_target = "1/4", drop = "0", density = "1/2", edge_p = "1/2", plant;
  } go;
  auto add_plant = [&](CLI::App* c) { c->add_option("--plant", go.plant, "Write the planted assignment here"); };
  auto* gen_random = gen->add_subcommand("random", "Random planted satisfiable game");
  gen_random->add_option("--na", go.na)->required();
  gen_random->add_option("--nb", go.nb)->required();
  gen_random->add_option("--ka", go.ka)->required();
  gen_random->add_option("--kb", go.kb)->required();
  gen_random->add_option("--degree", go.degree)->required();
  gen_random->add_flag("--uniform", go.uniform, "Balanced tables: every preimage has size ka/kb");
  add_plant(gen_random);
  auto* gen_smooth = gen->add_subcommand("smooth", "Planted game meeting a smoothness target");
  gen_smooth->add_option("--na", go.na)->required();
  gen_smooth->add_option("--nb", go.nb)->required();
  gen_smooth->add_option("--ka", go.ka)->required();
  gen_smooth->add_option("--kb", go.kb)->required();
  gen_smooth->add_option("--degree", go.degree)->required();
  gen_smooth->add_option("--mu-target", go.mu_target)->required();
  add_plant(gen_smooth);
  auto* gen_grid = gen->add_subcommand("grid", "Planted game on a grid graph");
  gen_grid->add_option("--rows", go.rows)->required();
  gen_grid->add_option("--cols", go.cols)->required();
  gen_grid->add_option("--ka", go.ka)->required();
  gen_grid->add_option("--kb", go.kb)->required();
  add_plant(gen_grid);
  auto* gen_3col = gen->add_subcommand("3col", "Colouring graph (stacked triangulation with edge drops)");
  gen_3col->add_option("--n", go.n)->required();
  gen_3col->add_option("--drop", go.drop, "Edge drop probability");
  gen_3col->add_flag("--nonplanar", go.nonplanar, "G(n,p) instead of a planar graph");
  gen_3col->add_option("--p", go.edge_p, "Edge probability for --nonplanar");
  auto* gen_tiling = gen->add_subcommand("tiling", "Random Matrix Tiling instance");
  gen_tiling->add_option("--k", go.k)->required();
  gen_tiling->add_option("--n", go.n)->required();
  gen_tiling->add_option("--density", go.density, "Probability that a pair enters a cell set");

  // stats -------------------------------------------------------------------
  std::string instance, second;
  auto* stats = app.add_subcommand("stats", "Derived instance statistics");
  stats->add_option("instance", instance)->required();

  // solve -------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->require_subcommand(1);
  std::string td_in, td_out, assign_out;
  auto* solve_exact = solve->add_subcommand("exact", "Exhaustive search");
  solve_exact->add_option("instance", instance)->required();
  solve_exact->add_option("--assign-out", assign_out);
  auto* solve_dp = solve->add_subcommand("dp", "Tree-decomposition dynamic program");
  solve_dp->add_option("instance", instance)->required();
  solve_dp->add_option("--td", td_in, "Use this decomposition instead of the min-fill one");
  solve_dp->add_option("--emit-td", td_out, "Write the decomposition used");
  solve_dp->add_option("--assign-out", assign_out);

  // approx ------------------------------------------------------------------
  auto* approx = app.add_subcommand("approx", "Approximation algorithms");
  approx->require_subcommand(1);
  int a0 = -1, sigma = -1;
  bool uniform_variant = false;
  std::map<std::string, CLI::App*> approx_cmds;
  for (const char* name : {"one-neighbor", "greedy", "kyn", "kynn", "dnc", "best"}) {
    auto* c = approx->add_subcommand(name);
    c->add_option("instance", instance)->required();
    c->add_option("--assign-out", assign_out);
    approx_cmds[name] = c;
  }
  approx_cmds["kyn"]->add_option("--a0", a0, "Centre vertex (default: argmax |E(N(a))|)");
  approx_cmds["kyn"]->add_option("--sigma", sigma, "Symbol for a0 (default: smallest surviving)");
  approx_cmds["kynn"]->add_option("--a0", a0, "Centre vertex (default: argmax h*)");
  approx_cmds["kynn"]->add_flag("--uniform", uniform_variant, "Uniform-preimage variant");
  approx_cmds["dnc"]->add_flag("--uniform", uniform_variant, "Uniform-preimage variant");

  // smooth ------------------------------------------------------------------
  auto* smooth = app.add_subcommand("smooth", "Smooth-game algorithms");
  smooth->require_subcommand(1);
  std::string mu_text, c1_text = "4";
  int max_sample = 64;
  auto* sm_measure = smooth->add_subcommand("measure", "Exact smoothness");
  sm_measure->add_option("instance", instance)->required();
  auto* sm_exact = smooth->add_subcommand("exact", "Randomized exact algorithm");
  sm_exact->add_option("instance", instance)->required();
  sm_exact->add_option("--mu", mu_text, "Smoothness parameter (default: max(measured, 1/min degree))");
  sm_exact->add_option("--c1", c1_text, "Sampling constant (>= 1)");
  sm_exact->add_option("--max-sample", max_sample, "Largest admissible |B*|");
  sm_exact->add_option("--assign-out", assign_out);
  auto* sm_approx = smooth->add_subcommand("approx", "Constant-factor algorithm");
  sm_approx->add_option("instance", instance)->required();
  sm_approx->add_option("--mu", mu_text, "Smoothness parameter (default: max(measured, 1/min degree))");
  sm_approx->add_option("--assign-out", assign_out);

  // ptas --------------------------------------------------------------------
  auto* ptas_cmd = app.add_subcommand("ptas", "Layered thinning + tree DP");
  std::string eps_text = "1/2";
  lc::PtasOptions popt;
  ptas_cmd->add_option("instance", instance)->required();
  ptas_cmd->add_option("--eps", eps_text, "Epsilon in (0, 1]");
  ptas_cmd->add_flag("--force-nonplanar", popt.force_nonplanar, "Skip the Euler edge-bound check");
  ptas_cmd->add_option("--h-override", popt.h_override, "Number of classes");
  ptas_cmd->add_option("--assign-out", assign_out);

  // reduce ------------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "Reductions to projection games");
  reduce->require_subcommand(1);
  std::string extract;
  auto* red_3col = reduce->add_subcommand("3col", "colgraph v1 -> labelcover v1");
  red_3col->add_option("graph", instance)->required();
  red_3col->add_option("--extract", extract, "Read an assignment of the reduced game and report the colouring");
  auto* red_tiling = reduce->add_subcommand("tiling", "matrixtiling v1 -> labelcover v1");
  red_tiling->add_option("tiling", instance)->required();
  red_tiling->add_option("--extract", extract, "Read an assignment of the reduced game and report the tiling");

  // verify / bench -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Count satisfied edges");
  verify->add_option("instance", instance)->required();
  verify->add_option("assignment", second)->required();
  auto* bench = app.add_subcommand("bench", "Run the approximation suite over a directory of .lc files");
  bench->add_option("corpus", instance)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  // ---------------------------------------------------------------------------
  if (gen->parsed()) {
    std::string text;
    lc::Assignment plant;
    bool has_plant = false;
    if (gen_random->parsed()) {
      auto r = lc::gen_random_satisfiable(go.na, go.nb, go.ka, go.kb, go.degree, g.seed, go.uniform);
      text = lc::emit_game(r.game);
      plant = r.plant;
      has_plant = true;
    } else if (gen_smooth->parsed()) {
      auto r = lc::gen_smooth(go.na, go.nb, go.ka, go.kb, go.degree, parse_rational(go.mu_target), g.seed);
      text = "# measured smoothness " + rational_text(r.smoothness.mu) + "\n" + lc::emit_game(r.game);
      plant = r.plant;
      has_plant = true;
    } else if (gen_grid->parsed()) {
      auto r = lc::gen_planar_grid(go.rows, go.cols, go.ka, go.kb, g.seed);
      text = lc::emit_game(r.game);
      plant = r.plant;
      has_plant = true;
    } else if (gen_3col->parsed()) {
      auto graph = go.nonplanar ? lc::gen_random_coloring_graph(go.n, parse_rational(go.edge_p), g.seed)
                                : lc::gen_planar_coloring_graph(go.n, parse_rational(go.drop), g.seed);
      text = lc::emit_coloring_graph(graph);
    } else {
      text = lc::emit_tiling(lc::gen_matrix_tiling(go.k, go.n, parse_rational(go.density), g.seed));
    }
    if (has_plant && !go.plant.empty()) lc::write_file(go.plant, lc::emit_assignment(plant));
    emit(g, text);
    return 0;
  }

  if (stats->parsed()) {
    const auto lg = load_game(instance);
    ordered_json j = record("stats", &lg);
    j["stats"] = stats_json(lg.game);
    if (g.json) {
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& [k, v] : j["stats"].items()) std::cout << k << ": " << v.dump() << '\n';
    }
    return 0;
  }

  if (solve->parsed()) {
    const auto lg = load_game(instance);
    if (solve_exact->parsed()) {
      const auto r = lc::timed(lg.game, [&] {
        const auto ex = lc::brute_force_opt(lg.game, g.enum_cap);
        lc::SolveReport rep;
        rep.algorithm = "exact";
        rep.assignment = ex.assignment;
        rep.guarantee = lc::Rational(ex.value);
        return rep;
      });
      print_report(g, "solve exact", lg, r, assign_out);
    } else {
      const lc::TreeDecomposition td =
          td_in.empty() ? lc::heuristic_decomposition(lg.game) : lc::parse_decomposition(lc::read_file(td_in));
      if (!td_out.empty()) lc::write_file(td_out, lc::emit_decomposition(td));
      std::uint64_t states = 0;
      const auto r = lc::timed(lg.game, [&] {
        const auto dp = lc::tree_dp_solve(lg.game, td, std::min<std::uint64_t>(g.enum_cap, lc::kDefaultDpStateCap * 16));
        states = dp.states;
        lc::SolveReport rep;
        rep.algorithm = "dp";
        rep.assignment = dp.assignment;
        rep.guarantee = lc::Rational(dp.value);
        return rep;
      });
      if (g.json) {
        ordered_json j = record("solve dp", &lg);
        j.update(report_json(r, lg.game, g));
        j["width"] = td.width();
        j["bags"] = td.bags.size();
        j["states"] = states;
        if (!assign_out.empty()) lc::write_file(assign_out, lc::emit_assignment(r.assignment));
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "width: " << td.width() << "\nstates: " << states << '\n';
        print_report(g, "solve dp", lg, r, assign_out);
      }
    }
    return 0;
  }

  if (approx->parsed()) {
    const auto lg = load_game(instance);
    const lc::Analysis an(lg.game);
    lc::SolveReport r;
    std::string name;
    for (const auto& [n, c] : approx_cmds)
      if (c->parsed()) name = n;
    if (name == "one-neighbor") {
      r = lc::satisfy_one_neighbor(lg.game);
    } else if (name == "greedy") {
      r = lc::greedy_assignment(lg.game, an.stats);
    } else if (name == "kyn") {
      const int a = a0 >= 0 ? a0 : an.stats.e_n_argmax;
      if (a >= lg.game.a_count()) throw lc::Error("--a0 out of range");
      lc::Symbol s = sigma;
      if (s < 0) {
        const auto& entries = an.star.per_a[static_cast<std::size_t>(a)];
        if (entries.empty()) throw lc::NotInSigmaStar("no surviving symbol for a" + std::to_string(a) + "; the game is unsatisfiable");
        s = entries.front().sigma;
      }
      r = lc::know_your_neighbors(lg.game, a, s, an);
    } else if (name == "kynn") {
      const int a = a0 >= 0 ? a0 : (uniform_variant ? an.stats.h_argmax : an.star.h_star_argmax_a);
      r = uniform_variant ? lc::know_neighbors_neighbors_uniform(lg.game, a, an) : lc::know_neighbors_neighbors(lg.game, a, an);
    } else if (name == "dnc") {
      r = uniform_variant ? lc::divide_and_conquer_uniform(lg.game, an) : lc::divide_and_conquer(lg.game, an);
    } else {
      r = lc::best_of(lg.game, an);
    }
    print_report(g, "approx " + name, lg, r, assign_out);
    return 0;
  }

  if (smooth->parsed()) {
    const auto lg = load_game(instance);
    if (sm_measure->parsed()) {
      const auto rep = lc::measure_smoothness(lg.game);
      ordered_json j = record("smooth measure", &lg);
      j["mu_measured"] = rational_text(rep.mu);
      j["witness"] = rep.witness_a < 0 ? ordered_json(nullptr)
                                       : ordered_json{{"a", rep.witness_a}, {"sigma1", rep.witness_s1}, {"sigma2", rep.witness_s2}};
      std::vector<std::string> per_a;
      for (const auto& x : rep.per_a) per_a.push_back(rational_text(x));
      j["per_a"] = per_a;
      j["default_mu"] = rational_text(lc::default_mu(lg.game));
      if (g.json) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "mu_measured: " << rational_text(rep.mu) << '\n';
        if (rep.witness_a >= 0)
          std::cout << "witness: a" << rep.witness_a << " symbols " << rep.witness_s1 << ", " << rep.witness_s2 << '\n';
        std::cout << "default_mu: " << rational_text(lc::default_mu(lg.game)) << '\n';
      }
      return 0;
    }
    const lc::Rational mu = mu_text.empty() ? lc::default_mu(lg.game) : parse_rational(mu_text);
    if (sm_exact->parsed()) {
      lc::SmoothExactOptions opt;
      opt.c1 = parse_rational(c1_text);
      opt.max_sample = max_sample;
      opt.node_cap = g.enum_cap;
      const auto b_star = lc::sample_b_star(lg.game, mu, opt.c1, g.seed);
      const auto r = lc::timed(lg.game, [&] {
        lc::SolveReport rep;
        rep.algorithm = "smooth-exact";
        rep.assignment = lc::smooth_exact(lg.game, mu, g.seed, opt);
        rep.guarantee = lc::Rational(lg.game.edge_count());
        rep.seed = g.seed;
        return rep;
      });
      if (g.json) {
        ordered_json j = record("smooth exact", &lg);
        j["mu"] = rational_text(mu);
        j["c1"] = rational_text(opt.c1);
        j["sample_size"] = b_star.size();
        j.update(report_json(r, lg.game, g));
        if (!assign_out.empty()) lc::write_file(assign_out, lc::emit_assignment(r.assignment));
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "mu: " << rational_text(mu) << "\nsample_size: " << b_star.size() << '\n';
        print_report(g, "smooth exact", lg, r, assign_out);
      }
      return 0;
    }
    const auto res = lc::smooth_approx(lg.game, mu, g.enum_cap);
    if (g.json) {
      ordered_json j = record("smooth approx", &lg);
      j["regime"] = res.regime;
      j["mu"] = rational_text(res.mu);
      j["sample_size"] = res.b_star.size();
      j["sample_bound"] = res.b_star_bound ? ordered_json(*res.b_star_bound) : ordered_json(nullptr);
      j.update(report_json(res.report, lg.game, g));
      if (!assign_out.empty()) lc::write_file(assign_out, lc::emit_assignment(res.report.assignment));
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "regime: " << res.regime << "\nmu: " << rational_text(res.mu) << "\nsample_size: " << res.b_star.size() << '\n';
      print_report(g, "smooth approx", lg, res.report, assign_out);
    }
    return 0;
  }

  if (ptas_cmd->parsed()) {
    const auto lg = load_game(instance);
    popt.state_cap = std::min<std::uint64_t>(g.enum_cap, lc::kDefaultDpStateCap * 16);
    const auto r = lc::ptas(lg.game, parse_rational(eps_text), popt);
    print_report(g, "ptas", lg, r, assign_out);
    return 0;
  }

  if (reduce->parsed()) {
    const std::string text = lc::read_file(instance);
    if (red_3col->parsed()) {
      const auto graph = lc::parse_coloring_graph(text);
      const auto game = lc::from_planar_3col(graph);
      if (extract.empty()) {
        emit(g, lc::emit_game(game));
        return 0;
      }
      const auto ex = lc::extract_coloring(graph, game, lc::parse_assignment(lc::read_file(extract)));
      ordered_json j = record("reduce 3col --extract", nullptr);
      j["colors"] = ex.colors;
      j["proper"] = ex.complete();
      j["violated_edges"] = ex.violated;
      if (g.json) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "proper: " << (ex.complete() ? "yes" : "no") << "\ncolors:";
        for (int c : ex.colors) std::cout << ' ' << c;
        std::cout << "\nviolated_edges: " << ex.violated.size() << '\n';
      }
      return 0;
    }
    const auto tiling = lc::parse_tiling(text);
    const auto game = lc::from_matrix_tiling(tiling);
    if (extract.empty()) {
      emit(g, lc::emit_game(game));
      return 0;
    }
    const auto phi = lc::parse_assignment(lc::read_file(extract));
    const auto sol = lc::extract_tiling(tiling, game, phi);
    const int unsat = game.edge_count() - lc::value(game, phi);
    if (g.json) {
      ordered_json j = record("reduce tiling --extract", nullptr);
      std::vector<std::string> cells;
      for (const auto& c : sol.cells) cells.push_back(c ? std::to_string(c->first) + "," + std::to_string(c->second) : "*");
      j["cells"] = cells;
      j["stars"] = sol.stars();
      j["unsatisfied_edges"] = unsat;
      j["valid"] = lc::tiling_violations(tiling, sol).empty();
      std::cout << j.dump(2) << '\n';
    } else {
      emit(g, lc::emit_tiling_solution(tiling, sol));
    }
    return 0;
  }

  if (verify->parsed()) {
    const auto lg = load_game(instance);
    const auto phi = lc::parse_assignment(lc::read_file(second));
    const int v = lc::value(lg.game, phi);
    if (g.json) {
      ordered_json j = record("verify", &lg);
      j["satisfied"] = v;
      j["edges"] = lg.game.edge_count();
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "satisfied = " << v << " / " << lg.game.edge_count() << '\n';
    }
    return 0;
  }

  // bench
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(instance))
    if (entry.is_regular_file() && entry.path().extension() == ".lc") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  struct Summary {
    int runs = 0;
    double fraction_sum = 0;
    double min_scaled = 1e300;
  };
  std::map<std::string, Summary> summary;
  const std::vector<std::string> order = {"one-neighbor", "greedy", "kyn", "kynn", "dnc", "best"};
  for (const auto& path : files) {
    const auto lg = load_game(path.string());
    if (lg.game.edge_count() == 0) continue;
    const lc::Analysis an(lg.game);
    const lc::SolveReport best = lc::best_of(lg.game, an);
    std::vector<lc::SolveReport> runs = best.breakdown;
    runs.push_back(best);
    const double scale = std::pow(static_cast<double>(lg.game.a_count()) * lg.game.sigma_a(), 0.25);
    for (const auto& r : runs) {
      const double fraction = static_cast<double>(r.satisfied) / lg.game.edge_count();
      auto& s = summary[r.algorithm];
      ++s.runs;
      s.fraction_sum += fraction;
      s.min_scaled = std::min(s.min_scaled, fraction * scale);
      ordered_json j{{"instance", path.filename().string()},
                     {"digest", lg.digest},
                     {"algorithm", r.algorithm},
                     {"satisfied", r.satisfied},
                     {"edges", lg.game.edge_count()},
                     {"guarantee", rational_text(r.guarantee)},
                     {"fraction", fraction},
                     {"fraction_times_root4_nk", fraction * scale}};
      if (r.algorithm == "best") j["composite_bound_met"] = lc::meets_composite_bound(lg.game, r.satisfied);
      if (g.timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
      if (g.json) std::cout << j.dump() << '\n';
      else
        std::cout << std::left << std::setw(28) << path.filename().string() << std::setw(14) << r.algorithm << r.satisfied << '/'
                  << lg.game.edge_count() << '\n';
    }
  }
  std::cout << (g.json ? "# " : "") << "summary over " << files.size() << " instances: algorithm, mean fraction, min fraction*(nA*kA)^(1/4)\n";
  for (const auto& name : order) {
    auto it = summary.find(name);
    if (it == summary.end()) continue;
    std::cout << (g.json ? "# " : "") << std::left << std::setw(14) << name << std::fixed << std::setprecision(4)
              << it->second.fraction_sum / it->second.runs << "  " << it->second.min_scaled << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const lc::GameError& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return 2;
  } catch (const lc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
