#include "mwist/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mwist/approx_half.hpp"
#include "mwist/bench.hpp"
#include "mwist/clawfree.hpp"
#include "mwist/error.hpp"
#include "mwist/gen.hpp"
#include "mwist/graph_io.hpp"
#include "mwist/matching.hpp"
#include "mwist/operation1.hpp"
#include "mwist/oracle.hpp"

namespace mwist {

namespace {

struct Config {
  std::string algo = "auto";
  std::uint64_t seed = 1;
  int oracle_budget = OracleBudget{}.max_vertices;
  std::string out;
  std::string family = "random_gnm";
  int n = 8;
  int m = -1;
  std::string weights = "uniform:0:9";
  int count = 1;
  int threads = 0;
  bool verbose = false;
  std::string input, tree;
  std::vector<std::string> inputs;
};

struct Solved {
  std::string algo;
  SpanningTree tree;
  RatioCertificate cert;
};

std::string claim(const std::string& key, const std::string& value) {
  return "claim " + key + " " + value;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw parse_error(0, "bad ratio '" + s + "'");
  return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

Weight mstar_weight(const Graph& g) { return max_weight_matching(normalize_leaves(g).graph).weight; }

// Upper bound on OPT that an algorithm's certificate is stated against, and
// the ratio it guarantees against it.
std::pair<Weight, Rational> recompute_bound(const Graph& g, const std::string& algo,
                                            const OracleBudget& b) {
  if (algo == "half") return {mstar_weight(g), ratio_half};
  if (algo == "exact") return {exact_mwist(g, b).opt, ratio_exact};
  if (algo == "clawfree712") {
    auto red = apply_operation1(normalize_leaves(g).graph);
    if (red.graph.n() < 5) return {exact_mwist(red.graph, b).opt + red.total_tw, ratio_exact};
    return {max_weight_matching(red.graph).weight + red.total_tw, ratio_seven_twelfths};
  }
  throw error("unknown algorithm '" + algo + "' in claims");
}

Solved solve(const Graph& g, const Config& cfg, std::ostream& err) {
  std::string algo = cfg.algo;
  if (algo == "auto") algo = g.n() >= 5 && is_claw_free(g) ? "clawfree712" : "half";
  OracleBudget budget;
  budget.max_vertices = cfg.oracle_budget;
  Solved s;
  s.algo = algo;
  if (algo == "half") {
    auto r = approx_half(g);
    s.tree = r.tree;
    s.cert = r.certificate;
  } else if (algo == "clawfree712") {
    auto r = approx_7_12(g);
    s.tree = r.tree;
    s.cert = r.certificate;
    if (cfg.verbose) {
      err << "reductions " << r.reductions << ", sum tw " << r.total_tw
          << (r.used_oracle ? ", reduced graph solved exactly" : "") << '\n';
      for (const auto& b : r.branches) err << "branch " << b << '\n';
    }
  } else if (algo == "exact") {
    if (g.n() > budget.max_vertices)
      throw std::invalid_argument("exact needs n <= " + std::to_string(budget.max_vertices) +
                                  " (raise --oracle-budget)");
    if (!is_connected(g)) throw disconnected_error("graph is disconnected");
    auto r = exact_mwist(g, budget);
    s.tree = r.tree;
    s.cert.tree_weight = r.opt;
    s.cert.matching_weight = mstar_weight(g);
    s.cert.upper_bound = r.opt;
    s.cert.ratio = ratio_exact;
    s.cert.optimum = r.opt;
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  return s;
}

int cmd_solve(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(cfg.input);
  const Solved s = solve(g, cfg, err);
  const auto& c = s.cert;
  std::vector<std::string> comments{
      claim("algorithm", s.algo),
      claim("w_tree", std::to_string(c.tree_weight)),
      claim("w_mstar", std::to_string(c.matching_weight)),
      claim("upper_bound", std::to_string(c.upper_bound)),
      claim("ratio", c.ratio.str()),
  };
  const Graph t = tree_as_graph(g, s.tree);
  if (cfg.out.empty()) {
    write_graph(out, t, comments);
  } else {
    save_graph(cfg.out, t, comments);
  }
  (cfg.out.empty() ? err : out) << "algorithm " << s.algo << "\nw(T) = " << c.tree_weight
                                << "\nw(M*) = " << c.matching_weight << "\nupper bound = "
                                << c.upper_bound << "\ncertified ratio " << c.ratio.str() << '\n';
  return exit_ok;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(cfg.input);
  const Graph t = parse_graph([&] {
    std::ifstream in(cfg.tree);
    if (!in) throw parse_error(0, "cannot open " + cfg.tree);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  if (t.n() != g.n()) {
    err << "invalid tree: " << t.n() << " vertices, instance has " << g.n() << '\n';
    return exit_certificate;
  }
  for (const auto& e : t.edges())
    if (!g.has_edge(e.u, e.v)) {
      err << "invalid tree: {" << e.u << "," << e.v << "} is not an edge of the instance\n";
      return exit_certificate;
    }
  if (!is_spanning_tree(g, t.edges())) {
    err << "invalid tree: " << t.m() << " edges do not form a spanning tree of " << g.n()
        << " vertices\n";
    return exit_certificate;
  }
  const Weight wt = internal_weight(g, t.edges());
  const Weight wm = mstar_weight(g);
  out << "tree valid\nw(T) = " << wt << "\nw(M*) = " << wm << '\n';

  std::map<std::string, std::string> claims;
  for (const auto& line : read_comments(cfg.tree)) {
    std::istringstream ls(line);
    std::string tag, key, value;
    if (ls >> tag >> key >> value && tag == "claim") claims[key] = value;
  }
  bool ok = true;
  auto mismatch = [&](const std::string& what, const std::string& claimed, Weight actual) {
    err << "mismatch: " << what << " claimed " << claimed << ", recomputed " << actual << '\n';
    ok = false;
  };
  if (claims.count("w_tree") && std::stoll(claims["w_tree"]) != wt)
    mismatch("w(T)", claims["w_tree"], wt);
  if (claims.count("w_mstar") && std::stoll(claims["w_mstar"]) != wm &&
      claims["algorithm"] != "clawfree712")
    mismatch("w(M*)", claims["w_mstar"], wm);
  if (claims.count("algorithm") && claims.count("ratio")) {
    OracleBudget b;
    b.max_vertices = cfg.oracle_budget;
    const auto [ub, ratio] = recompute_bound(g, claims["algorithm"], b);
    if (claims.count("upper_bound") && std::stoll(claims["upper_bound"]) != ub)
      mismatch("upper bound", claims["upper_bound"], ub);
    if (parse_rational(claims["ratio"]) != ratio) {
      err << "mismatch: ratio claimed " << claims["ratio"] << ", " << claims["algorithm"]
          << " guarantees " << ratio.str() << '\n';
      ok = false;
    }
    RatioCertificate c;
    c.tree_weight = wt;
    c.upper_bound = ub;
    c.ratio = ratio;
    if (!c.holds()) {
      err << "bound fails: w(T) = " << wt << " < " << c.ratio.str() << " of " << ub << '\n';
      ok = false;
    } else {
      out << "bound holds: w(T) = " << wt << " >= " << c.ratio.str() << " of " << ub << '\n';
    }
  }
  if (!ok) return exit_certificate;
  out << "OK\n";
  return exit_ok;
}

GenSpec spec_from(const Config& cfg, std::uint64_t seed) {
  GenSpec s;
  try {
    s.family = parse_family(cfg.family);
    s.weights = parse_weights(cfg.weights);
  } catch (const error& e) {
    throw std::invalid_argument(e.what());
  }
  s.n = cfg.n;
  s.m = cfg.m >= 0 ? cfg.m : std::max(cfg.n - 1, std::min(2 * cfg.n, cfg.n * (cfg.n - 1) / 2));
  s.seed = seed;
  return s;
}

std::vector<std::string> gen_comments(const GenSpec& s) {
  return {"family " + to_string(s.family) + " n " + std::to_string(s.n) + " m " +
              std::to_string(s.m) + " weights " + to_string(s.weights) + " seed " +
              std::to_string(s.seed)};
}

int cmd_gen(const Config& cfg, std::ostream& out, std::ostream&) {
  if (cfg.count == 1) {
    const auto s = spec_from(cfg, cfg.seed);
    const Graph g = generate(s);
    if (cfg.out.empty())
      write_graph(out, g, gen_comments(s));
    else
      save_graph(cfg.out, g, gen_comments(s));
    return exit_ok;
  }
  if (cfg.out.empty()) throw std::invalid_argument("--count > 1 needs --out DIR");
  std::filesystem::create_directories(cfg.out);
  for (int i = 0; i < cfg.count; ++i) {
    const auto s = spec_from(cfg, instance_seed(cfg.seed, i));
    char name[32];
    std::snprintf(name, sizeof name, "inst_%05d.txt", i);
    save_graph(std::filesystem::path(cfg.out) / name, generate(s), gen_comments(s));
  }
  out << "wrote " << cfg.count << " instances to " << cfg.out << '\n';
  return exit_ok;
}

int cmd_bench(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<BenchInstance> insts;
  std::vector<std::filesystem::path> files;
  for (const auto& in : cfg.inputs) {
    if (std::filesystem::is_directory(in)) {
      for (const auto& e : std::filesystem::directory_iterator(in))
        if (e.is_regular_file()) files.push_back(e.path());
    } else {
      files.push_back(in);
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) insts.push_back({f.stem().string(), load_instance(f)});
  if (cfg.inputs.empty()) {
    std::vector<GenSpec> specs;
    for (int i = 0; i < cfg.count; ++i) specs.push_back(spec_from(cfg, instance_seed(cfg.seed, i)));
    insts = generate_batch(specs);
  }
  BenchOptions opt;
  opt.oracle_budget.max_vertices = cfg.oracle_budget;
  opt.threads = cfg.threads;
  opt.run_712 = cfg.algo != "half";
  opt.run_half = cfg.algo != "clawfree712";
  if (!cfg.out.empty()) opt.dump_dir = std::filesystem::path(cfg.out).parent_path() / "violations";
  const auto rows = run_bench(insts, opt);
  if (cfg.out.empty()) {
    write_csv(out, rows);
  } else {
    std::ofstream f(cfg.out);
    write_csv(f, rows);
    out << "wrote " << rows.size() << " rows to " << cfg.out << '\n';
  }
  if (cfg.verbose) err << rows.size() << " instances, no violations\n";
  return exit_ok;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream&) {
  const Graph g = load_instance(cfg.input);
  const auto norm = normalize_leaves(g);
  out << "n = " << g.n() << ", m = " << g.m() << '\n';
  const auto cc = check_claw_free(g);
  if (cc.claw_free) {
    out << "claw-free: yes\n";
  } else {
    const auto& c = *cc.witness;
    out << "claw-free: no (centre " << c.center << ", leaves " << c.leaves[0] << " "
        << c.leaves[1] << " " << c.leaves[2] << ")\n";
  }
  const auto red = apply_operation1(norm.graph);
  out << "reductions: " << red.records.size() << ", sum tw = " << red.total_tw
      << ", reduced n = " << red.graph.n() << '\n';
  for (std::size_t i = 0; i < red.records.size(); ++i) {
    const auto& r = red.records[i];
    out << "  step " << i << ": cut vertex " << r.cut_vertex << ", removed {";
    for (std::size_t k = 0; k < r.removed_vertices.size(); ++k)
      out << (k ? "," : "") << r.removed_vertices[k];
    out << "}, tw = " << r.tw << '\n';
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-weight internal spanning tree approximations"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--oracle-budget", cfg.oracle_budget, "largest n for the exact oracle")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output path");
    sub->add_flag("-v", cfg.verbose, "verbose");
  };
  auto algo_opt = [&](CLI::App* sub) {
    sub->add_option("--algo", cfg.algo, "half | clawfree712 | exact | auto")
        ->check(CLI::IsMember({"half", "clawfree712", "exact", "auto"}));
  };
  auto gen_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family,
                    "random_gnm | line_graph | planted_hangers | path | cycle | star");
    sub->add_option("--n", cfg.n, "vertices (base graph for line_graph)");
    sub->add_option("--m", cfg.m, "edges (base graph for line_graph)");
    sub->add_option("--weights", cfg.weights, "uniform:lo:hi | zipf:s | zeroheavy:p");
    sub->add_option("--count", cfg.count, "number of instances")->check(CLI::PositiveNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "approximate or solve an instance");
  solve_cmd->add_option("instance", cfg.input)->required();
  algo_opt(solve_cmd);
  common(solve_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "check a tree and its claims");
  verify_cmd->add_option("instance", cfg.input)->required();
  verify_cmd->add_option("tree", cfg.tree)->required();
  common(verify_cmd);
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_opts(gen_cmd);
  common(gen_cmd);
  auto* bench_cmd = app.add_subcommand("bench", "run solvers over instances, write CSV");
  bench_cmd->add_option("inputs", cfg.inputs, "instance files or directories");
  bench_cmd->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  algo_opt(bench_cmd);
  gen_opts(bench_cmd);
  common(bench_cmd);
  auto* check_cmd = app.add_subcommand("check", "claw-freeness and reducible configurations");
  check_cmd->add_option("instance", cfg.input)->required();
  common(check_cmd);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*solve_cmd) return cmd_solve(cfg, out, err);
    if (*verify_cmd) return cmd_verify(cfg, out, err);
    if (*gen_cmd) return cmd_gen(cfg, out, err);
    if (*bench_cmd) return cmd_bench(cfg, out, err);
    if (*check_cmd) return cmd_check(cfg, out, err);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const disconnected_error& e) {
    err << "disconnected: " << e.what() << '\n';
    return exit_disconnected;
  } catch (const not_claw_free_error& e) {
    err << "not claw-free: " << e.what() << "; use --algo half\n";
    return exit_usage;
  } catch (const bench_violation& e) {
    err << "violation: " << e.what() << '\n';
    return exit_certificate;
  } catch (const certificate_violation_error& e) {
    err << "certificate violation: " << e.what() << '\n';
    return exit_certificate;
  } catch (const invalid_tree_error& e) {
    err << "invalid tree: " << e.what() << '\n';
    return exit_certificate;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const retries_exhausted_error& e) {
    err << "generation failed: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_certificate;
  }
  return exit_usage;
}

}  // namespace mwist
