// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [--seed S] [--dump DIR] [--data DIR]
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iterator>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mwist/approx_half.hpp"
#include "mwist/bench.hpp"
#include "mwist/clawfree.hpp"
#include "mwist/error.hpp"
#include "mwist/gen.hpp"
#include "mwist/graph_io.hpp"
#include "mwist/matching.hpp"
#include "mwist/operation1.hpp"
#include "mwist/oracle.hpp"
#include "mwist/settle.hpp"

using namespace mwist;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Options {
  std::uint64_t seed = 20240601;
  fs::path dump = "acceptance_dumps";
  fs::path data = MWIST_TEST_DATA;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

const char* const weight_mix[] = {"uniform:0:9", "uniform:1:100", "zipf:1.3", "zeroheavy:0.4"};

WeightDist mix(std::uint64_t i) { return parse_weights(weight_mix[i % 4]); }

std::uint64_t draw(std::uint64_t seed, std::uint64_t i, std::uint64_t salt, std::uint64_t range) {
  return splitmix64(instance_seed(seed, i) ^ salt) % range;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string dump(const Options& o, const std::string& tag, const Graph& g) {
  fs::create_directories(o.dump);
  const auto p = o.dump / (tag + ".txt");
  save_graph(p, g);
  return p.string();
}

// Random instances with 2..8 vertices from every family.
std::vector<Graph> small_corpus(std::uint64_t seed, int count) {
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t i = 0; static_cast<int>(out.size()) < count; ++i) {
    GenSpec s;
    s.family = all_families[i % std::size(all_families)];
    s.weights = mix(i / std::size(all_families));
    s.seed = instance_seed(seed, i);
    switch (s.family) {
      case Family::line_graph:
        s.n = 3 + static_cast<int>(draw(seed, i, 1, 4));
        s.m = std::max(2, s.n - 1) + static_cast<int>(draw(seed, i, 2, 8 - s.n + 2));
        s.m = std::min({s.m, 8, s.n * (s.n - 1) / 2});
        break;
      case Family::planted_hangers:
        s.n = 2 + static_cast<int>(draw(seed, i, 1, 2));
        s.m = s.n - 1 + static_cast<int>(draw(seed, i, 2, s.n == 3 ? 2 : 1));
        break;
      case Family::cycle:
        s.n = 3 + static_cast<int>(draw(seed, i, 1, 6));
        break;
      default:
        s.n = 2 + static_cast<int>(draw(seed, i, 1, 7));
        s.m = s.n - 1 + static_cast<int>(draw(seed, i, 2, s.n * (s.n - 1) / 2 - s.n + 2));
        break;
    }
    Graph g = generate(s);
    if (g.n() >= 2 && g.n() <= 8) out.push_back(std::move(g));
  }
  return out;
}

// Line graphs of random connected graphs on up to 60 vertices; a quarter of
// them small enough for the oracle.
std::vector<Graph> claw_free_corpus(std::uint64_t seed, int count) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    GenSpec s;
    s.family = Family::line_graph;
    s.weights = mix(static_cast<std::uint64_t>(i));
    s.seed = instance_seed(seed ^ 0x4c47, static_cast<std::uint64_t>(i));
    if (i % 4 == 0) {
      s.n = 3 + static_cast<int>(draw(seed, i, 3, 5));
      s.m = std::min(10, s.n - 1 + static_cast<int>(draw(seed, i, 4, s.n * (s.n - 1) / 2 - s.n + 2)));
    } else {
      s.n = 8 + static_cast<int>(draw(seed, i, 3, 53));
      s.m = std::min(s.n * (s.n - 1) / 2, s.n - 1 + static_cast<int>(draw(seed, i, 4, s.n + 1)));
    }
    out.push_back(generate(s));
  }
  return out;
}

// Criteria 1 and 2 share the corpus and the oracle runs.
std::pair<Outcome, Outcome> criteria_1_2(const Options& o) {
  const auto corpus = small_corpus(o.seed, 10000);
  long bound_bad = 0, opt_bad = 0, tree_bad = 0, upper_bad = 0, literal_below = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    const auto h = approx_half(g);
    const Weight wt = internal_weight(g, h.tree);
    const Weight opt = exact_mwist(g).opt;
    const Weight m_norm = max_weight_matching(normalize_leaves(g).graph).weight;
    const Weight m_orig = max_weight_matching(g).weight;
    const bool tree_ok = is_spanning_tree(g, h.tree.edges) && wt == h.certificate.tree_weight;
    const bool bound_ok = 2 * wt >= m_norm;
    const bool opt_ok = 2 * wt >= opt;
    const bool upper_ok = opt <= m_norm && opt <= m_orig;
    literal_below += 2 * wt < m_orig;
    if (!tree_ok || !bound_ok || !opt_ok) dump(o, "c1_" + std::to_string(i), g);
    if (!upper_ok) dump(o, "c2_" + std::to_string(i), g);
    tree_bad += !tree_ok;
    bound_bad += !bound_ok;
    opt_bad += !opt_ok;
    upper_bad += !upper_ok;
  }
  std::ostringstream d1, d2;
  d1 << corpus.size() << " instances, n in [2,8]; 2w(T) < w(M*): " << bound_bad
     << ", 2w(T) < OPT: " << opt_bad << ", bad trees: " << tree_bad
     << " (M* of the leaf-normalized graph; against the raw input's M* "
     << literal_below << " fall short, all from weight on leaves)";
  d2 << corpus.size() << " oracle-solved instances; OPT > w(M*): " << upper_bad;
  return {{bound_bad + opt_bad + tree_bad == 0, d1.str()}, {upper_bad == 0, d2.str()}};
}

Outcome criterion_3(const Options& o) {
  long graphs = 0, trees = 0, bad = 0;
  for (std::uint64_t i = 0; graphs < 240; ++i) {
    GenSpec s;
    s.family = Family::random_gnm;
    s.n = 2 + static_cast<int>(draw(o.seed, i, 5, 6));
    s.m = s.n - 1 + static_cast<int>(draw(o.seed, i, 6, s.n * (s.n - 1) / 2 - s.n + 2));
    s.weights = mix(i);
    s.seed = instance_seed(o.seed ^ 0x7472, i);
    const Graph g = generate(s);
    ++graphs;
    bool dumped = false;
    enumerate_spanning_trees(g, [&](std::span<const Edge> es, std::span<const int>) {
      SpanningTree t{{es.begin(), es.end()}};
      const Matching m = tree_to_matching(g, t);
      Weight mw = 0;
      for (const auto& e : m.edges) mw += g.weight(e.u) + g.weight(e.v);
      const bool ok = is_matching(g, m.edges) && mw == m.weight && mw >= internal_weight(g, t);
      ++trees;
      if (!ok) {
        ++bad;
        if (!dumped) dump(o, "c3_" + std::to_string(i), g);
        dumped = true;
      }
    });
  }
  std::ostringstream d;
  d << graphs << " graphs with n <= 7, " << trees << " spanning trees; violations: " << bad;
  return {bad == 0 && graphs >= 200, d.str()};
}

struct ClawFreeStats {
  long instances = 0, oracle_checked = 0, cert_bad = 0, opt_bad = 0, literal_bad = 0,
       literal_small = 0, literal_opt = 0, tree_bad = 0, reduced_bad = 0;
  long claw_fired = 0, exhausted = 0, cert_thrown = 0, other_errors = 0, rescues = 0;
  std::map<std::string, long> coverage;
  std::map<std::string, long> rescued_in;
};

ClawFreeStats run_claw_free(const Options& o, const std::vector<Graph>& corpus) {
  ClawFreeStats st;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    const std::string tag = "c4_" + std::to_string(i);
    ++st.instances;
    try {
      const auto r = approx_7_12(g);
      const Weight wt = internal_weight(g, r.tree);
      const bool tree_ok = is_spanning_tree(g, r.tree.edges) && wt == r.certificate.tree_weight;
      const bool cert_ok = r.certificate.holds() &&
                           r.certificate.ratio == (r.used_oracle ? ratio_exact : ratio_seven_twelfths);
      const bool reduced_ok = r.used_oracle || 12 * r.reduced_tree_weight >= 7 * r.mstar_reduced;
      const Weight m_input = max_weight_matching(normalize_leaves(g).graph).weight;
      bool opt_ok = true;
      Weight opt = -1;
      if (g.n() <= 10) {
        ++st.oracle_checked;
        opt = exact_mwist(g).opt;
        opt_ok = 12 * wt >= 7 * opt && r.certificate.upper_bound >= opt;
      }
      if (12 * wt < 7 * m_input) {
        ++st.literal_bad;
        st.literal_small += r.used_oracle;
        st.literal_opt += opt >= 0 && 12 * opt < 7 * m_input;
      }
      if (!tree_ok || !cert_ok || !opt_ok || !reduced_ok) dump(o, tag, g);
      st.tree_bad += !tree_ok;
      st.cert_bad += !cert_ok;
      st.opt_bad += !opt_ok;
      st.reduced_bad += !reduced_ok;
      st.rescues += r.rescues;
      for (const auto& b : r.branches) {
        ++st.coverage[top_level_case(b)];
        if (b.ends_with(".rescue")) ++st.rescued_in[top_level_case(b)];
      }
    } catch (const claw_violation_error& e) {
      ++st.claw_fired;
      std::cerr << "structural assertion on " << dump(o, tag, g) << ": " << e.what() << "\n";
    } catch (const case_exhaustion_error& e) {
      ++st.exhausted;
      std::cerr << "no settling construction on " << dump(o, tag, g) << ": " << e.what() << "\n";
    } catch (const certificate_violation_error& e) {
      ++st.cert_thrown;
      std::cerr << "bound violated on " << dump(o, tag, g) << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
      ++st.other_errors;
      std::cerr << "error on " << dump(o, tag, g) << ": " << e.what() << "\n";
    }
  }
  return st;
}

Outcome criterion_4(const ClawFreeStats& st) {
  const long bad = st.cert_bad + st.opt_bad + st.tree_bad + st.reduced_bad + st.claw_fired +
                   st.exhausted + st.cert_thrown + st.other_errors;
  std::ostringstream d;
  d << st.instances << " line graphs (base n up to 60); 12w(T) < 7(w(M*) + sum tw): "
    << st.cert_bad << ", reduced 12w < 7w(M*): " << st.reduced_bad << ", oracle-checked "
    << st.oracle_checked << " with 12w(T) < 7 OPT: " << st.opt_bad
    << ", errors: " << st.claw_fired + st.exhausted + st.cert_thrown + st.other_errors
    << " (against M* of the unreduced input " << st.literal_bad << " fall short, "
    << st.literal_small << " of them solved exactly after reduction, " << st.literal_opt
    << " where even OPT is below 7/12 of it)";
  return {bad == 0, d.str()};
}

Outcome criterion_5(const ClawFreeStats& st) {
  const long fired = st.claw_fired + st.exhausted + st.cert_thrown;
  std::ostringstream d;
  d << "structural assertions: " << st.claw_fired << ", unsettled components: " << st.exhausted
    << ", bound assertions: " << st.cert_thrown << "; components settled by exchange search: "
    << st.rescues;
  for (const auto& [c, n] : st.rescued_in) d << " " << c << "=" << n;
  return {fired == 0, d.str()};
}

Outcome criterion_6(const Options& o) {
  long n = 0, bad = 0, records = 0;
  for (std::uint64_t i = 0; n < 600; ++i) {
    GenSpec s;
    s.family = Family::planted_hangers;
    s.n = 3 + static_cast<int>(draw(o.seed, i, 7, 10));
    s.m = s.n - 1 + static_cast<int>(draw(o.seed, i, 8, s.n));
    s.m = std::min(s.m, s.n * (s.n - 1) / 2);
    s.weights = mix(i);
    s.seed = instance_seed(o.seed ^ 0x6f70, i);
    const Graph g = generate(s);
    ++n;
    const auto red = apply_operation1(g);
    records += static_cast<long>(red.records.size());
    const auto rt = red.graph.n() <= 10 ? exact_mwist(red.graph).tree : approx_half(red.graph).tree;
    const auto full = undo_operation1(rt, red.records);
    const bool ok = !red.records.empty() && is_spanning_tree(g, full.edges) &&
                    internal_weight(g, full) == internal_weight(red.graph, rt) + red.total_tw;
    if (!ok) {
      ++bad;
      dump(o, "c6_" + std::to_string(i), g);
    }
  }
  std::ostringstream d;
  d << n << " planted instances, " << records << " reductions; violations: " << bad;
  return {bad == 0, d.str()};
}

Outcome criterion_7(const Options& o) {
  long n = 0, weight_bad = 0, card_bad = 0;
  for (std::uint64_t i = 0; n < 5000; ++i) {
    GenSpec s;
    s.family = Family::random_gnm;
    s.n = 2 + static_cast<int>(draw(o.seed, i, 9, 10));
    const int most = std::min(20, s.n * (s.n - 1) / 2);
    s.m = s.n - 1 + static_cast<int>(draw(o.seed, i, 10, most - s.n + 2));
    s.weights = mix(i);
    s.seed = instance_seed(o.seed ^ 0x6d61, i);
    const Graph g = generate(s);
    ++n;
    const auto lw = lift_edge_weights(g);
    const auto fast = max_weight_matching(g);
    const bool w_ok = is_matching(g, fast.edges) &&
                      fast.weight == brute_force_max_weight_matching(g, lw).weight;
    const auto card = max_cardinality_matching(g, g.edges());
    const bool c_ok = is_matching(g, card.edges) &&
                      static_cast<int>(card.edges.size()) == brute_force_max_cardinality(g, g.edges());
    if (!w_ok || !c_ok) dump(o, "c7_" + std::to_string(i), g);
    weight_bad += !w_ok;
    card_bad += !c_ok;
  }
  std::ostringstream d;
  d << n << " graphs with m <= 20; weight mismatches: " << weight_bad
    << ", cardinality mismatches: " << card_bad;
  return {weight_bad + card_bad == 0, d.str()};
}

// Cases a generic maximum matching never produces; reached with a tied one.
void hand_built(std::map<std::string, long>& cov) {
  const Graph g1({5, 5, 0, 0, 0}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  const auto s1 = build_stages(g1, Matching{{{0, 2}, {1, 3}}, 10});
  ++cov[top_level_case(settle(g1, s1, s1.component_of[0]).branch)];
  const Graph g2({5, 5, 5, 0, 0, 0}, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {0, 4}});
  const auto s2 = build_stages(g2, Matching{{{0, 3}, {1, 4}, {2, 5}}, 15});
  ++cov[top_level_case(settle(g2, s2, s2.component_of[0]).branch)];
}

Outcome criterion_8(const Options& o, const ClawFreeStats& st) {
  std::map<std::string, long> frozen;
  for (const auto& f : fs::directory_iterator(o.data / "coverage")) {
    const auto r = approx_7_12(load_instance(f.path()));
    for (const auto& b : r.branches) ++frozen[top_level_case(b)];
  }
  std::map<std::string, long> hand;
  hand_built(hand);
  std::ostringstream d;
  std::vector<std::string> missing, random_only_missing;
  for (const auto& c : settle_top_level_cases()) {
    const long a = st.coverage.count(c) ? st.coverage.at(c) : 0;
    const long b = frozen.count(c) ? frozen.at(c) : 0;
    const long h = hand.count(c) ? hand.at(c) : 0;
    if (a == 0) random_only_missing.push_back(c);
    if (a + b + h == 0) missing.push_back(c);
  }
  d << settle_top_level_cases().size() - missing.size() << "/" << settle_top_level_cases().size()
    << " top-level cases reached";
  d << "; not reached by the random corpus alone:";
  for (const auto& c : random_only_missing) d << " " << c;
  if (!missing.empty()) {
    d << "; never reached:";
    for (const auto& c : missing) d << " " << c;
  }
  d << "\n  coverage (corpus/frozen/hand):";
  for (const auto& c : settle_top_level_cases())
    d << " " << c << "=" << (st.coverage.count(c) ? st.coverage.at(c) : 0) << "/"
      << (frozen.count(c) ? frozen.at(c) : 0) << "/" << (hand.count(c) ? hand.at(c) : 0);
  return {missing.empty(), d.str()};
}

Outcome criterion_9(const Options& o) {
  GenSpec s;
  s.family = Family::random_gnm;
  s.n = 2000;
  s.m = 10000;
  s.weights = parse_weights("uniform:1:100");
  s.seed = o.seed;
  const auto t0 = Clock::now();
  const Graph g = generate(s);
  const auto h = approx_half(g);
  const double secs = seconds_since(t0);
  const bool ok = is_spanning_tree(g, h.tree.edges) && h.certificate.holds();
  char buf[128];
  std::snprintf(buf, sizeof buf, "n = 2000, m = 10000 solved in %.2f s (limit 10 s)", secs);
  return {ok && secs < 10.0, buf};
}

std::string fingerprint(const Options& o) {
  std::ostringstream out;
  const auto small = small_corpus(o.seed, 1500);
  for (const auto& g : small) {
    out << graph_to_string(g);
    out << graph_to_string(tree_as_graph(g, approx_half(g).tree));
  }
  const auto cf = claw_free_corpus(o.seed, 150);
  for (const auto& g : cf) {
    out << graph_to_string(g);
    out << graph_to_string(tree_as_graph(g, approx_7_12(g).tree));
  }
  std::vector<BenchInstance> insts;
  for (std::size_t i = 0; i < 200; ++i) insts.push_back({"s" + std::to_string(i), small[i]});
  for (std::size_t i = 0; i < 50; ++i) insts.push_back({"c" + std::to_string(i), cf[i]});
  BenchOptions bo;
  bo.threads = 1;
  write_csv(out, run_bench(insts, bo), false);
  return out.str();
}

Outcome criterion_10(const Options& o) {
  const std::string a = fingerprint(o), b = fingerprint(o);
  // the worker count must not leak into the output either
  std::vector<BenchInstance> insts;
  const auto small = small_corpus(o.seed, 300);
  for (std::size_t i = 0; i < small.size(); ++i) insts.push_back({"s" + std::to_string(i), small[i]});
  BenchOptions one, four;
  one.threads = 1;
  four.threads = 4;
  std::ostringstream c1, c4;
  write_csv(c1, run_bench(insts, one), false);
  write_csv(c4, run_bench(insts, four), false);
  std::ostringstream d;
  d << "two runs of " << a.size() << " bytes (instances, trees, csv) "
    << (a == b ? "identical" : "differ") << "; csv with 1 and 4 workers "
    << (c1.str() == c4.str() ? "identical" : "differ");
  return {a == b && c1.str() == c4.str(), d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string k = argv[i];
    if (k == "--seed") o.seed = std::stoull(argv[i + 1]);
    else if (k == "--dump") o.dump = argv[i + 1];
    else if (k == "--data") o.data = argv[i + 1];
    else {
      std::cerr << "unknown option " << k << "\n";
      return 2;
    }
  }
  int failed = 0;
  auto report = [&](int id, const Outcome& r, double secs) {
    std::printf("criterion %2d: %s  %s  [%.1f s]\n", id, r.pass ? "PASS" : "FAIL",
                r.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !r.pass;
  };
  auto timed = [&](int id, const std::function<Outcome()>& f) {
    const auto t0 = Clock::now();
    Outcome r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r = {false, std::string("aborted: ") + e.what()};
    }
    report(id, r, seconds_since(t0));
  };

  auto t0 = Clock::now();
  std::pair<Outcome, Outcome> c12;
  try {
    c12 = criteria_1_2(o);
  } catch (const std::exception& e) {
    c12 = {{false, std::string("aborted: ") + e.what()}, {false, "aborted with criterion 1"}};
  }
  const double t12 = seconds_since(t0);
  report(1, c12.first, t12);
  report(2, c12.second, 0);
  timed(3, [&] { return criterion_3(o); });

  t0 = Clock::now();
  const auto st = run_claw_free(o, claw_free_corpus(o.seed, 2000));
  report(4, criterion_4(st), seconds_since(t0));
  report(5, criterion_5(st), 0);
  timed(6, [&] { return criterion_6(o); });
  timed(7, [&] { return criterion_7(o); });
  timed(8, [&] { return criterion_8(o, st); });
  timed(9, [&] { return criterion_9(o); });
  timed(10, [&] { return criterion_10(o); });
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
