#include "mwist/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "mwist/approx_half.hpp"
#include "mwist/clawfree.hpp"
#include "mwist/error.hpp"
#include "mwist/graph_io.hpp"
#include "mwist/matching.hpp"

namespace mwist {

const char* const bench_csv_header =
    "id,n,m,claw_free,w_mstar,w_half,w_712,opt,ratio_half_num,ratio_half_den,ratio_712_num,"
    "ratio_712_den,ms_match,ms_half,ms_712,ms_oracle";

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

[[noreturn]] void fail(const BenchInstance& inst, const BenchOptions& opt, const std::string& what) {
  std::error_code ec;
  std::filesystem::create_directories(opt.dump_dir, ec);
  auto path = opt.dump_dir / (inst.id + ".txt");
  save_graph(path, inst.graph, {"violation: " + what});
  throw bench_violation(inst.id, path, what);
}

bool ge(Weight lhs_num, Weight lhs, Weight rhs_num, Weight rhs) {
  return static_cast<__int128>(lhs_num) * lhs >= static_cast<__int128>(rhs_num) * rhs;
}

}  // namespace

BenchRow bench_one(const BenchInstance& inst, const BenchOptions& opt) {
  const Graph& g = inst.graph;
  BenchRow row;
  row.id = inst.id;
  row.n = g.n();
  row.m = g.m();
  try {
    if (!is_connected(g)) throw disconnected_error("graph is disconnected");
    auto norm = normalize_leaves(g);
    row.claw_free = is_claw_free(norm.graph);
    auto t0 = Clock::now();
    const Matching mstar = max_weight_matching(norm.graph);
    row.ms_match = ms_since(t0);
    row.w_mstar = mstar.weight;

    if (opt.run_half) {
      t0 = Clock::now();
      auto r = approx_half(g, mstar);
      row.ms_half = ms_since(t0);
      row.w_half = r.certificate.tree_weight;
      row.ratio_half = Rational{r.certificate.tree_weight, r.certificate.upper_bound};
      if (!ge(2, *row.w_half, 1, row.w_mstar)) fail(inst, opt, "2*w(T_half) < w(M*)");
    }
    if (opt.run_712 && row.claw_free) {
      t0 = Clock::now();
      auto r = approx_7_12(g);
      row.ms_712 = ms_since(t0);
      row.w_712 = r.certificate.tree_weight;
      row.ratio_712 = Rational{r.certificate.tree_weight, r.certificate.upper_bound};
      if (!r.certificate.holds()) fail(inst, opt, "7/12 certificate fails");
    }
    if (opt.run_oracle && g.n() <= opt.oracle_budget.max_vertices) {
      t0 = Clock::now();
      try {
        auto ex = exact_mwist(g, opt.oracle_budget);
        row.ms_oracle = ms_since(t0);
        row.opt = ex.opt;
      } catch (const budget_exceeded_error&) {
      }
    }
  } catch (const bench_violation&) {
    throw;
  } catch (const std::exception& e) {
    fail(inst, opt, e.what());
  }
  if (row.opt) {
    if (*row.opt > row.w_mstar) fail(inst, opt, "OPT > w(M*)");
    if (row.w_half && !ge(2, *row.w_half, 1, *row.opt)) fail(inst, opt, "2*w(T_half) < OPT");
    if (row.w_712 && !ge(12, *row.w_712, 7, *row.opt)) fail(inst, opt, "12*w(T_712) < 7*OPT");
  }
  if (!row_consistent(row)) fail(inst, opt, "row fails its own ratio check");
  return row;
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const BenchOptions& opt) {
  const std::size_t k = instances.size();
  std::vector<BenchRow> rows(k);
  std::vector<std::exception_ptr> errors(k);
  std::atomic<std::size_t> next{0};
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(k)));
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < k;) {
      try {
        rows[i] = bench_one(instances[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<BenchInstance> generate_batch(const std::vector<GenSpec>& specs,
                                          const std::string& prefix) {
  std::vector<BenchInstance> out;
  out.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i)
    out.push_back({prefix + std::to_string(i), generate(specs[i])});
  return out;
}

namespace {

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return buf;
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_timing) {
  out << bench_csv_header << '\n';
  for (const auto& r : rows) {
    auto num = [](const std::optional<Rational>& q) {
      return q ? std::optional<std::int64_t>(q->num) : std::nullopt;
    };
    auto den = [](const std::optional<Rational>& q) {
      return q ? std::optional<std::int64_t>(q->den) : std::nullopt;
    };
    out << r.id << ',' << r.n << ',' << r.m << ',' << (r.claw_free ? 1 : 0) << ',' << r.w_mstar
        << ',' << cell(r.w_half) << ',' << cell(r.w_712) << ',' << cell(r.opt) << ','
        << cell(num(r.ratio_half)) << ',' << cell(den(r.ratio_half)) << ','
        << cell(num(r.ratio_712)) << ',' << cell(den(r.ratio_712)) << ',';
    if (with_timing)
      out << cell(r.ms_match) << ',' << cell(r.ms_half) << ',' << cell(r.ms_712) << ','
          << cell(r.ms_oracle);
    else
      out << ",,,";
    out << '\n';
  }
}

bool row_consistent(const BenchRow& r) {
  if (r.ratio_half) {
    if (!r.w_half || r.ratio_half->num != *r.w_half) return false;
    if (!ge(2, r.ratio_half->num, 1, r.ratio_half->den)) return false;
  }
  if (r.ratio_712) {
    if (!r.w_712 || r.ratio_712->num != *r.w_712) return false;
    if (!ge(12, r.ratio_712->num, 7, r.ratio_712->den) &&
        !(r.ratio_712->num == r.ratio_712->den))
      return false;
  }
  return true;
}

}  // namespace mwist
