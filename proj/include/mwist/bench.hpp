#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mwist/certificate.hpp"
#include "mwist/gen.hpp"
#include "mwist/graph.hpp"
#include "mwist/oracle.hpp"

namespace mwist {

struct BenchInstance {
  std::string id;
  Graph graph;
};

struct BenchOptions {
  bool run_half = true;
  bool run_712 = true;      // only on claw-free instances
  bool run_oracle = true;   // only within the budget
  OracleBudget oracle_budget;
  int threads = 0;          // 0: hardware concurrency
  std::filesystem::path dump_dir = "violations";
};

struct BenchRow {
  std::string id;
  int n = 0, m = 0;
  bool claw_free = false;
  Weight w_mstar = 0;  // normalized input graph
  std::optional<Weight> w_half, w_712, opt;
  // w(T) against the certified upper bound, unreduced
  std::optional<Rational> ratio_half, ratio_712;
  std::optional<double> ms_match, ms_half, ms_712, ms_oracle;
};

// A failed certificate or solver error. The instance has been written to
// dump_path.
struct bench_violation : std::runtime_error {
  bench_violation(const std::string& id, const std::filesystem::path& dump, const std::string& what)
      : std::runtime_error("instance " + id + ": " + what + " (dumped to " + dump.string() + ")"),
        dump_path(dump) {}
  std::filesystem::path dump_path;
};

BenchRow bench_one(const BenchInstance& inst, const BenchOptions& opt);

// Rows come back in input order. The first failing instance (lowest index)
// is rethrown after all workers stop.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const BenchOptions& opt);

// Instances for a batch of specs, with ids "<prefix><index>".
std::vector<BenchInstance> generate_batch(const std::vector<GenSpec>& specs,
                                          const std::string& prefix = "i");

extern const char* const bench_csv_header;
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_timing = true);

// Re-checks the stored ratio fields against the stored weights.
bool row_consistent(const BenchRow& row);

}  // namespace mwist
