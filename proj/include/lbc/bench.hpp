#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lbc {

struct BenchConfig {
  std::vector<int> sizes{50, 100, 200};
  int reps = 3;
  std::uint64_t seed = 1;
  int threads = 1;
  double span_per_vertex = 0.05;  // starts drawn from [0, n * span_per_vertex]
  int lambda = 0;                 // 0: n / 8, at least 2
  bool end_terminals = true;      // s and t are the first and last interval, so nothing is trimmed
  bool single_frontier = true;     // also time the single-frontier recurrence
};

struct BenchRow {
  int n = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  int m = 0;
  int lambda = 0;
  int beta = 0;
  int cost = 0;
  int min_cut = 0;
  int single_frontier = -1;  // -1 when not run
  bool tables = false;       // the DP tables ran (no special case)
  bool verified = false;
  double seconds = 0;        // dp_solve pipeline only
};

/// One row per (size, rep) in that order, whatever the thread count. Each
/// instance is seeded from (seed, n, rep) alone.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Tab-separated table with a header line.
std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace lbc
