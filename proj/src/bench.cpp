#include "lbc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "lbc/interval_dp.hpp"
#include "lbc/oracles.hpp"

namespace lbc {

namespace {

std::uint64_t mix(std::uint64_t seed, int n, int rep) {
  // splitmix64 over the three inputs
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(rep);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BenchRow run_one(const BenchConfig& config, int n, int rep) {
  BenchRow row;
  row.n = n;
  row.rep = rep;
  row.seed = mix(config.seed, n, rep);
  RandomIntervalSpec spec;
  spec.n = n;
  spec.span = std::max(1.0, n * config.span_per_vertex);
  const int lambda = config.lambda > 0 ? config.lambda : std::max(2, n / 8);
  spec.lambda_range = {lambda, lambda};
  spec.beta_range = {0, n};
  spec.seed = row.seed;
  RandomInterval inst = random_proper_interval_instance(spec);
  if (config.end_terminals) {
    const auto& iv = inst.model.intervals();
    auto by_start = [](const Interval& a, const Interval& b) { return a.start < b.start; };
    inst.instance.s = static_cast<Vertex>(std::min_element(iv.begin(), iv.end(), by_start) - iv.begin());
    inst.instance.t = static_cast<Vertex>(std::max_element(iv.begin(), iv.end(), by_start) - iv.begin());
  }
  row.m = inst.instance.graph.edge_count();
  row.lambda = inst.instance.lambda;
  row.beta = inst.instance.beta;

  const auto start = std::chrono::steady_clock::now();
  const DpResult result = solve_interval(inst.instance, inst.model);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  row.cost = result.cost;
  row.tables = result.branch == DpBranch::kTables;
  row.min_cut = result.min_cut_size;
  row.verified = verify_cut(inst.instance, result.cut).valid && static_cast<int>(result.cut.size()) == result.cost;
  if (config.single_frontier) {
    row.single_frontier =
        dp_solve_single_frontier(normalize(IntervalInstance::from(inst.instance, inst.model)));
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<std::pair<int, int>> jobs;
  for (int n : config.sizes) {
    for (int rep = 0; rep < config.reps; ++rep) jobs.emplace_back(n, rep);
  }
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t x = next++; x < jobs.size() && !failed; x = next++) {
      try {
        rows[x] = run_one(config, jobs[x].first, jobs[x].second);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(config.threads, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n\trep\tseed\tm\tlambda\tbeta\tcost\tmin_cut\tsingle_frontier\ttables\tverified\tseconds\n";
  for (const BenchRow& r : rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.6f", r.seconds);
    os << r.n << '\t' << r.rep << '\t' << r.seed << '\t' << r.m << '\t' << r.lambda << '\t' << r.beta << '\t'
       << r.cost << '\t' << r.min_cut << '\t' << r.single_frontier << '\t' << (r.tables ? "yes" : "no") << '\t' << (r.verified ? "yes" : "no") << '\t'
       << secs << '\n';
  }
  return os.str();
}

}  // namespace lbc
