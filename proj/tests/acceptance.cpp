// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lbc/bench.hpp"
#include "lbc/graph.hpp"
#include "lbc/interval_dp.hpp"
#include "lbc/oracles.hpp"
#include "lbc/reductions.hpp"
#include "lbc/witnesses.hpp"

using namespace lbc;

namespace {

// criterion 1
constexpr int kSmallCases = 500;
constexpr int kSmallMaxN = 10;
constexpr int kSmallMaxLambda = 6;
constexpr int kBranchCases = 200;
constexpr int kBranchMaxN = 40;
constexpr int kBranchMaxLambda = 8;
constexpr int kCostTolerance = 0;
constexpr double kCriterion1Seconds = 120.0;
// criterion 2
constexpr int kCertifyExtra = 200;
// criteria 3, 4
constexpr int kTrimCases = 100;
constexpr int kMonotoneCases = 200;
// criterion 5, 6
constexpr double kReductionCaseSeconds = 10.0;
// criterion 8
constexpr std::int64_t kBackwardNodeBudget = 2000;
// criterion 9
constexpr double kLargestSeconds = 60.0;
constexpr double kTrendEnvelope = 2.0;
const std::vector<int> kTimingSizes{50, 100, 200};
constexpr int kTimingReps = 3;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

bool all_pass = true;

void report(int number, const Verdict& v) {
  all_pass = all_pass && v.pass;
  std::printf("criterion %d %s: %s\n", number, v.pass ? "PASS" : "FAIL", v.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Counters for criterion 2, fed by every DP run of criteria 1 and 2.
struct CutCertification {
  int runs = 0;
  int certified = 0;
  int special = 0;
};
CutCertification certification;

// Solves through the public pipeline pieces and certifies the extracted cut.
int dp_cost(const Instance& inst, const IntervalModel& model) {
  const IntervalInstance norm = normalize(IntervalInstance::from(inst, model));
  const DpResult r = dp_solve(norm);
  if (r.branch != DpBranch::kTables) {
    ++certification.special;
    return r.cost;
  }
  ++certification.runs;
  const CutSet cut = extract_cut(norm.instance, r.tables);
  const bool ok = static_cast<int>(cut.size()) == r.cost && verify_cut(norm.instance, cut).valid &&
                  verify_cut(inst, lift_trimmed_cut(inst, norm.to_original(cut))).valid;
  if (ok) ++certification.certified;
  return r.cost;
}

RandomInterval random_case(std::mt19937_64& rng, int min_n, int max_n, int max_lambda, double span_per_vertex) {
  RandomIntervalSpec spec;
  spec.n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  spec.span = std::max(1.5, spec.n * span_per_vertex);
  spec.lambda_range = {1, max_lambda};
  spec.beta_range = {0, 6};
  spec.ordered_terminals = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  spec.seed = rng();
  return random_proper_interval_instance(spec);
}

Verdict criterion_1() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  int agree = 0, disagree = 0, skipped = 0;
  OracleBudget subset_budget;
  subset_budget.max_subset_edges = 30;
  while (agree + disagree < kSmallCases) {
    const RandomInterval r = random_case(rng, 2, kSmallMaxN, kSmallMaxLambda, 0.5);
    const OracleOutcome o = oracle_subset(r.instance, subset_budget);
    if (!o.solved()) {
      ++skipped;
      continue;
    }
    (std::abs(dp_cost(r.instance, r.model) - o.cost) <= kCostTolerance ? agree : disagree)++;
  }
  int b_agree = 0, b_disagree = 0, b_skipped = 0;
  OracleBudget branch_budget;
  branch_budget.max_branch_nodes = 2'000'000;
  while (b_agree + b_disagree < kBranchCases) {
    const RandomInterval r = random_case(rng, 11, kBranchMaxN, kBranchMaxLambda, 0.3);
    const OracleOutcome o = oracle_branch(r.instance, branch_budget);
    if (!o.solved()) {
      ++b_skipped;
      continue;
    }
    (std::abs(dp_cost(r.instance, r.model) - o.cost) <= kCostTolerance ? b_agree : b_disagree)++;
  }
  const double secs = since(start);
  Verdict v;
  v.pass = disagree == 0 && b_disagree == 0 && secs < kCriterion1Seconds;
  v.detail = fmt("dp == oracle_subset on %d/%d (n<=%d, lambda<=%d, %d over budget skipped); "
                 "dp == oracle_branch on %d/%d (n<=%d, lambda<=%d, %d over budget skipped); %.1f s (limit %.0f s)",
                 agree, agree + disagree, kSmallMaxN, kSmallMaxLambda, skipped, b_agree, b_agree + b_disagree,
                 kBranchMaxN, kBranchMaxLambda, b_skipped, secs, kCriterion1Seconds);
  return v;
}

Verdict criterion_2() {
  // larger instances on top of the criterion 1 runs
  std::mt19937_64 rng(2002);
  for (int x = 0; x < kCertifyExtra; ++x) {
    const RandomInterval r = random_case(rng, 20, 120, 20, 0.2);
    dp_cost(r.instance, r.model);
  }
  Verdict v;
  v.pass = certification.runs > 0 && certification.certified == certification.runs;
  v.detail = fmt("extract_cut size == cost and verify_cut accepts on %d/%d table-branch DP runs (%d special-case runs)",
                 certification.certified, certification.runs, certification.special);
  return v;
}

Verdict criterion_3() {
  std::mt19937_64 rng(3003);
  OracleBudget budget;
  budget.max_subset_edges = 30;
  int equal = 0, differ = 0, tried = 0;
  while (equal + differ < kTrimCases && tried < 100 * kTrimCases) {
    ++tried;
    const RandomInterval r = random_case(rng, 5, 10, 6, 0.6);
    const IntervalInstance canon = canonicalize(mirror_if_needed(IntervalInstance::from(r.instance, r.model)));
    const IntervalInstance trimmed = trim(canon);
    if (trimmed.instance.graph.vertex_count() == canon.instance.graph.vertex_count()) continue;  // L and R empty
    const OracleOutcome before = oracle_subset(canon.instance, budget);
    const OracleOutcome after = oracle_subset(trimmed.instance, budget);
    if (!before.solved() || !after.solved()) continue;
    (before.cost == after.cost ? equal : differ)++;
  }
  Verdict v;
  v.pass = differ == 0 && equal >= kTrimCases;
  v.detail = fmt("oracle optimum unchanged by trimming on %d/%d instances with L or R nonempty (need %d)", equal,
                 equal + differ, kTrimCases);
  return v;
}

// Distances along the start order, checked without the library's helper.
bool literally_monotone(const Instance& ranked, const CutSet& f) {
  const auto dist = bfs_distances(apply_cut(ranked.graph, f), ranked.s);
  for (Vertex v = 2; v < ranked.graph.vertex_count() - 1; ++v) {
    if (dist[static_cast<std::size_t>(v - 1)] > dist[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

Verdict criterion_4() {
  std::mt19937_64 rng(4004);
  int ok = 0, bad = 0, tried = 0;
  while (ok + bad < kMonotoneCases && tried < 50 * kMonotoneCases) {
    ++tried;
    const RandomInterval r = random_case(rng, 4, 14, 7, 0.35);
    const IntervalInstance norm = normalize(IntervalInstance::from(r.instance, r.model));
    const Instance& inst = norm.instance;
    const Graph& g = inst.graph;
    if (g.vertex_count() < 4) continue;
    // F: an optimal cut for a random bound plus random extra edges.
    Instance probe = inst;
    probe.lambda = std::uniform_int_distribution<int>(1, std::max(1, g.vertex_count() - 1))(rng);
    CutSet f = dp_solve(IntervalInstance{probe, norm.model, norm.original}).cut;
    for (const Edge& e : g.edges()) {
      if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) f.insert(e);
    }
    const Distance reach = bfs_distances(apply_cut(g, f), inst.s)[static_cast<std::size_t>(inst.t)];
    const int cap = reach.is_finite() ? reach.hops() : g.vertex_count();
    const int d = std::uniform_int_distribution<int>(1, std::max(1, cap))(rng);
    const CutSet out = monotonize_cut(norm, f, d);
    const bool good = out.size() <= f.size() &&
                      bfs_distances(apply_cut(g, out), inst.s)[static_cast<std::size_t>(inst.t)].exceeds(d - 1) &&
                      literally_monotone(inst, out);
    (good ? ok : bad)++;
  }
  Verdict v;
  v.pass = bad == 0 && ok >= kMonotoneCases;
  v.detail = fmt("|F'| <= |F|, dist >= d and BFS-monotone along the start order on %d/%d triples (need %d)", ok,
                 ok + bad, kMonotoneCases);
  return v;
}

std::vector<ReductionOutput> pw_outputs;
std::vector<ReductionOutput> fvs_outputs;

Verdict criterion_5() {
  struct Shape {
    int k, n, m;
  };
  const std::vector<Shape> shapes{{2, 3, 3}, {2, 4, 5}, {2, 5, 8}, {2, 6, 10}, {3, 3, 3},
                                  {3, 4, 6}, {3, 5, 7}, {3, 6, 10}, {3, 5, 10}};
  int ok = 0, bad = 0;
  double slowest = 0;
  for (const Shape& sh : shapes) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      const auto start = Clock::now();
      const PlantedClique pc = planted_clique(sh.n, sh.m, sh.k, seed);
      ReductionOutput out = gen_pw(pc.instance);
      const CutSet f = forward_cut_pw(out, pc.clique);
      const bool size_ok = static_cast<int>(f.size()) == 2 * sh.k * sh.k;
      const bool cut_ok = verify_cut(out.instance, f).valid;
      const bool decode_ok = decode_pw(out, f) == std::optional(pc.clique);
      const bool empty_ok = !verify_cut(out.instance, {}).valid;  // some s-t path of length <= lambda
      const double secs = since(start);
      slowest = std::max(slowest, secs);
      (size_ok && cut_ok && decode_ok && empty_ok && secs < kReductionCaseSeconds ? ok : bad)++;
      pw_outputs.push_back(std::move(out));
    }
  }
  Verdict v;
  v.pass = bad == 0;
  v.detail = fmt("|F| = 2k^2, verified, decoded, empty cut has a path <= lambda on %d/%d planted cases "
                 "(k in {2,3}, m <= 10); slowest case %.2f s (limit %.0f s)",
                 ok, ok + bad, slowest, kReductionCaseSeconds);
  return v;
}

Verdict criterion_6() {
  int ok = 0, bad = 0;
  double slowest = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int nu = 2; nu <= 4; ++nu) {
      const int pairs = k * (k - 1) / 2;
      for (int m : {pairs, pairs + nu, pairs * nu * nu / 2 + 1}) {
        const auto start = Clock::now();
        const PlantedMulticolored pm = planted_multicolored_clique(k, nu, m, static_cast<std::uint64_t>(7 * k + nu + m));
        ReductionOutput out = gen_fvs(pm.instance);
        const CutSet f = forward_cut_fvs(out, pm.clique);
        const int beta = 2 * k * (nu - 1) * m + m - k * (k - 1) / 2;
        const bool good = static_cast<int>(f.size()) == beta && out.instance.beta == beta &&
                          verify_cut(out.instance, f).valid && decode_fvs(out, f) == std::optional(pm.clique);
        const double secs = since(start);
        slowest = std::max(slowest, secs);
        (good && secs < kReductionCaseSeconds ? ok : bad)++;
        fvs_outputs.push_back(std::move(out));
      }
    }
  }
  Verdict v;
  v.pass = bad == 0;
  v.detail = fmt("|F| = 2k(nu-1)m + m - k(k-1)/2, verified, decoded on %d/%d planted cases (k in {2,3}, nu <= 4); "
                 "slowest case %.2f s",
                 ok, ok + bad, slowest);
  return v;
}

Verdict criterion_7() {
  int fvs_ok = 0, pw_ok = 0, widest_slack = 1 << 30;
  for (const ReductionOutput& out : fvs_outputs) {
    const FvsWitness w = build_fvs_witness(out);
    if (static_cast<int>(w.vertices.size()) == 2 * out.params.k + 2 && verify_fvs(out.instance.graph, w)) ++fvs_ok;
  }
  for (const ReductionOutput& out : pw_outputs) {
    const DecompositionVerdict dv = verify_path_decomposition(out.instance.graph, build_pw_witness(out));
    const int bound = 2 * out.params.k + 11;
    if (dv.valid && dv.width <= bound) ++pw_ok;
    if (dv.valid) widest_slack = std::min(widest_slack, bound - dv.width);
  }
  Verdict v;
  v.pass = fvs_ok == static_cast<int>(fvs_outputs.size()) && pw_ok == static_cast<int>(pw_outputs.size()) &&
           !fvs_outputs.empty() && !pw_outputs.empty();
  v.detail = fmt("fvs witness of size 2k+2 verified on %d/%zu; path decomposition valid with width <= 2k+11 on %d/%zu "
                 "(smallest slack %d)",
                 fvs_ok, fvs_outputs.size(), pw_ok, pw_outputs.size(), widest_slack);
  return v;
}

// Backward direction by exact solving: a triangle-free source should admit no
// cut within beta. The search is attempted under a node budget.
void criterion_8() {
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const ReductionOutput out = gen_pw(CliqueInstance::make(c5, 3));
  OracleBudget budget;
  budget.max_branch_nodes = kBackwardNodeBudget;
  const auto start = Clock::now();
  const OracleOutcome o = oracle_branch(out.instance, budget, out.instance.beta);
  const double secs = since(start);
  const char* status = o.status == OracleStatus::kSolved          ? "solved"
                       : o.status == OracleStatus::kAboveDepth    ? "no cut within beta"
                                                                  : "budget exhausted";
  all_pass = false;
  std::printf("criterion 8 NOT-REPRODUCIBLE: backward direction needs exact solving on H; pw from C5 with k=3 has "
              "%d vertices, beta %d, lambda %d; oracle_branch %s after %lld nodes in %.1f s. "
              "Substituted by criteria 1-7\n",
              out.instance.graph.vertex_count(), out.instance.beta, out.instance.lambda, status,
              static_cast<long long>(o.nodes), secs);
  std::fflush(stdout);
}

Verdict criterion_9() {
  BenchConfig cfg;
  cfg.sizes = kTimingSizes;
  cfg.reps = kTimingReps;
  cfg.seed = 9009;
  cfg.single_frontier = false;
  const auto rows = run_bench(cfg);
  struct Point {
    int n;
    double m;
    double seconds;
  };
  std::vector<Point> points;
  bool verified = true;
  for (int n : kTimingSizes) {
    std::vector<double> secs, ms;
    for (const BenchRow& r : rows) {
      if (r.n != n) continue;
      secs.push_back(r.seconds);
      ms.push_back(r.m);
      verified = verified && r.verified && r.tables;
    }
    std::sort(secs.begin(), secs.end());
    std::sort(ms.begin(), ms.end());
    points.push_back({n, ms[ms.size() / 2], secs[secs.size() / 2]});
  }
  // Trend fitted at the smallest size; larger sizes must stay within the envelope.
  auto model = [](const Point& p) { return std::pow(p.n, 4.0) * p.m; };
  const double c = std::max(points.front().seconds, 1e-6) / model(points.front());
  bool within = true;
  std::string table;
  for (const Point& p : points) {
    const double ratio = p.seconds / (c * model(p));
    within = within && ratio <= kTrendEnvelope;
    table += fmt(" n=%d m=%.0f t=%.4fs ratio=%.3f;", p.n, p.m, p.seconds, ratio);
  }
  const double largest = points.back().seconds;
  Verdict v;
  v.pass = verified && within && largest < kLargestSeconds;
  v.detail = fmt("median of %d runs, all on the table branch and verified:%s n=200 under %.0f s, ratios to the n^4*m trend within %.1fx", kTimingReps,
                 table.c_str(), kLargestSeconds, kTrendEnvelope);
  return v;
}

}  // namespace

int main() {
  try {
    report(1, criterion_1());
    report(2, criterion_2());
    report(3, criterion_3());
    report(4, criterion_4());
    report(5, criterion_5());
    report(6, criterion_6());
    report(7, criterion_7());
    criterion_8();
    report(9, criterion_9());
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  return all_pass ? 0 : 1;
}
