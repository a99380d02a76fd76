#include "lbc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace lbc {

namespace {

bool separates(const Instance& inst, const EdgeMask& mask) {
  return !shortest_bounded_path(inst.graph, inst.s, inst.t, inst.lambda, mask).has_value();
}

CutSet mask_to_cut(const Graph& g, const EdgeMask& mask) {
  CutSet cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mask.removed(e)) cut.insert(g.edge(e));
  }
  return cut;
}

class BranchSearch {
 public:
  BranchSearch(const Instance& inst, std::int64_t node_budget)
      : inst_(inst), mask_(inst.graph), kept_(static_cast<std::size_t>(inst.graph.edge_count()), 0),
        budget_(node_budget) {}

  // true: found a cut of size <= depth (left in mask_)
  bool search(int depth) {
    if (++nodes_ > budget_) throw Exhausted{};
    auto path = shortest_bounded_path(inst_.graph, inst_.s, inst_.t, inst_.lambda, mask_);
    if (!path) return true;
    if (depth == 0) return false;
    std::vector<EdgeId> edges;
    for (std::size_t k = 0; k + 1 < path->size(); ++k) {
      edges.push_back(*inst_.graph.find_edge((*path)[k], (*path)[k + 1]));
    }
    // Branch k deletes edge k and keeps edges 0..k-1, so no cut is visited twice.
    std::vector<EdgeId> protected_here;
    bool found = false;
    for (EdgeId e : edges) {
      if (kept_[static_cast<std::size_t>(e)]) continue;
      mask_.set(e, true);
      found = search(depth - 1);
      if (found) break;
      mask_.set(e, false);
      kept_[static_cast<std::size_t>(e)] = 1;
      protected_here.push_back(e);
    }
    for (EdgeId e : protected_here) kept_[static_cast<std::size_t>(e)] = 0;
    return found;
  }

  struct Exhausted {};

  const EdgeMask& mask() const { return mask_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  const Instance& inst_;
  EdgeMask mask_;
  std::vector<std::uint8_t> kept_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

}  // namespace

OracleOutcome oracle_subset(const Instance& inst, const OracleBudget& budget) {
  inst.validate();
  const Graph& g = inst.graph;
  const int m = g.edge_count();
  OracleOutcome out;
  if (m > budget.max_subset_edges) return out;

  std::vector<int> pick;
  for (int size = 0; size <= m; ++size) {
    pick.resize(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) pick[static_cast<std::size_t>(k)] = k;
    while (true) {
      ++out.nodes;
      EdgeMask mask(g);
      for (int e : pick) mask.set(e, true);
      if (separates(inst, mask)) {
        out.status = OracleStatus::kSolved;
        out.cost = size;
        out.cut = mask_to_cut(g, mask);
        return out;
      }
      // next combination in lexicographic order
      int k = size - 1;
      while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - size + k) --k;
      if (k < 0) break;
      ++pick[static_cast<std::size_t>(k)];
      for (int l = k + 1; l < size; ++l) {
        pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
      }
    }
  }
  throw VerificationError("deleting every edge did not separate s and t");
}

OracleOutcome oracle_branch(const Instance& inst, const OracleBudget& budget,
                            std::optional<int> max_depth) {
  inst.validate();
  OracleOutcome out;
  // The unbounded min cut is always a lambda-cut, so the search stops there.
  const MinCut mc = min_st_cut(inst.graph, inst.s, inst.t);
  const int limit = max_depth ? std::min(*max_depth, mc.size) : mc.size;
  BranchSearch search(inst, budget.max_branch_nodes);
  try {
    for (int depth = 0; depth <= limit; ++depth) {
      if (depth == mc.size) {
        out.status = OracleStatus::kSolved;
        out.cost = mc.size;
        out.cut = mc.cut;
        out.nodes = search.nodes();
        return out;
      }
      if (search.search(depth)) {
        out.status = OracleStatus::kSolved;
        out.cut = mask_to_cut(inst.graph, search.mask());
        out.cost = static_cast<int>(out.cut.size());
        out.nodes = search.nodes();
        return out;
      }
    }
  } catch (const BranchSearch::Exhausted&) {
    out.status = OracleStatus::kBudgetExceeded;
    out.nodes = search.nodes();
    return out;
  }
  out.status = OracleStatus::kAboveDepth;
  out.nodes = search.nodes();
  return out;
}

RandomInterval random_proper_interval_instance(const RandomIntervalSpec& spec) {
  if (spec.n < 2) throw InputError("random instance needs n >= 2");
  constexpr std::int64_t kGrid = 1000;
  std::mt19937_64 rng(spec.seed);
  const std::int64_t slots =
      std::max<std::int64_t>(static_cast<std::int64_t>(std::llround(spec.span * kGrid)) + 1, spec.n);
  std::uniform_int_distribution<std::int64_t> pick_start(0, slots - 1);
  std::set<std::int64_t> used;
  std::vector<Interval> intervals;
  while (static_cast<int>(intervals.size()) < spec.n) {
    const std::int64_t k = pick_start(rng);
    if (!used.insert(k).second) continue;
    const Rational start(k, kGrid);
    intervals.push_back({start, start + 1});
  }
  IntervalModel model(std::move(intervals));

  RandomInterval out;
  out.instance.graph = intersection_graph(model);
  std::uniform_int_distribution<int> pick_vertex(0, spec.n - 1);
  Vertex s = pick_vertex(rng);
  Vertex t = pick_vertex(rng);
  while (t == s) t = pick_vertex(rng);
  if (spec.ordered_terminals && model[t].start < model[s].start) std::swap(s, t);
  out.instance.s = s;
  out.instance.t = t;

  auto draw = [&](std::pair<int, int> range, int cap) {
    const int lo = std::clamp(range.first, 0, cap);
    const int hi = std::clamp(range.second, lo, cap);
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  out.instance.beta = draw(spec.beta_range, out.instance.graph.edge_count());
  out.instance.lambda = draw(spec.lambda_range, spec.n);
  out.model = std::move(model);
  return out;
}

}  // namespace lbc
