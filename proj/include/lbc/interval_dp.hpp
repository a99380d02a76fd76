#pragma once

#include <cstdint>
#include <vector>

#include "lbc/graph.hpp"
#include "lbc/interval_model.hpp"

namespace lbc {

/// An instance together with its interval model. `original[v]` is the id of v
/// in the instance the caller started from.
struct IntervalInstance {
  Instance instance;
  IntervalModel model;
  std::vector<Vertex> original;

  /// Identity mapping; validates the model.
  static IntervalInstance from(Instance inst, IntervalModel model);

  /// s = 0, t = n-1, strictly increasing starts over 1..n-2, start(s) < start(t).
  bool is_ranked() const;
  /// Ranked, and every vertex lies inside [start(s), end(t)].
  bool is_normalized() const;

  CutSet to_original(const CutSet& cut) const;
};

/// Reflects every interval when start(s) > start(t).
IntervalInstance mirror_if_needed(const IntervalInstance& in);

/// Breaks start ties without changing adjacency, then relabels s -> 0,
/// others by increasing start -> 1..n-2, t -> n-1.
IntervalInstance canonicalize(const IntervalInstance& in);

/// Drops vertices ending before s starts or starting after t ends. Input must
/// be ranked; output is ranked.
IntervalInstance trim(const IntervalInstance& in);

/// mirror + canonicalize + trim.
IntervalInstance normalize(const IntervalInstance& in);

/// Crossing counts over ranks 1..N of a ranked instance, s and t excluded:
/// count(h, i, j) = #edges {v_l, v_r} with h <= l < i and r >= j.
/// Queries are O(1); valid for 1 <= h <= i <= N+1 and 1 <= j <= N+1.
class CrossingCounts {
 public:
  CrossingCounts() = default;
  explicit CrossingCounts(const Instance& ranked);

  int ranks() const { return ranks_; }
  int operator()(int h, int i, int j) const {
    return at(i, j) - at(h, j);
  }

 private:
  // prefix_[x][j] = #edges with l < x and r >= j
  int at(int x, int j) const {
    return prefix_[static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(j)];
  }

  int ranks_ = 0;
  std::size_t stride_ = 0;
  std::vector<int> prefix_;
};

/// Dense (rank, d) matrix; ranks 1..N+1, d in 2..lambda. Rank N+1 stands for
/// "no vertex": the layer starting there is empty.
class RankTable {
 public:
  static constexpr int kUnset = -1;

  RankTable() = default;
  RankTable(int ranks, int lambda)
      : ranks_(ranks), lambda_(lambda),
        cells_(static_cast<std::size_t>(ranks + 2) * static_cast<std::size_t>(lambda + 1), kUnset) {}

  int ranks() const { return ranks_; }
  int lambda() const { return lambda_; }
  int operator()(int rank, int d) const { return cells_[index(rank, d)]; }
  int& operator()(int rank, int d) { return cells_[index(rank, d)]; }

 private:
  std::size_t index(int rank, int d) const {
    return static_cast<std::size_t>(rank) * static_cast<std::size_t>(lambda_ + 1) +
           static_cast<std::size_t>(d);
  }

  int ranks_ = 0;
  int lambda_ = 0;
  std::vector<int> cells_;
};

struct DpTables {
  int ranks = 0;   // N = n - 2
  int lambda = 0;
  RankTable cost;      // T[i][d]: cheapest cut with layer d starting at rank i
  RankTable frontier;  // S[i][d]: start rank of layer d-1 in that cut
  CrossingCounts crossings;

  // Pair states (j, i) = starts of layers d-1 and d. back[d][(j, i)] is the
  // start of layer d-2 on the cheapest such cut, or -1 if unreachable.
  std::vector<std::vector<std::int32_t>> back;

  int final_i = 0;  // start rank of layer lambda in the optimum
  int final_j = 0;  // start rank of layer lambda-1 in the optimum

  int pair_index(int j, int i) const { return j * (ranks + 2) + i; }
};

enum class DpBranch { kTrivialLambda, kPlainMinCut, kTables };

struct DpResult {
  int cost = 0;           // exact minimum lambda-cut size
  int min_cut_size = 0;   // unbounded s-t min cut
  bool decision = false;  // cost <= beta
  DpBranch branch = DpBranch::kTables;
  DpTables tables;        // filled on kTables only
  CutSet cut;             // optimal cut in the ids of the solved instance
};

/// Exact solver for a normalized instance (see normalize()).
DpResult dp_solve(const IntervalInstance& normalized);

/// Layer boundaries p_2..p_lambda of the optimum, read from the pair tables.
std::vector<int> layer_starts(const DpTables& tables);

/// Cut realising a set of layer boundaries (p_1 = 1 implied).
CutSet extract_cut(const Instance& ranked, const DpTables& tables);

/// Maps a cut of the trimmed instance back to `original`. A trimmed vertex can
/// bypass a cut edge; then all edges at t (or at s) form a cut that is no
/// larger, and that star is returned. Throws VerificationError if neither works.
CutSet lift_trimmed_cut(const Instance& original, const CutSet& cut);

/// Full pipeline on any proper interval instance; cut is in the caller's ids
/// and has been verified.
DpResult solve_interval(const Instance& inst, const IntervalModel& model);

/// Yes/no only; answers from the min-cut precheck when it is within budget.
bool dp_decide(const Instance& inst, const IntervalModel& model);

/// The single-frontier recurrence T[i,d] = min_j T[j,d-1] + C[S[j,d-1], j, i]
/// with largest-j ties. Not exact on every instance; kept for comparison.
int dp_solve_single_frontier(const IntervalInstance& normalized);

struct MonotonizeStats {
  int iterations = 0;
  int case_one = 0;
  int case_two = 0;
};

/// Rewrites a cut so that distances from s are non-decreasing along the start
/// order while keeping dist(s,t) >= d and not growing the cut. Works on a
/// normalized instance. Throws InputError if `f` does not give dist >= d.
CutSet monotonize_cut(const IntervalInstance& normalized, const CutSet& f, int d,
                      MonotonizeStats* stats = nullptr);

/// Whether dist_{G-F}(s, v_i) <= dist_{G-F}(s, v_j) for all ranks i < j.
bool is_monotone_cut(const Instance& ranked, const CutSet& f);

}  // namespace lbc
