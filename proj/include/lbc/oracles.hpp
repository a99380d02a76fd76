#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "lbc/graph.hpp"
#include "lbc/interval_model.hpp"

namespace lbc {

struct OracleBudget {
  int max_subset_edges = 16;
  std::int64_t max_branch_nodes = 20'000'000;
};

enum class OracleStatus {
  kSolved,
  kBudgetExceeded,
  kAboveDepth,  // no cut within the requested depth cap
};

struct OracleOutcome {
  OracleStatus status = OracleStatus::kBudgetExceeded;
  int cost = 0;
  CutSet cut;
  std::int64_t nodes = 0;

  bool solved() const { return status == OracleStatus::kSolved; }
};

/// Exhaustive search over edge subsets by increasing size.
OracleOutcome oracle_subset(const Instance& inst, const OracleBudget& budget = {});

/// Bounded search tree on shortest violating paths with iterative deepening.
/// With `max_depth`, gives up (kAboveDepth) once every cut of that size fails.
OracleOutcome oracle_branch(const Instance& inst, const OracleBudget& budget = {},
                            std::optional<int> max_depth = std::nullopt);

struct RandomIntervalSpec {
  int n = 8;
  double span = 3.0;                     // starts drawn from [0, span]
  std::pair<int, int> beta_range{0, 4};
  std::pair<int, int> lambda_range{1, 6};
  bool ordered_terminals = true;         // start(s) <= start(t)
  std::uint64_t seed = 0;
};

struct RandomInterval {
  Instance instance;
  IntervalModel model;
};

/// Unit intervals with distinct starts on a 1/1000 grid; reproducible per seed.
RandomInterval random_proper_interval_instance(const RandomIntervalSpec& spec);

}  // namespace lbc
