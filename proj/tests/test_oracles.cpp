#include "doctest.h"
#include "lbc/oracles.hpp"
#include "support.hpp"

using namespace lbc;
using namespace lbc::testing;

TEST_CASE("oracle_subset") {
  CHECK(oracle_subset(make_instance(Graph(2, {}), 0, 1, 0, 2)).cost == 0);
  CHECK(oracle_subset(make_instance(make_graph(2, {{0, 1}}), 0, 1, 0, 1)).cost == 1);
  auto tri = oracle_subset(make_instance(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2, 0, 2));
  CHECK(tri.solved());
  CHECK(tri.cost == 2);
  CHECK(tri.cut.count(Edge::make(0, 2)) == 1);

  OracleBudget tiny;
  tiny.max_subset_edges = 2;
  auto over = oracle_subset(make_instance(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2, 0, 2), tiny);
  CHECK(over.status == OracleStatus::kBudgetExceeded);
}

TEST_CASE("oracle_branch") {
  SUBCASE("far apart") {
    auto out = oracle_branch(make_instance(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 0, 3, 0, 2));
    CHECK(out.solved());
    CHECK(out.cost == 0);
  }
  SUBCASE("two parallel length-2 paths") {
    auto inst = make_instance(make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}), 0, 3, 0, 2);
    CHECK(oracle_branch(inst).cost == 2);
    CHECK(oracle_subset(inst).cost == 2);
  }
  SUBCASE("depth cap") {
    auto inst = make_instance(make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}), 0, 3, 0, 2);
    CHECK(oracle_branch(inst, {}, 1).status == OracleStatus::kAboveDepth);
    CHECK(oracle_branch(inst, {}, 2).cost == 2);
  }
  SUBCASE("node budget") {
    OracleBudget tiny;
    tiny.max_branch_nodes = 1;
    auto inst = make_instance(make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {1, 2}}), 0, 3, 0, 3);
    CHECK(oracle_branch(inst, tiny).status == OracleStatus::kBudgetExceeded);
  }
  SUBCASE("agrees with subset enumeration and path brute force") {
    for (unsigned seed = 0; seed < 150; ++seed) {
      Graph g = random_graph(7 + static_cast<int>(seed % 6), 0.3, seed);
      if (g.edge_count() > 16) continue;
      const int lambda = 1 + static_cast<int>(seed % 5);
      auto inst = make_instance(g, 0, g.vertex_count() - 1, 0, lambda);
      auto a = oracle_subset(inst);
      auto b = oracle_branch(inst);
      REQUIRE(a.solved());
      REQUIRE(b.solved());
      CHECK(a.cost == b.cost);
      CHECK(a.cost == brute_min_cut(inst));
      CHECK(verify_cut(inst, a.cut).valid);
      CHECK(verify_cut(inst, b.cut).valid);
      CHECK(static_cast<int>(b.cut.size()) == b.cost);
      const bool far = bfs_distances(g, 0)[g.vertex_count() - 1].exceeds(lambda);
      CHECK((b.cost == 0) == far);
    }
  }
}

TEST_CASE("random proper interval generator") {
  SUBCASE("two far-apart intervals") {
    RandomIntervalSpec spec;
    spec.n = 2;
    spec.span = 1000.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      spec.seed = seed;
      auto r = random_proper_interval_instance(spec);
      const Rational gap = r.model[0].start - r.model[1].start;
      const bool overlap = gap <= 1 && gap >= -1;
      CHECK(r.instance.graph.edge_count() == (overlap ? 1 : 0));
    }
  }
  SUBCASE("two overlapping intervals") {
    RandomIntervalSpec spec;
    spec.n = 2;
    spec.span = 0.5;
    auto r = random_proper_interval_instance(spec);
    CHECK(r.instance.graph.edge_count() == 1);
  }
  SUBCASE("invariants and reproducibility") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      RandomIntervalSpec spec;
      spec.n = 2 + static_cast<int>(seed % 30);
      spec.span = 0.5 + static_cast<double>(seed % 7);
      spec.seed = seed;
      auto a = random_proper_interval_instance(spec);
      auto b = random_proper_interval_instance(spec);
      CHECK_NOTHROW(validate_proper_model(a.instance.graph, a.model));
      CHECK_NOTHROW(a.instance.validate());
      CHECK(a.model[a.instance.s].start <= a.model[a.instance.t].start);
      CHECK(a.model == b.model);
      CHECK(a.instance.s == b.instance.s);
      CHECK(a.instance.lambda == b.instance.lambda);
      for (const Interval& iv : a.model.intervals()) CHECK(iv.end - iv.start == Rational(1));
    }
  }
  CHECK_THROWS_AS(random_proper_interval_instance({1}), InputError);
}
