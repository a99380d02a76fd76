#pragma once

// Independent reference computations used as oracles by the unit tests.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "lbc/graph.hpp"
#include "lbc/interval_model.hpp"

namespace lbc::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, std::move(list));
}

inline Instance make_instance(Graph g, Vertex s, Vertex t, int beta, int lambda) {
  Instance inst;
  inst.graph = std::move(g);
  inst.s = s;
  inst.t = t;
  inst.beta = beta;
  inst.lambda = lambda;
  return inst;
}

inline IntervalModel unit_model(std::initializer_list<double> starts) {
  std::vector<Interval> iv;
  for (double s : starts) {
    Rational r(static_cast<std::int64_t>(s * 1000), 1000);
    iv.push_back({r, r + 1});
  }
  return IntervalModel(std::move(iv));
}

/// All-pairs hop distances; -1 for unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Calls `visit` on every simple s-t path with at most `max_len` edges.
inline void enumerate_paths(const Graph& g, Vertex s, Vertex t, int max_len,
                            const std::function<void(const std::vector<Vertex>&)>& visit,
                            const CutSet& avoid = {}) {
  std::vector<Vertex> path{s};
  std::vector<char> on(g.vertex_count(), 0);
  on[s] = 1;
  std::function<void()> rec = [&] {
    const Vertex u = path.back();
    if (u == t) {
      visit(path);
      return;
    }
    if (static_cast<int>(path.size()) - 1 >= max_len) return;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (on[nb.vertex] || avoid.count(Edge::make(u, nb.vertex))) continue;
      on[nb.vertex] = 1;
      path.push_back(nb.vertex);
      rec();
      path.pop_back();
      on[nb.vertex] = 0;
    }
  };
  rec();
}

inline bool has_short_path(const Graph& g, Vertex s, Vertex t, int max_len, const CutSet& avoid) {
  bool found = false;
  enumerate_paths(g, s, t, max_len, [&](const std::vector<Vertex>&) { found = true; }, avoid);
  return found;
}

/// Maximum number of pairwise edge-disjoint s-t paths, by exhaustive packing.
inline int max_edge_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  std::vector<std::vector<Edge>> paths;
  enumerate_paths(g, s, t, g.vertex_count(), [&](const std::vector<Vertex>& p) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) es.push_back(Edge::make(p[k], p[k + 1]));
    paths.push_back(std::move(es));
  });
  int best = 0;
  std::set<Edge> used;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int count) {
    best = std::max(best, count);
    for (std::size_t k = from; k < paths.size(); ++k) {
      if (std::any_of(paths[k].begin(), paths[k].end(), [&](const Edge& e) { return used.count(e); }))
        continue;
      for (const Edge& e : paths[k]) used.insert(e);
      rec(k + 1, count + 1);
      for (const Edge& e : paths[k]) used.erase(e);
    }
  };
  rec(0, 0);
  return best;
}

/// Erdos-Renyi graph from a simple LCG so tests do not share the library's RNG.
inline Graph random_graph(int n, double p, unsigned seed) {
  unsigned state = seed * 2654435761u + 12345u;
  auto next = [&] {
    state = state * 1664525u + 1013904223u;
    return (state >> 8) / static_cast<double>(1u << 24);
  };
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next() < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

/// Exhaustive minimum lambda-cut via path enumeration (no BFS involved).
inline int brute_min_cut(const Instance& inst) {
  const int m = inst.graph.edge_count();
  int best = m;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    CutSet cut;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1u) cut.insert(inst.graph.edge(e));
    if (!has_short_path(inst.graph, inst.s, inst.t, inst.lambda, cut)) best = size;
  }
  return best;
}

}  // namespace lbc::testing
