#include "lbc/interval_dp.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace lbc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// New instance on the vertices `keep` (in that order); edges with a dropped
// endpoint disappear.
IntervalInstance relabel(const IntervalInstance& in, const std::vector<Vertex>& keep,
                         const IntervalModel& model) {
  const Graph& g = in.instance.graph;
  std::vector<Vertex> new_id(at(g.vertex_count()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) new_id[at(keep[k])] = static_cast<Vertex>(k);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = new_id[at(e.u)];
    const Vertex b = new_id[at(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(Edge::make(a, b));
  }
  std::sort(edges.begin(), edges.end());

  IntervalInstance out;
  out.instance.graph = Graph(static_cast<int>(keep.size()), std::move(edges));
  out.instance.s = new_id[at(in.instance.s)];
  out.instance.t = new_id[at(in.instance.t)];
  out.instance.beta = std::min(in.instance.beta, out.instance.graph.edge_count());
  out.instance.lambda = std::min(in.instance.lambda, out.instance.graph.vertex_count());
  std::vector<Interval> intervals;
  for (Vertex v : keep) {
    intervals.push_back(model[v]);
    out.original.push_back(in.original[at(v)]);
  }
  out.model = IntervalModel(std::move(intervals));
  return out;
}

void require_ranked(const IntervalInstance& in, const char* what) {
  if (!in.is_ranked()) throw InputError(std::string(what) + " needs a ranked instance");
}

// Per-rank layer for boundaries p[1..lambda]; s gets 0 and t gets lambda+1.
CutSet cut_from_layers(const Instance& ranked, const std::vector<int>& p, int lambda) {
  const int n = ranked.graph.vertex_count();
  std::vector<int> layer(at(n), 0);
  layer[at(n - 1)] = lambda + 1;
  int d = 1;
  for (int r = 1; r <= n - 2; ++r) {
    while (d < lambda && p[at(d + 1)] <= r) ++d;
    layer[at(r)] = d;
  }
  CutSet cut;
  for (const Edge& e : ranked.graph.edges()) {
    if (std::abs(layer[at(e.u)] - layer[at(e.v)]) >= 2) cut.insert(e);
  }
  return cut;
}

// #t-neighbours among ranks < i, for i in 1..N+1.
std::vector<int> t_prefix(const Instance& ranked) {
  const int N = ranked.graph.vertex_count() - 2;
  std::vector<int> below(at(N + 2), 0);
  for (int i = 1; i <= N; ++i) {
    below[at(i + 1)] = below[at(i)] + (ranked.graph.has_edge(i, ranked.t) ? 1 : 0);
  }
  return below;
}

// #s-neighbours among ranks >= i, for i in 1..N+1.
std::vector<int> s_suffix(const Instance& ranked) {
  const int N = ranked.graph.vertex_count() - 2;
  std::vector<int> above(at(N + 2), 0);
  for (int i = N; i >= 1; --i) {
    above[at(i)] = above[at(i + 1)] + (ranked.graph.has_edge(ranked.s, i) ? 1 : 0);
  }
  return above;
}

}  // namespace

IntervalInstance IntervalInstance::from(Instance inst, IntervalModel model) {
  inst.validate();
  validate_proper_model(inst.graph, model);
  IntervalInstance out;
  out.original.resize(at(inst.graph.vertex_count()));
  std::iota(out.original.begin(), out.original.end(), 0);
  out.instance = std::move(inst);
  out.model = std::move(model);
  return out;
}

bool IntervalInstance::is_ranked() const {
  const int n = instance.graph.vertex_count();
  if (n < 2 || instance.s != 0 || instance.t != n - 1 || model.size() != n) return false;
  for (Vertex v = 1; v + 1 < n - 1; ++v) {
    if (!(model[v].start < model[v + 1].start)) return false;
  }
  std::vector<Rational> starts;
  for (const Interval& iv : model.intervals()) starts.push_back(iv.start);
  std::sort(starts.begin(), starts.end());
  if (std::adjacent_find(starts.begin(), starts.end()) != starts.end()) return false;
  return model[0].start < model[n - 1].start;
}

bool IntervalInstance::is_normalized() const {
  if (!is_ranked()) return false;
  const Interval& s = model[instance.s];
  const Interval& t = model[instance.t];
  for (const Interval& iv : model.intervals()) {
    if (iv.end < s.start || iv.start > t.end) return false;
  }
  return true;
}

CutSet IntervalInstance::to_original(const CutSet& cut) const {
  CutSet out;
  for (const Edge& e : cut) out.insert(Edge::make(original[at(e.u)], original[at(e.v)]));
  return out;
}

IntervalInstance mirror_if_needed(const IntervalInstance& in) {
  validate_proper_model(in.instance.graph, in.model);
  if (!(in.model[in.instance.t].start < in.model[in.instance.s].start)) return in;
  IntervalInstance out = in;
  for (Vertex v = 0; v < out.model.size(); ++v) {
    const Interval iv = in.model[v];
    out.model[v] = {-iv.end, -iv.start};
  }
  return out;
}

IntervalInstance canonicalize(const IntervalInstance& in) {
  const Instance& inst = in.instance;
  const int n = inst.graph.vertex_count();
  if (in.model[inst.t].start < in.model[inst.s].start) {
    throw InputError("canonicalize needs start(s) <= start(t); mirror first");
  }
  // s first and t last among equal starts.
  auto tie_rank = [&](Vertex v) { return v == inst.s ? 0 : (v == inst.t ? 2 : 1); };
  std::vector<Vertex> order(at(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (in.model[a].start != in.model[b].start) return in.model[a].start < in.model[b].start;
    if (tie_rank(a) != tie_rank(b)) return tie_rank(a) < tie_rank(b);
    return a < b;
  });

  IntervalModel model = in.model;
  bool ties = false;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    ties = ties || in.model[order[k]].start == in.model[order[k + 1]].start;
  }
  if (ties) {
    std::vector<Rational> points;
    for (const Interval& iv : in.model.intervals()) {
      points.push_back(iv.start);
      points.push_back(iv.end);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Rational gap(1);
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
      gap = (k == 0) ? points[1] - points[0] : std::min(gap, points[k + 1] - points[k]);
    }
    const Rational widen = gap / 2;
    const Rational eps = widen / (2 * static_cast<std::int64_t>(n));
    std::int64_t shift = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const bool same = k > 0 && in.model[order[k]].start == in.model[order[k - 1]].start;
      shift = same ? shift + 1 : 0;
      Interval& iv = model[order[k]];
      iv.end += widen;
      iv.start += eps * shift;
      iv.end += eps * shift;
    }
  }

  std::vector<Vertex> keep{inst.s};
  for (Vertex v : order) {
    if (v != inst.s && v != inst.t) keep.push_back(v);
  }
  keep.push_back(inst.t);
  IntervalInstance out = relabel(in, keep, model);
  try {
    validate_proper_model(out.instance.graph, out.model);
  } catch (const InputError& e) {
    throw VerificationError(std::string("tie breaking changed the model: ") + e.what());
  }
  return out;
}

IntervalInstance trim(const IntervalInstance& in) {
  require_ranked(in, "trim");
  const Interval s = in.model[in.instance.s];
  const Interval t = in.model[in.instance.t];
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < in.instance.graph.vertex_count(); ++v) {
    const Interval& iv = in.model[v];
    if (!(iv.end < s.start) && !(iv.start > t.end)) keep.push_back(v);
  }
  return relabel(in, keep, in.model);
}

IntervalInstance normalize(const IntervalInstance& in) {
  return trim(canonicalize(mirror_if_needed(in)));
}

CrossingCounts::CrossingCounts(const Instance& ranked) {
  const int n = ranked.graph.vertex_count();
  ranks_ = std::max(0, n - 2);
  stride_ = static_cast<std::size_t>(ranks_) + 2;
  // row[l][j] = #edges {v_l, v_r}, l < r, r >= j
  std::vector<int> row(stride_ * stride_, 0);
  for (const Edge& e : ranked.graph.edges()) {
    if (e.u < 1 || e.v > ranks_) continue;
    row[static_cast<std::size_t>(e.u) * stride_ + static_cast<std::size_t>(e.v)] += 1;
  }
  for (std::size_t l = 0; l < stride_; ++l) {
    for (std::size_t j = stride_ - 1; j-- > 0;) row[l * stride_ + j] += row[l * stride_ + j + 1];
  }
  prefix_.assign(stride_ * stride_, 0);
  for (std::size_t x = 1; x < stride_; ++x) {
    for (std::size_t j = 0; j < stride_; ++j) {
      prefix_[x * stride_ + j] = prefix_[(x - 1) * stride_ + j] + row[(x - 1) * stride_ + j];
    }
  }
}

std::vector<int> layer_starts(const DpTables& tables) {
  const int lambda = tables.lambda;
  std::vector<int> p(at(lambda + 1), 0);
  p[1] = 1;
  p[at(lambda)] = tables.final_i;
  p[at(lambda - 1)] = tables.final_j;
  for (int d = lambda; d >= 3; --d) {
    p[at(d - 2)] = tables.back[at(d)][at(tables.pair_index(p[at(d - 1)], p[at(d)]))];
  }
  return p;
}

CutSet extract_cut(const Instance& ranked, const DpTables& tables) {
  return cut_from_layers(ranked, layer_starts(tables), tables.lambda);
}

DpResult dp_solve(const IntervalInstance& normalized) {
  if (!normalized.is_normalized()) throw InputError("dp_solve needs a normalized instance");
  const Instance& inst = normalized.instance;
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const int lambda = inst.lambda;
  if (lambda < 0) throw InputError("negative lambda");

  DpResult result;
  const MinCut mc = min_st_cut(g, inst.s, inst.t);
  result.min_cut_size = mc.size;

  if (lambda <= 1) {
    result.branch = DpBranch::kTrivialLambda;
    if (lambda == 1 && g.has_edge(inst.s, inst.t)) result.cut.insert(Edge::make(inst.s, inst.t));
  } else if (lambda >= n - 1) {
    result.branch = DpBranch::kPlainMinCut;
    result.cut = mc.cut;
  } else {
    result.branch = DpBranch::kTables;
    DpTables& tab = result.tables;
    const int N = n - 2;
    tab.ranks = N;
    tab.lambda = lambda;
    tab.crossings = CrossingCounts(inst);
    tab.cost = RankTable(N, lambda);
    tab.frontier = RankTable(N, lambda);
    tab.back.assign(at(lambda + 1), {});
    const std::size_t pairs = static_cast<std::size_t>(N + 2) * static_cast<std::size_t>(N + 2);
    const CrossingCounts& C = tab.crossings;

    std::vector<int> cur(pairs, kInf);
    std::vector<int> prev(pairs, kInf);
    const std::vector<int> above = s_suffix(inst);
    tab.back[2].assign(pairs, -1);
    for (int i = 1; i <= N + 1; ++i) {
      cur[at(tab.pair_index(1, i))] = above[at(i)];
      tab.back[2][at(tab.pair_index(1, i))] = 0;
    }

    auto fill_derived = [&](int d) {
      for (int i = 1; i <= N + 1; ++i) {
        int best = kInf;
        int arg = RankTable::kUnset;
        for (int j = 1; j <= i; ++j) {
          const int v = cur[at(tab.pair_index(j, i))];
          if (v <= best && v < kInf) best = v, arg = j;
        }
        tab.cost(i, d) = best < kInf ? best : RankTable::kUnset;
        tab.frontier(i, d) = arg;
      }
    };
    fill_derived(2);

    std::vector<int> column(at(N + 2));
    for (int d = 3; d <= lambda; ++d) {
      std::swap(cur, prev);
      std::fill(cur.begin(), cur.end(), kInf);
      auto& back = tab.back[at(d)];
      back.assign(pairs, -1);
      for (int j = 1; j <= N + 1; ++j) {
        for (int h = 1; h <= j; ++h) column[at(h)] = prev[at(tab.pair_index(h, j))];
        for (int i = j; i <= N + 1; ++i) {
          int best = kInf;
          int arg = -1;
          for (int h = 1; h <= j; ++h) {
            if (column[at(h)] >= kInf) continue;
            const int v = column[at(h)] + C(h, j, i);
            if (v < best) best = v, arg = h;
          }
          cur[at(tab.pair_index(j, i))] = best;
          back[at(tab.pair_index(j, i))] = arg;
        }
      }
      fill_derived(d);
    }

    const std::vector<int> below = t_prefix(inst);
    const int st = g.has_edge(inst.s, inst.t) ? 1 : 0;
    int best = kInf;
    for (int j = 1; j <= N + 1; ++j) {
      for (int i = j; i <= N + 1; ++i) {
        const int v = cur[at(tab.pair_index(j, i))];
        if (v >= kInf) continue;
        if (v + below[at(i)] + st < best) {
          best = v + below[at(i)] + st;
          tab.final_j = j;
          tab.final_i = i;
        }
      }
    }
    result.cost = best;
    result.cut = extract_cut(inst, tab);
    if (static_cast<int>(result.cut.size()) != result.cost) {
      throw VerificationError("reconstructed cut has " + std::to_string(result.cut.size()) +
                              " edges, table cost is " + std::to_string(result.cost));
    }
  }

  result.cost = static_cast<int>(result.cut.size());
  result.decision = result.cost <= inst.beta;
  if (!verify_cut(inst, result.cut).valid) {
    throw VerificationError("dp cut does not separate s and t within lambda");
  }
  return result;
}

CutSet lift_trimmed_cut(const Instance& original, const CutSet& cut) {
  if (verify_cut(original, cut).valid) return cut;
  for (Vertex end : {original.t, original.s}) {
    CutSet star;
    for (const Neighbor& nb : original.graph.neighbors(end)) star.insert(Edge::make(end, nb.vertex));
    if (star.size() <= cut.size() && verify_cut(original, star).valid) return star;
  }
  throw VerificationError("trimmed cut does not lift to the input instance");
}

DpResult solve_interval(const Instance& inst, const IntervalModel& model) {
  const IntervalInstance base = IntervalInstance::from(inst, model);
  const IntervalInstance norm = normalize(base);
  DpResult result = dp_solve(norm);
  result.cut = lift_trimmed_cut(inst, norm.to_original(result.cut));
  if (static_cast<int>(result.cut.size()) != result.cost) throw VerificationError("lifted cut changed size");
  result.min_cut_size = min_st_cut(inst.graph, inst.s, inst.t).size;
  result.decision = result.cost <= inst.beta;
  if (!verify_cut(inst, result.cut).valid) {
    throw VerificationError("dp cut fails on the input instance");
  }
  return result;
}

bool dp_decide(const Instance& inst, const IntervalModel& model) {
  inst.validate();
  validate_proper_model(inst.graph, model);
  if (min_st_cut(inst.graph, inst.s, inst.t).size <= inst.beta) return true;
  return solve_interval(inst, model).decision;
}

int dp_solve_single_frontier(const IntervalInstance& normalized) {
  if (!normalized.is_normalized()) throw InputError("needs a normalized instance");
  const Instance& inst = normalized.instance;
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const int lambda = inst.lambda;
  const int st = g.has_edge(inst.s, inst.t) ? 1 : 0;
  if (lambda == 0) return 0;
  if (lambda == 1) return st;
  if (lambda >= n - 1) return min_st_cut(g, inst.s, inst.t).size;

  const int N = n - 2;
  const CrossingCounts C(inst);
  RankTable T(N, lambda);
  RankTable S(N, lambda);
  const std::vector<int> above = s_suffix(inst);
  for (int i = 1; i <= N + 1; ++i) {
    T(i, 2) = above[at(i)];
    S(i, 2) = 1;
  }
  for (int d = 3; d <= lambda; ++d) {
    for (int i = 1; i <= N + 1; ++i) {
      int best = kInf;
      int arg = 1;
      for (int j = 1; j <= i; ++j) {
        const int v = T(j, d - 1) + C(S(j, d - 1), j, i);
        if (v <= best) best = v, arg = j;
      }
      T(i, d) = best;
      S(i, d) = arg;
    }
  }
  const std::vector<int> below = t_prefix(inst);
  int best = kInf;
  for (int i = 1; i <= N + 1; ++i) best = std::min(best, T(i, lambda) + below[at(i)] + st);
  return best;
}

bool is_monotone_cut(const Instance& ranked, const CutSet& f) {
  const auto dist = bfs_distances(ranked.graph, ranked.s, EdgeMask(ranked.graph, f));
  for (Vertex v = 1; v + 1 < ranked.graph.vertex_count() - 1; ++v) {
    if (dist[at(v)] > dist[at(v + 1)]) return false;
  }
  return true;
}

namespace {

// Shortest s-v path length over paths whose vertices after s have increasing
// start values; for t only the prefix before the last step must increase.
std::vector<Distance> monotone_distances(const IntervalInstance& in, const EdgeMask& mask) {
  const Graph& g = in.instance.graph;
  const Vertex s = in.instance.s;
  const Vertex t = in.instance.t;
  const int n = g.vertex_count();
  std::vector<Vertex> order(at(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return in.model[a].start < in.model[b].start; });

  std::vector<Distance> inc(at(n));
  inc[at(s)] = Distance(0);
  for (Vertex w : order) {
    if (w == s) continue;
    Distance best;
    for (const Neighbor& nb : g.neighbors(w)) {
      if (mask.removed(nb.edge)) continue;
      if (nb.vertex == s) {
        best = std::min(best, Distance(1));
      } else if (nb.vertex != t && in.model[nb.vertex].start < in.model[w].start &&
                 inc[at(nb.vertex)].is_finite()) {
        best = std::min(best, Distance(inc[at(nb.vertex)].hops() + 1));
      }
    }
    inc[at(w)] = best;
  }
  Distance dt = inc[at(t)];
  for (const Neighbor& nb : g.neighbors(t)) {
    if (mask.removed(nb.edge)) continue;
    if (nb.vertex == s) {
      dt = std::min(dt, Distance(1));
    } else if (inc[at(nb.vertex)].is_finite()) {
      dt = std::min(dt, Distance(inc[at(nb.vertex)].hops() + 1));
    }
  }
  inc[at(t)] = dt;
  return inc;
}

}  // namespace

CutSet monotonize_cut(const IntervalInstance& normalized, const CutSet& f, int d,
                      MonotonizeStats* stats) {
  if (!normalized.is_normalized()) throw InputError("monotonize_cut needs a normalized instance");
  const Instance& inst = normalized.instance;
  const Graph& g = inst.graph;
  EdgeMask mask(g, f);
  if (!bfs_distances(g, inst.s, mask)[at(inst.t)].exceeds(d - 1)) {
    throw InputError("cut does not make dist(s,t) >= " + std::to_string(d));
  }
  if (is_monotone_cut(inst, f)) return f;
  const int n = g.vertex_count();
  const long long cap =
      std::max<long long>(1, static_cast<long long>(g.edge_count()) * n * n);

  auto in_cut = [&](Vertex a, Vertex b) {
    auto e = g.find_edge(a, b);
    return e && mask.removed(*e);
  };
  auto set_cut = [&](Vertex a, Vertex b, bool value) { mask.set(*g.find_edge(a, b), value); };
  const auto& M = normalized.model;

  MonotonizeStats local;
  for (long long iter = 0;; ++iter) {
    if (iter > cap) throw VerificationError("monotonize_cut did not converge");
    const std::vector<Distance> D = monotone_distances(normalized, mask);
    Vertex j = -1;
    for (Vertex v = 1; v + 1 <= n - 2; ++v) {
      if (D[at(v)] > D[at(v + 1)]) {
        j = v;
        break;
      }
    }
    if (j < 0) break;
    const Vertex vj = j;
    const Vertex vk = j + 1;

    std::vector<Vertex> X;
    for (const Neighbor& nb : g.neighbors(vk)) {
      const Vertex x = nb.vertex;
      if (x == vj || !(x == inst.s || M[x].start < M[vj].start)) continue;
      if (in_cut(vj, x) && !in_cut(vk, x)) X.push_back(x);
    }
    std::vector<Vertex> Y;
    for (const Neighbor& nb : g.neighbors(vj)) {
      const Vertex y = nb.vertex;
      if (y == vk || !(y == inst.t || M[y].start > M[vk].start)) continue;
      if (in_cut(vk, y) && !in_cut(vj, y)) Y.push_back(y);
    }

    if (X.size() >= Y.size()) {
      for (Vertex x : X) set_cut(vj, x, false);
      for (Vertex y : Y) set_cut(vj, y, true);
      ++local.case_one;
    } else {
      for (Vertex y : Y) set_cut(vk, y, false);
      for (Vertex x : X) set_cut(vk, x, true);
      ++local.case_two;
    }
    ++local.iterations;
  }

  // Capped layers min(D, d), t on layer d. Every edge spanning two or more
  // layers is already in the repaired cut; keeping only those edges frees the
  // vertices beyond the cap, whose distances may route through t.
  const std::vector<Distance> D = monotone_distances(normalized, mask);
  std::vector<int> layer(at(n), d);
  layer[at(inst.s)] = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v != inst.s && v != inst.t && !D[at(v)].exceeds(d)) layer[at(v)] = D[at(v)].hops();
  }
  CutSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (std::abs(layer[at(ed.u)] - layer[at(ed.v)]) < 2) continue;
    if (!mask.removed(e)) throw VerificationError("layer cut is not contained in the repaired cut");
    out.insert(ed);
  }
  if (out.size() > f.size()) throw VerificationError("monotonize_cut grew the cut");
  if (!bfs_distances(g, inst.s, EdgeMask(g, out))[at(inst.t)].exceeds(d - 1)) {
    throw VerificationError("monotonize_cut lost the distance bound");
  }
  if (!is_monotone_cut(inst, out)) throw VerificationError("monotonize_cut left a violation");
  if (stats) *stats = local;
  return out;
}

}  // namespace lbc
