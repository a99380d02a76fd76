#include "lbc/graph.hpp"

#include <algorithm>
#include <queue>

namespace lbc {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count), 0);
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (!is_vertex(raw.u) || !is_vertex(raw.v)) {
      throw InputError("edge endpoint out of range: {" + std::to_string(raw.u) + "," +
                       std::to_string(raw.v) + "}");
    }
    if (raw.u == raw.v) throw InputError("self-loop at vertex " + std::to_string(raw.u));
    edges_.push_back(Edge::make(raw.u, raw.v));
    ++degree[static_cast<std::size_t>(raw.u)];
    ++degree[static_cast<std::size_t>(raw.v)];
  }

  offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (std::size_t v = 0; v < degree.size(); ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    adjacency_[fill[static_cast<std::size_t>(ed.u)]++] = {ed.v, static_cast<EdgeId>(e)};
    adjacency_[fill[static_cast<std::size_t>(ed.v)]++] = {ed.u, static_cast<EdgeId>(e)};
  }
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    auto dup = std::adjacent_find(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.vertex == b.vertex;
    });
    if (dup != last) {
      throw InputError("parallel edge {" + std::to_string(v) + "," + std::to_string(dup->vertex) +
                       "}");
    }
  }
}

std::span<const Neighbor> Graph::neighbors(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (!is_vertex(a) || !is_vertex(b) || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto adj = neighbors(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b,
                             [](const Neighbor& n, Vertex x) { return n.vertex < x; });
  if (it == adj.end() || it->vertex != b) return std::nullopt;
  return it->edge;
}

bool Graph::same_edges(const Graph& other) const {
  if (vertex_count_ != other.vertex_count_ || edge_count() != other.edge_count()) return false;
  std::vector<Edge> a(edges_.begin(), edges_.end());
  std::vector<Edge> b(other.edges_.begin(), other.edges_.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

EdgeMask::EdgeMask(const Graph& g, const CutSet& cut) : EdgeMask(g) {
  for (const Edge& e : cut) {
    auto id = g.find_edge(e.u, e.v);
    if (!id) {
      throw InputError("cut contains non-edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "}");
    }
    set(*id, true);
  }
}

void Instance::validate() const {
  if (!graph.is_vertex(s) || !graph.is_vertex(t)) throw InputError("terminal out of range");
  if (s == t) throw InputError("s and t must differ");
  if (beta < 0 || lambda < 0) throw InputError("beta and lambda must be non-negative");
  if (beta > graph.edge_count()) throw InputError("beta exceeds edge count");
  if (lambda > graph.vertex_count()) throw InputError("lambda exceeds vertex count");
}

namespace {

// BFS that records parents; stops expanding past `depth_limit` when given.
std::vector<Distance> bfs_with_parents(const Graph& g, Vertex source, const EdgeMask& removed,
                                       std::vector<Vertex>* parent, int depth_limit = -1) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()));
  if (parent) parent->assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(source)] = Distance(0);
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    const int du = dist[static_cast<std::size_t>(u)].hops();
    if (depth_limit >= 0 && du >= depth_limit) continue;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (removed.removed(nb.edge)) continue;
      auto& dv = dist[static_cast<std::size_t>(nb.vertex)];
      if (dv.is_finite()) continue;
      dv = Distance(du + 1);
      if (parent) (*parent)[static_cast<std::size_t>(nb.vertex)] = u;
      queue.push(nb.vertex);
    }
  }
  return dist;
}

std::vector<Vertex> trace_path(const std::vector<Vertex>& parent, Vertex s, Vertex t) {
  std::vector<Vertex> path{t};
  for (Vertex v = t; v != s;) {
    v = parent[static_cast<std::size_t>(v)];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const EdgeMask& removed) {
  if (!g.is_vertex(source)) throw InputError("bfs source out of range");
  return bfs_with_parents(g, source, removed, nullptr);
}

Graph apply_cut(const Graph& g, const CutSet& cut) {
  const EdgeMask mask(g, cut);
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(g.edge_count()) - cut.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mask.removed(e)) kept.push_back(g.edge(e));
  }
  return Graph(g.vertex_count(), std::move(kept));
}

CutVerdict verify_cut(const Instance& inst, const CutSet& cut) {
  const EdgeMask mask(inst.graph, cut);
  std::vector<Vertex> parent;
  auto dist = bfs_with_parents(inst.graph, inst.s, mask, &parent);
  CutVerdict verdict;
  verdict.distance = dist[static_cast<std::size_t>(inst.t)];
  verdict.valid = verdict.distance.exceeds(inst.lambda);
  if (!verdict.valid) verdict.witness = trace_path(parent, inst.s, inst.t);
  return verdict;
}

MinCut min_st_cut(const Graph& g, Vertex s, Vertex t) {
  if (!g.is_vertex(s) || !g.is_vertex(t) || s == t) throw InputError("invalid terminals");
  // flow[e] > 0 means one unit from edge(e).u to edge(e).v.
  std::vector<int> flow(static_cast<std::size_t>(g.edge_count()), 0);
  auto residual = [&](Vertex from, EdgeId e) {
    const int f = flow[static_cast<std::size_t>(e)];
    return from == g.edge(e).u ? 1 - f : 1 + f;
  };

  std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()));
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()));
  int value = 0;
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<Vertex> queue;
    queue.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
      const Vertex u = queue.front();
      queue.pop();
      for (const Neighbor& nb : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(nb.vertex)] || residual(u, nb.edge) <= 0) continue;
        seen[static_cast<std::size_t>(nb.vertex)] = 1;
        via[static_cast<std::size_t>(nb.vertex)] = nb.edge;
        queue.push(nb.vertex);
      }
    }
    if (!seen[static_cast<std::size_t>(t)]) break;
    for (Vertex v = t; v != s;) {
      const EdgeId e = via[static_cast<std::size_t>(v)];
      const Vertex u = g.edge(e).other(v);
      flow[static_cast<std::size_t>(e)] += (u == g.edge(e).u) ? 1 : -1;
      v = u;
    }
    ++value;
  }

  MinCut result;
  result.size = value;
  for (const Edge& e : g.edges()) {
    if (seen[static_cast<std::size_t>(e.u)] != seen[static_cast<std::size_t>(e.v)]) {
      result.cut.insert(e);
    }
  }
  if (static_cast<int>(result.cut.size()) != value) {
    throw VerificationError("min cut size does not match flow value");
  }
  return result;
}

std::optional<std::vector<Vertex>> shortest_bounded_path(const Graph& g, Vertex s, Vertex t,
                                                         int lambda, const EdgeMask& removed) {
  if (!g.is_vertex(s) || !g.is_vertex(t)) throw InputError("terminal out of range");
  if (lambda < 0) return std::nullopt;
  std::vector<Vertex> parent;
  auto dist = bfs_with_parents(g, s, removed, &parent, lambda);
  if (dist[static_cast<std::size_t>(t)].exceeds(lambda)) return std::nullopt;
  return trace_path(parent, s, t);
}

}  // namespace lbc
