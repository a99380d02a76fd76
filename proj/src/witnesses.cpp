#include "lbc/witnesses.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lbc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void require_roles(const ReductionOutput& out, ReductionKind kind) {
  if (out.params.kind != kind) throw InputError("reduction output of the wrong kind");
  if (static_cast<int>(out.roles.size()) != out.instance.graph.vertex_count()) {
    throw InputError("role tags missing");
  }
}

}  // namespace

FvsWitness build_fvs_witness(const ReductionOutput& out) {
  require_roles(out, ReductionKind::kFeedbackVertex);
  FvsWitness w;
  w.vertices = {out.instance.s, out.instance.t};
  for (int i = 1; i <= out.params.k; ++i) {
    w.vertices.insert(out.vertex(Role{RoleKind::kMiddleU, i, 0, 0, 0, 0, 0}));
    w.vertices.insert(out.vertex(Role{RoleKind::kMiddleL, i, 0, 0, 0, 0, 0}));
  }
  if (static_cast<int>(w.vertices.size()) != 2 * out.params.k + 2) {
    throw VerificationError("feedback vertex witness has the wrong size");
  }
  return w;
}

bool verify_fvs(const Graph& g, const FvsWitness& w) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (w.vertices.count(e.u) || w.vertices.count(e.v)) continue;
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

int PathDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& bag : bags) widest = std::max(widest, bag.size());
  return static_cast<int>(widest) - 1;
}

DecompositionVerdict verify_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  DecompositionVerdict verdict;
  const int n = g.vertex_count();
  constexpr int kNever = -1;
  std::vector<int> first(static_cast<std::size_t>(n), kNever), last(static_cast<std::size_t>(n), kNever);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < pd.bags.size(); ++b) {
    std::set<Vertex> seen;
    for (Vertex v : pd.bags[b]) {
      if (!g.is_vertex(v)) {
        verdict.fault = DecompositionFault::kUnknownVertex;
        verdict.vertex = v;
        return verdict;
      }
      if (!seen.insert(v).second) continue;
      const auto V = static_cast<std::size_t>(v);
      if (first[V] == kNever) first[V] = static_cast<int>(b);
      last[V] = static_cast<int>(b);
      ++count[V];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto V = static_cast<std::size_t>(v);
    if (first[V] == kNever) {
      verdict.fault = DecompositionFault::kUncoveredVertex;
      verdict.vertex = v;
      return verdict;
    }
    if (last[V] - first[V] + 1 != count[V]) {
      verdict.fault = DecompositionFault::kNotContiguous;
      verdict.vertex = v;
      return verdict;
    }
  }
  // With contiguous runs, an edge is covered iff the two runs overlap.
  for (const Edge& e : g.edges()) {
    const auto U = static_cast<std::size_t>(e.u), V = static_cast<std::size_t>(e.v);
    if (std::max(first[U], first[V]) > std::min(last[U], last[V])) {
      verdict.fault = DecompositionFault::kUncoveredEdge;
      verdict.edge = e;
      return verdict;
    }
  }
  verdict.valid = true;
  verdict.width = pd.width();
  return verdict;
}

PathDecomposition restrict_decomposition(const PathDecomposition& pd,
                                         const std::function<bool(Vertex)>& keep) {
  PathDecomposition out;
  for (const auto& bag : pd.bags) {
    std::vector<Vertex> kept;
    std::copy_if(bag.begin(), bag.end(), std::back_inserter(kept), keep);
    if (!kept.empty()) out.bags.push_back(std::move(kept));
  }
  return out;
}

std::vector<Vertex> Suppression::path(Vertex from, Vertex to) const {
  auto it = paths.find(Edge::make(from, to));
  std::vector<Vertex> p = it == paths.end() ? std::vector<Vertex>{std::min(from, to), std::max(from, to)}
                                            : it->second;
  if (p.front() != from) std::reverse(p.begin(), p.end());
  return p;
}

Graph Suppression::expand() const {
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    auto it = paths.find(e);
    if (it == paths.end()) {
      edges.push_back(e);
      continue;
    }
    for (std::size_t k = 0; k + 1 < it->second.size(); ++k) {
      edges.push_back(Edge::make(it->second[k], it->second[k + 1]));
    }
  }
  return Graph(graph.vertex_count(), std::move(edges));
}

Suppression suppress_degree_two(const Graph& g, const std::set<Vertex>& keep) {
  const int n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  Suppression result;
  // Takes the path behind x-y out of the map, oriented from x.
  auto take = [&result](Vertex x, Vertex y) {
    std::vector<Vertex> p;
    auto it = result.paths.find(Edge::make(x, y));
    if (it == result.paths.end()) {
      p = {x, y};
    } else {
      p = std::move(it->second);
      result.paths.erase(it);
      if (p.front() != x) std::reverse(p.begin(), p.end());
    }
    return p;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      auto& nv = adj[static_cast<std::size_t>(v)];
      if (nv.size() != 2 || keep.count(v)) continue;
      const Vertex x = *nv.begin();
      const Vertex y = *nv.rbegin();
      if (adj[static_cast<std::size_t>(x)].count(y)) continue;
      std::vector<Vertex> joined = take(x, v);
      std::vector<Vertex> tail = take(v, y);
      joined.insert(joined.end(), tail.begin() + 1, tail.end());
      if (joined.front() > joined.back()) std::reverse(joined.begin(), joined.end());
      result.paths[Edge::make(x, y)] = std::move(joined);
      adj[static_cast<std::size_t>(x)].erase(v);
      adj[static_cast<std::size_t>(y)].erase(v);
      adj[static_cast<std::size_t>(x)].insert(y);
      adj[static_cast<std::size_t>(y)].insert(x);
      nv.clear();
      result.removed.push_back(v);
      changed = true;
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (v < w) edges.push_back({v, w});
    }
  }
  result.graph = Graph(n, std::move(edges));
  return result;
}

namespace {

bool vertex_selection_kind(RoleKind k) {
  switch (k) {
    case RoleKind::kUpper: case RoleKind::kLower: case RoleKind::kPathU: case RoleKind::kPathL:
    case RoleKind::kRungUL: case RoleKind::kAttachSU: case RoleKind::kAttachSL:
      return true;
    default:
      return false;
  }
}

bool incidence_kind(RoleKind k) {
  return (k >= RoleKind::kRowA && k <= RoleKind::kRowD) ||
         (k >= RoleKind::kAttachUA && k <= RoleKind::kLinkBD);
}

// Base bags follow the gadget schedules over anchor vertices; suppressed
// subdivision paths are then spliced back in.
class PwBuilder {
 public:
  PwBuilder(const ReductionOutput& out, std::vector<Vertex> hubs, std::function<bool(Vertex)> member)
      : out_(out), hubs_(std::move(hubs)), member_(std::move(member)) {}

  void hub_bag() { add_bag({}); }

  void vertex_selection(int g) {
    for (int p = 1; p <= out_.params.n; ++p) {
      add_bag({anchor(RoleKind::kUpper, g, 0, p - 1), anchor(RoleKind::kLower, g, 0, p - 1),
               anchor(RoleKind::kUpper, g, 0, p), anchor(RoleKind::kLower, g, 0, p)});
    }
  }

  void incidence(int i, int j) {
    const int n = out_.params.n;
    const int m = out_.params.m;
    if (target_.empty()) target_ = link_targets();
    auto window = [&](int p, int q) {
      add_bag({anchor(RoleKind::kRowA, i, j, p), anchor(RoleKind::kRowB, i, j, p),
               anchor(RoleKind::kRowA, i, j, p + 1), anchor(RoleKind::kRowB, i, j, p + 1),
               anchor(RoleKind::kRowC, i, j, q), anchor(RoleKind::kRowD, i, j, q),
               anchor(RoleKind::kRowC, i, j, q + 1), anchor(RoleKind::kRowD, i, j, q + 1)});
    };
    // Advance c/d until the window reaches the link target of a_{p+1}, else a/b.
    int p = 0, q = 0;
    window(p, q);
    while (p < n - 1 || q < m - 1) {
      const int beta = p + 1 <= n - 1 ? target_[static_cast<std::size_t>(p + 1)] : m;
      if (p == n - 1 || (q < m - 1 && q + 1 < beta)) {
        ++q;
      } else {
        ++p;
      }
      window(p, q);
    }
  }

  // Re-inserts every suppressed path after the first base bag holding its
  // anchor ends, as a run of bags "base bag + two consecutive path vertices".
  PathDecomposition build() const {
    const Graph& h = out_.instance.graph;
    const int count = h.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
      if (member_(e.u) && member_(e.v)) edges.push_back(e);
    }
    const Graph local(count, std::move(edges));
    std::set<Vertex> anchors;
    for (Vertex v = 0; v < count; ++v) {
      if (member_(v) && out_.roles[static_cast<std::size_t>(v)].pos == 0) anchors.insert(v);
    }
    const Suppression sup = suppress_degree_two(local, anchors);

    std::vector<int> first(static_cast<std::size_t>(count), std::numeric_limits<int>::max());
    std::vector<int> last(static_cast<std::size_t>(count), -1);
    for (std::size_t b = 0; b < base_.size(); ++b) {
      for (Vertex v : base_[b]) {
        first[static_cast<std::size_t>(v)] = std::min(first[static_cast<std::size_t>(v)], static_cast<int>(b));
        last[static_cast<std::size_t>(v)] = static_cast<int>(b);
      }
    }
    std::vector<std::vector<std::vector<Vertex>>> attached(base_.size());
    auto attach = [&](std::vector<Vertex> chain, bool open_end) {
      const auto X = static_cast<std::size_t>(chain.front());
      const auto Y = static_cast<std::size_t>(chain.back());
      const int b = open_end ? first[X] : std::max(first[X], first[Y]);
      if (b > (open_end ? last[X] : std::min(last[X], last[Y]))) {
        throw VerificationError("no base bag holds the ends of a gadget path");
      }
      if (chain.size() > 2 || open_end) attached[static_cast<std::size_t>(b)].push_back(std::move(chain));
    };

    const Graph& skeleton = sup.graph;
    for (const Edge& e : skeleton.edges()) {
      if (anchors.count(e.u) && anchors.count(e.v)) attach(sup.path(e.u, e.v), false);
    }
    // Leftovers: one vertex of a path parallel to an edge, or the loose end of
    // a path whose other end lies outside the member set.
    for (Vertex w = 0; w < count; ++w) {
      if (anchors.count(w) || skeleton.degree(w) == 0) continue;
      auto nbs = skeleton.neighbors(w);
      for (const Neighbor& nb : nbs) {
        if (!anchors.count(nb.vertex)) throw VerificationError("unexpected vertex left after suppression");
      }
      std::vector<Vertex> chain = sup.path(nbs[0].vertex, w);
      if (nbs.size() == 1) {
        attach(std::move(chain), true);
        continue;
      }
      if (nbs.size() != 2) throw VerificationError("unexpected vertex left after suppression");
      std::vector<Vertex> tail = sup.path(w, nbs[1].vertex);
      chain.insert(chain.end(), tail.begin() + 1, tail.end());
      attach(std::move(chain), false);
    }

    PathDecomposition pd;
    for (std::size_t b = 0; b < base_.size(); ++b) {
      pd.bags.push_back(base_[b]);
      for (const auto& chain : attached[b]) {
        for (std::size_t x = 0; x + 1 < chain.size(); ++x) {
          std::vector<Vertex> bag = base_[b];
          for (Vertex v : {chain[x], chain[x + 1]}) {
            if (!std::binary_search(base_[b].begin(), base_[b].end(), v)) bag.push_back(v);
          }
          pd.bags.push_back(std::move(bag));
        }
      }
    }
    return pd;
  }

 private:
  Vertex anchor(RoleKind kind, int i, int j, int p) const {
    return out_.vertex(Role{kind, i, j, p, 0, 0, 0});
  }

  std::vector<int> link_targets() const {
    const int n = out_.params.n;
    std::vector<int> index(static_cast<std::size_t>(n), 0);
    for (std::size_t x = 0; x < out_.source_parts[0].size(); ++x) {
      index[static_cast<std::size_t>(out_.source_parts[0][x])] = static_cast<int>(x) + 1;
    }
    std::vector<int> target(static_cast<std::size_t>(n), 0);
    for (int p = 1; p < n; ++p) {
      for (const Edge& e : out_.source_edges) {
        if (index[static_cast<std::size_t>(e.u)] <= p) ++target[static_cast<std::size_t>(p)];
      }
    }
    return target;
  }

  void add_bag(std::vector<Vertex> extra) {
    extra.insert(extra.end(), hubs_.begin(), hubs_.end());
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    base_.push_back(std::move(extra));
  }

  const ReductionOutput& out_;
  std::vector<Vertex> hubs_;
  std::function<bool(Vertex)> member_;
  std::vector<int> target_;
  std::vector<std::vector<Vertex>> base_;
};

}  // namespace

PathDecomposition build_pw_witness(const ReductionOutput& out) {
  require_roles(out, ReductionKind::kPathwidth);
  std::vector<Vertex> hubs{out.instance.s, out.instance.t};
  for (int i = 1; i <= out.params.k; ++i) {
    hubs.push_back(out.vertex(Role{RoleKind::kUpper, i, 0, out.params.n, 0, 0, 0}));
    hubs.push_back(out.vertex(Role{RoleKind::kLower, i, 0, out.params.n, 0, 0, 0}));
  }
  PwBuilder b(out, std::move(hubs), [](Vertex) { return true; });
  b.hub_bag();  // connectivity paths hang off the hub-only bag
  for (int g = 1; g <= out.params.k; ++g) b.vertex_selection(g);
  for (int i = 1; i <= out.params.k; ++i) {
    for (int j = i + 1; j <= out.params.k; ++j) b.incidence(i, j);
  }
  return b.build();
}

PathDecomposition build_vertex_selection_witness(const ReductionOutput& out, int g) {
  require_roles(out, ReductionKind::kPathwidth);
  PwBuilder b(out, {}, [&out, g](Vertex v) {
    const Role& r = out.roles[static_cast<std::size_t>(v)];
    return vertex_selection_kind(r.kind) && r.i == g;
  });
  b.vertex_selection(g);
  return b.build();
}

PathDecomposition build_incidence_witness(const ReductionOutput& out, int i, int j) {
  require_roles(out, ReductionKind::kPathwidth);
  PwBuilder b(out, {}, [&out, i, j](Vertex v) {
    const Role& r = out.roles[static_cast<std::size_t>(v)];
    return incidence_kind(r.kind) && r.i == i && r.j == j;
  });
  b.incidence(i, j);
  return b.build();
}

}  // namespace lbc
