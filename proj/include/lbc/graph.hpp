#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbc {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Malformed user input: bad ids, non-edges in a cut, inconsistent models.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certificate produced by one of our own algorithms failed its check.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

using CutSet = std::set<Edge>;

/// Hop count, or infinity for unreachable vertices. Infinity compares greater
/// than every finite value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int hops) : hops_(hops) {}
  static constexpr Distance infinite() { return Distance{}; }

  constexpr bool is_finite() const { return hops_ >= 0; }
  constexpr int hops() const {
    if (!is_finite()) throw std::logic_error("hops() on infinite distance");
    return hops_;
  }

  constexpr bool operator==(const Distance&) const = default;
  constexpr std::strong_ordering operator<=>(const Distance& o) const {
    if (is_finite() != o.is_finite()) {
      return is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return hops_ <=> o.hops_;
  }
  constexpr bool exceeds(int bound) const { return !is_finite() || hops_ > bound; }

  std::string to_string() const { return is_finite() ? std::to_string(hops_) : "inf"; }

 private:
  int hops_ = -1;
};

struct Neighbor {
  Vertex vertex;
  EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1. Edge ids follow the
/// order in which edges were supplied; adjacency lists are sorted by neighbor.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool is_vertex(Vertex v) const { return v >= 0 && v < vertex_count_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  /// Edge set comparison, independent of edge order.
  bool same_edges(const Graph& other) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

/// Per-edge removal flags; the graph minus a cut without copying it.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(const Graph& g) : removed_(static_cast<std::size_t>(g.edge_count()), 0) {}
  EdgeMask(const Graph& g, const CutSet& cut);

  bool removed(EdgeId e) const {
    return !removed_.empty() && removed_[static_cast<std::size_t>(e)] != 0;
  }
  void set(EdgeId e, bool value) { removed_[static_cast<std::size_t>(e)] = value ? 1 : 0; }

 private:
  std::vector<std::uint8_t> removed_;
};

struct Instance {
  Graph graph;
  Vertex s = 0;
  Vertex t = 1;
  int beta = 0;
  int lambda = 0;

  /// Checks terminals and bounds; throws InputError on violation.
  void validate() const;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const EdgeMask& removed = {});

Graph apply_cut(const Graph& g, const CutSet& cut);

struct CutVerdict {
  bool valid = false;
  Distance distance;               // dist(s,t) in G - F
  std::vector<Vertex> witness;     // an s-t path of length <= lambda when !valid
};

CutVerdict verify_cut(const Instance& inst, const CutSet& cut);

struct MinCut {
  int size = 0;
  CutSet cut;
};

/// Minimum s-t edge cut via augmenting paths on unit capacities.
MinCut min_st_cut(const Graph& g, Vertex s, Vertex t);

/// Some s-t path with at most `lambda` edges (a shortest one), or nullopt.
std::optional<std::vector<Vertex>> shortest_bounded_path(const Graph& g, Vertex s, Vertex t,
                                                         int lambda, const EdgeMask& removed = {});

}  // namespace lbc
