#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lbc/graph.hpp"
#include "lbc/reductions.hpp"

namespace lbc {

struct FvsWitness {
  std::set<Vertex> vertices;
};

/// {s, t} plus both middle vertices of every vertex-selection gadget.
FvsWitness build_fvs_witness(const ReductionOutput& out);

/// True iff g minus the witness is a forest. Ids outside g are ignored.
bool verify_fvs(const Graph& g, const FvsWitness& w);

struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;

  int width() const;  // max bag size - 1; -1 when there are no bags
};

enum class DecompositionFault { kNone, kUnknownVertex, kUncoveredVertex, kUncoveredEdge, kNotContiguous };

struct DecompositionVerdict {
  bool valid = false;
  int width = -1;
  DecompositionFault fault = DecompositionFault::kNone;
  Vertex vertex = -1;  // offending vertex (all faults but kUncoveredEdge)
  Edge edge;           // offending edge for kUncoveredEdge
};

DecompositionVerdict verify_path_decomposition(const Graph& g, const PathDecomposition& pd);

/// Keeps only vertices accepted by `keep`, dropping bags that become empty.
PathDecomposition restrict_decomposition(const PathDecomposition& pd,
                                         const std::function<bool(Vertex)>& keep);

/// Result of repeatedly contracting eligible degree-two vertices. Vertex ids are
/// unchanged; suppressed vertices are left isolated.
struct Suppression {
  Graph graph;
  std::vector<Vertex> removed;
  /// Original path behind each contracted edge, from edge.u to edge.v.
  std::map<Edge, std::vector<Vertex>> paths;

  /// Original path behind an edge of `graph` (just its endpoints if not contracted).
  std::vector<Vertex> path(Vertex from, Vertex to) const;
  /// Re-inserts every suppressed vertex.
  Graph expand() const;
};

/// Vertices in `keep` are never contracted. A vertex is skipped when its two
/// neighbours are already adjacent, so the result stays simple.
Suppression suppress_degree_two(const Graph& g, const std::set<Vertex>& keep = {});

/// Path decomposition of a pathwidth-construction output with width <= 2k + 11.
PathDecomposition build_pw_witness(const ReductionOutput& out);

/// Decompositions of single gadgets (s, t and the end vertices of other
/// gadgets removed): width <= 5 for vertex selection, <= 9 for incidence.
PathDecomposition build_vertex_selection_witness(const ReductionOutput& out, int g);
PathDecomposition build_incidence_witness(const ReductionOutput& out, int i, int j);

}  // namespace lbc
