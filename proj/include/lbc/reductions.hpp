#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbc/graph.hpp"

namespace lbc {

/// Clique source instance with its index order: vertex(p) = order[p-1].
/// Edges e_1..e_m are kept in lexicographic order of (index(v), index(w)).
class CliqueInstance {
 public:
  /// Picks an order in which every vertex except the last of each component
  /// has a later neighbour (reverse BFS), which keeps cross-link targets distinct.
  static CliqueInstance make(Graph g, int k);
  static CliqueInstance with_order(Graph g, int k, std::vector<Vertex> order);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  int n() const { return graph_.vertex_count(); }
  int m() const { return graph_.edge_count(); }

  int index(Vertex v) const { return index_[static_cast<std::size_t>(v)]; }
  Vertex vertex(int p) const { return order_[static_cast<std::size_t>(p - 1)]; }
  const std::vector<Vertex>& order() const { return order_; }
  /// e_1..e_m as (v_p, w_p) with index(v_p) < index(w_p).
  const std::vector<Edge>& ordered_edges() const { return ordered_; }

 private:
  Graph graph_;
  int k_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> index_;
  std::vector<Edge> ordered_;  // u = v_p, v = w_p (not sorted by id)
};

/// k-partite graph with equal parts; parts[i][x-1] = vertex_i(x).
class MulticoloredCliqueInstance {
 public:
  static MulticoloredCliqueInstance make(Graph g, std::vector<std::vector<Vertex>> parts);

  const Graph& graph() const { return graph_; }
  int k() const { return static_cast<int>(parts_.size()); }
  int nu() const { return parts_.empty() ? 0 : static_cast<int>(parts_[0].size()); }
  int part(Vertex v) const { return part_[static_cast<std::size_t>(v)]; }
  int index(Vertex v) const { return index_[static_cast<std::size_t>(v)]; }
  Vertex vertex(int part, int x) const {
    return parts_[static_cast<std::size_t>(part)][static_cast<std::size_t>(x - 1)];
  }
  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> parts_;
  std::vector<int> part_;
  std::vector<int> index_;
};

enum class RoleKind : std::uint8_t {
  kSource,
  kSink,
  // pathwidth construction: anchors
  kUpper,  // u^i_p
  kLower,  // l^i_p
  kRowA,   // a^{i,j}_p
  kRowB,
  kRowC,   // c^{i,j}_p, p in [0, m]
  kRowD,
  // pathwidth construction: subdivision paths
  kPathU,
  kPathL,
  kRungUL,
  kAttachSU,
  kAttachSL,
  kAttachUA,
  kAttachLB,
  kRungAB,
  kPathA,
  kPathB,
  kAttachAT,
  kAttachBT,
  kAttachUC,
  kAttachLD,
  kRungCD,
  kPathC,
  kPathD,
  kAttachCT,
  kAttachDT,
  kLinkAC,  // from a_p to c_q
  kLinkAD,
  kLinkBC,
  kLinkBD,
  kConnT,     // u^i_n to t
  kConnTBar,  // l^i_n to t
  kConnS,     // s to u^i_n, per ordered pair (i, j)
  kConnSBar,  // s to l^i_n
  // feedback-vertex construction
  kMiddleU,  // u_i
  kMiddleL,  // l_i
  kPathS,    // S_i^{j,p}: s to u_i
  kPathSBar,
  kPathT,    // T_i^{j,p}: u_i to t
  kPathTBar,
  kEdgeVertex,  // v_e, p = edge number
  kEdgeAttach,  // p = edge number, q = 0..3 for u_a, l_a, u_b, l_b
};

/// Structured vertex tag. Anchors have pos == 0; a subdivision vertex records
/// the path it lies on and its position counted from the path's first end.
struct Role {
  RoleKind kind = RoleKind::kSource;
  int i = 0;
  int j = 0;
  int p = 0;
  int q = 0;
  int copy = 0;
  int pos = 0;

  auto operator<=>(const Role&) const = default;
};

std::string_view role_kind_name(RoleKind kind);
std::optional<RoleKind> parse_role_kind(std::string_view name);
std::string format_role(const Role& r);
Role parse_role(std::string_view text);  // throws InputError

enum class ReductionKind { kPathwidth, kFeedbackVertex };

struct ReductionParams {
  ReductionKind kind = ReductionKind::kPathwidth;
  int k = 0;
  int n = 0;
  int m = 0;
  int eta = 0;  // pathwidth construction only
  int nu = 0;   // feedback-vertex construction only
};

struct ReductionOutput {
  Instance instance;
  std::vector<Role> roles;  // one per vertex of H
  ReductionParams params;
  // Source data needed by forward cuts and decoders.
  std::vector<std::vector<Vertex>> source_parts;  // pathwidth: one part in index order
  std::vector<Edge> source_edges;                 // e_1..e_m as (v_p, w_p)

  /// Vertex carrying role r; throws InputError when absent.
  Vertex vertex(const Role& r) const;
  std::optional<Vertex> find(const Role& r) const;
  void index_roles();

 private:
  std::map<Role, Vertex> by_role_;
};

/// Closed-form hub degrees and the bound for all other vertices.
struct DegreeProfile {
  int source = 0;
  int sink = 0;
  int upper_end = 0;  // u^i_n and l^i_n
  int other_max = 0;
};

DegreeProfile pw_degree_profile(const ReductionOutput& out);

ReductionOutput gen_pw(const CliqueInstance& cq);
ReductionOutput gen_fvs(const MulticoloredCliqueInstance& mc);

CutSet forward_cut_pw(const ReductionOutput& out, const std::vector<Vertex>& clique);
CutSet forward_cut_fvs(const ReductionOutput& out, const std::vector<Vertex>& clique);

std::optional<std::vector<Vertex>> decode_pw(const ReductionOutput& out, const CutSet& f);
std::optional<std::vector<Vertex>> decode_fvs(const ReductionOutput& out, const CutSet& f);

struct PlantedClique {
  CliqueInstance instance;
  std::vector<Vertex> clique;  // sorted by index
};

struct PlantedMulticolored {
  MulticoloredCliqueInstance instance;
  std::vector<Vertex> clique;  // one vertex per part, in part order
};

/// Random graph on n vertices with m edges containing a k-clique; needs m >= n.
PlantedClique planted_clique(int n, int m, int k, std::uint64_t seed);
/// Random k-partite graph, parts of size nu, m edges including a multicolored k-clique.
PlantedMulticolored planted_multicolored_clique(int k, int nu, int m, std::uint64_t seed);

}  // namespace lbc
