#include "lbc/reductions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace lbc {

namespace {

constexpr std::array<std::string_view, 43> kRoleNames = {
    "source",     "sink",        "upper",      "lower",      "row_a",      "row_b",
    "row_c",      "row_d",       "path_u",     "path_l",     "rung_ul",    "attach_su",
    "attach_sl",  "attach_ua",   "attach_lb",  "rung_ab",    "path_a",     "path_b",
    "attach_at",  "attach_bt",   "attach_uc",  "attach_ld",  "rung_cd",    "path_c",
    "path_d",     "attach_ct",   "attach_dt",  "link_ac",    "link_ad",    "link_bc",
    "link_bd",    "conn_t",      "conn_tbar",  "conn_s",     "conn_sbar",  "middle_u",
    "middle_l",   "path_s",      "path_sbar",  "path_t",     "path_tbar",  "edge_vertex",
    "edge_attach",
};
static_assert(static_cast<std::size_t>(RoleKind::kEdgeAttach) + 1 == kRoleNames.size());

Role make_role(RoleKind kind, int i = 0, int j = 0, int p = 0, int q = 0, int copy = 0) {
  return Role{kind, i, j, p, q, copy, 0};
}

class Builder {
 public:
  Vertex anchor(const Role& r) {
    roles_.push_back(r);
    return static_cast<Vertex>(roles_.size() - 1);
  }

  void edge(Vertex a, Vertex b) { edges_.push_back(Edge::make(a, b)); }

  // Path of `length` edges from a to b; interior vertices get pos 1..length-1 from a.
  void path(Vertex a, Vertex b, int length, Role r) {
    if (length < 1) throw std::logic_error("gadget path of non-positive length");
    Vertex prev = a;
    for (int pos = 1; pos < length; ++pos) {
      r.pos = pos;
      const Vertex v = anchor(r);
      edge(prev, v);
      prev = v;
    }
    edge(prev, b);
  }

  ReductionOutput finish(Vertex s, Vertex t, int beta, int lambda, const ReductionParams& params) {
    ReductionOutput out;
    out.instance.graph = Graph(static_cast<int>(roles_.size()), std::move(edges_));
    out.instance.s = s;
    out.instance.t = t;
    out.instance.beta = beta;
    out.instance.lambda = lambda;
    out.roles = std::move(roles_);
    out.params = params;
    out.index_roles();
    return out;
  }

 private:
  std::vector<Role> roles_;
  std::vector<Edge> edges_;
};

// q_p for p = 0..n-1: number of edges whose smaller-index endpoint has index <= p.
std::vector<int> link_targets(int n, const std::vector<int>& first_index) {
  std::vector<int> q(static_cast<std::size_t>(n), 0);
  for (int p = 1; p < n; ++p) {
    q[static_cast<std::size_t>(p)] = static_cast<int>(
        std::count_if(first_index.begin(), first_index.end(), [p](int x) { return x <= p; }));
  }
  return q;
}

std::vector<int> source_index(const ReductionOutput& out) {
  std::vector<int> index(static_cast<std::size_t>(out.params.n), 0);
  int x = 1;
  for (Vertex v : out.source_parts.at(0)) index[static_cast<std::size_t>(v)] = x++;
  return index;
}

std::set<Edge> source_edge_set(const ReductionOutput& out) {
  std::set<Edge> set;
  for (const Edge& e : out.source_edges) set.insert(Edge::make(e.u, e.v));
  return set;
}

void require_kind(const ReductionOutput& out, ReductionKind kind) {
  if (out.params.kind != kind) throw InputError("reduction output of the wrong kind");
}

}  // namespace

std::string_view role_kind_name(RoleKind kind) {
  return kRoleNames[static_cast<std::size_t>(kind)];
}

std::optional<RoleKind> parse_role_kind(std::string_view name) {
  for (std::size_t k = 0; k < kRoleNames.size(); ++k) {
    if (kRoleNames[k] == name) return static_cast<RoleKind>(k);
  }
  return std::nullopt;
}

std::string format_role(const Role& r) {
  std::ostringstream os;
  os << role_kind_name(r.kind) << ' ' << r.i << ' ' << r.j << ' ' << r.p << ' ' << r.q << ' '
     << r.copy << ' ' << r.pos;
  return os.str();
}

Role parse_role(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string name;
  Role r;
  if (!(is >> name >> r.i >> r.j >> r.p >> r.q >> r.copy >> r.pos)) {
    throw InputError("malformed role tag '" + std::string(text) + "'");
  }
  std::string rest;
  if (is >> rest) throw InputError("trailing text in role tag '" + std::string(text) + "'");
  auto kind = parse_role_kind(name);
  if (!kind) throw InputError("unknown role kind '" + name + "'");
  r.kind = *kind;
  return r;
}

Vertex ReductionOutput::vertex(const Role& r) const {
  auto v = find(r);
  if (!v) throw InputError("no vertex with role " + format_role(r));
  return *v;
}

std::optional<Vertex> ReductionOutput::find(const Role& r) const {
  auto it = by_role_.find(r);
  if (it == by_role_.end()) return std::nullopt;
  return it->second;
}

void ReductionOutput::index_roles() {
  by_role_.clear();
  for (std::size_t v = 0; v < roles.size(); ++v) {
    if (!by_role_.emplace(roles[v], static_cast<Vertex>(v)).second) {
      throw InputError("duplicate role " + format_role(roles[v]));
    }
  }
}

CliqueInstance CliqueInstance::with_order(Graph g, int k, std::vector<Vertex> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw InputError("index order has the wrong length");
  CliqueInstance cq;
  cq.index_.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    const Vertex v = order[p];
    if (!g.is_vertex(v) || cq.index_[static_cast<std::size_t>(v)] != 0) {
      throw InputError("index order is not a permutation");
    }
    cq.index_[static_cast<std::size_t>(v)] = static_cast<int>(p) + 1;
  }
  for (const Edge& e : g.edges()) {
    cq.ordered_.push_back(cq.index(e.u) < cq.index(e.v) ? Edge{e.u, e.v} : Edge{e.v, e.u});
  }
  std::sort(cq.ordered_.begin(), cq.ordered_.end(), [&cq](const Edge& a, const Edge& b) {
    return std::pair(cq.index(a.u), cq.index(a.v)) < std::pair(cq.index(b.u), cq.index(b.v));
  });
  cq.graph_ = std::move(g);
  cq.k_ = k;
  cq.order_ = std::move(order);
  return cq;
}

CliqueInstance CliqueInstance::make(Graph g, int k) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> component{root};
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (const Neighbor& nb : g.neighbors(component[head])) {
        if (!seen[static_cast<std::size_t>(nb.vertex)]) {
          seen[static_cast<std::size_t>(nb.vertex)] = 1;
          component.push_back(nb.vertex);
        }
      }
    }
    order.insert(order.end(), component.rbegin(), component.rend());
  }
  return with_order(std::move(g), k, std::move(order));
}

MulticoloredCliqueInstance MulticoloredCliqueInstance::make(Graph g,
                                                            std::vector<std::vector<Vertex>> parts) {
  const int n = g.vertex_count();
  MulticoloredCliqueInstance mc;
  mc.part_.assign(static_cast<std::size_t>(n), -1);
  mc.index_.assign(static_cast<std::size_t>(n), 0);
  if (parts.empty()) throw InputError("no parts given");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != parts[0].size()) throw InputError("parts have unequal sizes");
    for (std::size_t x = 0; x < parts[i].size(); ++x) {
      const Vertex v = parts[i][x];
      if (!g.is_vertex(v) || mc.part_[static_cast<std::size_t>(v)] != -1) {
        throw InputError("parts do not partition the vertex set");
      }
      mc.part_[static_cast<std::size_t>(v)] = static_cast<int>(i);
      mc.index_[static_cast<std::size_t>(v)] = static_cast<int>(x) + 1;
    }
  }
  if (std::find(mc.part_.begin(), mc.part_.end(), -1) != mc.part_.end()) {
    throw InputError("parts do not cover every vertex");
  }
  for (const Edge& e : g.edges()) {
    if (mc.part(e.u) == mc.part(e.v)) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} lies inside one part");
    }
  }
  mc.graph_ = std::move(g);
  mc.parts_ = std::move(parts);
  return mc;
}

ReductionOutput gen_pw(const CliqueInstance& cq) {
  const int k = cq.k();
  const int n = cq.n();
  const int m = cq.m();
  if (k < 2) throw InputError("clique size k must be at least 2");
  if (m < n) throw InputError("need m >= n; remove tree components first");
  const int eta = 4 * m;
  const int lambda = 8 * eta + 2 * n + 1;
  const int beta = 2 * k * k;

  Builder b;
  const Vertex s = b.anchor(make_role(RoleKind::kSource));
  const Vertex t = b.anchor(make_role(RoleKind::kSink));
  using Row = std::vector<Vertex>;
  std::vector<Row> upper(static_cast<std::size_t>(k) + 1), lower(static_cast<std::size_t>(k) + 1);

  for (int g = 1; g <= k; ++g) {
    Row& u = upper[static_cast<std::size_t>(g)];
    Row& l = lower[static_cast<std::size_t>(g)];
    for (int p = 0; p <= n; ++p) {
      u.push_back(b.anchor(make_role(RoleKind::kUpper, g, 0, p)));
      l.push_back(b.anchor(make_role(RoleKind::kLower, g, 0, p)));
    }
    for (int p = 1; p <= n; ++p) {
      const auto P = static_cast<std::size_t>(p);
      b.edge(u[P - 1], u[P]);
      b.edge(l[P - 1], l[P]);
      b.path(u[P - 1], u[P], 2 * eta + p, make_role(RoleKind::kPathU, g, 0, p));
      b.path(l[P - 1], l[P], 2 * eta - p, make_role(RoleKind::kPathL, g, 0, p));
      b.path(u[P], l[P], 2 * eta, make_role(RoleKind::kRungUL, g, 0, p));
    }
    for (int c = 0; c < 2; ++c) {
      b.path(s, u[0], 2, make_role(RoleKind::kAttachSU, g, 0, 0, 0, c));
      b.path(s, l[0], eta + 2, make_role(RoleKind::kAttachSL, g, 0, 0, 0, c));
    }
  }

  std::vector<int> first_index;
  for (const Edge& e : cq.ordered_edges()) first_index.push_back(cq.index(e.u));
  const std::vector<int> target = link_targets(n, first_index);

  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      Row a, bb, c, d;
      for (int p = 0; p <= n; ++p) {
        a.push_back(b.anchor(make_role(RoleKind::kRowA, i, j, p)));
        bb.push_back(b.anchor(make_role(RoleKind::kRowB, i, j, p)));
      }
      for (int q = 0; q <= m; ++q) {
        c.push_back(b.anchor(make_role(RoleKind::kRowC, i, j, q)));
        d.push_back(b.anchor(make_role(RoleKind::kRowD, i, j, q)));
      }
      const Vertex ui = upper[static_cast<std::size_t>(i)].back();
      const Vertex li = lower[static_cast<std::size_t>(i)].back();
      const Vertex uj = upper[static_cast<std::size_t>(j)].back();
      const Vertex lj = lower[static_cast<std::size_t>(j)].back();
      for (int cp = 0; cp < 2; ++cp) {
        b.path(ui, a[0], 4 * eta, make_role(RoleKind::kAttachUA, i, j, 0, 0, cp));
        b.path(li, bb[0], 2, make_role(RoleKind::kAttachLB, i, j, 0, 0, cp));
        b.path(a.back(), t, 2, make_role(RoleKind::kAttachAT, i, j, 0, 0, cp));
        b.path(bb.back(), t, 3 * eta, make_role(RoleKind::kAttachBT, i, j, 0, 0, cp));
        b.path(uj, c[0], 3 * eta, make_role(RoleKind::kAttachUC, i, j, 0, 0, cp));
        b.path(lj, d[0], eta, make_role(RoleKind::kAttachLD, i, j, 0, 0, cp));
        b.path(c.back(), t, eta + n - m + 2, make_role(RoleKind::kAttachCT, i, j, 0, 0, cp));
        b.path(d.back(), t, 2 * eta + n - m + 2, make_role(RoleKind::kAttachDT, i, j, 0, 0, cp));
      }
      for (int p = 0; p <= n; ++p) {
        const auto P = static_cast<std::size_t>(p);
        b.path(a[P], bb[P], 4 * eta, make_role(RoleKind::kRungAB, i, j, p));
        if (p == 0) continue;
        b.edge(a[P - 1], a[P]);
        b.edge(bb[P - 1], bb[P]);
        b.path(a[P - 1], a[P], 2 * eta - p, make_role(RoleKind::kPathA, i, j, p));
        b.path(bb[P - 1], bb[P], 2 * eta + p, make_role(RoleKind::kPathB, i, j, p));
      }
      for (int q = 1; q <= m; ++q) {
        const auto Q = static_cast<std::size_t>(q);
        const int w = cq.index(cq.ordered_edges()[Q - 1].v);
        b.edge(c[Q - 1], c[Q]);
        b.edge(d[Q - 1], d[Q]);
        b.path(c[Q], d[Q], 2 * eta, make_role(RoleKind::kRungCD, i, j, q));
        b.path(c[Q - 1], c[Q], 2 * eta - w, make_role(RoleKind::kPathC, i, j, q));
        b.path(d[Q - 1], d[Q], 2 * eta + w, make_role(RoleKind::kPathD, i, j, q));
      }
      for (int p = 0; p < n; ++p) {
        const auto P = static_cast<std::size_t>(p);
        const int q = target[P];
        const auto Q = static_cast<std::size_t>(q);
        b.path(a[P], c[Q], 2 * eta, make_role(RoleKind::kLinkAC, i, j, p, q));
        b.path(a[P], d[Q], 3 * eta, make_role(RoleKind::kLinkAD, i, j, p, q));
        b.path(bb[P], c[Q], 3 * eta, make_role(RoleKind::kLinkBC, i, j, p, q));
        b.path(bb[P], d[Q], 2 * eta, make_role(RoleKind::kLinkBD, i, j, p, q));
      }
    }
  }

  for (int i = 1; i <= k; ++i) {
    const Vertex ui = upper[static_cast<std::size_t>(i)].back();
    const Vertex li = lower[static_cast<std::size_t>(i)].back();
    for (int c = 0; c < 3; ++c) {
      b.path(ui, t, lambda - (n + 2), make_role(RoleKind::kConnT, i, 0, 0, 0, c));
      b.path(li, t, lambda - (eta + n + 2), make_role(RoleKind::kConnTBar, i, 0, 0, 0, c));
    }
    for (int j = 1; j <= k; ++j) {
      if (j == i) continue;
      for (int c = 0; c < 5; ++c) {
        b.path(s, ui, lambda - (4 * eta + n + 2), make_role(RoleKind::kConnS, i, j, 0, 0, c));
        b.path(s, li, lambda - (3 * eta + n + 2), make_role(RoleKind::kConnSBar, i, j, 0, 0, c));
      }
    }
  }

  ReductionParams params{ReductionKind::kPathwidth, k, n, m, eta, 0};
  ReductionOutput out = b.finish(s, t, beta, lambda, params);
  out.source_parts = {cq.order()};
  out.source_edges = cq.ordered_edges();

  const DegreeProfile profile = pw_degree_profile(out);
  const Graph& h = out.instance.graph;
  if (h.degree(s) != profile.source || h.degree(t) != profile.sink) {
    throw VerificationError("gen_pw: terminal degrees differ from the closed form");
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const Role& r = out.roles[static_cast<std::size_t>(v)];
    const bool end = (r.kind == RoleKind::kUpper || r.kind == RoleKind::kLower) && r.p == n;
    if (end && h.degree(v) != profile.upper_end) {
      throw VerificationError("gen_pw: end vertex degree differs from the closed form");
    }
    if (!end && v != s && v != t && h.degree(v) > profile.other_max) {
      throw VerificationError("gen_pw: vertex degree exceeds the constant bound");
    }
  }
  return out;
}

DegreeProfile pw_degree_profile(const ReductionOutput& out) {
  require_kind(out, ReductionKind::kPathwidth);
  const int k = out.params.k;
  const int n = out.params.n;
  DegreeProfile prof;
  prof.source = 4 * k + 10 * k * (k - 1);
  prof.sink = 6 * k + 4 * k * (k - 1);
  prof.upper_end = 6 + 7 * (k - 1);
  const std::vector<int> index = source_index(out);
  std::vector<int> first_index;
  for (const Edge& e : out.source_edges) first_index.push_back(index[static_cast<std::size_t>(e.u)]);
  const std::vector<int> target = link_targets(n, first_index);
  int shared = 0;
  for (std::size_t p = 0; p < target.size();) {
    std::size_t r = p;
    while (r < target.size() && target[r] == target[p]) ++r;
    shared = std::max(shared, static_cast<int>(r - p));
    p = r;
  }
  // Row vertices: two row edges, two detours, one rung, two links per a/b source.
  prof.other_max = std::max(7, 5 + 2 * shared);
  return prof;
}

ReductionOutput gen_fvs(const MulticoloredCliqueInstance& mc) {
  const int k = mc.k();
  const int nu = mc.nu();
  const Graph& g = mc.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (k < 2) throw InputError("need at least two parts");
  if (nu < 2) throw InputError("parts need at least two vertices");
  const int lambda = nu + 2 * n;
  const int beta = 2 * k * (nu - 1) * m + m - k * (k - 1) / 2;
  if (beta < 0) throw InputError("too few edges for a multicolored clique");

  Builder b;
  const Vertex s = b.anchor(make_role(RoleKind::kSource));
  const Vertex t = b.anchor(make_role(RoleKind::kSink));
  std::vector<Vertex> mid_u(static_cast<std::size_t>(k) + 1), mid_l(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    mid_u[static_cast<std::size_t>(i)] = b.anchor(make_role(RoleKind::kMiddleU, i));
    mid_l[static_cast<std::size_t>(i)] = b.anchor(make_role(RoleKind::kMiddleL, i));
  }
  ReductionParams params{ReductionKind::kFeedbackVertex, k, n, m, 0, nu};

  for (int i = 1; i <= k; ++i) {
    const Vertex u = mid_u[static_cast<std::size_t>(i)];
    const Vertex l = mid_l[static_cast<std::size_t>(i)];
    for (int j = 1; j <= nu; ++j) {
      for (int p = 1; p <= m; ++p) {
        b.path(s, u, n + j, make_role(RoleKind::kPathS, i, j, p));
        b.path(s, l, n + j, make_role(RoleKind::kPathSBar, i, j, p));
        b.path(u, t, n + j, make_role(RoleKind::kPathT, i, j, p));
        b.path(l, t, n + j, make_role(RoleKind::kPathTBar, i, j, p));
      }
    }
  }

  std::vector<Edge> source_edges;
  for (const Edge& e : g.edges()) {
    source_edges.push_back(mc.part(e.u) < mc.part(e.v) ? Edge{e.u, e.v} : Edge{e.v, e.u});
  }
  for (int p = 1; p <= m; ++p) {
    const Edge& e = source_edges[static_cast<std::size_t>(p - 1)];
    const Vertex ve = b.anchor(make_role(RoleKind::kEdgeVertex, 0, 0, p));
    b.edge(ve, t);
    int q = 0;
    for (Vertex x : {e.u, e.v}) {
      const auto part = static_cast<std::size_t>(mc.part(x) + 1);
      b.path(mid_u[part], ve, n + nu - mc.index(x), make_role(RoleKind::kEdgeAttach, 0, 0, p, q++));
      b.path(mid_l[part], ve, n + mc.index(x), make_role(RoleKind::kEdgeAttach, 0, 0, p, q++));
    }
  }

  ReductionOutput out = b.finish(s, t, beta, lambda, params);
  out.source_parts = mc.parts();
  out.source_edges = std::move(source_edges);

  // Shortcut edges need the path vertices, so they are added to a rebuilt graph.
  std::vector<Edge> edges(out.instance.graph.edges().begin(), out.instance.graph.edges().end());
  auto at = [&out](RoleKind kind, int i, int j, int p, int pos) {
    return out.vertex(Role{kind, i, j, p, 0, 0, pos});
  };
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j < nu; ++j) {
      for (int p = 1; p <= m; ++p) {
        edges.push_back(Edge::make(at(RoleKind::kPathS, i, j, p, 1),
                                   at(RoleKind::kPathSBar, i, nu - j, p, n + nu - j - 1)));
        edges.push_back(Edge::make(at(RoleKind::kPathTBar, i, nu - j, p, 1),
                                   at(RoleKind::kPathT, i, j, p, n + j - 1)));
      }
    }
  }
  out.instance.graph = Graph(out.instance.graph.vertex_count(), std::move(edges));
  return out;
}

CutSet forward_cut_pw(const ReductionOutput& out, const std::vector<Vertex>& clique) {
  require_kind(out, ReductionKind::kPathwidth);
  const int k = out.params.k;
  const int n = out.params.n;
  if (static_cast<int>(clique.size()) != k) throw InputError("clique has the wrong size");
  const std::vector<int> index = source_index(out);
  std::vector<int> x;
  for (Vertex v : clique) {
    if (v < 0 || v >= n) throw InputError("clique vertex out of range");
    x.push_back(index[static_cast<std::size_t>(v)]);
  }
  if (!std::is_sorted(x.begin(), x.end()) ||
      std::adjacent_find(x.begin(), x.end()) != x.end()) {
    throw InputError("clique must be distinct vertices sorted by index");
  }
  std::map<std::pair<int, int>, int> edge_number;
  for (std::size_t z = 0; z < out.source_edges.size(); ++z) {
    const Edge& e = out.source_edges[z];
    edge_number[{index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]}] =
        static_cast<int>(z) + 1;
  }

  auto row_edge = [&out](RoleKind kind, int i, int j, int p) {
    return Edge::make(out.vertex(make_role(kind, i, j, p - 1)), out.vertex(make_role(kind, i, j, p)));
  };
  CutSet f;
  for (int g = 1; g <= k; ++g) {
    const int xg = x[static_cast<std::size_t>(g - 1)];
    f.insert(row_edge(RoleKind::kUpper, g, 0, xg));
    f.insert(row_edge(RoleKind::kLower, g, 0, xg));
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const int xi = x[static_cast<std::size_t>(i - 1)];
      const int xj = x[static_cast<std::size_t>(j - 1)];
      auto it = edge_number.find({xi, xj});
      if (it == edge_number.end()) throw InputError("input is not a clique");
      f.insert(row_edge(RoleKind::kRowA, i, j, xi));
      f.insert(row_edge(RoleKind::kRowB, i, j, xi));
      f.insert(row_edge(RoleKind::kRowC, i, j, it->second));
      f.insert(row_edge(RoleKind::kRowD, i, j, it->second));
    }
  }
  return f;
}

std::optional<std::vector<Vertex>> decode_pw(const ReductionOutput& out, const CutSet& f) {
  require_kind(out, ReductionKind::kPathwidth);
  std::vector<Vertex> selected;
  for (int g = 1; g <= out.params.k; ++g) {
    std::vector<int> hits_upper, hits_lower;
    for (int p = 1; p <= out.params.n; ++p) {
      auto row = [&](RoleKind kind) {
        return Edge::make(out.vertex(make_role(kind, g, 0, p - 1)),
                          out.vertex(make_role(kind, g, 0, p)));
      };
      if (f.count(row(RoleKind::kUpper))) hits_upper.push_back(p);
      if (f.count(row(RoleKind::kLower))) hits_lower.push_back(p);
    }
    if (hits_upper.size() != 1 || hits_lower.size() != 1) return std::nullopt;
    selected.push_back(out.source_parts[0][static_cast<std::size_t>(hits_upper[0] - 1)]);
  }
  return selected;
}

namespace {

// The four threshold families of gadget i when vertex index x is selected.
std::vector<Edge> fvs_gadget_edges(const ReductionOutput& out, int i, int x) {
  const int n = out.params.n;
  const int nu = out.params.nu;
  const Vertex s = out.instance.s;
  const Vertex t = out.instance.t;
  const Vertex l = out.vertex(make_role(RoleKind::kMiddleL, i));
  auto at = [&out, i](RoleKind kind, int j, int p, int pos) {
    return out.vertex(Role{kind, i, j, p, 0, 0, pos});
  };
  std::vector<Edge> edges;
  for (int p = 1; p <= out.params.m; ++p) {
    for (int j = 1; j <= x - 1; ++j) {
      edges.push_back(Edge::make(s, at(RoleKind::kPathS, j, p, 1)));
      edges.push_back(Edge::make(l, at(RoleKind::kPathTBar, j, p, 1)));
    }
    for (int j = 1; j <= nu - x; ++j) {
      edges.push_back(Edge::make(at(RoleKind::kPathSBar, j, p, n + j - 1), l));
      edges.push_back(Edge::make(at(RoleKind::kPathT, j, p, n + j - 1), t));
    }
  }
  return edges;
}

}  // namespace

CutSet forward_cut_fvs(const ReductionOutput& out, const std::vector<Vertex>& clique) {
  require_kind(out, ReductionKind::kFeedbackVertex);
  const int k = out.params.k;
  if (static_cast<int>(clique.size()) != k) throw InputError("clique has the wrong size");
  std::vector<int> chosen_index(static_cast<std::size_t>(k), 0);
  std::set<Vertex> members;
  for (int i = 0; i < k; ++i) {
    const auto& part = out.source_parts[static_cast<std::size_t>(i)];
    auto it = std::find(part.begin(), part.end(), clique[static_cast<std::size_t>(i)]);
    if (it == part.end()) throw InputError("clique vertex " + std::to_string(i + 1) + " not in its part");
    chosen_index[static_cast<std::size_t>(i)] = static_cast<int>(it - part.begin()) + 1;
    members.insert(*it);
  }
  const std::set<Edge> edges = source_edge_set(out);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!edges.count(Edge::make(clique[static_cast<std::size_t>(i)], clique[static_cast<std::size_t>(j)]))) {
        throw InputError("input is not a clique");
      }
    }
  }
  CutSet f;
  for (int i = 1; i <= k; ++i) {
    for (const Edge& e : fvs_gadget_edges(out, i, chosen_index[static_cast<std::size_t>(i - 1)])) {
      f.insert(e);
    }
  }
  for (std::size_t p = 0; p < out.source_edges.size(); ++p) {
    const Edge& e = out.source_edges[p];
    if (members.count(e.u) && members.count(e.v)) continue;
    f.insert(Edge::make(out.vertex(make_role(RoleKind::kEdgeVertex, 0, 0, static_cast<int>(p) + 1)),
                        out.instance.t));
  }
  return f;
}

std::optional<std::vector<Vertex>> decode_fvs(const ReductionOutput& out, const CutSet& f) {
  require_kind(out, ReductionKind::kFeedbackVertex);
  std::vector<Vertex> selected;
  for (int i = 1; i <= out.params.k; ++i) {
    // Threshold from the first S-path family, then the whole pattern must match.
    int x = 1;
    while (x < out.params.nu &&
           f.count(Edge::make(out.instance.s, out.vertex(Role{RoleKind::kPathS, i, x, 1, 0, 0, 1})))) {
      ++x;
    }
    const std::vector<Edge> expected = fvs_gadget_edges(out, i, x);
    if (!std::all_of(expected.begin(), expected.end(), [&f](const Edge& e) { return f.count(e) > 0; })) {
      return std::nullopt;
    }
    // No further threshold-family edges of this gadget may be cut.
    const std::set<Edge> exp_set(expected.begin(), expected.end());
    for (int other = 1; other <= out.params.nu; ++other) {
      if (other == x) continue;
      for (const Edge& e : fvs_gadget_edges(out, i, other)) {
        if (!exp_set.count(e) && f.count(e)) return std::nullopt;
      }
    }
    selected.push_back(out.source_parts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x - 1)]);
  }
  return selected;
}

PlantedClique planted_clique(int n, int m, int k, std::uint64_t seed) {
  if (k < 2 || k > n) throw InputError("need 2 <= k <= n");
  if (m < n || m > n * (n - 1) / 2 || m < k * (k - 1) / 2) throw InputError("edge count out of range");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<Vertex> clique(vertices.begin(), vertices.begin() + k);
  std::set<Edge> edges;
  for (int a = 0; a < k; ++a) {
    for (int c = a + 1; c < k; ++c) edges.insert(Edge::make(clique[static_cast<std::size_t>(a)], clique[static_cast<std::size_t>(c)]));
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    const Vertex a = pick(rng);
    const Vertex c = pick(rng);
    if (a != c) edges.insert(Edge::make(a, c));
  }
  PlantedClique out{CliqueInstance::make(Graph(n, {edges.begin(), edges.end()}), k), {}};
  std::sort(clique.begin(), clique.end(),
            [&out](Vertex a, Vertex c) { return out.instance.index(a) < out.instance.index(c); });
  out.clique = std::move(clique);
  return out;
}

PlantedMulticolored planted_multicolored_clique(int k, int nu, int m, std::uint64_t seed) {
  if (k < 2 || nu < 2) throw InputError("need k >= 2 and nu >= 2");
  if (m < k * (k - 1) / 2 || m > k * (k - 1) / 2 * nu * nu) throw InputError("edge count out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < nu; ++x) parts[static_cast<std::size_t>(i)].push_back(i * nu + x);
  }
  std::uniform_int_distribution<int> pick_index(0, nu - 1);
  std::vector<Vertex> clique;
  for (int i = 0; i < k; ++i) clique.push_back(i * nu + pick_index(rng));
  std::set<Edge> edges;
  for (int a = 0; a < k; ++a) {
    for (int c = a + 1; c < k; ++c) edges.insert(Edge::make(clique[static_cast<std::size_t>(a)], clique[static_cast<std::size_t>(c)]));
  }
  std::uniform_int_distribution<Vertex> pick(0, k * nu - 1);
  while (static_cast<int>(edges.size()) < m) {
    const Vertex a = pick(rng);
    const Vertex c = pick(rng);
    if (a / nu != c / nu) edges.insert(Edge::make(a, c));
  }
  return {MulticoloredCliqueInstance::make(Graph(k * nu, {edges.begin(), edges.end()}), std::move(parts)),
          std::move(clique)};
}

}  // namespace lbc
