#include <cstdint>

#include "doctest.h"
#include "lbc/reductions.hpp"
#include "support.hpp"

using namespace lbc;
using namespace lbc::testing;

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (vs[a] == vs[b] || !g.has_edge(vs[a], vs[b])) return false;
  return true;
}

// Vertex and edge counts of the pathwidth construction, summed path by path.
std::pair<std::int64_t, std::int64_t> pw_size(int k, int n, int m, const CliqueInstance& cq) {
  const std::int64_t eta = 4 * m, lambda = 8 * eta + 2 * n + 1;
  std::int64_t v = 2, e = 0;
  auto path = [&](std::int64_t len, std::int64_t times) {
    v += times * (len - 1);
    e += times * len;
  };
  for (int g = 0; g < k; ++g) {
    v += 2 * (n + 1);
    e += 2 * n;
    for (int p = 1; p <= n; ++p) {
      path(2 * eta + p, 1);
      path(2 * eta - p, 1);
      path(2 * eta, 1);
    }
    path(2, 2);
    path(eta + 2, 2);
  }
  const std::int64_t pairs = k * (k - 1) / 2;
  for (std::int64_t c = 0; c < pairs; ++c) {
    v += 2 * (n + 1) + 2 * (m + 1);
    e += 2 * n + 2 * m;
    path(4 * eta, 2);
    path(2, 2);
    path(2, 2);
    path(3 * eta, 2);
    path(3 * eta, 2);
    path(eta, 2);
    path(eta + n - m + 2, 2);
    path(2 * eta + n - m + 2, 2);
    path(4 * eta, n + 1);
    for (int p = 1; p <= n; ++p) {
      path(2 * eta - p, 1);
      path(2 * eta + p, 1);
    }
    for (int q = 1; q <= m; ++q) {
      const int w = cq.index(cq.ordered_edges()[static_cast<std::size_t>(q - 1)].v);
      path(2 * eta, 1);
      path(2 * eta - w, 1);
      path(2 * eta + w, 1);
    }
    path(2 * eta, 2 * n);
    path(3 * eta, 2 * n);
  }
  path(lambda - (n + 2), 3 * k);
  path(lambda - (eta + n + 2), 3 * k);
  path(lambda - (4 * eta + n + 2), 5 * k * (k - 1));
  path(lambda - (3 * eta + n + 2), 5 * k * (k - 1));
  return {v, e};
}

std::pair<std::int64_t, std::int64_t> fvs_size(int k, int nu, int n, int m) {
  std::int64_t v = 2 + 2 * k, e = 0;
  for (int j = 1; j <= nu; ++j) {
    v += 4LL * k * m * (n + j - 1);
    e += 4LL * k * m * (n + j);
  }
  e += 2LL * k * (nu - 1) * m;               // shortcut edges
  v += static_cast<std::int64_t>(m) * (1 + 4 * n + 2 * nu - 4);
  e += static_cast<std::int64_t>(m) * (1 + 4 * n + 2 * nu);
  return {v, e};
}

Graph k3_with_pendant() { return make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("role tags round trip") {
  Role r{RoleKind::kLinkBD, 2, 3, 4, 5, 1, 17};
  CHECK(parse_role(format_role(r)) == r);
  CHECK(role_kind_name(RoleKind::kSource) == "source");
  CHECK(parse_role_kind("edge_attach") == RoleKind::kEdgeAttach);
  CHECK_FALSE(parse_role_kind("nope").has_value());
  CHECK_THROWS_AS(parse_role("upper 1 2"), InputError);
  CHECK_THROWS_AS(parse_role("bogus 0 0 0 0 0 0"), InputError);
}

TEST_CASE("clique instance ordering") {
  auto cq = CliqueInstance::make(k3_with_pendant(), 2);
  const auto& ord = cq.ordered_edges();
  for (std::size_t z = 0; z < ord.size(); ++z) {
    CHECK(cq.index(ord[z].u) < cq.index(ord[z].v));
    if (z > 0) {
      CHECK(std::pair(cq.index(ord[z - 1].u), cq.index(ord[z - 1].v)) <
            std::pair(cq.index(ord[z].u), cq.index(ord[z].v)));
    }
  }
  // Every vertex but the last has a later neighbour on a connected graph.
  for (int p = 1; p < cq.n(); ++p) {
    bool later = false;
    for (const Neighbor& nb : cq.graph().neighbors(cq.vertex(p))) later |= cq.index(nb.vertex) > p;
    CHECK(later);
  }
  CHECK_THROWS_AS(CliqueInstance::with_order(k3_with_pendant(), 2, {0, 1, 1, 3}), InputError);
}

TEST_CASE("gen_pw parameters") {
  Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto out = gen_pw(CliqueInstance::make(k4, 3));
  CHECK(out.instance.beta == 18);
  CHECK(out.params.eta == 24);
  CHECK(out.instance.lambda == 201);
  CHECK_NOTHROW(out.instance.validate());
  CHECK(out.roles.size() == static_cast<std::size_t>(out.instance.graph.vertex_count()));

  CHECK_THROWS_AS(gen_pw(CliqueInstance::make(make_graph(4, {{0, 1}, {1, 2}}), 2)), InputError);
  CHECK_THROWS_AS(gen_pw(CliqueInstance::make(k4, 1)), InputError);
}

TEST_CASE("gen_pw on K3 plus a pendant edge") {
  auto cq = CliqueInstance::make(k3_with_pendant(), 2);
  auto out = gen_pw(cq);
  const Instance& h = out.instance;
  CHECK(h.lambda == 8 * 16 + 8 + 1);
  auto d = bfs_distances(h.graph, h.s);
  REQUIRE(d[h.t].is_finite());
  CHECK(d[h.t].hops() <= h.lambda);
  // s-u_0-...-u_n has n + 2 edges, and a T path adds lambda - (n + 2).
  CHECK(d[out.vertex({RoleKind::kUpper, 1, 0, 4})] == Distance(4 + 2));

  std::vector<Vertex> clique{0, 1};
  std::sort(clique.begin(), clique.end(), [&](Vertex a, Vertex b) { return cq.index(a) < cq.index(b); });
  CutSet f = forward_cut_pw(out, clique);
  CHECK(static_cast<int>(f.size()) == h.beta);
  CHECK(verify_cut(h, f).valid);
  CHECK(decode_pw(out, f) == clique);

  // {0, 3} is not an edge of the source graph.
  std::vector<Vertex> bad{0, 3};
  std::sort(bad.begin(), bad.end(), [&](Vertex a, Vertex b) { return cq.index(a) < cq.index(b); });
  CHECK_THROWS_AS(forward_cut_pw(out, bad), InputError);
  CHECK_THROWS_AS(forward_cut_pw(out, {clique[1], clique[0]}), InputError);
  CHECK_THROWS_AS(forward_cut_pw(out, {0}), InputError);
}

TEST_CASE("gen_pw planted cliques") {
  int cases = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int k = 2 + static_cast<int>(seed % 2);
    const int n = 4 + static_cast<int>(seed % 4);
    const int m = std::min(10, n + static_cast<int>(seed % 3));
    auto planted = planted_clique(n, m, k, seed);
    const CliqueInstance& cq = planted.instance;
    REQUIRE(is_clique(cq.graph(), planted.clique));
    auto out = gen_pw(cq);
    const Instance& h = out.instance;
    ++cases;

    CHECK(h.beta == 2 * k * k);
    CHECK(out.params.eta == 4 * m);
    CHECK(h.lambda == 8 * out.params.eta + 2 * n + 1);
    auto [v, e] = pw_size(k, n, m, cq);
    CHECK(h.graph.vertex_count() == v);
    CHECK(h.graph.edge_count() == e);

    DegreeProfile prof = pw_degree_profile(out);
    CHECK(h.graph.degree(h.s) == 4 * k + 10 * k * (k - 1));
    CHECK(h.graph.degree(h.t) == 6 * k + 4 * k * (k - 1));
    int max_other = 0;
    for (Vertex x = 0; x < h.graph.vertex_count(); ++x) {
      const Role& r = out.roles[static_cast<std::size_t>(x)];
      if ((r.kind == RoleKind::kUpper || r.kind == RoleKind::kLower) && r.p == n) {
        CHECK(h.graph.degree(x) == 6 + 7 * (k - 1));
      } else if (x != h.s && x != h.t) {
        max_other = std::max(max_other, h.graph.degree(x));
      }
    }
    CHECK(max_other <= prof.other_max);

    CHECK_FALSE(bfs_distances(h.graph, h.s)[h.t].exceeds(h.lambda));
    CutSet f = forward_cut_pw(out, planted.clique);
    CHECK(static_cast<int>(f.size()) == 2 * k * k);
    auto verdict = verify_cut(h, f);
    CHECK(verdict.valid);
    CHECK(verdict.distance == Distance(h.lambda + 1));
    auto decoded = decode_pw(out, f);
    REQUIRE(decoded);
    CHECK(*decoded == planted.clique);
    CHECK(is_clique(cq.graph(), *decoded));

    // Missing one gadget edge breaks the pattern.
    CutSet missing = f;
    missing.erase(Edge::make(out.vertex({RoleKind::kUpper, 1, 0, cq.index(planted.clique[0]) - 1}),
                             out.vertex({RoleKind::kUpper, 1, 0, cq.index(planted.clique[0])})));
    CHECK_FALSE(decode_pw(out, missing).has_value());
    CHECK_FALSE(decode_pw(out, {}).has_value());

    if (seed < 2) {
      int essential = 0;
      for (const Edge& x : f) {
        CutSet less = f;
        less.erase(x);
        essential += verify_cut(h, less).valid ? 0 : 1;
      }
      MESSAGE("minimality probe: " << essential << " of " << f.size() << " forward-cut edges essential");
    }
  }
  CHECK(cases == 12);
}

TEST_CASE("gen_pw forward cut under an arbitrary index order") {
  Graph g = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  auto cq = CliqueInstance::with_order(g, 3, {5, 4, 3, 2, 1, 0});
  auto out = gen_pw(cq);
  std::vector<Vertex> clique{2, 1, 0};
  CutSet f = forward_cut_pw(out, clique);
  CHECK(verify_cut(out.instance, f).valid);
  CHECK(decode_pw(out, f) == clique);
}

TEST_CASE("gen_fvs parameters") {
  // k = 2, nu = 3, four edges between the parts.
  Graph g = make_graph(6, {{0, 3}, {0, 4}, {1, 5}, {2, 3}});
  auto mc = MulticoloredCliqueInstance::make(g, {{0, 1, 2}, {3, 4, 5}});
  auto out = gen_fvs(mc);
  CHECK(out.instance.lambda == 15);
  CHECK(out.instance.beta == 35);
  auto [v, e] = fvs_size(2, 3, 6, 4);
  CHECK(out.instance.graph.vertex_count() == v);
  CHECK(out.instance.graph.edge_count() == e);

  CHECK_THROWS_AS(MulticoloredCliqueInstance::make(g, {{0, 1, 2}, {3, 4}}), InputError);
  CHECK_THROWS_AS(MulticoloredCliqueInstance::make(make_graph(6, {{0, 1}}), {{0, 1, 2}, {3, 4, 5}}),
                  InputError);
  CHECK_THROWS_AS(gen_fvs(MulticoloredCliqueInstance::make(Graph(2, {}), {{0}, {1}})), InputError);
}

TEST_CASE("gen_fvs planted cliques") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int k = 2 + static_cast<int>(seed % 2);
    const int nu = 2 + static_cast<int>(seed % 3);
    const int m = k * (k - 1) / 2 + 1 + static_cast<int>(seed % 4);
    auto planted = planted_multicolored_clique(k, nu, m, seed);
    auto out = gen_fvs(planted.instance);
    const Instance& h = out.instance;
    const int n = k * nu;
    CHECK(h.lambda == nu + 2 * n);
    CHECK(h.beta == 2 * k * (nu - 1) * m + m - k * (k - 1) / 2);
    auto [v, e] = fvs_size(k, nu, n, m);
    CHECK(h.graph.vertex_count() == v);
    CHECK(h.graph.edge_count() == e);
    CHECK_FALSE(bfs_distances(h.graph, h.s)[h.t].exceeds(h.lambda));

    CutSet f = forward_cut_fvs(out, planted.clique);
    CHECK(static_cast<int>(f.size()) == h.beta);
    CHECK(verify_cut(h, f).valid);
    for (int i = 1; i <= k; ++i) {
      // Gadget-local edges: both endpoints outside the edge gadgets.
      int local = 0;
      for (const Edge& x : f) {
        for (Vertex y : {x.u, x.v}) {
          const Role& r = out.roles[static_cast<std::size_t>(y)];
          if (r.pos > 0 && r.i == i && r.kind != RoleKind::kEdgeAttach) {
            ++local;
            break;
          }
        }
      }
      CHECK(local == 2 * (nu - 1) * m);
    }
    auto decoded = decode_fvs(out, f);
    REQUIRE(decoded);
    CHECK(*decoded == planted.clique);
    CHECK(is_clique(planted.instance.graph(), *decoded));
    for (int i = 0; i < k; ++i) CHECK(planted.instance.part((*decoded)[static_cast<std::size_t>(i)]) == i);

    CHECK_FALSE(decode_fvs(out, {}).has_value());
    // Toggle one first-edge of an S-path family.
    CutSet family_broken = f;
    const Vertex s_first = out.vertex({RoleKind::kPathS, 1, nu - 1, 1, 0, 0, 1});
    const Edge probe = Edge::make(h.s, s_first);
    if (family_broken.count(probe)) {
      family_broken.erase(probe);
    } else {
      family_broken.insert(probe);
    }
    CHECK_FALSE(decode_fvs(out, family_broken).has_value());
  }
  auto planted = planted_multicolored_clique(2, 3, 3, 7);
  auto out = gen_fvs(planted.instance);
  std::vector<Vertex> swapped{planted.clique[1], planted.clique[0]};
  CHECK_THROWS_AS(forward_cut_fvs(out, swapped), InputError);
}
