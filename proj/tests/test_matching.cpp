#include <doctest.h>

#include <set>

#include "pfq/instances.hpp"
#include "pfq/matching.hpp"

using namespace pfq;

namespace {

PlaneGraph weighted_cycle4(Rational a, Rational b, Rational c, Rational d) {
  // edges 1-2 (a), 2-3 (b), 3-4 (c), 4-1 (d)
  PlaneGraph g = cycle_graph(4);
  std::vector<GraphEdge> edges = g.edges();
  edges[0].w = a;
  edges[1].w = b;
  edges[2].w = c;
  edges[3].w = d;
  std::vector<std::vector<int>> rot;
  for (int v = 1; v <= 4; ++v) rot.push_back(g.rotation(v));
  return PlaneGraph(4, edges, rot);
}

}  // namespace

TEST_CASE("matching enumeration oracle") {
  CHECK(enumerate_matchings(path_graph(4)).size() == 1);
  CHECK(enumerate_matchings(cycle_graph(4)).size() == 2);
  CHECK(enumerate_matchings(grid_graph(4, 4)).size() == 36);
  CHECK(enumerate_matchings(path_graph(3)).empty());
  CHECK(enumerate_matchings(PlaneGraph(0, {}, {})).size() == 1);
  CHECK_THROWS(enumerate_matchings(grid_graph(5, 6)));  // above the cap
}

TEST_CASE("weighted matching sums") {
  CHECK(matching_sum(PlaneGraph(0, {}, {})) == 1);
  CHECK(matching_sum(path_graph(5)) == 0);  // odd order
  SUBCASE("cycle with labeled weights gives ac + bd") {
    PlaneGraph g = weighted_cycle4(rat(2), rat(3), rat(5), rat(7));
    CHECK(matching_sum(g) == rat(2 * 5 + 3 * 7));
  }
  SUBCASE("zero-weight edges contribute nothing") {
    PlaneGraph g = weighted_cycle4(rat(0), rat(3), rat(5), rat(7));
    CHECK(matching_sum(g) == rat(21));
  }
}

TEST_CASE("skew adjacency matches the orientation") {
  PlaneGraph g = path_graph(2);
  std::vector<GraphEdge> edges = g.edges();
  edges[0].w = rat(9);
  PlaneGraph k2(2, edges, {{1}, {1}});
  SkewMatrix a = skew_adjacency(k2, Orientation({true}));
  CHECK(a.at(1, 2) == rat(9));
  CHECK(a.at(2, 1) == rat(-9));
  SkewMatrix b = skew_adjacency(k2, Orientation({false}));
  CHECK(b.at(1, 2) == rat(-9));
  SUBCASE("reversing every arc negates the matrix") {
    Orientation o = kasteleyn_orient(grid_graph(3, 3));
    SkewMatrix m1 = skew_adjacency(grid_graph(3, 3), o);
    SkewMatrix m2 = skew_adjacency(grid_graph(3, 3), o.reversed());
    CHECK(m2 == m1.negated());
  }
}

TEST_CASE("kasteleyn orientations") {
  SUBCASE("every generator family") {
    for (const PlaneGraph& g :
         {grid_graph(2, 3), grid_graph(4, 4), aztec_diamond(2),
          cycle_graph(4), cycle_graph(8), triangular_patch(3, 3),
          path_graph(5)}) {
      Orientation o = kasteleyn_orient(g);
      CHECK(kasteleyn_valid(g, o));
    }
  }
  SUBCASE("trees are vacuously valid") {
    Orientation o = kasteleyn_orient(path_graph(6));
    CHECK(kasteleyn_valid(path_graph(6), o));
  }
  SUBCASE("the 4-cycle inner face gets an odd clockwise count") {
    PlaneGraph g = cycle_graph(4);
    Orientation o = kasteleyn_orient(g);
    CHECK(kasteleyn_valid(g, o));
  }
  SUBCASE("pinned arcs survive") {
    PlaneGraph g = cycle_graph(4);
    Orientation o = kasteleyn_orient_extending(g, {{2, 1}});
    CHECK(kasteleyn_valid(g, o));
    const int e = *g.edge_between(1, 2);
    CHECK(o.arc_tail(g, e) == 2);
    CHECK(o.arc_head(g, e) == 1);
  }
  SUBCASE("pinning zero arcs reduces to the plain construction") {
    PlaneGraph g = grid_graph(3, 4);
    // same spanning tree, same fixes
    SkewMatrix a = skew_adjacency(g, kasteleyn_orient(g));
    SkewMatrix b = skew_adjacency(g, kasteleyn_orient_extending(g, {}));
    CHECK(a == b);
  }
  SUBCASE("two pinned opposite boundary edges on the 2x3 grid") {
    PlaneGraph g = grid_graph(2, 3);
    const std::vector<std::pair<int, int>> arcs = {{1, 2}, {5, 4}};
    Orientation o = kasteleyn_orient_extending(g, arcs);
    CHECK(kasteleyn_valid(g, o));
    for (const auto& [t, h] : arcs) {
      const int e = *g.edge_between(t, h);
      CHECK(o.arc_tail(g, e) == t);
    }
    CHECK_THROWS(kasteleyn_orient_extending(g, {{1, 2}, {2, 3}}));
  }
}

TEST_CASE("pfaffian counting equals the oracle") {
  CHECK(count_via_pfaffian(cycle_graph(4)) == 2);
  CHECK(count_via_pfaffian(grid_graph(4, 4)) == 36);
  CHECK(count_via_pfaffian(grid_graph(2, 1)) == 1);
  CHECK(count_via_pfaffian(aztec_diamond(1)) == 2);
  CHECK(count_via_pfaffian(aztec_diamond(2)) == 8);
  CHECK(count_via_pfaffian(aztec_diamond(3)) == 64);
  SUBCASE("random weighted plane graphs") {
    Rng rng(77);
    for (int t = 0; t < 60; ++t) {
      PlaneGraph g = random_plane_graph(rng, 14);
      CHECK(count_via_pfaffian(g) == matching_sum(g));
    }
  }
  SUBCASE("negative weights are rejected") {
    PlaneGraph g = weighted_cycle4(rat(-1), rat(1), rat(1), rat(1));
    CHECK_THROWS(count_via_pfaffian(g));
  }
}

TEST_CASE("three-arc gadget preserves the pfaffian") {
  SUBCASE("single edge becomes a 3-path with the same pfaffian") {
    PlaneGraph g = path_graph(2);
    std::vector<GraphEdge> edges = g.edges();
    edges[0].w = rat(6);
    PlaneGraph k2(2, edges, {{1}, {1}});
    Orientation o({true});
    auto [h, oh] = bar_construction(k2, o, 1);
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 3);
    CHECK(pf(skew_adjacency(h, oh)) == pf(skew_adjacency(k2, o)));
    CHECK(pf(skew_adjacency(k2, o)) == rat(6));
  }
  SUBCASE("every edge of random weighted plane graphs") {
    Rng rng(83);
    for (int t = 0; t < 25; ++t) {
      PlaneGraph g = random_plane_graph(rng, 10);
      Orientation o = kasteleyn_orient(g);
      const Rational before = pf(skew_adjacency(g, o));
      const int e = rng.uniform_int(1, g.edge_count());
      auto [h, oh] = bar_construction(g, o, e);
      CHECK(pf(skew_adjacency(h, oh)) == before);
      FaceSet f = trace_faces(h);
      CHECK(h.vertex_count() - h.edge_count() + f.count() == 2);
    }
  }
  SUBCASE("square weights reproduce the literal root-weight variant") {
    // with w = r^2 the (r, 1, r) path has the same pfaffian as (w, 1, 1)
    PlaneGraph g = weighted_cycle4(rat(9), rat(1), rat(4), rat(1));
    Orientation o = kasteleyn_orient(g);
    const Rational base = pf(skew_adjacency(g, o));
    auto [h, oh] = bar_construction(g, o, 1);  // weight 9 = 3^2
    std::vector<GraphEdge> edges = h.edges();
    // rescale the gadget path (9, 1, 1) -> (3, 1, 3)
    for (auto& ed : edges) {
      if (ed.w == rat(9)) ed.w = rat(3);
      if ((ed.u == 6 && ed.v == 2) || (ed.u == 2 && ed.v == 6)) ed.w = rat(3);
    }
    std::vector<std::vector<int>> rot;
    for (int v = 1; v <= h.vertex_count(); ++v) rot.push_back(h.rotation(v));
    PlaneGraph lit(h.vertex_count(), edges, rot);
    CHECK(pf(skew_adjacency(lit, oh)) == base);
  }
}

TEST_CASE("matrix-level gadget expansion") {
  Rng rng(89);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 * rng.uniform_int(2, 4);
    SkewMatrix a = random_skew(rng, n, 9);
    std::set<std::pair<int, int>> ps;
    const int k = rng.uniform_int(1, 3);
    while (static_cast<int>(ps.size()) < k) {
      int i = rng.uniform_int(1, n - 1);
      ps.insert({i, rng.uniform_int(i + 1, n)});
    }
    PairSet e = PairSet::skew_mask({ps.begin(), ps.end()});
    SkewMatrix wide = bar_expand(a, e);
    CHECK(wide.order() == n + 2 * k);
    // the pfaffian is preserved and the leading block is the masked matrix
    CHECK(pf(wide) == pf(a));
    CHECK(pf_minor(wide, IndexSet::full(n)) == pf(mask_skew(a, e)));
  }
  SUBCASE("zero masked entries are fine") {
    auto a = SkewMatrix::from_upper(4, {{1, 2, rat(0)}, {3, 4, rat(5)}});
    PairSet e = PairSet::skew_mask({{1, 2}});
    CHECK(pf(bar_expand(a, e)) == pf(a));
  }
}

TEST_CASE("vertex condensation residuals") {
  SUBCASE("4-cycle face on the 2x4 grid") {
    PlaneGraph g = grid_graph(2, 4);
    // bounded square face: vertices 1,2,6,5 in walk order
    FaceSet f = trace_faces(g);
    for (int fid = 1; fid <= f.count(); ++fid) {
      if (fid == f.outer) continue;
      const auto& walk = f.walks[static_cast<size_t>(fid) - 1];
      if (walk.size() != 4) continue;
      std::vector<int> vs;
      for (const Dart& d : walk) vs.push_back(d.tail);
      CHECK(residual_propp(g, vs[0], vs[1], vs[2], vs[3]) == 0);
    }
  }
  SUBCASE("kuo patterns on the 2x4 grid outer face") {
    PlaneGraph g = grid_graph(2, 4);
    // outer cycle in walk order: colors alternate
    CHECK(residual_kuo(g, 1, 2, 3, 4, 1) == 0);
    CHECK(residual_kuo(g, 1, 3, 4, 7, 2) == 0);
    CHECK_THROWS(residual_kuo(g, 1, 2, 3, 4, 2));  // wrong color pattern
    CHECK_THROWS(residual_kuo(g, 1, 2, 3, 4, 3));  // no such case
  }
  SUBCASE("kenyon on the 4x4 grid and on a non-bipartite patch") {
    PlaneGraph g = grid_graph(4, 4);
    CHECK(residual_kenyon(g, 1, 4, 16, 13) == 0);
    PlaneGraph t = triangular_patch(3, 4);
    REQUIRE_FALSE(bipartition(t).has_value());
    // outer corners in cyclic order
    CHECK(residual_kenyon(t, 1, 4, 12, 9) == 0);
  }
  SUBCASE("alternating subset sums, k = 2 and 3") {
    PlaneGraph g = grid_graph(4, 4);
    // outer cycle order: 1,2,3,4,8,12,16,15,14,13,9,5
    CHECK(residual_yyz(g, {1, 3, 8}, {2, 4, 12}, 1) == 0);
    CHECK(residual_yyz(g, {1, 3, 8}, {2, 4, 12}, 2) == 0);
    CHECK(residual_yyz(g, {1, 16}, {4, 13}, 1) == 0);
    PlaneGraph t = triangular_patch(3, 4);
    CHECK(residual_yyz(t, {1, 12}, {4, 9}, 2) == 0);
  }
  SUBCASE("k = 2 subset sums rearrange to the four-vertex relation") {
    PlaneGraph g = grid_graph(2, 4);
    // both vanish on the same instance
    CHECK(residual_kenyon(g, 1, 2, 3, 4) == 0);
    CHECK(residual_yyz(g, {1, 3}, {2, 4}, 1) == 0);
  }
  SUBCASE("hypothesis violations throw") {
    PlaneGraph g = grid_graph(4, 4);
    CHECK_THROWS(residual_yyz(g, {1, 2, 3, 4, 5, 6, 8},
                              {9, 10, 11, 12, 13, 14, 15}, 1));  // k > 6
    CHECK_THROWS(residual_kenyon(g, 1, 2, 3, 3));  // repeated vertex
    CHECK_THROWS(residual_propp(triangular_patch(2, 2), 1, 2, 4, 3));
  }
}

TEST_CASE("edge condensation residual") {
  SUBCASE("unit 4x4 grid, two opposite boundary edges, both j") {
    PlaneGraph g = grid_graph(4, 4);
    const int e_top = *g.edge_between(1, 2);
    const int e_bottom = *g.edge_between(15, 16);
    for (int j : {1, 2}) {
      CHECK(residual_edge_condensation(g, {e_top, e_bottom}, j) == 0);
    }
  }
  SUBCASE("weighted grids with k = 3, every j") {
    for (int cols : {4, 5, 6}) {
      VerifyConfig cfg;
      cfg.id = Identity::edge_condensation;
      cfg.k = 3;
      cfg.seed = 1234 + static_cast<unsigned>(cols);
      cfg.trials = 3;
      for (std::int64_t t = 0; t < cfg.trials; ++t) {
        Instance inst = make_instance(cfg, t);
        for (int j = 1; j <= 3; ++j) {
          CHECK(residual_edge_condensation(*inst.graph, inst.edge_ids, j) == 0);
        }
      }
    }
  }
  SUBCASE("all-zero masked weights still verify") {
    PlaneGraph g = grid_graph(2, 4);
    std::vector<GraphEdge> edges = g.edges();
    const int e1 = *g.edge_between(1, 2);
    const int e2 = *g.edge_between(3, 4);
    edges[static_cast<size_t>(e1) - 1].w = rat(0);
    edges[static_cast<size_t>(e2) - 1].w = rat(0);
    std::vector<std::vector<int>> rot;
    for (int v = 1; v <= g.vertex_count(); ++v) rot.push_back(g.rotation(v));
    PlaneGraph z(g.vertex_count(), edges, rot);
    CHECK(residual_edge_condensation(z, {e1, e2}, 1) == 0);
  }
  SUBCASE("dependent edges are rejected") {
    PlaneGraph g = grid_graph(2, 4);
    CHECK_THROWS(residual_edge_condensation(
        g, {*g.edge_between(1, 2), *g.edge_between(2, 3)}, 1));
  }
}

TEST_CASE("minor products never disagree in sign") {
  CHECK(same_sign_check(grid_graph(4, 4), 1, 4, 16, 13));
  CHECK(same_sign_check(grid_graph(2, 4), 1, 2, 3, 4));
  CHECK(same_sign_check(cycle_graph(6), 1, 2, 4, 5));
  SUBCASE("degenerate deletions give zero products, still compatible") {
    CHECK(same_sign_check(path_graph(6), 1, 2, 3, 4));
  }
  SUBCASE("random weighted instances") {
    Rng rng(111);
    int checked = 0;
    for (int t = 0; t < 40 && checked < 20; ++t) {
      PlaneGraph g = random_plane_graph(rng, 12);
      FaceSet f = trace_faces(g);
      const auto& walk = f.walks[static_cast<size_t>(f.outer) - 1];
      std::vector<int> uniq;
      std::set<int> seen;
      for (const Dart& d : walk) {
        if (seen.insert(d.tail).second) uniq.push_back(d.tail);
      }
      if (uniq.size() < 4) continue;
      CHECK(same_sign_check(g, uniq[0], uniq[1], uniq[2], uniq[3]));
      ++checked;
    }
    CHECK(checked >= 10);
  }
}

