#include <doctest.h>

#include <set>
#include <sstream>

#include "pfq/instances.hpp"
#include "pfq/plane_graph.hpp"

using namespace pfq;

TEST_CASE("construction validates the embedding data") {
  CHECK_THROWS(PlaneGraph(2, {{1, 1, rat(1)}}, {{1}, {}}));        // loop
  CHECK_THROWS(PlaneGraph(2, {{1, 2, rat(1)}, {2, 1, rat(1)}},
                          {{1, 2}, {1, 2}}));                      // multi-edge
  CHECK_THROWS(PlaneGraph(2, {{1, 2, rat(1)}}, {{}, {1}}));        // bad rotation
  CHECK_THROWS(PlaneGraph(2, {{1, 3, rat(1)}}, {{1}, {}}));        // endpoint
}

TEST_CASE("face tracing") {
  SUBCASE("a 4-cycle has two 4-walks") {
    FaceSet f = trace_faces(cycle_graph(4));
    CHECK(f.count() == 2);
    CHECK(f.walks[0].size() == 4);
    CHECK(f.walks[1].size() == 4);
  }
  SUBCASE("2x3 grid has three faces") {
    FaceSet f = trace_faces(grid_graph(2, 3));
    CHECK(f.count() == 3);
    // outer = longest walk
    CHECK(f.walks[static_cast<size_t>(f.outer) - 1].size() == 6);
  }
  SUBCASE("a single edge bounds one face, walked from both sides") {
    FaceSet f = trace_faces(path_graph(2));
    CHECK(f.count() == 1);
    CHECK(f.walks[0].size() == 2);
  }
  SUBCASE("euler count holds for every generator") {
    for (const PlaneGraph& g :
         {grid_graph(4, 5), aztec_diamond(3), cycle_graph(7), path_graph(6),
          triangular_patch(3, 4)}) {
      FaceSet f = trace_faces(g);
      CHECK(g.vertex_count() - g.edge_count() + f.count() == 2);
    }
  }
  SUBCASE("disconnected input is rejected") {
    PlaneGraph g(4, {{1, 2, rat(1)}, {3, 4, rat(1)}}, {{1}, {1}, {2}, {2}});
    CHECK_THROWS(trace_faces(g));
  }
}

TEST_CASE("connectivity and bipartition") {
  CHECK(is_connected(grid_graph(3, 3)));
  PlaneGraph two(4, {{1, 2, rat(1)}, {3, 4, rat(1)}}, {{1}, {1}, {2}, {2}});
  CHECK_FALSE(is_connected(two));
  CHECK(components(two).size() == 2);

  auto col = bipartition(grid_graph(2, 3));
  REQUIRE(col.has_value());
  CHECK((*col)[0] != (*col)[1]);
  CHECK_FALSE(bipartition(triangular_patch(2, 2)).has_value());
}

TEST_CASE("subgraph operations keep the embedding consistent") {
  PlaneGraph g = grid_graph(3, 4);
  SUBCASE("edge removal keeps labels") {
    PlaneGraph h = remove_edges(g, {1, 5});
    CHECK(h.vertex_count() == 12);
    CHECK(h.edge_count() == g.edge_count() - 2);
    if (is_connected(h)) {
      FaceSet f = trace_faces(h);
      CHECK(h.vertex_count() - h.edge_count() + f.count() == 2);
    }
  }
  SUBCASE("vertex removal relabels in order") {
    PlaneGraph h = remove_vertices(g, {1});
    CHECK(h.vertex_count() == 11);
    // old vertex 2 is new vertex 1
    CHECK(h.rotation(1).size() == g.rotation(2).size() - 1);
  }
  SUBCASE("induced subgraph") {
    PlaneGraph h = induced_subgraph(g, {1, 2, 5, 6});
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 4);  // a unit square
  }
}

TEST_CASE("generators produce the expected shapes") {
  CHECK(grid_graph(4, 4).vertex_count() == 16);
  CHECK(grid_graph(4, 4).edge_count() == 24);
  CHECK(aztec_diamond(1).vertex_count() == 4);
  CHECK(aztec_diamond(2).vertex_count() == 12);
  CHECK(aztec_diamond(3).vertex_count() == 24);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(triangular_patch(3, 3).edge_count() == 4 + 4 + 4 + 4);
}

TEST_CASE("graph text round trip") {
  PlaneGraph g = grid_graph(2, 3).with_outer_face(3);
  std::ostringstream os;
  write_plane_graph(os, g);
  std::istringstream is(os.str());
  PlaneGraph back = read_plane_graph(is);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edge_count() == g.edge_count());
  CHECK(back.declared_outer_face() == 3);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    CHECK(back.rotation(v) == g.rotation(v));
  }
  for (int e = 1; e <= g.edge_count(); ++e) {
    CHECK(back.edge(e).u == g.edge(e).u);
    CHECK(back.edge(e).v == g.edge(e).v);
    CHECK(back.edge(e).w == g.edge(e).w);
  }
}

TEST_CASE("random plane graphs are connected embeddings with nonneg weights") {
  Rng rng(55);
  for (int t = 0; t < 40; ++t) {
    PlaneGraph g = random_plane_graph(rng, 14);
    CHECK(g.vertex_count() <= 14);
    CHECK(is_connected(g));
    FaceSet f = trace_faces(g);
    CHECK(g.vertex_count() - g.edge_count() + f.count() == 2);
    for (const auto& e : g.edges()) CHECK(e.w >= 0);
  }
}
