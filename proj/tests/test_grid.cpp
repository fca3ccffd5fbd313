#include <doctest.h>

#include <set>

#include "lnet/grid.hpp"

using namespace lnet;

TEST_CASE("grid indexing and colors") {
  QuadGrid g(5, 4);
  CHECK(g.num_vertices() == 20);
  CHECK(g.num_faces() == 12);
  CHECK(g.index(VertexId{3, 2}) == 13);
  CHECK(g.vertex(13) == VertexId{3, 2});
  CHECK(g.index(FaceId{1, 2}) == 9);
  CHECK(color_of({0, 0}) == Color::black);
  CHECK(color_of({1, 0}) == Color::white);
  CHECK_THROWS_AS(g.index(VertexId{5, 0}), Error);
  CHECK_THROWS_AS(g.index(FaceId{4, 0}), Error);
  CHECK_THROWS_AS(QuadGrid(1, 3), Error);
}

TEST_CASE("stars, faces and boundary") {
  QuadGrid g(4, 4);
  CHECK(g.neighbors({0, 0}).size() == 2);
  CHECK(g.neighbors({1, 1}).size() == 4);
  CHECK(g.incident_faces({0, 0}).size() == 1);
  CHECK(g.incident_faces({1, 2}).size() == 4);
  CHECK_THROWS_AS(g.star({0, 1}), Error);
  const auto fb = g.face_vertices_of({1, 0}, Color::black);
  CHECK(fb[0] == VertexId{1, 1});
  CHECK(fb[1] == VertexId{2, 0});
  const auto fw = g.face_vertices_of({1, 0}, Color::white);
  CHECK(fw[0] == VertexId{1, 0});
  CHECK(fw[1] == VertexId{2, 1});
  CHECK(g.depth({1, 2}) == 1);
  const Edge e = g.shared_edge({0, 0}, {1, 0});
  CHECK(e.a == VertexId{1, 0});
  CHECK(e.b == VertexId{1, 1});
}

TEST_CASE("dual spanning tree covers every face once") {
  QuadGrid g(6, 5);
  const DualTree t = dual_spanning_tree(g, {2, 1});
  CHECK(t.order.size() == g.num_faces());
  std::set<std::size_t> seen;
  for (FaceId f : t.order) seen.insert(g.index(f));
  CHECK(seen.size() == g.num_faces());
  // dual graph edges = tree edges + extra edges
  const std::size_t dual_edges = std::size_t(g.faces_x() - 1) * g.faces_y() + std::size_t(g.faces_y() - 1) * g.faces_x();
  CHECK(t.extra_edges.size() + g.num_faces() - 1 == dual_edges);
}

TEST_CASE("cropping keeps colors") {
  QuadGrid g(7, 6);
  VertexField<int> f(g);
  for (VertexId v : g.vertices()) f[v] = int(color_of(v));
  const auto c = crop(f, 1);
  CHECK(c.grid().width() == 5);
  for (VertexId v : c.grid().vertices()) CHECK(c[v] == int(color_of(v)));
}
