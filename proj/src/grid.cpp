#include "lnet/grid.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace lnet {

QuadGrid::QuadGrid(int width, int height) : width_(width), height_(height) {
  if (width < 2 || height < 2) {
    throw Error(ErrorKind::InvalidGrid, "grid needs at least 2x2 vertices, got " + std::to_string(width) +
                                            "x" + std::to_string(height));
  }
}

std::size_t QuadGrid::index(VertexId v) const {
  if (!contains(v)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") outside patch");
  }
  return std::size_t(v.j) * width_ + v.i;
}

std::size_t QuadGrid::index(FaceId f) const {
  if (!contains(f)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "face (" + std::to_string(f.i) + "," + std::to_string(f.j) + ") outside patch");
  }
  return std::size_t(f.j) * faces_x() + f.i;
}

std::vector<VertexId> QuadGrid::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId w : {VertexId{v.i + 1, v.j}, VertexId{v.i, v.j + 1}, VertexId{v.i - 1, v.j},
                     VertexId{v.i, v.j - 1}}) {
    if (contains(w)) out.push_back(w);
  }
  return out;
}

std::array<VertexId, 4> QuadGrid::star(VertexId v) const {
  if (!is_interior(v)) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex star requested on the boundary");
  }
  return {VertexId{v.i + 1, v.j}, VertexId{v.i, v.j + 1}, VertexId{v.i - 1, v.j}, VertexId{v.i, v.j - 1}};
}

std::vector<FaceId> QuadGrid::incident_faces(VertexId v) const {
  std::vector<FaceId> out;
  for (FaceId f : {FaceId{v.i, v.j}, FaceId{v.i - 1, v.j}, FaceId{v.i - 1, v.j - 1}, FaceId{v.i, v.j - 1}}) {
    if (contains(f)) out.push_back(f);
  }
  return out;
}

std::array<VertexId, 4> QuadGrid::face_vertices(FaceId f) const {
  return {VertexId{f.i, f.j}, VertexId{f.i + 1, f.j}, VertexId{f.i + 1, f.j + 1}, VertexId{f.i, f.j + 1}};
}

std::array<VertexId, 2> QuadGrid::face_vertices_of(FaceId f, Color c) const {
  const VertexId ll{f.i, f.j};
  if (color_of(ll) == c) return {ll, VertexId{f.i + 1, f.j + 1}};
  return {VertexId{f.i, f.j + 1}, VertexId{f.i + 1, f.j}};
}

int QuadGrid::depth(VertexId v) const {
  return std::min({v.i, v.j, width_ - 1 - v.i, height_ - 1 - v.j});
}

std::vector<FaceId> QuadGrid::adjacent_faces(FaceId f) const {
  std::vector<FaceId> out;
  for (FaceId g : {FaceId{f.i + 1, f.j}, FaceId{f.i, f.j + 1}, FaceId{f.i - 1, f.j}, FaceId{f.i, f.j - 1}}) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

Edge QuadGrid::shared_edge(FaceId f, FaceId g) const {
  const int di = g.i - f.i;
  const int dj = g.j - f.j;
  if (di == 1 && dj == 0) return {{f.i + 1, f.j}, {f.i + 1, f.j + 1}};
  if (di == -1 && dj == 0) return {{f.i, f.j}, {f.i, f.j + 1}};
  if (di == 0 && dj == 1) return {{f.i, f.j + 1}, {f.i + 1, f.j + 1}};
  if (di == 0 && dj == -1) return {{f.i, f.j}, {f.i + 1, f.j}};
  throw Error(ErrorKind::IndexOutOfRange, "faces are not adjacent");
}

std::vector<VertexId> QuadGrid::vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_vertices());
  for (int j = 0; j < height_; ++j)
    for (int i = 0; i < width_; ++i) out.push_back({i, j});
  return out;
}

std::vector<FaceId> QuadGrid::faces() const {
  std::vector<FaceId> out;
  out.reserve(num_faces());
  for (int j = 0; j < faces_y(); ++j)
    for (int i = 0; i < faces_x(); ++i) out.push_back({i, j});
  return out;
}

QuadGrid cropped(const QuadGrid& g, int ring) {
  return QuadGrid(g.width() - 2 * ring, g.height() - 2 * ring);
}

DualTree dual_spanning_tree(const QuadGrid& g, FaceId f0) {
  DualTree t;
  t.parent.assign(g.num_faces(), std::nullopt);
  std::vector<char> seen(g.num_faces(), 0);
  std::deque<FaceId> queue{f0};
  seen[g.index(f0)] = 1;
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    t.order.push_back(f);
    for (FaceId h : g.adjacent_faces(f)) {
      if (!seen[g.index(h)]) {
        seen[g.index(h)] = 1;
        t.parent[g.index(h)] = f;
        queue.push_back(h);
      }
    }
  }
  for (FaceId f : g.faces()) {
    for (FaceId h : {FaceId{f.i + 1, f.j}, FaceId{f.i, f.j + 1}}) {
      if (!g.contains(h)) continue;
      const auto& ph = t.parent[g.index(h)];
      const auto& pf = t.parent[g.index(f)];
      const bool tree = (ph && *ph == f) || (pf && *pf == h);
      if (!tree) t.extra_edges.emplace_back(f, h);
    }
  }
  return t;
}

}  // namespace lnet
