#pragma once

// Rectangular patches of Z^2 with the black/white bipartition ((i+j) even is black),
// faces indexed by their lower-left vertex, and dense fields over vertices/faces.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lnet/errors.hpp"

namespace lnet {

enum class Color { black, white };

struct VertexId {
  int i = 0;
  int j = 0;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

struct FaceId {
  int i = 0;
  int j = 0;
  friend bool operator==(const FaceId&, const FaceId&) = default;
};

struct Edge {
  VertexId a;
  VertexId b;
};

inline Color color_of(VertexId v) { return ((v.i + v.j) % 2 + 2) % 2 == 0 ? Color::black : Color::white; }

class QuadGrid {
 public:
  QuadGrid() = default;
  // width x height vertices, both at least 2.
  QuadGrid(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  int faces_x() const { return width_ - 1; }
  int faces_y() const { return height_ - 1; }
  std::size_t num_vertices() const { return std::size_t(width_) * height_; }
  std::size_t num_faces() const { return std::size_t(faces_x()) * faces_y(); }

  bool contains(VertexId v) const { return v.i >= 0 && v.j >= 0 && v.i < width_ && v.j < height_; }
  bool contains(FaceId f) const { return f.i >= 0 && f.j >= 0 && f.i < faces_x() && f.j < faces_y(); }

  std::size_t index(VertexId v) const;  // row-major, throws IndexOutOfRange
  std::size_t index(FaceId f) const;
  VertexId vertex(std::size_t k) const { return {int(k % width_), int(k / width_)}; }
  FaceId face(std::size_t k) const { return {int(k % faces_x()), int(k / faces_x())}; }

  // Existing neighbours in counter-clockwise order starting east.
  std::vector<VertexId> neighbors(VertexId v) const;
  // Full star E, N, W, S; only for interior vertices.
  std::array<VertexId, 4> star(VertexId v) const;
  // Existing incident faces in counter-clockwise order NE, NW, SW, SE.
  std::vector<FaceId> incident_faces(VertexId v) const;
  // (i,j), (i+1,j), (i+1,j+1), (i,j+1)
  std::array<VertexId, 4> face_vertices(FaceId f) const;
  // The two vertices of f with the given color, lower one (in column) first.
  std::array<VertexId, 2> face_vertices_of(FaceId f, Color c) const;

  bool is_interior(VertexId v) const {
    return v.i > 0 && v.j > 0 && v.i < width_ - 1 && v.j < height_ - 1;
  }
  // Distance to the patch boundary in the max-norm sense (0 on the boundary).
  int depth(VertexId v) const;

  // Faces adjacent across an edge, in order E, N, W, S.
  std::vector<FaceId> adjacent_faces(FaceId f) const;
  // Primal edge shared by two adjacent faces.
  Edge shared_edge(FaceId f, FaceId g) const;

  std::vector<VertexId> vertices() const;
  std::vector<FaceId> faces() const;

 private:
  int width_ = 0;
  int height_ = 0;
};

// Breadth-first spanning tree of the dual graph rooted at f0 (neighbours visited
// in E, N, W, S order).  Non-tree dual edges are listed for consistency checks.
struct DualTree {
  std::vector<FaceId> order;                           // BFS order, order[0] = f0
  std::vector<std::optional<FaceId>> parent;           // indexed by face index
  std::vector<std::pair<FaceId, FaceId>> extra_edges;  // dual edges not in the tree
};
DualTree dual_spanning_tree(const QuadGrid& g, FaceId f0);

template <class T>
class VertexField {
 public:
  VertexField() = default;
  explicit VertexField(const QuadGrid& g, const T& fill = T()) : grid_(g), data_(g.num_vertices(), fill) {}

  const QuadGrid& grid() const { return grid_; }
  T& operator[](VertexId v) { return data_[grid_.index(v)]; }
  const T& operator[](VertexId v) const { return data_[grid_.index(v)]; }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  QuadGrid grid_;
  std::vector<T> data_;
};

template <class T>
class FaceField {
 public:
  FaceField() = default;
  explicit FaceField(const QuadGrid& g, const T& fill = T()) : grid_(g), data_(g.num_faces(), fill) {}

  const QuadGrid& grid() const { return grid_; }
  T& operator[](FaceId f) { return data_[grid_.index(f)]; }
  const T& operator[](FaceId f) const { return data_[grid_.index(f)]; }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  QuadGrid grid_;
  std::vector<T> data_;
};

// Remove `ring` rings of vertices on every side.  Shifting by (ring, ring) keeps
// vertex colors.
QuadGrid cropped(const QuadGrid& g, int ring);

template <class T>
VertexField<T> crop(const VertexField<T>& f, int ring) {
  const QuadGrid g = cropped(f.grid(), ring);
  VertexField<T> out(g);
  for (VertexId v : g.vertices()) out[v] = f[{v.i + ring, v.j + ring}];
  return out;
}

template <class T>
FaceField<T> crop(const FaceField<T>& f, int ring) {
  const QuadGrid g = cropped(f.grid(), ring);
  FaceField<T> out(g);
  for (FaceId q : g.faces()) out[q] = f[{q.i + ring, q.j + ring}];
  return out;
}

}  // namespace lnet
