#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "pfq/matrix.hpp"

namespace pfq {

struct GraphEdge {
  int u = 0;
  int v = 0;
  Rational w;
};

// One side of an edge: the edge traversed tail -> head.
struct Dart {
  int edge = 0;  // 1-based edge id
  int tail = 0;  // vertex the dart leaves
  bool operator==(const Dart&) const = default;
};

// Weighted simple graph with a combinatorial embedding: for every vertex the
// clockwise cyclic order of its incident edges, plus an optional designated
// outer face. Vertices and edge ids are 1-based. Instances are immutable;
// the subgraph operations below return new graphs.
class PlaneGraph {
 public:
  static constexpr int kAutoOuter = 0;

  PlaneGraph(int n, std::vector<GraphEdge> edges,
             std::vector<std::vector<int>> rotation,
             int outer_face = kAutoOuter);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const GraphEdge& edge(int e) const;                 // 1-based
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<int>& rotation(int v) const;      // 1-based vertex
  int declared_outer_face() const { return outer_face_; }

  int opposite(int e, int v) const;
  int head(const Dart& d) const { return opposite(d.edge, d.tail); }
  std::optional<int> edge_between(int u, int v) const;

  PlaneGraph with_outer_face(int face_id) const;

 private:
  int n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> rotation_;
  int outer_face_ = kAutoOuter;
};

// Faces of the embedding, traced with the rule next(u->v) = clockwise
// successor of (v->u) around v. Under that rule bounded faces come out
// counterclockwise and the outer face clockwise, so an edge lies clockwise
// on a face exactly when its orientation opposes the face walk.
// Face ids are 1-based in discovery order (deterministic).
struct FaceSet {
  std::vector<std::vector<Dart>> walks;
  int outer = 0;  // designated outer face id

  int face_of(const Dart& d) const;
  int count() const { return static_cast<int>(walks.size()); }
};

// Throws on disconnected input; checks Euler's formula V - E + F = 2.
// When the graph declares no outer face, the longest walk (lowest id on
// ties) is designated.
FaceSet trace_faces(const PlaneGraph& g);

// Per-edge direction: forward means the stored (u, v) order is tail -> head.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> forward) : forward_(std::move(forward)) {}
  bool forward(int e) const { return forward_.at(static_cast<size_t>(e) - 1); }
  int arc_tail(const PlaneGraph& g, int e) const;
  int arc_head(const PlaneGraph& g, int e) const;
  Orientation reversed() const;
  int size() const { return static_cast<int>(forward_.size()); }

 private:
  std::vector<bool> forward_;
};

// --- basic graph utilities ---

bool is_connected(const PlaneGraph& g);
std::vector<std::vector<int>> components(const PlaneGraph& g);
// 2-coloring (color of vertex 1 is 0) or nullopt when an odd cycle exists.
std::optional<std::vector<int>> bipartition(const PlaneGraph& g);

// Subgraphs keep the embedding by restriction. remove_vertices relabels the
// survivors 1..n' preserving order; remove_edges keeps vertex labels.
PlaneGraph remove_edges(const PlaneGraph& g, const std::vector<int>& edge_ids);
PlaneGraph remove_vertices(const PlaneGraph& g, const std::vector<int>& verts);
PlaneGraph induced_subgraph(const PlaneGraph& g, const std::vector<int>& verts);

// --- generators (all emit valid clockwise rotations) ---

PlaneGraph grid_graph(int rows, int cols);
PlaneGraph aztec_diamond(int order);
PlaneGraph cycle_graph(int n);
PlaneGraph path_graph(int n);
// Grid with one diagonal per cell; contains triangles, so non-bipartite.
PlaneGraph triangular_patch(int rows, int cols);

// --- text format ---
// "v n", then "e u v w" per edge, then "r v e1 e2 ... ed" clockwise rotation
// lines (1-based edge indices in e-line order), then optional "outer f".
PlaneGraph read_plane_graph(std::istream& in);
void write_plane_graph(std::ostream& out, const PlaneGraph& g);

}  // namespace pfq
